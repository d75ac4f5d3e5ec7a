#include "doctest.h"

#include <fstream>
#include <sstream>

#include "defq/cli.hpp"
#include "defq/deform.hpp"
#include "defq/document.hpp"

using namespace defq;

namespace {

std::string doc_path(const char *name)
{
	return std::string(DEFQ_SOURCE_DIR) + "/documents/" + name;
}

int run(const std::vector<std::string> &argv, std::string *text_out = nullptr,
        std::string *err_out = nullptr)
{
	std::ostringstream out, err;
	int code = run_command(argv, out, err);
	if (text_out)
		*text_out = out.str();
	if (err_out)
		*err_out = err.str();
	return code;
}

} // namespace

TEST_CASE("document parsing")
{
	Document doc = [&] {
		std::ifstream f(doc_path("moyal.doc"));
		std::ostringstream os;
		os << f.rdbuf();
		return parse_document(os.str());
	}();
	CHECK(doc.ctx.vars == 2);
	CHECK(doc.ctx.trunc == 3);
	CHECK(doc.kind == DeformKind::Associative);
	CHECK(doc.find("omega") != nullptr);
	CHECK(doc.all_with_prefix("gamma").size() == 2);
	CHECK(doc.param_poly("s") == Poly::variable(2, 1));

	CHECK_THROWS_AS(parse_document("let x = 1\n"), ParseError); // header missing
	CHECK_THROWS_AS(parse_document("grammar_version 2\nkind assoc\nd 1\nN 1\n"), ParseError);
	CHECK_THROWS_AS(
	    parse_document("grammar_version 1\nkind assoc\nd 1\nN 1\nlet a = 1\nlet a = 2\n"),
	    ParseError);
	CHECK_THROWS_AS(parse_document("grammar_version 1\nkind assoc\nd 1\nN 1\nbogus 3\n"),
	                ParseError);
}

TEST_CASE("check-mc on the shipped documents")
{
	CHECK(run({"check-mc", doc_path("moyal.doc")}) == 0);
	CHECK(run({"check-mc", doc_path("poisson.doc")}) == 0);

	std::string text;
	CHECK(run({"check-mc", doc_path("bad-assoc.doc")}, &text) == 1);
	CHECK(text.find("[FAIL] mc-defect") != std::string::npos);
	CHECK(run({"check-mc", doc_path("bad-poisson.doc")}) == 1);
}

TEST_CASE("usage errors exit 2")
{
	std::string err;
	CHECK(run({"check-mc", doc_path("does-not-exist.doc")}, nullptr, &err) == 2);
	CHECK(!err.empty());
	CHECK(run({"unknown-subcommand"}, nullptr, &err) == 2);
	CHECK(run({"check-mc"}, nullptr, &err) == 2); // document argument missing
}

TEST_CASE("value commands report their results")
{
	std::string text;
	std::string doc = "grammar_version 1\nkind assoc\nd 2\nN 2\n"
	                  "let omega = h*(D[1|2] - D[2|1])\n"
	                  "let a = x1\nlet b = x2\n"
	                  "let gamma = h*(x1*D[1])\n"
	                  "let gamma1 = h*(x1*D[1])\nlet gamma2 = h*(D[2])\n";
	std::ofstream(std::string("/tmp/defq-star.doc")) << doc;
	CHECK(run({"star-mul", "/tmp/defq-star.doc"}, &text) == 0);
	CHECK(text.find("a * b = x1*x2 + h*(1)") != std::string::npos);

	CHECK(run({"gauge-apply", "/tmp/defq-star.doc"}, &text) == 0);
	CHECK(text.find("omega' =") != std::string::npos);

	// at N = 1 the order-1 skew cochain is genuinely MC, so the image is
	// checked and reported
	std::string doc1 = "grammar_version 1\nkind assoc\nd 2\nN 1\n"
	                   "let omega = h*(D[1|2] - D[2|1])\n"
	                   "let gamma = h*(x1*D[1])\n";
	std::ofstream("/tmp/defq-star1.doc") << doc1;
	CHECK(run({"gauge-apply", "/tmp/defq-star1.doc"}, &text) == 0);
	CHECK(text.find("[PASS] image-is-mc") != std::string::npos);

	CHECK(run({"bch", "/tmp/defq-star.doc"}, &text) == 0);
	CHECK(text.find("bch(gamma1, gamma2)") != std::string::npos);

	// star-inverse: x1 is not a unit over C, and the witness names it
	std::string docinv = "grammar_version 1\nkind assoc\nd 2\nN 2\n"
	                     "let omega = h*(D[1|2] - D[2|1])\nlet a = x1\n";
	std::ofstream("/tmp/defq-inv.doc") << docinv;
	CHECK(run({"star-inverse", "/tmp/defq-inv.doc"}, &text) == 1);
	CHECK(text.find("witness: x1") != std::string::npos);

	// after localizing at s = x1 it becomes invertible
	std::ofstream("/tmp/defq-inv2.doc") << docinv << "param s = x1\n";
	CHECK(run({"star-inverse", "/tmp/defq-inv2.doc"}, &text) == 0);

	// poisson bracket values
	std::string docp = "grammar_version 1\nkind poisson\nd 2\nN 2\n"
	                   "let omega = h*(dx1^dx2)\nlet a = x1\nlet b = x2\nlet c = x1*x2\n";
	std::ofstream("/tmp/defq-poisson.doc") << docp;
	CHECK(run({"poisson", "/tmp/defq-poisson.doc"}, &text) == 0);
	CHECK(text.find("{a, b} = h*(1/2)") != std::string::npos);
}

TEST_CASE("localize and deligne-verify subcommands")
{
	CHECK(run({"localize", doc_path("moyal.doc")}) == 0);
	CHECK(run({"localize", doc_path("poisson.doc")}) == 0);
	CHECK(run({"deligne-verify", doc_path("moyal.doc")}) == 0);
	CHECK(run({"deligne-verify", doc_path("poisson.doc")}) == 0);
}

TEST_CASE("recognize-op subcommand")
{
	std::string doc = "grammar_version 1\nkind assoc\nd 2\nN 1\n"
	                  "let omega = 0\n"
	                  "let phi = D[1] + x2*D[2]\n";
	std::ofstream("/tmp/defq-rec.doc") << doc;
	std::string text;
	CHECK(run({"recognize-op", "/tmp/defq-rec.doc", "--order", "2", "--coeff-degree", "2"},
	          &text) == 0);
	CHECK(text.find("[PASS] roundtrip") != std::string::npos);

	CHECK(run({"recognize-op", "/tmp/defq-rec.doc", "--builtin", "eval-at-zero"}, &text) == 1);
	CHECK(text.find("[FAIL]") != std::string::npos);
	CHECK(text.find("witness:") != std::string::npos);
}

TEST_CASE("moyal generator output re-verifies")
{
	std::string text;
	CHECK(run({"moyal", "--d", "2", "--pi", "0 1; -1 0", "--N", "2"}, &text) == 0);
	Document doc = parse_document(text);
	CHECK(doc.ctx.vars == 2);
	DPolyDgla dp{doc.ctx};
	CHECK(mc_defect(dp, doc.require("omega").op()).is_zero());

	// rational entries are accepted
	CHECK(run({"moyal", "--d", "2", "--pi", "0 1/2; -1/2 0", "--N", "2"}, &text) == 0);
	CHECK(parse_document(text).find("omega") != nullptr);
}

TEST_CASE("machine reports: determinism and witness round-trip")
{
	std::string t1, t2;
	CHECK(run({"geo-verify", doc_path("bad-assoc.doc"), "--json", "/tmp/defq-r1.json",
	           "--seed", "7", "--grid-degree", "2", "--samples", "2"},
	          &t1) == 1);
	CHECK(run({"geo-verify", doc_path("bad-assoc.doc"), "--json", "/tmp/defq-r2.json",
	           "--seed", "7", "--grid-degree", "2", "--samples", "2"},
	          &t2) == 1);
	auto slurp = [](const char *p) {
		std::ifstream f(p);
		std::ostringstream os;
		os << f.rdbuf();
		return os.str();
	};
	std::string j1 = slurp("/tmp/defq-r1.json"), j2 = slurp("/tmp/defq-r2.json");
	CHECK(j1 == j2); // byte-identical for identical document + seed
	CHECK(j1.find("\"schema_version\": 1") != std::string::npos);
	CHECK(t1 == t2);

	// the printed MC witness re-parses in the document context and
	// re-triggers the same failure
	size_t pos = t1.find("witness: ");
	REQUIRE(pos != std::string::npos);
	std::string wit = t1.substr(pos + 9, t1.find('\n', pos) - pos - 9);
	Context ctx{2, 2};
	Value v = parse_expr(wit, ctx);
	CHECK(v.kind() == ValueKind::Operator);
	CHECK(!v.is_zero());
	// the witness is exactly the nonzero MC defect of the document's omega
	std::ifstream f(doc_path("bad-assoc.doc"));
	std::ostringstream os;
	os << f.rdbuf();
	Document doc = parse_document(os.str());
	DPolyDgla dp{ctx};
	CHECK(v.op() == mc_defect(dp, doc.require("omega").op()));
}

TEST_CASE("report emission shapes")
{
	// empty report: header-only text, no check records
	Report empty;
	empty.command = "noop";
	empty.seed = 3;
	std::string text = emit_text(empty);
	CHECK(text.find("== noop (seed 3) ==") == 0);
	CHECK(text.find("summary: 0/0 checks passed") != std::string::npos);
	CHECK(emit_machine(empty).find("\"checks\": []") != std::string::npos);

	// single passing record
	Report one;
	one.command = "noop";
	one.add("only-check", true);
	CHECK(emit_text(one).find("[PASS] only-check") != std::string::npos);
	CHECK(emit_text(one).find("summary: 1/1") != std::string::npos);

	// failing record carries its witness into both formats
	Report fail;
	fail.command = "noop";
	fail.add("broken", false, "x1 + x2", "detail");
	CHECK(emit_text(fail).find("witness: x1 + x2") != std::string::npos);
	CHECK(emit_machine(fail).find("\"witness\": \"x1 + x2\"") != std::string::npos);
}
