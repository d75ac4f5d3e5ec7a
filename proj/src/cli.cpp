#include "defq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "defq/deform.hpp"
#include "defq/document.hpp"
#include "defq/optable.hpp"

namespace defq {

namespace {

std::string slurp(const std::string &path, std::istream &stdin_stream)
{
	if (path == "-")
	{
		std::ostringstream os;
		os << stdin_stream.rdbuf();
		return os.str();
	}
	std::ifstream f(path);
	if (!f)
		throw PreconditionError("cannot open document '" + path + "'");
	std::ostringstream os;
	os << f.rdbuf();
	return os.str();
}

struct CommonOpts
{
	std::string doc_path;
	std::string json_path;
	uint64_t seed = 1;
	int grid_degree = 3;
	int samples = 8;
	int test_degree = 6;
	bool timings = false;
};

void add_common(CLI::App *cmd, CommonOpts &opts, bool with_doc = true)
{
	if (with_doc)
		cmd->add_option("document", opts.doc_path, "document file, or - for stdin")
		    ->required();
	cmd->add_option("--json", opts.json_path, "write the machine-readable report here");
	cmd->add_option("--seed", opts.seed, "seed for sampled checks");
	cmd->add_option("--grid-degree", opts.grid_degree, "max total degree of grid monomials");
	cmd->add_option("--samples", opts.samples, "random samples per sampled check");
	cmd->add_option("--test-degree", opts.test_degree, "tabulation window for operator tables");
	cmd->add_flag("--timings", opts.timings, "print wall times in the text report");
}

// Typed accessors against the document kind.
Series<PolyDiffOp> op_binding(const Document &doc, const std::string &name, int degree)
{
	Value v = coerce_zero(doc.require(name), ValueKind::Operator, degree, doc.ctx);
	if (v.kind() != ValueKind::Operator || (!v.is_zero() && v.degree() != degree))
		throw PreconditionError("binding '" + name + "' must be an operator series of degree " +
		                        std::to_string(degree));
	return v.op();
}

Series<PolyVec> pv_binding(const Document &doc, const std::string &name, int degree)
{
	Value v = coerce_zero(doc.require(name), ValueKind::Polyvec, degree, doc.ctx);
	if (v.kind() != ValueKind::Polyvec || (!v.is_zero() && v.degree() != degree))
		throw PreconditionError("binding '" + name + "' must be a polyvector series of degree " +
		                        std::to_string(degree));
	return v.polyvec();
}

Series<Poly> scalar_binding(const Document &doc, const std::string &name)
{
	Value v = doc.require(name);
	if (v.kind() != ValueKind::Scalar)
		throw PreconditionError("binding '" + name + "' must be a scalar series");
	return v.scalar();
}

std::vector<Series<PolyDiffOp>> op_bindings_prefix(const Document &doc, const std::string &prefix,
                                                   int degree)
{
	std::vector<Series<PolyDiffOp>> out;
	for (const auto &[n, v] : doc.bindings)
		if (n.rfind(prefix, 0) == 0)
			out.push_back(op_binding(doc, n, degree));
	return out;
}

std::vector<Series<PolyVec>> pv_bindings_prefix(const Document &doc, const std::string &prefix,
                                                int degree)
{
	std::vector<Series<PolyVec>> out;
	for (const auto &[n, v] : doc.bindings)
		if (n.rfind(prefix, 0) == 0)
			out.push_back(pv_binding(doc, n, degree));
	return out;
}

int finish(Report &report, const CommonOpts &opts, std::ostream &out)
{
	report.sort_by_name();
	out << emit_text(report, opts.timings);
	if (!opts.json_path.empty())
	{
		std::ofstream jf(opts.json_path);
		if (!jf)
			throw PreconditionError("cannot write '" + opts.json_path + "'");
		jf << emit_machine(report);
	}
	return report.all_pass() ? 0 : 1;
}

int cmd_check_mc(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	Report report;
	report.command = "check-mc";
	report.seed = opts.seed;
	if (doc.kind == DeformKind::Associative)
	{
		DPolyDgla dp{doc.ctx};
		auto defect = mc_defect(dp, op_binding(doc, "omega", 1));
		report.add("mc-defect", defect.is_zero(), defect.is_zero() ? "" : show_series(defect),
		           defect.is_zero() ? "" : "d(w) + 1/2 [w,w] != 0");
	}
	else
	{
		TPolyDgla tp{doc.ctx};
		auto defect = mc_defect(tp, pv_binding(doc, "omega", 1));
		report.add("mc-defect", defect.is_zero(), defect.is_zero() ? "" : show_series(defect),
		           defect.is_zero() ? "" : "[w,w] != 0");
	}
	return finish(report, opts, out);
}

int cmd_star_mul(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	if (doc.kind != DeformKind::Associative)
		throw PreconditionError("star-mul needs an associative document");
	Report report;
	report.command = "star-mul";
	report.seed = opts.seed;
	auto w = op_binding(doc, "omega", 1);
	auto a = scalar_binding(doc, "a");
	auto b = scalar_binding(doc, "b");
	auto r = star_mul(w, a, b);
	report.add("star-mul", true, "", "a * b = " + show_series(r));
	return finish(report, opts, out);
}

int cmd_poisson(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	if (doc.kind != DeformKind::Poisson)
		throw PreconditionError("poisson needs a poisson document");
	Report report;
	report.command = "poisson";
	report.seed = opts.seed;
	auto w = pv_binding(doc, "omega", 1);
	auto a = scalar_binding(doc, "a");
	auto b = scalar_binding(doc, "b");
	auto r = bracket_of_functions(w, a, b);
	report.add("poisson-bracket", true, "", "{a, b} = " + show_series(r));
	// companion queries: the defects the dictionary cares about
	report.add("antisymmetry", bracket_of_functions(w, b, a) == -r);
	if (const Value *c = doc.find("c"))
	{
		auto cc = c->scalar();
		auto jac = poisson_jacobiator(w, a, b, cc);
		report.add("jacobiator", jac.is_zero(), jac.is_zero() ? "" : show_series(jac),
		           "cyclic {{a,b},c} over the bound triple");
	}
	return finish(report, opts, out);
}

int cmd_gauge_apply(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	Report report;
	report.command = "gauge-apply";
	report.seed = opts.seed;
	if (doc.kind == DeformKind::Associative)
	{
		DPolyDgla dp{doc.ctx};
		auto w = op_binding(doc, "omega", 1);
		auto ga = op_binding(doc, "gamma", 0);
		auto wprime = gauge_apply(dp, ga, w);
		report.add("gauge-apply", true, "", "omega' = " + show_series(wprime));
		if (mc_defect(dp, w).is_zero())
			report.add("image-is-mc", mc_defect(dp, wprime).is_zero());
	}
	else
	{
		TPolyDgla tp{doc.ctx};
		auto w = pv_binding(doc, "omega", 1);
		auto ga = pv_binding(doc, "gamma", 0);
		auto wprime = gauge_apply(tp, ga, w);
		report.add("gauge-apply", true, "", "omega' = " + show_series(wprime));
		if (mc_defect(tp, w).is_zero())
			report.add("image-is-mc", mc_defect(tp, wprime).is_zero());
	}
	return finish(report, opts, out);
}

int cmd_bch(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	Report report;
	report.command = "bch";
	report.seed = opts.seed;
	if (doc.kind == DeformKind::Associative)
	{
		DPolyDgla dp{doc.ctx};
		auto r = bch(dp, op_binding(doc, "gamma1", 0), op_binding(doc, "gamma2", 0));
		report.add("bch", true, "", "bch(gamma1, gamma2) = " + show_series(r));
	}
	else
	{
		TPolyDgla tp{doc.ctx};
		auto r = bch(tp, pv_binding(doc, "gamma1", 0), pv_binding(doc, "gamma2", 0));
		report.add("bch", true, "", "bch(gamma1, gamma2) = " + show_series(r));
	}
	return finish(report, opts, out);
}

int cmd_star_inverse(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	if (doc.kind != DeformKind::Associative)
		throw PreconditionError("star-inverse needs an associative document");
	Report report;
	report.command = "star-inverse";
	report.seed = opts.seed;
	auto w = op_binding(doc, "omega", 1);
	auto a = scalar_binding(doc, "a");
	auto s = doc.param_poly("s");
	if (s)
	{
		auto la = embed_series(a, *s);
		auto r = star_inverse(w, la);
		if (r.ok())
		{
			Series<Poly> one(doc.ctx.trunc, Poly::zero(doc.ctx.vars));
			one.set(0, Poly::one(doc.ctx.vars));
			bool really = star_mul(w, la, *r.inverse) == embed_series(one, *s) &&
			              star_mul(w, *r.inverse, la) == embed_series(one, *s);
			report.add("star-inverse", really, "", "two-sided inverse found over C_s");
		}
		else
			report.add("star-inverse", false, r.needed,
			           "augmentation is not invertible; localize at the witness");
	}
	else
	{
		auto r = star_inverse(w, a);
		if (r.ok())
		{
			Series<Poly> one(doc.ctx.trunc, Poly::zero(doc.ctx.vars));
			one.set(0, Poly::one(doc.ctx.vars));
			bool really =
			    star_mul(w, a, *r.inverse) == one && star_mul(w, *r.inverse, a) == one;
			report.add("star-inverse", really, really ? "" : show_series(a),
			           really ? "a^-1 = " + show_series(*r.inverse) : "inverse check failed");
		}
		else
			report.add("star-inverse", false, r.needed,
			           "augmentation is not invertible; localize at the witness");
	}
	return finish(report, opts, out);
}

int cmd_localize(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	Report report;
	report.command = "localize";
	report.seed = opts.seed;
	auto s = doc.param_poly("s");
	if (!s)
		throw PreconditionError("localize needs 'param s = <polynomial>'");
	auto t = doc.param_poly("t");
	if (doc.kind == DeformKind::Associative)
		localization_checks_assoc(report, doc.ctx, op_binding(doc, "omega", 1), *s, t,
		                          opts.grid_degree);
	else
		localization_checks_poisson(report, doc.ctx, pv_binding(doc, "omega", 1), *s, t,
		                            opts.grid_degree);
	return finish(report, opts, out);
}

int cmd_deligne_verify(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	Report report;
	report.command = "deligne-verify";
	report.seed = opts.seed;
	CrossedBudget budget;
	budget.max_pairs = std::max(budget.max_pairs, opts.samples);
	if (doc.kind == DeformKind::Associative)
	{
		DPolyDgla dp{doc.ctx};
		std::vector<MCElement<DPolyDgla>> objs;
		for (auto &w : op_bindings_prefix(doc, "omega", 1))
			objs.push_back(MCElement<DPolyDgla>::checked(dp, w));
		auto inst = deligne_build(dp, objs, op_bindings_prefix(doc, "gamma", 0),
		                          op_bindings_prefix(doc, "alpha", -1));
		DeligneModel<DPolyDgla> model{inst};
		verify_crossed_axioms(model, budget, report, "");
	}
	else
	{
		TPolyDgla tp{doc.ctx};
		std::vector<MCElement<TPolyDgla>> objs;
		for (auto &w : pv_bindings_prefix(doc, "omega", 1))
			objs.push_back(MCElement<TPolyDgla>::checked(tp, w));
		auto inst = deligne_build(tp, objs, pv_bindings_prefix(doc, "gamma", 0),
		                          pv_bindings_prefix(doc, "alpha", -1));
		DeligneModel<TPolyDgla> model{inst};
		verify_crossed_axioms(model, budget, report, "");
	}
	return finish(report, opts, out);
}

int cmd_geo_verify(const Document &doc, const CommonOpts &opts, std::ostream &out)
{
	GeoBudget budget{opts.grid_degree, opts.samples, opts.seed};
	auto s = doc.param_poly("s");
	auto t = doc.param_poly("t");
	Report report =
	    doc.kind == DeformKind::Associative
	        ? geo_verify_assoc(doc.ctx, op_binding(doc, "omega", 1),
	                           op_bindings_prefix(doc, "gamma", 0), s, t, budget)
	        : geo_verify_poisson(doc.ctx, pv_binding(doc, "omega", 1),
	                             pv_bindings_prefix(doc, "gamma", 0), s, t, budget);
	report.seed = opts.seed;
	return finish(report, opts, out);
}

int cmd_recognize(const Document &doc, const CommonOpts &opts, int order, int coeff_degree,
                  const std::string &builtin, std::ostream &out)
{
	Report report;
	report.command = "recognize-op";
	report.seed = opts.seed;
	int window = std::max(opts.test_degree, order + coeff_degree);
	OpTable table{doc.ctx.vars, window, {}};
	std::optional<PolyDiffOp> original;
	if (builtin == "eval-at-zero")
		table = OpTable::from_function(doc.ctx.vars, window, [&](const Poly &mono) {
			return total_degree(mono.terms().begin()->first) == 0 ? Poly::one(doc.ctx.vars)
			                                                      : Poly::zero(doc.ctx.vars);
		});
	else if (!builtin.empty())
		throw PreconditionError("unknown builtin map '" + builtin + "'");
	else
	{
		auto phi = op_binding(doc, "phi", 0);
		for (int k = 1; k <= doc.ctx.trunc; ++k)
			if (!phi[k].is_zero())
				throw PreconditionError("recognition consumes a plain operator (h^0 only)");
		original = phi[0];
		table = OpTable::from_op(phi[0], window);
	}

	auto certified = op_order(table, std::min(order + 1, window - 2));
	report.add("op-order", certified.has_value(), "",
	           certified ? "certified order " + std::to_string(*certified) +
	                           " within the tested window"
	                     : "order exceeds " + std::to_string(std::min(order + 1, window - 2)) +
	                           " on the tested window");

	auto rec = recognize_diffop(table, order, coeff_degree);
	if (rec.ok())
	{
		Series<PolyDiffOp> shown(doc.ctx.trunc, PolyDiffOp::zero(doc.ctx.vars, 0));
		shown.set(0, *rec.op);
		report.add("recognize", true, "", "phi = " + show_series(shown));
		if (original)
			report.add("roundtrip", *rec.op == *original);
	}
	else
		report.add("recognize", false, Poly::monomial(doc.ctx.vars, *rec.witness, 1).str(),
		           rec.message);
	return finish(report, opts, out);
}

int cmd_moyal(int d, int n, const std::string &pi_text, std::ostream &out)
{
	// parse "0 1; -1 0" rows
	std::vector<std::vector<Rat>> pi;
	std::stringstream rows(pi_text);
	std::string row;
	while (std::getline(rows, row, ';'))
	{
		std::vector<Rat> r;
		std::istringstream rs(row);
		std::string cell;
		while (rs >> cell)
		{
			size_t slash = cell.find('/');
			if (slash == std::string::npos)
				r.push_back(Rat(Int(cell)));
			else
				r.push_back(Rat(Int(cell.substr(0, slash))) / Rat(Int(cell.substr(slash + 1))));
		}
		pi.push_back(r);
	}
	Context ctx{d, n};
	auto w = moyal_mc(pi, ctx);
	DPolyDgla dp{ctx};
	if (!mc_defect(dp, w).is_zero())
		throw PreconditionError("generated element is not Maurer-Cartan");
	out << "# Moyal star product for the given constant antisymmetric matrix\n";
	out << "grammar_version 1\n";
	out << "kind assoc\n";
	out << "d " << d << "\n";
	out << "N " << n << "\n";
	out << "let omega = " << show_series(w) << "\n";
	return 0;
}

} // namespace

int run_command(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"exact verifier for truncated deformation quantization"};
	app.require_subcommand(1);

	CommonOpts opts;
	int order = 3, coeff_degree = 3;
	std::string builtin;
	int moyal_d = 2, moyal_n = 2;
	std::string moyal_pi = "0 1; -1 0";

	auto *c_mc = app.add_subcommand("check-mc", "verify the Maurer-Cartan equation for omega");
	add_common(c_mc, opts);
	auto *c_star = app.add_subcommand("star-mul", "star-multiply bindings a and b");
	add_common(c_star, opts);
	auto *c_poisson = app.add_subcommand("poisson", "Poisson bracket of bindings a and b");
	add_common(c_poisson, opts);
	auto *c_gauge = app.add_subcommand("gauge-apply", "act on omega by exp(gamma)");
	add_common(c_gauge, opts);
	auto *c_bch = app.add_subcommand("bch", "Baker-Campbell-Hausdorff of gamma1, gamma2");
	add_common(c_bch, opts);
	auto *c_inv = app.add_subcommand("star-inverse", "invert binding a in the deformed algebra");
	add_common(c_inv, opts);
	auto *c_loc = app.add_subcommand("localize", "localization and cover checks at param s (, t)");
	add_common(c_loc, opts);
	auto *c_del = app.add_subcommand("deligne-verify",
	                                 "crossed-groupoid axioms for the omega*/gamma*/alpha* sample");
	add_common(c_del, opts);
	auto *c_geo = app.add_subcommand("geo-verify", "full geometrization verification");
	add_common(c_geo, opts);
	auto *c_rec = app.add_subcommand("recognize-op", "recognize a tabulated endomorphism");
	add_common(c_rec, opts);
	c_rec->add_option("--order", order, "max derivative order of the candidate");
	c_rec->add_option("--coeff-degree", coeff_degree, "max coefficient degree");
	c_rec->add_option("--builtin", builtin, "replace the table: eval-at-zero");
	auto *c_moyal = app.add_subcommand("moyal", "emit a Moyal document");
	c_moyal->add_option("--d", moyal_d, "number of variables")->required();
	c_moyal->add_option("--pi", moyal_pi, "rows of the antisymmetric matrix, ';'-separated")
	    ->required();
	c_moyal->add_option("--N", moyal_n, "truncation order")->required();

	try
	{
		// CLI11 consumes a mutable, reversed argument vector
		std::vector<std::string> args(argv.rbegin(), argv.rend());
		app.parse(args);
	}
	catch (const CLI::ParseError &e)
	{
		if (e.get_exit_code() == 0)
		{
			out << app.help();
			return 0;
		}
		err << "usage error: " << e.what() << "\n";
		return 2;
	}

	try
	{
		if (c_moyal->parsed())
			return cmd_moyal(moyal_d, moyal_n, moyal_pi, out);
		Document doc = parse_document(slurp(opts.doc_path, std::cin));
		if (c_mc->parsed())
			return cmd_check_mc(doc, opts, out);
		if (c_star->parsed())
			return cmd_star_mul(doc, opts, out);
		if (c_poisson->parsed())
			return cmd_poisson(doc, opts, out);
		if (c_gauge->parsed())
			return cmd_gauge_apply(doc, opts, out);
		if (c_bch->parsed())
			return cmd_bch(doc, opts, out);
		if (c_inv->parsed())
			return cmd_star_inverse(doc, opts, out);
		if (c_loc->parsed())
			return cmd_localize(doc, opts, out);
		if (c_del->parsed())
			return cmd_deligne_verify(doc, opts, out);
		if (c_geo->parsed())
			return cmd_geo_verify(doc, opts, out);
		if (c_rec->parsed())
			return cmd_recognize(doc, opts, order, coeff_degree, builtin, out);
		err << "no subcommand selected\n";
		return 2;
	}
	catch (const ParseError &e)
	{
		err << "parse error: " << e.what() << "\n";
		return 2;
	}
	catch (const Error &e)
	{
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

} // namespace defq
