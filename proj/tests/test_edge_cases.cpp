#include "doctest.h"

#include <cstdio>

#include "defq/deform.hpp"

using namespace defq;

namespace {

Series<Poly> cs(int trunc, const Poly &f)
{
	Series<Poly> r(trunc, Poly::zero(f.vars()));
	r.set(0, f);
	return r;
}

} // namespace

TEST_CASE("operator application commutes with restriction")
{
	// unique-extension coherence: evaluating in C_s and then restricting to
	// C_st equals restricting the arguments first
	Rng rng(131);
	const int d = 2;
	Poly s = Poly::variable(d, 1), t = Poly::variable(d, 2);
	for (int it = 0; it < 20; ++it)
	{
		PolyDiffOp op = random_diffop(rng, d, 1, 2, 2, 2, false);
		LocPoly a(random_poly(rng, d, 2, 2), s, (unsigned)rng.uniform(0, 1));
		LocPoly b(random_poly(rng, d, 2, 2), s, (unsigned)rng.uniform(0, 1));
		std::vector<LocPoly> args{a, b};
		LocPoly direct = op.apply<LocPoly>(std::span<const LocPoly>(args)).restricted(t);
		std::vector<LocPoly> rargs{a.restricted(t), b.restricted(t)};
		LocPoly through = op.apply<LocPoly>(std::span<const LocPoly>(rargs));
		CHECK(direct == through);
	}
}

TEST_CASE("feedback kernel: Casimir of a degenerate structure")
{
	// d = 3 with w = h d1^d2: the coordinate x3 is a Casimir, so its
	// 2-morphism has identity feedback
	TPolyDgla tp{{3, 3}};
	Series<PolyVec> w(tp.ctx.trunc, PolyVec::zero(3, 1));
	w.set(1, PolyVec::term(Poly::one(3), {1, 2}));
	CHECK(mc_defect(tp, w).is_zero());

	Series<PolyVec> alpha(tp.ctx.trunc, PolyVec::zero(3, -1));
	alpha.set(1, PolyVec::function(Poly::variable(3, 3)));
	CHECK(twisted_d(tp, w, alpha).is_zero());

	// a non-Casimir coordinate has nontrivial feedback
	Series<PolyVec> beta(tp.ctx.trunc, PolyVec::zero(3, -1));
	beta.set(1, PolyVec::function(Poly::variable(3, 1)));
	CHECK(!twisted_d(tp, w, beta).is_zero());
}

TEST_CASE("non-composable morphisms are rejected")
{
	DPolyDgla dp{{2, 2}};
	std::vector<std::vector<Rat>> pi{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
	auto w = MCElement<DPolyDgla>::checked(dp, moyal_mc(pi, dp.ctx));
	auto zero = MCElement<DPolyDgla>::checked(dp, s_zero(dp, 1));
	Rng rng(137);
	auto gen0 = [&](int) { return random_diffop(rng, 2, 0, 2, 1, 1, true); };
	auto inst = deligne_build(dp, {w, zero},
	                          {random_positive_series(dp.ctx.trunc, dp.zero(0), gen0)}, {});
	DeligneModel<DPolyDgla> model{inst};
	REQUIRE(!inst.gauges.empty());
	auto g = inst.gauges[0]; // maps some i to some j
	if (g.src != g.tgt)
	{
		auto id_at_src = model.identity1(g.src);
		CHECK_THROWS_AS(model.compose1(id_at_src, g), PreconditionError);
	}
}

TEST_CASE("localizing at a unit is the identity localization")
{
	const int d = 2;
	Poly one = Poly::one(d);
	// denominators of a constant fold away in the normal form
	LocPoly f(Poly::variable(d, 1), one, 3);
	CHECK(f.power() == 0);
	CHECK(f.numerator() == Poly::variable(d, 1));

	Context ctx{2, 2};
	std::vector<std::vector<Rat>> pi{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
	auto w = moyal_mc(pi, ctx);
	auto a = cs(ctx.trunc, Poly::variable(d, 1));
	auto b = cs(ctx.trunc, Poly::variable(d, 2));
	// the embedded product is literally the plain product
	auto la = embed_series(a, one), lb = embed_series(b, one);
	CHECK(star_mul(w, la, lb) == embed_series(star_mul(w, a, b), one));
}

TEST_CASE("geo_verify on the zero element passes in both kinds")
{
	Context ctx{2, 2};
	GeoBudget budget{2, 2, 3};
	Series<PolyDiffOp> wz(ctx.trunc, PolyDiffOp::zero(2, 1));
	auto r1 = geo_verify_assoc(ctx, wz, {}, std::nullopt, std::nullopt, budget);
	INFO(emit_text(r1));
	CHECK(r1.all_pass());

	Series<PolyVec> wzp(ctx.trunc, PolyVec::zero(2, 1));
	auto r2 = geo_verify_poisson(ctx, wzp, {}, std::nullopt, std::nullopt, budget);
	INFO(emit_text(r2));
	CHECK(r2.all_pass());
}

TEST_CASE("the installed binary honors the exit-code and stdin contract")
{
	std::string bin = std::string(DEFQ_BINARY_DIR) + "/tools/defq";
	std::string docs = std::string(DEFQ_SOURCE_DIR) + "/documents";
	auto shell = [&](const std::string &cmd) {
		int status = std::system((cmd + " > /dev/null 2>&1").c_str());
		return WEXITSTATUS(status);
	};
	CHECK(shell(bin + " check-mc " + docs + "/moyal.doc") == 0);
	CHECK(shell(bin + " check-mc " + docs + "/bad-assoc.doc") == 1);
	CHECK(shell(bin + " check-mc " + docs + "/missing.doc") == 2);
	// stdin documents through '-'
	CHECK(shell(bin + " moyal --d 2 --pi '0 1; -1 0' --N 2 | " + bin + " check-mc -") == 0);
}

TEST_CASE("truncation order zero degenerates to the base ring")
{
	Context ctx{2, 0};
	std::vector<std::vector<Rat>> pi{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
	auto w = moyal_mc(pi, ctx); // no room for any h-coefficient
	CHECK(w.is_zero());
	auto a = cs(0, Poly::variable(2, 1));
	auto b = cs(0, Poly::variable(2, 2));
	CHECK(star_mul(w, a, b) == a * b);
	DPolyDgla dp{ctx};
	CHECK(mc_defect(dp, w).is_zero());
	auto rep = geo_verify_assoc(ctx, w, {}, std::nullopt, std::nullopt, GeoBudget{2, 2, 1});
	CHECK(rep.all_pass());
}
