#include "doctest.h"

#include "defq/expr.hpp"
#include "defq/sampling.hpp"

using namespace defq;

TEST_CASE("parse scalar expressions")
{
	Context ctx{2, 2};
	auto v = parse_expr("3/2*x1^2*x2", ctx);
	REQUIRE(v.kind() == ValueKind::Scalar);
	Poly x1 = Poly::variable(2, 1), x2 = Poly::variable(2, 2);
	CHECK(v.scalar()[0] == (x1 * x1 * x2).scaled(Rat(3) / 2));

	auto s = parse_expr("1 + h*(x1 + x2) + h^2*(x1*x2)", ctx);
	CHECK(s.scalar()[0] == Poly::one(2));
	CHECK(s.scalar()[1] == x1 + x2);
	CHECK(s.scalar()[2] == x1 * x2);

	// h-degrees above N are truncated away
	CHECK(parse_expr("h^3*x1", ctx).is_zero());

	CHECK(parse_expr("-x1 + x1", ctx).is_zero());
	CHECK(parse_expr("(1 - x1)*(1 + x1)", ctx).scalar()[0] == Poly::one(2) - x1 * x1);
}

TEST_CASE("parse polyvectors and operators")
{
	Context ctx{3, 2};
	auto w = parse_expr("dx1^dx2", ctx);
	REQUIRE(w.kind() == ValueKind::Polyvec);
	CHECK(w.polyvec()[0] == PolyVec::term(Poly::one(3), {1, 2}));

	auto wneg = parse_expr("dx2^dx1", ctx);
	CHECK(wneg.polyvec()[0] == PolyVec::term(-Poly::one(3), {1, 2}));

	// coefficient-carrying wedge terms and products of polyvectors
	auto lin = parse_expr("x3*dx1^dx2 + x1*dx2^dx3", ctx);
	CHECK(lin.polyvec()[0] ==
	      PolyVec::term(Poly::variable(3, 3), {1, 2}) +
	          PolyVec::term(Poly::variable(3, 1), {2, 3}));
	CHECK(parse_expr("dx1*dx2", ctx).polyvec()[0] == PolyVec::term(Poly::one(3), {1, 2}));

	auto op = parse_expr("h*(x1*D[1|2])", ctx);
	REQUIRE(op.kind() == ValueKind::Operator);
	CHECK(op.op()[1] == PolyDiffOp::term(Poly::variable(3, 1),
	                                     {Exponents{1, 0, 0}, Exponents{0, 1, 0}}));

	// multiplicity by repetition, empty slot = identity
	auto op2 = parse_expr("D[1,1,2|]", ctx);
	CHECK(op2.op()[0] ==
	      PolyDiffOp::term(Poly::one(3), {Exponents{2, 1, 0}, Exponents{0, 0, 0}}));

	auto c = parse_expr("x1 - x2", ctx);
	CHECK(c.kind() == ValueKind::Scalar);
}

TEST_CASE("parse errors carry location and reasons")
{
	Context ctx{2, 1};
	CHECK_THROWS_AS(parse_expr("x3", ctx), ParseError);          // unknown variable
	CHECK_THROWS_AS(parse_expr("dx5", ctx), ParseError);         // wedge out of range
	CHECK_THROWS_AS(parse_expr("x1 + ", ctx), ParseError);       // syntax
	CHECK_THROWS_AS(parse_expr("x1 ++ x2", ctx), ParseError);    // syntax
	CHECK_THROWS_AS(parse_expr("foo", ctx), ParseError);         // unknown identifier
	CHECK_THROWS_AS(parse_expr("D[3]", ctx), ParseError);        // derivative index range
	CHECK_THROWS_AS(parse_expr("dx1 + x1", ctx), ParseError);    // kind mismatch
	CHECK_THROWS_AS(parse_expr("D[1]*D[2]", ctx), ParseError);   // operator product
	CHECK_THROWS_AS(parse_expr("dx1^2", ctx), ParseError);       // graded power
	CHECK_THROWS_AS(parse_expr("1/0", ctx), ParseError);         // zero denominator

	try
	{
		parse_expr("x1 +\n @", ctx);
		CHECK(false);
	}
	catch (const ParseError &e)
	{
		CHECK(e.line == 2);
		CHECK(e.column == 2);
	}
}

TEST_CASE("print-parse round trip on randomized values")
{
	Context ctx{2, 3};
	Rng rng(101);
	for (int it = 0; it < 40; ++it)
	{
		Series<Poly> s(ctx.trunc, Poly::zero(2));
		for (int k = 0; k <= ctx.trunc; ++k)
			s.set(k, random_poly(rng, 2, 3, 3));
		Value v{s};
		CHECK(parse_expr(v.str(), ctx) == v);

		Series<PolyVec> pv(ctx.trunc, PolyVec::zero(2, 1));
		for (int k = 0; k <= ctx.trunc; ++k)
			pv.set(k, random_polyvec(rng, 2, 1, 2, 2));
		Value vv{pv};
		CHECK(parse_expr(vv.str(), ctx) == vv);

		Series<PolyDiffOp> so(ctx.trunc, PolyDiffOp::zero(2, 1));
		for (int k = 0; k <= ctx.trunc; ++k)
			so.set(k, random_diffop(rng, 2, 1, 2, 2, 2, true));
		Value vo{so};
		CHECK(parse_expr(vo.str(), ctx) == vo);
	}
	// degree-0 polyvectors and constants round trip too
	for (int it = 0; it < 10; ++it)
	{
		Series<PolyVec> pv(ctx.trunc, PolyVec::zero(2, 0));
		pv.set(1, random_polyvec(rng, 2, 0, 2, 2));
		Value vv{pv};
		CHECK(parse_expr(vv.str(), ctx) == vv);
	}
	CHECK(parse_expr("0", ctx).is_zero());
}

TEST_CASE("zero coercion for typed bindings")
{
	Context ctx{2, 2};
	auto z = parse_expr("0", ctx);
	auto zv = coerce_zero(z, ValueKind::Polyvec, 1, ctx);
	CHECK(zv.kind() == ValueKind::Polyvec);
	CHECK(zv.is_zero());
	auto zo = coerce_zero(z, ValueKind::Operator, 1, ctx);
	CHECK(zo.kind() == ValueKind::Operator);
	CHECK_THROWS_AS(coerce_zero(parse_expr("x1", ctx), ValueKind::Polyvec, 1, ctx),
	                PreconditionError);
}

TEST_CASE("parser rejects garbage without crashing")
{
	Context ctx{2, 2};
	Rng rng(149);
	const std::string alphabet = "xhd123+-*/^()[]|,. D";
	for (int it = 0; it < 300; ++it)
	{
		std::string s;
		int len = rng.uniform(1, 24);
		for (int i = 0; i < len; ++i)
			s.push_back(alphabet[(size_t)rng.uniform(0, (int)alphabet.size() - 1)]);
		try
		{
			auto v = parse_expr(s, ctx);
			// accidental valid strings round-trip
			CHECK(parse_expr(v.str(), ctx) == v);
		}
		catch (const ParseError &)
		{
		}
		catch (const Error &)
		{
			// semantic rejections (kind/degree mismatches) are fine too
		}
	}
}
