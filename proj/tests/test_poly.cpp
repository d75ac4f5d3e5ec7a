#include "doctest.h"

#include "defq/locpoly.hpp"
#include "defq/sampling.hpp"

using namespace defq;

TEST_CASE("poly arithmetic and canonical form")
{
	const int d = 2;
	Poly x = Poly::variable(d, 1), y = Poly::variable(d, 2);

	CHECK((x + y) * (x - y) == x * x - y * y);
	CHECK((x + y) - (x + y) == Poly::zero(d));
	CHECK(Poly::zero(d).degree() == -1);
	CHECK((x * x * y).degree() == 3);
	CHECK((x * y).str() == "x1*x2");
	CHECK((x - y.scaled(Rat(3) / 2)).str() == "x1 - 3/2*x2");
}

TEST_CASE("poly derivatives")
{
	const int d = 2;
	Poly x = Poly::variable(d, 1), y = Poly::variable(d, 2);

	CHECK((x * x * y).derivative(1) == (x * y).scaled(2));
	CHECK((x * y).derivative(1).derivative(2) == Poly::one(d));
	CHECK((x * y).derivative(2).derivative(1) == Poly::one(d));
	CHECK(x.derivative(2) == Poly::zero(d));

	Rng rng(3);
	for (int it = 0; it < 40; ++it)
	{
		Poly f = random_poly(rng, d, 3, 3), g = random_poly(rng, d, 3, 3);
		int i = rng.uniform(1, d), j = rng.uniform(1, d);
		// Leibniz and commuting partials
		CHECK((f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i));
		CHECK(f.derivative(i).derivative(j) == f.derivative(j).derivative(i));
	}
}

TEST_CASE("exact division")
{
	const int d = 2;
	Poly x = Poly::variable(d, 1), y = Poly::variable(d, 2);
	Poly f = (x + y) * (x * x - y);
	auto q = f.divided_by(x + y);
	REQUIRE(q.has_value());
	CHECK(*q == x * x - y);
	CHECK(!f.divided_by(x * x + y).has_value());
	CHECK(!(x).divided_by(y).has_value());

	Rng rng(5);
	for (int it = 0; it < 30; ++it)
	{
		Poly a = random_poly(rng, d, 2, 2), b = random_poly(rng, d, 2, 2);
		if (b.is_zero())
			continue;
		auto qq = (a * b).divided_by(b);
		REQUIRE(qq.has_value());
		CHECK(*qq == a);
	}
}

TEST_CASE("localized elements: normal form and arithmetic")
{
	const int d = 2;
	Poly x = Poly::variable(d, 1), y = Poly::variable(d, 2), s = Poly::variable(d, 1);

	// x/s + y/s = (x+y)/s
	LocPoly a(x, s, 1), b(y, s, 1);
	CHECK(a + b == LocPoly(x + y, s, 1));

	// (x*s)/s^1 normalizes to x/s^0
	CHECK(LocPoly(x * s, s, 1) == LocPoly::embed(x, s));
	CHECK(LocPoly(x * s, s, 1).power() == 0);

	// d/dx1 (1/x1) = -1/x1^2
	CHECK(LocPoly(Poly::one(d), s, 1).derivative(1) == LocPoly(-Poly::one(d), s, 2));

	// mismatched localizations are rejected
	CHECK_THROWS_AS(a + LocPoly(x, y, 1), ContextMismatchError);

	// embedding respects arithmetic
	Rng rng(9);
	for (int it = 0; it < 30; ++it)
	{
		Poly f = random_poly(rng, d, 3, 3), g = random_poly(rng, d, 3, 3);
		CHECK(LocPoly::embed(f, s) * LocPoly::embed(g, s) == LocPoly::embed(f * g, s));
		CHECK(LocPoly::embed(f, s) + LocPoly::embed(g, s) == LocPoly::embed(f + g, s));
		int i = rng.uniform(1, d);
		// Leibniz holds for fractions
		LocPoly u(f, s, (unsigned)rng.uniform(0, 2));
		LocPoly v(g, s, (unsigned)rng.uniform(0, 2));
		CHECK((u * v).derivative(i) == u.derivative(i) * v + u * v.derivative(i));
		CHECK(u.derivative(1).derivative(2) == u.derivative(2).derivative(1));
	}
}

TEST_CASE("restriction C_s -> C_st")
{
	const int d = 2;
	Poly x = Poly::variable(d, 1), y = Poly::variable(d, 2);
	Poly s = x, t = y;

	// x/s becomes (x*t)/(s*t)
	LocPoly a(y, s, 1);
	LocPoly r = a.restricted(t);
	CHECK(r.s() == s * t);
	CHECK(r == LocPoly(y * t, s * t, 1));

	// a plain polynomial restricts to itself
	CHECK(LocPoly::embed(x, s).restricted(t) == LocPoly::embed(x, s * t));

	// composite restriction equals direct restriction: C -> C_s -> C_st
	// agrees with C -> C_st on embedded polynomials
	Rng rng(13);
	for (int it = 0; it < 20; ++it)
	{
		Poly f = random_poly(rng, d, 3, 3);
		CHECK(LocPoly::embed(f, s).restricted(t) == LocPoly::embed(f, s * t));
	}

	// restriction is a ring map on fractions
	for (int it = 0; it < 20; ++it)
	{
		LocPoly u(random_poly(rng, d, 2, 2), s, (unsigned)rng.uniform(0, 2));
		LocPoly v(random_poly(rng, d, 2, 2), s, (unsigned)rng.uniform(0, 2));
		CHECK((u * v).restricted(t) == u.restricted(t) * v.restricted(t));
		CHECK((u + v).restricted(t) == u.restricted(t) + v.restricted(t));
	}
}
