#include "doctest.h"

#include "defq/optable.hpp"
#include "defq/sampling.hpp"

using namespace defq;

TEST_CASE("op_order on curated operators")
{
	const int d = 2;
	Poly x1 = Poly::variable(d, 1), x2 = Poly::variable(d, 2);

	// d1^2 has order 2
	PolyDiffOp lap = PolyDiffOp::term(Poly::one(d), {{2, 0}});
	CHECK(op_order(lap, 3, 6) == 2);

	// multiplication by x1 has order 0
	PolyDiffOp mult = PolyDiffOp::term(x1, {{0, 0}});
	CHECK(op_order(mult, 3, 6) == 0);

	// d1 + x2 d2 has order 1
	PolyDiffOp mixed = PolyDiffOp::term(Poly::one(d), {{1, 0}}) + PolyDiffOp::term(x2, {{0, 1}});
	CHECK(op_order(mixed, 3, 6) == 1);

	// the zero operator has order 0
	CHECK(op_order(PolyDiffOp::zero(d, 0), 3, 6) == 0);

	// window too small for the requested certificate
	CHECK_THROWS_AS(op_order(lap, 3, 4), PreconditionError);
}

TEST_CASE("op_order rejects the evaluation-at-a-point map")
{
	const int d = 1;
	Poly x1 = Poly::variable(d, 1);
	// f |-> f(0) * x1 is linear but no differential operator of low order
	OpTable t = OpTable::from_function(d, 6, [&](const Poly &mono) {
		return total_degree(mono.terms().begin()->first) == 0 ? x1 : Poly::zero(d);
	});
	CHECK(op_order(t, 3) == std::nullopt);
}

TEST_CASE("recognition round-trips random differential operators")
{
	Rng rng(61);
	for (int it = 0; it < 30; ++it)
	{
		int d = rng.uniform(1, 2);
		PolyDiffOp op = random_diffop(rng, d, 0, 3, 3, 3, false);
		OpTable t = OpTable::from_op(op, 6);
		auto rec = recognize_diffop(t, 3, 3);
		REQUIRE(rec.ok());
		CHECK(*rec.op == op);
	}
}

TEST_CASE("recognition of the zero map and failure witnesses")
{
	const int d = 2;
	OpTable zero = OpTable::from_op(PolyDiffOp::zero(d, 0), 5);
	auto rec = recognize_diffop(zero, 2, 3);
	REQUIRE(rec.ok());
	CHECK(rec.op->is_zero());

	// evaluation at the origin is linear but not differential with
	// polynomial coefficients of bounded degree
	OpTable eval0 = OpTable::from_function(d, 6, [&](const Poly &mono) {
		return total_degree(mono.terms().begin()->first) == 0 ? Poly::one(d) : Poly::zero(d);
	});
	auto bad = recognize_diffop(eval0, 3, 3);
	CHECK(!bad.ok());
	REQUIRE(bad.witness.has_value());
	CHECK(!bad.message.empty());

	CHECK_THROWS_AS(recognize_diffop(eval0, 4, 3), PreconditionError);
}

TEST_CASE("recognition failure witness re-triggers the mismatch")
{
	const int d = 1;
	// a map that looks differential on low degrees but is not globally:
	// f |-> f'' except on the top monomial where it returns 0
	PolyDiffOp lap = PolyDiffOp::term(Poly::one(d), {{2u}});
	OpTable t = OpTable::from_op(lap, 5);
	Exponents top{5};
	t.values.insert_or_assign(top, Poly::zero(d));
	auto rec = recognize_diffop(t, 2, 1);
	CHECK(!rec.ok());
	REQUIRE(rec.witness.has_value());
	// at the witness the table and the best candidate disagree
	CHECK(*rec.witness == top);
}
