#pragma once

#include <functional>
#include <optional>

#include "defq/polydiffop.hpp"

namespace defq {

// A linear endomorphism of C presented as its values on all monomials of
// total degree <= max_degree. This is the raw input of the recognition
// pipeline: order certification by iterated commutators with coordinates,
// and reconstruction of a differential-operator form where one exists.
struct OpTable
{
	int vars;
	int max_degree;
	std::map<Exponents, Poly, GradedLexLess> values;

	static OpTable from_op(const PolyDiffOp &op, int max_degree);
	static OpTable from_function(int vars, int max_degree,
	                             const std::function<Poly(const Poly &)> &fn);

	const Poly &at(const Exponents &e) const;
};

// Least m <= max_order such that every (m+1)-fold iterated commutator
// [[..[phi, c_0], c_1].., c_m] with the c_j ranging over monomials of
// degree <= 1 vanishes on the tested window; nullopt means "exceeds".
// Certified only on the finite window: needs max_degree >= max_order + 2.
std::optional<int> op_order(const OpTable &table, int max_order);
std::optional<int> op_order(const PolyDiffOp &op, int max_order, int test_degree);

struct RecognizeResult
{
	std::optional<PolyDiffOp> op;   // the reconstructed operator on success
	std::optional<Exponents> witness; // monomial exposing the failure
	std::string message;

	bool ok() const { return op.has_value(); }
};

// Solve phi = sum_{|a| <= m} f_a d^a with deg f_a <= coeff_degree against
// the table. The linear system is triangular in the graded-lex order of a
// (d^b(x^a) = 0 unless b <= a), so the coefficients are extracted directly
// and then verified against every tabulated monomial; any residual yields
// a failure with a witness monomial.
RecognizeResult recognize_diffop(const OpTable &table, int m, int coeff_degree);

} // namespace defq
