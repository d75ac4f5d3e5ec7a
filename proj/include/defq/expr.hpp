#pragma once

#include <variant>

#include "defq/expr_show.hpp"

namespace defq {

enum class ValueKind
{
	Scalar,  // Series<Poly>
	Polyvec, // Series<PolyVec>
	Operator // Series<PolyDiffOp>
};

// A parsed expression: one of the three series kinds over the ambient
// context. Plain polynomials are scalar series concentrated at h^0.
struct Value
{
	std::variant<Series<Poly>, Series<PolyVec>, Series<PolyDiffOp>> v;

	ValueKind kind() const { return (ValueKind)v.index(); }
	bool is_zero() const;
	// Inner degree of the graded kinds; meaningless for scalars.
	int degree() const;

	const Series<Poly> &scalar() const { return std::get<Series<Poly>>(v); }
	const Series<PolyVec> &polyvec() const { return std::get<Series<PolyVec>>(v); }
	const Series<PolyDiffOp> &op() const { return std::get<Series<PolyDiffOp>>(v); }

	bool operator==(const Value &o) const { return v == o.v; }
	std::string str() const;
};

// Parse a document expression. Errors carry 1-based line/column.
Value parse_expr(const std::string &text, const Context &ctx);

// An exact zero parses as a scalar; bindings with a declared kind coerce
// it into the expected graded space.
Value coerce_zero(const Value &val, ValueKind kind, int degree, const Context &ctx);

} // namespace defq
