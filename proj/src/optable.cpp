#include "defq/optable.hpp"

#include "defq/sampling.hpp"

namespace defq {

OpTable OpTable::from_op(const PolyDiffOp &op, int max_degree)
{
	if (op.degree() != 0)
		throw PreconditionError("tables are built from degree-0 operators");
	OpTable t{op.vars(), max_degree, {}};
	for (const auto &e : exponents_up_to(op.vars(), max_degree))
	{
		std::vector<Poly> arg{Poly::monomial(op.vars(), e, 1)};
		t.values.emplace(e, op.apply<Poly>(std::span<const Poly>(arg)));
	}
	return t;
}

OpTable OpTable::from_function(int vars, int max_degree,
                               const std::function<Poly(const Poly &)> &fn)
{
	OpTable t{vars, max_degree, {}};
	for (const auto &e : exponents_up_to(vars, max_degree))
		t.values.emplace(e, fn(Poly::monomial(vars, e, 1)));
	return t;
}

const Poly &OpTable::at(const Exponents &e) const
{
	auto it = values.find(e);
	if (it == values.end())
		throw PreconditionError("monomial outside the tabulated window");
	return it->second;
}

namespace {

// [T, x_i] as a table on the window shrunk by one degree.
OpTable commutator_with_var(const OpTable &t, int i)
{
	OpTable r{t.vars, t.max_degree - 1, {}};
	for (const auto &[e, val] : t.values)
	{
		if ((int)total_degree(e) > r.max_degree)
			continue;
		Exponents xe = e;
		xe[(size_t)(i - 1)] += 1;
		Poly xi = Poly::variable(t.vars, i);
		r.values.emplace(e, t.at(xe) - xi * val);
	}
	return r;
}

bool table_is_zero(const OpTable &t)
{
	for (const auto &[e, val] : t.values)
		if (!val.is_zero())
			return false;
	return true;
}

// All (depth)-fold iterated commutators with coordinates vanish? Commuting
// with a constant is identically zero, so only the x_i matter among the
// monomials of degree <= 1.
bool commutators_vanish(const OpTable &t, int depth)
{
	if (depth == 0)
		return table_is_zero(t);
	for (int i = 1; i <= t.vars; ++i)
		if (!commutators_vanish(commutator_with_var(t, i), depth - 1))
			return false;
	return true;
}

} // namespace

std::optional<int> op_order(const OpTable &table, int max_order)
{
	if (table.max_degree < max_order + 2)
		throw PreconditionError("order certification needs a window of degree >= max_order + 2");
	for (int m = 0; m <= max_order; ++m)
		if (commutators_vanish(table, m + 1))
			return m;
	return std::nullopt;
}

std::optional<int> op_order(const PolyDiffOp &op, int max_order, int test_degree)
{
	return op_order(OpTable::from_op(op, test_degree), max_order);
}

RecognizeResult recognize_diffop(const OpTable &table, int m, int coeff_degree)
{
	if (table.max_degree < m + coeff_degree)
		throw PreconditionError("recognition needs a window of degree >= m + coeff_degree");
	const int d = table.vars;
	std::map<Exponents, Poly, GradedLexLess> coeffs;
	for (const auto &alpha : exponents_up_to(d, m))
	{
		// residual = table(x^alpha) - sum_{beta < alpha} f_beta d^beta(x^alpha)
		Poly residual = table.at(alpha);
		Poly xalpha = Poly::monomial(d, alpha, 1);
		for (const auto &[beta, f] : coeffs)
			residual -= f * xalpha.derivative(beta);
		// f_alpha * alpha! is what remains
		Int afact = 1;
		for (auto a : alpha)
			afact *= factorial(a);
		Poly f = residual.scaled(Rat(1) / Rat(afact));
		if (f.degree() > coeff_degree)
			return {std::nullopt, alpha,
			        "coefficient of the derivative multi-index exceeds degree " +
			            std::to_string(coeff_degree)};
		if (!f.is_zero())
			coeffs.emplace(alpha, f);
	}
	PolyDiffOp op(d, 0);
	for (const auto &[alpha, f] : coeffs)
		op.add_term({alpha}, f);
	// Verify the candidate against the whole window; a residual anywhere
	// means the tabulated map is not of the requested shape.
	for (const auto &[e, val] : table.values)
	{
		std::vector<Poly> arg{Poly::monomial(d, e, 1)};
		if (!(op.apply<Poly>(std::span<const Poly>(arg)) == val))
			return {std::nullopt, e, "table disagrees with every operator of order <= " +
			                             std::to_string(m) + ", coefficient degree <= " +
			                             std::to_string(coeff_degree)};
	}
	return {op, std::nullopt, ""};
}

} // namespace defq
