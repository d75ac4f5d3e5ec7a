#include "defq/sampling.hpp"

#include <algorithm>

namespace defq {

std::vector<Exponents> exponents_up_to(int vars, int max_degree)
{
	std::vector<Exponents> out;
	Exponents cur((size_t)vars, 0);
	auto rec = [&](auto &self, int v, int left) -> void {
		if (v == vars)
		{
			out.push_back(cur);
			return;
		}
		for (int e = 0; e <= left; ++e)
		{
			cur[(size_t)v] = (uint32_t)e;
			self(self, v + 1, left - e);
		}
		cur[(size_t)v] = 0;
	};
	rec(rec, 0, max_degree);
	std::sort(out.begin(), out.end(), GradedLexLess{});
	return out;
}

std::vector<Poly> monomials_up_to(int vars, int max_degree)
{
	std::vector<Poly> out;
	for (const auto &e : exponents_up_to(vars, max_degree))
		out.push_back(Poly::monomial(vars, e, 1));
	return out;
}

Poly random_poly(Rng &rng, int vars, int max_degree, int terms)
{
	auto exps = exponents_up_to(vars, max_degree);
	Poly p(vars);
	for (int t = 0; t < terms; ++t)
		p.add_term(exps[(size_t)rng.uniform(0, (int)exps.size() - 1)], rng.small_rat());
	return p;
}

PolyVec random_polyvec(Rng &rng, int vars, int degree, int coeff_degree, int terms)
{
	PolyVec r(vars, degree);
	if (degree == -1)
		return r + PolyVec::function(random_poly(rng, vars, coeff_degree, terms));
	if (degree + 1 > vars)
		return r; // no wedge monomials of that size
	for (int t = 0; t < terms; ++t)
	{
		PolyVec::IndexTuple idx;
		int lo = 1;
		for (int k = 0; k <= degree; ++k)
		{
			int hi = vars - (degree - k);
			int i = rng.uniform(lo, hi);
			idx.push_back(i);
			lo = i + 1;
		}
		r = r + PolyVec::term(random_poly(rng, vars, coeff_degree, 2), idx);
	}
	return r;
}

PolyDiffOp random_diffop(Rng &rng, int vars, int degree, int max_order, int coeff_degree,
                         int terms, bool normalized)
{
	PolyDiffOp r(vars, degree);
	if (degree == -1)
		return r + PolyDiffOp::function(random_poly(rng, vars, coeff_degree, terms));
	for (int t = 0; t < terms; ++t)
	{
		PolyDiffOp::Slots slots;
		for (int s = 0; s <= degree; ++s)
		{
			Exponents a((size_t)vars, 0);
			int order = rng.uniform(normalized ? 1 : 0, max_order);
			for (int k = 0; k < order; ++k)
				a[(size_t)rng.uniform(0, vars - 1)] += 1;
			slots.push_back(a);
		}
		r = r + PolyDiffOp::term(random_poly(rng, vars, coeff_degree, 2), slots);
	}
	return r;
}

} // namespace defq
