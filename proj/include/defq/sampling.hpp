#pragma once

#include <random>

#include "defq/polydiffop.hpp"
#include "defq/polyvec.hpp"

namespace defq {

// Deterministic sampling helpers. Only mt19937_64 raw output is used (the
// standard pins its sequence), so identical seeds give identical samples on
// every platform.
struct Rng
{
	std::mt19937_64 eng;

	explicit Rng(uint64_t seed) : eng(seed) {}

	// Uniform in [lo, hi].
	int uniform(int lo, int hi) { return lo + (int)(eng() % (uint64_t)(hi - lo + 1)); }

	// Small nonzero rational with numerator in [-3,3], denominator in [1,2].
	Rat small_rat()
	{
		int num = uniform(-3, 3);
		if (num == 0)
			num = 1;
		return Rat(num) / uniform(1, 2);
	}
};

// All exponent vectors of total degree <= max_degree, graded-lex ascending.
std::vector<Exponents> exponents_up_to(int vars, int max_degree);

// All monomials of total degree <= max_degree (the evaluation grid).
std::vector<Poly> monomials_up_to(int vars, int max_degree);

Poly random_poly(Rng &rng, int vars, int max_degree, int terms);

PolyVec random_polyvec(Rng &rng, int vars, int degree, int coeff_degree, int terms);

PolyDiffOp random_diffop(Rng &rng, int vars, int degree, int max_order, int coeff_degree,
                         int terms, bool normalized);

// Series with the given coefficient generator for h^1..h^N (h^0 = zero):
// the shape of gauge elements, MC candidates and 2-morphism logs.
template <class V, class Gen>
Series<V> random_positive_series(int trunc, const V &zero, Gen gen)
{
	Series<V> r(trunc, zero);
	for (int k = 1; k <= trunc; ++k)
		r.set(k, gen(k));
	return r;
}

} // namespace defq
