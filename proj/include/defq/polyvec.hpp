#pragma once

#include <span>

#include "defq/element.hpp"
#include "defq/series.hpp"

namespace defq {

// Graded polyvector field of degree p >= -1: a sum of terms
// f * dx_{i_0} ^ ... ^ dx_{i_p} with strictly increasing indices
// (the antisymmetry normal form) and polynomial coefficients f.
// Degree -1 stores a bare coefficient (empty index tuple).
class PolyVec
{
public:
	using IndexTuple = std::vector<int>; // strictly increasing, 1-based
	using TermMap = std::map<IndexTuple, Poly>;

	PolyVec(int vars, int degree);

	static PolyVec zero(int vars, int degree) { return PolyVec(vars, degree); }
	// Degree -1 element.
	static PolyVec function(const Poly &f);
	// Coordinate vector field d/dx_i.
	static PolyVec coordinate(int vars, int i);
	// f * dx_{i_0} ^ ... : indices may arrive unsorted; the sign of the
	// sorting permutation is absorbed into the coefficient, repeats give 0.
	static PolyVec term(const Poly &coeff, const IndexTuple &indices);

	int vars() const { return vars_; }
	int degree() const { return degree_; }
	bool is_zero() const { return terms_.empty(); }
	const TermMap &terms() const { return terms_; }

	PolyVec operator-() const;
	PolyVec operator+(const PolyVec &o) const;
	PolyVec operator-(const PolyVec &o) const { return *this + (-o); }
	PolyVec scaled(const Rat &c) const;
	// The zero polyvector lives in every graded piece, so empty values
	// compare equal across degrees.
	bool operator==(const PolyVec &o) const
	{
		if (vars_ != o.vars_)
			return false;
		if (terms_.empty() && o.terms_.empty())
			return true;
		return degree_ == o.degree_ && terms_ == o.terms_;
	}

	void add_term(const IndexTuple &indices, const Poly &coeff);

	// Derivation action of a degree-0 field on an element of C or C_s.
	template <class E>
	E apply_to(const E &g) const
	{
		if (degree_ != 0)
			throw PreconditionError("only degree-0 polyvectors act on functions");
		E r = zero_like(g);
		for (const auto &[idx, f] : terms_)
			r += f * g.derivative(idx[0]);
		return r;
	}

private:
	int vars_;
	int degree_;
	TermMap terms_;
};

// Exterior product with shuffle signs; operands must have degree >= 0.
PolyVec wedge(const PolyVec &a, const PolyVec &b);

// Schouten-Nijenhuis bracket for the shifted grading (degrees >= -1).
// Restricts to the Lie bracket of vector fields in degree 0 and to the
// derivation action against degree -1.
PolyVec schouten_bracket(const PolyVec &a, const PolyVec &b);

// Antisymmetric bilinear function attached to a degree-1 polyvector:
// for w = g1 ^ g2 decomposable it is
//   {c1, c2}_w = 1/2 * (g1(c1) g2(c2) - g1(c2) g2(c1)),
// extended additively over terms.
template <class E>
E poisson_eval(const PolyVec &w, const E &c1, const E &c2)
{
	if (w.degree() != 1)
		throw PreconditionError("poisson_eval needs a degree-1 polyvector");
	E r = zero_like(c1);
	for (const auto &[idx, f] : w.terms())
	{
		int i = idx[0], j = idx[1];
		E t = c1.derivative(i) * c2.derivative(j) - c1.derivative(j) * c2.derivative(i);
		r += f * t;
	}
	return r.scaled(Rat(1) / 2);
}

// h-bilinear extension; w must vanish at h^0 (a formal bracket).
template <class E>
Series<E> bracket_of_functions(const Series<PolyVec> &w, const Series<E> &c1,
                               const Series<E> &c2)
{
	if (w.valuation() < 1)
		throw PreconditionError("formal Poisson bracket needs valuation >= 1");
	Series<E> r(c1.trunc(), c1.zero_like());
	for (int k = 1; k <= w.trunc(); ++k)
	{
		if (w[k].is_zero())
			continue;
		for (int i = 0; i <= c1.trunc(); ++i)
			for (int j = 0; i + j + k <= c1.trunc(); ++j)
			{
				if (c1[i].is_zero() || c2[j].is_zero())
					continue;
				r.set(i + j + k, r[i + j + k] + poisson_eval(w[k], c1[i], c2[j]));
			}
	}
	return r;
}

// Sum of cyclic {{c1,c2},c3}; identically zero on low-degree grids exactly
// when w is Maurer-Cartan in the polyvector algebra.
template <class E>
Series<E> poisson_jacobiator(const Series<PolyVec> &w, const Series<E> &c1,
                             const Series<E> &c2, const Series<E> &c3)
{
	auto cyc = [&](const Series<E> &a, const Series<E> &b, const Series<E> &c) {
		return bracket_of_functions(w, bracket_of_functions(w, a, b), c);
	};
	return cyc(c1, c2, c3) + cyc(c2, c3, c1) + cyc(c3, c1, c2);
}

} // namespace defq
