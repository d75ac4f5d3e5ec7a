#pragma once

#include <functional>

#include "defq/polydiffop.hpp"
#include "defq/polyvec.hpp"

namespace defq {

struct MorphismInvalidError : Error
{
	using Error::Error;
};

// The two quantum-type DG Lie algebra instances. A DGLA instance is a
// lightweight descriptor: it knows the ambient context and provides the
// graded pieces (degrees >= -1), the differential, the bracket, and the
// degree-0 action on elements of C. Series of graded elements model the
// m-adic completion m (x) g.

// Polyvector fields with the Schouten bracket; the differential is zero.
struct TPolyDgla
{
	Context ctx;

	using Elem = PolyVec;
	static constexpr const char *name = "tpoly";

	Elem zero(int degree) const { return PolyVec::zero(ctx.vars, degree); }
	Elem d(const Elem &a) const { return zero(a.degree() + 1); }
	Elem bracket(const Elem &a, const Elem &b) const { return schouten_bracket(a, b); }
	void validate(const Elem &) const {}

	template <class E>
	static E act(const Elem &gamma, const E &a)
	{
		return gamma.template apply_to<E>(a);
	}
};

// Normalized polydifferential operators with the Gerstenhaber bracket and
// the shifted Hochschild differential.
struct DPolyDgla
{
	Context ctx;
	// The normalized sub-DGLA is the default; the full differential-cochain
	// space is used as the target of the inclusion morphism.
	bool normalized_only = true;

	using Elem = PolyDiffOp;
	static constexpr const char *name = "dpoly_nor";

	Elem zero(int degree) const { return PolyDiffOp::zero(ctx.vars, degree); }
	Elem d(const Elem &a) const { return hochschild_d(a); }
	Elem bracket(const Elem &a, const Elem &b) const { return gerstenhaber_bracket(a, b); }
	void validate(const Elem &a) const
	{
		if (normalized_only && !a.is_normalized())
			throw PreconditionError("operator is not normalized");
	}

	template <class E>
	static E act(const Elem &gamma, const E &a)
	{
		if (gamma.degree() != 0)
			throw PreconditionError("degree-0 action needs a degree-0 operator");
		std::vector<E> args{a};
		return gamma.template apply<E>(std::span<const E>(args));
	}
};

template <class G>
using SeriesOf = Series<typename G::Elem>;

template <class G>
SeriesOf<G> s_zero(const G &g, int degree)
{
	return SeriesOf<G>(g.ctx.trunc, g.zero(degree));
}

template <class G>
SeriesOf<G> s_d(const G &g, const SeriesOf<G> &a)
{
	SeriesOf<G> r(a.trunc(), g.d(a.zero_like()));
	for (int k = 0; k <= a.trunc(); ++k)
		r.set(k, g.d(a[k]));
	return r;
}

template <class G>
SeriesOf<G> s_bracket(const G &g, const SeriesOf<G> &a, const SeriesOf<G> &b)
{
	return a.mul_with(b, [&](const typename G::Elem &x, const typename G::Elem &y) {
		return g.bracket(x, y);
	});
}

// e^{ad gamma}(x) = sum ad_gamma^k(x) / k!; finite because gamma has
// valuation >= 1.
template <class G>
SeriesOf<G> exp_ad(const G &g, const SeriesOf<G> &gamma, const SeriesOf<G> &x)
{
	if (gamma.valuation() < 1)
		throw PreconditionError("exp(ad) needs valuation >= 1");
	SeriesOf<G> acc = x;
	SeriesOf<G> cur = x;
	Rat inv_fact = 1;
	for (int k = 1; k <= x.trunc(); ++k)
	{
		cur = s_bracket(g, gamma, cur);
		inv_fact /= k;
		acc = acc + cur.scaled(inv_fact);
	}
	return acc;
}

// Maurer-Cartan defect d(w) + 1/2 [w, w]; zero exactly when w is MC at the
// truncation order.
template <class G>
SeriesOf<G> mc_defect(const G &g, const SeriesOf<G> &omega)
{
	if (omega.valuation() < 1)
		throw PreconditionError("MC candidates must have valuation >= 1");
	return s_d(g, omega) + s_bracket(g, omega, omega).scaled(Rat(1) / 2);
}

template <class G>
bool is_mc(const G &g, const SeriesOf<G> &omega)
{
	return mc_defect(g, omega).is_zero();
}

// Twisted differential d_w = d + ad(w).
template <class G>
SeriesOf<G> twisted_d(const G &g, const SeriesOf<G> &omega, const SeriesOf<G> &alpha)
{
	return s_d(g, alpha) + s_bracket(g, omega, alpha);
}

// Twisted bracket on degree -1: [a1, a2]_w = [d_w(a1), a2].
template <class G>
SeriesOf<G> twisted_bracket(const G &g, const SeriesOf<G> &omega, const SeriesOf<G> &a1,
                            const SeriesOf<G> &a2)
{
	if (a1.valuation() < 1 || a2.valuation() < 1)
		throw PreconditionError("twisted bracket needs valuation >= 1");
	return s_bracket(g, twisted_d(g, omega, a1), a2);
}

// Time-1 flow of the affine field gamma acts on a degree-1 element:
//   w' = e^{ad gamma}(w) - phi(ad gamma)(d gamma),
//   phi(L) = sum_{k>=0} L^k / (k+1)!.
// The sign convention (gamma enters with +ad in the linear part and -d in
// the inhomogeneous part) is the one pinned by the conjugation identity
//   d_{w'} = e^{ad gamma} d_w e^{-ad gamma}
// and by gauge transport of deformed products.
template <class G>
SeriesOf<G> gauge_apply(const G &g, const SeriesOf<G> &gamma, const SeriesOf<G> &omega)
{
	if (gamma.valuation() < 1 || omega.valuation() < 1)
		throw PreconditionError("gauge action needs valuation >= 1");
	SeriesOf<G> lin = exp_ad(g, gamma, omega);
	SeriesOf<G> b = s_d(g, gamma);
	SeriesOf<G> cur = b;
	SeriesOf<G> inhom = b; // k = 0 term, 1/(1)! = 1
	Rat inv_fact = 1;
	for (int k = 1; k <= omega.trunc(); ++k)
	{
		cur = s_bracket(g, gamma, cur);
		inv_fact /= (k + 1);
		inhom = inhom + cur.scaled(inv_fact);
	}
	return lin - inhom;
}

// Baker-Campbell-Hausdorff by the Dynkin series, truncated at bracket
// depth `depth` (each letter has valuation >= 1, so words longer than the
// truncation order contribute nothing). Works for any element type with
// +, -, scaled and a bracket functor; exp(bch(x,y)) acts as
// exp(x) o exp(y) in every representation.
template <class T, class Br>
T bch(const T &x, const T &y, int depth, Br bracket)
{
	T acc = x - x;
	// Blocks (p_i, q_i) of the Dynkin formula, p_i + q_i > 0. The word
	// X^{p_1} Y^{q_1} ... is folded right-to-left into nested brackets.
	std::vector<std::pair<int, int>> blocks;
	auto eval_word = [&]() -> std::optional<T> {
		std::vector<const T *> letters;
		for (auto &[p, q] : blocks)
		{
			for (int t = 0; t < p; ++t)
				letters.push_back(&x);
			for (int t = 0; t < q; ++t)
				letters.push_back(&y);
		}
		size_t m = letters.size();
		if (m >= 2 && letters[m - 1] == letters[m - 2])
			return std::nullopt; // innermost bracket [Z, Z] = 0
		T v = *letters.back();
		for (size_t i = m - 1; i-- > 0;)
			v = bracket(*letters[i], v);
		return v;
	};
	auto rec = [&](auto &self, int used) -> void {
		if (!blocks.empty())
		{
			auto w = eval_word();
			if (w)
			{
				int n = (int)blocks.size();
				Int denom = Int(used) * Int(n);
				for (auto &[p, q] : blocks)
					denom *= factorial((unsigned)p) * factorial((unsigned)q);
				Rat c = Rat(n % 2 == 1 ? 1 : -1) / Rat(denom);
				acc = acc + w->scaled(c);
			}
		}
		for (int total = 1; used + total <= depth; ++total)
			for (int p = 0; p <= total; ++p)
			{
				blocks.emplace_back(p, total - p);
				self(self, used + total);
				blocks.pop_back();
			}
	};
	rec(rec, 0);
	return acc;
}

template <class G>
SeriesOf<G> bch(const G &g, const SeriesOf<G> &x, const SeriesOf<G> &y)
{
	if (x.valuation() < 1 || y.valuation() < 1)
		throw PreconditionError("bch needs valuation >= 1");
	return bch(x, y, x.trunc(), [&](const SeriesOf<G> &a, const SeriesOf<G> &b) {
		return s_bracket(g, a, b);
	});
}

// Action of a degree-0 series on an element series (derivations for
// polyvectors, single-slot operator application for polydifferentials).
template <class G, class E>
Series<E> act_series(const G &, const SeriesOf<G> &gamma, const Series<E> &a)
{
	Series<E> r(a.trunc(), zero_like(a[0]));
	for (int k = 0; k <= gamma.trunc(); ++k)
	{
		if (gamma[k].is_zero())
			continue;
		for (int i = 0; i + k <= a.trunc(); ++i)
		{
			if (a[i].is_zero())
				continue;
			r.set(i + k, r[i + k] + G::template act<E>(gamma[k], a[i]));
		}
	}
	return r;
}

// The gauge group element exp(gamma) as an operator on element series:
// exp of the action of gamma. Augmentation-preserving because gamma has
// valuation >= 1.
template <class G, class E>
Series<E> exp_action(const G &g, const SeriesOf<G> &gamma, const Series<E> &a)
{
	if (gamma.valuation() < 1)
		throw PreconditionError("gauge operators need valuation >= 1");
	Series<E> acc = a;
	Series<E> cur = a;
	Rat inv_fact = 1;
	for (int k = 1; k <= a.trunc(); ++k)
	{
		cur = act_series(g, gamma, cur);
		inv_fact /= k;
		acc = acc + cur.scaled(inv_fact);
	}
	return acc;
}

// A Maurer-Cartan element: the checked constructor enforces defect = 0;
// the unchecked one exists for negative tests.
template <class G>
struct MCElement
{
	SeriesOf<G> omega;

	static MCElement checked(const G &g, SeriesOf<G> w)
	{
		for (int k = 0; k <= w.trunc(); ++k)
			g.validate(w[k]);
		if (!mc_defect(g, w).is_zero())
			throw PreconditionError("element does not satisfy the Maurer-Cartan equation");
		return MCElement{std::move(w)};
	}

	static MCElement unchecked(SeriesOf<G> w) { return MCElement{std::move(w)}; }

	bool operator==(const MCElement &o) const { return omega == o.omega; }
};

// exp(gamma) of the gauge group, stored in log coordinates.
template <class G>
struct GaugeElement
{
	SeriesOf<G> gamma;

	static GaugeElement make(const G &g, SeriesOf<G> ga)
	{
		if (ga.valuation() < 1)
			throw PreconditionError("gauge elements need valuation >= 1");
		for (int k = 0; k <= ga.trunc(); ++k)
			g.validate(ga[k]);
		return GaugeElement{std::move(ga)};
	}

	bool operator==(const GaugeElement &o) const { return gamma == o.gamma; }
};

// Element exp(alpha) of N_w, in log coordinates, attached to its base MC
// element; the group law is BCH over the twisted bracket.
template <class G>
struct TwoMorphism
{
	SeriesOf<G> alpha;
	MCElement<G> base;

	static TwoMorphism make(const G &g, SeriesOf<G> a, MCElement<G> w)
	{
		if (a.valuation() < 1)
			throw PreconditionError("2-morphisms need valuation >= 1");
		for (int k = 0; k <= a.trunc(); ++k)
			g.validate(a[k]);
		return TwoMorphism{std::move(a), std::move(w)};
	}

	bool operator==(const TwoMorphism &o) const
	{
		return alpha == o.alpha && base == o.base;
	}
};

// A DG Lie algebra morphism descriptor; commuting with d and the brackets
// is checked on the inputs the pushforward touches.
template <class G1, class G2>
struct DglaMorphism
{
	std::string name;
	std::function<typename G2::Elem(const typename G1::Elem &)> map;
};

template <class G1, class G2>
MCElement<G2> mc_pushforward(const G1 &g1, const G2 &g2, const DglaMorphism<G1, G2> &phi,
                             const MCElement<G1> &w)
{
	auto lift = [&](const SeriesOf<G1> &a) {
		SeriesOf<G2> r(a.trunc(), phi.map(a.zero_like()));
		for (int k = 0; k <= a.trunc(); ++k)
			r.set(k, phi.map(a[k]));
		return r;
	};
	SeriesOf<G2> image = lift(w.omega);
	if (!(lift(s_d(g1, w.omega)) == s_d(g2, image)))
		throw MorphismInvalidError("morphism '" + phi.name + "' does not commute with d");
	if (!(lift(s_bracket(g1, w.omega, w.omega)) == s_bracket(g2, image, image)))
		throw MorphismInvalidError("morphism '" + phi.name + "' does not commute with the bracket");
	return MCElement<G2>::checked(g2, image);
}

} // namespace defq
