#pragma once

#include <optional>
#include <type_traits>

#include "defq/deligne.hpp"
#include "defq/report.hpp"
#include "defq/sampling.hpp"

namespace defq {

// The geometric side: deformed algebras A_w on the base C = Q[x1..xd] and
// its principal localizations. Elements are scalar series (Series<Poly> or
// Series<LocPoly>); the augmentation is the h^0 coefficient.

// c1 *_w c2 = c1*c2 + w(c1, c2), R-bilinear.
template <class E>
Series<E> star_mul(const Series<PolyDiffOp> &w, const Series<E> &a, const Series<E> &b)
{
	if (w.valuation() < 1)
		throw PreconditionError("star cochains must vanish at h^0");
	std::vector<Series<E>> args{a, b};
	return a * b + apply_series_op(w, std::span<const Series<E>>(args));
}

template <class E>
Series<E> assoc_defect(const Series<PolyDiffOp> &w, const Series<E> &a, const Series<E> &b,
                       const Series<E> &c)
{
	return star_mul(w, star_mul(w, a, b), c) - star_mul(w, a, star_mul(w, b, c));
}

// exp with respect to the star product; alpha must have valuation >= 1.
template <class E>
Series<E> star_exp(const Series<PolyDiffOp> &w, const Series<E> &alpha)
{
	if (alpha.valuation() < 1)
		throw PreconditionError("star exponentials need valuation >= 1");
	Series<E> one(alpha.trunc(), zero_like(alpha[0]));
	one.set(0, one_like(alpha[0]));
	return exp_nilpotent(
	    alpha, one, [&](const Series<E> &x, const Series<E> &y) { return star_mul(w, x, y); },
	    alpha.trunc());
}

// Conjugation by the star unit exp_*(alpha).
template <class E>
Series<E> star_conj(const Series<PolyDiffOp> &w, const Series<E> &alpha, const Series<E> &b)
{
	return star_mul(w, star_mul(w, star_exp(w, alpha), b), star_exp(w, -alpha));
}

// exp(ad_*(alpha)) route of the same map.
template <class E>
Series<E> star_ad_exp(const Series<PolyDiffOp> &w, const Series<E> &alpha, const Series<E> &b)
{
	Series<E> acc = b;
	Series<E> cur = b;
	Rat inv_fact = 1;
	for (int k = 1; k <= b.trunc(); ++k)
	{
		cur = star_mul(w, alpha, cur) - star_mul(w, cur, alpha);
		inv_fact /= k;
		acc = acc + cur.scaled(inv_fact);
	}
	return acc;
}

// ad_*(alpha) = [alpha, -]_* as a symbolic degree-0 operator: the bilinear
// cochain contracted with alpha in either slot.
Series<PolyDiffOp> star_ad_operator(const Series<PolyDiffOp> &w, const Series<Poly> &alpha);

// b |-> {alpha, b}_w as a symbolic vector field (Poisson side).
Series<PolyVec> poisson_ad_operator(const Series<PolyVec> &w, const Series<Poly> &alpha);

// Invertibility of the augmentation in the base ring. For C the units are
// the nonzero constants; for C_s an element is a unit exactly when its
// numerator divides a power of s.
struct BaseInverse
{
	std::optional<Poly> inv_poly;
	std::optional<LocPoly> inv_loc;
	std::string needed; // the element to localize at, printed, when not a unit
};
BaseInverse base_inverse(const Poly &f);
BaseInverse base_inverse(const LocPoly &f);

template <class E>
struct StarInverseResult
{
	std::optional<Series<E>> inverse;
	std::string needed; // which localization would make the augmentation a unit
	bool ok() const { return inverse.has_value(); }
};

// Invert via the augmentation: with b the base inverse of aug(a) one has
// a *_w b = 1 - eps with eps of valuation >= 1, and the finite geometric
// series sum eps^{*k} completes the inverse.
template <class E>
StarInverseResult<E> star_inverse(const Series<PolyDiffOp> &w, const Series<E> &a)
{
	BaseInverse bi = base_inverse(a[0]);
	Series<E> b(a.trunc(), zero_like(a[0]));
	if constexpr (std::is_same_v<E, Poly>)
	{
		if (!bi.inv_poly)
			return {std::nullopt, bi.needed};
		b.set(0, *bi.inv_poly);
	}
	else
	{
		if (!bi.inv_loc)
			return {std::nullopt, bi.needed};
		b.set(0, *bi.inv_loc);
	}
	Series<E> one(a.trunc(), zero_like(a[0]));
	one.set(0, one_like(a[0]));
	Series<E> eps = one - star_mul(w, a, b);
	// sum_{k<=N} eps^{*k}
	Series<E> geo = one;
	Series<E> power = one;
	for (int k = 1; k <= a.trunc(); ++k)
	{
		power = star_mul(w, power, eps);
		geo = geo + power;
	}
	return {star_mul(w, b, geo), ""};
}

// Restriction maps of scalars: C -> C_s and C_s -> C_{st}.
Series<LocPoly> embed_series(const Series<Poly> &a, const Poly &s);
Series<LocPoly> restrict_series(const Series<LocPoly> &a, const Poly &t);

// ---- the geometrization verifier ---------------------------------------

struct GeoBudget
{
	int grid_degree = 3;
	int samples = 8;
	uint64_t seed = 1;
};

// Localization stages alone (invertibility after localizing, restriction
// homomorphism, cover compatibility); merged into geo_verify.
void localization_checks_assoc(Report &report, const Context &ctx, const Series<PolyDiffOp> &w,
                               const Poly &s, const std::optional<Poly> &t, int grid_degree);
void localization_checks_poisson(Report &report, const Context &ctx, const Series<PolyVec> &w,
                                 const Poly &s, const std::optional<Poly> &t, int grid_degree);

Report geo_verify_assoc(const Context &ctx, const Series<PolyDiffOp> &w,
                        const std::vector<Series<PolyDiffOp>> &gauge_logs,
                        const std::optional<Poly> &s, const std::optional<Poly> &t,
                        const GeoBudget &budget);

Report geo_verify_poisson(const Context &ctx, const Series<PolyVec> &w,
                          const std::vector<Series<PolyVec>> &gauge_logs,
                          const std::optional<Poly> &s, const std::optional<Poly> &t,
                          const GeoBudget &budget);

} // namespace defq
