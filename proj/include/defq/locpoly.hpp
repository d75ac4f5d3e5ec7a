#pragma once

#include "defq/poly.hpp"

namespace defq {

// Element of the principal localization C_s = Q[x1..xd][1/s], stored as
// numerator / s^k. Normal form: when k > 0, s does not divide the
// numerator (powers of s are cancelled greedily), and the zero element has
// k = 0. Equality of normal forms then decides equality in C_s, because
// C is an integral domain.
class LocPoly
{
public:
	LocPoly(Poly numerator, Poly s, unsigned k);

	// f viewed inside C_s (denominator exponent 0).
	static LocPoly embed(const Poly &f, const Poly &s) { return LocPoly(f, s, 0); }
	static LocPoly zero(const Poly &s) { return LocPoly(Poly::zero(s.vars()), s, 0); }
	static LocPoly one(const Poly &s) { return LocPoly(Poly::one(s.vars()), s, 0); }

	const Poly &numerator() const { return num_; }
	const Poly &s() const { return s_; }
	unsigned power() const { return k_; }
	int vars() const { return s_.vars(); }
	bool is_zero() const { return num_.is_zero(); }

	LocPoly operator-() const { return LocPoly(-num_, s_, k_); }
	LocPoly operator+(const LocPoly &o) const;
	LocPoly operator-(const LocPoly &o) const { return *this + (-o); }
	LocPoly operator*(const LocPoly &o) const;
	LocPoly &operator+=(const LocPoly &o) { return *this = *this + o; }
	LocPoly &operator-=(const LocPoly &o) { return *this = *this - o; }
	LocPoly scaled(const Rat &c) const { return LocPoly(num_.scaled(c), s_, k_); }

	// Quotient rule: d(f/s^k) = (df*s - k*f*ds)/s^(k+1), then normalize.
	LocPoly derivative(int i, unsigned m = 1) const;
	LocPoly derivative(const Exponents &alpha) const;

	// Restriction C_s -> C_{st}: same rational function with denominator
	// re-expressed in powers of s*t.
	LocPoly restricted(const Poly &t) const;

	bool operator==(const LocPoly &o) const;

	// Description "(<numerator>) / s^k"; diagnostic, not grammar text.
	std::string str() const;

private:
	Poly num_;
	Poly s_;
	unsigned k_;

	void normalize();
	void check_same(const LocPoly &o) const;
};

inline LocPoly operator*(const Poly &f, const LocPoly &g)
{
	return LocPoly(f * g.numerator(), g.s(), g.power());
}
inline LocPoly operator*(const Rat &c, const LocPoly &g) { return g.scaled(c); }

} // namespace defq
