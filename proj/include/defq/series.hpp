#pragma once

#include <vector>

#include "defq/context.hpp"
#include "defq/rational.hpp"

namespace defq {

// Truncated h-adic element sum_{j=0..N} h^j * v_j with coefficients in a
// value space V. The coefficient vector always has length exactly N+1;
// every product discards h-degrees above N. V must provide +, unary -,
// scaled(Rat), is_zero() and ==; a bilinear product is supplied per call
// site by the client (polynomial multiplication, wedge, a DGLA bracket,
// a star product...).
template <class V>
class Series
{
public:
	explicit Series(std::vector<V> coeffs) : c_(std::move(coeffs))
	{
		if (c_.empty())
			throw PreconditionError("series needs at least the h^0 coefficient");
	}

	Series(int trunc, const V &zero_coeff) : c_((size_t)trunc + 1, zero_coeff) {}

	int trunc() const { return (int)c_.size() - 1; }
	const V &operator[](int j) const { return c_[(size_t)j]; }
	const std::vector<V> &coeffs() const { return c_; }

	void set(int j, V v)
	{
		if (j < 0 || j > trunc())
			throw PreconditionError("series coefficient index out of range");
		c_[(size_t)j] = std::move(v);
	}

	bool is_zero() const
	{
		for (auto &v : c_)
			if (!v.is_zero())
				return false;
		return true;
	}

	// Least j with nonzero coefficient; N+1 for the zero series.
	int valuation() const
	{
		for (int j = 0; j <= trunc(); ++j)
			if (!c_[(size_t)j].is_zero())
				return j;
		return trunc() + 1;
	}

	Series operator-() const
	{
		Series r = *this;
		for (auto &v : r.c_)
			v = -v;
		return r;
	}

	Series operator+(const Series &o) const
	{
		check_same(o);
		Series r = *this;
		for (int j = 0; j <= trunc(); ++j)
			r.c_[(size_t)j] = r.c_[(size_t)j] + o.c_[(size_t)j];
		return r;
	}

	Series operator-(const Series &o) const { return *this + (-o); }

	Series scaled(const Rat &q) const
	{
		Series r = *this;
		for (auto &v : r.c_)
			v = v.scaled(q);
		return r;
	}

	// Cauchy product with coefficientwise multiplication mul(V, V) -> V.
	template <class MulFn>
	Series mul_with(const Series &o, MulFn mul) const
	{
		check_same(o);
		Series r(trunc(), zero_like());
		for (int i = 0; i <= trunc(); ++i)
		{
			if (c_[(size_t)i].is_zero())
				continue;
			for (int j = 0; i + j <= trunc(); ++j)
			{
				if (o.c_[(size_t)j].is_zero())
					continue;
				r.c_[(size_t)(i + j)] =
				    r.c_[(size_t)(i + j)] + mul(c_[(size_t)i], o.c_[(size_t)j]);
			}
		}
		return r;
	}

	Series operator*(const Series &o) const
	{
		return mul_with(o, [](const V &a, const V &b) { return a * b; });
	}

	// Multiplication by h^j.
	Series shifted(int j) const
	{
		Series r(trunc(), zero_like());
		for (int i = 0; i + j <= trunc(); ++i)
			r.c_[(size_t)(i + j)] = c_[(size_t)i];
		return r;
	}

	// Base change h -> sum_{j>=1} subst[j] * h'^j, re-truncated at
	// new_trunc. subst[0] must be zero (the substitution has to be local).
	Series reparametrized(const std::vector<Rat> &subst, int new_trunc) const
	{
		if (!subst.empty() && subst[0] != 0)
			throw PreconditionError("substitution with nonzero constant term is not local");
		// Dense powers of the substitution in h', truncated.
		std::vector<std::vector<Rat>> pw;
		std::vector<Rat> p((size_t)new_trunc + 1, Rat(0));
		p[0] = 1;
		pw.push_back(p);
		for (int i = 1; i <= trunc(); ++i)
		{
			std::vector<Rat> q((size_t)new_trunc + 1, Rat(0));
			for (int a = 0; a <= new_trunc; ++a)
			{
				if (pw.back()[(size_t)a] == 0)
					continue;
				for (int b = 1; a + b <= new_trunc && b < (int)subst.size(); ++b)
					q[(size_t)(a + b)] += pw.back()[(size_t)a] * subst[(size_t)b];
			}
			pw.push_back(q);
		}
		Series r(new_trunc, zero_like());
		for (int i = 0; i <= trunc(); ++i)
		{
			if (c_[(size_t)i].is_zero())
				continue;
			for (int m = 0; m <= new_trunc; ++m)
				if (pw[(size_t)i][(size_t)m] != 0)
					r.c_[(size_t)m] = r.c_[(size_t)m] + c_[(size_t)i].scaled(pw[(size_t)i][(size_t)m]);
		}
		return r;
	}

	bool operator==(const Series &o) const { return c_ == o.c_; }

	V zero_like() const
	{
		V z = c_[0];
		return z - z;
	}

private:
	std::vector<V> c_;

	void check_same(const Series &o) const
	{
		if (trunc() != o.trunc())
			throw ContextMismatchError("series of different truncation orders");
	}
};

// exp in a pronilpotent algebra: sum_{k=0..order} a^k / k!. The argument
// must have valuation >= 1 in the h-adic sense so that the sum is finite;
// callers pass order = N. mul is the algebra product.
template <class A, class MulFn>
A exp_nilpotent(const A &a, const A &one, MulFn mul, int order)
{
	A acc = one;
	A power = one;
	Rat inv_fact = 1;
	for (int k = 1; k <= order; ++k)
	{
		power = mul(power, a);
		inv_fact /= k;
		acc = acc + power.scaled(inv_fact);
	}
	return acc;
}

// log(one + b) = sum_{k=1..order} (-1)^(k+1) b^k / k for b = a - one.
template <class A, class MulFn>
A log_nilpotent(const A &a, const A &one, MulFn mul, int order)
{
	A b = a - one;
	A acc = b - b;
	A power = one;
	for (int k = 1; k <= order; ++k)
	{
		power = mul(power, b);
		Rat c = Rat(k % 2 == 1 ? 1 : -1) / k;
		acc = acc + power.scaled(c);
	}
	return acc;
}

template <class V, class MulFn>
Series<V> exp_series(const Series<V> &a, const V &one_coeff, MulFn mul)
{
	if (a.valuation() < 1)
		throw PreconditionError("exp needs a series of valuation >= 1");
	Series<V> one(a.trunc(), a.zero_like());
	one.set(0, one_coeff);
	auto smul = [&](const Series<V> &x, const Series<V> &y) { return x.mul_with(y, mul); };
	return exp_nilpotent(a, one, smul, a.trunc());
}

template <class V, class MulFn>
Series<V> log_series(const Series<V> &a, const V &one_coeff, MulFn mul)
{
	if (!(a[0] == one_coeff))
		throw PreconditionError("log needs a series of the form 1 + (valuation >= 1)");
	Series<V> one(a.trunc(), a.zero_like());
	one.set(0, one_coeff);
	auto smul = [&](const Series<V> &x, const Series<V> &y) { return x.mul_with(y, mul); };
	return log_nilpotent(a, one, smul, a.trunc());
}

} // namespace defq
