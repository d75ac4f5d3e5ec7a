#include "defq/locpoly.hpp"

#include <sstream>

namespace defq {

LocPoly::LocPoly(Poly numerator, Poly s, unsigned k)
    : num_(std::move(numerator)), s_(std::move(s)), k_(k)
{
	if (s_.is_zero())
		throw PreconditionError("localization at the zero polynomial");
	if (num_.vars() != s_.vars())
		throw ContextMismatchError("numerator and localized element over different variable counts");
	normalize();
}

void LocPoly::normalize()
{
	if (num_.is_zero())
	{
		k_ = 0;
		return;
	}
	if (s_.is_constant())
	{
		// C_s = C for units; fold the constant into the numerator.
		Rat c = s_.constant_term();
		for (unsigned i = 0; i < k_; ++i)
			num_ = num_.scaled(Rat(1) / c);
		k_ = 0;
		return;
	}
	while (k_ > 0)
	{
		auto q = num_.divided_by(s_);
		if (!q)
			break;
		num_ = *q;
		--k_;
	}
}

void LocPoly::check_same(const LocPoly &o) const
{
	if (!(s_ == o.s_))
		throw ContextMismatchError("elements of different principal localizations");
}

LocPoly LocPoly::operator+(const LocPoly &o) const
{
	check_same(o);
	unsigned k = std::max(k_, o.k_);
	Poly a = num_ * s_.pow(k - k_);
	Poly b = o.num_ * s_.pow(k - o.k_);
	return LocPoly(a + b, s_, k);
}

LocPoly LocPoly::operator*(const LocPoly &o) const
{
	check_same(o);
	return LocPoly(num_ * o.num_, s_, k_ + o.k_);
}

LocPoly LocPoly::derivative(int i, unsigned m) const
{
	LocPoly cur = *this;
	for (unsigned t = 0; t < m; ++t)
	{
		if (cur.k_ == 0)
			cur = LocPoly(cur.num_.derivative(i), s_, 0);
		else
			cur = LocPoly(cur.num_.derivative(i) * s_ - Rat(cur.k_) * (cur.num_ * s_.derivative(i)),
			              s_, cur.k_ + 1);
	}
	return cur;
}

LocPoly LocPoly::derivative(const Exponents &alpha) const
{
	LocPoly cur = *this;
	for (int v = 0; v < vars() && !cur.is_zero(); ++v)
		if (alpha[v] > 0)
			cur = cur.derivative(v + 1, alpha[v]);
	return cur;
}

LocPoly LocPoly::restricted(const Poly &t) const
{
	if (t.is_zero())
		throw PreconditionError("restriction to the zero locus");
	// f/s^k = f*t^k / (st)^k
	return LocPoly(num_ * t.pow(k_), s_ * t, k_);
}

bool LocPoly::operator==(const LocPoly &o) const
{
	return s_ == o.s_ && k_ == o.k_ && num_ == o.num_;
}

std::string LocPoly::str() const
{
	std::ostringstream os;
	if (k_ == 0)
		os << num_.str();
	else
		os << "(" << num_.str() << ") / (" << s_.str() << ")^" << k_;
	return os.str();
}

} // namespace defq
