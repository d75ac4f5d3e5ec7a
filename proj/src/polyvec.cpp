#include "defq/polyvec.hpp"

#include <algorithm>

namespace defq {

namespace {

// Merge two strictly increasing index tuples; nullopt on a repeated index,
// otherwise the merged tuple and the sign of the interleaving permutation.
std::optional<std::pair<PolyVec::IndexTuple, int>> merge_indices(const PolyVec::IndexTuple &a,
                                                                 const PolyVec::IndexTuple &b)
{
	PolyVec::IndexTuple m;
	m.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	int sign = 1;
	while (i < a.size() && j < b.size())
	{
		if (a[i] == b[j])
			return std::nullopt;
		if (a[i] < b[j])
			m.push_back(a[i++]);
		else
		{
			// b[j] jumps over the remaining a-entries.
			if ((a.size() - i) % 2 == 1)
				sign = -sign;
			m.push_back(b[j++]);
		}
	}
	while (i < a.size())
		m.push_back(a[i++]);
	while (j < b.size())
		m.push_back(b[j++]);
	return std::make_pair(std::move(m), sign);
}

} // namespace

PolyVec::PolyVec(int vars, int degree) : vars_(vars), degree_(degree)
{
	if (degree < -1)
		throw PreconditionError("polyvector degree below -1");
}

PolyVec PolyVec::function(const Poly &f)
{
	PolyVec r(f.vars(), -1);
	r.add_term({}, f);
	return r;
}

PolyVec PolyVec::coordinate(int vars, int i)
{
	return term(Poly::one(vars), {i});
}

PolyVec PolyVec::term(const Poly &coeff, const IndexTuple &indices)
{
	PolyVec r(coeff.vars(), (int)indices.size() - 1);
	for (int i : indices)
		if (i < 1 || i > coeff.vars())
			throw PreconditionError("wedge index dx" + std::to_string(i) + " out of range 1.." +
			                        std::to_string(coeff.vars()));
	// Sort, tracking the permutation sign; repeated indices give zero.
	IndexTuple s = indices;
	int sign = 1;
	for (size_t i = 0; i + 1 < s.size(); ++i)
		for (size_t j = 0; j + 1 < s.size() - i; ++j)
			if (s[j] > s[j + 1])
			{
				std::swap(s[j], s[j + 1]);
				sign = -sign;
			}
	for (size_t i = 0; i + 1 < s.size(); ++i)
		if (s[i] == s[i + 1])
			return r;
	r.add_term(s, sign == 1 ? coeff : -coeff);
	return r;
}

void PolyVec::add_term(const IndexTuple &indices, const Poly &coeff)
{
	if ((int)indices.size() != degree_ + 1)
		throw PreconditionError("index tuple size does not match polyvector degree");
	if (coeff.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(indices, coeff);
	if (!inserted)
	{
		it->second += coeff;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

PolyVec PolyVec::operator-() const
{
	PolyVec r(vars_, degree_);
	for (auto &[t, f] : terms_)
		r.terms_.emplace(t, -f);
	return r;
}

PolyVec PolyVec::operator+(const PolyVec &o) const
{
	if (vars_ != o.vars_)
		throw ContextMismatchError("polyvector sum over different variable counts");
	if (degree_ != o.degree_)
	{
		// zeros are degree-agnostic
		if (o.terms_.empty())
			return *this;
		if (terms_.empty())
			return o;
		throw ContextMismatchError("polyvector sum needs matching degrees");
	}
	PolyVec r = *this;
	for (auto &[t, f] : o.terms_)
		r.add_term(t, f);
	return r;
}

PolyVec PolyVec::scaled(const Rat &c) const
{
	PolyVec r(vars_, degree_);
	if (c == 0)
		return r;
	for (auto &[t, f] : terms_)
		r.terms_.emplace(t, f.scaled(c));
	return r;
}

PolyVec wedge(const PolyVec &a, const PolyVec &b)
{
	if (a.degree() < 0 || b.degree() < 0)
		throw PreconditionError("wedge needs operands of degree >= 0");
	if (a.vars() != b.vars())
		throw ContextMismatchError("wedge over different variable counts");
	PolyVec r(a.vars(), a.degree() + b.degree() + 1);
	for (const auto &[ta, fa] : a.terms())
		for (const auto &[tb, fb] : b.terms())
		{
			auto m = merge_indices(ta, tb);
			if (!m)
				continue;
			Poly c = fa * fb;
			r.add_term(m->first, m->second == 1 ? c : -c);
		}
	return r;
}

PolyVec schouten_bracket(const PolyVec &a, const PolyVec &b)
{
	if (a.vars() != b.vars())
		throw ContextMismatchError("bracket over different variable counts");
	const int vars = a.vars();
	const int p = a.degree(), q = b.degree();
	// Two functions bracket to zero; the degree -2 space is trivial, so the
	// zero is reported in degree -1.
	PolyVec r(vars, std::max(p + q, -1));
	// Expansion of the decomposable-field convention
	//   [x_1^...^x_m, y_1^...^y_n] =
	//     sum (-1)^(i+j) [x_i, y_j] ^ x_1^..^x_i^..^x_m ^ y_1^..^y_j^..^y_n
	// with [x, f] = x(f), written out on basis terms f * th_S, g * th_T:
	//   (-1)^(m-1) sum_i (-1)^(i-1) f d_{s_i}(g) th_{S\s_i} ^ th_T
	//   +          sum_j (-1)^j     g d_{t_j}(f) th_S ^ th_{T\t_j}.
	for (const auto &[ts, f] : a.terms())
		for (const auto &[tt, g] : b.terms())
		{
			const int m = (int)ts.size();
			for (size_t i = 0; i < ts.size(); ++i)
			{
				Poly dg = g.derivative(ts[i]);
				if (dg.is_zero())
					continue;
				PolyVec::IndexTuple rest;
				for (size_t u = 0; u < ts.size(); ++u)
					if (u != i)
						rest.push_back(ts[u]);
				auto merged = merge_indices(rest, tt);
				if (!merged)
					continue;
				int s = ((m - 1) + (int)i) % 2 == 0 ? 1 : -1;
				s *= merged->second;
				Poly c = f * dg;
				r.add_term(merged->first, s == 1 ? c : -c);
			}
			for (size_t j = 0; j < tt.size(); ++j)
			{
				Poly df = f.derivative(tt[j]);
				if (df.is_zero())
					continue;
				PolyVec::IndexTuple rest;
				for (size_t u = 0; u < tt.size(); ++u)
					if (u != j)
						rest.push_back(tt[u]);
				auto merged = merge_indices(ts, rest);
				if (!merged)
					continue;
				int s = (j + 1) % 2 == 0 ? 1 : -1;
				s *= merged->second;
				Poly c = g * df;
				r.add_term(merged->first, s == 1 ? c : -c);
			}
		}
	return r;
}

} // namespace defq
