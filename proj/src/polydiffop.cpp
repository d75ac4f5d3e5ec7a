#include "defq/polydiffop.hpp"

#include <functional>

namespace defq {

namespace {

// Enumerate all ways to split the multi-index alpha into `parts` summands,
// calling fn(deltas, m) with the per-variable multinomial coefficient
// m = prod_v alpha[v]! / prod_t deltas[t][v]!.
void enumerate_splittings(const Exponents &alpha, int parts,
                          const std::function<void(const std::vector<Exponents> &, const Int &)> &fn)
{
	const int vars = (int)alpha.size();
	std::vector<Exponents> deltas((size_t)parts, Exponents((size_t)vars, 0));
	// Per variable, walk compositions of alpha[v] into `parts` parts.
	auto var_rec = [&](auto &self, int v, Int coeff) -> void {
		if (v == vars)
		{
			fn(deltas, coeff);
			return;
		}
		uint32_t n = alpha[(size_t)v];
		auto part_rec = [&](auto &self2, int t, uint32_t left, Int c) -> void {
			if (t == parts - 1)
			{
				deltas[(size_t)t][(size_t)v] = left;
				// c currently holds n! / (chosen parts factorials); divide
				// by the last part's factorial.
				self(self, v + 1, coeff * c / factorial(left));
				return;
			}
			for (uint32_t take = 0; take <= left; ++take)
			{
				deltas[(size_t)t][(size_t)v] = take;
				self2(self2, t + 1, left - take, c / factorial(take));
			}
		};
		part_rec(part_rec, 0, n, factorial(n));
	};
	var_rec(var_rec, 0, Int(1));
}

} // namespace

PolyDiffOp::PolyDiffOp(int vars, int degree) : vars_(vars), degree_(degree)
{
	if (degree < -1)
		throw PreconditionError("polydifferential operator degree below -1");
}

PolyDiffOp PolyDiffOp::function(const Poly &f)
{
	PolyDiffOp r(f.vars(), -1);
	r.add_term({}, f);
	return r;
}

PolyDiffOp PolyDiffOp::mu(int vars)
{
	PolyDiffOp r(vars, 1);
	r.add_term({Exponents((size_t)vars, 0), Exponents((size_t)vars, 0)}, Poly::one(vars));
	return r;
}

PolyDiffOp PolyDiffOp::term(const Poly &coeff, const Slots &slots)
{
	PolyDiffOp r(coeff.vars(), (int)slots.size() - 1);
	for (const auto &a : slots)
		if ((int)a.size() != coeff.vars())
			throw ContextMismatchError("slot multi-index length does not match variable count");
	r.add_term(slots, coeff);
	return r;
}

void PolyDiffOp::add_term(const Slots &slots, const Poly &coeff)
{
	if ((int)slots.size() != degree_ + 1)
		throw PreconditionError("slot count does not match operator degree");
	if (coeff.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(slots, coeff);
	if (!inserted)
	{
		it->second += coeff;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

PolyDiffOp PolyDiffOp::operator-() const
{
	PolyDiffOp r(vars_, degree_);
	for (auto &[s, f] : terms_)
		r.terms_.emplace(s, -f);
	return r;
}

PolyDiffOp PolyDiffOp::operator+(const PolyDiffOp &o) const
{
	if (vars_ != o.vars_)
		throw ContextMismatchError("operator sum over different variable counts");
	if (degree_ != o.degree_)
	{
		// zeros are degree-agnostic
		if (o.terms_.empty())
			return *this;
		if (terms_.empty())
			return o;
		throw ContextMismatchError("operator sum needs matching degrees");
	}
	PolyDiffOp r = *this;
	for (auto &[s, f] : o.terms_)
		r.add_term(s, f);
	return r;
}

PolyDiffOp PolyDiffOp::scaled(const Rat &c) const
{
	PolyDiffOp r(vars_, degree_);
	if (c == 0)
		return r;
	for (auto &[s, f] : terms_)
		r.terms_.emplace(s, f.scaled(c));
	return r;
}

bool PolyDiffOp::is_normalized() const
{
	if (degree_ == -1)
		return true;
	for (auto &[slots, f] : terms_)
		for (auto &a : slots)
			if (total_degree(a) == 0)
				return false;
	return true;
}

int PolyDiffOp::max_slot_order() const
{
	int m = 0;
	for (auto &[slots, f] : terms_)
		for (auto &a : slots)
			m = std::max(m, (int)total_degree(a));
	return m;
}

PolyDiffOp circle(const PolyDiffOp &phi, const PolyDiffOp &psi)
{
	if (phi.vars() != psi.vars())
		throw ContextMismatchError("composition over different variable counts");
	const int p = phi.degree(), q = psi.degree();
	// p + q = -2 only for two constants, whose compositions vanish; report
	// that zero in the trivial degree -1 space.
	PolyDiffOp r(phi.vars(), std::max(p + q, -1));
	if (p < 0)
		return r; // nothing to insert into
	for (int i = 0; i <= p; ++i)
	{
		int slot_sign = ((i * q) % 2 == 0) ? 1 : -1;
		for (const auto &[sa, f] : phi.terms())
			for (const auto &[sb, g] : psi.terms())
			{
				// Distribute d^{sa[i]} over g and the q+1 arguments of psi.
				enumerate_splittings(
				    sa[(size_t)i], q + 2,
				    [&](const std::vector<Exponents> &deltas, const Int &m) {
					    Poly dg = g.derivative(deltas[0]);
					    if (dg.is_zero())
						    return;
					    PolyDiffOp::Slots slots;
					    slots.reserve((size_t)(p + q + 1));
					    for (int t = 0; t < i; ++t)
						    slots.push_back(sa[(size_t)t]);
					    for (int t = 0; t <= q; ++t)
					    {
						    Exponents e = sb[(size_t)t];
						    for (int v = 0; v < phi.vars(); ++v)
							    e[(size_t)v] += deltas[(size_t)(t + 1)][(size_t)v];
						    slots.push_back(std::move(e));
					    }
					    for (int t = i + 1; t <= p; ++t)
						    slots.push_back(sa[(size_t)t]);
					    Poly c = (f * dg).scaled(Rat(m));
					    r.add_term(slots, slot_sign == 1 ? c : -c);
				    });
			}
	}
	return r;
}

PolyDiffOp gerstenhaber_bracket(const PolyDiffOp &phi, const PolyDiffOp &psi)
{
	const int p = phi.degree(), q = psi.degree();
	PolyDiffOp a = circle(phi, psi);
	PolyDiffOp b = circle(psi, phi);
	return ((p * q) % 2 == 0) ? a - b : a + b;
}

PolyDiffOp hochschild_d(const PolyDiffOp &phi)
{
	return gerstenhaber_bracket(PolyDiffOp::mu(phi.vars()), phi);
}

Series<PolyDiffOp> moyal_mc(const std::vector<std::vector<Rat>> &pi, const Context &ctx)
{
	const int d = ctx.vars;
	if ((int)pi.size() != d)
		throw PreconditionError("pi must be a d x d matrix");
	for (auto &row : pi)
		if ((int)row.size() != d)
			throw PreconditionError("pi must be a d x d matrix");
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
			if (pi[(size_t)i][(size_t)j] != -pi[(size_t)j][(size_t)i])
				throw PreconditionError("pi must be antisymmetric");

	Series<PolyDiffOp> w(ctx.trunc, PolyDiffOp::zero(d, 1));
	// Level k terms: pairs of exponent vectors with coefficient
	// sum over index sequences; built inductively from level k-1.
	using Level = std::map<std::pair<Exponents, Exponents>, Rat>;
	Level cur;
	cur[{Exponents((size_t)d, 0), Exponents((size_t)d, 0)}] = 1;
	for (int k = 1; k <= ctx.trunc; ++k)
	{
		Level next;
		for (const auto &[ab, c] : cur)
			for (int i = 0; i < d; ++i)
				for (int j = 0; j < d; ++j)
				{
					const Rat &pij = pi[(size_t)i][(size_t)j];
					if (pij == 0)
						continue;
					auto key = ab;
					key.first[(size_t)i] += 1;
					key.second[(size_t)j] += 1;
					next[key] += c * pij;
				}
		cur = next;
		PolyDiffOp wk(d, 1);
		Rat inv_fact = Rat(1) / Rat(factorial((unsigned)k));
		for (const auto &[ab, c] : cur)
			if (c != 0)
				wk.add_term({ab.first, ab.second}, Poly::constant(d, c * inv_fact));
		w.set(k, wk);
	}
	return w;
}

Series<PolyDiffOp> constants_op(const Series<Poly> &a)
{
	int vars = a[0].vars();
	Series<PolyDiffOp> r(a.trunc(), PolyDiffOp::zero(vars, -1));
	for (int k = 0; k <= a.trunc(); ++k)
		if (!a[k].is_zero())
			r.set(k, PolyDiffOp::function(a[k]));
	return r;
}

} // namespace defq
