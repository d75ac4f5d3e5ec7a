#pragma once

#include <span>

#include "defq/element.hpp"
#include "defq/series.hpp"

namespace defq {

// Polydifferential operator of degree p >= -1 in coordinate form: a sum of
// terms f * (d^{a_0} (x) ... (x) d^{a_p}) acting on p+1 arguments by
//   (c_0,...,c_p) |-> sum f * d^{a_0}(c_0) *...* d^{a_p}(c_p).
// Degree -1 stores a bare coefficient (no slots). Terms are kept sorted
// and merged, zero coefficients dropped.
class PolyDiffOp
{
public:
	using Slots = std::vector<Exponents>; // p+1 derivative multi-indices
	using TermMap = std::map<Slots, Poly>;

	PolyDiffOp(int vars, int degree);

	static PolyDiffOp zero(int vars, int degree) { return PolyDiffOp(vars, degree); }
	static PolyDiffOp function(const Poly &f);
	// The multiplication cochain mu(c0, c1) = c0*c1, the single term (1; (0,0)).
	static PolyDiffOp mu(int vars);
	static PolyDiffOp term(const Poly &coeff, const Slots &slots);

	int vars() const { return vars_; }
	int degree() const { return degree_; }
	int arity() const { return degree_ + 1; }
	bool is_zero() const { return terms_.empty(); }
	const TermMap &terms() const { return terms_; }

	PolyDiffOp operator-() const;
	PolyDiffOp operator+(const PolyDiffOp &o) const;
	PolyDiffOp operator-(const PolyDiffOp &o) const { return *this + (-o); }
	PolyDiffOp scaled(const Rat &c) const;
	// The zero operator lives in every graded piece, so empty values
	// compare equal across degrees.
	bool operator==(const PolyDiffOp &o) const
	{
		if (vars_ != o.vars_)
			return false;
		if (terms_.empty() && o.terms_.empty())
			return true;
		return degree_ == o.degree_ && terms_ == o.terms_;
	}

	void add_term(const Slots &slots, const Poly &coeff);

	// True iff every slot of every term has a nonempty multi-index
	// (equivalently the operator kills any argument equal to 1), or the
	// degree is -1.
	bool is_normalized() const;

	// Highest |a| over slots and terms; 0 for degree -1 or zero operators.
	int max_slot_order() const;

	template <class E>
	E apply(std::span<const E> args) const
	{
		if (degree_ < 0)
			throw PreconditionError("degree -1 operators are constants; use value()");
		if ((int)args.size() != arity())
			throw PreconditionError("operator arity mismatch: degree " + std::to_string(degree_) +
			                        " needs " + std::to_string(arity()) + " arguments");
		const E &proto = args[0];
		E r = zero_like(proto);
		for (const auto &[slots, f] : terms_)
		{
			E t = embed_poly(f, proto);
			for (int i = 0; i < arity(); ++i)
				t = t * args[(size_t)i].derivative(slots[(size_t)i]);
			r += t;
		}
		return r;
	}

	// Degree -1 value viewed inside the element space of `proto`.
	template <class E>
	E value(const E &proto) const
	{
		if (degree_ != -1)
			throw PreconditionError("value() is only for degree -1 operators");
		E r = zero_like(proto);
		for (const auto &[slots, f] : terms_)
			r += embed_poly(f, proto);
		return r;
	}

private:
	int vars_;
	int degree_;
	TermMap terms_;
};

// Gerstenhaber circle product: phi o psi = sum_i (-1)^(i*q) phi o_i psi,
// where o_i inserts psi into slot i and the derivative multi-index of that
// slot is distributed over psi by the Leibniz rule.
PolyDiffOp circle(const PolyDiffOp &phi, const PolyDiffOp &psi);

// [phi, psi] = phi o psi - (-1)^(pq) psi o phi.
PolyDiffOp gerstenhaber_bracket(const PolyDiffOp &phi, const PolyDiffOp &psi);

// Shifted Hochschild differential, realized as d(phi) = [mu, phi]. This
// sign makes the Maurer-Cartan equation for a cochain w agree exactly with
// associativity of the product c1*c2 + w(c1,c2).
PolyDiffOp hochschild_d(const PolyDiffOp &phi);

// Maurer-Cartan element of the Moyal product for a constant antisymmetric
// matrix pi: the h^k coefficient is
//   (1/k!) * sum pi^{i1 j1}...pi^{ik jk} d_{i1..ik} (x) d_{j1..jk}.
Series<PolyDiffOp> moyal_mc(const std::vector<std::vector<Rat>> &pi, const Context &ctx);

// R-multilinear evaluation of an operator series on argument series,
// truncated at N.
template <class E>
Series<E> apply_series_op(const Series<PolyDiffOp> &phi, std::span<const Series<E>> args)
{
	const int n = phi.trunc();
	const int arity = phi[0].arity();
	if (arity < 1)
		throw PreconditionError("degree -1 operator series are constants; use value_series()");
	if ((int)args.size() != arity)
		throw PreconditionError("operator series arity mismatch");
	for (auto &a : args)
		if (a.trunc() != n)
			throw ContextMismatchError("series of different truncation orders");
	const E &proto = args[0][0];
	Series<E> r(n, zero_like(proto));
	// Enumerate h-degree splits k + e_0 + ... + e_{arity-1} <= N.
	std::vector<const E *> picked((size_t)arity);
	auto rec = [&](auto &self, int slot, int used, int k) -> void {
		if (slot == arity)
		{
			std::vector<E> vals;
			vals.reserve((size_t)arity);
			for (auto *p : picked)
				vals.push_back(*p);
			E v = phi[k].template apply<E>(std::span<const E>(vals));
			r.set(used + k, r[used + k] + v);
			return;
		}
		for (int e = 0; used + e + k <= n; ++e)
		{
			if (args[(size_t)slot][e].is_zero())
				continue;
			picked[(size_t)slot] = &args[(size_t)slot][e];
			self(self, slot + 1, used + e, k);
		}
	};
	for (int k = 0; k <= n; ++k)
	{
		if (phi[k].is_zero())
			continue;
		rec(rec, 0, 0, k);
	}
	return r;
}

// Degree -1 operator series viewed as an element series.
template <class E>
Series<E> value_series(const Series<PolyDiffOp> &phi, const E &proto)
{
	Series<E> r(phi.trunc(), zero_like(proto));
	for (int k = 0; k <= phi.trunc(); ++k)
		r.set(k, phi[k].template value<E>(proto));
	return r;
}

// Element series viewed as a degree -1 operator series (polynomial base).
Series<PolyDiffOp> constants_op(const Series<Poly> &a);

} // namespace defq
