#include "defq/poly.hpp"

#include <sstream>

namespace defq {

std::string rat_to_string(const Rat &q)
{
	std::ostringstream os;
	os << q;
	return os.str();
}

Poly Poly::constant(int vars, const Rat &c)
{
	Poly p(vars);
	p.add_term(Exponents(vars, 0), c);
	return p;
}

Poly Poly::variable(int vars, int i)
{
	if (i < 1 || i > vars)
		throw PreconditionError("variable index x" + std::to_string(i) + " out of range 1.." +
		                        std::to_string(vars));
	Exponents e(vars, 0);
	e[i - 1] = 1;
	return monomial(vars, e, 1);
}

Poly Poly::monomial(int vars, const Exponents &e, const Rat &c)
{
	if ((int)e.size() != vars)
		throw ContextMismatchError("exponent vector length does not match variable count");
	Poly p(vars);
	p.add_term(e, c);
	return p;
}

bool Poly::is_constant() const
{
	if (terms_.empty())
		return true;
	return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rat Poly::constant_term() const { return coefficient(Exponents(vars_, 0)); }

Rat Poly::coefficient(const Exponents &e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree() const
{
	if (terms_.empty())
		return -1;
	// Graded-lex: last term has maximal total degree.
	return (int)total_degree(terms_.rbegin()->first);
}

void Poly::add_term(const Exponents &e, const Rat &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.emplace(e, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void Poly::check_same(const Poly &o) const
{
	if (vars_ != o.vars_)
		throw ContextMismatchError("polynomials over different variable counts");
}

Poly Poly::operator-() const
{
	Poly r(vars_);
	for (auto &[e, c] : terms_)
		r.terms_.emplace(e, -c);
	return r;
}

Poly Poly::operator+(const Poly &o) const
{
	Poly r = *this;
	r += o;
	return r;
}

Poly Poly::operator-(const Poly &o) const
{
	Poly r = *this;
	r -= o;
	return r;
}

Poly &Poly::operator+=(const Poly &o)
{
	check_same(o);
	for (auto &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	check_same(o);
	for (auto &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

Poly Poly::operator*(const Poly &o) const
{
	check_same(o);
	Poly r(vars_);
	for (auto &[ea, ca] : terms_)
		for (auto &[eb, cb] : o.terms_)
		{
			Exponents e(vars_);
			for (int v = 0; v < vars_; ++v)
				e[v] = ea[v] + eb[v];
			r.add_term(e, ca * cb);
		}
	return r;
}

Poly Poly::scaled(const Rat &c) const
{
	Poly r(vars_);
	if (c == 0)
		return r;
	for (auto &[e, a] : terms_)
		r.terms_.emplace(e, a * c);
	return r;
}

Poly Poly::pow(unsigned k) const
{
	Poly r = one(vars_);
	for (unsigned i = 0; i < k; ++i)
		r *= *this;
	return r;
}

Poly Poly::derivative(int i, unsigned m) const
{
	if (i < 1 || i > vars_)
		throw PreconditionError("derivative index out of range");
	Poly cur = *this;
	for (unsigned t = 0; t < m; ++t)
	{
		Poly next(vars_);
		for (auto &[e, c] : cur.terms_)
		{
			if (e[i - 1] == 0)
				continue;
			Exponents e2 = e;
			e2[i - 1] -= 1;
			next.add_term(e2, c * e[i - 1]);
		}
		cur = next;
	}
	return cur;
}

Poly Poly::derivative(const Exponents &alpha) const
{
	Poly cur = *this;
	for (int v = 0; v < vars_ && !cur.is_zero(); ++v)
		if (alpha[v] > 0)
			cur = cur.derivative(v + 1, alpha[v]);
	return cur;
}

std::optional<Poly> Poly::divided_by(const Poly &divisor) const
{
	check_same(divisor);
	if (divisor.is_zero())
		throw PreconditionError("division by the zero polynomial");
	Poly rem = *this;
	Poly quot(vars_);
	const auto &lead = *divisor.terms_.rbegin(); // graded-lex leading term
	while (!rem.is_zero())
	{
		const auto &rl = *rem.terms_.rbegin();
		Exponents q(vars_);
		for (int v = 0; v < vars_; ++v)
		{
			if (rl.first[v] < lead.first[v])
				return std::nullopt;
			q[v] = rl.first[v] - lead.first[v];
		}
		Rat qc = rl.second / lead.second;
		quot.add_term(q, qc);
		rem -= divisor * monomial(vars_, q, qc);
	}
	return quot;
}

std::string Poly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	// Descending graded-lex reads naturally (leading term first).
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		const auto &[e, c] = *it;
		Rat a = c;
		if (first)
		{
			if (a < 0)
			{
				os << "-";
				a = -a;
			}
		}
		else
		{
			if (a < 0)
			{
				os << " - ";
				a = -a;
			}
			else
				os << " + ";
		}
		bool need_coeff = (a != 1) || total_degree(e) == 0;
		if (need_coeff)
			os << rat_to_string(a);
		bool printed = need_coeff;
		for (int v = 0; v < vars_; ++v)
		{
			if (e[v] == 0)
				continue;
			if (printed)
				os << "*";
			os << "x" << (v + 1);
			if (e[v] > 1)
				os << "^" << e[v];
			printed = true;
		}
		first = false;
	}
	return os.str();
}

} // namespace defq
