#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defq/context.hpp"
#include "defq/rational.hpp"

namespace defq {

// Exponent vector of a monomial, length = number of variables.
using Exponents = std::vector<uint32_t>;

inline uint32_t total_degree(const Exponents &e)
{
	uint32_t s = 0;
	for (auto x : e)
		s += x;
	return s;
}

// Graded-lexicographic order: compare total degree first, then exponents
// left to right. This is the single term order used everywhere (canonical
// printing, term maps, triangular coefficient extraction).
struct GradedLexLess
{
	bool operator()(const Exponents &a, const Exponents &b) const
	{
		uint32_t da = total_degree(a), db = total_degree(b);
		if (da != db)
			return da < db;
		return a < b;
	}
};

// Multivariate polynomial over Q in canonical form: only nonzero
// coefficients are stored, keyed by exponent vector under graded-lex.
class Poly
{
public:
	using TermMap = std::map<Exponents, Rat, GradedLexLess>;

	explicit Poly(int vars) : vars_(vars) {}

	static Poly zero(int vars) { return Poly(vars); }
	static Poly constant(int vars, const Rat &c);
	static Poly one(int vars) { return constant(vars, 1); }
	// 1-based variable index.
	static Poly variable(int vars, int i);
	static Poly monomial(int vars, const Exponents &e, const Rat &c);

	int vars() const { return vars_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	// Coefficient of the constant monomial (zero if absent).
	Rat constant_term() const;
	Rat coefficient(const Exponents &e) const;
	const TermMap &terms() const { return terms_; }
	// Total degree; -1 for the zero polynomial.
	int degree() const;

	Poly operator-() const;
	Poly operator+(const Poly &o) const;
	Poly operator-(const Poly &o) const;
	Poly operator*(const Poly &o) const;
	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	Poly &operator*=(const Poly &o) { return *this = *this * o; }
	Poly scaled(const Rat &c) const;
	Poly pow(unsigned k) const;

	// m-fold partial derivative with respect to variable i (1-based).
	Poly derivative(int i, unsigned m = 1) const;
	// Mixed derivative: apply d/dx_v alpha[v] times for each variable.
	Poly derivative(const Exponents &alpha) const;

	// Exact division: returns the quotient if divisor divides *this,
	// std::nullopt otherwise. Divisor must be nonzero.
	std::optional<Poly> divided_by(const Poly &divisor) const;

	bool operator==(const Poly &o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

	// Canonical textual form in the expression grammar.
	std::string str() const;

	void add_term(const Exponents &e, const Rat &c);

private:
	int vars_;
	TermMap terms_;

	void check_same(const Poly &o) const;
};

inline Poly operator*(const Rat &c, const Poly &p) { return p.scaled(c); }

} // namespace defq
