#pragma once

#include <functional>
#include <optional>

#include "defq/report.hpp"

namespace defq {

// Sampling budget for the crossed-groupoid axiom verifier. Infinite
// morphism sets are only ever sampled; a clean report means "no
// counterexample within budget", never a proof.
struct CrossedBudget
{
	int max_mor1 = 4;  // 1-morphisms drawn per hom set
	int max_mor2 = 4;  // 2-cells drawn per object
	int max_pairs = 24; // cap on checked pairs/triples per law
};

// A crossed-groupoid model provides, duck-typed:
//   Obj, Mor1, Mor2
//   objects() -> vector<Obj>
//   hom1(i, j) -> vector<Mor1>          sampled, identities included for i==j
//   two_cells(i) -> vector<Mor2>        sampled, identity included
//   src(Mor1), tgt(Mor1) -> int         object indices
//   compose1(g, h)                      g after h
//   inverse1(g), identity1(i)
//   multiply2(i, a, b), inverse2(i, a), identity2(i)
//   twist(g, a)                         a based at src(g), result at tgt(g)
//   feedback(i, a) -> Mor1              endomorphism of object i
//   eq1(g, h), eq2(i, a, b)
//   show1(g), show2(a) -> std::string   witness text
//   model_checks(report, prefix, budget)  model-specific membership checks
//
// The verifier records every law of Definition-style crossed groupoid
// data: groupoid laws, per-object group laws, twist functoriality and
// isomorphy, the equivariance axiom (i), the conjugation axiom (ii), and
// the functor/naturality laws that recover the structure from (G1, IG, ig).
template <class M>
void verify_crossed_axioms(M &model, const CrossedBudget &budget, Report &report,
                           const std::string &prefix)
{
	auto objs = model.objects();
	const int n = (int)objs.size();

	auto fail = [&](const std::string &name, const std::string &witness,
	                const std::string &note) { report.add(prefix + name, false, witness, note); };
	auto pass = [&](const std::string &name) { report.add(prefix + name, true); };

	// groupoid laws for hom1
	{
		bool ok_id = true, ok_inv = true, ok_assoc = true;
		std::string w_id, w_inv, w_assoc;
		int budget_left = budget.max_pairs;
		for (int i = 0; i < n && budget_left > 0; ++i)
			for (int j = 0; j < n && budget_left > 0; ++j)
			{
				auto gs = model.hom1(i, j);
				if ((int)gs.size() > budget.max_mor1)
					gs.erase(gs.begin() + budget.max_mor1, gs.end());
				for (auto &g : gs)
				{
					--budget_left;
					if (!model.eq1(model.compose1(g, model.identity1(i)), g) ||
					    !model.eq1(model.compose1(model.identity1(j), g), g))
					{
						ok_id = false;
						w_id = model.show1(g);
					}
					if (!model.eq1(model.compose1(g, model.inverse1(g)), model.identity1(j)) ||
					    !model.eq1(model.compose1(model.inverse1(g), g), model.identity1(i)))
					{
						ok_inv = false;
						w_inv = model.show1(g);
					}
					for (auto &h : model.hom1(j, j))
						for (auto &k : model.hom1(j, j))
						{
							if (!model.eq1(model.compose1(k, model.compose1(h, g)),
							               model.compose1(model.compose1(k, h), g)))
							{
								ok_assoc = false;
								w_assoc = model.show1(g);
							}
							break; // one (h, k) pair per g keeps the budget small
						}
				}
			}
		ok_id ? pass("hom1-identity") : fail("hom1-identity", w_id, "identity law violated");
		ok_inv ? pass("hom1-inverse") : fail("hom1-inverse", w_inv, "inverse law violated");
		ok_assoc ? pass("hom1-associative")
		         : fail("hom1-associative", w_assoc, "associativity violated");
	}

	// group laws for each G2(i)
	{
		bool ok = true;
		std::string w;
		for (int i = 0; i < n && ok; ++i)
		{
			auto as = model.two_cells(i);
			if ((int)as.size() > budget.max_mor2)
				as.erase(as.begin() + budget.max_mor2, as.end());
			int pairs = 0;
			for (auto &a : as)
			{
				if (!model.eq2(i, model.multiply2(i, a, model.identity2(i)), a) ||
				    !model.eq2(i, model.multiply2(i, a, model.inverse2(i, a)),
				               model.identity2(i)))
				{
					ok = false;
					w = model.show2(a);
					break;
				}
				for (auto &b : as)
					for (auto &c : as)
					{
						if (++pairs > budget.max_pairs)
							break;
						if (!model.eq2(i, model.multiply2(i, a, model.multiply2(i, b, c)),
						               model.multiply2(i, model.multiply2(i, a, b), c)))
						{
							ok = false;
							w = model.show2(a);
						}
					}
			}
		}
		ok ? pass("g2-group") : fail("g2-group", w, "2-cell group law violated");
	}

	// twist: per 1-morphism a group isomorphism, functorial in the morphism
	{
		bool ok_hom = true, ok_inv = true, ok_fun = true;
		std::string w_hom, w_inv, w_fun;
		int budget_left = budget.max_pairs;
		for (int i = 0; i < n && budget_left > 0; ++i)
			for (int j = 0; j < n && budget_left > 0; ++j)
				for (auto &g : model.hom1(i, j))
				{
					auto as = model.two_cells(i);
					if ((int)as.size() > budget.max_mor2)
						as.erase(as.begin() + budget.max_mor2, as.end());
					for (auto &a : as)
					{
						--budget_left;
						for (auto &b : as)
						{
							if (!model.eq2(j, model.twist(g, model.multiply2(i, a, b)),
							               model.multiply2(j, model.twist(g, a),
							                               model.twist(g, b))))
							{
								ok_hom = false;
								w_hom = model.show1(g);
							}
							break;
						}
						if (!model.eq2(i, model.twist(model.inverse1(g), model.twist(g, a)), a))
						{
							ok_inv = false;
							w_inv = model.show1(g);
						}
						// functoriality through a second morphism out of j
						for (auto &h : model.hom1(j, j))
						{
							if (!model.eq2(j, model.twist(model.compose1(h, g), a),
							               model.twist(h, model.twist(g, a))))
							{
								ok_fun = false;
								w_fun = model.show1(h);
							}
							break;
						}
						if (!model.eq2(i, model.twist(model.identity1(i), a), a))
						{
							ok_fun = false;
							w_fun = model.show2(a);
						}
					}
				}
		ok_hom ? pass("twist-homomorphism")
		       : fail("twist-homomorphism", w_hom, "twist is not a group homomorphism");
		ok_inv ? pass("twist-invertible")
		       : fail("twist-invertible", w_inv, "twist(g^-1) does not invert twist(g)");
		ok_fun ? pass("twist-functorial")
		       : fail("twist-functorial", w_fun, "IG is not a functor on sampled data");
	}

	// axiom (i): the feedback is equivariant,
	// D(twist(g)(a)) = g o D(a) o g^-1
	{
		bool ok = true;
		std::string w;
		int budget_left = budget.max_pairs;
		for (int i = 0; i < n && budget_left > 0; ++i)
			for (int j = 0; j < n && budget_left > 0; ++j)
				for (auto &g : model.hom1(i, j))
					for (auto &a : model.two_cells(i))
					{
						--budget_left;
						auto lhs = model.feedback(j, model.twist(g, a));
						auto rhs = model.compose1(
						    g, model.compose1(model.feedback(i, a), model.inverse1(g)));
						if (!model.eq1(lhs, rhs))
						{
							ok = false;
							w = model.show2(a);
						}
					}
		ok ? pass("axiom-i-equivariance")
		   : fail("axiom-i-equivariance", w,
		          "D(Ad(g)(a)) != g o D(a) o g^-1 on a sampled instance");
	}

	// axiom (ii): twisting along a feedback is conjugation in G2
	{
		bool ok = true;
		std::string w;
		int budget_left = budget.max_pairs;
		for (int i = 0; i < n && budget_left > 0; ++i)
		{
			auto as = model.two_cells(i);
			if ((int)as.size() > budget.max_mor2)
				as.erase(as.begin() + budget.max_mor2, as.end());
			for (auto &a : as)
				for (auto &b : as)
				{
					--budget_left;
					auto lhs = model.twist(model.feedback(i, a), b);
					auto rhs = model.multiply2(
					    i, a, model.multiply2(i, b, model.inverse2(i, a)));
					if (!model.eq2(i, lhs, rhs))
					{
						ok = false;
						w = model.show2(a);
					}
				}
		}
		ok ? pass("axiom-ii-conjugation")
		   : fail("axiom-ii-conjugation", w,
		          "Ad(D(a)) is not conjugation by a on a sampled instance");
	}

	// ig is a natural transformation IG -> Aut_G1: feedback is a group
	// homomorphism per object (with axiom (i) this is the Prop-style
	// recovery data)
	{
		bool ok = true;
		std::string w;
		for (int i = 0; i < n; ++i)
		{
			auto as = model.two_cells(i);
			if ((int)as.size() > budget.max_mor2)
				as.erase(as.begin() + budget.max_mor2, as.end());
			for (auto &a : as)
				for (auto &b : as)
					if (!model.eq1(model.feedback(i, model.multiply2(i, a, b)),
					               model.compose1(model.feedback(i, a), model.feedback(i, b))))
					{
						ok = false;
						w = model.show2(a);
					}
			if (!model.eq1(model.feedback(i, model.identity2(i)), model.identity1(i)))
			{
				ok = false;
				w = "identity";
			}
		}
		ok ? pass("feedback-homomorphism")
		   : fail("feedback-homomorphism", w, "ig is not a homomorphism on sampled data");
	}

	model.model_checks(report, prefix, budget);
}

// ---- finite fixture: a group with a normal subgroup --------------------

using Perm = std::vector<uint8_t>;

Perm perm_compose(const Perm &f, const Perm &g); // f after g
Perm perm_inverse(const Perm &f);
Perm perm_identity(int n);
std::string perm_show(const Perm &p);

std::vector<Perm> symmetric_group(int n);
std::vector<Perm> alternating_group(int n);

// One-object crossed groupoid: G1 = G, G2 = N normal in G, twist =
// conjugation, feedback = inclusion. `broken_feedback`, when set, replaces
// the feedback with the constant map onto that element, which violates the
// axioms as soon as the element is not central.
struct FiniteCrossedFixture
{
	std::vector<Perm> group;
	std::vector<Perm> normal_subgroup;
	std::optional<Perm> broken_feedback;

	using Obj = int;
	using Mor1 = Perm;
	using Mor2 = Perm;

	std::vector<int> objects() const { return {0}; }
	std::vector<Perm> hom1(int, int) const { return group; }
	std::vector<Perm> two_cells(int) const { return normal_subgroup; }
	int src(const Perm &) const { return 0; }
	int tgt(const Perm &) const { return 0; }
	Perm compose1(const Perm &g, const Perm &h) const { return perm_compose(g, h); }
	Perm inverse1(const Perm &g) const { return perm_inverse(g); }
	Perm identity1(int) const { return perm_identity((int)group[0].size()); }
	Perm multiply2(int, const Perm &a, const Perm &b) const { return perm_compose(a, b); }
	Perm inverse2(int, const Perm &a) const { return perm_inverse(a); }
	Perm identity2(int) const { return identity1(0); }
	Perm twist(const Perm &g, const Perm &a) const
	{
		return perm_compose(g, perm_compose(a, perm_inverse(g)));
	}
	Perm feedback(int, const Perm &a) const { return broken_feedback ? *broken_feedback : a; }
	bool eq1(const Perm &a, const Perm &b) const { return a == b; }
	bool eq2(int, const Perm &a, const Perm &b) const { return a == b; }
	std::string show1(const Perm &g) const { return perm_show(g); }
	std::string show2(const Perm &a) const { return perm_show(a); }
	void model_checks(Report &report, const std::string &prefix, const CrossedBudget &) const;
};

// Morphism of one-object finite fixtures, and the equivalence conditions
// decided by enumeration: essential surjectivity, bijectivity on the
// automorphism group, bijectivity on 2-cells.
struct FiniteCrossedMorphism
{
	std::function<Perm(const Perm &)> map1;
	std::function<Perm(const Perm &)> map2;
};

void check_equivalence(const FiniteCrossedFixture &source, const FiniteCrossedFixture &target,
                       const FiniteCrossedMorphism &phi, Report &report,
                       const std::string &prefix);

} // namespace defq
