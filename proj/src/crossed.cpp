#include "defq/crossed.hpp"

#include <algorithm>
#include <sstream>

namespace defq {

Perm perm_compose(const Perm &f, const Perm &g)
{
	Perm r(f.size());
	for (size_t i = 0; i < f.size(); ++i)
		r[i] = f[g[i]];
	return r;
}

Perm perm_inverse(const Perm &f)
{
	Perm r(f.size());
	for (size_t i = 0; i < f.size(); ++i)
		r[f[i]] = (uint8_t)i;
	return r;
}

Perm perm_identity(int n)
{
	Perm r((size_t)n);
	for (int i = 0; i < n; ++i)
		r[(size_t)i] = (uint8_t)i;
	return r;
}

std::string perm_show(const Perm &p)
{
	std::ostringstream os;
	os << "perm(";
	for (size_t i = 0; i < p.size(); ++i)
		os << (i ? " " : "") << (int)p[i];
	os << ")";
	return os.str();
}

namespace {

int perm_parity(const Perm &p)
{
	int inv = 0;
	for (size_t i = 0; i < p.size(); ++i)
		for (size_t j = i + 1; j < p.size(); ++j)
			if (p[i] > p[j])
				++inv;
	return inv % 2;
}

} // namespace

std::vector<Perm> symmetric_group(int n)
{
	Perm base = perm_identity(n);
	std::vector<Perm> out;
	std::sort(base.begin(), base.end());
	do
		out.push_back(base);
	while (std::next_permutation(base.begin(), base.end()));
	return out;
}

std::vector<Perm> alternating_group(int n)
{
	std::vector<Perm> out;
	for (const auto &p : symmetric_group(n))
		if (perm_parity(p) == 0)
			out.push_back(p);
	return out;
}

void FiniteCrossedFixture::model_checks(Report &report, const std::string &prefix,
                                        const CrossedBudget &) const
{
	// N is really normal in G and closed under the group operations.
	bool ok = true;
	std::string w;
	auto contains = [&](const Perm &p) {
		return std::find(normal_subgroup.begin(), normal_subgroup.end(), p) !=
		       normal_subgroup.end();
	};
	for (const auto &g : group)
		for (const auto &a : normal_subgroup)
			if (!contains(twist(g, a)))
			{
				ok = false;
				w = perm_show(a);
			}
	for (const auto &a : normal_subgroup)
		for (const auto &b : normal_subgroup)
			if (!contains(perm_compose(a, b)) || !contains(perm_inverse(a)))
			{
				ok = false;
				w = perm_show(a);
			}
	report.add(prefix + "normal-subgroup", ok, w,
	           ok ? "" : "2-cell set is not a normal subgroup");
}

void check_equivalence(const FiniteCrossedFixture &source, const FiniteCrossedFixture &target,
                       const FiniteCrossedMorphism &phi, Report &report,
                       const std::string &prefix)
{
	// (i) essential surjectivity is automatic for one-object fixtures
	report.add(prefix + "essentially-surjective", true);

	// (ii) bijectivity on the automorphism group of the object
	{
		std::vector<Perm> image;
		bool hom = true;
		std::string w;
		for (const auto &g : source.group)
		{
			image.push_back(phi.map1(g));
			for (const auto &h : source.group)
				if (!(phi.map1(perm_compose(g, h)) ==
				      perm_compose(phi.map1(g), phi.map1(h))))
				{
					hom = false;
					w = perm_show(g);
				}
		}
		std::sort(image.begin(), image.end());
		image.erase(std::unique(image.begin(), image.end()), image.end());
		bool inj = image.size() == source.group.size();
		auto sorted_target = target.group;
		std::sort(sorted_target.begin(), sorted_target.end());
		bool surj = image == sorted_target;
		report.add(prefix + "hom1-bijective", hom && inj && surj, w,
		           hom ? (inj && surj ? "" : "1-morphism map is not bijective")
		               : "1-morphism map is not a homomorphism");
	}

	// (iii) bijectivity on 2-cells
	{
		std::vector<Perm> image;
		for (const auto &a : source.normal_subgroup)
			image.push_back(phi.map2(a));
		std::sort(image.begin(), image.end());
		image.erase(std::unique(image.begin(), image.end()), image.end());
		auto sorted_target = target.normal_subgroup;
		std::sort(sorted_target.begin(), sorted_target.end());
		bool ok = image.size() == source.normal_subgroup.size() && image == sorted_target;
		report.add(prefix + "hom2-bijective", ok, "",
		           ok ? "" : "2-morphism map is not bijective");
	}
}

} // namespace defq
