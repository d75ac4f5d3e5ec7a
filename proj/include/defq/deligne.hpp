#pragma once

#include "defq/crossed.hpp"
#include "defq/dgla.hpp"
#include "defq/expr_show.hpp"

namespace defq {

// A finite sampled fragment of the Deligne crossed groupoid of a quantum
// type DGLA: objects are MC elements, 1-morphisms the gauge group acting
// through the affine flow, 2-morphism groups N_w in log coordinates with
// BCH over the twisted bracket, twist = e^{ad gamma}, feedback = exp(d_w).
template <class G>
struct DeligneInstance
{
	G dgla;

	struct Mor1
	{
		SeriesOf<G> gamma;
		int src, tgt;
	};

	std::vector<MCElement<G>> objs;
	std::vector<Mor1> gauges;               // does not include identities
	std::vector<SeriesOf<G>> cell_logs;     // 2-cell samples, shared per object

	int object_index(const SeriesOf<G> &w) const
	{
		for (int i = 0; i < (int)objs.size(); ++i)
			if (objs[(size_t)i].omega == w)
				return i;
		return -1;
	}
};

// Assemble the instance: objects are the supplied MC elements plus the
// images of the supplied gauge logs (the object set is closed under the
// sampled action, capped by `max_objects`).
template <class G>
DeligneInstance<G> deligne_build(const G &g, std::vector<MCElement<G>> sample,
                                 std::vector<SeriesOf<G>> gauge_logs,
                                 std::vector<SeriesOf<G>> cell_logs, int max_objects = 8)
{
	DeligneInstance<G> inst{g, {}, {}, std::move(cell_logs)};
	for (auto &w : sample)
	{
		if (w.omega.trunc() != g.ctx.trunc)
			throw ContextMismatchError("MC sample from a different truncation order");
		if (!mc_defect(g, w.omega).is_zero())
			throw PreconditionError("sample element is not Maurer-Cartan");
		if (inst.object_index(w.omega) < 0)
			inst.objs.push_back(w);
	}
	for (auto &ga : gauge_logs)
	{
		if (ga.valuation() < 1)
			throw PreconditionError("gauge log with valuation 0");
		int n = (int)inst.objs.size();
		for (int i = 0; i < n; ++i)
		{
			auto target = gauge_apply(g, ga, inst.objs[(size_t)i].omega);
			int j = inst.object_index(target);
			if (j < 0)
			{
				if ((int)inst.objs.size() >= max_objects)
					continue;
				inst.objs.push_back(MCElement<G>::unchecked(target));
				j = (int)inst.objs.size() - 1;
			}
			inst.gauges.push_back({ga, i, j});
		}
	}
	return inst;
}

// Crossed-groupoid model over a Deligne instance, consumed by
// verify_crossed_axioms. All operations are exact.
template <class G>
struct DeligneModel
{
	DeligneInstance<G> inst;

	using Obj = int;
	using Mor1 = typename DeligneInstance<G>::Mor1;
	using Mor2 = std::pair<int, SeriesOf<G>>; // (object, log coordinates)

	const G &dgla() const { return inst.dgla; }

	std::vector<int> objects() const
	{
		std::vector<int> r((size_t)inst.objs.size());
		for (int i = 0; i < (int)r.size(); ++i)
			r[(size_t)i] = i;
		return r;
	}

	std::vector<Mor1> hom1(int i, int j) const
	{
		std::vector<Mor1> r;
		if (i == j)
			r.push_back(identity1(i));
		for (const auto &m : inst.gauges)
			if (m.src == i && m.tgt == j)
				r.push_back(m);
		return r;
	}

	std::vector<Mor2> two_cells(int i) const
	{
		std::vector<Mor2> r;
		r.push_back(identity2(i));
		for (const auto &a : inst.cell_logs)
			r.push_back({i, a});
		return r;
	}

	int src(const Mor1 &m) const { return m.src; }
	int tgt(const Mor1 &m) const { return m.tgt; }

	Mor1 compose1(const Mor1 &g, const Mor1 &h) const
	{
		if (h.tgt != g.src)
			throw PreconditionError("1-morphisms are not composable");
		return {bch(dgla(), g.gamma, h.gamma), h.src, g.tgt};
	}
	Mor1 inverse1(const Mor1 &g) const { return {g.gamma.scaled(-1), g.tgt, g.src}; }
	Mor1 identity1(int i) const { return {s_zero(dgla(), 0), i, i}; }

	Mor2 multiply2(int i, const Mor2 &a, const Mor2 &b) const
	{
		const auto &w = inst.objs[(size_t)i].omega;
		auto br = [&](const SeriesOf<G> &x, const SeriesOf<G> &y) {
			return twisted_bracket(dgla(), w, x, y);
		};
		return {i, bch(a.second, b.second, a.second.trunc(), br)};
	}
	Mor2 inverse2(int i, const Mor2 &a) const { return {i, a.second.scaled(-1)}; }
	Mor2 identity2(int i) const { return {i, s_zero(dgla(), -1)}; }

	Mor2 twist(const Mor1 &g, const Mor2 &a) const
	{
		return {g.tgt, exp_ad(dgla(), g.gamma, a.second)};
	}

	Mor1 feedback(int i, const Mor2 &a) const
	{
		return {twisted_d(dgla(), inst.objs[(size_t)i].omega, a.second), i, i};
	}

	bool eq1(const Mor1 &a, const Mor1 &b) const
	{
		return a.src == b.src && a.tgt == b.tgt && a.gamma == b.gamma;
	}
	bool eq2(int, const Mor2 &a, const Mor2 &b) const { return a.second == b.second; }

	std::string show1(const Mor1 &g) const { return show_series(g.gamma); }
	std::string show2(const Mor2 &a) const { return show_series(a.second); }

	void model_checks(Report &report, const std::string &prefix, const CrossedBudget &) const
	{
		// every stored 1-morphism really maps its source onto its target
		bool ok = true;
		std::string w;
		for (const auto &m : inst.gauges)
			if (!(gauge_apply(dgla(), m.gamma, inst.objs[(size_t)m.src].omega) ==
			      inst.objs[(size_t)m.tgt].omega))
			{
				ok = false;
				w = show1(m);
			}
		report.add(prefix + "hom1-membership", ok, w,
		           ok ? "" : "gauge log does not map source MC element to target");

		// feedbacks stabilize their base object
		bool ok2 = true;
		std::string w2;
		for (int i = 0; i < (int)inst.objs.size(); ++i)
			for (const auto &a : two_cells(i))
			{
				auto fb = feedback(i, a);
				if (!(gauge_apply(dgla(), fb.gamma, inst.objs[(size_t)i].omega) ==
				      inst.objs[(size_t)i].omega))
				{
					ok2 = false;
					w2 = show2(a);
				}
			}
		report.add(prefix + "feedback-stabilizes", ok2, w2,
		           ok2 ? "" : "exp(d_w(alpha)) moves the base MC element");
	}
};

} // namespace defq
