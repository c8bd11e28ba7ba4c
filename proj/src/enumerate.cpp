#include "jd/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jd {

namespace {

// Enumerates perfect matchings on the half-edge set of one (leg layout,
// internal count) shape.  Internal vertices are anonymous, so symmetric
// branches are cut: only the first untouched internal vertex is offered as a
// partner (slot 0), and within a partially used vertex only its lowest free
// slot (the free slots of one vertex are related by a rotation/reflection of
// its cyclic order, which at most flips the AS sign).
struct Gen {
	Diagram base; // ext/mate skeleton for this shape; mate filled during search
	bool directed, cbo;
	long *budget;
	std::map<std::string, int> *found; // canonical key -> intern id

	void run()
	{
		rec();
	}

	void rec()
	{
		int H = base.H();
		int h = 0;
		while (h < H && base.mate[(size_t)h] >= 0)
			h++;
		if (h == H) {
			finish();
			return;
		}
		bool fresh_done = false;
		for (int h2 = h + 1; h2 < H; h2++) {
			if (base.mate[(size_t)h2] >= 0)
				continue;
			int v2 = base.vertex_of(h2);
			if (h2 >= base.E()) {
				int low = -1;
				bool fresh = true;
				for (int s = 0; s < 3; s++) {
					int k = base.he(v2, s);
					if (k != h && base.mate[(size_t)k] < 0 && low < 0)
						low = k;
					if (base.mate[(size_t)k] >= 0)
						fresh = false;
				}
				if (h2 != low)
					continue;
				if (fresh && v2 != base.vertex_of(h)) {
					if (fresh_done)
						continue;
					fresh_done = true;
				}
			}
			base.mate[(size_t)h] = h2;
			base.mate[(size_t)h2] = h;
			rec();
			base.mate[(size_t)h] = -1;
			base.mate[(size_t)h2] = -1;
		}
	}

	bool body_touches_skeleton() const
	{
		int n = base.nverts();
		std::vector<int> comp((size_t)n, -1);
		for (int v = 0; v < n; v++) {
			if (comp[(size_t)v] >= 0)
				continue;
			std::vector<int> stack{v};
			comp[(size_t)v] = v;
			bool has_leg = false;
			while (!stack.empty()) {
				int u = stack.back();
				stack.pop_back();
				if (u < base.E())
					has_leg = true;
				int nh = u < base.E() ? 1 : 3;
				for (int s = 0; s < nh; s++) {
					int k = u < base.E() ? u : base.he(u, s);
					int w = base.vertex_of(base.mate[(size_t)k]);
					if (comp[(size_t)w] < 0) {
						comp[(size_t)w] = v;
						stack.push_back(w);
					}
				}
			}
			if (!has_leg)
				return false;
		}
		return true;
	}

	void finish()
	{
		if (cbo && !body_touches_skeleton())
			return;
		if (!directed) {
			take(base);
			return;
		}
		// all direction assignments
		std::vector<std::pair<int, int>> edges;
		for (int h = 0; h < base.H(); h++)
			if (base.mate[(size_t)h] > h)
				edges.push_back({h, base.mate[(size_t)h]});
		Diagram d = base;
		d.directed = true;
		d.head.assign((size_t)d.H(), 0);
		for (long bits = 0; bits < (1L << edges.size()); bits++) {
			for (size_t e = 0; e < edges.size(); e++) {
				bool flip = (bits >> e) & 1;
				d.head[(size_t)edges[e].first] = flip;
				d.head[(size_t)edges[e].second] = !flip;
			}
			take(d);
		}
	}

	void take(const Diagram &d)
	{
		if (--*budget < 0)
			throw std::runtime_error("enumeration guard exceeded; raise --guard-diagrams");
		auto [id, sgn] = canon_id(d);
		if (id >= 0)
			found->emplace(interned(id).key(), id);
	}
};

void leg_layouts(const Skeleton &s, int nlegs, size_t c,
                 std::vector<int> &counts, std::vector<std::vector<int>> &out)
{
	if (c == s.comps.size()) {
		if (nlegs == 0)
			out.push_back(counts);
		return;
	}
	for (int k = 0; k <= nlegs; k++) {
		counts[c] = k;
		leg_layouts(s, nlegs - k, c + 1, counts, out);
	}
	counts[c] = 0;
}

std::vector<int> enumerate_core(const Skeleton &s, int m, bool directed,
                                bool cbo, bool chords_only)
{
	if (m < 0)
		throw std::runtime_error("negative degree");
	std::map<std::string, int> found;
	long budget = enumeration_guard;
	for (int nint = chords_only ? 0 : 2 * m; nint >= 0; nint--) {
		int nlegs = 2 * m - nint;
		if (nlegs < 0)
			continue;
		if (cbo && nlegs == 0 && nint > 0)
			continue; // every body component would float free
		std::vector<int> counts(s.comps.size(), 0);
		std::vector<std::vector<int>> layouts;
		leg_layouts(s, nlegs, 0, counts, layouts);
		for (auto &lay : layouts) {
			Gen g;
			g.base.skel = s;
			g.base.nint = nint;
			for (size_t c = 0; c < lay.size(); c++)
				for (int p = 0; p < lay[c]; p++)
					g.base.ext.push_back({(int)c, p});
			g.base.mate.assign((size_t)g.base.H(), -1);
			g.directed = directed;
			g.cbo = cbo;
			g.budget = &budget;
			g.found = &found;
			g.run();
		}
	}
	std::vector<int> out;
	for (auto &[k, id] : found)
		out.push_back(id);
	return out;
}

} // namespace

std::vector<int> enumerate_diagrams(const Skeleton &s, int m, bool directed,
                                    bool connected_body_only)
{
	return enumerate_core(s, m, directed, connected_body_only, false);
}

std::vector<int> enumerate_chord_diagrams(const Skeleton &s, int m)
{
	for (auto &c : s.comps)
		if (c.kind == CompKind::Star)
			throw std::runtime_error("chord diagrams need a 1-dimensional skeleton");
	return enumerate_core(s, m, false, false, true);
}

std::vector<int> enumerate_chord_diagrams_directed(const Skeleton &s, int m)
{
	for (auto &c : s.comps)
		if (c.kind == CompKind::Star)
			throw std::runtime_error("chord diagrams need a 1-dimensional skeleton");
	return enumerate_core(s, m, true, false, true);
}

} // namespace jd
