#pragma once
// Mutable port-graph sandbox for diagram surgery (relation instances, STU
// rewriting, products, gluing).  Half-edge ids are stable; vertices can be
// killed and added; to_diagram() compacts.

#include "jd/diagram.hpp"
#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace jd {

struct Scratch {
	struct HE {
		int v = -1;
		int mate = -1;
		char head = 0;
	};
	struct V {
		bool ext = false;
		int comp = -1;
		long pos = 0; // sparse ordering key; legs sorted by (comp,pos)
		std::vector<int> hes;
		bool alive = true;
	};
	Skeleton skel;
	bool directed = false;
	std::vector<HE> hes;
	std::vector<V> vs;

	static Scratch from(const Diagram &d)
	{
		Scratch s;
		s.skel = d.skel;
		s.directed = d.directed;
		s.hes.resize((size_t)d.H());
		for (int v = 0; v < d.E(); v++) {
			V x;
			x.ext = true;
			x.comp = d.ext[(size_t)v].first;
			x.pos = d.ext[(size_t)v].second;
			x.hes = {v};
			s.hes[(size_t)v].v = v;
			s.vs.push_back(x);
		}
		for (int j = 0; j < d.nint; j++) {
			V x;
			x.ext = false;
			for (int t = 0; t < 3; t++) {
				int h = d.he(d.E() + j, t);
				x.hes.push_back(h);
				s.hes[(size_t)h].v = d.E() + j;
			}
			s.vs.push_back(x);
		}
		for (int h = 0; h < d.H(); h++) {
			s.hes[(size_t)h].mate = d.mate[(size_t)h];
			if (d.directed)
				s.hes[(size_t)h].head = d.head[(size_t)h];
		}
		return s;
	}

	int add_leg(int comp, long pos)
	{
		V x;
		x.ext = true;
		x.comp = comp;
		x.pos = pos;
		int h = (int)hes.size();
		hes.push_back({(int)vs.size(), -1, 0});
		x.hes = {h};
		vs.push_back(x);
		return h;
	}

	// internal vertex; returned hes are its cyclic order
	std::array<int, 3> add_vertex()
	{
		V x;
		std::array<int, 3> out{};
		for (int t = 0; t < 3; t++) {
			int h = (int)hes.size();
			hes.push_back({(int)vs.size(), -1, 0});
			x.hes.push_back(h);
			out[(size_t)t] = h;
		}
		vs.push_back(x);
		return out;
	}

	void kill(int v)
	{
		vs[(size_t)v].alive = false;
		for (int h : vs[(size_t)v].hes)
			hes[(size_t)h].v = -1;
	}

	// connect two free half-edges; directed: head at b
	void wire(int a, int b, bool point_at_b = false)
	{
		hes[(size_t)a].mate = b;
		hes[(size_t)b].mate = a;
		hes[(size_t)a].head = 0;
		hes[(size_t)b].head = 0;
		if (directed)
			hes[(size_t)(point_at_b ? b : a)].head = 1;
	}

	// disconnect h from its mate, returning the mate (both become free)
	int unwire(int h)
	{
		int m = hes[(size_t)h].mate;
		hes[(size_t)h].mate = -1;
		hes[(size_t)m].mate = -1;
		return m;
	}

	bool head_at(int h) const { return hes[(size_t)h].head != 0; }

	Diagram to_diagram(int sign = +1) const
	{
		Diagram d;
		d.skel = skel;
		d.directed = directed;
		d.sign = sign;
		std::vector<int> extv, intv;
		for (size_t v = 0; v < vs.size(); v++) {
			if (!vs[v].alive)
				continue;
			(vs[v].ext ? extv : intv).push_back((int)v);
		}
		std::stable_sort(extv.begin(), extv.end(), [&](int a, int b) {
			return std::pair<int, long>(vs[(size_t)a].comp, vs[(size_t)a].pos) <
			       std::pair<int, long>(vs[(size_t)b].comp, vs[(size_t)b].pos);
		});
		int E = (int)extv.size();
		std::vector<int> he2new(hes.size(), -1);
		for (int i = 0; i < E; i++) {
			d.ext.push_back({vs[(size_t)extv[(size_t)i]].comp, i});
			he2new[(size_t)vs[(size_t)extv[(size_t)i]].hes[0]] = i;
		}
		d.nint = (int)intv.size();
		for (size_t j = 0; j < intv.size(); j++) {
			auto &x = vs[(size_t)intv[j]];
			if (x.hes.size() != 3)
				throw std::runtime_error("scratch: internal vertex without 3 ports");
			for (int t = 0; t < 3; t++)
				he2new[(size_t)x.hes[(size_t)t]] = E + 3 * (int)j + t;
		}
		d.mate.assign((size_t)d.H(), -1);
		if (directed)
			d.head.assign((size_t)d.H(), 0);
		for (size_t h = 0; h < hes.size(); h++) {
			if (he2new[h] < 0)
				continue;
			if (hes[h].mate < 0)
				throw std::runtime_error("scratch: dangling half-edge");
			d.mate[(size_t)he2new[h]] = he2new[(size_t)hes[h].mate];
			if (directed)
				d.head[(size_t)he2new[h]] = hes[h].head;
		}
		d.normalize();
		d.validate();
		return d;
	}
};

} // namespace jd
