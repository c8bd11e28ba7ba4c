#pragma once
// Formal rational combinations of interned canonical diagrams.

#include "jd/diagram.hpp"
#include "jd/rat.hpp"
#include <map>

namespace jd {

struct FormalSum {
	Skeleton skel;
	bool directed = false;
	int cap = 1 << 20; // degree cap carried through products
	std::map<int, Rat> terms;

	FormalSum() = default;
	FormalSum(Skeleton s, bool dir, int c = 1 << 20)
	    : skel(std::move(s)), directed(dir), cap(c)
	{
	}

	void add(int id, const Rat &c)
	{
		if (c == 0)
			return;
		auto it = terms.find(id);
		if (it == terms.end()) {
			terms.emplace(id, c);
			return;
		}
		it->second += c;
		if (it->second == 0)
			terms.erase(it);
	}

	// canonicalize-and-add: diagram need not be canonical
	void add_diagram(const Diagram &d, const Rat &c)
	{
		if (d.degree() > cap || c == 0)
			return;
		auto [id, sgn] = canon_id(d);
		if (id >= 0)
			add(id, c * sgn);
	}

	FormalSum &operator+=(const FormalSum &o)
	{
		for (auto &[id, c] : o.terms)
			add(id, c);
		return *this;
	}
	FormalSum &operator-=(const FormalSum &o)
	{
		for (auto &[id, c] : o.terms)
			add(id, -c);
		return *this;
	}
	FormalSum &operator*=(const Rat &r)
	{
		if (r == 0) {
			terms.clear();
			return *this;
		}
		for (auto &[id, c] : terms)
			c *= r;
		return *this;
	}
	friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
	friend FormalSum operator-(FormalSum a, const FormalSum &b) { return a -= b; }
	friend FormalSum operator*(FormalSum a, const Rat &r) { return a *= r; }
	bool is_zero() const { return terms.empty(); }
	bool operator==(const FormalSum &o) const
	{
		return skel == o.skel && terms == o.terms;
	}

	FormalSum truncated(int newcap) const
	{
		FormalSum r(skel, directed, newcap);
		for (auto &[id, c] : terms)
			if (interned(id).degree() <= newcap)
				r.add(id, c);
		return r;
	}

	std::string str() const; // debug/CLI listing, deterministic
};

// unit of the diagram algebra on s: the empty diagram with coefficient 1
FormalSum unit_sum(const Skeleton &s, bool directed, int cap = 1 << 20);

} // namespace jd
