#pragma once

#include "jd/rat.hpp"
#include <map>
#include <optional>
#include <vector>

namespace jd {

// Sparse vector over Q, indexed by arbitrary (interned) column ids.
// Invariant: no zero entries are stored.
struct SparseVec {
	std::map<int, Rat> e;

	bool zero() const { return e.empty(); }
	const Rat *get(int col) const
	{
		auto it = e.find(col);
		return it == e.end() ? nullptr : &it->second;
	}
	void set(int col, Rat v)
	{
		if (v == 0)
			e.erase(col);
		else
			e[col] = std::move(v);
	}
	void add(int col, const Rat &v)
	{
		if (v == 0)
			return;
		auto [it, fresh] = e.try_emplace(col, v);
		if (!fresh) {
			it->second += v;
			if (it->second == 0)
				e.erase(it);
		}
	}
	SparseVec &axpy(const Rat &a, const SparseVec &x)
	{
		if (a == 0)
			return *this;
		for (auto &[c, v] : x.e)
			add(c, a * v);
		return *this;
	}
	SparseVec &operator*=(const Rat &a)
	{
		if (a == 0) {
			e.clear();
			return *this;
		}
		for (auto &[c, v] : e)
			v *= a;
		return *this;
	}
	bool operator==(const SparseVec &o) const { return e == o.e; }
	int pivot_col() const { return e.empty() ? -1 : e.begin()->first; }
};

// Reduced row echelon basis: pivot entries are 1, pivot columns strictly
// increasing, and no basis row has support on another row's pivot column.
struct RrefBasis {
	// pivot col -> fully reduced row (ordered so iteration is deterministic)
	std::map<int, SparseVec> rows;

	int rank() const { return (int)rows.size(); }

	// Reduce v against the basis (returned residual has no support on pivot
	// columns). Pure; does not insert.
	SparseVec reduce(SparseVec v) const
	{
		// walk v's support in column order; map lookups keep this sparse
		for (auto it = v.e.begin(); it != v.e.end();) {
			auto rit = rows.find(it->first);
			if (rit == rows.end()) {
				++it;
				continue;
			}
			Rat c = it->second;
			it = v.e.erase(it);
			// subtract c * row (row's pivot entry already removed from v)
			for (auto &[col, val] : rit->second.e) {
				if (col == rit->first)
					continue;
				v.add(col, -c * val);
			}
			// erase may have invalidated nothing before it; restart at lower
			// bound of the erased column to catch fill-in behind the cursor
			it = v.e.lower_bound(rit->first);
		}
		return v;
	}

	// Insert v; returns the normalized residual (zero if dependent).
	SparseVec insert(const SparseVec &v)
	{
		SparseVec r = reduce(v);
		if (r.zero())
			return r;
		int p = r.pivot_col();
		r *= Rat(1) / r.e.begin()->second;
		// back-substitute into existing rows to keep reduced form
		for (auto &[pc, row] : rows) {
			const Rat *c = row.get(p);
			if (c)
				row.axpy(-*c, r);
		}
		rows.emplace(p, r);
		return r;
	}

	bool is_pivot(int col) const { return rows.count(col) != 0; }
};

// Solve A x = b for one exact solution (free variables zeroed), where A is
// given by rows. Returns nullopt when inconsistent.
std::optional<SparseVec> solve_affine(const std::vector<SparseVec> &rows_A,
                                      const SparseVec &b);

// Same, for many right-hand sides against one elimination of A.
std::vector<std::optional<SparseVec>>
solve_affine_multi(const std::vector<SparseVec> &rows_A,
                   const std::vector<SparseVec> &bs);

} // namespace jd
