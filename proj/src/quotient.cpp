#include "jd/spaces.hpp"

#include <sstream>
#include <stdexcept>

namespace jd {

FormalSum unit_sum(const Skeleton &s, bool directed, int cap)
{
	Diagram d;
	d.skel = s;
	d.directed = directed;
	FormalSum r(s, directed, cap);
	r.add_diagram(d, 1);
	return r;
}

std::string FormalSum::str() const
{
	if (terms.empty())
		return "0";
	std::ostringstream o;
	bool first = true;
	for (auto &[id, c] : terms) {
		o << (first ? "" : " + ") << to_string(c) << "*#" << id;
		first = false;
	}
	return o.str();
}

int QuotientSpace::dim(int m) const
{
	auto &D = degs[(size_t)m];
	if (rs == RelSet::AarrowPlus || rs == RelSet::AarrowMinus)
		return D.image.rank();
	return (int)D.raw - D.rels.rank();
}

QuotientSpace build_quotient(const Skeleton &s, int cap, RelSet rs, bool bf)
{
	QuotientSpace q;
	q.skel = s;
	q.cap = cap;
	q.rs = rs;
	q.body_filter = bf;
	q.degs.resize((size_t)cap + 1);
	bool dir = relset_directed(rs);
	for (int m = 0; m <= cap; m++) {
		auto &D = q.degs[(size_t)m];
		switch (rs) {
		case RelSet::Achord:
			D.ids = enumerate_chord_diagrams(s, m);
			break;
		case RelSet::PolyakChord:
			D.ids = enumerate_chord_diagrams_directed(s, m);
			break;
		case RelSet::PolyakAcyclic: {
			for (int id : enumerate_diagrams(s, m, true, bf))
				if (!has_directed_cycle(interned(id)))
					D.ids.push_back(id);
			break;
		}
		default:
			D.ids = enumerate_diagrams(s, m, dir, bf);
		}
		D.raw = (long)D.ids.size();
		for (size_t i = 0; i < D.ids.size(); i++)
			D.col[D.ids[i]] = (int)i;
		for (auto &rel : generate_relations(s, m, rs, bf)) {
			SparseVec v;
			for (auto &[id, c] : rel.terms) {
				auto it = D.col.find(id);
				if (it == D.col.end())
					throw std::runtime_error(
					    "relation term missing from enumeration");
				v.set(it->second, c);
			}
			D.rels.insert(v);
		}
		for (int id : D.ids)
			if (!D.rels.is_pivot(D.col[id]))
				D.basis.push_back(id);
		if (rs == RelSet::AarrowPlus || rs == RelSet::AarrowMinus) {
			for (int id : D.ids) {
				const Diagram &d = interned(id);
				bool in = rs == RelSet::AarrowPlus ? all_legs_incoming(d)
				                                   : all_legs_outgoing(d);
				if (!in)
					continue;
				SparseVec v;
				v.set(D.col[id], Rat(1));
				D.image.insert(D.rels.reduce(v));
			}
		}
	}
	return q;
}

FormalSum reduce(const QuotientSpace &q, const FormalSum &v)
{
	FormalSum out(q.skel, relset_directed(q.rs), q.cap);
	std::vector<SparseVec> per((size_t)q.cap + 1);
	for (auto &[id, c] : v.terms) {
		int m = interned(id).degree();
		if (m > q.cap)
			throw std::runtime_error("reduce: term above quotient cap");
		auto &D = q.degs[(size_t)m];
		auto it = D.col.find(id);
		if (it == D.col.end())
			throw std::runtime_error("reduce: diagram not in quotient enumeration");
		per[(size_t)m].add(it->second, c);
	}
	for (int m = 0; m <= q.cap; m++) {
		if (per[(size_t)m].zero())
			continue;
		SparseVec r = q.degs[(size_t)m].rels.reduce(per[(size_t)m]);
		for (auto &[col, c] : r.e)
			out.add(q.degs[(size_t)m].ids[(size_t)col], c);
	}
	return out;
}

FormalSum stu_to_chords(const FormalSum &v)
{
	if (v.directed)
		throw std::runtime_error("stu_to_chords: undirected sums only");
	FormalSum work = v, done(v.skel, false, v.cap);
	while (!work.terms.empty()) {
		auto it = work.terms.begin();
		int id = it->first;
		Rat c = it->second;
		work.terms.erase(it);
		const Diagram &d = interned(id);
		if (d.nint == 0) {
			done.add(id, c);
			continue;
		}
		int u = -1, sl = -1;
		for (int x = d.E(); x < d.nverts() && u < 0; x++)
			for (int s = 0; s < 3 && u < 0; s++)
				if (d.mate[(size_t)d.he(x, s)] < d.E()) {
					u = x;
					sl = s;
				}
		if (u < 0)
			throw std::runtime_error(
			    "stu_to_chords: body component without external vertex");
		// S = T - U at (u,sl): replace c*S by c*T - c*U
		FormalSum inst = stu_instance(d, u, sl);
		inst.add(id, -1); // keep only -(-T + U) = T - U ... sign below
		for (auto &[tid, tc] : inst.terms)
			work.add(tid, -c * tc);
	}
	return done;
}

} // namespace jd
