#pragma once
// Relation generation and quotient spaces for diagram algebras.

#include "jd/formal.hpp"
#include "jd/sparse.hpp"
#include <string>
#include <vector>

namespace jd {

enum class RelSet {
	A,            // undirected: STU + IHX (AS absorbed by canonical signs)
	Achord,       // undirected chord diagrams mod 4T
	Aarrow,       // directed: NS + STU + IHX (mixed shapes included)
	AarrowPlus,   // image of all-incoming diagrams inside Aarrow
	AarrowMinus,  // image of all-outgoing diagrams inside Aarrow
	MPlus,        // Aarrow + "rightmost leg incoming = 0" (single interval)
	MMinus,       // Aarrow + "rightmost leg outgoing = 0" (single interval)
	PolyakChord,  // directed chord diagrams mod 6T
	PolyakAcyclic // acyclic directed diagrams mod all-acyclic Aarrow instances
};

const char *relset_name(RelSet);
bool relset_directed(RelSet);

std::vector<FormalSum> generate_relations(const Skeleton &s, int m, RelSet rs,
                                          bool body_filter = true);

struct QuotientSpace {
	Skeleton skel;
	int cap = 0;
	RelSet rs = RelSet::A;
	bool body_filter = true; // drop diagrams with closed body components
	struct Deg {
		std::vector<int> ids; // enumerated canonical diagram ids (column order)
		std::map<int, int> col;
		RrefBasis rels;
		std::vector<int> basis; // non-pivot ids
		RrefBasis image;        // AarrowPlus/Minus only: span of reduced coords
		long raw = 0;
	};
	std::vector<Deg> degs;

	int dim(int m) const;
	long raw(int m) const { return degs[(size_t)m].raw; }
	int rank(int m) const { return degs[(size_t)m].rels.rank(); }
};

QuotientSpace build_quotient(const Skeleton &s, int cap, RelSet rs,
                             bool body_filter = true);

// canonical coset representative: expansion over basis diagrams
FormalSum reduce(const QuotientSpace &q, const FormalSum &v);

// eliminate internal vertices by STU rewrites; undirected, boundary-connected
FormalSum stu_to_chords(const FormalSum &v);

// single STU instance S - T + U = 0 built at (internal vertex u, slot s whose
// mate is a leg); returns {S:1, T:-1, U:+1} summed with canonical signs
FormalSum stu_instance(const Diagram &d, int u, int s);

bool has_directed_cycle(const Diagram &d);
bool all_legs_incoming(const Diagram &d);
bool all_legs_outgoing(const Diagram &d);
bool has_sink_or_source(const Diagram &d);
bool body_is_boundary_connected(const Diagram &d);

} // namespace jd
