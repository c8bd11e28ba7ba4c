#pragma once
// Jacobi diagrams on a skeleton: representation, canonical forms, enumeration.

#include "jd/rat.hpp"
#include <string>
#include <vector>
#include <iosfwd>
#include <optional>

namespace jd {

enum class CompKind { Interval, Circle, Star };

struct Skeleton {
	struct Comp {
		CompKind kind;
		std::string name; // stars only
		bool operator==(const Comp &) const = default;
	};
	std::vector<Comp> comps;

	static Skeleton of(const std::string &toks); // "I O *x"
	std::string str() const;
	bool operator==(const Skeleton &) const = default;
};

// Half-edge layout: external vertex i owns half-edge i (0 <= i < E);
// internal vertex j owns E+3j, E+3j+1, E+3j+2, stored order = cyclic order.
struct Diagram {
	Skeleton skel;
	bool directed = false;
	std::vector<std::pair<int, int>> ext; // (component, position), both 0-based;
	                                      // sorted by (comp,pos), positions 0..k-1 per comp
	int nint = 0;
	std::vector<int> mate;  // involution on half-edges, no fixed points
	std::vector<char> head; // directed only: head[h]=1 iff the arrow points into h's vertex
	int sign = +1;

	int E() const { return (int)ext.size(); }
	int H() const { return E() + 3 * nint; }
	int vertex_of(int h) const { return h < E() ? h : E() + (h - E()) / 3; }
	int slot_of(int h) const { return h < E() ? 0 : (h - E()) % 3; }
	int he(int v, int slot) const { return E() + 3 * (v - E()) + slot; }
	int nverts() const { return E() + nint; }
	int degree() const { return nverts() / 2; }

	// sort ext legs by (comp,pos) and renumber positions to dense ranks,
	// rewiring mate/head accordingly
	void normalize();
	void validate() const; // throws std::runtime_error
	std::string key() const;
};

struct CanonicalForm {
	int sign = 0; // 0 = Zero (self-negating diagram)
	Diagram d;    // sign field inside d is +1 when sign != 0
};

CanonicalForm canonicalize(const Diagram &d);

// Global intern table: canonical diagram <-> dense id.
int intern_diagram(const Diagram &canonical);
const Diagram &interned(int id);
// canonicalize + intern; returns (id, sign); id = -1 when Zero
std::pair<int, int> canon_id(const Diagram &d);

// text format round-trip
std::string diagram_to_text(const Diagram &d);
std::optional<Diagram> parse_diagram(std::istream &in);
Diagram parse_diagram_str(const std::string &record);

// All canonical diagrams of degree exactly m on s, duplicate-free, sorted by key.
// connected_body_only drops diagrams with a connected component not touching
// the skeleton.
std::vector<int> enumerate_diagrams(const Skeleton &s, int m, bool directed,
                                    bool connected_body_only);
std::vector<int> enumerate_chord_diagrams(const Skeleton &s, int m);
std::vector<int> enumerate_chord_diagrams_directed(const Skeleton &s, int m);

// guard for enumeration blow-ups (settable via CLI)
extern long enumeration_guard;

} // namespace jd
