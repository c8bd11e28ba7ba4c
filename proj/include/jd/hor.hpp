#pragma once
// Truncated algebra of horizontal chords on n strands, the infinitesimal
// braid quotient, and a degree-by-degree rational associator solver.

#include "jd/formal.hpp"
#include "jd/rat.hpp"
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jd {

// Elements are raw word sums over the generators t^{ij} = t^{ji}; reduction
// into the quotient happens on demand (products stay cheap on words).
struct HorElement {
	int strands = 0;
	int cap = 1 << 20;
	std::map<std::vector<int>, Rat> terms; // word of pair codes -> coefficient

	static int npairs(int n) { return n * (n - 1) / 2; }
	static int pair_code(int n, int i, int j);             // 0-based, i != j
	static std::pair<int, int> code_pair(int n, int code); // (i < j)

	void add(const std::vector<int> &w, const Rat &c);
	HorElement &operator+=(const HorElement &o);
	HorElement &operator-=(const HorElement &o);
	HorElement &operator*=(const Rat &r);
	friend HorElement operator+(HorElement a, const HorElement &b) { return a += b; }
	friend HorElement operator-(HorElement a, const HorElement &b) { return a -= b; }
	friend HorElement operator*(HorElement a, const Rat &r) { return a *= r; }
	bool is_zero() const { return terms.empty(); }
	bool operator==(const HorElement &o) const
	{
		return strands == o.strands && terms == o.terms;
	}
	HorElement part(int d) const; // homogeneous degree-d piece
	std::string str() const;      // deterministic listing, t12.t23 style
};

HorElement hor_unit(int n, int cap);
HorElement hor_gen(int n, int i, int j, int cap);
HorElement hor_mul(const HorElement &a, const HorElement &b);
HorElement hor_exp(const HorElement &x); // x with no degree-0 part
HorElement hor_inv(const HorElement &a); // degree-0 coefficient nonzero

// strand plumbing: place strand s onto slot[s] (tensor-leg superscripts),
// double strand s (coproduct on one leg), delete strand s (counit on one leg)
HorElement hor_place(const HorElement &x, const std::vector<int> &slot, int n);
HorElement hor_cable(const HorElement &x, int s);
HorElement hor_counit(const HorElement &x, int s);

// normal form modulo [t^{ij},t^{kl}] = 0 (disjoint) and
// [t^{jk}, t^{ij}+t^{ik}] = 0, degreewise via exact elimination
HorElement hor_reduce(const HorElement &x);
bool hor_equal(const HorElement &a, const HorElement &b);
long hor_dim(int n, int d); // dimension of the degree-d graded piece

struct Associator {
	int cap = 0;
	HorElement R;   // exp(t^{12}/2) on two strands
	HorElement phi; // on three strands; even, non-degenerate
};

// residuals of the defining equations, reduced; zero iff the equation holds
// through the element caps
HorElement pentagon_residual(const HorElement &phi);
std::pair<HorElement, HorElement> hexagon_residuals(const HorElement &phi,
                                                    const HorElement &R);
HorElement qqybe_residual(const HorElement &phi, const HorElement &R);

// degree-by-degree linear solve; even gauge, remaining freedom zeroed;
// throws if some degree is inconsistent (which would signal a bug)
Associator solve_associator(int cap);

// words become chord diagrams stacked bottom-to-top in word order
FormalSum embed_hor(const HorElement &x, int cap);

} // namespace jd
