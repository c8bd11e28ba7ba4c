#pragma once
// Structure maps on diagram spaces: juxtaposition products, cabling,
// counit, component reversal, closure, PBW maps chi/sigma, directization,
// leg-gluing operators, truncated power series, and the stock elements.

#include "jd/formal.hpp"
#include <vector>

namespace jd {

// skeleton builders
Skeleton lines(int n);
Skeleton circles(int n);
Skeleton star_skel(const std::string &name = "x");

// A(M1) x A(M2) -> A(M1 u M2): disjoint union with concatenated components
FormalSum boxtimes(const FormalSum &a, const FormalSum &b);

// glue component m2 onto the end of m1 (both Interval or both Star);
// m2 disappears, components above it shift down
FormalSum product(const FormalSum &v, int m1, int m2);

// algebra product on a common skeleton with no Circle components:
// a's legs come before b's legs on every component
FormalSum mul(const FormalSum &a, const FormalSum &b);
FormalSum commutator(const FormalSum &a, const FormalSum &b);

// sum over all splittings of m's legs between m and a copy inserted after it
FormalSum cabling(const FormalSum &v, int m);

// kill diagrams touching m, delete m from the skeleton
FormalSum counit(const FormalSum &v, int m);

// reverse m (1-dimensional only) and scale by (-1)^{#legs on m}
FormalSum antipode(const FormalSum &v, int m);

FormalSum trace_close(const FormalSum &v, int m); // Interval -> Circle
FormalSum cut_circle(const FormalSum &v, int m);  // Circle -> Interval

// place component i of v on strand slots[i] (1-based) of n fresh strands
FormalSum relabel(const FormalSum &v, const std::vector<int> &slots, int n);

FormalSum chi(const FormalSum &v, int m);   // Star m -> Interval, leg average
FormalSum sigma(const FormalSum &v, int m); // Interval m -> Star, PBW inverse

// sum over all 2^{#edges} direction assignments
FormalSum iota(const FormalSum &v);

FormalSum iterated_coproduct(const FormalSum &v, int n);

// leg-gluing operators on an Interval component (0-based leg positions)
FormalSum leg_permute(const Diagram &d, int comp, const std::vector<int> &pi);
FormalSum glue_join(const Diagram &d, int comp, int i); // s_i
// word letters are swap indices; the last letter acts first
FormalSum apply_word(const FormalSum &v, int comp, const std::vector<int> &w);
FormalSum gamma_word(const Diagram &d, int comp, const std::vector<int> &w);
FormalSum gamma_word(const FormalSum &v, int comp, const std::vector<int> &w);
std::vector<int> perm_to_word(const std::vector<int> &pi);

// truncated power series in the mul algebra (caps must be finite)
FormalSum fs_exp(const FormalSum &x);  // x with no degree-0 part
FormalSum fs_log(const FormalSum &a);  // a = 1 + higher
FormalSum fs_inv(const FormalSum &a);  // unit coefficient nonzero
FormalSum fs_sqrt(const FormalSum &a); // a = 1 + higher

// stock elements
FormalSum el_casimir(int cap);        // chord on one strand
FormalSum el_omega(int cap);          // chord between two strands
FormalSum el_rkz(int cap);            // exp(omega/2)
FormalSum el_rarrow(int cap);         // arrow with head on strand 1
FormalSum el_rho(int cap);            // (leftHalfCirc - rightHalfCirc)/2
FormalSum el_tadpole_down(int cap);   // arrow from strand into its own Y stem
FormalSum el_tadpole_up(int cap);
FormalSum el_wheel(int legs, int cap); // even-legged wheel in A(*)

} // namespace jd
