#pragma once
// Parenthesized framed tangles presented by generator words, quasi-Hopf
// structure data carried by diagram spaces, the decorated-skeleton
// evaluation of tangle words, coproduct twisting, and the relation
// checklist that certifies isotopy invariance at a degree cap.

#include "jd/formal.hpp"
#include "jd/spaces.hpp"
#include <iosfwd>
#include <string>
#include <vector>

namespace jd {

// A fully parenthesized word over {u, d} with at most one slot marker '*'.
// Canonical text: "" is the empty word, single letters are atoms, and
// every non-leaf node is a binary pair "(w1 w2)".
struct ParenString {
	std::string s;

	ParenString() = default;
	explicit ParenString(std::string t) : s(std::move(t)) {}
	// accepts "e" for the empty word and skips '?' characters
	static ParenString parse(const std::string &text);

	bool empty() const { return s.empty(); }
	int arrows() const;       // number of u/d letters
	std::string flat() const; // letters only, parens and '*' dropped
	bool has_star() const;
	int star_arrow_index() const; // arrows strictly left of the '*'
	// replace '*' by a; an empty replacement erases the enclosing pair
	ParenString subst(const ParenString &a) const;
	bool operator==(const ParenString &) const = default;
	std::string str() const { return s.empty() ? "e" : s; }
};

ParenString ps_pair(const ParenString &a, const ParenString &b);

enum class GenKind { Ra, La, Ov, Un, Cp, Cn, Ap, An };

const char *gen_name(GenKind k);

// one generator application: a reassociation (Ra/La: needs A, B, C),
// a braiding (Ov/Un: needs A, B), or a pair creation/annihilation
// (Cp/Cn/Ap/An: context only), inside the context W (exactly one '*')
struct GenApp {
	GenKind kind = GenKind::Ra;
	ParenString W, A, B, C;

	ParenString domain() const;
	ParenString target() const;
	void validate() const; // throws std::runtime_error
	std::string str() const;
};

struct TangleWord {
	std::vector<GenApp> gens;

	void validate() const; // contexts well formed, consecutive targets match
	ParenString domain() const;
	ParenString target() const;
};

TangleWord parse_tangle(std::istream &in);
TangleWord load_tangle(const std::string &path);

// Quasi-triangular quasi-Hopf structure on a diagram space with a ribbon
// element.  The coproduct is strand cabling conjugated by the accumulated
// twist F (F = 1 means plain cabling); the antipode is component reversal.
struct QuasiHopfData {
	bool directed = false;
	int cap = 3;
	FormalSum Phi, PhiInv; // three strands
	FormalSum R, RInv;     // two strands
	FormalSum F, FInv;     // two strands, accumulated coproduct twist
	FormalSum alpha, beta; // one strand
	FormalSum u, uInv, v, vInv;
};

QuasiHopfData make_akz(int cap);   // undirected chord-diagram structure
QuasiHopfData make_aarkz(int cap); // its directed image under iota

// coproduct of H at strand m of x (cabling + twist conjugation)
FormalSum coproduct(const QuasiHopfData &H, const FormalSum &x, int m);

// iterated coproduct along the bracketing of W applied to strand m of x;
// the empty word removes the strand.  delta_W additionally applies the
// antipode on every 'd' position; delta_W0 is the direction-blind part.
FormalSum delta_W0(const QuasiHopfData &H, const FormalSum &x, int m,
                   const ParenString &W);
FormalSum delta_W(const QuasiHopfData &H, const FormalSum &x, int m,
                  const ParenString &W);

// u = S(Ybar_i beta S(Zbar_i)) S(t_j) alpha s_j Xbar_i, contracted
// diagrammatically from PhiInv and R
FormalSum u_element(const QuasiHopfData &H);
// inverse of X_i S(Y_i) Z_i, the canonical alpha for the chord structures
FormalSum nu_element(const FormalSum &Phi);

// twisted structure: Delta_F = F Delta(.) F^{-1}, Phi_F, R_F, alpha_F,
// beta_F; same ribbon element.  Throws when F fails the counit
// normalization or an invariant breaks at the cap.
QuasiHopfData twist(const QuasiHopfData &H, const FormalSum &F2);

// re-check pentagon, hexagons, the antipode identities, v^2 = u S(u) and
// Delta(v) = (v x v)(R21 R)^{-1}; returns the names of failed identities
std::vector<std::string> verify_quasi_hopf(const QuasiHopfData &H);

// ---- decorated skeletons (images of tangle words) ----

struct HSEnd {
	int side = 0; // 0 bottom, 1 top
	int pos = 0;
	auto operator<=>(const HSEnd &) const = default;
};

struct HSComp {
	bool circle = false;
	HSEnd tail, head; // meaningful for open components only
	auto operator<=>(const HSComp &) const = default;
};

struct HSMorphism {
	std::string dom, tgt;       // flat arrow letters top and bottom
	std::vector<HSComp> comps;  // order matches the decoration skeleton
	FormalSum x;                // Interval per open comp, Circle per closed
};

// comp i of v becomes comp perm[i]
FormalSum permute_components(const FormalSum &v, const std::vector<int> &perm);

HSMorphism hs_identity(const QuasiHopfData &H, const ParenString &W);
HSMorphism hs_generator(const QuasiHopfData &H, const GenApp &g);
// stack b on top of a: glue a's target to b's domain, multiply decorations
// from tail to head along every merged component, trace closed loops
HSMorphism hs_compose(const HSMorphism &a, const HSMorphism &b);
HSMorphism hs_normal(const HSMorphism &m);
// equality of normalized morphisms modulo diagram relations at H.cap
bool hs_equal(const QuasiHopfData &H, const HSMorphism &a, const HSMorphism &b);

HSMorphism z_eval(const QuasiHopfData &H, const TangleWord &t);

// ---- twist cascades on vertical strands ----

FormalSum lm_f0(const QuasiHopfData &H, const FormalSum &F2,
                const ParenString &W);
FormalSum lm_g0(const QuasiHopfData &H, const FormalSum &F2,
                const ParenString &W);
// vertical strands over W decorated by S_W(lm_f0) (inverse: S_W(lm_g0))
HSMorphism lm_cascade(const QuasiHopfData &H, const FormalSum &F2,
                      const ParenString &W, bool inverse);

// ---- isotopy relation checklist ----

struct RelationReport {
	std::string name;
	bool pass = false;
};
std::vector<RelationReport> relation_suite(const QuasiHopfData &H);

} // namespace jd
