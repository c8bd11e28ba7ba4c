#pragma once
// Evaluation of diagrams into enveloping-algebra tensors for metrized Lie
// algebras, Lie bialgebras and their doubles, plus representation traces.

#include "jd/formal.hpp"
#include "jd/rat.hpp"
#include <map>
#include <string>
#include <vector>

namespace jd {

using Mat = std::vector<std::vector<Rat>>; // dense, row major

struct LieRep {
	std::string name;
	int dim = 0;
	std::vector<Mat> mat; // mat[i] = matrix of basis element i
};

// A Lie algebra with optional metric, cobracket and representations.
// Everything is stored over exact rationals; validate() checks antisymmetry,
// Jacobi, metric symmetry/invertibility/invariance, co-Jacobi and the
// bracket/cobracket cocycle identity for whatever pieces are present.
struct LieAlg {
	std::string name;
	int n = 0;
	std::vector<std::string> basis; // labels, defaulting to x1..xn
	// br[i][j][k]: [x_i, x_j] = sum_k br[i][j][k] x_k
	std::vector<std::vector<std::vector<Rat>>> br;
	bool has_metric = false;
	Mat met, met_inv;
	bool has_cobr = false;
	// cobr[i][j][k]: delta(x_i) = sum_{j,k} cobr[i][j][k] x_j (x) x_k
	std::vector<std::vector<std::vector<Rat>>> cobr;
	std::vector<LieRep> reps;

	// ([x_a, x_b], x_c), the cyclically invariant vertex tensor
	Rat f_low(int a, int b, int c) const;
	const LieRep &rep(const std::string &rname) const;
	void validate() const; // throws std::runtime_error with the violating triple
};

// text format: `dim n`, `bracket i j -> k coeff`, `metric i j coeff`,
// `cobracket i -> j k coeff`, `rep <name> i row col coeff`; 1-based indices,
// '#' comments. Entries are literal: antisymmetric partners are listed, not
// implied, so validation is meaningful.
LieAlg parse_lie(const std::string &text, const std::string &name);
LieAlg load_lie(const std::string &path); // parse + validate

// built-ins
LieAlg sl2();       // (e,f,h), metric Tr(xy), fundamental rep, standard cobracket
LieAlg borel_sl2(); // (e,h) with [e,h]=-2e, delta(e)=e^h/2; no metric
LieAlg abelian1();  // one generator, zero bracket and cobracket

struct ManinTriple {
	LieAlg alg; // the double a (+) a^*, hyperbolic metric
	int half;   // indices 0..half-1 = a, half..2*half-1 = a^*
};

// Drinfel'd double of a Lie bialgebra; rejects inputs violating the bialgebra
// axioms, and cross-checks the result against the full metrized validation.
ManinTriple build_double(const LieAlg &a);

// projection from the double of borel_sl2() onto sl2():
// e -> e, h -> h, e* -> f, h* -> h/4  (rows indexed by sl2 basis)
Mat borel_double_to_sl2();

// Tensors in U(g)^{(x) strands}: PBW-ordered monomial words per strand
// (ascending basis index), with an hbar-degree per term (= diagram degree).
struct EnvTensor {
	int strands = 0;
	// (hbar degree, one word per strand) -> coefficient
	std::map<std::pair<int, std::vector<std::vector<int>>>, Rat> terms;

	void add(int hdeg, const std::vector<std::vector<int>> &key, const Rat &c);
	EnvTensor &operator+=(const EnvTensor &o);
	EnvTensor &operator-=(const EnvTensor &o);
	EnvTensor &operator*=(const Rat &r);
	bool is_zero() const { return terms.empty(); }
	bool operator==(const EnvTensor &o) const
	{
		return strands == o.strands && terms == o.terms;
	}
	std::string str(const LieAlg &L) const;
};

// straighten an arbitrary word into PBW order inside out (used by all maps)
void pbw_accumulate(const LieAlg &L, int hdeg, std::vector<std::vector<int>> key,
                    Rat c, EnvTensor &out);

// undirected evaluation: inverse metric on edges, lowered bracket on internal
// vertices, legs multiplied along each strand in position order (earliest
// leftmost). Star components are symmetrized over leg orderings; Circle
// components are rejected (cut them and close with trace_on_rep).
EnvTensor tg_eval(const Diagram &d, const LieAlg &L);
EnvTensor tg_eval(const FormalSum &v, const LieAlg &L);

// directed evaluation into the double: an arc carries x_i at its head and
// xi^i at its tail; vertices use the double's lowered bracket, so sinks and
// sources vanish by isotropy and (2in,1out)/(1in,2out) vertices contract with
// the bracket/cobracket of the half.
EnvTensor tar_eval(const Diagram &d, const ManinTriple &mt);
EnvTensor tar_eval(const FormalSum &v, const ManinTriple &mt);

// algebra on tensors
EnvTensor env_mul(const EnvTensor &a, const EnvTensor &b, const LieAlg &L,
                  int hcap = 1 << 20);
// U-coproduct on one strand: strand s splits into strands s, s+1
EnvTensor env_coproduct(const EnvTensor &t, int s);
// exp of a tensor with no hbar-degree-0 part, truncated at hcap
EnvTensor env_exp(const EnvTensor &t, const LieAlg &L, int hcap);
// apply a linear-on-generators map (rows = target basis) letterwise, then
// restraighten in the target algebra
EnvTensor env_map(const EnvTensor &t, const Mat &m, const LieAlg &target);

// hbar-degree -> scalar: evaluate each strand word in its representation,
// trace, and multiply the strand traces
std::map<int, Rat> trace_on_rep(const EnvTensor &t,
                                const std::vector<const LieRep *> &reps);

} // namespace jd
