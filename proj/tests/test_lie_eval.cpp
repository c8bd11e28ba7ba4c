#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jd/lie.hpp"
#include "jd/ops.hpp"
#include "jd/scratch.hpp"
#include "jd/spaces.hpp"

#include <string>
#include <vector>

using namespace jd;

namespace {

const int CAP = 8;

std::string data_path(const std::string &file)
{
	return std::string(JD_SOURCE_DIR) + "/data/" + file;
}

EnvTensor tens(int strands, std::initializer_list<
                                std::pair<std::pair<int, std::vector<std::vector<int>>>, Rat>>
                                items)
{
	EnvTensor t;
	t.strands = strands;
	for (auto &[k, c] : items)
		t.add(k.first, k.second, c);
	return t;
}

// one-strand tensor evaluated as a matrix in a representation
Mat env_matrix(const EnvTensor &t, const LieRep &R)
{
	Mat m((size_t)R.dim, std::vector<Rat>((size_t)R.dim));
	for (auto &[k, c] : t.terms) {
		Mat prod((size_t)R.dim, std::vector<Rat>((size_t)R.dim));
		for (int i = 0; i < R.dim; i++)
			prod[(size_t)i][(size_t)i] = 1;
		for (int letter : k.second[0]) {
			Mat next((size_t)R.dim, std::vector<Rat>((size_t)R.dim));
			for (int a = 0; a < R.dim; a++)
				for (int b = 0; b < R.dim; b++)
					for (int l = 0; l < R.dim; l++)
						next[(size_t)a][(size_t)l] +=
						    prod[(size_t)a][(size_t)b] * R.mat[(size_t)letter][(size_t)b][(size_t)l];
			prod = next;
		}
		for (int a = 0; a < R.dim; a++)
			for (int b = 0; b < R.dim; b++)
				m[(size_t)a][(size_t)b] += c * prod[(size_t)a][(size_t)b];
	}
	return m;
}

bool throws_containing(const std::function<void()> &f, const std::string &needle)
{
	try {
		f();
	} catch (const std::exception &e) {
		return std::string(e.what()).find(needle) != std::string::npos;
	}
	return false;
}

} // namespace

TEST_CASE("built-in algebras match their file copies and validate")
{
	LieAlg L = sl2();
	LieAlg F = load_lie(data_path("sl2.lie"));
	CHECK(F.n == L.n);
	CHECK(F.br == L.br);
	CHECK(F.met == L.met);
	CHECK(F.cobr == L.cobr);
	REQUIRE(F.reps.size() == 1);
	CHECK(F.rep("fund").mat == L.rep("fund").mat);

	LieAlg B = load_lie(data_path("borel_sl2.lie"));
	LieAlg Bi = borel_sl2();
	CHECK(B.br == Bi.br);
	CHECK(B.cobr == Bi.cobr);
	CHECK_FALSE(B.has_metric);

	CHECK_NOTHROW(load_lie(data_path("xy2.lie")));
	CHECK_NOTHROW(load_lie(data_path("ab1.lie")));
	LieAlg A1 = abelian1();
	CHECK(A1.has_cobr);
}

TEST_CASE("validation pinpoints broken axioms")
{
	// missing antisymmetric partner
	CHECK(throws_containing(
	    [] {
		    LieAlg L = parse_lie("dim 2\nbracket 1 2 -> 1 1\n", "bad");
		    L.validate();
	    },
	    "antisymmetry"));
	// [x3,x1] = x1 makes the (1,2,3) Jacobi cycle land on [x1,x2] = x3 != 0
	CHECK(throws_containing(
	    [] {
		    std::string t = "dim 3\n"
		                    "bracket 1 2 -> 3 1\nbracket 2 1 -> 3 -1\n"
		                    "bracket 2 3 -> 1 1\nbracket 3 2 -> 1 -1\n"
		                    "bracket 3 1 -> 1 1\nbracket 1 3 -> 1 -1\n";
		    LieAlg L = parse_lie(t, "bad");
		    L.validate();
	    },
	    "Jacobi"));
	// metric not invariant for sl2
	CHECK(throws_containing(
	    [] {
		    LieAlg L = sl2();
		    L.met[2][2] = 5;
		    L.validate();
	    },
	    "invariance"));
	// flipping delta(f) breaks the cocycle identity at the pair (e,f)
	CHECK(throws_containing(
	    [] {
		    LieAlg L = sl2();
		    L.cobr[1][1][2] = Rat(-1, 2);
		    L.cobr[1][2][1] = Rat(1, 2);
		    build_double(L);
	    },
	    "cocycle"));
	// representation matrices that do not satisfy the bracket relations
	CHECK(throws_containing(
	    [] {
		    LieAlg L = sl2();
		    L.reps[0].mat[0][0][1] = 7;
		    L.validate();
	    },
	    "rep fund"));
	CHECK(throws_containing([] { parse_lie("bracket 1 1 -> 1 1\n", "bad"); },
	                        "dim must come first"));
	CHECK(throws_containing([] { load_lie(data_path("no_such.lie")); }, "cannot open"));
}

TEST_CASE("inverse-metric and casimir tensors on sl2")
{
	LieAlg L = sl2();
	EnvTensor om = tg_eval(el_omega(CAP), L);
	CHECK(om == tens(2, {{{1, {{0}, {1}}}, 1},
	                     {{1, {{1}, {0}}}, 1},
	                     {{1, {{2}, {2}}}, Rat(1, 2)}}));

	EnvTensor cas = tg_eval(el_casimir(CAP), L);
	CHECK(cas == tens(1, {{{1, {{0, 1}}}, 2},
	                      {{1, {{2}}}, -1},
	                      {{1, {{2, 2}}}, Rat(1, 2)}}));

	const LieRep &fund = L.rep("fund");
	Mat m = env_matrix(cas, fund);
	CHECK(m[0][0] == Rat(3, 2));
	CHECK(m[1][1] == Rat(3, 2));
	CHECK(m[0][1] == 0);
	CHECK(m[1][0] == 0);

	auto tr = trace_on_rep(cas, {&fund});
	CHECK(tr == std::map<int, Rat>{{1, 3}});
	auto tr0 = trace_on_rep(tg_eval(unit_sum(lines(1), false, CAP), L), {&fund});
	CHECK(tr0 == std::map<int, Rat>{{0, 2}});
}

TEST_CASE("undirected relation instances evaluate to zero")
{
	LieAlg L = sl2();
	for (int strands : {1, 2})
		for (int m = 1; m <= 2; m++)
			for (auto &r : generate_relations(lines(strands), m, RelSet::A))
				CHECK(tg_eval(r, L).is_zero());
	// degree 3, sampled
	auto rels = generate_relations(lines(1), 3, RelSet::A);
	REQUIRE(rels.size() > 10);
	for (size_t i = 0; i < rels.size(); i += 3)
		CHECK(tg_eval(rels[i], L).is_zero());
}

TEST_CASE("directed relation instances die in the double")
{
	ManinTriple mt = build_double(borel_sl2());
	CHECK(mt.alg.n == 4);
	for (int strands : {1, 2})
		for (int m = 1; m <= 2; m++)
			for (auto &r : generate_relations(lines(strands), m, RelSet::Aarrow))
				CHECK(tar_eval(r, mt).is_zero());
	// chord-level six-term relations are the Yang-Baxter identity here
	auto yb = generate_relations(lines(3), 2, RelSet::PolyakChord);
	REQUIRE(!yb.empty());
	for (auto &r : yb)
		CHECK(tar_eval(r, mt).is_zero());
	// the double of the other toy bialgebras also validates
	CHECK_NOTHROW(build_double(load_lie(data_path("xy2.lie"))));
	ManinTriple ab = build_double(abelian1());
	for (int i = 0; i < 2; i++)
		for (int j = 0; j < 2; j++)
			for (int k = 0; k < 2; k++)
				CHECK(ab.alg.br[(size_t)i][(size_t)j][(size_t)k] == 0);
	CHECK(ab.alg.met[0][1] == 1);
}

TEST_CASE("arrow and half-density values project onto sl2")
{
	ManinTriple mt = build_double(borel_sl2());
	Mat p = borel_double_to_sl2();
	LieAlg g = sl2();

	// double basis: 0=e, 1=h, 2=e*, 3=h*
	EnvTensor ra = tar_eval(el_rarrow(CAP), mt);
	CHECK(ra == tens(2, {{{1, {{0}, {2}}}, 1}, {{1, {{1}, {3}}}, 1}}));
	EnvTensor rg = env_map(ra, p, g);
	CHECK(rg == tens(2, {{{1, {{0}, {1}}}, 1}, {{1, {{2}, {2}}}, Rat(1, 4)}}));

	EnvTensor rho = tar_eval(el_rho(CAP), mt);
	CHECK(rho == tens(1, {{{1, {{3}}}, 1}, {{1, {{1}}}, Rat(1, 4)}}));
	EnvTensor rho_g = env_map(rho, p, g);
	CHECK(rho_g == tens(1, {{{1, {{2}}}, Rat(1, 2)}}));
}

TEST_CASE("forgetting directions matches evaluation in the double")
{
	ManinTriple mt = build_double(borel_sl2());
	std::vector<FormalSum> samples = {el_casimir(CAP), el_omega(CAP),
	                                  mul(el_casimir(CAP), el_casimir(CAP)),
	                                  el_wheel(2, CAP)};
	for (auto &v : samples) {
		EnvTensor undirected = tg_eval(v, mt.alg);
		EnvTensor summed = tar_eval(iota(v), mt);
		CHECK(undirected == summed);
	}
}

TEST_CASE("evaluation is independent of the diagram presentation")
{
	LieAlg L = sl2();
	// one internal vertex joined to three legs, built in two cyclic orders
	auto build = [&](bool flip) {
		Scratch sc;
		sc.skel = lines(1);
		int a = sc.add_leg(0, 0), b = sc.add_leg(0, 1), c = sc.add_leg(0, 2);
		auto p = sc.add_vertex();
		sc.wire(p[0], a);
		sc.wire(flip ? p[2] : p[1], b);
		sc.wire(flip ? p[1] : p[2], c);
		return sc.to_diagram();
	};
	Diagram d0 = build(false), d1 = build(true);
	EnvTensor t0 = tg_eval(d0, L), t1 = tg_eval(d1, L);
	EnvTensor neg = t1;
	neg *= -1;
	CHECK(t0 == neg);
	CHECK(!t0.is_zero());

	// the canonical interned form evaluates to the same tensor up to its sign
	auto [id, sgn] = canon_id(d0);
	REQUIRE(id >= 0);
	EnvTensor tc = tg_eval(interned(id), L);
	tc *= sgn;
	CHECK(tc == t0);
}

TEST_CASE("structure maps intertwine with evaluation")
{
	LieAlg L = sl2();
	FormalSum c = el_casimir(CAP);
	FormalSum cc = mul(c, c);
	EnvTensor tc = tg_eval(c, L), tcc = tg_eval(cc, L);
	CHECK(tcc == env_mul(tc, tc, L));
	CHECK(tg_eval(mul(cc, c), L) == env_mul(tcc, tc, L));
	for (auto &v : {c, cc})
		CHECK(tg_eval(cabling(v, 0), L) == env_coproduct(tg_eval(v, L), 0));
}

TEST_CASE("representation traces give the two-sided exponential series")
{
	LieAlg g = sl2();
	ManinTriple mt = build_double(borel_sl2());
	EnvTensor rho_g = env_map(tar_eval(el_rho(CAP), mt), borel_double_to_sl2(), g);
	EnvTensor ex = env_exp(rho_g, g, 4);
	auto tr = trace_on_rep(ex, {&g.rep("fund")});
	// exp(x/2) + exp(-x/2) = 2 + x^2/4 + x^4/192 + ...
	CHECK(tr == std::map<int, Rat>{{0, 2}, {2, Rat(1, 4)}, {4, Rat(1, 192)}});
}
