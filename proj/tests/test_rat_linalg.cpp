#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jd/sparse.hpp"
#include <random>

using namespace jd;

// Independent dense elimination; deliberately shares no code with RrefBasis.
static int dense_rank(std::vector<std::vector<Rat>> m)
{
	int rank = 0;
	size_t rows = m.size();
	if (rows == 0)
		return 0;
	size_t cols = m[0].size();
	for (size_t c = 0; c < cols && rank < (int)rows; c++) {
		size_t piv = rank;
		while (piv < rows && m[piv][c] == 0)
			piv++;
		if (piv == rows)
			continue;
		std::swap(m[piv], m[(size_t)rank]);
		for (size_t r = 0; r < rows; r++) {
			if ((int)r == rank || m[r][c] == 0)
				continue;
			Rat f = m[r][c] / m[(size_t)rank][c];
			for (size_t k = c; k < cols; k++)
				m[r][k] -= f * m[(size_t)rank][k];
		}
		rank++;
	}
	return rank;
}

static SparseVec sv(std::initializer_list<std::pair<int, Rat>> xs)
{
	SparseVec v;
	for (auto &[c, x] : xs)
		v.set(c, x);
	return v;
}

TEST_CASE("rref insert basics")
{
	RrefBasis b;
	SparseVec r = b.insert(sv({{0, 1}}));
	CHECK(b.rank() == 1);
	CHECK(!r.zero());

	RrefBasis b2;
	b2.insert(sv({{0, 2}, {1, 4}}));
	SparseVec dep = b2.insert(sv({{0, 1}, {1, 2}}));
	CHECK(dep.zero());
	CHECK(b2.rank() == 1);
}

TEST_CASE("rank agrees with dense oracle on random sparse sets")
{
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 40; trial++) {
		int cols = 1 + (int)(rng() % 12);
		int rows = 1 + (int)(rng() % 16);
		std::vector<std::vector<Rat>> dense(rows, std::vector<Rat>(cols, 0));
		RrefBasis rb;
		for (int r = 0; r < rows; r++) {
			SparseVec v;
			for (int c = 0; c < cols; c++) {
				if (rng() % 3 == 0) {
					long num = (long)(rng() % 9) - 4;
					long den = 1 + (long)(rng() % 4);
					dense[r][c] = Rat(num, den);
					v.set(c, Rat(num, den));
				}
			}
			rb.insert(v);
		}
		CHECK(rb.rank() == dense_rank(dense));
	}
}

TEST_CASE("reduce is idempotent and kills inserted rows")
{
	std::mt19937_64 rng(11);
	RrefBasis b;
	std::vector<SparseVec> inserted;
	for (int i = 0; i < 20; i++) {
		SparseVec v;
		for (int c = 0; c < 10; c++)
			if (rng() % 2)
				v.set(c, Rat((long)(rng() % 7) - 3));
		inserted.push_back(v);
		b.insert(v);
	}
	for (auto &v : inserted)
		CHECK(b.reduce(v).zero());
	SparseVec w = sv({{0, Rat(1, 3)}, {5, -2}, {9, 7}});
	SparseVec r1 = b.reduce(w);
	SparseVec r2 = b.reduce(r1);
	CHECK(r1 == r2);
}

TEST_CASE("solve_affine")
{
	// identity
	auto x = solve_affine({sv({{0, 1}}), sv({{1, 1}})},
	                      sv({{0, 3}, {1, Rat(1, 2)}}));
	REQUIRE(x.has_value());
	CHECK(*x->get(0) == 3);
	CHECK(*x->get(1) == Rat(1, 2));

	// underdetermined: free variable zeroed
	auto y = solve_affine({sv({{0, 1}, {1, 1}})}, sv({{0, 1}}));
	REQUIRE(y.has_value());
	CHECK(*y->get(0) == 1);
	CHECK(y->get(1) == nullptr);

	// inconsistent
	auto z = solve_affine({sv({{0, 1}}), sv({{0, 1}})}, sv({{0, 1}, {1, 2}}));
	CHECK(!z.has_value());

	// random consistent systems round-trip
	std::mt19937_64 rng(13);
	for (int trial = 0; trial < 25; trial++) {
		int n = 1 + (int)(rng() % 6);
		int m = 1 + (int)(rng() % 8);
		std::vector<SparseVec> A;
		for (int i = 0; i < m; i++) {
			SparseVec row;
			for (int c = 0; c < n; c++)
				if (rng() % 2)
					row.set(c, Rat((long)(rng() % 9) - 4));
			A.push_back(row);
		}
		SparseVec xs;
		for (int c = 0; c < n; c++)
			if (rng() % 2)
				xs.set(c, Rat((long)(rng() % 5) - 2, 1 + (long)(rng() % 3)));
		SparseVec b;
		for (int i = 0; i < m; i++) {
			Rat acc = 0;
			for (auto &[c, v] : A[(size_t)i].e) {
				const Rat *xv = xs.get(c);
				if (xv)
					acc += v * *xv;
			}
			b.set(i, acc);
		}
		auto sol = solve_affine(A, b);
		REQUIRE(sol.has_value());
		// verify A*sol == b exactly
		for (int i = 0; i < m; i++) {
			Rat acc = 0;
			for (auto &[c, v] : A[(size_t)i].e) {
				const Rat *xv = sol->get(c);
				if (xv)
					acc += v * *xv;
			}
			const Rat *bi = b.get(i);
			CHECK(acc == (bi ? *bi : Rat(0)));
		}
	}
}

TEST_CASE("exact arithmetic at 256-bit scale")
{
	std::mt19937_64 rng(17);
	for (int t = 0; t < 50; t++) {
		Int n1 = 1, n2 = 1;
		for (int i = 0; i < 4; i++) {
			n1 *= Int(rng());
			n2 *= Int(rng());
		}
		Rat a(n1, Int(rng()) + 1), b(n2, Int(rng()) + 1);
		CHECK((a + b) - b == a);
		CHECK((a * b) / b == a);
	}
}
