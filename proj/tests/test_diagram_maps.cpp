#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jd/ops.hpp"
#include "jd/spaces.hpp"

#include <random>

using namespace jd;

namespace {

FormalSum from_id(int id, int cap = 1 << 20)
{
	const Diagram &d = interned(id);
	FormalSum r(d.skel, d.directed, cap);
	r.add(id, 1);
	return r;
}

bool dies(const QuotientSpace &q, const FormalSum &v)
{
	return reduce(q, v).is_zero();
}

std::vector<int> basis_upto(const QuotientSpace &q, int cap)
{
	std::vector<int> out;
	for (int m = 0; m <= cap; m++)
		for (int id : q.degs[(size_t)m].basis)
			out.push_back(id);
	return out;
}

} // namespace

TEST_CASE("juxtaposition: unit, commutativity, associativity")
{
	auto q = build_quotient(lines(1), 3, RelSet::A);
	FormalSum one = unit_sum(lines(1), false);
	auto basis = basis_upto(q, 2);
	for (int id : basis) {
		FormalSum d = from_id(id);
		CHECK(mul(one, d) == d);
		CHECK(mul(d, one) == d);
	}
	for (int ia : basis)
		for (int ib : basis) {
			if (interned(ia).degree() + interned(ib).degree() > 3)
				continue;
			FormalSum a = from_id(ia), b = from_id(ib);
			CHECK(product(boxtimes(a, b), 0, 1) == mul(a, b));
			CHECK(dies(q, mul(a, b) - mul(b, a)));
		}
	// associativity holds before any relations
	FormalSum c = el_casimir(1 << 20);
	FormalSum w = sigma(c, 0); // 2-legged star element
	FormalSum t = boxtimes(boxtimes(c, c), c);
	CHECK(product(product(t, 0, 1), 0, 1) == product(product(t, 1, 2), 0, 1));
	FormalSum ts = boxtimes(boxtimes(w, w), w);
	CHECK(product(product(ts, 0, 1), 0, 1) == product(product(ts, 1, 2), 0, 1));
}

TEST_CASE("directed juxtaposition: mu(r) - mu(flip r) = 2 rho")
{
	FormalSum r = el_rarrow(4);
	FormalSum flip = relabel(r, {2, 1}, 2);
	FormalSum d = product(r, 0, 1) - product(flip, 0, 1);
	FormalSum rho2 = el_rho(4);
	rho2 *= Rat(2);
	CHECK(d == rho2);
	auto q = build_quotient(lines(1), 1, RelSet::Aarrow);
	CHECK(dies(q, d - rho2));
	CHECK(!dies(q, d)); // 2 rho is nonzero
}

TEST_CASE("cabling: Casimir coproduct, coassociativity, bialgebra square")
{
	FormalSum c = el_casimir(1 << 20);
	FormalSum one = unit_sum(lines(1), false);
	FormalSum om = el_omega(1 << 20);
	om *= Rat(2);
	CHECK(cabling(c, 0) == boxtimes(c, one) + boxtimes(one, c) + om);
	CHECK(cabling(unit_sum(lines(1), false), 0) ==
	      unit_sum(lines(2), false));

	auto q = build_quotient(lines(1), 3, RelSet::A);
	for (int id : basis_upto(q, 2)) {
		FormalSum d = from_id(id);
		CHECK(cabling(cabling(d, 0), 0) == cabling(cabling(d, 0), 1));
	}

	// coproduct respects the product
	for (int ia : basis_upto(q, 1))
		for (int ib : basis_upto(q, 1)) {
			FormalSum t = boxtimes(from_id(ia), from_id(ib));
			FormalSum lhs = cabling(product(t, 0, 1), 0);
			FormalSum rhs =
			    product(product(cabling(cabling(t, 0), 2), 0, 2), 1, 2);
			CHECK(lhs == rhs);
		}
}

TEST_CASE("counit and the antipode identity")
{
	auto q = build_quotient(lines(1), 2, RelSet::A);
	FormalSum one = unit_sum(lines(1), false);
	for (int id : basis_upto(q, 2)) {
		FormalSum d = from_id(id);
		FormalSum lhs = product(antipode(cabling(d, 0), 0), 0, 1);
		FormalSum expect =
		    interned(id).E() == 0 && interned(id).nint == 0 ? d : FormalSum(lines(1), false);
		CHECK(reduce(q, lhs) == reduce(q, expect));
		CHECK(antipode(antipode(d, 0), 0) == d);
	}
	FormalSum c = el_casimir(1 << 20);
	CHECK(antipode(c, 0) == c);
	CHECK(counit(c, 0).is_zero());
	CHECK(counit(unit_sum(lines(1), false), 0) ==
	      unit_sum(Skeleton{}, false));

	auto qd = build_quotient(lines(1), 2, RelSet::Aarrow);
	for (int id : basis_upto(qd, 2)) {
		FormalSum d = from_id(id);
		CHECK(antipode(antipode(d, 0), 0) == d);
	}
}

TEST_CASE("chi and sigma invert each other")
{
	FormalSum c = el_casimir(1 << 20);
	FormalSum sc = sigma(c, 0);
	CHECK((int)sc.terms.size() == 1);
	CHECK(chi(sc, 0) == c); // both orderings of two legs give the chord back

	auto qb = build_quotient(star_skel(), 3, RelSet::A);
	auto qa = build_quotient(lines(1), 3, RelSet::A);
	for (int id : basis_upto(qb, 3)) {
		FormalSum b = from_id(id);
		CHECK(dies(qb, sigma(chi(b, 0), 0) - b));
	}
	for (int id : basis_upto(qa, 3)) {
		FormalSum a = from_id(id);
		CHECK(dies(qa, chi(sigma(a, 0), 0) - a));
	}

	// directed spaces use the identical recursion
	auto qbd = build_quotient(star_skel(), 2, RelSet::Aarrow);
	auto qad = build_quotient(lines(1), 2, RelSet::Aarrow);
	for (int id : basis_upto(qbd, 2)) {
		FormalSum b = from_id(id);
		CHECK(dies(qbd, sigma(chi(b, 0), 0) - b));
	}
	for (int id : basis_upto(qad, 2)) {
		FormalSum a = from_id(id);
		CHECK(dies(qad, chi(sigma(a, 0), 0) - a));
	}
}

TEST_CASE("gluing words: cocycle identity and telescoping")
{
	std::mt19937 rng(20260813);
	auto run = [&](RelSet rs) {
		auto q = build_quotient(lines(1), 2, rs);
		for (int id : basis_upto(q, 2)) {
			const Diagram &d = interned(id);
			int k = d.E();
			if (k < 2)
				continue;
			auto rand_word = [&](int len) {
				std::vector<int> w((size_t)len);
				for (auto &x : w)
					x = (int)(rng() % (unsigned)(k - 1));
				return w;
			};
			for (int trial = 0; trial < 3; trial++) {
				auto w1 = rand_word(2 + (int)(rng() % 3));
				auto w2 = rand_word(2 + (int)(rng() % 3));
				auto w12 = w1;
				w12.insert(w12.end(), w2.begin(), w2.end());
				FormalSum v = from_id(id);
				FormalSum lhs = gamma_word(v, 0, w12);
				FormalSum rhs =
				    gamma_word(apply_word(v, 0, w2), 0, w1) +
				    gamma_word(v, 0, w2);
				CHECK(lhs == rhs);
				CHECK(dies(q, gamma_word(v, 0, w12) -
				                  (v - apply_word(v, 0, w12))));
			}
			// permutation action agrees with its transposition word
			std::vector<int> pi((size_t)k);
			for (int i = 0; i < k; i++)
				pi[(size_t)i] = i;
			std::shuffle(pi.begin(), pi.end(), rng);
			CHECK(apply_word(from_id(id), 0, perm_to_word(pi)) ==
			      leg_permute(d, 0, pi));
		}
	};
	run(RelSet::A);
	run(RelSet::Aarrow);
}

TEST_CASE("iota: kills undirected relations, commutes with maps")
{
	FormalSum om = el_omega(4);
	CHECK(iota(om) == el_rarrow(4) + relabel(el_rarrow(4), {2, 1}, 2));

	auto qd = build_quotient(lines(1), 2, RelSet::Aarrow);
	for (int m = 1; m <= 2; m++)
		for (auto &rel : generate_relations(lines(1), m, RelSet::A))
			CHECK(dies(qd, iota(rel)));

	auto q = build_quotient(lines(1), 2, RelSet::A);
	for (int id : basis_upto(q, 2)) {
		FormalSum d = from_id(id);
		CHECK(iota(cabling(d, 0)) == cabling(iota(d), 0));
	}
	auto qb = build_quotient(star_skel(), 2, RelSet::A);
	for (int id : basis_upto(qb, 2)) {
		FormalSum b = from_id(id);
		CHECK(iota(chi(b, 0)) == chi(iota(b), 0));
	}

	// directized images commute with iterated coproducts
	auto q2 = build_quotient(lines(2), 2, RelSet::Aarrow);
	auto qe = build_quotient(lines(2), 1, RelSet::A);
	for (int idd : basis_upto(qd, 1))
		for (int ide : basis_upto(qe, 1)) {
			FormalSum lhs = commutator(
			    iterated_coproduct(from_id(idd, 2), 2), iota(from_id(ide, 2)));
			CHECK(dies(q2, lhs));
		}
}

TEST_CASE("rarrow satisfies the diagrammatic classical Yang-Baxter equation")
{
	FormalSum r = el_rarrow(2);
	FormalSum r12 = relabel(r, {1, 2}, 3);
	FormalSum r13 = relabel(r, {1, 3}, 3);
	FormalSum r23 = relabel(r, {2, 3}, 3);
	FormalSum cy = commutator(r12, r13) + commutator(r12, r23) +
	               commutator(r13, r23);
	CHECK(!cy.is_zero()); // nontrivial before relations
	auto q = build_quotient(lines(3), 2, RelSet::Aarrow);
	CHECK(dies(q, cy));
}

TEST_CASE("rho: half-circle difference equals the tadpole sum")
{
	FormalSum td = el_tadpole_down(2), tu = el_tadpole_up(2);
	FormalSum both = td + tu;
	both *= Rat(1, 2);
	auto q = build_quotient(lines(1), 1, RelSet::Aarrow);
	CHECK(dies(q, el_rho(2) - both));
	CHECK(!dies(q, el_rho(2)));
}

TEST_CASE("closure: trace is cyclic on directed products")
{
	auto qd = build_quotient(lines(1), 1, RelSet::Aarrow);
	auto qo = build_quotient(circles(1), 2, RelSet::Aarrow);
	for (int ia : basis_upto(qd, 1))
		for (int ib : basis_upto(qd, 1)) {
			FormalSum x = from_id(ia, 2), y = from_id(ib, 2);
			CHECK(dies(qo, trace_close(mul(x, y) - mul(y, x), 0)));
		}
	// cutting then closing returns the original circle diagram
	auto qc = build_quotient(circles(1), 2, RelSet::A);
	for (int id : basis_upto(qc, 2)) {
		FormalSum d = from_id(id);
		CHECK(trace_close(cut_circle(d, 0), 0) == d);
	}
}

TEST_CASE("series: exp, log, inverse, square root")
{
	FormalSum x = el_omega(4);
	x *= Rat(1, 2);
	FormalSum a = fs_exp(x);
	CHECK(a == el_rkz(4));
	CHECK(fs_log(a) == x);
	CHECK(mul(a, fs_inv(a)) == unit_sum(lines(2), false, 4));
	FormalSum s = fs_sqrt(a);
	CHECK(mul(s, s) == a);

	// explicit low-order coefficients of exp(omega/2)
	FormalSum om = el_omega(2);
	FormalSum expect = unit_sum(lines(2), false, 2);
	FormalSum t1 = om;
	t1 *= Rat(1, 2);
	FormalSum t2 = mul(om, om);
	t2 *= Rat(1, 8);
	expect += t1;
	expect += t2;
	CHECK(el_rkz(2) == expect);
}

TEST_CASE("wheels are nonzero and distinct in the star space")
{
	auto q = build_quotient(star_skel(), 4, RelSet::A);
	FormalSum w2 = el_wheel(2, 4), w4 = el_wheel(4, 4);
	CHECK(!dies(q, w2));
	CHECK(!dies(q, w4));
	CHECK(!dies(q, mul(w2, w2) - w4)); // disjoint square differs from w4
}

TEST_CASE("relabel composes and fills with bare strands")
{
	FormalSum r = el_rarrow(2);
	CHECK(relabel(relabel(r, {1, 2}, 2), {2, 1}, 2) == relabel(r, {2, 1}, 2));
	FormalSum r3 = relabel(r, {3, 1}, 3);
	CHECK(relabel(relabel(r, {1, 2}, 3), {3, 1, 2}, 3) == r3);
	CHECK(product(product(relabel(r, {1, 2}, 3), 0, 1), 0, 1) ==
	      product(r, 0, 1));
}
