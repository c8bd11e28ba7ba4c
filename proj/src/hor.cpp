#include "jd/hor.hpp"
#include "jd/ops.hpp"
#include "jd/scratch.hpp"
#include "jd/sparse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jd {

int HorElement::pair_code(int n, int i, int j)
{
	if (i > j)
		std::swap(i, j);
	if (i < 0 || i == j || j >= n)
		throw std::runtime_error("bad strand pair");
	// lexicographic over (i,j), i<j
	return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> HorElement::code_pair(int n, int code)
{
	for (int i = 0; i < n; i++) {
		int row = n - 1 - i;
		if (code < row)
			return {i, i + 1 + code};
		code -= row;
	}
	throw std::runtime_error("bad pair code");
}

void HorElement::add(const std::vector<int> &w, const Rat &c)
{
	if (c == 0 || (int)w.size() > cap)
		return;
	auto it = terms.find(w);
	if (it == terms.end()) {
		terms.emplace(w, c);
		return;
	}
	it->second += c;
	if (it->second == 0)
		terms.erase(it);
}

HorElement &HorElement::operator+=(const HorElement &o)
{
	for (auto &[w, c] : o.terms)
		add(w, c);
	return *this;
}

HorElement &HorElement::operator-=(const HorElement &o)
{
	for (auto &[w, c] : o.terms)
		add(w, -c);
	return *this;
}

HorElement &HorElement::operator*=(const Rat &r)
{
	if (r == 0) {
		terms.clear();
		return *this;
	}
	for (auto &[w, c] : terms)
		c *= r;
	return *this;
}

HorElement HorElement::part(int d) const
{
	HorElement p;
	p.strands = strands;
	p.cap = cap;
	for (auto &[w, c] : terms)
		if ((int)w.size() == d)
			p.terms.emplace(w, c);
	return p;
}

std::string HorElement::str() const
{
	std::ostringstream os;
	bool first = true;
	for (auto &[w, c] : terms) {
		os << (first ? "" : " + ") << c;
		for (int code : w) {
			auto [i, j] = code_pair(strands, code);
			os << " t" << i + 1 << j + 1;
		}
		first = false;
	}
	if (first)
		os << "0";
	return os.str();
}

HorElement hor_unit(int n, int cap)
{
	HorElement x;
	x.strands = n;
	x.cap = cap;
	x.terms.emplace(std::vector<int>{}, Rat(1));
	return x;
}

HorElement hor_gen(int n, int i, int j, int cap)
{
	HorElement x;
	x.strands = n;
	x.cap = cap;
	x.add({HorElement::pair_code(n, i, j)}, 1);
	return x;
}

HorElement hor_mul(const HorElement &a, const HorElement &b)
{
	if (a.strands != b.strands)
		throw std::runtime_error("hor_mul: strand counts differ");
	HorElement x;
	x.strands = a.strands;
	x.cap = std::min(a.cap, b.cap);
	for (auto &[wa, ca] : a.terms)
		for (auto &[wb, cb] : b.terms) {
			if ((int)(wa.size() + wb.size()) > x.cap)
				continue;
			auto w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			x.add(w, ca * cb);
		}
	return x;
}

HorElement hor_exp(const HorElement &x)
{
	if (x.cap >= (1 << 20))
		throw std::runtime_error("hor_exp needs a finite degree cap");
	if (x.terms.count({}))
		throw std::runtime_error("hor_exp needs a vanishing degree-0 part");
	HorElement sum = hor_unit(x.strands, x.cap), pw = sum;
	for (int k = 1; k <= x.cap && !pw.is_zero(); k++) {
		pw = hor_mul(pw, x);
		pw *= Rat(1, k);
		sum += pw;
	}
	return sum;
}

HorElement hor_inv(const HorElement &a)
{
	if (a.cap >= (1 << 20))
		throw std::runtime_error("hor_inv needs a finite degree cap");
	auto u = a.terms.find({});
	if (u == a.terms.end())
		throw std::runtime_error("hor_inv: degree-0 part vanishes");
	Rat c = u->second;
	HorElement y = a * (Rat(1) / c); // 1 - y vanishes in degree 0
	HorElement rest = hor_unit(a.strands, a.cap) - y;
	HorElement sum = hor_unit(a.strands, a.cap), pw = sum;
	for (int k = 1; k <= a.cap && !pw.is_zero(); k++) {
		pw = hor_mul(pw, rest);
		sum += pw;
	}
	sum *= Rat(1) / c;
	return sum;
}

HorElement hor_place(const HorElement &x, const std::vector<int> &slot, int n)
{
	if ((int)slot.size() != x.strands)
		throw std::runtime_error("hor_place: slot list length mismatch");
	HorElement y;
	y.strands = n;
	y.cap = x.cap;
	for (auto &[w, c] : x.terms) {
		std::vector<int> w2;
		for (int code : w) {
			auto [i, j] = HorElement::code_pair(x.strands, code);
			w2.push_back(HorElement::pair_code(n, slot[(size_t)i], slot[(size_t)j]));
		}
		y.add(w2, c);
	}
	return y;
}

HorElement hor_cable(const HorElement &x, int s)
{
	int n = x.strands + 1;
	HorElement y;
	y.strands = n;
	y.cap = x.cap;
	auto shift = [&](int t) { return t > s ? t + 1 : t; };
	for (auto &[w, c] : x.terms) {
		std::vector<std::vector<int>> words = {{}};
		for (int code : w) {
			auto [i, j] = HorElement::code_pair(x.strands, code);
			std::vector<std::pair<int, int>> images;
			if (i == s)
				images = {{s, shift(j)}, {s + 1, shift(j)}};
			else if (j == s)
				images = {{shift(i), s}, {shift(i), s + 1}};
			else
				images = {{shift(i), shift(j)}};
			std::vector<std::vector<int>> next;
			for (auto &w2 : words)
				for (auto &[a, b] : images) {
					auto w3 = w2;
					w3.push_back(HorElement::pair_code(n, a, b));
					next.push_back(std::move(w3));
				}
			words = std::move(next);
		}
		for (auto &w2 : words)
			y.add(w2, c);
	}
	return y;
}

HorElement hor_counit(const HorElement &x, int s)
{
	HorElement y;
	y.strands = x.strands - 1;
	y.cap = x.cap;
	for (auto &[w, c] : x.terms) {
		std::vector<int> w2;
		bool killed = false;
		for (int code : w) {
			auto [i, j] = HorElement::code_pair(x.strands, code);
			if (i == s || j == s) {
				killed = true;
				break;
			}
			w2.push_back(HorElement::pair_code(y.strands, i > s ? i - 1 : i,
			                                   j > s ? j - 1 : j));
		}
		if (!killed)
			y.add(w2, c);
	}
	return y;
}

namespace {

long encode(int np, const std::vector<int> &w)
{
	long v = 0;
	for (int code : w)
		v = v * np + code + 1; // +1 keeps different lengths distinct
	return v;
}

std::vector<std::vector<int>> all_words(int np, int d)
{
	std::vector<std::vector<int>> out = {{}};
	for (int p = 0; p < d; p++) {
		std::vector<std::vector<int>> next;
		for (auto &w : out)
			for (int c = 0; c < np; c++) {
				auto w2 = w;
				w2.push_back(c);
				next.push_back(std::move(w2));
			}
		out = std::move(next);
	}
	return out;
}

// degree-2 relation generators of the infinitesimal braid quotient
std::vector<std::vector<std::pair<std::vector<int>, Rat>>> hor_rel_gens(int n)
{
	std::vector<std::vector<std::pair<std::vector<int>, Rat>>> gens;
	int np = HorElement::npairs(n);
	for (int p = 0; p < np; p++)
		for (int q = p + 1; q < np; q++) {
			auto [a, b] = HorElement::code_pair(n, p);
			auto [c, d] = HorElement::code_pair(n, q);
			if (a != c && a != d && b != c && b != d)
				gens.push_back({{{p, q}, 1}, {{q, p}, -1}});
		}
	for (int j = 0; j < n; j++)
		for (int k = j + 1; k < n; k++)
			for (int i = 0; i < n; i++) {
				if (i == j || i == k)
					continue;
				int jk = HorElement::pair_code(n, j, k);
				int ij = HorElement::pair_code(n, i, j);
				int ik = HorElement::pair_code(n, i, k);
				gens.push_back({{{jk, ij}, 1},
				                {{ij, jk}, -1},
				                {{jk, ik}, 1},
				                {{ik, jk}, -1}});
			}
	return gens;
}

const RrefBasis &hor_rels(int n, int d)
{
	static std::map<std::pair<int, int>, RrefBasis> cache;
	auto key = std::make_pair(n, d);
	auto it = cache.find(key);
	if (it != cache.end())
		return it->second;
	RrefBasis basis;
	int np = HorElement::npairs(n);
	if (d >= 2 && np > 0) {
		auto gens = hor_rel_gens(n);
		for (int a = 0; a + 2 <= d; a++) {
			auto lefts = all_words(np, a);
			auto rights = all_words(np, d - 2 - a);
			for (auto &g : gens)
				for (auto &w1 : lefts)
					for (auto &w2 : rights) {
						SparseVec row;
						for (auto &[mid, c] : g) {
							auto w = w1;
							w.insert(w.end(), mid.begin(), mid.end());
							w.insert(w.end(), w2.begin(), w2.end());
							row.add((int)encode(np, w), c);
						}
						basis.insert(row);
					}
		}
	}
	return cache.emplace(key, std::move(basis)).first->second;
}

std::vector<int> decode(int np, long v, int d)
{
	std::vector<int> w((size_t)d);
	for (int p = d - 1; p >= 0; p--) {
		w[(size_t)p] = (int)((v - 1) % np);
		v = (v - 1) / np;
	}
	return w;
}

// normal form of a single word in the quotient, as word -> coefficient
std::map<std::vector<int>, Rat> expand_word(int n, const std::vector<int> &w)
{
	int np = HorElement::npairs(n);
	SparseVec v;
	v.add((int)encode(np, w), 1);
	SparseVec r = hor_rels(n, (int)w.size()).reduce(v);
	std::map<std::vector<int>, Rat> out;
	for (auto &[col, c] : r.e)
		out.emplace(decode(np, col, (int)w.size()), c);
	return out;
}

} // namespace

HorElement hor_reduce(const HorElement &x)
{
	HorElement out;
	out.strands = x.strands;
	out.cap = x.cap;
	int np = HorElement::npairs(x.strands);
	std::map<int, SparseVec> by_deg;
	for (auto &[w, c] : x.terms)
		by_deg[(int)w.size()].add((int)encode(np, w), c);
	for (auto &[d, vec] : by_deg) {
		SparseVec r = hor_rels(x.strands, d).reduce(vec);
		for (auto &[col, c] : r.e)
			out.add(decode(np, col, d), c);
	}
	return out;
}

bool hor_equal(const HorElement &a, const HorElement &b)
{
	return hor_reduce(a - b).is_zero();
}

long hor_dim(int n, int d)
{
	long words = 1;
	for (int p = 0; p < d; p++)
		words *= HorElement::npairs(n);
	return words - hor_rels(n, d).rank();
}

HorElement pentagon_residual(const HorElement &phi)
{
	HorElement lhs = hor_mul(hor_cable(phi, 2), hor_cable(phi, 0));
	HorElement rhs = hor_mul(hor_mul(hor_place(phi, {1, 2, 3}, 4), hor_cable(phi, 1)),
	                         hor_place(phi, {0, 1, 2}, 4));
	return hor_reduce(lhs - rhs);
}

std::pair<HorElement, HorElement> hexagon_residuals(const HorElement &phi,
                                                    const HorElement &R)
{
	HorElement r12 = hor_place(R, {0, 1}, 3);
	HorElement r13 = hor_place(R, {0, 2}, 3);
	HorElement r23 = hor_place(R, {1, 2}, 3);
	HorElement h1 = hor_cable(R, 1) -
	                hor_mul(hor_mul(hor_mul(hor_mul(hor_inv(hor_place(phi, {1, 2, 0}, 3)), r13),
	                                        hor_place(phi, {1, 0, 2}, 3)),
	                                r12),
	                        hor_inv(phi));
	HorElement h2 = hor_cable(R, 0) -
	                hor_mul(hor_mul(hor_mul(hor_mul(hor_place(phi, {2, 0, 1}, 3), r13),
	                                        hor_inv(hor_place(phi, {0, 2, 1}, 3))),
	                                r23),
	                        phi);
	return {hor_reduce(h1), hor_reduce(h2)};
}

HorElement qqybe_residual(const HorElement &phi, const HorElement &R)
{
	HorElement r12 = hor_place(R, {0, 1}, 3);
	HorElement r13 = hor_place(R, {0, 2}, 3);
	HorElement r23 = hor_place(R, {1, 2}, 3);
	HorElement lhs = hor_mul(
	    hor_mul(hor_mul(hor_mul(hor_mul(r12, hor_place(phi, {2, 0, 1}, 3)), r13),
	                    hor_inv(hor_place(phi, {0, 2, 1}, 3))),
	            r23),
	    phi);
	HorElement rhs = hor_mul(
	    hor_mul(hor_mul(hor_mul(hor_mul(hor_place(phi, {2, 1, 0}, 3), r23),
	                            hor_inv(hor_place(phi, {1, 2, 0}, 3))),
	                    r13),
	            hor_place(phi, {1, 0, 2}, 3)),
	    r12);
	return hor_reduce(lhs - rhs);
}

Associator solve_associator(int cap)
{
	Associator A;
	A.cap = cap;
	A.R = hor_exp(hor_gen(2, 0, 1, cap) * Rat(1, 2));
	A.phi = hor_unit(3, cap);
	int np = HorElement::npairs(3);

	std::map<long, int> row_ids;
	auto row_id = [&](long k) {
		auto [it, fresh] = row_ids.try_emplace(k, (int)row_ids.size());
		(void)fresh;
		return it->second;
	};

	// Every imposed condition on phi, truncated to total degree <= upto and
	// stacked as one sparse system.  Beyond the defining equations we demand
	// phi^{321} phi = 1 and group-likeness (splitting the chords of each term
	// two ways reproduces phi (x) phi); together with evenness this pins the
	// solution, and in particular keeps the logarithm a Lie series.
	auto residual_rows = [&](const HorElement &phi, int upto) {
		SparseVec rows;
		long block = 0;
		auto emit = [&](const HorElement &r) {
			for (auto &[w, c] : r.terms)
				if ((int)w.size() <= upto)
					rows.add(row_id((block << 40) + encode(6, w)), c);
			block++;
		};
		emit(pentagon_residual(phi));
		auto [h1, h2] = hexagon_residuals(phi, A.R);
		emit(h1);
		emit(h2);
		for (int i = 0; i < 3; i++)
			emit(hor_counit(phi, i) - hor_unit(2, cap));
		emit(hor_reduce(hor_mul(hor_place(phi, {2, 1, 0}, 3), phi) -
		                hor_unit(3, cap)));
		std::map<std::pair<long, long>, Rat> gl;
		auto put = [&](const std::vector<int> &wa, const std::vector<int> &wb,
		               const Rat &c) {
			for (auto &[ua, ca] : expand_word(3, wa))
				for (auto &[ub, cb] : expand_word(3, wb)) {
					auto key = std::make_pair(encode(np, ua), encode(np, ub));
					auto [it, fresh] = gl.try_emplace(key, Rat(0));
					it->second += c * ca * cb;
				}
		};
		for (auto &[w, c] : phi.terms) {
			int d = (int)w.size();
			if (d > upto)
				continue;
			for (unsigned m = 1; m + 1 < (1u << d); m++) {
				std::vector<int> a, b;
				for (int p = 0; p < d; p++)
					(((m >> (unsigned)p) & 1) ? a : b).push_back(w[(size_t)p]);
				put(a, b, c);
			}
		}
		for (auto &[w1, c1] : phi.terms)
			for (auto &[w2, c2] : phi.terms) {
				if (w1.empty() || w2.empty() ||
				    (int)(w1.size() + w2.size()) > upto)
					continue;
				put(w1, w2, -c1 * c2);
			}
		for (auto &[k, c] : gl)
			rows.add(row_id((block << 40) + (k.first << 20) + k.second), c);
		return rows;
	};

	for (int d = 2; d <= cap; d++) {
		// unknown coefficients live on the reduced word basis at degree d
		std::vector<std::vector<int>> unknowns;
		const RrefBasis &rels = hor_rels(3, d);
		for (auto &w : all_words(np, d))
			if (!rels.is_pivot((int)encode(np, w)))
				unknowns.push_back(w);
		SparseVec base = residual_rows(A.phi, d);
		if (d % 2) {
			// even gauge: odd parts stay zero, which must already be consistent
			if (!base.zero())
				throw std::runtime_error("associator solve: odd degree " +
				                         std::to_string(d) + " is obstructed");
			continue;
		}
		// the residual is affine in the degree-d part: probe each unknown word
		std::vector<SparseVec> cols;
		for (auto &w : unknowns) {
			HorElement probe = A.phi;
			probe.add(w, 1);
			SparseVec col = residual_rows(probe, d);
			col.axpy(-1, base);
			cols.push_back(std::move(col));
		}
		// transpose into equation rows over unknown indices
		std::map<int, SparseVec> eq;
		for (size_t u = 0; u < cols.size(); u++)
			for (auto &[row, c] : cols[u].e)
				eq[row].add((int)u, c);
		std::vector<SparseVec> rows_A;
		SparseVec b;
		for (auto &[row, vec] : eq) {
			b.add((int)rows_A.size(), base.get(row) ? -*base.get(row) : Rat(0));
			rows_A.push_back(vec);
		}
		for (auto &[row, c] : base.e)
			if (!eq.count(row)) {
				// equation with no unknown support: must already vanish
				throw std::runtime_error("associator solve: degree " +
				                         std::to_string(d) + " is inconsistent");
			}
		auto sol = solve_affine(rows_A, b);
		if (!sol)
			throw std::runtime_error("associator solve: degree " +
			                         std::to_string(d) + " is inconsistent");
		for (auto &[u, c] : sol->e)
			A.phi.add(unknowns[(size_t)u], c);
		if (!residual_rows(A.phi, d).zero())
			throw std::runtime_error("associator solve: degree " +
			                         std::to_string(d) + " residual persists");
	}
	return A;
}

FormalSum embed_hor(const HorElement &x, int cap)
{
	FormalSum out(lines(x.strands), false, cap);
	for (auto &[w, c] : x.terms) {
		Scratch sc;
		sc.skel = lines(x.strands);
		for (size_t p = 0; p < w.size(); p++) {
			auto [i, j] = HorElement::code_pair(x.strands, w[(size_t)p]);
			int a = sc.add_leg(i, (long)p);
			int b = sc.add_leg(j, (long)p);
			sc.wire(a, b);
		}
		out.add_diagram(sc.to_diagram(), c);
	}
	return out;
}

} // namespace jd
