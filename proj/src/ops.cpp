#include "jd/ops.hpp"
#include "jd/scratch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace jd {

namespace {

Int factorial(int n)
{
	Int f = 1;
	for (int i = 2; i <= n; i++)
		f *= i;
	return f;
}

FormalSum single(const Diagram &d, int cap = 1 << 20)
{
	FormalSum r(d.skel, d.directed, cap);
	r.add_diagram(d, 1);
	return r;
}

// copy d's graph into sc, returning old-half-edge -> new-half-edge
std::vector<int> import_diagram(Scratch &sc, const Diagram &d, int comp_off,
                                long pos_off)
{
	std::vector<int> m((size_t)d.H(), -1);
	for (int i = 0; i < d.E(); i++)
		m[(size_t)i] = sc.add_leg(d.ext[(size_t)i].first + comp_off,
		                          d.ext[(size_t)i].second + pos_off);
	for (int j = 0; j < d.nint; j++) {
		auto ports = sc.add_vertex();
		for (int t = 0; t < 3; t++)
			m[(size_t)d.he(d.E() + j, t)] = ports[(size_t)t];
	}
	for (int h = 0; h < d.H(); h++) {
		int mt = d.mate[(size_t)h];
		if (mt > h)
			sc.wire(m[(size_t)h], m[(size_t)mt],
			        d.directed && d.head[(size_t)mt]);
	}
	return m;
}

// vertex indices of the legs on comp, in position order (= Scratch ext order)
std::vector<int> legs_on(const Scratch &sc, int comp)
{
	std::vector<int> out;
	for (size_t v = 0; v < sc.vs.size(); v++)
		if (sc.vs[v].alive && sc.vs[v].ext && sc.vs[v].comp == comp)
			out.push_back((int)v);
	return out;
}

int count_legs(const Diagram &d, int comp)
{
	int k = 0;
	for (auto &x : d.ext)
		if (x.first == comp)
			k++;
	return k;
}

using TermFn = std::function<void(const Diagram &, const Rat &, FormalSum &)>;

FormalSum map_terms(const FormalSum &v, Skeleton out_skel, bool out_dir,
                    const TermFn &fn)
{
	FormalSum r(std::move(out_skel), out_dir, v.cap);
	for (auto &[id, c] : v.terms)
		fn(interned(id), c, r);
	return r;
}

} // namespace

Skeleton lines(int n)
{
	Skeleton s;
	for (int i = 0; i < n; i++)
		s.comps.push_back({CompKind::Interval, ""});
	return s;
}

Skeleton circles(int n)
{
	Skeleton s;
	for (int i = 0; i < n; i++)
		s.comps.push_back({CompKind::Circle, ""});
	return s;
}

Skeleton star_skel(const std::string &name)
{
	Skeleton s;
	s.comps.push_back({CompKind::Star, name});
	return s;
}

FormalSum boxtimes(const FormalSum &a, const FormalSum &b)
{
	if (a.directed != b.directed)
		throw std::runtime_error("boxtimes: direction mismatch");
	Skeleton sk = a.skel;
	for (auto &c : b.skel.comps)
		sk.comps.push_back(c);
	int na = (int)a.skel.comps.size();
	FormalSum r(sk, a.directed, std::min(a.cap, b.cap));
	for (auto &[ia, ca] : a.terms)
		for (auto &[ib, cb] : b.terms) {
			Scratch sc;
			sc.skel = sk;
			sc.directed = a.directed;
			import_diagram(sc, interned(ia), 0, 0);
			import_diagram(sc, interned(ib), na, 0);
			r.add_diagram(sc.to_diagram(), ca * cb);
		}
	return r;
}

FormalSum product(const FormalSum &v, int m1, int m2)
{
	auto k1 = v.skel.comps[(size_t)m1].kind;
	auto k2 = v.skel.comps[(size_t)m2].kind;
	if (k1 != k2 || k1 == CompKind::Circle || m1 == m2)
		throw std::runtime_error("product: need two distinct Interval or Star "
		                         "components");
	Skeleton sk = v.skel;
	sk.comps.erase(sk.comps.begin() + m2);
	return map_terms(v, sk, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 Scratch sc = Scratch::from(d);
		                 sc.skel = r.skel;
		                 for (auto &x : sc.vs) {
			                 if (!x.ext)
				                 continue;
			                 if (x.comp == m2) {
				                 x.comp = m1;
				                 x.pos += 1L << 20;
			                 }
			                 if (x.comp > m2)
				                 x.comp--;
		                 }
		                 r.add_diagram(sc.to_diagram(), c);
	                 });
}

FormalSum mul(const FormalSum &a, const FormalSum &b)
{
	if (!(a.skel == b.skel) || a.directed != b.directed)
		throw std::runtime_error("mul: skeleton mismatch");
	for (auto &c : a.skel.comps)
		if (c.kind == CompKind::Circle)
			throw std::runtime_error("mul: circles have no juxtaposition");
	FormalSum r(a.skel, a.directed, std::min(a.cap, b.cap));
	for (auto &[ia, ca] : a.terms)
		for (auto &[ib, cb] : b.terms) {
			if (interned(ia).degree() + interned(ib).degree() > r.cap)
				continue;
			Scratch sc;
			sc.skel = a.skel;
			sc.directed = a.directed;
			import_diagram(sc, interned(ia), 0, 0);
			import_diagram(sc, interned(ib), 0, 1L << 20);
			r.add_diagram(sc.to_diagram(), ca * cb);
		}
	return r;
}

FormalSum commutator(const FormalSum &a, const FormalSum &b)
{
	return mul(a, b) - mul(b, a);
}

FormalSum cabling(const FormalSum &v, int m)
{
	Skeleton sk = v.skel;
	sk.comps.insert(sk.comps.begin() + m + 1, sk.comps[(size_t)m]);
	return map_terms(v, sk, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 std::vector<int> legs;
		                 for (int i = 0; i < d.E(); i++)
			                 if (d.ext[(size_t)i].first == m)
				                 legs.push_back(i);
		                 int k = (int)legs.size();
		                 for (long mask = 0; mask < (1L << k); mask++) {
			                 Scratch sc = Scratch::from(d);
			                 sc.skel = r.skel;
			                 for (auto &x : sc.vs)
				                 if (x.ext && x.comp > m)
					                 x.comp++;
			                 for (int i = 0; i < k; i++)
				                 if (mask >> i & 1)
					                 sc.vs[(size_t)legs[(size_t)i]].comp = m + 1;
			                 r.add_diagram(sc.to_diagram(), c);
		                 }
	                 });
}

FormalSum counit(const FormalSum &v, int m)
{
	Skeleton sk = v.skel;
	sk.comps.erase(sk.comps.begin() + m);
	return map_terms(v, sk, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 if (count_legs(d, m) > 0)
			                 return;
		                 Scratch sc = Scratch::from(d);
		                 sc.skel = r.skel;
		                 for (auto &x : sc.vs)
			                 if (x.ext && x.comp > m)
				                 x.comp--;
		                 r.add_diagram(sc.to_diagram(), c);
	                 });
}

FormalSum antipode(const FormalSum &v, int m)
{
	bool onedim = v.skel.comps[(size_t)m].kind != CompKind::Star;
	return map_terms(v, v.skel, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 Scratch sc = Scratch::from(d);
		                 int k = 0;
		                 for (auto &x : sc.vs)
			                 if (x.ext && x.comp == m) {
				                 k++;
				                 if (onedim)
					                 x.pos = -x.pos;
			                 }
		                 r.add_diagram(sc.to_diagram(), k % 2 ? -c : c);
	                 });
}

FormalSum trace_close(const FormalSum &v, int m)
{
	if (v.skel.comps[(size_t)m].kind != CompKind::Interval)
		throw std::runtime_error("trace: component is not an interval");
	Skeleton sk = v.skel;
	sk.comps[(size_t)m].kind = CompKind::Circle;
	return map_terms(v, sk, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 Scratch sc = Scratch::from(d);
		                 sc.skel = r.skel;
		                 r.add_diagram(sc.to_diagram(), c);
	                 });
}

FormalSum cut_circle(const FormalSum &v, int m)
{
	if (v.skel.comps[(size_t)m].kind != CompKind::Circle)
		throw std::runtime_error("cut: component is not a circle");
	Skeleton sk = v.skel;
	sk.comps[(size_t)m].kind = CompKind::Interval;
	return map_terms(v, sk, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 Scratch sc = Scratch::from(d);
		                 sc.skel = r.skel;
		                 r.add_diagram(sc.to_diagram(), c);
	                 });
}

FormalSum relabel(const FormalSum &v, const std::vector<int> &slots, int n)
{
	size_t p = v.skel.comps.size();
	if (slots.size() != p)
		throw std::runtime_error("relabel: one slot per component required");
	std::vector<char> used((size_t)n, 0);
	Skeleton sk = lines(n);
	for (size_t i = 0; i < p; i++) {
		int s = slots[i];
		if (s < 1 || s > n || used[(size_t)(s - 1)])
			throw std::runtime_error("relabel: slots must be distinct in 1..n");
		used[(size_t)(s - 1)] = 1;
		sk.comps[(size_t)(s - 1)] = v.skel.comps[i];
	}
	return map_terms(v, sk, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 Scratch sc = Scratch::from(d);
		                 sc.skel = r.skel;
		                 for (auto &x : sc.vs)
			                 if (x.ext)
				                 x.comp = slots[(size_t)x.comp] - 1;
		                 r.add_diagram(sc.to_diagram(), c);
	                 });
}

FormalSum chi(const FormalSum &v, int m)
{
	if (v.skel.comps[(size_t)m].kind != CompKind::Star)
		throw std::runtime_error("chi: component is not a star");
	Skeleton sk = v.skel;
	sk.comps[(size_t)m] = {CompKind::Interval, ""};
	return map_terms(v, sk, v.directed,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 Scratch base = Scratch::from(d);
		                 base.skel = r.skel;
		                 auto legs = legs_on(base, m);
		                 int k = (int)legs.size();
		                 Rat w = c / Rat(factorial(k));
		                 std::vector<int> perm((size_t)k);
		                 for (int i = 0; i < k; i++)
			                 perm[(size_t)i] = i;
		                 do {
			                 Scratch sc = base;
			                 for (int i = 0; i < k; i++)
				                 sc.vs[(size_t)legs[(size_t)i]].pos =
				                     perm[(size_t)i];
			                 r.add_diagram(sc.to_diagram(), w);
		                 } while (std::next_permutation(perm.begin(), perm.end()));
	                 });
}

FormalSum leg_permute(const Diagram &d, int comp, const std::vector<int> &pi)
{
	Scratch sc = Scratch::from(d);
	auto legs = legs_on(sc, comp);
	if (pi.size() != legs.size())
		throw std::runtime_error("leg_permute: size mismatch");
	for (size_t i = 0; i < legs.size(); i++)
		sc.vs[(size_t)legs[i]].pos = pi[i];
	return single(sc.to_diagram());
}

FormalSum glue_join(const Diagram &d, int comp, int i)
{
	Scratch sc = Scratch::from(d);
	auto legs = legs_on(sc, comp);
	if (i < 0 || i + 1 >= (int)legs.size())
		throw std::runtime_error("glue_join: leg index out of range");
	int lv = legs[(size_t)i], lv1 = legs[(size_t)i + 1];
	int lh = sc.vs[(size_t)lv].hes[0], lh1 = sc.vs[(size_t)lv1].hes[0];
	int m0 = sc.hes[(size_t)lh].mate, m1 = sc.hes[(size_t)lh1].mate;
	bool at_m0 = sc.head_at(m0), at_m1 = sc.head_at(m1);
	bool at_lh1 = sc.head_at(lh1);
	long pos = sc.vs[(size_t)lv].pos;
	sc.kill(lv);
	sc.kill(lv1);
	auto p = sc.add_vertex();
	int nl = sc.add_leg(comp, pos);
	if (m0 == lh1) // the two legs were each other's mates: loop at the vertex
		sc.wire(p[1], p[2], at_lh1);
	else {
		sc.wire(p[1], m0, at_m0);
		sc.wire(p[2], m1, at_m1);
	}
	FormalSum r(d.skel, d.directed);
	if (!d.directed) {
		sc.wire(p[0], nl);
		r.add_diagram(sc.to_diagram(), 1);
	} else { // both orientations of the new stem
		sc.wire(p[0], nl, true);
		r.add_diagram(sc.to_diagram(), 1);
		sc.wire(p[0], nl, false);
		r.add_diagram(sc.to_diagram(), 1);
	}
	return r;
}

namespace {

FormalSum swap_legs(const FormalSum &v, int comp, int i)
{
	FormalSum r(v.skel, v.directed, v.cap);
	for (auto &[id, c] : v.terms) {
		const Diagram &d = interned(id);
		Scratch sc = Scratch::from(d);
		auto legs = legs_on(sc, comp);
		if (i + 1 >= (int)legs.size())
			throw std::runtime_error("swap: leg index out of range");
		std::swap(sc.vs[(size_t)legs[(size_t)i]].pos,
		          sc.vs[(size_t)legs[(size_t)i + 1]].pos);
		r.add_diagram(sc.to_diagram(), c);
	}
	return r;
}

FormalSum join_legs(const FormalSum &v, int comp, int i)
{
	FormalSum r(v.skel, v.directed, v.cap);
	for (auto &[id, c] : v.terms) {
		FormalSum g = glue_join(interned(id), comp, i);
		g *= c;
		r += g;
	}
	return r;
}

} // namespace

FormalSum apply_word(const FormalSum &v, int comp, const std::vector<int> &w)
{
	FormalSum cur = v;
	for (int p = (int)w.size() - 1; p >= 0; p--)
		cur = swap_legs(cur, comp, w[(size_t)p]);
	return cur;
}

FormalSum gamma_word(const FormalSum &v, int comp, const std::vector<int> &w)
{
	FormalSum cur = v;
	FormalSum total(v.skel, v.directed, v.cap);
	for (int p = (int)w.size() - 1; p >= 0; p--) {
		total += join_legs(cur, comp, w[(size_t)p]);
		if (p > 0)
			cur = swap_legs(cur, comp, w[(size_t)p]);
	}
	return total;
}

FormalSum gamma_word(const Diagram &d, int comp, const std::vector<int> &w)
{
	return gamma_word(single(d), comp, w);
}

std::vector<int> perm_to_word(const std::vector<int> &pi)
{
	std::vector<int> cur = pi, rec;
	bool moved = true;
	while (moved) {
		moved = false;
		for (size_t p = 0; p + 1 < cur.size(); p++)
			if (cur[p] > cur[p + 1]) {
				std::swap(cur[p], cur[p + 1]);
				rec.push_back((int)p);
				moved = true;
			}
	}
	std::reverse(rec.begin(), rec.end());
	return rec;
}

namespace {

// sigma by the leg-count recursion: sigma(D) = D* + (1/k!) sigma(G(D,k)),
// where G(D,r) sums Gamma_D over the permutation group of the first r legs
// via the coset factorization pi = rho . (move leg j to slot r).
struct SigmaEngine {
	int comp;
	Skeleton star_sk;
	bool dir;
	std::map<int, FormalSum> memo_sig;
	std::map<std::pair<int, int>, FormalSum> memo_g;

	FormalSum star_of(const Diagram &d)
	{
		Scratch sc = Scratch::from(d);
		sc.skel = star_sk;
		FormalSum r(star_sk, dir);
		r.add_diagram(sc.to_diagram(), 1);
		return r;
	}

	const FormalSum &G(int id, int r)
	{
		auto key = std::make_pair(id, r);
		auto it = memo_g.find(key);
		if (it != memo_g.end())
			return it->second;
		const Diagram &d = interned(id);
		FormalSum res(d.skel, dir);
		if (r > 1) {
			Int fr1 = factorial(r - 1);
			for (int j = 0; j < r; j++) {
				std::vector<int> w;
				for (int t = r - 2; t >= j; t--)
					w.push_back(t);
				FormalSum pd = apply_word(single(d), comp, w);
				for (auto &[tid, tc] : pd.terms) {
					FormalSum g = G(tid, r - 1);
					g *= tc;
					res += g;
				}
				FormalSum gm = gamma_word(d, comp, w);
				gm *= Rat(fr1);
				res += gm;
			}
		}
		return memo_g.emplace(key, std::move(res)).first->second;
	}

	FormalSum sig_sum(const FormalSum &v)
	{
		FormalSum r(star_sk, dir);
		for (auto &[id, c] : v.terms) {
			FormalSum s = sig(id);
			s *= c;
			r += s;
		}
		return r;
	}

	const FormalSum &sig(int id)
	{
		auto it = memo_sig.find(id);
		if (it != memo_sig.end())
			return it->second;
		const Diagram &d = interned(id);
		int k = count_legs(d, comp);
		FormalSum res = star_of(d);
		if (k > 1) {
			FormalSum body = sig_sum(G(id, k));
			body *= Rat(1) / Rat(factorial(k));
			res += body;
		}
		return memo_sig.emplace(id, std::move(res)).first->second;
	}
};

} // namespace

FormalSum sigma(const FormalSum &v, int m)
{
	if (v.skel.comps[(size_t)m].kind != CompKind::Interval)
		throw std::runtime_error("sigma: component is not an interval");
	SigmaEngine eng;
	eng.comp = m;
	eng.star_sk = v.skel;
	eng.star_sk.comps[(size_t)m] = {CompKind::Star, "x"};
	eng.dir = v.directed;
	FormalSum r(eng.star_sk, v.directed, v.cap);
	for (auto &[id, c] : v.terms) {
		FormalSum s = eng.sig(id);
		s *= c;
		r += s;
	}
	return r;
}

FormalSum iota(const FormalSum &v)
{
	if (v.directed)
		throw std::runtime_error("iota: input already directed");
	return map_terms(v, v.skel, true,
	                 [&](const Diagram &d, const Rat &c, FormalSum &r) {
		                 std::vector<std::pair<int, int>> edges;
		                 for (int h = 0; h < d.H(); h++)
			                 if (d.mate[(size_t)h] > h)
				                 edges.push_back({h, d.mate[(size_t)h]});
		                 for (long mask = 0; mask < (1L << edges.size());
		                      mask++) {
			                 Diagram e = d;
			                 e.directed = true;
			                 e.head.assign((size_t)d.H(), 0);
			                 for (size_t t = 0; t < edges.size(); t++)
				                 e.head[(size_t)(mask >> t & 1
				                                     ? edges[t].second
				                                     : edges[t].first)] = 1;
			                 r.add_diagram(e, c);
		                 }
	                 });
}

FormalSum iterated_coproduct(const FormalSum &v, int n)
{
	FormalSum r = v;
	for (int i = 1; i < n; i++)
		r = cabling(r, i - 1);
	return r;
}

// --- truncated power series ------------------------------------------------

namespace {

Rat unit_coeff(const FormalSum &a, int &unit_id)
{
	FormalSum u = unit_sum(a.skel, a.directed, a.cap);
	unit_id = u.terms.begin()->first;
	auto it = a.terms.find(unit_id);
	return it == a.terms.end() ? Rat(0) : it->second;
}

void require_finite_cap(const FormalSum &a)
{
	if (a.cap >= (1 << 20))
		throw std::runtime_error("series need a finite degree cap");
}

} // namespace

FormalSum fs_exp(const FormalSum &x)
{
	require_finite_cap(x);
	int uid;
	if (unit_coeff(x, uid) != 0)
		throw std::runtime_error("exp: nonzero degree-0 part");
	FormalSum res = unit_sum(x.skel, x.directed, x.cap);
	FormalSum term = res;
	for (int n = 1; n <= x.cap; n++) {
		term = mul(term, x);
		term *= Rat(1, n);
		if (term.is_zero())
			break;
		res += term;
	}
	return res;
}

FormalSum fs_log(const FormalSum &a)
{
	require_finite_cap(a);
	int uid;
	if (unit_coeff(a, uid) != 1)
		throw std::runtime_error("log: unit coefficient must be 1");
	FormalSum y = a;
	y.add(uid, -1);
	FormalSum res(a.skel, a.directed, a.cap);
	FormalSum yn = unit_sum(a.skel, a.directed, a.cap);
	for (int n = 1; n <= a.cap; n++) {
		yn = mul(yn, y);
		if (yn.is_zero())
			break;
		FormalSum t = yn;
		t *= Rat(n % 2 ? 1 : -1, n);
		res += t;
	}
	return res;
}

FormalSum fs_inv(const FormalSum &a)
{
	require_finite_cap(a);
	int uid;
	Rat c = unit_coeff(a, uid);
	if (c == 0)
		throw std::runtime_error("inverse: unit coefficient is zero");
	FormalSum y = a;
	y *= Rat(1) / c;
	y.add(uid, -1);
	FormalSum res = unit_sum(a.skel, a.directed, a.cap);
	FormalSum yn = res;
	for (int n = 1; n <= a.cap; n++) {
		yn = mul(yn, y);
		if (yn.is_zero())
			break;
		FormalSum t = yn;
		if (n % 2)
			t *= Rat(-1);
		res += t;
	}
	res *= Rat(1) / c;
	return res;
}

FormalSum fs_sqrt(const FormalSum &a)
{
	require_finite_cap(a);
	int uid;
	if (unit_coeff(a, uid) != 1)
		throw std::runtime_error("sqrt: unit coefficient must be 1");
	FormalSum y = a;
	y.add(uid, -1);
	FormalSum res = unit_sum(a.skel, a.directed, a.cap);
	FormalSum yn = res;
	Rat coef = 1;
	for (int n = 1; n <= a.cap; n++) {
		yn = mul(yn, y);
		if (yn.is_zero())
			break;
		coef *= (Rat(3, 2) - n) / Rat(n);
		FormalSum t = yn;
		t *= coef;
		res += t;
	}
	return res;
}

// --- stock elements ----------------------------------------------------------

FormalSum el_casimir(int cap)
{
	Scratch sc;
	sc.skel = lines(1);
	int a = sc.add_leg(0, 0), b = sc.add_leg(0, 1);
	sc.wire(a, b);
	FormalSum r(sc.skel, false, cap);
	r.add_diagram(sc.to_diagram(), 1);
	return r;
}

FormalSum el_omega(int cap)
{
	Scratch sc;
	sc.skel = lines(2);
	int a = sc.add_leg(0, 0), b = sc.add_leg(1, 0);
	sc.wire(a, b);
	FormalSum r(sc.skel, false, cap);
	r.add_diagram(sc.to_diagram(), 1);
	return r;
}

FormalSum el_rkz(int cap)
{
	FormalSum h = el_omega(cap);
	h *= Rat(1, 2);
	return fs_exp(h);
}

FormalSum el_rarrow(int cap)
{
	Scratch sc;
	sc.skel = lines(2);
	sc.directed = true;
	int h = sc.add_leg(0, 0), t = sc.add_leg(1, 0);
	sc.wire(t, h, true); // head on strand 1
	FormalSum r(sc.skel, true, cap);
	r.add_diagram(sc.to_diagram(), 1);
	return r;
}

namespace {

FormalSum half_circ(bool head_early, int cap)
{
	Scratch sc;
	sc.skel = lines(1);
	sc.directed = true;
	int a = sc.add_leg(0, 0), b = sc.add_leg(0, 1);
	sc.wire(b, a, head_early);
	FormalSum r(sc.skel, true, cap);
	r.add_diagram(sc.to_diagram(), 1);
	return r;
}

} // namespace

FormalSum el_rho(int cap)
{
	FormalSum r = half_circ(true, cap) - half_circ(false, cap);
	r *= Rat(1, 2);
	return r;
}

namespace {

FormalSum tadpole(bool stem_down, int cap)
{
	Scratch sc;
	sc.skel = lines(1);
	sc.directed = true;
	int l = sc.add_leg(0, 0);
	auto p = sc.add_vertex();
	sc.wire(p[0], l, stem_down); // head at the strand when pointing down
	sc.wire(p[1], p[2], false);
	FormalSum r(sc.skel, true, cap);
	r.add_diagram(sc.to_diagram(), 1);
	return r;
}

} // namespace

FormalSum el_tadpole_down(int cap) { return tadpole(true, cap); }
FormalSum el_tadpole_up(int cap) { return tadpole(false, cap); }

FormalSum el_wheel(int legs, int cap)
{
	if (legs < 2 || legs % 2)
		throw std::runtime_error("wheel: need an even number of legs >= 2");
	Scratch sc;
	sc.skel = star_skel();
	std::vector<std::array<int, 3>> vs;
	for (int i = 0; i < legs; i++)
		vs.push_back(sc.add_vertex());
	for (int i = 0; i < legs; i++) {
		sc.wire(vs[(size_t)i][2], vs[(size_t)((i + 1) % legs)][0]);
		sc.wire(vs[(size_t)i][1], sc.add_leg(0, i));
	}
	FormalSum r(sc.skel, false, cap);
	r.add_diagram(sc.to_diagram(), 1);
	return r;
}

} // namespace jd
