// Etingof-Kazhdan quantization on directed diagrams; see jd/ek.hpp.

#include "jd/ek.hpp"
#include "jd/lie.hpp"
#include "jd/ops.hpp"
#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace jd {

namespace {

const QuotientSpace &qcache(const Skeleton &s, int cap, RelSet rs)
{
	static std::map<std::tuple<std::string, int, int>, QuotientSpace> cache;
	static std::mutex mu;
	std::lock_guard<std::mutex> lk(mu);
	auto key = std::make_tuple(s.str(), cap, (int)rs);
	auto it = cache.find(key);
	if (it == cache.end())
		it = cache.emplace(key, build_quotient(s, cap, rs)).first;
	return it->second;
}

std::vector<int> legs_on(const Diagram &d, int comp)
{
	std::vector<int> r;
	for (int i = 0; i < d.E(); i++)
		if (d.ext[(size_t)i].first == comp)
			r.push_back(i);
	return r;
}

// coordinates of v's degree-m part over q's basis columns
SparseVec coords(const QuotientSpace &q, const FormalSum &v, int m)
{
	FormalSum r = reduce(q, v);
	SparseVec out;
	for (auto &[id, c] : r.terms)
		if (interned(id).degree() == m)
			out.set(q.degs[(size_t)m].col.at(id), c);
	return out;
}

FormalSum unknot_closure(const QuasiHopfData &H)
{
	std::istringstream in("cp W=*\nap W=*\n");
	return z_eval(H, parse_tangle(in)).x;
}

} // namespace

FormalSum verma_q(const FormalSum &v, int comp, char side)
{
	if (side != '+' && side != '-')
		throw std::runtime_error("verma_q: side must be '+' or '-'");
	if (!v.directed)
		throw std::runtime_error("verma_q: directed sums only");
	std::map<int, FormalSum> memo;
	std::function<const FormalSum &(int)> go = [&](int id) -> const FormalSum & {
		auto it = memo.find(id);
		if (it != memo.end())
			return it->second;
		const Diagram &d = interned(id);
		std::vector<int> legs = legs_on(d, comp);
		int r = (int)legs.size();
		int j = -1; // rightmost wrong-species leg
		for (int a = r - 1; a >= 0 && j < 0; a--) {
			bool in = d.head[(size_t)legs[(size_t)a]] != 0;
			if (side == '+' ? in : !in)
				j = a;
		}
		FormalSum out(d.skel, true, v.cap);
		if (j < 0) {
			out.add(id, 1); // already one-species
		} else if (j < r - 1) {
			// move leg j to the rightmost slot, where it dies; what remains
			// is the gamma correction of the moving word
			std::vector<int> w;
			for (int t = r - 2; t >= j; t--)
				w.push_back(t);
			FormalSum g = gamma_word(d, comp, w);
			for (auto &[gid, c] : g.terms)
				out += go(gid) * c;
		} // j == r-1: the diagram itself dies
		return memo.emplace(id, std::move(out)).first->second;
	};
	FormalSum out(v.skel, true, v.cap);
	for (auto &[id, c] : v.terms)
		out += go(id) * c;
	return out;
}

FormalSum phi_map(const FormalSum &v, int comp) { return cabling(v, comp); }

FormalSum pair_normal_form(const FormalSum &w, int comp)
{
	return verma_q(verma_q(w, comp, '+'), comp + 1, '-');
}

FormalSum phi_inverse(const FormalSum &w, int comp)
{
	if (comp < 0 || comp + 1 >= (int)w.skel.comps.size())
		throw std::runtime_error("phi_inverse: needs comps comp, comp+1");
	Skeleton merged = w.skel;
	merged.comps.erase(merged.comps.begin() + comp + 1);
	auto pair_legs = [&](int id) {
		const Diagram &d = interned(id);
		int n = 0;
		for (auto &e : d.ext)
			if (e.first == comp || e.first == comp + 1)
				n++;
		return n;
	};
	FormalSum x(merged, true, w.cap);
	FormalSum W = pair_normal_form(w, comp);
	int guard = 2 * std::min(w.cap, 1 << 10) + 2; // legs <= 2 * degree
	while (!W.is_zero()) {
		if (--guard < 0)
			throw std::runtime_error("phi_inverse: peeling failed to "
			                         "terminate within its leg-count bound");
		int k = 0;
		for (auto &[id, c] : W.terms)
			k = std::max(k, pair_legs(id));
		FormalSum top(w.skel, true, w.cap);
		for (auto &[id, c] : W.terms)
			if (pair_legs(id) == k)
				top.add(id, c);
		FormalSum xk = product(top, comp, comp + 1);
		x += xk;
		// the unique species-respecting splitting inside the coproduct
		// restores `top` termwise; everything else sits lower once rewritten
		W = pair_normal_form(W - cabling(xk, comp), comp);
	}
	return x;
}

TangleWord jbraid_word()
{
	std::istringstream in("# four strands: bring 2,3 together, braid, undo\n"
	                      "ra W=* A=u B=u C=(uu)\n"
	                      "la W=(u*) A=u B=u C=u\n"
	                      "ov W=(u(*u)) A=u B=u\n"
	                      "ra W=(u*) A=u B=u C=u\n"
	                      "la W=* A=u B=u C=(uu)\n");
	return parse_tangle(in);
}

TwistJ compute_J(const QuasiHopfData &akz)
{
	if (akz.directed)
		throw std::runtime_error("compute_J: expects the undirected structure");
	int cap = akz.cap;
	HSMorphism m = z_eval(akz, jbraid_word());
	if ((int)m.x.skel.comps.size() != 4 || !(m.x.skel == lines(4)))
		throw std::runtime_error("compute_J: braid value is not on four strands");
	FormalSum jt = m.x;
	{
		FormalSum expect = unit_sum(lines(4), false, cap) +
		                   relabel(el_omega(cap), {2, 3}, 4) * Rat(1, 2);
		const QuotientSpace &q = qcache(lines(4), 1, RelSet::A);
		if (!reduce(q, (jt - expect).truncated(1)).is_zero())
			throw std::runtime_error(
			    "compute_J: stored braid word fails its degree-1 profile "
			    "(want unit + half a chord joining strands 2,3); the word "
			    "needs adjusting");
	}
	FormalSum J = phi_inverse(phi_inverse(iota(jt), 2), 0);
	{
		FormalSum expect =
		    unit_sum(lines(2), true, cap) + el_rarrow(cap) * Rat(1, 2);
		const QuotientSpace &q = qcache(lines(2), 1, RelSet::Aarrow);
		if (!reduce(q, (J - expect).truncated(1)).is_zero())
			throw std::runtime_error(
			    "compute_J: twist fails its degree-1 profile (want unit + "
			    "half the head-on-first-strand arrow)");
	}
	return {cap, J, fs_inv(J)};
}

TwistJ compute_J(int cap) { return compute_J(make_akz(cap)); }

FormalSum coassoc_residual(const QuasiHopfData &aarkz, const TwistJ &tw)
{
	const FormalSum &J = tw.J;
	FormalSum lhs = mul(mul(aarkz.Phi, cabling(J, 0)), relabel(J, {1, 2}, 3));
	FormalSum rhs = mul(cabling(J, 1), relabel(J, {2, 3}, 3));
	return reduce(qcache(lines(3), tw.cap, RelSet::Aarrow), lhs - rhs);
}

FormalSum rek_expansion_defect(const QuasiHopfData &aek)
{
	FormalSum want =
	    unit_sum(lines(2), true, aek.cap) + el_rarrow(aek.cap);
	return reduce(qcache(lines(2), 1, RelSet::Aarrow),
	              (aek.R - want).truncated(1));
}

QuasiHopfData build_aek(const TwistJ &tw)
{
	QuasiHopfData base = make_aarkz(tw.cap);
	FormalSum res = coassoc_residual(base, tw);
	if (!res.is_zero())
		throw std::runtime_error(
		    "build_aek: coassociativity residual has " +
		    std::to_string(res.terms.size()) + " terms");
	QuasiHopfData T = twist(base, tw.Jinv); // self-checks the structure
	const QuotientSpace &q3 = qcache(lines(3), tw.cap, RelSet::Aarrow);
	if (!reduce(q3, T.Phi - unit_sum(lines(3), true, tw.cap)).is_zero())
		throw std::runtime_error(
		    "build_aek: associator fails to collapse to the unit");
	if (!rek_expansion_defect(T).is_zero())
		throw std::runtime_error("build_aek: R misses its degree-1 profile");
	{
		FormalSum r12 = relabel(T.R, {1, 2}, 3), r13 = relabel(T.R, {1, 3}, 3),
		          r23 = relabel(T.R, {2, 3}, 3);
		if (!reduce(q3, mul(mul(r12, r13), r23) - mul(mul(r23, r13), r12))
		         .is_zero())
			throw std::runtime_error(
			    "build_aek: R fails the Yang-Baxter equation");
	}
	{
		const QuotientSpace &q1 = qcache(lines(1), tw.cap, RelSet::Aarrow);
		FormalSum vexp = fs_exp(iota(el_casimir(tw.cap)) * Rat(-1, 2));
		if (!reduce(q1, T.v - vexp).is_zero())
			throw std::runtime_error(
			    "build_aek: ribbon element is not exp(-(half-circle sum)/2)");
	}
	return T;
}

FormalSum closed_unknot(const QuasiHopfData &H)
{
	FormalSum a =
	    mul(mul(mul(H.uInv, H.v), antipode(H.beta, 0)), H.alpha);
	return trace_close(a, 0);
}

std::string report_str(const Report &rep)
{
	std::ostringstream os;
	for (auto &l : rep) {
		os << (l.asserted ? (l.holds ? "PASS" : "FAIL") : "DATA") << "  "
		   << l.name;
		if (!l.detail.empty())
			os << "  [" << l.detail << "]";
		os << "\n";
	}
	return os.str();
}

bool report_ok(const Report &rep)
{
	for (auto &l : rep)
		if (l.asserted && !l.holds)
			return false;
	return true;
}

Report verma_report(int cap)
{
	Report rep;
	const QuotientSpace &qa = qcache(lines(1), cap, RelSet::Aarrow);
	const QuotientSpace &mp = qcache(lines(1), cap, RelSet::MPlus);
	const QuotientSpace &mm = qcache(lines(1), cap, RelSet::MMinus);
	const QuotientSpace &ap = qcache(lines(1), cap, RelSet::AarrowPlus);
	const QuotientSpace &am = qcache(lines(1), cap, RelSet::AarrowMinus);
	{
		bool ok = true;
		std::ostringstream d;
		for (int m = 0; m <= cap; m++) {
			ok = ok && mm.dim(m) == ap.dim(m) && mp.dim(m) == am.dim(m);
			d << (m ? " " : "") << "deg" << m << ":" << mm.dim(m) << "|"
			  << ap.dim(m) << "," << mp.dim(m) << "|" << am.dim(m);
		}
		rep.push_back({"rightmost-dies quotient dims match one-species spans",
		               true, ok, d.str()});
	}
	{
		// the rewrite lands in the right species and inverts the projection
		bool ok = true;
		for (int m = 0; m <= cap && ok; m++) {
			for (char side : {'-', '+'}) {
				const QuotientSpace &mq = side == '-' ? mm : mp;
				for (int id : mq.degs[(size_t)m].basis) {
					FormalSum v(lines(1), true, cap);
					v.add(id, 1);
					FormalSum qv = verma_q(v, 0, side);
					for (auto &[tid, c] : qv.terms)
						ok = ok && (side == '-'
						                ? all_legs_incoming(interned(tid))
						                : all_legs_outgoing(interned(tid)));
					ok = ok && reduce(mq, qv - v).is_zero();
				}
			}
		}
		rep.push_back({"species rewrite inverts the rightmost-dies projection",
		               true, ok, ""});
	}
	{
		// one-species diagrams are fixed; wrong-rightmost diagrams die both
		// under the rewrite and in the quotient
		bool ok = true;
		int fixed = 0, killed = 0;
		for (int m = 0; m <= cap; m++)
			for (int id : enumerate_diagrams(lines(1), m, true, true)) {
				const Diagram &d = interned(id);
				FormalSum v(lines(1), true, cap);
				v.add(id, 1);
				if (all_legs_incoming(d)) {
					ok = ok && verma_q(v, 0, '-') == v;
					fixed++;
				}
				if (all_legs_outgoing(d)) {
					ok = ok && verma_q(v, 0, '+') == v;
					fixed++;
				}
				if (d.E() > 0) {
					bool in = d.head[(size_t)(d.E() - 1)] != 0;
					const QuotientSpace &mq = in ? mp : mm;
					if (!reduce(mq, v).is_zero() ||
					    !verma_q(v, 0, in ? '+' : '-').is_zero()) {
						ok = false;
					} else {
						killed++;
					}
				}
			}
		rep.push_back({"one-species diagrams fixed, wrong-rightmost ones die",
		               true, ok,
		               "fixed=" + std::to_string(fixed) +
		                   " killed=" + std::to_string(killed)});
	}
	{
		// left multiplication only sees the class of the right factor
		bool ok = true;
		int n = 0;
		for (int a = 0; a + 1 <= cap; a++)
			for (int id : enumerate_diagrams(lines(1), a, true, true))
				for (int jd_ : enumerate_diagrams(lines(1), 1, true, true)) {
					FormalSum x(lines(1), true, cap), y(lines(1), true, cap);
					x.add(jd_, 1);
					y.add(id, 1);
					for (char side : {'-', '+'}) {
						const QuotientSpace &mq = side == '-' ? mm : mp;
						FormalSum lhs = mul(x, y);
						FormalSum rhs = mul(x, verma_q(y, 0, side));
						ok = ok && reduce(mq, lhs - rhs).is_zero();
						n++;
					}
				}
		rep.push_back({"left multiplication descends to the quotients", true,
		               ok, "pairs=" + std::to_string(n)});
	}
	{
		// juxtaposition: two-strand diagrams whose first-strand legs are all
		// incoming and second-strand legs all outgoing (cross edges allowed)
		// span a subspace that strand merging maps isomorphically onto the
		// strand algebra, degree by degree
		const QuotientSpace &qa2 = qcache(lines(2), cap, RelSet::Aarrow);
		bool ok = true;
		std::ostringstream d;
		for (int m = 0; m <= cap; m++) {
			RrefBasis src, img;
			for (int id : qa2.degs[(size_t)m].ids) {
				const Diagram &dg = interned(id);
				bool species = true;
				for (int l = 0; l < dg.E() && species; l++) {
					bool in = dg.head[(size_t)l] != 0;
					species = dg.ext[(size_t)l].first == 0 ? in : !in;
				}
				if (!species)
					continue;
				FormalSum v(lines(2), true, cap);
				v.add(id, 1);
				src.insert(coords(qa2, v, m));
				img.insert(coords(qa, product(v, 0, 1), m));
			}
			bool okm =
			    src.rank() == qa.dim(m) && img.rank() == qa.dim(m);
			ok = ok && okm;
			d << (m ? " " : "") << "deg" << m << ":" << src.rank() << "->"
			  << img.rank() << "/" << qa.dim(m);
		}
		rep.push_back({"pair juxtaposition fills the strand algebra", true, ok,
		               d.str()});
	}
	return rep;
}

Report conjecture_suite(const QuasiHopfData &aek, const QuasiHopfData &akz_high,
                        int cap)
{
	Report rep;
	const QuotientSpace &qc = qcache(circles(1), cap, RelSet::Aarrow);
	const QuotientSpace &q1 = qcache(lines(1), cap, RelSet::Aarrow);
	{
		// closed degree-2 identity between rho and the directed two-wheel
		const QuotientSpace &qc2 = qcache(circles(1), 2, RelSet::Aarrow);
		FormalSum rho = el_rho(2);
		FormalSum lhs = trace_close(mul(rho, rho) * Rat(1, 2), 0);
		FormalSum rhs =
		    trace_close(iota(chi(el_wheel(2, 2), 0)) * Rat(1, 48), 0);
		rep.push_back({"Tr(rho^2/2) = Tr(directed two-wheel / 48)", true,
		               reduce(qc2, lhs - rhs).is_zero(), ""});
	}
	{
		// u-element against its conjectured closed form. The contraction
		// depends on the antipodal triple, and the twist leaves beta != 1;
		// with strand reversal squaring to the identity the raw element is
		// central, so it can only see the ribbon. Rescaling the triple by
		// beta (the standard move that makes a coassociative structure an
		// honest Hopf algebra, with alpha' = beta' = 1) multiplies the
		// u-element by beta S(beta^{-1}), and the rescaled element is the
		// one the closed form describes.
		FormalSum uhat =
		    mul(mul(aek.beta, antipode(fs_inv(aek.beta), 0)), aek.u);
		FormalSum want = mul(fs_exp(el_rho(cap)), aek.v);
		bool braw = reduce(q1, aek.u - aek.v).is_zero();
		bool bnorm = reduce(q1, uhat - want).is_zero();
		rep.push_back({"raw u-element collapses to the ribbon", false, braw,
		               braw ? "agrees (central: reversal squares to id)"
		                    : "differs"});
		rep.push_back({"normalized u-element = exp(rho) * ribbon", false,
		               bnorm,
		               bnorm ? "agrees through cap (triple rescaled by beta)"
		                     : "differs"});
		bool bba = reduce(q1, mul(aek.beta, aek.alpha) -
		                          unit_sum(lines(1), true, cap))
		               .is_zero();
		rep.push_back({"beta alpha collapses to the unit", true, bba, ""});
		// the same comparison through the double of the Borel half
		ManinTriple mt = build_double(borel_sl2());
		LieAlg g = sl2();
		Mat pr = borel_double_to_sl2();
		EnvTensor ta = env_map(tar_eval(uhat, mt), pr, g);
		EnvTensor tb = env_map(tar_eval(want, mt), pr, g);
		rep.push_back({"normalized u-element comparison holds on sl2", true,
		               ta == tb, "through hbar^" + std::to_string(cap)});
	}
	for (int k = 1; k <= cap; k += 2) {
		FormalSum rho = el_rho(cap), pk = rho;
		for (int t = 1; t < k; t++)
			pk = mul(pk, rho);
		bool z = reduce(qc, trace_close(pk, 0)).is_zero();
		rep.push_back({"Tr(rho^" + std::to_string(k) + ") reduces to zero",
		               false, z, z ? "zero" : "nonzero"});
	}
	{
		FormalSum zek = unknot_closure(aek);
		FormalSum zk = unknot_closure(make_akz(cap));
		rep.push_back(
		    {"unknot value through the twist = directed Kontsevich value",
		     true, reduce(qc, zek - iota(zk)).is_zero(), ""});
		rep.push_back({"unknot value matches Tr(u^{-1} v S(beta) alpha)", true,
		               reduce(qc, zek - closed_unknot(aek)).is_zero(), ""});
		for (int sg : {+1, -1}) {
			FormalSum cexp = trace_close(fs_exp(el_rho(cap) * sg), 0);
			bool eq = reduce(qc, zek - cexp).is_zero();
			rep.push_back({std::string("unknot value = Tr(exp(") +
			                   (sg > 0 ? "+" : "-") + "rho)) through cap",
			               false, eq, eq ? "agrees" : "differs"});
		}
	}
	{
		// fundamental-representation trace of the unknot value
		int hcap = akz_high.cap;
		FormalSum open_k = cut_circle(unknot_closure(akz_high), 0);
		ManinTriple mt = build_double(borel_sl2());
		LieAlg g = sl2();
		EnvTensor t =
		    env_map(tar_eval(iota(open_k), mt), borel_double_to_sl2(), g);
		auto tr = trace_on_rep(t, {&g.rep("fund")});
		// 2 cosh(hbar/2): coefficient 2 / (2^d d!) at even degree d
		std::map<int, Rat> expect;
		Rat fact(1), pow2(1);
		for (int d = 0; d <= hcap; d++) {
			if (d > 0) {
				fact *= d;
				pow2 *= 2;
			}
			if (d % 2 == 0)
				expect[d] = Rat(2) / (pow2 * fact);
		}
		std::ostringstream det;
		for (auto &[d, c] : tr)
			det << (d ? " " : "") << "h^" << d << ":" << c.str();
		rep.push_back({"fundamental trace of the unknot value is 2cosh(hbar/2)",
		               true, tr == expect,
		               det.str() + " through hbar^" + std::to_string(hcap)});
	}
	return rep;
}

Report polyak_maps(const FormalSum &Rek, int cap)
{
	Report rep;
	const QuotientSpace &pa1 = qcache(lines(1), cap, RelSet::PolyakAcyclic);
	const QuotientSpace &pc1 = qcache(lines(1), cap, RelSet::PolyakChord);
	const QuotientSpace &qa1 = qcache(lines(1), cap, RelSet::Aarrow);
	{
		bool ok = true;
		int n = 0;
		for (int m = 0; m <= cap; m++)
			for (auto &r : generate_relations(lines(1), m, RelSet::PolyakChord)) {
				n++;
				if (!reduce(pa1, r).is_zero())
					ok = false;
			}
		rep.push_back({"six-term instances die among acyclic diagrams", true,
		               ok, "instances=" + std::to_string(n)});
	}
	{
		RrefBasis cols;
		for (int id : pa1.degs[1].basis) {
			FormalSum v(lines(1), true, cap);
			v.add(id, 1);
			cols.insert(coords(qa1, v, 1));
		}
		int r0 = cols.rank();
		bool outside = !cols.insert(coords(qa1, el_tadpole_down(cap), 1)).zero();
		rep.push_back(
		    {"down-tadpole lies outside the acyclic image in degree 1", true,
		     outside,
		     "rank " + std::to_string(r0) + " -> " + std::to_string(cols.rank())});
	}
	{
		bool ok = true;
		int n = 0;
		for (int m = 0; m <= cap; m++)
			for (auto &r : generate_relations(lines(1), m, RelSet::Achord)) {
				n++;
				if (!reduce(pc1, iota(r)).is_zero())
					ok = false;
			}
		rep.push_back(
		    {"directed sums of four-term instances die among directed chords",
		     true, ok, "instances=" + std::to_string(n)});
	}
	{
		const QuotientSpace &pa2 = qcache(lines(2), cap, RelSet::PolyakAcyclic);
		const QuotientSpace &qa2 = qcache(lines(2), cap, RelSet::Aarrow);
		for (int m = 1; m <= cap; m++) {
			RrefBasis cols;
			for (int id : pa2.degs[(size_t)m].basis) {
				FormalSum v(lines(2), true, cap);
				v.add(id, 1);
				cols.insert(coords(qa2, v, m));
			}
			int r0 = cols.rank();
			bool member = cols.insert(coords(qa2, Rek, m)).zero();
			rep.push_back({"R degree-" + std::to_string(m) +
			                   " component lies in the acyclic image",
			               false, member,
			               "image rank " + std::to_string(r0)});
		}
	}
	return rep;
}

} // namespace jd
