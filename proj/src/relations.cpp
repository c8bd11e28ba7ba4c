#include "jd/spaces.hpp"
#include "jd/scratch.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace jd {

const char *relset_name(RelSet rs)
{
	switch (rs) {
	case RelSet::A: return "A";
	case RelSet::Achord: return "Achord";
	case RelSet::Aarrow: return "Aarrow";
	case RelSet::AarrowPlus: return "AarrowPlus";
	case RelSet::AarrowMinus: return "AarrowMinus";
	case RelSet::MPlus: return "MPlus";
	case RelSet::MMinus: return "MMinus";
	case RelSet::PolyakChord: return "PolyakChord";
	case RelSet::PolyakAcyclic: return "PolyakAcyclic";
	}
	return "?";
}

bool relset_directed(RelSet rs)
{
	return !(rs == RelSet::A || rs == RelSet::Achord);
}

bool has_sink_or_source(const Diagram &d)
{
	for (int v = d.E(); v < d.nverts(); v++) {
		int in = 0;
		for (int s = 0; s < 3; s++)
			in += d.head[(size_t)d.he(v, s)];
		if (in == 0 || in == 3)
			return true;
	}
	return false;
}

bool has_directed_cycle(const Diagram &d)
{
	// cycles can only run through internal vertices (legs are valence 1)
	int n = d.nint;
	std::vector<std::vector<int>> adj((size_t)n);
	for (int h = d.E(); h < d.H(); h++) {
		int m = d.mate[(size_t)h];
		if (m < d.E())
			continue;
		if (d.head[(size_t)m]) // arrow h's vertex -> m's vertex
			adj[(size_t)(d.vertex_of(h) - d.E())].push_back(d.vertex_of(m) -
			                                               d.E());
	}
	std::vector<int> state((size_t)n, 0);
	std::function<bool(int)> dfs = [&](int u) {
		state[(size_t)u] = 1;
		for (int w : adj[(size_t)u]) {
			if (state[(size_t)w] == 1)
				return true;
			if (state[(size_t)w] == 0 && dfs(w))
				return true;
		}
		state[(size_t)u] = 2;
		return false;
	};
	for (int u = 0; u < n; u++)
		if (state[(size_t)u] == 0 && dfs(u))
			return true;
	return false;
}

bool all_legs_incoming(const Diagram &d)
{
	for (int v = 0; v < d.E(); v++)
		if (!d.head[(size_t)v])
			return false;
	return true;
}

bool all_legs_outgoing(const Diagram &d)
{
	for (int v = 0; v < d.E(); v++)
		if (d.head[(size_t)v])
			return false;
	return true;
}

bool body_is_boundary_connected(const Diagram &d)
{
	int n = d.nverts();
	std::vector<int> comp((size_t)n, -1);
	for (int v = 0; v < n; v++) {
		if (comp[(size_t)v] >= 0)
			continue;
		std::vector<int> stack{v};
		comp[(size_t)v] = v;
		bool leg = false;
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			if (u < d.E())
				leg = true;
			int nh = u < d.E() ? 1 : 3;
			for (int s = 0; s < nh; s++) {
				int k = u < d.E() ? u : d.he(u, s);
				int w = d.vertex_of(d.mate[(size_t)k]);
				if (comp[(size_t)w] < 0) {
					comp[(size_t)w] = v;
					stack.push_back(w);
				}
			}
		}
		if (!leg)
			return false;
	}
	return true;
}

namespace {

// T and U of the STU relation at (internal vertex u, slot s): the vertex and
// its skeleton leg are removed and the two remaining edges (cyclically a =
// s+1, b = s+2) land on the skeleton where the leg was, a first for T.
Diagram stu_reattach(const Diagram &d, int u, int s, bool a_first)
{
	Scratch sc = Scratch::from(d);
	int stem = d.he(u, s);
	int leg = d.mate[(size_t)stem];
	int ha = d.he(u, (s + 1) % 3), hb = d.he(u, (s + 2) % 3);
	int comp = d.ext[(size_t)leg].first;
	long p = 2L * d.ext[(size_t)leg].second;
	for (auto &v : sc.vs)
		if (v.ext)
			v.pos *= 2;
	bool loop = d.mate[(size_t)ha] == hb;
	int ma = loop ? -1 : d.mate[(size_t)ha];
	int mb = loop ? -1 : d.mate[(size_t)hb];
	bool head_a = d.directed && d.head[(size_t)ha]; // arrow points into u at a
	bool head_b = d.directed && d.head[(size_t)hb];
	sc.kill(u);
	sc.kill(leg);
	int la = sc.add_leg(comp, a_first ? p : p + 1);
	int lb = sc.add_leg(comp, a_first ? p + 1 : p);
	if (loop) {
		// the loop becomes an arc between the two new legs; it pointed into
		// u at a, so it now points into la
		sc.wire(la, lb, !head_a);
		if (d.directed && head_a == head_b)
			throw std::runtime_error("stu: malformed loop directions");
	} else {
		sc.wire(la, ma, d.directed && d.head[(size_t)ma]);
		sc.wire(lb, mb, d.directed && d.head[(size_t)mb]);
	}
	return sc.to_diagram();
}

Diagram flip_edge(const Diagram &d, int h)
{
	Diagram f = d;
	int m = f.mate[(size_t)h];
	std::swap(f.head[(size_t)h], f.head[(size_t)m]);
	return f;
}

// STU relation(s) rooted at d's site (u,s).  Undirected: d - T + U.
// Directed: d + d(stem flipped) - T + U, valid modulo NS.
void emit_stu(const Diagram &d, int u, int s, std::vector<FormalSum> &out)
{
	FormalSum r(d.skel, d.directed);
	r.add_diagram(d, 1);
	if (d.directed)
		r.add_diagram(flip_edge(d, d.he(u, s)), 1);
	r.add_diagram(stu_reattach(d, u, s, true), -1);
	r.add_diagram(stu_reattach(d, u, s, false), 1);
	if (!r.is_zero())
		out.push_back(std::move(r));
}

// Rewire the two endpoints of the internal edge (hu,hw): with the stubs read
// cyclically as u:(m,alpha,beta), w:(m,gamma,delta), build the partner shape
// u':(m',x1,x2), w':(m',x3,x4) where (x1,x2,x3,x4) names stub roles 0..3 =
// (alpha,beta,gamma,delta).
Diagram ihx_rewire(const Diagram &d, int hu, int hw, std::array<int, 4> role,
                   bool flip_m)
{
	int u = d.vertex_of(hu), w = d.vertex_of(hw);
	int su = d.slot_of(hu), sw = d.slot_of(hw);
	std::array<int, 4> oldslot = {d.he(u, (su + 1) % 3), d.he(u, (su + 2) % 3),
	                              d.he(w, (sw + 1) % 3), d.he(w, (sw + 2) % 3)};
	Scratch sc = Scratch::from(d);
	bool m_into_w = d.directed && d.head[(size_t)hw];
	std::array<int, 4> oldmate{};
	std::array<bool, 4> oldhead{};
	for (int i = 0; i < 4; i++) {
		oldmate[(size_t)i] = d.mate[(size_t)oldslot[(size_t)i]];
		oldhead[(size_t)i] = d.directed && d.head[(size_t)oldslot[(size_t)i]];
	}
	sc.kill(u);
	sc.kill(w);
	auto nu = sc.add_vertex();
	auto nw = sc.add_vertex();
	if (flip_m)
		m_into_w = !m_into_w;
	sc.wire(nu[0], nw[0], m_into_w);
	// new port of stub role i
	std::array<int, 4> port{};
	port[(size_t)role[0]] = nu[1];
	port[(size_t)role[1]] = nu[2];
	port[(size_t)role[2]] = nw[1];
	port[(size_t)role[3]] = nw[2];
	for (int i = 0; i < 4; i++) {
		// mutual stub pairs (multi-edges between u,w or loops at one of them)
		int j = -1;
		for (int k = 0; k < 4; k++)
			if (oldmate[(size_t)i] == oldslot[(size_t)k])
				j = k;
		if (j >= 0) {
			if (j > i)
				sc.wire(port[(size_t)i], port[(size_t)j], oldhead[(size_t)j]);
		} else {
			sc.wire(port[(size_t)i], oldmate[(size_t)i],
			        d.directed && d.head[(size_t)oldmate[(size_t)i]]);
		}
	}
	return sc.to_diagram();
}

// IHX at the internal edge (hu,hw): I - H + X with
//   I: u=(m,a,b) w=(m,c,d);  H: u'=(m,b,c) w'=(m,d,a);  X: u''=(m,a,c) w''=(m,d,b)
// Directed: each shape summed over both directions of the middle edge.
void emit_ihx(const Diagram &d, int hu, int hw, std::vector<FormalSum> &out)
{
	FormalSum r(d.skel, d.directed);
	const std::array<int, 4> H = {1, 2, 3, 0}; // roles (beta,gamma,delta,alpha)
	const std::array<int, 4> X = {0, 2, 3, 1}; // roles (alpha,gamma,delta,beta)
	r.add_diagram(d, 1);
	if (d.directed)
		r.add_diagram(flip_edge(d, hu), 1);
	r.add_diagram(ihx_rewire(d, hu, hw, H, false), -1);
	r.add_diagram(ihx_rewire(d, hu, hw, X, false), 1);
	if (d.directed) {
		r.add_diagram(ihx_rewire(d, hu, hw, H, true), -1);
		r.add_diagram(ihx_rewire(d, hu, hw, X, true), 1);
	}
	if (!r.is_zero())
		out.push_back(std::move(r));
}

// 4T: remove the movable leg x and re-insert it on either side of the two
// endpoints k1,k2 of another chord: [x|k1] - [k1|x] - [x|k2] + [k2|x] = 0.
void emit_4t(const Diagram &d, int x, int k1, int k2, std::vector<FormalSum> &out)
{
	FormalSum r(d.skel, d.directed);
	// derived by applying STU twice to the one-vertex Y diagram:
	// sliding x across either end of a chord gives the same difference
	const int sgn[4] = {1, -1, 1, -1};
	int t = 0;
	for (int k : {k1, k2})
		for (int side = 0; side < 2; side++, t++) { // 0 = just before k
			Scratch sc = Scratch::from(d);
			for (auto &v : sc.vs)
				if (v.ext)
					v.pos *= 2;
			int mx = d.mate[(size_t)x];
			sc.kill(x);
			int nl = sc.add_leg(d.ext[(size_t)k].first,
			                    2L * d.ext[(size_t)k].second + (side ? 1 : -1));
			sc.wire(nl, mx, d.directed && d.head[(size_t)mx]);
			r.add_diagram(sc.to_diagram(), sgn[t]);
		}
	if (!r.is_zero())
		out.push_back(std::move(r));
}

} // namespace

FormalSum stu_instance(const Diagram &d, int u, int s)
{
	FormalSum r(d.skel, d.directed);
	r.add_diagram(d, 1);
	if (d.directed)
		r.add_diagram(flip_edge(d, d.he(u, s)), 1);
	r.add_diagram(stu_reattach(d, u, s, true), -1);
	r.add_diagram(stu_reattach(d, u, s, false), 1);
	return r;
}

namespace {

void rel_stu_ihx(const Skeleton &s, int m, bool directed, bool bf,
                 std::vector<FormalSum> &out)
{
	for (int id : enumerate_diagrams(s, m, directed, bf)) {
		const Diagram &d = interned(id);
		for (int u = d.E(); u < d.nverts(); u++)
			for (int sl = 0; sl < 3; sl++) {
				int leg = d.mate[(size_t)d.he(u, sl)];
				// STU needs an ordered strand; star legs have no order
				if (leg < d.E() &&
				    s.comps[(size_t)d.ext[(size_t)leg].first].kind !=
				        CompKind::Star)
					emit_stu(d, u, sl, out);
			}
		for (int h = d.E(); h < d.H(); h++) {
			int mm = d.mate[(size_t)h];
			if (mm > h && mm >= d.E() && d.vertex_of(mm) != d.vertex_of(h))
				emit_ihx(d, h, mm, out);
		}
	}
}

void rel_ns(const Skeleton &s, int m, bool bf, std::vector<FormalSum> &out)
{
	for (int id : enumerate_diagrams(s, m, true, bf)) {
		const Diagram &d = interned(id);
		if (has_sink_or_source(d)) {
			FormalSum r(s, true);
			r.add(id, 1);
			out.push_back(std::move(r));
		}
	}
}

void rel_4t(const Skeleton &s, int m, std::vector<FormalSum> &out)
{
	for (int id : enumerate_chord_diagrams(s, m)) {
		const Diagram &d = interned(id);
		for (int x = 0; x < d.E(); x++) {
			int y = d.mate[(size_t)x];
			for (int k1 = 0; k1 < d.E(); k1++) {
				int k2 = d.mate[(size_t)k1];
				if (k1 == x || k1 == y || k2 == x || k2 == y || k2 < k1)
					continue;
				emit_4t(d, x, k1, k2, out);
			}
		}
	}
}

// 6T: for a spectator chord diagram of degree m-2 and three marked gaps,
// [r12,r13] + [r12,r23] + [r13,r23] = 0 with arrows pointing at the lower
// numbered site; shared-site endpoint order gives the commutators.
void rel_6t(const Skeleton &s, int m, std::vector<FormalSum> &out)
{
	if (m < 2)
		return;
	struct Gap {
		int comp;
		long before; // leg position the gap precedes (k = after all)
	};
	for (int id : enumerate_chord_diagrams_directed(s, m - 2)) {
		const Diagram &d = interned(id);
		std::vector<Gap> gaps;
		for (size_t c = 0; c < s.comps.size(); c++) {
			int k = 0;
			for (auto &x : d.ext)
				if (x.first == (int)c)
					k++;
			if (s.comps[c].kind == CompKind::Interval)
				for (int g = 0; g <= k; g++)
					gaps.push_back({(int)c, g});
			else if (s.comps[c].kind == CompKind::Circle)
				for (int g = 0; g < std::max(k, 1); g++)
					gaps.push_back({(int)c, g});
		}
		// site labels 1,2,3 mapped to gaps (repeats allowed); sites sharing
		// a gap are linearly ordered, enumerated via a permutation of labels
		static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
		                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
		std::set<std::string> seen;
		for (size_t i = 0; i < gaps.size(); i++)
			for (size_t j = 0; j < gaps.size(); j++)
				for (size_t k = 0; k < gaps.size(); k++)
					for (auto &pm : perms) {
						const size_t gi[4] = {0, i, j, k};
						int wrank[4] = {0, 0, 0, 0};
						for (int a = 1; a <= 3; a++)
							for (int b = 1; b <= 3; b++)
								if (gi[a] == gi[b] && pm[b - 1] < pm[a - 1])
									wrank[a]++;
						FormalSum r(s, true);
						// term helper: arrows (t1,h1),(t2,h2) as site labels;
						// "first" = which arrow sits earlier at the shared site
						auto term = [&](int h1s, int t1s, int h2s, int t2s,
						                int shared, bool first_is_1, int sgn) {
							Scratch sc = Scratch::from(d);
							for (auto &v : sc.vs)
								if (v.ext)
									v.pos *= 16;
							const Gap *g[4] = {nullptr, &gaps[i], &gaps[j],
							                   &gaps[k]};
							auto key = [&](int site, int rank) {
								// rank: 0 single, 1 earlier of pair, 2 later
								long base = 16L * g[site]->before - 12 +
								            4L * wrank[site];
								if (rank == 1)
									base -= 1;
								if (rank == 2)
									base += 1;
								return base;
							};
							auto rank_of = [&](int site, bool is_first_arrow) {
								if (site != shared)
									return 0;
								return (is_first_arrow == first_is_1) ? 1 : 2;
							};
							int h1 = sc.add_leg(g[h1s]->comp,
							                    key(h1s, rank_of(h1s, true)));
							int t1 = sc.add_leg(g[t1s]->comp,
							                    key(t1s, rank_of(t1s, true)));
							int h2 = sc.add_leg(g[h2s]->comp,
							                    key(h2s, rank_of(h2s, false)));
							int t2 = sc.add_leg(g[t2s]->comp,
							                    key(t2s, rank_of(t2s, false)));
							sc.wire(t1, h1, true);
							sc.wire(t2, h2, true);
							r.add_diagram(sc.to_diagram(), sgn);
						};
						// [r12,r13]: arrows a=(h@1,t@2), b=(h@1,t@3), share 1
						term(1, 2, 1, 3, 1, true, 1);
						term(1, 2, 1, 3, 1, false, -1);
						// [r12,r23]: a=(h@1,t@2), b=(h@2,t@3), share 2
						term(1, 2, 2, 3, 2, true, 1);
						term(1, 2, 2, 3, 2, false, -1);
						// [r13,r23]: a=(h@1,t@3), b=(h@2,t@3), share 3
						term(1, 3, 2, 3, 3, true, 1);
						term(1, 3, 2, 3, 3, false, -1);
						if (!r.is_zero() && seen.insert(r.str()).second)
							out.push_back(std::move(r));
					}
	}
}

void rel_rightmost(const Skeleton &s, int m, bool incoming, bool bf,
                   std::vector<FormalSum> &out)
{
	if (s.comps.size() != 1 || s.comps[0].kind != CompKind::Interval)
		throw std::runtime_error("M+/M- need a single interval skeleton");
	for (int id : enumerate_diagrams(s, m, true, bf)) {
		const Diagram &d = interned(id);
		if (d.E() == 0)
			continue;
		int last = d.E() - 1; // legs sorted by position
		if ((d.head[(size_t)last] != 0) == incoming) {
			FormalSum r(s, true);
			r.add(id, 1);
			out.push_back(std::move(r));
		}
	}
}

} // namespace

std::vector<FormalSum> generate_relations(const Skeleton &s, int m, RelSet rs,
                                          bool bf)
{
	std::vector<FormalSum> out;
	switch (rs) {
	case RelSet::A:
		rel_stu_ihx(s, m, false, bf, out);
		break;
	case RelSet::Achord:
		rel_4t(s, m, out);
		break;
	case RelSet::Aarrow:
	case RelSet::AarrowPlus:
	case RelSet::AarrowMinus:
		rel_ns(s, m, bf, out);
		rel_stu_ihx(s, m, true, bf, out);
		break;
	case RelSet::MPlus:
	case RelSet::MMinus:
		rel_ns(s, m, bf, out);
		rel_stu_ihx(s, m, true, bf, out);
		rel_rightmost(s, m, rs == RelSet::MPlus, bf, out);
		break;
	case RelSet::PolyakChord:
		rel_6t(s, m, out);
		break;
	case RelSet::PolyakAcyclic: {
		std::vector<FormalSum> raw;
		rel_ns(s, m, bf, raw);
		rel_stu_ihx(s, m, true, bf, raw);
		for (auto &r : raw) {
			bool ok = true;
			for (auto &[id, c] : r.terms)
				if (has_directed_cycle(interned(id)))
					ok = false;
			if (ok)
				out.push_back(std::move(r));
		}
		break;
	}
	}
	return out;
}

} // namespace jd
