#include "jd/diagram.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace jd {

long enumeration_guard = 2'000'000;

Skeleton Skeleton::of(const std::string &toks)
{
	Skeleton s;
	std::istringstream in(toks);
	std::string t;
	while (in >> t) {
		if (t == "I")
			s.comps.push_back({CompKind::Interval, ""});
		else if (t == "O")
			s.comps.push_back({CompKind::Circle, ""});
		else if (t.size() > 1 && t[0] == '*')
			s.comps.push_back({CompKind::Star, t.substr(1)});
		else
			throw std::runtime_error("bad skeleton token: " + t);
	}
	return s;
}

std::string Skeleton::str() const
{
	std::string out;
	for (auto &c : comps) {
		if (!out.empty())
			out += ' ';
		switch (c.kind) {
		case CompKind::Interval: out += 'I'; break;
		case CompKind::Circle: out += 'O'; break;
		case CompKind::Star: out += '*' + c.name; break;
		}
	}
	return out;
}

void Diagram::normalize()
{
	int e = E();
	std::vector<int> idx(e);
	for (int i = 0; i < e; i++)
		idx[(size_t)i] = i;
	std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
		return ext[(size_t)a] < ext[(size_t)b];
	});
	std::vector<std::pair<int, int>> next(e);
	std::vector<int> old2new(e);
	for (int i = 0; i < e; i++) {
		next[(size_t)i] = ext[(size_t)idx[(size_t)i]];
		old2new[(size_t)idx[(size_t)i]] = i;
	}
	// dense position ranks per component
	for (size_t c = 0; c < skel.comps.size(); c++) {
		int p = 0;
		for (auto &x : next)
			if (x.first == (int)c)
				x.second = p++;
	}
	std::vector<int> m2(mate.size());
	std::vector<char> h2(head.size());
	auto newhe = [&](int h) { return h < e ? old2new[(size_t)h] : h; };
	for (int h = 0; h < H(); h++) {
		m2[(size_t)newhe(h)] = newhe(mate[(size_t)h]);
		if (!head.empty())
			h2[(size_t)newhe(h)] = head[(size_t)h];
	}
	ext = next;
	mate = m2;
	head = h2;
}

void Diagram::validate() const
{
	if ((int)mate.size() != H())
		throw std::runtime_error("diagram: mate table size mismatch");
	if (directed && (int)head.size() != H())
		throw std::runtime_error("diagram: missing edge directions");
	for (int h = 0; h < H(); h++) {
		int m = mate[(size_t)h];
		if (m < 0 || m >= H() || m == h || mate[(size_t)m] != h)
			throw std::runtime_error("diagram: mate is not a fixed-point-free involution");
		if (directed && head[(size_t)h] + head[(size_t)m] != 1)
			throw std::runtime_error("diagram: each arc needs exactly one head");
	}
	if (nverts() % 2)
		throw std::runtime_error("diagram: odd vertex count");
	for (size_t c = 0; c < skel.comps.size(); c++) {
		if (skel.comps[c].kind == CompKind::Star)
			continue;
		std::set<int> seen;
		for (auto &x : ext)
			if (x.first == (int)c)
				seen.insert(x.second);
		if (!seen.empty() && (*seen.begin() != 0 ||
		                      *seen.rbegin() != (int)seen.size() - 1))
			throw std::runtime_error("diagram: positions not 0..k-1");
		int count = 0;
		for (auto &x : ext)
			if (x.first == (int)c)
				count++;
		if (count != (int)seen.size())
			throw std::runtime_error("diagram: duplicate position");
	}
	for (auto &x : ext)
		if (x.first < 0 || x.first >= (int)skel.comps.size())
			throw std::runtime_error("diagram: bad component index");
	if (sign != 1 && sign != -1)
		throw std::runtime_error("diagram: bad sign");
}

// ---------------------------------------------------------------------------
// Canonicalization.
//
// Vertices = external legs + internal vertices.  Legs on intervals are pinned
// by position; legs on circles are pinned once a rotation is chosen (outer
// loop over all rotation combinations); star legs and internal vertices are
// relabeled freely by a backtracking search.  Each internal vertex's three
// slots may be presented in any rotation of the stored cyclic order (sign +1)
// or of the reversed order (sign -1).  The canonical form is the labeling
// with lexicographically minimal encoding; if minimal labelings of both signs
// exist the diagram is self-negating and we return Zero.

namespace {

struct Canon {
	const Diagram &d;
	int E, n, F; // n = total vertices, F = pinned legs
	std::vector<int> pos2;     // leg position after circle rotation
	std::vector<int> color;    // refinement classes
	std::vector<int> v2id, id2v;
	std::vector<std::array<int, 3>> arr;    // internal: arrangement perm (arr pos -> slot)
	std::vector<std::array<int, 3>> arrinv; // slot -> arrangement pos
	std::vector<int> enc;
	int cursign = 1;
	long nodes = 0;

	// best over all rotations/labelings
	std::vector<int> best;
	std::set<int> bestsigns;
	std::vector<int> bestid2v;
	std::vector<std::array<int, 3>> bestarr;
	std::vector<int> bestpos2;

	explicit Canon(const Diagram &dd) : d(dd), E(dd.E()), n(dd.nverts())
	{
		arr.resize((size_t)n);
		arrinv.resize((size_t)n);
	}

	bool pinned(int v) const
	{
		return v < E && d.skel.comps[(size_t)d.ext[(size_t)v].first].kind !=
		                    CompKind::Star;
	}

	int headbit(int h) const { return d.directed ? d.head[(size_t)h] : 0; }

	void refine()
	{
		// seed: pinned legs get unique colors in (comp,pos2) order; star legs
		// one color per star; internal vertices split by in-degree
		std::vector<std::pair<std::pair<int, int>, int>> pin;
		for (int v = 0; v < E; v++)
			if (pinned(v))
				pin.push_back({{d.ext[(size_t)v].first, pos2[(size_t)v]}, v});
		std::sort(pin.begin(), pin.end());
		color.assign((size_t)n, -1);
		int next = 0;
		for (auto &p : pin)
			color[(size_t)p.second] = next++;
		F = next;
		for (int v = 0; v < E; v++)
			if (!pinned(v))
				color[(size_t)v] = F + d.ext[(size_t)v].first;
		int base = F + (int)d.skel.comps.size();
		for (int v = E; v < n; v++) {
			int indeg = 0;
			if (d.directed)
				for (int s = 0; s < 3; s++)
					indeg += d.head[(size_t)d.he(v, s)];
			color[(size_t)v] = base + indeg;
		}
		// iterate: signature = (color, sorted neighbor data)
		for (;;) {
			std::vector<std::pair<std::vector<int>, int>> sig((size_t)n);
			for (int v = 0; v < n; v++) {
				std::vector<int> s{color[(size_t)v]};
				std::vector<std::vector<int>> nb;
				int nh = v < E ? 1 : 3;
				for (int k = 0; k < nh; k++) {
					int h = v < E ? v : d.he(v, k);
					int m = d.mate[(size_t)h];
					nb.push_back({color[(size_t)d.vertex_of(m)], headbit(h)});
				}
				std::sort(nb.begin(), nb.end());
				for (auto &x : nb)
					s.insert(s.end(), x.begin(), x.end());
				sig[(size_t)v] = {std::move(s), v};
			}
			auto order = sig;
			std::sort(order.begin(), order.end());
			std::vector<int> nc((size_t)n);
			int cls = -1;
			for (size_t i = 0; i < order.size(); i++) {
				if (i == 0 || order[i].first != order[i - 1].first)
					cls++;
				nc[(size_t)order[i].second] = cls;
			}
			if (nc == color)
				break;
			color = nc;
		}
	}

	// append the encoding row of v; all entries start with a type token so
	// flattened streams stay comparable
	void emit(int v)
	{
		if (v < E) {
			enc.push_back(0);
			enc.push_back(d.ext[(size_t)v].first);
			entry(v, v);
		} else {
			enc.push_back(1);
			for (int t = 0; t < 3; t++)
				entry(v, d.he(v, arr[(size_t)v][(size_t)t]));
		}
	}

	void entry(int v, int h)
	{
		int m = d.mate[(size_t)h];
		int w = d.vertex_of(m);
		if (w == v && v >= E) {
			enc.push_back(1);
			enc.push_back(arrinv[(size_t)v][(size_t)d.slot_of(m)]);
			enc.push_back(headbit(h));
		} else if (v2id[(size_t)w] >= 0 && v2id[(size_t)w] < v2id[(size_t)v]) {
			enc.push_back(0);
			enc.push_back(v2id[(size_t)w]);
			enc.push_back(w < E ? 0 : arrinv[(size_t)w][(size_t)d.slot_of(m)]);
			enc.push_back(headbit(h));
		} else {
			enc.push_back(2);
			enc.push_back(headbit(h));
		}
	}

	// -1: current prefix already beats best, 0: tied, +1: prune
	int cmp_prefix() const
	{
		if (best.empty() && bestsigns.empty())
			return -1;
		size_t k = std::min(enc.size(), best.size());
		for (size_t i = 0; i < k; i++) {
			if (enc[i] < best[i])
				return -1;
			if (enc[i] > best[i])
				return 1;
		}
		return enc.size() <= best.size() ? 0 : 1;
	}

	void complete()
	{
		int c = cmp_prefix();
		if (c > 0)
			return;
		if (c < 0) {
			best = enc;
			bestsigns.clear();
			bestid2v = id2v;
			bestarr = arr;
			bestpos2 = pos2;
		}
		bestsigns.insert(cursign);
	}

	void dfs(int nextid)
	{
		if (++nodes > 4'000'000)
			throw std::runtime_error("canonicalize: search budget exceeded");
		if (nextid == n) {
			complete();
			return;
		}
		int cmin = INT_MAX;
		for (int v = 0; v < n; v++)
			if (v2id[(size_t)v] < 0)
				cmin = std::min(cmin, color[(size_t)v]);
		size_t mark = enc.size();
		for (int v = 0; v < n; v++) {
			if (v2id[(size_t)v] >= 0 || color[(size_t)v] != cmin)
				continue;
			v2id[(size_t)v] = nextid;
			id2v[(size_t)nextid] = v;
			if (v < E) {
				emit(v);
				if (cmp_prefix() <= 0)
					dfs(nextid + 1);
				enc.resize(mark);
			} else {
				for (int start = 0; start < 3; start++)
					for (int refl = 0; refl < 2; refl++) {
						for (int t = 0; t < 3; t++) {
							int s = refl ? (start - t + 3) % 3
							             : (start + t) % 3;
							arr[(size_t)v][(size_t)t] = s;
							arrinv[(size_t)v][(size_t)s] = t;
						}
						emit(v);
						cursign *= refl ? -1 : 1;
						if (cmp_prefix() <= 0)
							dfs(nextid + 1);
						cursign *= refl ? -1 : 1;
						enc.resize(mark);
					}
			}
			v2id[(size_t)v] = -1;
		}
	}

	void run_rotation()
	{
		refine();
		v2id.assign((size_t)n, -1);
		id2v.assign((size_t)n, -1);
		enc.clear();
		cursign = 1;
		// pinned legs take ids 0..F-1 up front
		std::vector<std::pair<std::pair<int, int>, int>> pin;
		for (int v = 0; v < E; v++)
			if (pinned(v))
				pin.push_back({{d.ext[(size_t)v].first, pos2[(size_t)v]}, v});
		std::sort(pin.begin(), pin.end());
		for (size_t i = 0; i < pin.size(); i++) {
			v2id[(size_t)pin[i].second] = (int)i;
			id2v[i] = pin[i].second;
			emit(pin[i].second);
		}
		if (cmp_prefix() <= 0)
			dfs(F);
	}
};

} // namespace

CanonicalForm canonicalize(const Diagram &din)
{
	din.validate();
	Diagram d = din;
	d.normalize();
	if (!d.directed)
		d.head.assign((size_t)d.H(), 0);

	Canon C(d);
	C.pos2.assign((size_t)d.E(), 0);
	for (int v = 0; v < d.E(); v++)
		C.pos2[(size_t)v] = d.ext[(size_t)v].second;

	// rotation choices: one counter per circle that carries legs
	std::vector<std::pair<int, int>> circ; // (comp, leg count)
	for (size_t c = 0; c < d.skel.comps.size(); c++) {
		if (d.skel.comps[c].kind != CompKind::Circle)
			continue;
		int k = 0;
		for (auto &x : d.ext)
			if (x.first == (int)c)
				k++;
		if (k > 1)
			circ.push_back({(int)c, k});
	}
	std::vector<int> rot(circ.size(), 0);
	for (;;) {
		for (int v = 0; v < d.E(); v++) {
			C.pos2[(size_t)v] = d.ext[(size_t)v].second;
			for (size_t i = 0; i < circ.size(); i++)
				if (d.ext[(size_t)v].first == circ[i].first)
					C.pos2[(size_t)v] =
					    (d.ext[(size_t)v].second + rot[i]) % circ[i].second;
		}
		C.run_rotation();
		size_t i = 0;
		while (i < rot.size() && ++rot[i] == circ[i].second)
			rot[i++] = 0;
		if (i == rot.size())
			break;
	}

	if (C.bestsigns.size() == 2)
		return {};
	int s = *C.bestsigns.begin() * d.sign;

	// rebuild the diagram along the winning labeling
	Diagram out;
	out.skel = d.skel;
	out.directed = d.directed;
	out.nint = d.nint;
	out.sign = +1;
	std::vector<int> legs; // old ext ids in canonical storage order
	for (int v = 0; v < d.E(); v++)
		legs.push_back(v);
	std::vector<int> idof((size_t)d.nverts());
	for (int i = 0; i < d.nverts(); i++)
		idof[(size_t)C.bestid2v[(size_t)i]] = i;
	std::sort(legs.begin(), legs.end(), [&](int a, int b) {
		int ca = d.ext[(size_t)a].first, cb = d.ext[(size_t)b].first;
		if (ca != cb)
			return ca < cb;
		bool sa = !C.pinned(a);
		int ka = sa ? idof[(size_t)a] : C.bestpos2[(size_t)a];
		int kb = sa ? idof[(size_t)b] : C.bestpos2[(size_t)b];
		return ka < kb;
	});
	std::vector<int> old2newleg((size_t)d.E());
	for (size_t i = 0; i < legs.size(); i++) {
		old2newleg[(size_t)legs[i]] = (int)i;
		int c = d.ext[(size_t)legs[i]].first;
		out.ext.push_back({c, 0});
	}
	{ // dense positions per component
		std::vector<int> cnt(d.skel.comps.size(), 0);
		for (auto &x : out.ext)
			x.second = cnt[(size_t)x.first]++;
	}
	std::vector<int> ints; // old internal vertex ids by canonical id
	for (int v = d.E(); v < d.nverts(); v++)
		ints.push_back(v);
	std::sort(ints.begin(), ints.end(),
	          [&](int a, int b) { return idof[(size_t)a] < idof[(size_t)b]; });
	std::vector<int> old2newint((size_t)d.nverts(), -1);
	for (size_t j = 0; j < ints.size(); j++)
		old2newint[(size_t)ints[j]] = (int)j;
	auto newhe = [&](int h) {
		int v = d.vertex_of(h);
		if (v < d.E())
			return old2newleg[(size_t)v];
		int j = old2newint[(size_t)v];
		int t = -1;
		for (int k = 0; k < 3; k++)
			if (C.bestarr[(size_t)v][(size_t)k] == d.slot_of(h))
				t = k;
		return d.E() + 3 * j + t;
	};
	out.mate.assign((size_t)d.H(), 0);
	out.head.assign((size_t)d.H(), 0);
	for (int h = 0; h < d.H(); h++) {
		out.mate[(size_t)newhe(h)] = newhe(d.mate[(size_t)h]);
		out.head[(size_t)newhe(h)] = d.head[(size_t)h];
	}
	if (!out.directed)
		out.head.clear();
	return {s, std::move(out)};
}

// ---------------------------------------------------------------------------

std::string Diagram::key() const
{
	std::ostringstream o;
	o << skel.str() << '|' << (directed ? 'd' : 'u') << '|';
	for (auto &x : ext)
		o << x.first << ',' << x.second << ';';
	o << '|' << nint << '|';
	for (int h = 0; h < H(); h++)
		o << mate[(size_t)h] << (directed ? (head[(size_t)h] ? '>' : '<') : ',');
	return o.str();
}

namespace {
struct Intern {
	std::mutex mu;
	std::unordered_map<std::string, int> ids;
	std::vector<Diagram> diags;
};
Intern &tab()
{
	static Intern t;
	return t;
}
} // namespace

int intern_diagram(const Diagram &canon)
{
	auto &t = tab();
	std::string k = canon.key();
	std::lock_guard<std::mutex> lk(t.mu);
	auto it = t.ids.find(k);
	if (it != t.ids.end())
		return it->second;
	int id = (int)t.diags.size();
	t.diags.push_back(canon);
	t.ids.emplace(std::move(k), id);
	return id;
}

const Diagram &interned(int id)
{
	auto &t = tab();
	std::lock_guard<std::mutex> lk(t.mu);
	return t.diags[(size_t)id];
}

std::pair<int, int> canon_id(const Diagram &d)
{
	CanonicalForm cf = canonicalize(d);
	if (cf.sign == 0)
		return {-1, 0};
	return {intern_diagram(cf.d), cf.sign};
}

// ---------------------------------------------------------------------------
// Text format.

std::string diagram_to_text(const Diagram &d)
{
	std::ostringstream o;
	o << "skeleton " << d.skel.str() << '\n';
	for (int v = 0; v < d.E(); v++) {
		o << "ext e" << v << ' ' << d.ext[(size_t)v].first + 1;
		if (d.skel.comps[(size_t)d.ext[(size_t)v].first].kind != CompKind::Star)
			o << ' ' << d.ext[(size_t)v].second + 1;
		o << '\n';
	}
	for (int j = 0; j < d.nint; j++) {
		int v = d.E() + j;
		o << "int v" << j;
		for (int s = 0; s < 3; s++)
			o << " h" << d.he(v, s);
		o << '\n';
	}
	auto hname = [&](int h) {
		return h < d.E() ? "e" + std::to_string(h) : "h" + std::to_string(h);
	};
	for (int h = 0; h < d.H(); h++) {
		int m = d.mate[(size_t)h];
		if (m < h)
			continue;
		if (d.directed && d.head[(size_t)h]) // arrow into h: emit from m
			o << "edge " << hname(m) << ' ' << hname(h) << " ->\n";
		else if (d.directed)
			o << "edge " << hname(h) << ' ' << hname(m) << " ->\n";
		else
			o << "edge " << hname(h) << ' ' << hname(m) << '\n';
	}
	o << "sign " << (d.sign > 0 ? "+1" : "-1") << '\n';
	return o.str();
}

std::optional<Diagram> parse_diagram(std::istream &in)
{
	std::string line;
	std::vector<std::string> lines;
	while (std::getline(in, line)) {
		// strip comments and CR
		auto hash = line.find('#');
		if (hash != std::string::npos)
			line.resize(hash);
		while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
			line.pop_back();
		if (line.empty()) {
			if (!lines.empty())
				break;
			continue;
		}
		lines.push_back(line);
	}
	if (lines.empty())
		return std::nullopt;

	Diagram d;
	struct Ext {
		std::string vid;
		int comp, pos;
	};
	std::vector<Ext> exts;
	std::vector<std::array<std::string, 3>> ints;
	std::vector<std::tuple<std::string, std::string, bool>> edges;
	bool any_dir = false;
	for (auto &l : lines) {
		std::istringstream s(l);
		std::string w;
		s >> w;
		if (w == "skeleton") {
			std::string rest;
			std::getline(s, rest);
			d.skel = Skeleton::of(rest);
		} else if (w == "ext") {
			Ext e;
			s >> e.vid >> e.comp;
			e.pos = 0;
			s >> e.pos;
			exts.push_back(e);
		} else if (w == "int") {
			std::string vid;
			std::array<std::string, 3> h;
			s >> vid >> h[0] >> h[1] >> h[2];
			ints.push_back(h);
		} else if (w == "edge") {
			std::string a, b, arrow;
			s >> a >> b >> arrow;
			edges.push_back({a, b, arrow == "->"});
			if (arrow == "->")
				any_dir = true;
		} else if (w == "sign") {
			std::string v;
			s >> v;
			d.sign = (v == "-1") ? -1 : +1;
		} else {
			throw std::runtime_error("diagram parse: unknown line: " + l);
		}
	}
	d.directed = any_dir;
	d.nint = (int)ints.size();
	std::map<std::string, int> h2id;
	for (size_t i = 0; i < exts.size(); i++) {
		h2id[exts[i].vid] = (int)i;
		int comp = exts[i].comp - 1;
		if (comp < 0 || comp >= (int)d.skel.comps.size())
			throw std::runtime_error("diagram parse: bad component index");
		int pos = d.skel.comps[(size_t)comp].kind == CompKind::Star
		              ? (int)i
		              : exts[i].pos - 1;
		d.ext.push_back({comp, pos});
	}
	for (size_t j = 0; j < ints.size(); j++)
		for (int sl = 0; sl < 3; sl++)
			if (!h2id.emplace(ints[j][(size_t)sl],
			                  (int)exts.size() + 3 * (int)j + sl)
			         .second)
				throw std::runtime_error("diagram parse: duplicate half-edge name");
	d.mate.assign((size_t)d.H(), -1);
	d.head.assign((size_t)d.H(), 0);
	for (auto &[a, b, dir] : edges) {
		auto ia = h2id.find(a), ib = h2id.find(b);
		if (ia == h2id.end() || ib == h2id.end())
			throw std::runtime_error("diagram parse: unknown half-edge in edge line");
		d.mate[(size_t)ia->second] = ib->second;
		d.mate[(size_t)ib->second] = ia->second;
		if (dir)
			d.head[(size_t)ib->second] = 1;
	}
	if (!d.directed)
		d.head.clear();
	d.normalize();
	d.validate();
	return d;
}

Diagram parse_diagram_str(const std::string &record)
{
	std::istringstream in(record);
	auto d = parse_diagram(in);
	if (!d)
		throw std::runtime_error("diagram parse: empty record");
	return *d;
}

} // namespace jd
