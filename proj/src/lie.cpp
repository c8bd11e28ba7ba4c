#include "jd/lie.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jd {

namespace {

Rat rat_of(const std::string &tok)
{
	auto slash = tok.find('/');
	if (slash == std::string::npos)
		return Rat(Int(tok));
	return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
}

std::vector<std::vector<std::vector<Rat>>> cube(int n)
{
	return std::vector<std::vector<std::vector<Rat>>>(
	    (size_t)n, std::vector<std::vector<Rat>>((size_t)n, std::vector<Rat>((size_t)n)));
}

Mat zeros(int r, int c) { return Mat((size_t)r, std::vector<Rat>((size_t)c)); }

Mat mat_id(int n)
{
	Mat m = zeros(n, n);
	for (int i = 0; i < n; i++)
		m[(size_t)i][(size_t)i] = 1;
	return m;
}

Mat mat_mul(const Mat &a, const Mat &b)
{
	size_t r = a.size(), k = b.size(), c = b[0].size();
	Mat m = zeros((int)r, (int)c);
	for (size_t i = 0; i < r; i++)
		for (size_t j = 0; j < k; j++) {
			if (a[i][j] == 0)
				continue;
			for (size_t l = 0; l < c; l++)
				m[i][l] += a[i][j] * b[j][l];
		}
	return m;
}

Rat mat_trace(const Mat &a)
{
	Rat t = 0;
	for (size_t i = 0; i < a.size(); i++)
		t += a[i][i];
	return t;
}

Mat mat_inverse(const Mat &a, const char *what)
{
	int n = (int)a.size();
	Mat m = a, inv = mat_id(n);
	for (int col = 0; col < n; col++) {
		int piv = -1;
		for (int r = col; r < n; r++)
			if (m[(size_t)r][(size_t)col] != 0) {
				piv = r;
				break;
			}
		if (piv < 0)
			throw std::runtime_error(std::string(what) + " is singular");
		std::swap(m[(size_t)piv], m[(size_t)col]);
		std::swap(inv[(size_t)piv], inv[(size_t)col]);
		Rat d = m[(size_t)col][(size_t)col];
		for (int c = 0; c < n; c++) {
			m[(size_t)col][(size_t)c] /= d;
			inv[(size_t)col][(size_t)c] /= d;
		}
		for (int r = 0; r < n; r++) {
			if (r == col || m[(size_t)r][(size_t)col] == 0)
				continue;
			Rat f = m[(size_t)r][(size_t)col];
			for (int c = 0; c < n; c++) {
				m[(size_t)r][(size_t)c] -= f * m[(size_t)col][(size_t)c];
				inv[(size_t)r][(size_t)c] -= f * inv[(size_t)col][(size_t)c];
			}
		}
	}
	return inv;
}

// fill met_inv and run the axiom checks; every constructor path funnels here
void prepare(LieAlg &L)
{
	if (L.has_metric)
		L.met_inv = mat_inverse(L.met, "metric");
	L.validate();
}

} // namespace

Rat LieAlg::f_low(int a, int b, int c) const
{
	Rat s = 0;
	for (int k = 0; k < n; k++)
		if (br[(size_t)a][(size_t)b][(size_t)k] != 0)
			s += br[(size_t)a][(size_t)b][(size_t)k] * met[(size_t)k][(size_t)c];
	return s;
}

const LieRep &LieAlg::rep(const std::string &rname) const
{
	for (auto &r : reps)
		if (r.name == rname)
			return r;
	throw std::runtime_error(name + ": no representation named " + rname);
}

void LieAlg::validate() const
{
	auto label = [&](int i) {
		return (size_t)i < basis.size() ? basis[(size_t)i] : "x" + std::to_string(i + 1);
	};
	auto bad = [&](const std::string &what, std::initializer_list<int> idx) {
		std::string msg = name + ": " + what + " fails at (";
		bool first = true;
		for (int i : idx) {
			if (!first)
				msg += ", ";
			msg += label(i);
			first = false;
		}
		throw std::runtime_error(msg + ")");
	};
	size_t N = (size_t)n;
	if (br.size() != N)
		throw std::runtime_error(name + ": bracket table has wrong dimension");

	// antisymmetry and Jacobi for an arbitrary structure-constant cube
	auto check_lie = [&](const std::vector<std::vector<std::vector<Rat>>> &c,
	                     const char *tag) {
		for (int i = 0; i < n; i++)
			for (int j = 0; j <= i; j++)
				for (int k = 0; k < n; k++)
					if (c[(size_t)i][(size_t)j][(size_t)k] !=
					    -c[(size_t)j][(size_t)i][(size_t)k])
						bad(std::string(tag) + " antisymmetry", {i, j, k});
		for (int i = 0; i < n; i++)
			for (int j = i + 1; j < n; j++)
				for (int k = j + 1; k < n; k++)
					for (int l = 0; l < n; l++) {
						Rat s = 0;
						for (int m = 0; m < n; m++)
							s += c[(size_t)i][(size_t)j][(size_t)m] * c[(size_t)m][(size_t)k][(size_t)l] +
							     c[(size_t)j][(size_t)k][(size_t)m] * c[(size_t)m][(size_t)i][(size_t)l] +
							     c[(size_t)k][(size_t)i][(size_t)m] * c[(size_t)m][(size_t)j][(size_t)l];
						if (s != 0)
							bad(std::string(tag) + " Jacobi identity", {i, j, k});
					}
	};
	check_lie(br, "bracket");

	if (has_metric) {
		for (int i = 0; i < n; i++)
			for (int j = 0; j < i; j++)
				if (met[(size_t)i][(size_t)j] != met[(size_t)j][(size_t)i])
					bad("metric symmetry", {i, j});
		for (int i = 0; i < n; i++)
			for (int j = 0; j < n; j++)
				for (int k = 0; k < n; k++) {
					Rat lhs = 0, rhs = 0;
					for (int m = 0; m < n; m++) {
						lhs += br[(size_t)i][(size_t)j][(size_t)m] * met[(size_t)m][(size_t)k];
						rhs -= br[(size_t)i][(size_t)k][(size_t)m] * met[(size_t)j][(size_t)m];
					}
					if (lhs != rhs)
						bad("metric invariance", {i, j, k});
				}
	}

	if (has_cobr) {
		for (int i = 0; i < n; i++)
			for (int j = 0; j < n; j++)
				for (int k = 0; k <= j; k++)
					if (cobr[(size_t)i][(size_t)j][(size_t)k] !=
					    -cobr[(size_t)i][(size_t)k][(size_t)j])
						bad("cobracket antisymmetry", {i, j, k});
		// co-Jacobi == Jacobi of the dual bracket on a^*
		auto dual = cube(n);
		for (int i = 0; i < n; i++)
			for (int j = 0; j < n; j++)
				for (int m = 0; m < n; m++)
					dual[(size_t)i][(size_t)j][(size_t)m] = cobr[(size_t)m][(size_t)i][(size_t)j];
		check_lie(dual, "cobracket (dual)");
		// cocycle: delta([x_i,x_j]) = ad_{x_i} delta(x_j) - ad_{x_j} delta(x_i)
		for (int i = 0; i < n; i++)
			for (int j = 0; j < i; j++)
				for (int a = 0; a < n; a++)
					for (int b = 0; b < n; b++) {
						Rat lhs = 0, rhs = 0;
						for (int k = 0; k < n; k++)
							lhs += br[(size_t)i][(size_t)j][(size_t)k] * cobr[(size_t)k][(size_t)a][(size_t)b];
						for (int p = 0; p < n; p++)
							rhs += cobr[(size_t)j][(size_t)p][(size_t)b] * br[(size_t)i][(size_t)p][(size_t)a] +
							       cobr[(size_t)j][(size_t)a][(size_t)p] * br[(size_t)i][(size_t)p][(size_t)b] -
							       cobr[(size_t)i][(size_t)p][(size_t)b] * br[(size_t)j][(size_t)p][(size_t)a] -
							       cobr[(size_t)i][(size_t)a][(size_t)p] * br[(size_t)j][(size_t)p][(size_t)b];
						if (lhs != rhs)
							bad("bracket/cobracket cocycle identity", {i, j});
					}
	}

	for (auto &r : reps) {
		if ((int)r.mat.size() != n)
			throw std::runtime_error(name + ": rep " + r.name + " has wrong arity");
		for (int i = 0; i < n; i++)
			for (int j = 0; j < i; j++) {
				Mat lhs = mat_mul(r.mat[(size_t)i], r.mat[(size_t)j]);
				Mat sub = mat_mul(r.mat[(size_t)j], r.mat[(size_t)i]);
				for (int a = 0; a < r.dim; a++)
					for (int b = 0; b < r.dim; b++) {
						Rat rhs = 0;
						for (int k = 0; k < n; k++)
							rhs += br[(size_t)i][(size_t)j][(size_t)k] * r.mat[(size_t)k][(size_t)a][(size_t)b];
						if (lhs[(size_t)a][(size_t)b] - sub[(size_t)a][(size_t)b] != rhs)
							bad("rep " + r.name + " bracket relation", {i, j});
					}
			}
	}
}

LieAlg parse_lie(const std::string &text, const std::string &name)
{
	LieAlg L;
	L.name = name;
	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	auto fail = [&](const std::string &why) {
		throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + why);
	};
	auto idx = [&](int i) {
		if (i < 1 || i > L.n)
			fail("basis index " + std::to_string(i) + " out of range");
		return (size_t)(i - 1);
	};
	while (std::getline(in, line)) {
		lineno++;
		if (auto h = line.find('#'); h != std::string::npos)
			line.resize(h);
		std::istringstream ls(line);
		std::string kw;
		if (!(ls >> kw))
			continue;
		if (kw == "dim") {
			if (L.n)
				fail("dim given twice");
			if (!(ls >> L.n) || L.n <= 0)
				fail("bad dimension");
			L.br = cube(L.n);
			L.met = zeros(L.n, L.n);
			L.cobr = cube(L.n);
			for (int i = 1; i <= L.n; i++)
				L.basis.push_back("x" + std::to_string(i));
			continue;
		}
		if (!L.n)
			fail("dim must come first");
		if (kw == "bracket") {
			int i, j, k;
			std::string arrow, c;
			if (!(ls >> i >> j >> arrow >> k >> c) || arrow != "->")
				fail("expected: bracket i j -> k coeff");
			L.br[idx(i)][idx(j)][idx(k)] += rat_of(c);
		} else if (kw == "metric") {
			int i, j;
			std::string c;
			if (!(ls >> i >> j >> c))
				fail("expected: metric i j coeff");
			L.met[idx(i)][idx(j)] += rat_of(c);
			L.has_metric = true;
		} else if (kw == "cobracket") {
			int i, j, k;
			std::string arrow, c;
			if (!(ls >> i >> arrow >> j >> k >> c) || arrow != "->")
				fail("expected: cobracket i -> j k coeff");
			L.cobr[idx(i)][idx(j)][idx(k)] += rat_of(c);
			L.has_cobr = true;
		} else if (kw == "rep") {
			std::string rname, c;
			int i, row, col;
			if (!(ls >> rname >> i >> row >> col >> c))
				fail("expected: rep name i row col coeff");
			LieRep *r = nullptr;
			for (auto &x : L.reps)
				if (x.name == rname)
					r = &x;
			if (!r) {
				L.reps.push_back({rname, 0, std::vector<Mat>((size_t)L.n)});
				r = &L.reps.back();
			}
			if (row < 1 || col < 1)
				fail("rep entries are 1-based");
			int need = std::max(row, col);
			if (need > r->dim) {
				r->dim = need;
				for (auto &m : r->mat) {
					for (auto &rw : m)
						rw.resize((size_t)need);
					m.resize((size_t)need, std::vector<Rat>((size_t)need));
				}
			}
			r->mat[idx(i)][(size_t)(row - 1)][(size_t)(col - 1)] += rat_of(c);
		} else {
			fail("unknown keyword " + kw);
		}
	}
	if (!L.n)
		throw std::runtime_error(name + ": missing dim line");
	return L;
}

LieAlg load_lie(const std::string &path)
{
	std::ifstream f(path);
	if (!f)
		throw std::runtime_error("cannot open " + path);
	std::stringstream ss;
	ss << f.rdbuf();
	std::string stem = path;
	if (auto s = stem.find_last_of('/'); s != std::string::npos)
		stem = stem.substr(s + 1);
	if (auto d = stem.find_last_of('.'); d != std::string::npos)
		stem.resize(d);
	LieAlg L = parse_lie(ss.str(), stem);
	prepare(L);
	return L;
}

LieAlg sl2()
{
	LieAlg L;
	L.name = "sl2";
	L.n = 3;
	L.basis = {"e", "f", "h"};
	L.br = cube(3);
	auto set = [&](int i, int j, int k, Rat c) {
		L.br[(size_t)i][(size_t)j][(size_t)k] = c;
		L.br[(size_t)j][(size_t)i][(size_t)k] = -c;
	};
	set(0, 1, 2, 1);  // [e,f] = h
	set(2, 0, 0, 2);  // [h,e] = 2e
	set(2, 1, 1, -2); // [h,f] = -2f
	L.has_metric = true;
	L.met = zeros(3, 3);
	L.met[0][1] = L.met[1][0] = 1; // (e,f) = Tr(ef) = 1
	L.met[2][2] = 2;               // (h,h) = 2
	L.has_cobr = true;
	L.cobr = cube(3);
	L.cobr[0][0][2] = Rat(1, 2); // delta(e) = e^h/2
	L.cobr[0][2][0] = Rat(-1, 2);
	L.cobr[1][1][2] = Rat(1, 2); // delta(f) = f^h/2
	L.cobr[1][2][1] = Rat(-1, 2);
	LieRep fund{"fund", 2, {zeros(2, 2), zeros(2, 2), zeros(2, 2)}};
	fund.mat[0][0][1] = 1;  // e
	fund.mat[1][1][0] = 1;  // f
	fund.mat[2][0][0] = 1;  // h
	fund.mat[2][1][1] = -1;
	L.reps.push_back(std::move(fund));
	prepare(L);
	return L;
}

LieAlg borel_sl2()
{
	LieAlg L;
	L.name = "borel_sl2";
	L.n = 2;
	L.basis = {"e", "h"};
	L.br = cube(2);
	L.br[0][1][0] = -2; // [e,h] = -2e
	L.br[1][0][0] = 2;
	L.has_cobr = true;
	L.cobr = cube(2);
	L.cobr[0][0][1] = Rat(1, 2); // delta(e) = e^h/2
	L.cobr[0][1][0] = Rat(-1, 2);
	prepare(L);
	return L;
}

LieAlg abelian1()
{
	LieAlg L;
	L.name = "abelian1";
	L.n = 1;
	L.basis = {"x"};
	L.br = cube(1);
	L.has_metric = true;
	L.met = {{Rat(1)}};
	L.has_cobr = true;
	L.cobr = cube(1);
	prepare(L);
	return L;
}

ManinTriple build_double(const LieAlg &a)
{
	if (!a.has_cobr)
		throw std::runtime_error(a.name + ": double needs a cobracket");
	a.validate(); // rejects broken bialgebra input with the violating triple
	int n = a.n, N = 2 * n;
	LieAlg D;
	D.name = "double(" + a.name + ")";
	D.n = N;
	for (int i = 0; i < n; i++)
		D.basis.push_back(a.basis[(size_t)i]);
	for (int i = 0; i < n; i++)
		D.basis.push_back(a.basis[(size_t)i] + "*");
	D.br = cube(N);
	auto c = [&](int i, int j, int k) { return a.br[(size_t)i][(size_t)j][(size_t)k]; };
	auto d = [&](int i, int j, int k) { return a.cobr[(size_t)i][(size_t)j][(size_t)k]; };
	for (int i = 0; i < n; i++)
		for (int j = 0; j < n; j++) {
			for (int k = 0; k < n; k++) {
				// [x_i, x_j]: the half is a subalgebra
				D.br[(size_t)i][(size_t)j][(size_t)k] = c(i, j, k);
				// [xi^i, xi^j] = dual bracket from the cobracket
				D.br[(size_t)(n + i)][(size_t)(n + j)][(size_t)(n + k)] = d(k, i, j);
				// [x_i, xi^j] = coadjoint action minus the cobracket leak
				D.br[(size_t)i][(size_t)(n + j)][(size_t)(n + k)] = -c(i, k, j);
				D.br[(size_t)i][(size_t)(n + j)][(size_t)k] = -d(i, k, j);
			}
			for (int k = 0; k < N; k++)
				D.br[(size_t)(n + j)][(size_t)i][(size_t)k] =
				    -D.br[(size_t)i][(size_t)(n + j)][(size_t)k];
		}
	D.has_metric = true;
	D.met = zeros(N, N);
	for (int i = 0; i < n; i++)
		D.met[(size_t)i][(size_t)(n + i)] = D.met[(size_t)(n + i)][(size_t)i] = 1;
	prepare(D); // Jacobi of the double == the cocycle identity, checked again
	for (int i = 0; i < n; i++)
		for (int j = 0; j < n; j++) {
			for (int k = 0; k < n; k++)
				if (D.br[(size_t)i][(size_t)j][(size_t)(n + k)] != 0 ||
				    D.br[(size_t)(n + i)][(size_t)(n + j)][(size_t)k] != 0)
					throw std::runtime_error(D.name + ": halves are not subalgebras");
			if (D.met[(size_t)i][(size_t)j] != 0 ||
			    D.met[(size_t)(n + i)][(size_t)(n + j)] != 0)
				throw std::runtime_error(D.name + ": halves are not isotropic");
		}
	return ManinTriple{std::move(D), n};
}

Mat borel_double_to_sl2()
{
	Mat p = zeros(3, 4); // rows e,f,h of sl2; columns e,h,e*,h* of the double
	p[0][0] = 1;         // e -> e
	p[2][1] = 1;         // h -> h
	p[1][2] = 1;         // e* -> f
	p[2][3] = Rat(1, 4); // h* -> h/4
	return p;
}

void EnvTensor::add(int hdeg, const std::vector<std::vector<int>> &key, const Rat &c)
{
	if (c == 0)
		return;
	auto k = std::make_pair(hdeg, key);
	auto it = terms.find(k);
	if (it == terms.end()) {
		terms.emplace(std::move(k), c);
		return;
	}
	it->second += c;
	if (it->second == 0)
		terms.erase(it);
}

EnvTensor &EnvTensor::operator+=(const EnvTensor &o)
{
	for (auto &[k, c] : o.terms)
		add(k.first, k.second, c);
	return *this;
}

EnvTensor &EnvTensor::operator-=(const EnvTensor &o)
{
	for (auto &[k, c] : o.terms)
		add(k.first, k.second, -c);
	return *this;
}

EnvTensor &EnvTensor::operator*=(const Rat &r)
{
	if (r == 0) {
		terms.clear();
		return *this;
	}
	for (auto &[k, c] : terms)
		c *= r;
	return *this;
}

std::string EnvTensor::str(const LieAlg &L) const
{
	std::ostringstream os;
	bool first = true;
	for (auto &[k, c] : terms) {
		os << (first ? "" : " + ") << c << " h^" << k.first << " ";
		for (size_t s = 0; s < k.second.size(); s++) {
			if (s)
				os << " (x) ";
			if (k.second[s].empty())
				os << "1";
			for (size_t p = 0; p < k.second[s].size(); p++)
				os << (p ? "." : "") << L.basis[(size_t)k.second[s][p]];
		}
		first = false;
	}
	if (first)
		os << "0";
	return os.str();
}

void pbw_accumulate(const LieAlg &L, int hdeg, std::vector<std::vector<int>> key,
                    Rat c, EnvTensor &out)
{
	for (size_t s = 0; s < key.size(); s++) {
		auto &w = key[s];
		for (size_t p = 0; p + 1 < w.size(); p++) {
			if (w[p] <= w[p + 1])
				continue;
			int a = w[p], b = w[p + 1];
			auto swapped = key;
			std::swap(swapped[s][p], swapped[s][p + 1]);
			pbw_accumulate(L, hdeg, std::move(swapped), c, out);
			for (int k = 0; k < L.n; k++) {
				const Rat &coef = L.br[(size_t)a][(size_t)b][(size_t)k];
				if (coef == 0)
					continue;
				auto closed = key;
				closed[s].erase(closed[s].begin() + (long)p + 1);
				closed[s][p] = k;
				pbw_accumulate(L, hdeg, std::move(closed), c * coef, out);
			}
			return;
		}
	}
	out.add(hdeg, key, c);
}

namespace {

// shared contraction core: assign a basis index to every half-edge, one edge
// at a time, multiplying in lowered-bracket factors as vertices complete
struct Contraction {
	const Diagram &dg;
	const LieAlg &L;
	bool directed;
	int half = 0;
	std::vector<std::pair<int, int>> edges;
	std::vector<std::vector<int>> complete_at; // internal vertices finished per edge
	std::vector<std::pair<int, int>> pairs;    // nonzero inverse-metric entries
	std::vector<int> idx;
	EnvTensor *out = nullptr;

	Contraction(const Diagram &d, const LieAlg &l, bool dir, int h)
	    : dg(d), L(l), directed(dir), half(h)
	{
		for (int a = 0; a < d.H(); a++)
			if (a < d.mate[(size_t)a])
				edges.push_back({a, d.mate[(size_t)a]});
		complete_at.resize(edges.size());
		std::vector<int> done((size_t)d.nverts(), 0);
		for (size_t e = 0; e < edges.size(); e++)
			for (int h2 : {edges[e].first, edges[e].second}) {
				int v = d.vertex_of(h2);
				if (v >= d.E() && ++done[(size_t)v] == 3)
					complete_at[e].push_back(v);
			}
		if (!directed)
			for (int p = 0; p < L.n; p++)
				for (int q = 0; q < L.n; q++)
					if (L.met_inv[(size_t)p][(size_t)q] != 0)
						pairs.push_back({p, q});
		idx.assign((size_t)d.H(), -1);
	}

	void emit(const Rat &w)
	{
		// gather strand words; stars are symmetrized over leg orderings
		std::vector<std::pair<std::vector<std::vector<int>>, Rat>> partial = {{{}, w}};
		int leg = 0;
		for (size_t c = 0; c < dg.skel.comps.size(); c++) {
			std::vector<int> word;
			while (leg < dg.E() && dg.ext[(size_t)leg].first == (int)c)
				word.push_back(idx[(size_t)leg++]);
			if (dg.skel.comps[c].kind == CompKind::Star && word.size() > 1) {
				std::vector<int> pos(word.size());
				std::iota(pos.begin(), pos.end(), 0);
				Rat inv = 1;
				for (size_t k = 2; k <= word.size(); k++)
					inv /= (long)k;
				std::vector<std::pair<std::vector<std::vector<int>>, Rat>> next;
				do {
					std::vector<int> ord;
					for (int p : pos)
						ord.push_back(word[(size_t)p]);
					for (auto &[key, coef] : partial) {
						auto k2 = key;
						k2.push_back(ord);
						next.push_back({std::move(k2), coef * inv});
					}
				} while (std::next_permutation(pos.begin(), pos.end()));
				partial = std::move(next);
			} else {
				for (auto &[key, coef] : partial)
					key.push_back(word);
			}
		}
		for (auto &[key, coef] : partial)
			pbw_accumulate(L, dg.degree(), std::move(key), coef, *out);
	}

	void go(size_t e, const Rat &w)
	{
		if (e == edges.size()) {
			emit(w);
			return;
		}
		auto [a, b] = edges[e];
		auto place = [&](int ia, int ib, const Rat &ew) {
			idx[(size_t)a] = ia;
			idx[(size_t)b] = ib;
			Rat f = w * ew;
			for (int v : complete_at[e]) {
				f *= L.f_low(idx[(size_t)dg.he(v, 0)], idx[(size_t)dg.he(v, 1)],
				             idx[(size_t)dg.he(v, 2)]);
				if (f == 0)
					return;
			}
			go(e + 1, f);
		};
		if (directed) {
			// arrow delivers x_i at its head end and xi^i at its tail end
			bool a_is_head = dg.head[(size_t)a] != 0;
			for (int i = 0; i < half; i++)
				place(a_is_head ? i : half + i, a_is_head ? half + i : i, 1);
		} else {
			for (auto &[p, q] : pairs)
				place(p, q, L.met_inv[(size_t)p][(size_t)q]);
		}
	}

	EnvTensor run()
	{
		EnvTensor t;
		t.strands = (int)dg.skel.comps.size();
		out = &t;
		go(0, 1);
		return t;
	}
};

void require_no_circles(const Skeleton &s)
{
	for (auto &c : s.comps)
		if (c.kind == CompKind::Circle)
			throw std::runtime_error(
			    "circle components: cut them and close with trace_on_rep");
}

} // namespace

EnvTensor tg_eval(const Diagram &d, const LieAlg &L)
{
	if (!L.has_metric)
		throw std::runtime_error(L.name + ": undirected evaluation needs a metric");
	if (d.directed)
		throw std::runtime_error("tg_eval expects an undirected diagram");
	require_no_circles(d.skel);
	return Contraction(d, L, false, 0).run();
}

EnvTensor tg_eval(const FormalSum &v, const LieAlg &L)
{
	EnvTensor t;
	t.strands = (int)v.skel.comps.size();
	for (auto &[id, c] : v.terms) {
		EnvTensor one = tg_eval(interned(id), L);
		one *= c;
		t += one;
	}
	return t;
}

EnvTensor tar_eval(const Diagram &d, const ManinTriple &mt)
{
	if (!d.directed)
		throw std::runtime_error("tar_eval expects a directed diagram");
	require_no_circles(d.skel);
	return Contraction(d, mt.alg, true, mt.half).run();
}

EnvTensor tar_eval(const FormalSum &v, const ManinTriple &mt)
{
	EnvTensor t;
	t.strands = (int)v.skel.comps.size();
	for (auto &[id, c] : v.terms) {
		EnvTensor one = tar_eval(interned(id), mt);
		one *= c;
		t += one;
	}
	return t;
}

EnvTensor env_mul(const EnvTensor &a, const EnvTensor &b, const LieAlg &L, int hcap)
{
	if (a.strands != b.strands)
		throw std::runtime_error("env_mul: strand counts differ");
	EnvTensor t;
	t.strands = a.strands;
	for (auto &[ka, ca] : a.terms)
		for (auto &[kb, cb] : b.terms) {
			int hd = ka.first + kb.first;
			if (hd > hcap)
				continue;
			auto key = ka.second;
			for (size_t s = 0; s < key.size(); s++)
				key[s].insert(key[s].end(), kb.second[s].begin(), kb.second[s].end());
			pbw_accumulate(L, hd, std::move(key), ca * cb, t);
		}
	return t;
}

EnvTensor env_coproduct(const EnvTensor &t, int s)
{
	EnvTensor r;
	r.strands = t.strands + 1;
	for (auto &[k, c] : t.terms) {
		const auto &w = k.second[(size_t)s];
		for (unsigned mask = 0; mask < (1u << w.size()); mask++) {
			std::vector<int> left, right;
			for (size_t p = 0; p < w.size(); p++)
				((mask >> p) & 1 ? left : right).push_back(w[p]);
			std::vector<std::vector<int>> key;
			for (int q = 0; q < t.strands; q++) {
				if (q == s) {
					key.push_back(left);
					key.push_back(right);
				} else {
					key.push_back(k.second[(size_t)q]);
				}
			}
			r.add(k.first, key, c);
		}
	}
	return r;
}

EnvTensor env_exp(const EnvTensor &t, const LieAlg &L, int hcap)
{
	for (auto &[k, c] : t.terms)
		if (k.first < 1)
			throw std::runtime_error("env_exp needs a positive hbar degree");
	EnvTensor unit, pow;
	unit.strands = t.strands;
	unit.add(0, std::vector<std::vector<int>>((size_t)t.strands), 1);
	pow = unit;
	EnvTensor sum = unit;
	for (int k = 1; k <= hcap && !pow.is_zero(); k++) {
		pow = env_mul(pow, t, L, hcap);
		pow *= Rat(1, k);
		sum += pow;
	}
	return sum;
}

EnvTensor env_map(const EnvTensor &t, const Mat &m, const LieAlg &target)
{
	EnvTensor r;
	r.strands = t.strands;
	int tn = (int)m.size();
	for (auto &[k, c] : t.terms) {
		std::vector<std::pair<std::vector<std::vector<int>>, Rat>> partial = {{{}, c}};
		for (auto &w : k.second) {
			std::vector<std::pair<std::vector<int>, Rat>> words = {{{}, Rat(1)}};
			for (int letter : w) {
				std::vector<std::pair<std::vector<int>, Rat>> next;
				for (int b = 0; b < tn; b++) {
					if (m[(size_t)b][(size_t)letter] == 0)
						continue;
					for (auto &[pw, pc] : words) {
						auto w2 = pw;
						w2.push_back(b);
						next.push_back({std::move(w2), pc * m[(size_t)b][(size_t)letter]});
					}
				}
				words = std::move(next);
			}
			std::vector<std::pair<std::vector<std::vector<int>>, Rat>> grown;
			for (auto &[key, coef] : partial)
				for (auto &[pw, pc] : words) {
					auto k2 = key;
					k2.push_back(pw);
					grown.push_back({std::move(k2), coef * pc});
				}
			partial = std::move(grown);
		}
		for (auto &[key, coef] : partial)
			pbw_accumulate(target, k.first, std::move(key), coef, r);
	}
	return r;
}

std::map<int, Rat> trace_on_rep(const EnvTensor &t,
                                const std::vector<const LieRep *> &reps)
{
	if ((int)reps.size() != t.strands)
		throw std::runtime_error("trace_on_rep: need one representation per strand");
	std::map<int, Rat> out;
	for (auto &[k, c] : t.terms) {
		Rat v = c;
		for (int s = 0; s < t.strands && v != 0; s++) {
			const LieRep &R = *reps[(size_t)s];
			Mat prod = mat_id(R.dim);
			for (int letter : k.second[(size_t)s])
				prod = mat_mul(prod, R.mat[(size_t)letter]);
			v *= mat_trace(prod);
		}
		if (v != 0) {
			out[k.first] += v;
			if (out[k.first] == 0)
				out.erase(k.first);
		}
	}
	return out;
}

} // namespace jd
