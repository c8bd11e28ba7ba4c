// Parenthesized framed tangles: generator words, quasi-Hopf data on diagram
// spaces, the decorated-skeleton evaluation, twisting, and the relation
// checklist.

#include "jd/tangle.hpp"
#include "jd/hor.hpp"
#include "jd/ops.hpp"
#include "jd/scratch.hpp"
#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace jd {

// ---- parenthesized words ----

ParenString ParenString::parse(const std::string &text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace((unsigned char)c) && c != '?')
			s += c;
	if (s.empty() || s == "e")
		return ParenString("");
	size_t i = 0;
	std::function<std::string()> rec = [&]() -> std::string {
		if (i >= s.size())
			throw std::runtime_error("parenthesized word: truncated");
		char c = s[i];
		if (c == '(') {
			i++;
			std::string l = rec();
			std::string r = rec();
			if (i >= s.size() || s[i] != ')')
				throw std::runtime_error("parenthesized word: missing ')'");
			i++;
			if (l.empty() || r.empty())
				return l + r;
			return "(" + l + r + ")";
		}
		if (c == 'u' || c == 'd' || c == '*') {
			i++;
			return std::string(1, c);
		}
		throw std::runtime_error(std::string("parenthesized word: bad char '") +
		                         c + "'");
	};
	std::string r = rec();
	if (i != s.size())
		throw std::runtime_error("parenthesized word: trailing text");
	return ParenString(r);
}

int ParenString::arrows() const
{
	int n = 0;
	for (char c : s)
		n += (c == 'u' || c == 'd');
	return n;
}

std::string ParenString::flat() const
{
	std::string r;
	for (char c : s)
		if (c == 'u' || c == 'd')
			r += c;
	return r;
}

bool ParenString::has_star() const
{
	return s.find('*') != std::string::npos;
}

int ParenString::star_arrow_index() const
{
	int n = 0;
	for (char c : s) {
		if (c == '*')
			return n;
		n += (c == 'u' || c == 'd');
	}
	throw std::runtime_error("parenthesized word: no star slot");
}

ParenString ParenString::subst(const ParenString &a) const
{
	if (s.empty())
		return *this;
	size_t i = 0;
	std::function<std::string()> rec = [&]() -> std::string {
		char c = s[i];
		if (c == '(') {
			i++;
			std::string l = rec();
			std::string r = rec();
			i++; // ')'
			if (l.empty() || r.empty())
				return l + r;
			return "(" + l + r + ")";
		}
		i++;
		if (c == '*')
			return a.s;
		return std::string(1, c);
	};
	return ParenString(rec());
}

ParenString ps_pair(const ParenString &a, const ParenString &b)
{
	if (a.empty())
		return b;
	if (b.empty())
		return a;
	return ParenString("(" + a.s + b.s + ")");
}

// ---- generator applications ----

const char *gen_name(GenKind k)
{
	switch (k) {
	case GenKind::Ra: return "ra";
	case GenKind::La: return "la";
	case GenKind::Ov: return "ov";
	case GenKind::Un: return "un";
	case GenKind::Cp: return "cp";
	case GenKind::Cn: return "cn";
	case GenKind::Ap: return "ap";
	case GenKind::An: return "an";
	}
	return "?";
}

namespace {

ParenString block_domain(const GenApp &g)
{
	switch (g.kind) {
	case GenKind::Ra: return ps_pair(ps_pair(g.A, g.B), g.C);
	case GenKind::La: return ps_pair(g.A, ps_pair(g.B, g.C));
	case GenKind::Ov:
	case GenKind::Un: return ps_pair(g.A, g.B);
	case GenKind::Cp:
	case GenKind::Cn: return ParenString();
	case GenKind::Ap: return ParenString::parse("(du)");
	case GenKind::An: return ParenString::parse("(ud)");
	}
	return ParenString();
}

ParenString block_target(const GenApp &g)
{
	switch (g.kind) {
	case GenKind::Ra: return ps_pair(g.A, ps_pair(g.B, g.C));
	case GenKind::La: return ps_pair(ps_pair(g.A, g.B), g.C);
	case GenKind::Ov:
	case GenKind::Un: return ps_pair(g.B, g.A);
	case GenKind::Cp: return ParenString::parse("(du)");
	case GenKind::Cn: return ParenString::parse("(ud)");
	case GenKind::Ap:
	case GenKind::An: return ParenString();
	}
	return ParenString();
}

} // namespace

ParenString GenApp::domain() const { return W.subst(block_domain(*this)); }
ParenString GenApp::target() const { return W.subst(block_target(*this)); }

void GenApp::validate() const
{
	int stars = 0;
	for (char c : W.s)
		stars += (c == '*');
	if (stars != 1)
		throw std::runtime_error("generator context needs exactly one star");
	if (A.has_star() || B.has_star() || C.has_star())
		throw std::runtime_error("generator arguments may not carry stars");
	bool abc = kind == GenKind::Ra || kind == GenKind::La;
	bool ab = kind == GenKind::Ov || kind == GenKind::Un;
	if (!abc && !C.empty())
		throw std::runtime_error("argument C only applies to ra/la");
	if (!abc && !ab && (!A.empty() || !B.empty()))
		throw std::runtime_error("creations/annihilations take no arguments");
}

std::string GenApp::str() const
{
	std::string r = std::string(gen_name(kind)) + " W=" + W.str();
	bool abc = kind == GenKind::Ra || kind == GenKind::La;
	bool ab = kind == GenKind::Ov || kind == GenKind::Un;
	if (abc || ab)
		r += " A=" + A.str() + " B=" + B.str();
	if (abc)
		r += " C=" + C.str();
	return r;
}

void TangleWord::validate() const
{
	for (auto &g : gens)
		g.validate();
	for (size_t i = 0; i + 1 < gens.size(); i++)
		if (!(gens[i].target() == gens[i + 1].domain()))
			throw std::runtime_error(
			    "tangle word: step " + std::to_string(i + 1) + " target " +
			    gens[i].target().str() + " != next domain " +
			    gens[i + 1].domain().str());
}

ParenString TangleWord::domain() const
{
	if (gens.empty())
		throw std::runtime_error("tangle word: empty");
	return gens.front().domain();
}

ParenString TangleWord::target() const
{
	if (gens.empty())
		throw std::runtime_error("tangle word: empty");
	return gens.back().target();
}

TangleWord parse_tangle(std::istream &in)
{
	TangleWord t;
	std::string line;
	while (std::getline(in, line)) {
		auto hash = line.find('#');
		if (hash != std::string::npos)
			line.erase(hash);
		std::istringstream ls(line);
		std::string kw;
		if (!(ls >> kw))
			continue;
		GenApp g;
		if (kw == "ra")
			g.kind = GenKind::Ra;
		else if (kw == "la")
			g.kind = GenKind::La;
		else if (kw == "ov")
			g.kind = GenKind::Ov;
		else if (kw == "un")
			g.kind = GenKind::Un;
		else if (kw == "cp")
			g.kind = GenKind::Cp;
		else if (kw == "cn")
			g.kind = GenKind::Cn;
		else if (kw == "ap")
			g.kind = GenKind::Ap;
		else if (kw == "an")
			g.kind = GenKind::An;
		else
			throw std::runtime_error("tangle word: unknown generator " + kw);
		std::string tok;
		while (ls >> tok) {
			if (tok.size() < 2 || tok[1] != '=')
				throw std::runtime_error("tangle word: expected key=value, got " +
				                         tok);
			ParenString p = ParenString::parse(tok.substr(2));
			switch (tok[0]) {
			case 'W': g.W = p; break;
			case 'A': g.A = p; break;
			case 'B': g.B = p; break;
			case 'C': g.C = p; break;
			default:
				throw std::runtime_error("tangle word: unknown key in " + tok);
			}
		}
		t.gens.push_back(g);
	}
	t.validate();
	return t;
}

TangleWord load_tangle(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open tangle word file " + path);
	return parse_tangle(in);
}

// ---- structure data ----

namespace {

FormalSum unit_lines(const QuasiHopfData &H, int n)
{
	return unit_sum(lines(n), H.directed, H.cap);
}

bool is_unit(const FormalSum &v)
{
	return v == unit_sum(v.skel, v.directed, v.cap);
}

const QuotientSpace &quotient_for(const Skeleton &sk, bool directed, int cap)
{
	static std::map<std::string, std::unique_ptr<QuotientSpace>> cache;
	static std::mutex mx;
	std::string key =
	    sk.str() + "|" + (directed ? "d" : "u") + "|" + std::to_string(cap);
	std::lock_guard<std::mutex> lk(mx);
	auto it = cache.find(key);
	if (it == cache.end()) {
		auto q = std::make_unique<QuotientSpace>(
		    build_quotient(sk, cap, directed ? RelSet::Aarrow : RelSet::A));
		it = cache.emplace(key, std::move(q)).first;
	}
	return *it->second;
}

bool dies_mod_relations(const QuasiHopfData &H, const FormalSum &v)
{
	if (v.is_zero())
		return true;
	return reduce(quotient_for(v.skel, H.directed, H.cap), v).is_zero();
}

} // namespace

FormalSum coproduct(const QuasiHopfData &H, const FormalSum &x, int m)
{
	FormalSum y = cabling(x, m);
	if (is_unit(H.F))
		return y;
	int n = (int)y.skel.comps.size();
	FormalSum L = relabel(H.F, {m + 1, m + 2}, n);
	FormalSum Rv = relabel(H.FInv, {m + 1, m + 2}, n);
	return mul(mul(L, y), Rv);
}

FormalSum delta_W0(const QuasiHopfData &H, const FormalSum &x, int m,
                   const ParenString &W)
{
	if (W.empty())
		return counit(x, m);
	if (W.s[0] != '(')
		return x;
	// split the top pair
	size_t depth = 0, cut = 0;
	for (size_t i = 1; i + 1 < W.s.size(); i++) {
		char c = W.s[i];
		if (c == '(')
			depth++;
		else if (c == ')')
			depth--;
		if (depth == 0) {
			cut = i + 1;
			break;
		}
	}
	ParenString W1(W.s.substr(1, cut - 1)), W2(W.s.substr(cut, W.s.size() - 1 - cut));
	FormalSum y = coproduct(H, x, m);
	y = delta_W0(H, y, m, W1);
	y = delta_W0(H, y, m + W1.arrows(), W2);
	return y;
}

FormalSum delta_W(const QuasiHopfData &H, const FormalSum &x, int m,
                  const ParenString &W)
{
	FormalSum y = delta_W0(H, x, m, W);
	std::string f = W.flat();
	for (size_t j = 0; j < f.size(); j++)
		if (f[j] == 'd')
			y = antipode(y, m + (int)j);
	return y;
}

FormalSum nu_element(const FormalSum &Phi)
{
	FormalSum m = antipode(Phi, 1);
	m = product(m, 0, 1);
	m = product(m, 0, 1);
	return fs_inv(m);
}

FormalSum u_element(const QuasiHopfData &H)
{
	FormalSum T = antipode(H.PhiInv, 2); // Xb, Yb, S(Zb)
	T = boxtimes(T, H.beta);
	T = product(T, 1, 3); // Xb, Yb.beta, S(Zb)
	T = product(T, 1, 2); // Xb, Yb.beta.S(Zb)
	T = antipode(T, 1);
	T = boxtimes(T, H.R);  // +s, t
	T = antipode(T, 3);    // S(t)
	T = boxtimes(T, H.alpha);
	// order the factors S(Yb beta S(Zb)), S(t), alpha, s, Xb and contract
	T = relabel(T, {5, 1, 4, 2, 3}, 5);
	for (int i = 0; i < 4; i++)
		T = product(T, 0, 1);
	return T;
}

QuasiHopfData make_akz(int cap)
{
	if (cap > 4)
		throw std::runtime_error(
		    "make_akz: associator coefficients are pinned through degree 4");
	QuasiHopfData H;
	H.directed = false;
	H.cap = cap;
	Associator A = solve_associator(cap >= 2 ? cap : 2);
	H.Phi = embed_hor(A.phi, cap);
	H.PhiInv = embed_hor(hor_inv(A.phi), cap);
	H.R = el_rkz(cap);
	H.RInv = fs_inv(H.R);
	H.F = unit_lines(H, 2);
	H.FInv = H.F;
	H.alpha = nu_element(H.Phi);
	H.beta = unit_lines(H, 1);
	H.u = fs_exp(el_casimir(cap) * Rat(-1, 2));
	H.uInv = fs_exp(el_casimir(cap) * Rat(1, 2));
	H.v = H.u;
	H.vInv = H.uInv;
	return H;
}

QuasiHopfData make_aarkz(int cap)
{
	QuasiHopfData U = make_akz(cap);
	QuasiHopfData H;
	H.directed = true;
	H.cap = cap;
	H.Phi = iota(U.Phi);
	H.PhiInv = iota(U.PhiInv);
	H.R = iota(U.R);
	H.RInv = iota(U.RInv);
	H.F = unit_lines(H, 2);
	H.FInv = H.F;
	H.alpha = iota(U.alpha);
	H.beta = unit_lines(H, 1);
	H.u = iota(U.u);
	H.uInv = iota(U.uInv);
	H.v = H.u;
	H.vInv = H.uInv;
	return H;
}

std::vector<std::string> verify_quasi_hopf(const QuasiHopfData &H)
{
	std::vector<std::string> bad;
	auto chk = [&](const char *name, const FormalSum &diff) {
		if (!dies_mod_relations(H, diff))
			bad.push_back(name);
	};
	auto rl = [&](const FormalSum &v, std::vector<int> slots, int n) {
		return relabel(v, slots, n);
	};

	chk("phi-inverse", mul(H.Phi, H.PhiInv) - unit_lines(H, 3));
	chk("r-inverse", mul(H.R, H.RInv) - unit_lines(H, 2));
	chk("twist-inverse", mul(H.F, H.FInv) - unit_lines(H, 2));
	for (int i = 0; i < 3; i++)
		chk("phi-counit", counit(H.Phi, i) - unit_lines(H, 2));

	FormalSum pen_l = mul(coproduct(H, H.Phi, 2), coproduct(H, H.Phi, 0));
	FormalSum pen_r = mul(mul(rl(H.Phi, {2, 3, 4}, 4), coproduct(H, H.Phi, 1)),
	                      rl(H.Phi, {1, 2, 3}, 4));
	chk("pentagon", pen_l - pen_r);

	FormalSum h1 = coproduct(H, H.R, 1) -
	               mul(mul(mul(mul(rl(H.PhiInv, {2, 3, 1}, 3), rl(H.R, {1, 3}, 3)),
	                           rl(H.Phi, {2, 1, 3}, 3)),
	                       rl(H.R, {1, 2}, 3)),
	                   H.PhiInv);
	chk("hexagon-one", h1);
	FormalSum h2 = coproduct(H, H.R, 0) -
	               mul(mul(mul(mul(rl(H.Phi, {3, 1, 2}, 3), rl(H.R, {1, 3}, 3)),
	                           rl(H.PhiInv, {1, 3, 2}, 3)),
	                       rl(H.R, {2, 3}, 3)),
	                   H.Phi);
	chk("hexagon-two", h2);

	{ // X beta S(Y) alpha Z = 1
		FormalSum T = antipode(H.Phi, 1);
		T = boxtimes(boxtimes(T, H.beta), H.alpha);
		T = relabel(T, {1, 3, 5, 2, 4}, 5);
		for (int i = 0; i < 4; i++)
			T = product(T, 0, 1);
		chk("antipode-phi", T - unit_lines(H, 1));
	}
	{ // S(Xb) alpha Yb beta S(Zb) = 1
		FormalSum T = antipode(antipode(H.PhiInv, 0), 2);
		T = boxtimes(boxtimes(T, H.alpha), H.beta);
		T = relabel(T, {1, 3, 5, 2, 4}, 5);
		for (int i = 0; i < 4; i++)
			T = product(T, 0, 1);
		chk("antipode-phi-inverse", T - unit_lines(H, 1));
	}

	chk("ribbon-square", mul(H.v, H.v) - mul(H.u, antipode(H.u, 0)));
	chk("ribbon-coproduct",
	    coproduct(H, H.v, 0) -
	        mul(boxtimes(H.v, H.v), fs_inv(mul(rl(H.R, {2, 1}, 2), H.R))));
	return bad;
}

QuasiHopfData twist(const QuasiHopfData &H, const FormalSum &F2)
{
	if (!(counit(F2, 0) == unit_lines(H, 1)) ||
	    !(counit(F2, 1) == unit_lines(H, 1)))
		throw std::runtime_error("twist: counit normalization fails");
	FormalSum Fi = fs_inv(F2);
	QuasiHopfData T = H;
	T.F = mul(F2, H.F);
	T.FInv = fs_inv(T.F);
	T.Phi = mul(mul(mul(mul(relabel(F2, {2, 3}, 3), coproduct(H, F2, 1)), H.Phi),
	                coproduct(H, Fi, 0)),
	            relabel(Fi, {1, 2}, 3));
	T.PhiInv = fs_inv(T.Phi);
	T.R = mul(mul(relabel(F2, {2, 1}, 2), H.R), Fi);
	T.RInv = fs_inv(T.R);
	{ // alpha_F = S(fbar) alpha gbar
		FormalSum A = antipode(boxtimes(Fi, H.alpha), 0);
		A = relabel(A, {1, 3, 2}, 3);
		A = product(product(A, 0, 1), 0, 1);
		T.alpha = A;
	}
	{ // beta_F = f beta S(g)
		FormalSum B = antipode(boxtimes(F2, H.beta), 1);
		B = relabel(B, {1, 3, 2}, 3);
		B = product(product(B, 0, 1), 0, 1);
		T.beta = B;
	}
	T.u = u_element(T);
	T.uInv = fs_inv(T.u);
	auto bad = verify_quasi_hopf(T);
	if (!bad.empty()) {
		std::string msg = "twist: structure identities broke:";
		for (auto &b : bad)
			msg += " " + b;
		throw std::runtime_error(msg);
	}
	return T;
}

// ---- decorated skeletons ----

FormalSum permute_components(const FormalSum &v, const std::vector<int> &perm)
{
	if (perm.size() != v.skel.comps.size())
		throw std::runtime_error("permute_components: size mismatch");
	Skeleton ns;
	ns.comps.resize(perm.size());
	for (size_t i = 0; i < perm.size(); i++)
		ns.comps[(size_t)perm[i]] = v.skel.comps[i];
	FormalSum r(ns, v.directed, v.cap);
	for (auto &[id, c] : v.terms) {
		Scratch sc = Scratch::from(interned(id));
		sc.skel = ns;
		for (auto &x : sc.vs)
			if (x.ext)
				x.comp = perm[(size_t)x.comp];
		r.add_diagram(sc.to_diagram(), c);
	}
	return r;
}

namespace {

HSComp vert(int pbot, int ptop, char letter)
{
	HSComp c;
	if (letter == 'u') {
		c.tail = {0, pbot};
		c.head = {1, ptop};
	} else {
		c.tail = {1, ptop};
		c.head = {0, pbot};
	}
	return c;
}

} // namespace

HSMorphism hs_identity(const QuasiHopfData &H, const ParenString &W)
{
	HSMorphism m;
	m.dom = m.tgt = W.flat();
	for (int p = 0; p < (int)m.dom.size(); p++)
		m.comps.push_back(vert(p, p, m.dom[(size_t)p]));
	m.x = unit_lines(H, (int)m.dom.size());
	return m;
}

HSMorphism hs_generator(const QuasiHopfData &H, const GenApp &g)
{
	g.validate();
	ParenString dom = g.domain(), tgt = g.target();
	HSMorphism m;
	m.dom = dom.flat();
	m.tgt = tgt.flat();
	int n1 = g.W.star_arrow_index();
	int bd = block_domain(g).arrows(), bt = block_target(g).arrows();
	int n2 = (int)m.dom.size() - n1 - bd;

	FormalSum act;
	std::vector<HSComp> acomps;
	int na = g.A.arrows(), nb = g.B.arrows();
	switch (g.kind) {
	case GenKind::Ra:
	case GenKind::La:
		act = g.kind == GenKind::Ra ? H.PhiInv : H.Phi;
		act = delta_W(H, act, 2, g.C);
		act = delta_W(H, act, 1, g.B);
		act = delta_W(H, act, 0, g.A);
		for (int i = 0; i < bd; i++)
			acomps.push_back(vert(n1 + i, n1 + i, m.dom[(size_t)(n1 + i)]));
		break;
	case GenKind::Ov:
	case GenKind::Un:
		act = g.kind == GenKind::Ov ? relabel(H.R, {2, 1}, 2) : H.RInv;
		act = delta_W(H, act, 1, g.B);
		act = delta_W(H, act, 0, g.A);
		for (int i = 0; i < na; i++)
			acomps.push_back(
			    vert(n1 + i, n1 + nb + i, m.dom[(size_t)(n1 + i)]));
		for (int j = 0; j < nb; j++)
			acomps.push_back(
			    vert(n1 + na + j, n1 + j, m.dom[(size_t)(n1 + na + j)]));
		break;
	case GenKind::Cp:
		act = H.alpha;
		acomps.push_back({false, {1, n1}, {1, n1 + 1}});
		break;
	case GenKind::Cn:
		act = mul(mul(antipode(H.alpha, 0), H.u), H.vInv);
		acomps.push_back({false, {1, n1 + 1}, {1, n1}});
		break;
	case GenKind::Ap:
		act = mul(mul(H.uInv, H.v), antipode(H.beta, 0));
		acomps.push_back({false, {0, n1 + 1}, {0, n1}});
		break;
	case GenKind::An:
		act = H.beta;
		acomps.push_back({false, {0, n1}, {0, n1 + 1}});
		break;
	}
	(void)bt;

	for (int p = 0; p < n1; p++)
		m.comps.push_back(vert(p, p, m.dom[(size_t)p]));
	for (auto &c : acomps)
		m.comps.push_back(c);
	for (int j = 0; j < n2; j++)
		m.comps.push_back(
		    vert(n1 + bd + j, n1 + bt + j, m.dom[(size_t)(n1 + bd + j)]));

	m.x = act;
	if (n1 > 0)
		m.x = boxtimes(unit_lines(H, n1), m.x);
	if (n2 > 0)
		m.x = boxtimes(m.x, unit_lines(H, n2));
	if ((int)m.comps.size() != (int)m.x.skel.comps.size())
		throw std::runtime_error("hs_generator: skeleton size mismatch");
	return m;
}

HSMorphism hs_compose(const HSMorphism &a, const HSMorphism &b)
{
	if (a.tgt != b.dom)
		throw std::runtime_error("hs_compose: interface mismatch");
	int na = (int)a.comps.size(), nb = (int)b.comps.size();
	int k = (int)a.tgt.size();

	struct Touch {
		int comp = -1;
		bool at_tail = false;
	};
	std::vector<Touch> atop((size_t)k), bbot((size_t)k);
	for (int i = 0; i < na; i++) {
		const HSComp &c = a.comps[(size_t)i];
		if (c.circle)
			continue;
		if (c.tail.side == 1)
			atop[(size_t)c.tail.pos] = {i, true};
		if (c.head.side == 1)
			atop[(size_t)c.head.pos] = {i, false};
	}
	for (int j = 0; j < nb; j++) {
		const HSComp &c = b.comps[(size_t)j];
		if (c.circle)
			continue;
		if (c.tail.side == 0)
			bbot[(size_t)c.tail.pos] = {na + j, true};
		if (c.head.side == 0)
			bbot[(size_t)c.head.pos] = {na + j, false};
	}

	int n = na + nb;
	std::vector<int> nxt((size_t)n, -1), prv((size_t)n, -1);
	for (int p = 0; p < k; p++) {
		const Touch &x = atop[(size_t)p], &y = bbot[(size_t)p];
		if (x.comp < 0 || y.comp < 0)
			throw std::runtime_error("hs_compose: dangling interface point");
		if (a.tgt[(size_t)p] == 'u') {
			if (x.at_tail || !y.at_tail)
				throw std::runtime_error("hs_compose: orientation clash");
			nxt[(size_t)x.comp] = y.comp;
			prv[(size_t)y.comp] = x.comp;
		} else {
			if (!x.at_tail || y.at_tail)
				throw std::runtime_error("hs_compose: orientation clash");
			nxt[(size_t)y.comp] = x.comp;
			prv[(size_t)x.comp] = y.comp;
		}
	}

	auto comp_of = [&](int i) -> const HSComp & {
		return i < na ? a.comps[(size_t)i] : b.comps[(size_t)(i - na)];
	};
	auto global_end = [&](int i, bool tail_end) -> HSEnd {
		const HSComp &c = comp_of(i);
		HSEnd e = tail_end ? c.tail : c.head;
		// a's side-0 ends and b's side-1 ends are global; the rest are glued
		return e;
	};

	struct Merged {
		std::vector<int> parts; // traversal order
		bool circle = false;
		HSEnd tail, head;
		int tag = 0;
	};
	std::vector<Merged> merged;
	std::vector<char> used((size_t)n, 0);
	// open chains: start where no predecessor and not an original circle
	for (int i = 0; i < n; i++) {
		if (used[(size_t)i] || comp_of(i).circle || prv[(size_t)i] != -1)
			continue;
		Merged mc;
		int c = i;
		while (c != -1) {
			used[(size_t)c] = 1;
			mc.parts.push_back(c);
			c = nxt[(size_t)c];
		}
		mc.tail = global_end(mc.parts.front(), true);
		mc.head = global_end(mc.parts.back(), false);
		merged.push_back(std::move(mc));
	}
	// cycles and original circles
	for (int i = 0; i < n; i++) {
		if (used[(size_t)i])
			continue;
		Merged mc;
		mc.circle = true;
		if (comp_of(i).circle) {
			used[(size_t)i] = 1;
			mc.parts.push_back(i);
		} else {
			int c = i;
			do {
				used[(size_t)c] = 1;
				mc.parts.push_back(c);
				c = nxt[(size_t)c];
			} while (c != i);
		}
		merged.push_back(std::move(mc));
	}
	for (auto &mc : merged) {
		mc.tag = mc.parts.front();
		for (int p : mc.parts)
			mc.tag = std::min(mc.tag, p);
	}
	std::sort(merged.begin(), merged.end(),
	          [](const Merged &x, const Merged &y) { return x.tag < y.tag; });

	// decorations: disjoint union, then glue along every merged path
	FormalSum X = boxtimes(a.x, b.x);
	std::vector<int> live((size_t)n);
	for (int i = 0; i < n; i++)
		live[(size_t)i] = i;
	auto fold = [&](int c1, int c2) {
		int i1 = live[(size_t)c1], i2 = live[(size_t)c2];
		X = product(X, i1, i2);
		for (auto &l : live)
			if (l > i2)
				l--;
		live[(size_t)c2] = -1;
		live[(size_t)c1] = i1 > i2 ? i1 - 1 : i1;
	};
	for (auto &mc : merged) {
		for (size_t t = 1; t < mc.parts.size(); t++)
			fold(mc.parts[0], mc.parts[(size_t)t]);
		if (mc.circle && !comp_of(mc.parts[0]).circle)
			X = trace_close(X, live[(size_t)mc.parts[0]]);
	}

	// order components by their smallest constituent tag
	std::vector<int> perm((size_t)merged.size());
	for (size_t f = 0; f < merged.size(); f++)
		perm[(size_t)live[(size_t)merged[f].parts[0]]] = (int)f;
	HSMorphism r;
	r.dom = a.dom;
	r.tgt = b.tgt;
	r.x = permute_components(X, perm);
	for (auto &mc : merged) {
		HSComp c;
		c.circle = mc.circle;
		if (!mc.circle) {
			c.tail = mc.tail;
			c.head = mc.head;
		}
		r.comps.push_back(c);
	}
	return r;
}

HSMorphism hs_normal(const HSMorphism &m)
{
	int n = (int)m.comps.size();
	std::vector<int> order((size_t)n);
	for (int i = 0; i < n; i++)
		order[(size_t)i] = i;
	std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
		const HSComp &x = m.comps[(size_t)i], &y = m.comps[(size_t)j];
		if (x.circle != y.circle)
			return !x.circle;
		if (x.circle)
			return false; // circles keep relative order
		return std::tie(x.tail, x.head) < std::tie(y.tail, y.head);
	});
	std::vector<int> perm((size_t)n);
	for (int f = 0; f < n; f++)
		perm[(size_t)order[(size_t)f]] = f;
	HSMorphism r;
	r.dom = m.dom;
	r.tgt = m.tgt;
	r.comps.resize((size_t)n);
	for (int i = 0; i < n; i++)
		r.comps[(size_t)perm[(size_t)i]] = m.comps[(size_t)i];
	r.x = permute_components(m.x, perm);
	return r;
}

bool hs_equal(const QuasiHopfData &H, const HSMorphism &a, const HSMorphism &b)
{
	HSMorphism an = hs_normal(a), bn = hs_normal(b);
	if (an.dom != bn.dom || an.tgt != bn.tgt || an.comps != bn.comps)
		return false;
	return dies_mod_relations(H, an.x - bn.x);
}

HSMorphism z_eval(const QuasiHopfData &H, const TangleWord &t)
{
	t.validate();
	if (t.gens.empty())
		throw std::runtime_error("z_eval: empty word");
	HSMorphism m = hs_generator(H, t.gens[0]);
	for (size_t i = 1; i < t.gens.size(); i++)
		m = hs_compose(m, hs_generator(H, t.gens[i]));
	return hs_normal(m);
}

// ---- twist cascades ----

namespace {

FormalSum lm_rec(const QuasiHopfData &H, const FormalSum &F2,
                 const FormalSum &F2i, const ParenString &W, bool inverse)
{
	int n = W.arrows();
	if (n <= 1)
		return unit_sum(lines(n), H.directed, H.cap);
	size_t depth = 0, cut = 0;
	for (size_t i = 1; i + 1 < W.s.size(); i++) {
		char c = W.s[i];
		if (c == '(')
			depth++;
		else if (c == ')')
			depth--;
		if (depth == 0) {
			cut = i + 1;
			break;
		}
	}
	ParenString W1(W.s.substr(1, cut - 1)),
	    W2(W.s.substr(cut, W.s.size() - 1 - cut));
	FormalSum e = inverse ? F2i : F2;
	e = delta_W0(H, e, 1, W2);
	e = delta_W0(H, e, 0, W1);
	FormalSum p1 = lm_rec(H, F2, F2i, W1, inverse);
	FormalSum p2 = lm_rec(H, F2, F2i, W2, inverse);
	FormalSum both = boxtimes(p1, p2);
	return inverse ? mul(e, both) : mul(both, e);
}

} // namespace

FormalSum lm_f0(const QuasiHopfData &H, const FormalSum &F2,
                const ParenString &W)
{
	return lm_rec(H, F2, fs_inv(F2), W, false);
}

FormalSum lm_g0(const QuasiHopfData &H, const FormalSum &F2,
                const ParenString &W)
{
	return lm_rec(H, F2, fs_inv(F2), W, true);
}

HSMorphism lm_cascade(const QuasiHopfData &H, const FormalSum &F2,
                      const ParenString &W, bool inverse)
{
	FormalSum e = inverse ? lm_g0(H, F2, W) : lm_f0(H, F2, W);
	std::string f = W.flat();
	for (size_t j = 0; j < f.size(); j++)
		if (f[j] == 'd')
			e = antipode(e, (int)j);
	HSMorphism m = hs_identity(H, W);
	m.x = e;
	return m;
}

// ---- relation checklist ----

namespace {

GenApp ga(GenKind k, const char *W, const char *A = "", const char *B = "",
          const char *C = "")
{
	GenApp g;
	g.kind = k;
	g.W = ParenString::parse(W);
	g.A = ParenString::parse(A);
	g.B = ParenString::parse(B);
	g.C = ParenString::parse(C);
	return g;
}

TangleWord tw(std::initializer_list<GenApp> gs)
{
	TangleWord t;
	t.gens.assign(gs);
	t.validate();
	return t;
}

} // namespace

std::vector<RelationReport> relation_suite(const QuasiHopfData &H)
{
	using K = GenKind;
	std::vector<RelationReport> out;
	auto eq = [&](std::string name, const TangleWord &l, const TangleWord &r) {
		out.push_back({std::move(name), hs_equal(H, z_eval(H, l), z_eval(H, r))});
	};
	auto id = [&](std::string name, const TangleWord &l, const char *obj) {
		out.push_back(
		    {std::move(name),
		     hs_equal(H, z_eval(H, l), hs_identity(H, ParenString::parse(obj)))});
	};

	// R1: reassociations with an empty bundle are identities
	id("R1 ra A empty", tw({ga(K::Ra, "*", "e", "u", "u")}), "(uu)");
	id("R1 ra B empty", tw({ga(K::Ra, "*", "u", "e", "u")}), "(uu)");
	id("R1 ra C empty", tw({ga(K::Ra, "*", "u", "u", "e")}), "(uu)");
	id("R1 la A empty", tw({ga(K::La, "*", "e", "u", "u")}), "(uu)");
	id("R1 ra A empty, down", tw({ga(K::Ra, "*", "e", "d", "u")}), "(du)");

	// R2: la inverts ra
	id("R2 ra then la", tw({ga(K::Ra, "*", "u", "u", "u"), ga(K::La, "*", "u", "u", "u")}),
	   "((uu)u)");
	id("R2 la then ra", tw({ga(K::La, "*", "u", "u", "u"), ga(K::Ra, "*", "u", "u", "u")}),
	   "(u(uu))");
	id("R2 ra then la, down",
	   tw({ga(K::Ra, "*", "u", "d", "u"), ga(K::La, "*", "u", "d", "u")}),
	   "((ud)u)");

	// R3: pentagon
	eq("R3 pentagon",
	   tw({ga(K::Ra, "(*u)", "u", "u", "u"), ga(K::Ra, "*", "u", "(uu)", "u"),
	       ga(K::Ra, "(u*)", "u", "u", "u")}),
	   tw({ga(K::Ra, "*", "(uu)", "u", "u"), ga(K::Ra, "*", "u", "u", "(uu)")}));
	eq("R3 pentagon, down",
	   tw({ga(K::Ra, "(*d)", "u", "u", "u"), ga(K::Ra, "*", "u", "(uu)", "d"),
	       ga(K::Ra, "(u*)", "u", "u", "d")}),
	   tw({ga(K::Ra, "*", "(uu)", "u", "d"), ga(K::Ra, "*", "u", "u", "(ud)")}));

	// R4: generators with disjoint active regions commute
	eq("R4 braiding and creation",
	   tw({ga(K::Ov, "*", "u", "u"), ga(K::Cp, "(*(uu))")}),
	   tw({ga(K::Cp, "(*(uu))"), ga(K::Ov, "((du)*)", "u", "u")}));
	eq("R4 braiding and creation, down",
	   tw({ga(K::Ov, "*", "u", "d"), ga(K::Cp, "(*(du))")}),
	   tw({ga(K::Cp, "(*(ud))"), ga(K::Ov, "((du)*)", "u", "d")}));

	// R5: reassociation is natural in its bundles
	eq("R5 braiding inside a bundle",
	   tw({ga(K::Ov, "((u*)u)", "u", "u"), ga(K::Ra, "*", "u", "(uu)", "u")}),
	   tw({ga(K::Ra, "*", "u", "(uu)", "u"), ga(K::Ov, "(u(*u))", "u", "u")}));
	eq("R5 braiding inside a bundle, down",
	   tw({ga(K::Un, "((u*)u)", "u", "d"), ga(K::Ra, "*", "u", "(du)", "u")}),
	   tw({ga(K::Ra, "*", "u", "(ud)", "u"), ga(K::Un, "(u(*u))", "u", "d")}));
	eq("R5 annihilation inside a bundle",
	   tw({ga(K::La, "*", "(du)", "u", "u"), ga(K::Ap, "((*u)u)")}),
	   tw({ga(K::Ap, "(*(uu))")}));

	// R6: braidings with an empty bundle are identities
	id("R6 ov A empty", tw({ga(K::Ov, "*", "e", "u")}), "u");
	id("R6 un B empty", tw({ga(K::Un, "*", "u", "e")}), "u");
	id("R6 ov A empty, down", tw({ga(K::Ov, "*", "e", "d")}), "d");

	// R7: un inverts ov
	id("R7 ov then un", tw({ga(K::Ov, "*", "u", "u"), ga(K::Un, "*", "u", "u")}),
	   "(uu)");
	id("R7 un then ov", tw({ga(K::Un, "*", "u", "u"), ga(K::Ov, "*", "u", "u")}),
	   "(uu)");
	id("R7 ov then un, down",
	   tw({ga(K::Ov, "*", "u", "d"), ga(K::Un, "*", "d", "u")}), "(ud)");

	// R8: hexagons
	eq("R8 hexagon one",
	   tw({ga(K::Ov, "*", "u", "(uu)")}),
	   tw({ga(K::La, "*", "u", "u", "u"), ga(K::Ov, "(*u)", "u", "u"),
	       ga(K::Ra, "*", "u", "u", "u"), ga(K::Ov, "(u*)", "u", "u"),
	       ga(K::La, "*", "u", "u", "u")}));
	eq("R8 hexagon one, down",
	   tw({ga(K::Ov, "*", "d", "(uu)")}),
	   tw({ga(K::La, "*", "d", "u", "u"), ga(K::Ov, "(*u)", "d", "u"),
	       ga(K::Ra, "*", "u", "d", "u"), ga(K::Ov, "(u*)", "d", "u"),
	       ga(K::La, "*", "u", "u", "d")}));
	eq("R8 hexagon two",
	   tw({ga(K::Ov, "*", "(uu)", "u")}),
	   tw({ga(K::Ra, "*", "u", "u", "u"), ga(K::Ov, "(u*)", "u", "u"),
	       ga(K::La, "*", "u", "u", "u"), ga(K::Ov, "(*u)", "u", "u"),
	       ga(K::Ra, "*", "u", "u", "u")}));

	// R9: zig-zags
	id("R9 up, loop right",
	   tw({ga(K::Cp, "(u*)"), ga(K::La, "*", "u", "d", "u"), ga(K::An, "(*u)")}),
	   "u");
	id("R9 up, loop left",
	   tw({ga(K::Cn, "(*u)"), ga(K::Ra, "*", "u", "d", "u"), ga(K::Ap, "(u*)")}),
	   "u");
	id("R9 down, loop left",
	   tw({ga(K::Cp, "(*d)"), ga(K::Ra, "*", "d", "u", "d"), ga(K::An, "(d*)")}),
	   "d");
	id("R9 down, loop right",
	   tw({ga(K::Cn, "(d*)"), ga(K::La, "*", "d", "u", "d"), ga(K::Ap, "(*d)")}),
	   "d");

	// R10: double loops
	eq("R10 down",
	   tw({ga(K::Cn, "*"), ga(K::Cn, "((ud)*)"), ga(K::Ov, "(*(ud))", "u", "d"),
	       ga(K::Un, "((du)*)", "u", "d"), ga(K::Ra, "*", "d", "u", "(du)"),
	       ga(K::La, "(d*)", "u", "d", "u"), ga(K::An, "(d(*u))")}),
	   tw({ga(K::Cp, "*")}));
	eq("R10 up",
	   tw({ga(K::Cp, "*"), ga(K::Cp, "(*(du))"), ga(K::Un, "((du)*)", "d", "u"),
	       ga(K::Ov, "(*(ud))", "d", "u"), ga(K::La, "*", "(ud)", "u", "d"),
	       ga(K::Ra, "(*d)", "u", "d", "u"), ga(K::Ap, "((u*)d)")}),
	   tw({ga(K::Cn, "*")}));

	return out;
}

} // namespace jd
