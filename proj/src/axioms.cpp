#include "shifted/axioms.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <set>
#include <thread>

#include "json.hpp"

namespace shifted {

namespace {

constexpr const char* kNames[] = {"B1",  "B2",  "B3",  "K",   "A1",  "A2",  "A3",  "A4",    "A5",
                                  "A6",  "A7",  "A8",  "A1D", "A2D", "A3D", "A4D", "A5D",   "A6D",
                                  "A7D", "A8D", "XL",  "SA",  "L_CAS", "L_CF1", "L_TD"};

using Opt = std::optional<int>;

bool defined_equal(const Opt& a, const Opt& b) { return a && a == b; }

// The downward (primal) or upward (dual) arrows of an index pair. Role 0 is
// f_i / e_{i+1}, role 1 is f_{i+1} / e_i; statistics are read so that the
// dual formulas coincide with the primal ones.
struct View {
  const CrystalGraph& g;
  const GraphStats& st;
  int i;
  bool dual;

  int index(int role) const { return (role == 0) != dual ? i : i + 1; }
  Opt op(Opt v, int role, bool primed = false) const {
    if (!v) return std::nullopt;
    return dual ? g.e(*v, index(role), primed) : g.f(*v, index(role), primed);
  }
  StringStats stats(int v, int role) const {
    StringStats s = st.at(v, index(role));
    if (dual) {
      std::swap(s.eps, s.phi);
      std::swap(s.eps_prime, s.phi_prime);
      std::swap(s.eps_hat, s.phi_hat);
    }
    return s;
  }
  DeltaPair delta(int w, int x, int y) const {
    return {stats(w, 0).eps - stats(y, 0).eps, stats(w, 1).eps - stats(x, 1).eps};
  }
};

struct Sink {
  const CrystalGraph& g;
  const GraphStats& st;
  AxiomId axiom;
  int i;
  long applied = 0;
  std::vector<Violation> out;

  void fail(std::vector<Opt> vs, std::string failure) {
    Violation v;
    v.axiom = axiom;
    v.index = i;
    for (const auto& x : vs)
      if (x && std::find(v.vertices.begin(), v.vertices.end(), *x) == v.vertices.end()) v.vertices.push_back(*x);
    v.failure = std::move(failure);
    out.push_back(std::move(v));
  }
  // Both sides of a biconditional.
  void iff(bool relation, bool condition, std::vector<Opt> vs) {
    ++applied;
    if (relation && !condition) fail(std::move(vs), "relation holds but the condition fails");
    if (!relation && condition) fail(std::move(vs), "condition holds but the relation fails");
  }
  void require(bool ok, std::vector<Opt> vs, std::string failure) {
    if (!ok) fail(std::move(vs), std::move(failure));
  }
};

std::string describe(const CrystalGraph& g, const GraphStats& st, int v) {
  const auto& x = g.vertex(v);
  std::string s = "  v" + std::to_string(v) + " " + (x.word ? to_string(*x.word) : std::string("-")) + " wt=" +
                  to_string(x.weight) + "\n";
  for (int i = 1; i < g.alphabet(); ++i) {
    s += "    i=" + std::to_string(i) + " " + to_string(st.at(v, i));
    if (const auto& shp = st.shape(v, i)) s += shp->kind == StringKind::Collapsed ? " collapsed" : " separated";
    else s += " illegal-string";
    for (bool p : {false, true})
      for (int u : g.out(v, i, p)) s += " -" + edge_label(i, p) + "->v" + std::to_string(u);
    s += "\n";
  }
  return s;
}

std::vector<int> ball(const CrystalGraph& g, const std::vector<int>& centre, int radius) {
  std::map<int, int> dist;
  std::deque<int> q;
  for (int c : centre) {
    dist.emplace(c, 0);
    q.push_back(c);
  }
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    if (dist[u] == radius) continue;
    for (int i = 1; i < g.alphabet(); ++i)
      for (bool p : {false, true})
        for (const auto* nb : {&g.out(u, i, p), &g.in(u, i, p)})
          for (int x : *nb)
            if (dist.emplace(x, dist[u] + 1).second) q.push_back(x);
  }
  std::vector<int> out;
  for (const auto& [v, d] : dist) out.push_back(v);
  return out;
}

// Every maximal run of steps from v in one direction has the same length.
bool path_lengths_agree(const CrystalGraph& g, int v, int i, bool down) {
  std::map<int, std::pair<int, int>> memo;  // vertex -> (min, max)
  std::set<int> active;
  bool cyclic = false;
  std::function<std::pair<int, int>(int)> go = [&](int u) -> std::pair<int, int> {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    if (!active.insert(u).second) {
      cyclic = true;
      return {0, 0};
    }
    std::set<int> next;
    for (bool p : {false, true})
      for (int x : down ? g.out(u, i, p) : g.in(u, i, p)) next.insert(x);
    std::pair<int, int> r{0, 0};
    bool first = true;
    for (int x : next) {
      auto [lo, hi] = go(x);
      if (first) r = {lo + 1, hi + 1};
      else r = {std::min(r.first, lo + 1), std::max(r.second, hi + 1)};
      first = false;
    }
    active.erase(u);
    memo[u] = r;
    return r;
  };
  auto [lo, hi] = go(v);
  return !cyclic && lo == hi;
}

void check_B1(Sink& s, int v) {
  const auto& g = s.g;
  const int i = s.i;
  const auto& shp = s.st.shape(v, i);
  ++s.applied;
  if (!shp) {
    if (s.st.string_root(v, i) == v)
      s.fail({v}, "the " + edge_label(i, false) + "-component is neither a separated nor a collapsed string");
    return;
  }
  for (bool p : {false, true}) {
    s.require(g.out(v, i, p).size() <= 1, {v}, "more than one outgoing " + edge_label(i, p) + " edge");
    s.require(g.in(v, i, p).size() <= 1, {v}, "more than one incoming " + edge_label(i, p) + " edge");
  }
  s.require(path_lengths_agree(g, v, i, true) && path_lengths_agree(g, v, i, false), {v},
            "paths to the end of the string have different lengths");
  const bool collapsed = shp->kind == StringKind::Collapsed;
  const auto& st = s.st.at(v, i);
  const auto& wt = g.vertex(v).weight;
  if ((collapsed && st.eps == 0) != (wt.at(i + 1) == 0))
    s.fail({v}, collapsed && st.eps == 0 ? "top of a collapsed string with nonzero weight at i+1"
                                         : "zero weight at i+1 away from the top of a collapsed string");
  if ((collapsed && st.phi == 0) != (wt.at(i) == 0))
    s.fail({v}, collapsed && st.phi == 0 ? "bottom of a collapsed string with nonzero weight at i"
                                         : "zero weight at i away from the bottom of a collapsed string");
}

void check_B2(Sink& s, int v) {
  const auto& g = s.g;
  const int i = s.i;
  for (int j = i + 2; j < g.alphabet(); ++j) {
    for (bool p : {false, true}) {
      for (bool q : {false, true}) {
        for (bool di : {true, false}) {
          for (bool dj : {true, false}) {
            auto step = [&](Opt u, int k, bool pr, bool down) -> Opt {
              if (!u) return std::nullopt;
              return down ? g.f(*u, k, pr) : g.e(*u, k, pr);
            };
            const Opt a = step(v, i, p, di), b = step(v, j, q, dj);
            if (!a || !b) continue;
            ++s.applied;
            const Opt x = step(a, j, q, dj), y = step(b, i, p, di);
            if (!defined_equal(x, y))
              s.fail({v, a, b, x, y}, std::string(di ? "f" : "e") + "_" + edge_label(i, p) + " and " +
                                          (dj ? "f" : "e") + "_" + edge_label(j, q) + " do not commute");
          }
        }
      }
    }
  }
}

void check_B3(Sink& s, int z) {
  const auto& g = s.g;
  const int i = s.i;
  for (int j : {i - 1, i + 1}) {
    if (j < 1 || j >= g.alphabet()) continue;
    for (bool p : {false, true}) {
      for (int w : g.out(z, j, p)) {
        ++s.applied;
        const auto& a = s.st.at(z, i);
        const auto& b = s.st.at(w, i);
        const bool ok = (b.eps == a.eps && b.phi == a.phi + 1) || (b.eps == a.eps - 1 && b.phi == a.phi);
        s.require(ok, {z, w}, "(eps_i, phi_i) changes by neither (0,+1) nor (-1,0) along " + edge_label(j, p));
      }
    }
  }
  if (i + 1 >= g.alphabet()) return;
  for (bool dual : {false, true}) {
    View vw{g, s.st, i, dual};
    for (bool p : {false, true})
      for (bool q : {false, true}) {
        const Opt x = vw.op(z, 0, p), y = vw.op(z, 1, q);
        if (!x || !y) continue;
        const DeltaPair d = vw.delta(z, *x, *y);
        s.require(d.d_eps_i >= 0 && d.d_eps_i <= 1 && d.d_eps_i1 >= 0 && d.d_eps_i1 <= 1, {z, x, y},
                  std::string(dual ? "dual " : "") + "delta " + to_string(d) + " outside {0,1}^2");
      }
  }
}

void check_K(Sink& s, int v) {
  const auto& g = s.g;
  const int i = s.i;
  const int n = g.alphabet();
  ++s.applied;
  const auto& wt = g.vertex(v).weight;
  if (i == 1)
    for (int c : wt.counts) s.require(c >= 0, {v}, "negative weight");
  for (bool p : {false, true}) {
    s.require(g.out(v, i, p).size() <= 1, {v}, "f_" + edge_label(i, p) + " is not a partial function");
    s.require(g.in(v, i, p).size() <= 1, {v}, "e_" + edge_label(i, p) + " is not a partial function");
  }
  const auto& a = s.st.at(v, i);
  s.require(a.eps >= 0 && a.phi >= 0, {v}, "string end unreachable");
  s.require(a.phi - a.eps == wt.at(i) - wt.at(i + 1), {v}, "phi_i - eps_i differs from <wt, alpha_i>");
  for (bool p : {false, true}) {
    for (int u : g.out(v, i, p)) {
      s.require(g.vertex(u).weight == wt - WeightVector::simple_root(n, i), {v, u},
                "weight does not drop by alpha_i along " + edge_label(i, p));
      const auto& b = s.st.at(u, i);
      s.require(b.eps == a.eps + 1 && b.phi == a.phi - 1, {v, u},
                "eps_i / phi_i do not move by one along " + edge_label(i, p));
    }
  }
}

void check_A(Sink& s, int w, int k, bool dual) {
  View vw{s.g, s.st, s.i, dual};
  switch (k) {
    case 1: {
      const Opt x = vw.op(w, 0, true), y = vw.op(w, 1, true);
      if (!x || !y) return;
      ++s.applied;
      const Opt a = vw.op(y, 0, true), b = vw.op(x, 1, true);
      s.require(defined_equal(a, b), {w, x, y, a, b}, "primed square does not close");
      return;
    }
    case 2: {
      const Opt x = vw.op(w, 0, true), y = vw.op(w, 1, true);
      if (!x || !y) return;
      const Opt a = vw.op(y, 0), b = vw.op(x, 1);
      const bool relation = defined_equal(a, b) && vw.op(y, 0, true) != a;
      const auto sw = vw.stats(w, 1);
      const bool condition = vw.delta(w, *x, *y) == DeltaPair{0, 0} && sw.phi == 1 && sw.phi_hat == 0;
      s.iff(relation, condition, {w, x, y, a, b});
      return;
    }
    case 3: {
      const Opt x = vw.op(w, 0, true), y = vw.op(w, 1);
      if (!x || !y) return;
      if (vw.op(w, 1, true) == y && vw.op(w, 0) == x) return;
      ++s.applied;
      const Opt a = vw.op(y, 0, true), b = vw.op(x, 1);
      s.require(defined_equal(a, b), {w, x, y, a, b}, "half-primed square does not close");
      return;
    }
    case 4: {
      const Opt x = vw.op(w, 0), y = vw.op(w, 1, true);
      if (!x || !y) return;
      const Opt a = vw.op(y, 0), b = vw.op(x, 1, true);
      s.iff(defined_equal(a, b), vw.stats(w, 0).eps_hat > 0, {w, x, y, a, b});
      return;
    }
    default: break;
  }
  const Opt x = vw.op(w, 0), y = vw.op(w, 1);
  if (!x || !y || vw.op(w, 0, true)) return;
  const DeltaPair d = vw.delta(w, *x, *y);
  switch (k) {
    case 5: {
      const Opt a = vw.op(y, 0, true), b = vw.op(x, 1, true);
      s.iff(defined_equal(a, b), d == DeltaPair{1, 1}, {w, x, y, a, b});
      return;
    }
    case 6: {
      const Opt a = vw.op(y, 0), b = vw.op(x, 1);
      s.iff(defined_equal(a, b), d == DeltaPair{1, 0} || d == DeltaPair{0, 1}, {w, x, y, a, b});
      return;
    }
    case 7: {
      const Opt a = vw.op(vw.op(vw.op(y, 0), 0, true), 1), b = vw.op(vw.op(vw.op(x, 1), 1), 0, true);
      const bool relation = defined_equal(a, b) && vw.op(y, 0) != vw.op(x, 1);
      const bool condition = d == DeltaPair{0, 0} && vw.stats(w, 0).eps_hat - vw.stats(*y, 0).eps_hat == -1;
      s.iff(relation, condition, {w, x, y, a, b});
      return;
    }
    case 8: {
      const Opt a = vw.op(vw.op(vw.op(y, 0), 0), 1), b = vw.op(vw.op(vw.op(x, 1), 1), 0);
      const bool relation = defined_equal(a, b) && vw.op(y, 0) != vw.op(x, 1);
      const bool condition = d == DeltaPair{0, 0} && vw.stats(*y, 0).phi_hat >= 2;
      s.iff(relation, condition, {w, x, y, a, b});
      return;
    }
    default: return;
  }
}

void check_XL(Sink& s, int w) {
  const auto& g = s.g;
  const int i = s.i;
  const auto& a = s.st.at(w, i);
  const auto& b = s.st.at(w, i + 1);
  if (a.eps_hat != 0 || a.phi_prime != 0 || b.phi_hat != 0 || b.eps_prime != 0) return;
  ++s.applied;
  for (int k : {i, i + 1})
    for (bool p : {false, true})
      s.require(g.out(w, k, p).empty() && g.in(w, k, p).empty(), {w},
                "excluded string lengths but an edge labelled " + edge_label(k, p) + " is present");
}

void check_SA(Sink& s, int w) {
  for (bool dual : {false, true}) {
    View vw{s.g, s.st, s.i, dual};
    const Opt x = vw.op(w, 0), y = vw.op(w, 1);
    if (!x || !y || vw.op(w, 0, true)) continue;
    if (vw.delta(w, *x, *y) != DeltaPair{0, 0}) continue;
    ++s.applied;
    const bool a7 = vw.stats(w, 0).eps_hat - vw.stats(*y, 0).eps_hat == -1;
    const bool a8 = vw.stats(*y, 0).phi_hat >= 2;
    s.require(a7 || a8, {w, x, y}, std::string(dual ? "dual: " : "") + "neither the A7 nor the A8 condition holds");
  }
}

void check_L_CAS(Sink& s, int w) {
  const auto& g = s.g;
  const auto& st = s.st;
  const int i = s.i;
  for (bool p : {false, true}) {
    for (int z : g.out(w, i, p)) {
      const int dw = st.at(w, i + 1).phi, dz = st.at(z, i + 1).phi;
      if (dz == dw + 1) {
        ++s.applied;
        s.require(st.collapsed(w, i + 1) == st.collapsed(z, i + 1), {w, z},
                  "clause (i): collapsedness of the (i+1)-string changes");
      } else if (dz == dw) {
        ++s.applied;
        s.require(st.separated(z, i + 1), {w, z}, "clause (ii): the (i+1)-string at the target is not separated");
      }
    }
    for (int z : g.out(w, i + 1, p)) {
      ++s.applied;
      const bool rhs = st.collapsed(z, i) && st.at(z, i).phi == st.at(w, i).phi;
      s.require(st.collapsed(w, i) == rhs, {w, z}, "clause (iii): collapsedness of the i-string is not copied");
    }
  }
}

void check_L_CF1(Sink& s, int w) {
  for (int z : s.g.out(w, s.i, true)) {
    if (s.st.at(w, s.i + 1).phi != s.st.at(z, s.i + 1).phi) continue;
    ++s.applied;
    s.require(s.st.at(z, s.i + 1).phi_hat == 0, {w, z}, "phi^_{i+1} of the target is nonzero");
  }
}

void check_L_TD(Sink& s, int z) {
  View vw{s.g, s.st, s.i, false};
  const Opt t = vw.op(z, 0, true), x = vw.op(z, 0), y = vw.op(z, 1);
  if (!t || !x || !y || t == x) return;
  ++s.applied;
  const Opt tx = vw.op(t, 0), ty = vw.op(t, 1);
  if (!tx || !ty) {
    s.fail({z, t, x, y}, "f_i or f_{i+1} undefined at the primed target");
    return;
  }
  const DeltaPair dz = vw.delta(z, *x, *y), dt = vw.delta(*t, *tx, *ty);
  s.require(dz == dt, {z, t, x, y, tx, ty}, "delta " + to_string(dz) + " is not copied, got " + to_string(dt));
}

void run(Sink& s, int v) {
  switch (s.axiom) {
    case AxiomId::B1: return check_B1(s, v);
    case AxiomId::B2: return check_B2(s, v);
    case AxiomId::B3: return check_B3(s, v);
    case AxiomId::K: return check_K(s, v);
    case AxiomId::XL: return check_XL(s, v);
    case AxiomId::SA: return check_SA(s, v);
    case AxiomId::L_CAS: return check_L_CAS(s, v);
    case AxiomId::L_CF1: return check_L_CF1(s, v);
    case AxiomId::L_TD: return check_L_TD(s, v);
    default: break;
  }
  const int k = static_cast<int>(s.axiom) - static_cast<int>(AxiomId::A1);
  check_A(s, v, k % 8 + 1, k >= 8);
}

void finish(const CrystalGraph& g, const GraphStats& st, std::vector<Violation>& vs) {
  for (auto& v : vs) {
    for (int u : v.vertices) v.picture += describe(g, st, u);
    v.neighborhood = ball(g, v.vertices, 3);
  }
}

std::pair<long, std::vector<Violation>> run_axiom(const CrystalGraph& g, const GraphStats& st, AxiomId a) {
  long applied = 0;
  std::vector<Violation> out;
  for (int i : axiom_indices(g, a)) {
    Sink s{g, st, a, i, 0, {}};
    for (int v = 0; v < static_cast<int>(g.size()); ++v) run(s, v);
    applied += s.applied;
    for (auto& x : s.out) out.push_back(std::move(x));
  }
  finish(g, st, out);
  return {applied, std::move(out)};
}

}  // namespace

const char* to_string(AxiomId a) { return kNames[static_cast<int>(a)]; }

std::optional<AxiomId> parse_axiom(std::string_view name) {
  for (AxiomId a : kAllAxioms)
    if (name == to_string(a)) return a;
  return std::nullopt;
}

std::vector<AxiomId> parse_axiom_list(std::string_view list) {
  if (list == "all") return {kAllAxioms.begin(), kAllAxioms.end()};
  std::vector<AxiomId> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto name = list.substr(0, comma);
    auto a = parse_axiom(name);
    if (!a) throw ParseError("unknown axiom '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *a) == out.end()) out.push_back(*a);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ParseError("empty axiom list");
  return out;
}

std::string to_string(DeltaPair d) {
  return "(" + std::to_string(d.d_eps_i) + "," + std::to_string(d.d_eps_i1) + ")";
}

namespace {

DeltaPair delta_impl(const CrystalGraph& g, const GraphStats& st, int w, int i, bool xp, bool yp, bool dual) {
  if (i < 1 || i + 1 >= g.alphabet()) throw InvalidIndex("delta needs 1 <= i <= n-2, got " + std::to_string(i));
  View vw{g, st, i, dual};
  const Opt x = vw.op(w, 0, xp), y = vw.op(w, 1, yp);
  if (!x || !y)
    throw MissingArrow(std::string(dual ? "e" : "f") + " arrows " + edge_label(vw.index(0), xp) + " and " +
                       edge_label(vw.index(1), yp) + " are not both defined at vertex " + std::to_string(w));
  return vw.delta(w, *x, *y);
}

DeltaPair delta_auto(const CrystalGraph& g, int w, int i, bool dual) {
  const GraphStats st(g);
  if (i < 1 || i + 1 >= g.alphabet()) throw InvalidIndex("delta needs 1 <= i <= n-2, got " + std::to_string(i));
  View vw{g, st, i, dual};
  const bool xp = !vw.op(w, 0), yp = !vw.op(w, 1);
  return delta_impl(g, st, w, i, xp, yp, dual);
}

}  // namespace

DeltaPair delta(const CrystalGraph& g, const GraphStats& st, int w, int i, bool xp, bool yp) {
  return delta_impl(g, st, w, i, xp, yp, false);
}

DeltaPair delta_dual(const CrystalGraph& g, const GraphStats& st, int w, int i, bool xp, bool yp) {
  return delta_impl(g, st, w, i, xp, yp, true);
}

DeltaPair delta(const CrystalGraph& g, int w, int i) { return delta_auto(g, w, i, false); }
DeltaPair delta_dual(const CrystalGraph& g, int w, int i) { return delta_auto(g, w, i, true); }

std::vector<int> axiom_indices(const CrystalGraph& g, AxiomId a) {
  const int n = g.alphabet();
  const bool single = a == AxiomId::B1 || a == AxiomId::B2 || a == AxiomId::B3 || a == AxiomId::K;
  std::vector<int> out;
  for (int i = 1; i < (single ? n : n - 1); ++i) out.push_back(i);
  return out;
}

std::vector<Violation> check_at(const CrystalGraph& g, const GraphStats& st, AxiomId a, int v, int i) {
  Sink s{g, st, a, i, 0, {}};
  run(s, v);
  finish(g, st, s.out);
  return std::move(s.out);
}

std::vector<Violation> check(const CrystalGraph& g, const GraphStats& st, AxiomId a) {
  return run_axiom(g, st, a).second;
}

std::vector<Violation> check(const CrystalGraph& g, AxiomId a) { return check(g, GraphStats(g), a); }

CrystalGraph neighborhood_graph(const CrystalGraph& g, const Violation& v) {
  return induced_subgraph(g, v.neighborhood);
}

long Report::violation_count(AxiomId a) const {
  for (const auto& t : tallies)
    if (t.axiom == a) return t.violations;
  return 0;
}

Report check_axioms(const CrystalGraph& g, const std::vector<AxiomId>& axioms, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  const GraphStats st(g);
  std::vector<std::pair<long, std::vector<Violation>>> results(axioms.size());
  jobs = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(axioms.size(), 1)));
  if (jobs == 1) {
    for (std::size_t k = 0; k < axioms.size(); ++k) results[k] = run_axiom(g, st, axioms[k]);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        for (std::size_t k = static_cast<std::size_t>(j); k < axioms.size(); k += static_cast<std::size_t>(jobs))
          results[k] = run_axiom(g, st, axioms[k]);
      });
    for (auto& t : pool) t.join();
  }

  Report r;
  for (std::size_t k = 0; k < axioms.size(); ++k) {
    r.tallies.push_back({axioms[k], results[k].first, static_cast<long>(results[k].second.size())});
    for (auto& v : results[k].second) r.violations.push_back(std::move(v));
  }
  for (int i = 1; i + 1 < g.alphabet(); ++i) {
    View vw{g, st, i, false};
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
      const Opt x = vw.op(w, 0), y = vw.op(w, 1);
      if (x && y) ++r.delta_histogram[vw.delta(w, *x, *y)];
    }
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report check_all(const CrystalGraph& g, int jobs) { return check_axioms(g, {kAllAxioms.begin(), kAllAxioms.end()}, jobs); }

std::string format_report(const Report& r, bool timing, std::size_t max_violations) {
  std::string s = "axiom   applied  violations\n";
  for (const auto& t : r.tallies) {
    std::string name = to_string(t.axiom);
    std::string applied = std::to_string(t.applied);
    s += name + std::string(8 - std::min<std::size_t>(name.size(), 7), ' ') + std::string(7 - std::min<std::size_t>(applied.size(), 6), ' ') +
         applied + "  " + std::to_string(t.violations) + "\n";
  }
  s += "delta histogram:";
  if (r.delta_histogram.empty()) s += " none";
  for (const auto& [d, c] : r.delta_histogram) s += " " + to_string(d) + "=" + std::to_string(c);
  s += "\n";
  for (std::size_t k = 0; k < r.violations.size() && k < max_violations; ++k) {
    const auto& v = r.violations[k];
    s += "violation " + std::string(to_string(v.axiom)) + " i=" + std::to_string(v.index) + ": " + v.failure + "\n" +
         v.picture;
  }
  if (r.violations.size() > max_violations)
    s += "... " + std::to_string(r.violations.size() - max_violations) + " more violations\n";
  if (timing) s += "runtime: " + std::to_string(static_cast<long long>(r.runtime_ms)) + " ms\n";
  s += r.passed() ? "result: PASS\n" : "result: FAIL (" + std::to_string(r.violations.size()) + " violations)\n";
  return s;
}

std::string report_json(const Report& r, bool timing) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["axioms"] = nlohmann::ordered_json::array();
  for (const auto& t : r.tallies)
    j["axioms"].push_back({{"axiom", to_string(t.axiom)}, {"applied", t.applied}, {"violations", t.violations}});
  j["delta_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [d, c] : r.delta_histogram) j["delta_histogram"][to_string(d)] = c;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"axiom", to_string(v.axiom)},
                               {"index", v.index},
                               {"vertices", v.vertices},
                               {"failure", v.failure},
                               {"picture", v.picture},
                               {"neighborhood", v.neighborhood}});
  if (timing) j["runtime_ms"] = r.runtime_ms;
  return j.dump(2) + "\n";
}

}  // namespace shifted
