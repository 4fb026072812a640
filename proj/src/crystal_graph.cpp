#include "shifted/crystal_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <thread>

#include "json.hpp"

namespace shifted {

std::string edge_label(int index, bool primed) { return std::to_string(index) + (primed ? "'" : ""); }

CrystalGraph::CrystalGraph(int n) : n_(n) {
  if (n < 1) throw MalformedGraph("alphabet bound must be at least 1");
}

std::size_t CrystalGraph::slot(int v, int i, bool primed) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) throw MalformedGraph("unknown vertex " + std::to_string(v));
  if (i < 1 || i >= n_) throw InvalidIndex("index " + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
  return (static_cast<std::size_t>(v) * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(i - 1)) * 2 +
         (primed ? 1 : 0);
}

int CrystalGraph::add_vertex(Vertex v) {
  if (v.weight.size() != n_) throw MalformedGraph("weight " + to_string(v.weight) + " has the wrong length");
  vertices_.push_back(std::move(v));
  const std::size_t per = static_cast<std::size_t>(n_ - 1) * 2;
  out_.resize(out_.size() + per);
  in_.resize(in_.size() + per);
  return static_cast<int>(vertices_.size()) - 1;
}

void CrystalGraph::add_edge(const Edge& e) {
  const int V = static_cast<int>(vertices_.size());
  if (e.src < 0 || e.src >= V || e.dst < 0 || e.dst >= V) throw MalformedGraph("edge endpoint out of range");
  if (e.index < 1 || e.index >= n_) throw MalformedGraph("edge index " + std::to_string(e.index) + " out of range");
  edges_.push_back(e);
  out_[slot(e.src, e.index, e.primed)].push_back(e.dst);
  in_[slot(e.dst, e.index, e.primed)].push_back(e.src);
}

void CrystalGraph::remove_edge(std::size_t k) {
  const Edge e = edges_.at(k);
  auto drop = [](std::vector<int>& v, int x) { v.erase(std::find(v.begin(), v.end(), x)); };
  drop(out_[slot(e.src, e.index, e.primed)], e.dst);
  drop(in_[slot(e.dst, e.index, e.primed)], e.src);
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(k));
}

void CrystalGraph::replace_edge(std::size_t k, const Edge& e) {
  remove_edge(k);
  add_edge(e);
  std::rotate(edges_.begin() + static_cast<std::ptrdiff_t>(k), edges_.end() - 1, edges_.end());
}

std::optional<int> CrystalGraph::f(int v, int i, bool primed) const {
  const auto& o = out(v, i, primed);
  if (o.empty()) return std::nullopt;
  return o.front();
}

std::optional<int> CrystalGraph::e(int v, int i, bool primed) const {
  const auto& o = in(v, i, primed);
  if (o.empty()) return std::nullopt;
  return o.front();
}

std::optional<int> CrystalGraph::find(const Word& w) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (vertices_[k].word == w) return static_cast<int>(k);
  return std::nullopt;
}

bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
  if (a.n_ != b.n_ || a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t k = 0; k < a.vertices_.size(); ++k) {
    if (a.vertices_[k].word != b.vertices_[k].word) return false;
    if (a.vertices_[k].weight != b.vertices_[k].weight) return false;
  }
  auto key = [](const Edge& e) { return std::tuple(e.src, e.dst, e.index, e.primed); };
  std::vector<std::tuple<int, int, int, bool>> ea, eb;
  for (const auto& e : a.edges_) ea.push_back(key(e));
  for (const auto& e : b.edges_) eb.push_back(key(e));
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

namespace {

struct VertexArrows {
  // [i-1][primed] target words
  std::vector<std::array<std::optional<Word>, 2>> down, up;
};

VertexArrows arrows_of(const ShiftedTableau& t, int n) {
  VertexArrows a;
  for (int i = 1; i < n; ++i) {
    std::array<std::optional<Word>, 2> d, u;
    for (int p = 0; p < 2; ++p) {
      const bool pr = p == 1;
      if (auto r = apply_to_tableau({pr ? Family::Fprime : Family::F, i}, t)) d[p] = reading_word(*r);
      if (auto r = apply_to_tableau({pr ? Family::Eprime : Family::E, i}, t)) u[p] = reading_word(*r);
    }
    a.down.push_back(std::move(d));
    a.up.push_back(std::move(u));
  }
  return a;
}

}  // namespace

CrystalGraph build_graph(const SkewShape& shape, int n, int jobs) {
  const auto tableaux = enumerate_tableaux(shape, n);
  CrystalGraph g(n);
  g.shape = shape;
  std::map<Word, int> ids;
  for (const auto& t : tableaux) {
    Word w = reading_word(t);
    ids.emplace(w, g.add_vertex({w, weight(t)}));
  }

  std::vector<VertexArrows> arrows(tableaux.size());
  jobs = std::max(1, jobs);
  if (jobs == 1 || tableaux.size() < 64) {
    for (std::size_t k = 0; k < tableaux.size(); ++k) arrows[k] = arrows_of(tableaux[k], n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          for (std::size_t k = static_cast<std::size_t>(j); k < tableaux.size(); k += static_cast<std::size_t>(jobs))
            arrows[k] = arrows_of(tableaux[k], n);
        } catch (...) {
          errors[static_cast<std::size_t>(j)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  auto id_of = [&](const Word& w) {
    auto it = ids.find(w);
    if (it == ids.end()) throw Error("operator left the vertex set: " + to_string(w));
    return it->second;
  };
  std::set<std::tuple<int, int, int, bool>> down, up;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int v = static_cast<int>(k);
    for (int i = 1; i < n; ++i) {
      for (int p = 0; p < 2; ++p) {
        if (const auto& w = arrows[k].down[i - 1][p]) {
          const int u = id_of(*w);
          g.add_edge({v, u, i, p == 1});
          down.emplace(v, u, i, p == 1);
        }
        if (const auto& w = arrows[k].up[i - 1][p]) up.emplace(id_of(*w), v, i, p == 1);
      }
    }
  }
  if (down != up) throw Error("raising operators are not the reverse of the lowering operators on " + to_string(shape));
  return g;
}

ShiftedTableau tableau_of(const CrystalGraph& g, int v) {
  if (!g.shape || !g.vertex(v).word) throw Error("graph carries no tableaux");
  return ShiftedTableau(*g.shape, *g.vertex(v).word);
}

std::vector<std::vector<int>> component_ids(const CrystalGraph& g) {
  const int V = static_cast<int>(g.size());
  std::vector<int> comp(static_cast<std::size_t>(V), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
  for (const auto& e : g.edges()) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < V; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < members.size(); ++h)
      for (int u : adj[members[h]])
        if (comp[u] < 0) {
          comp[u] = comp[s];
          members.push_back(u);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

CrystalGraph induced_subgraph(const CrystalGraph& g, const std::vector<int>& ids) {
  CrystalGraph sub(g.alphabet());
  sub.shape = g.shape;
  std::map<int, int> local;
  for (int v : ids) {
    local[v] = sub.add_vertex(g.vertex(v));
    sub.origin.push_back(g.origin.empty() ? v : g.origin[v]);
  }
  for (const auto& e : g.edges()) {
    auto a = local.find(e.src), b = local.find(e.dst);
    if (a != local.end() && b != local.end()) sub.add_edge({a->second, b->second, e.index, e.primed});
  }
  return sub;
}

std::vector<CrystalGraph> components(const CrystalGraph& g) {
  std::vector<CrystalGraph> out;
  for (const auto& ids : component_ids(g)) out.push_back(induced_subgraph(g, ids));
  return out;
}

CrystalGraph disjoint_union(const CrystalGraph& a, const CrystalGraph& b) {
  if (a.alphabet() != b.alphabet()) throw MalformedGraph("alphabet mismatch in union");
  CrystalGraph u(a.alphabet());
  for (const auto& v : a.vertices()) u.add_vertex(v);
  for (const auto& v : b.vertices()) u.add_vertex(v);
  const int shift = static_cast<int>(a.size());
  for (const auto& e : a.edges()) u.add_edge(e);
  for (const auto& e : b.edges()) u.add_edge({e.src + shift, e.dst + shift, e.index, e.primed});
  return u;
}

std::string to_string(const StringStats& s) {
  return "eps=" + std::to_string(s.eps) + " phi=" + std::to_string(s.phi) + " eps'=" + std::to_string(s.eps_prime) +
         " phi'=" + std::to_string(s.phi_prime) + " eps^=" + std::to_string(s.eps_hat) +
         " phi^=" + std::to_string(s.phi_hat);
}

namespace {

struct Step {
  int to;
  bool primed;
  bool unprimed;
};

// Merged parallel i/i' edges leaving v (down) or entering v (up).
std::vector<Step> steps(const CrystalGraph& g, int v, int i, bool down) {
  std::map<int, Step> m;
  for (int p = 0; p < 2; ++p) {
    const auto& nb = down ? g.out(v, i, p == 1) : g.in(v, i, p == 1);
    for (int u : nb) {
      auto& s = m.try_emplace(u, Step{u, false, false}).first->second;
      (p == 1 ? s.primed : s.unprimed) = true;
    }
  }
  std::vector<Step> out;
  for (auto& [k, s] : m) out.push_back(s);
  return out;
}

// Shortest walk in steps to a vertex with no further steps: {total, primed, unprimed}.
std::array<int, 3> distance_to_end(const CrystalGraph& g, int v, int i, bool down) {
  std::map<int, std::pair<int, Step>> parent;  // vertex -> (previous, step taken)
  std::deque<int> queue{v};
  parent.emplace(v, std::pair{-1, Step{v, false, false}});
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    auto st = steps(g, u, i, down);
    if (st.empty()) {
      std::array<int, 3> r{0, 0, 0};
      for (int c = u; c != v;) {
        const auto& [prev, s] = parent.at(c);
        ++r[0];
        r[1] += s.primed;
        r[2] += s.unprimed;
        c = prev;
      }
      return r;
    }
    for (const auto& s : st) {
      if (parent.count(s.to)) continue;
      parent.emplace(s.to, std::pair{u, s});
      queue.push_back(s.to);
    }
  }
  return {-1, -1, -1};
}

std::vector<int> string_component(const CrystalGraph& g, int v, int i) {
  std::vector<int> members{v};
  std::set<int> seen{v};
  for (std::size_t h = 0; h < members.size(); ++h) {
    for (bool down : {true, false})
      for (const auto& s : steps(g, members[h], i, down))
        if (seen.insert(s.to).second) members.push_back(s.to);
  }
  return members;
}

std::optional<StringShape> classify_members(const CrystalGraph& g, const std::vector<int>& members, int i) {
  std::size_t edge_count = 0;
  std::vector<int> sources;
  for (int u : members) {
    edge_count += g.out(u, i, false).size() + g.out(u, i, true).size();
    if (g.in(u, i, false).empty() && g.in(u, i, true).empty()) sources.push_back(u);
  }
  if (sources.size() != 1) return std::nullopt;
  const int top = sources.front();
  const std::size_t V = members.size();

  // Collapsed: every step carries both an i and an i' edge.
  {
    StringShape s{StringKind::Collapsed, {top}, {}};
    std::set<int> seen{top};
    bool ok = true;
    for (int u = top;;) {
      const auto& a = g.out(u, i, false);
      const auto& b = g.out(u, i, true);
      if (a.empty() && b.empty()) break;
      if (a.size() != 1 || b.size() != 1 || a[0] != b[0] || !seen.insert(a[0]).second) {
        ok = false;
        break;
      }
      u = a[0];
      s.upper.push_back(u);
    }
    if (ok && s.upper.size() == V && edge_count == 2 * (V - 1)) return s;
  }

  // Separated: two unprimed chains joined rung by rung by primed edges.
  {
    const auto& rung = g.out(top, i, true);
    if (rung.size() != 1) return std::nullopt;
    StringShape s{StringKind::Separated, {}, {}};
    std::set<int> seen;
    auto chain = [&](int start, std::vector<int>& out) {
      for (int u = start;;) {
        if (!seen.insert(u).second) return false;
        out.push_back(u);
        const auto& a = g.out(u, i, false);
        if (a.empty()) return true;
        if (a.size() != 1) return false;
        u = a[0];
      }
    };
    if (!chain(top, s.upper) || !chain(rung[0], s.lower)) return std::nullopt;
    const std::size_t k1 = s.upper.size();
    if (s.lower.size() != k1 || 2 * k1 != V || edge_count != 3 * k1 - 2) return std::nullopt;
    for (std::size_t t = 0; t < k1; ++t) {
      const auto& r = g.out(s.upper[t], i, true);
      if (r.size() != 1 || r[0] != s.lower[t]) return std::nullopt;
      if (!g.out(s.lower[t], i, true).empty()) return std::nullopt;
    }
    return s;
  }
}

}  // namespace

StringStats string_stats(const CrystalGraph& g, int v, int i) {
  const auto up = distance_to_end(g, v, i, false);
  const auto down = distance_to_end(g, v, i, true);
  return {up[0], down[0], up[1], down[1], up[2], down[2]};
}

std::optional<StringShape> try_classify_string(const CrystalGraph& g, int v, int i) {
  return classify_members(g, string_component(g, v, i), i);
}

StringShape classify_string(const CrystalGraph& g, int v, int i) {
  auto s = try_classify_string(g, v, i);
  if (!s) throw NotAString("the " + edge_label(i, false) + "-string through vertex " + std::to_string(v) +
                           " is neither separated nor collapsed");
  return *s;
}

GraphStats::GraphStats(const CrystalGraph& g) : stride_(static_cast<std::size_t>(std::max(g.alphabet() - 1, 0))) {
  stats_.resize(g.size() * stride_);
  comp_.assign(g.size() * stride_, -1);
  for (int i = 1; i < g.alphabet(); ++i) {
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      if (comp_[idx(v, i)] >= 0) continue;
      const auto members = string_component(g, v, i);
      const int id = static_cast<int>(shapes_.size());
      shapes_.push_back(classify_members(g, members, i));
      roots_.push_back(v);
      for (int u : members) {
        comp_[idx(u, i)] = id;
        stats_[idx(u, i)] = string_stats(g, u, i);
      }
    }
  }
}

bool GraphStats::collapsed(int v, int i) const {
  const auto& s = shape(v, i);
  return s && s->kind == StringKind::Collapsed;
}

bool GraphStats::separated(int v, int i) const {
  const auto& s = shape(v, i);
  return s && s->kind == StringKind::Separated;
}

int highest_weight(const CrystalGraph& c) {
  std::vector<int> sources;
  for (int v = 0; v < static_cast<int>(c.size()); ++v) {
    bool any = false;
    for (int i = 1; i < c.alphabet() && !any; ++i) any = !c.in(v, i, false).empty() || !c.in(v, i, true).empty();
    if (!any) sources.push_back(v);
  }
  if (sources.size() != 1)
    throw NotUnique("component has " + std::to_string(sources.size()) + " vertices without incoming edges");
  const int g = sources.front();
  if (!is_strict_weight(c.vertex(g).weight))
    throw NotStrictWeight("highest weight " + to_string(c.vertex(g).weight) + " is not a strict partition");
  return g;
}

std::optional<std::vector<int>> component_isomorphic(const CrystalGraph& c1, const CrystalGraph& c2) {
  if (c1.alphabet() != c2.alphabet() || c1.size() != c2.size()) return std::nullopt;
  int g1, g2;
  try {
    g1 = highest_weight(c1);
    g2 = highest_weight(c2);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (c1.vertex(g1).weight != c2.vertex(g2).weight) return std::nullopt;
  const int n = c1.alphabet();
  const GraphStats s1(c1), s2(c2);
  std::vector<int> map(c1.size(), -1), back(c2.size(), -1);
  std::deque<int> queue{g1};
  map[g1] = g2;
  back[g2] = g1;
  std::size_t mapped = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int u2 = map[u];
    if (c1.vertex(u).weight != c2.vertex(u2).weight) return std::nullopt;
    for (int i = 1; i < n; ++i) {
      if (s1.at(u, i) != s2.at(u2, i)) return std::nullopt;
      for (bool p : {false, true}) {
        const auto& a = c1.out(u, i, p);
        const auto& b = c2.out(u2, i, p);
        if (a.size() != b.size() || a.size() > 1) return std::nullopt;
        if (a.empty()) continue;
        const int x = a[0], y = b[0];
        if (map[x] < 0 && back[y] < 0) {
          map[x] = y;
          back[y] = x;
          ++mapped;
          queue.push_back(x);
        } else if (map[x] != y) {
          return std::nullopt;
        }
      }
    }
  }
  if (mapped != c1.size()) return std::nullopt;
  return map;
}

std::string export_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& v = g.vertices()[k];
    std::string label = v.word ? to_string(*v.word) : "v" + std::to_string(k);
    label += "\\n" + to_string(v.weight);
    out += "  v" + std::to_string(k) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) + " [label=\"" +
           edge_label(e.index, e.primed) + "\"" + (e.primed ? ", style=dashed" : "") + "];\n";
  }
  return out + "}\n";
}

std::string export_json(const CrystalGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.alphabet();
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& v = g.vertices()[k];
    nlohmann::ordered_json o;
    o["id"] = k;
    o["word"] = v.word ? nlohmann::ordered_json(to_string(*v.word)) : nlohmann::ordered_json(nullptr);
    o["weight"] = v.weight.counts;
    j["vertices"].push_back(std::move(o));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"index", e.index}, {"primed", e.primed}});
  return j.dump(2) + "\n";
}

CrystalGraph import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto& verts = j.at("vertices");
    if (!verts.is_array()) throw MalformedGraph("vertices must be an array");
    int n = 0;
    if (j.contains("n")) {
      n = j.at("n").get<int>();
    } else if (!verts.empty()) {
      n = static_cast<int>(verts.at(0).at("weight").size());
    } else {
      n = 1;
    }
    CrystalGraph g(n);
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const auto& v = verts[k];
      if (v.at("id").get<long long>() != static_cast<long long>(k))
        throw MalformedGraph("vertex ids must be 0..V-1 in order");
      Vertex x;
      x.weight = WeightVector(v.at("weight").get<std::vector<int>>());
      for (int c : x.weight.counts)
        if (c < 0) throw MalformedGraph("negative weight entry at vertex " + std::to_string(k));
      if (v.contains("word") && !v.at("word").is_null()) {
        x.word = canonicalize(parse_raw_word(v.at("word").get<std::string>(), n));
        if (weight(*x.word) != x.weight) throw MalformedGraph("vertex " + std::to_string(k) + " word and weight disagree");
      }
      g.add_vertex(std::move(x));
    }
    if (j.contains("edges"))
      for (const auto& e : j.at("edges"))
        g.add_edge({e.at("src").get<int>(), e.at("dst").get<int>(), e.at("index").get<int>(), e.at("primed").get<bool>()});
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedGraph(std::string("bad graph JSON: ") + e.what());
  } catch (const ParseError& e) {
    throw MalformedGraph(std::string("bad word in graph JSON: ") + e.what());
  }
}

}  // namespace shifted
