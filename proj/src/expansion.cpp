#include "shifted/expansion.hpp"

#include "json.hpp"

namespace shifted {

std::string to_string(const Expansion& e) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "[" + to_string(it->first) + "] x" + std::to_string(it->second);
  }
  return s;
}

Expansion expand(const SkewShape& shape, int n, int jobs) {
  const auto g = build_graph(shape, n, jobs);
  Expansion e;
  for (const auto& c : components(g)) ++e.terms[partition_of(c.vertex(highest_weight(c)).weight)];
  return e;
}

Convention convention_of(const StrictPartition& sigma, int n) {
  const auto tableaux = enumerate_tableaux(make_skew_shape(sigma), n);
  const auto g = genfun(tableaux, n);
  const auto q = schur_Q(sigma, n);
  return {sigma, g == schur_P(sigma, n), g == q, support_weighted_genfun(tableaux, n) == q};
}

ExpansionReport verify_expansion(const SkewShape& shape, int n, int jobs) {
  ExpansionReport r{shape, n, expand(shape, n, jobs), genfun(enumerate_tableaux(shape, n), n), Polynomial(n), false, {}};
  for (auto it = r.expansion.terms.rbegin(); it != r.expansion.terms.rend(); ++it) {
    r.rhs += genfun(enumerate_tableaux(make_skew_shape(it->first), n), n) * it->second;
    r.conventions.push_back(convention_of(it->first, n));
  }
  r.identity = r.lhs == r.rhs;
  return r;
}

namespace {

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_expansion(const ExpansionReport& r) {
  std::string s = "Q-expansion: " + to_string(r.shape) + " = " + to_string(r.expansion) + " ; identity " +
                  (r.identity ? "OK" : "FAILED") + "\n";
  s += "genfun: " + to_string(r.lhs) + "\n";
  for (const auto& c : r.conventions)
    s += "convention " + to_string(c.sigma) + ": genfun = P " + yes(c.equals_P) + ", genfun = Q " + yes(c.equals_Q) +
         ", support-weighted genfun = Q " + yes(c.weighted_equals_Q) + "\n";
  return s;
}

std::string expansion_json(const ExpansionReport& r) {
  nlohmann::ordered_json j;
  j["shape"] = to_string(r.shape);
  j["n"] = r.n;
  j["expansion"] = nlohmann::ordered_json::array();
  for (auto it = r.expansion.terms.rbegin(); it != r.expansion.terms.rend(); ++it)
    j["expansion"].push_back({{"partition", it->first.parts()}, {"multiplicity", it->second}});
  j["identity"] = r.identity;
  j["genfun"] = to_string(r.lhs);
  j["conventions"] = nlohmann::ordered_json::array();
  for (const auto& c : r.conventions)
    j["conventions"].push_back({{"partition", c.sigma.parts()},
                                {"genfun_equals_P", c.equals_P},
                                {"genfun_equals_Q", c.equals_Q},
                                {"support_weighted_equals_Q", c.weighted_equals_Q}});
  return j.dump(2) + "\n";
}

}  // namespace shifted
