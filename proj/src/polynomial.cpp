#include "shifted/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace shifted {

Polynomial Polynomial::monomial(const Exponent& e, long long coeff) {
  Polynomial p(static_cast<int>(e.size()));
  return p.add(e, coeff);
}

void Polynomial::check(const Exponent& e) const {
  if (static_cast<int>(e.size()) != n_)
    throw Error("exponent of length " + std::to_string(e.size()) + " in a polynomial in " + std::to_string(n_) +
                " variables");
}

long long Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

Polynomial& Polynomial::add(const Exponent& e, long long coeff) {
  check(e);
  if (coeff == 0) return *this;
  auto [it, fresh] = terms_.try_emplace(e, coeff);
  if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw Error("adding polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw Error("subtracting polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(long long c) {
  if (c == 0) terms_.clear();
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw Error("multiplying polynomials in different numbers of variables");
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add(e, ca * cb);
    }
  return out;
}

bool Polynomial::is_symmetric() const {
  for (int k = 0; k + 1 < n_; ++k)
    for (const auto& [e, c] : terms_) {
      Exponent s = e;
      std::swap(s[k], s[k + 1]);
      if (coefficient(s) != c) return false;
    }
  return true;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    long long a = c;
    if (!out.empty()) {
      out += a < 0 ? " - " : " + ";
      a = a < 0 ? -a : a;
    } else if (a < 0) {
      out += "-";
      a = -a;
    }
    if (mono.empty()) out += std::to_string(a);
    else out += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return out;
}

Polynomial genfun(const std::vector<ShiftedTableau>& tableaux, int n) {
  Polynomial p(n);
  for (const auto& t : tableaux) p.add(weight(t).counts, 1);
  return p;
}

Polynomial support_weighted_genfun(const std::vector<ShiftedTableau>& tableaux, int n) {
  Polynomial p(n);
  for (const auto& t : tableaux) {
    const auto& c = weight(t).counts;
    p.add(c, 1LL << std::count_if(c.begin(), c.end(), [](int x) { return x > 0; }));
  }
  return p;
}

namespace {

// Letters coded 2v-1 for v' and 2v for v.
void fill(const StrictPartition& sigma, int n, bool diagonal_primes, std::size_t row, int col,
          std::vector<std::vector<int>>& rows, std::vector<int>& exponent, Polynomial& out) {
  if (row == sigma.parts().size()) {
    out.add(exponent, 1);
    return;
  }
  const int len = sigma.parts()[row];
  if (col == static_cast<int>(row) + len) {
    fill(sigma, n, diagonal_primes, row + 1, static_cast<int>(row) + 1, rows, exponent, out);
    return;
  }
  const int k = col - static_cast<int>(row);
  for (int code = 1; code <= 2 * n; ++code) {
    const bool primed = code % 2 == 1;
    if (primed && k == 0 && !diagonal_primes) continue;
    if (k > 0) {
      const int left = rows[row][k - 1];
      if (code < left || (code == left && primed)) continue;
    }
    if (row > 0) {
      const int up = rows[row - 1][col - static_cast<int>(row) + 1];
      if (code < up || (code == up && !primed)) continue;
    }
    rows[row].push_back(code);
    ++exponent[(code + 1) / 2 - 1];
    fill(sigma, n, diagonal_primes, row, col + 1, rows, exponent, out);
    --exponent[(code + 1) / 2 - 1];
    rows[row].pop_back();
  }
}

Polynomial fillings(const StrictPartition& sigma, int n, bool diagonal_primes) {
  Polynomial out(n);
  std::vector<std::vector<int>> rows(sigma.parts().size());
  std::vector<int> exponent(static_cast<std::size_t>(n), 0);
  fill(sigma, n, diagonal_primes, 0, 0, rows, exponent, out);
  return out;
}

}  // namespace

Polynomial schur_P(const StrictPartition& sigma, int n) {
  auto p = fillings(sigma, n, false);
  if (!p.is_symmetric()) throw Error("P" + to_string(sigma) + " is not symmetric");
  return p;
}

Polynomial schur_Q(const StrictPartition& sigma, int n) {
  auto q = fillings(sigma, n, true);
  if (q != schur_P(sigma, n) * (1LL << sigma.length()))
    throw Error("Q" + to_string(sigma) + " is not 2^length times P");
  return q;
}

}  // namespace shifted
