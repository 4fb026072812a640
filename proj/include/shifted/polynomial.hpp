#pragma once

#include <map>
#include <string>
#include <vector>

#include "shifted/tableau.hpp"

namespace shifted {

// Integer polynomial in x_1..x_n; exponent vectors have length n.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int n = 0) : n_(n) {}
  static Polynomial monomial(const Exponent& e, long long coeff = 1);

  int variables() const noexcept { return n_; }
  const std::map<Exponent, long long>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  long long coefficient(const Exponent& e) const;

  Polynomial& add(const Exponent& e, long long coeff);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(long long c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, long long c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Invariant under every permutation of the variables.
  bool is_symmetric() const;

 private:
  void check(const Exponent& e) const;
  int n_;
  std::map<Exponent, long long> terms_;
};

// Highest exponent first, e.g. "x1^2*x2 + 2*x1*x2^2"; "0" when empty.
std::string to_string(const Polynomial& p);

Polynomial genfun(const std::vector<ShiftedTableau>& tableaux, int n);
// Each tableau weighted by 2^(number of nonzero weight entries).
Polynomial support_weighted_genfun(const std::vector<ShiftedTableau>& tableaux, int n);

// Brute force over fillings of the shifted diagram of sigma by 1' < 1 < ... < n'
// < n, weakly increasing along rows and columns, with each unprimed value at
// most once per column and each primed value at most once per row. P keeps
// the diagonal unprimed, Q does not; Q is checked against 2^length * P.
Polynomial schur_P(const StrictPartition& sigma, int n);
Polynomial schur_Q(const StrictPartition& sigma, int n);

}  // namespace shifted
