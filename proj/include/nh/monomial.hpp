#pragma once

#include <compare>
#include <numeric>
#include <vector>

namespace nh {

// Exponent vector of a monomial in t_1..t_n. The length always equals the
// ambient variable count of the polynomial it lives in.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(int nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  int vars() const { return static_cast<int>(exps.size()); }
  int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
  bool is_one() const {
    for (int e : exps)
      if (e != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  // Generic container order (not the canonical term order; see GrlexDesc).
  bool operator<(const Monomial& o) const { return exps < o.exps; }
};

// Graded lexicographic, larger first: higher total degree wins, ties broken
// by the earlier variable carrying the higher exponent. Canonical term order
// for storage, printing and hashing.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
  }
};

}  // namespace nh
