#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nh/weyl.hpp"

namespace nh {

// Tuple of polynomials indexed by the minimal coset representatives W^P,
// the GKM presentation of H_T^*(G/P).
struct GKMClass {
  ParabolicSubset parabolic;
  std::map<WeylElement, Polynomial> values;

  const Polynomial& at(const WeylElement& w) const { return values.at(w); }
};

// Witnessed membership result; (w, s) identifies the violated edge when
// member is false.
struct GKMMemberReport {
  bool member = true;
  std::vector<int> witness_rep;  // reduced word of the violating w
  int witness_s = 0;
};

// Edge conditions of the presentation: for every simple s and representative
// w, the value at w minus the value at the minimal representative of s*w must
// be exactly divisible by alpha_s. Throws on a wrong index set.
GKMMemberReport gkm_member(const WeylGroup& group, const GKMClass& p);

// Full divisibility conditions of the localization image (all reflections
// t_beta, right edges w vs w t_beta, label w(beta)). Strictly stronger than
// gkm_member; used to generate honest test classes. Full flag only.
bool gkm_member_strong(const WeylGroup& group, const GKMClass& p);

struct GKMDivisionError : std::runtime_error {
  std::vector<int> witness_rep;
  int witness_s;
  GKMDivisionError(std::string msg, std::vector<int> rep, int s)
      : std::runtime_error(std::move(msg)),
        witness_rep(std::move(rep)),
        witness_s(s) {}
};

// Kostant-Kumar divided difference on the full flag:
//   (p_{w s} - p_w) / w(alpha_s) per coordinate.
// Division failures and output-membership failures throw GKMDivisionError;
// they are closure violations, never silently accepted.
GKMClass kk_apply(const WeylGroup& group, int i, const GKMClass& p);

// Literal Tymoczko formula ((p_w - s(p_w)) / alpha_s) per coordinate, on any
// parabolic. The output is NOT asserted to be a GKM class; membership is
// tested and reported alongside the raw tuple.
struct TymReport {
  std::vector<Polynomial> tuple;  // ordered like min_coset_reps
  GKMMemberReport membership;
};

TymReport tym_apply_literal(const WeylGroup& group, int i, const GKMClass& p);

// Corrected variant (p_w - s(p_{s w})) / alpha_s on the full flag; output is
// membership-checked (throws GKMDivisionError on closure failure).
GKMClass tym_apply_corrected(const WeylGroup& group, int i, const GKMClass& p);

// Exact fraction with the denominator kept as an explicit multiset of linear
// (root) factors; cancellation always goes through verified exact division.
class RootFraction {
 public:
  RootFraction() = default;
  explicit RootFraction(Polynomial num) : num_(std::move(num)) {}
  RootFraction(Polynomial num, std::vector<LinearForm> den);

  const Polynomial& numerator() const { return num_; }
  const std::vector<LinearForm>& denominator_factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RootFraction operator+(const RootFraction& o) const;
  RootFraction operator-() const;
  RootFraction scale(const Polynomial& f) const;
  RootFraction divide_by(const LinearForm& l) const;
  // Exact equality via cross multiplication.
  bool operator==(const RootFraction& o) const;

 private:
  void cancel();
  Polynomial num_;
  std::vector<LinearForm> den_;  // kept sorted
};

// Vector in the localized module (+)_w K psi_w, K = Quot(C[t]).
struct FixedPointVector {
  std::map<WeylElement, RootFraction> values;

  bool is_zero() const;
  bool operator==(const FixedPointVector& o) const;
};

// K-linear extension of delta_s(lambda psi_w) = (lambda psi_{ws} - lambda
// psi_w) / w(alpha_s).
FixedPointVector localized_apply(const WeylGroup& group, int i,
                                 const FixedPointVector& v);

// Spanning family of honest (strong-membership) classes of degree <= degree:
// tuples (g * w(m))_w for monomials g, m with deg g + deg m <= degree. On a
// partial flag m runs over W_J-invariants instead.
std::vector<GKMClass> gkm_spanning_classes(const WeylGroup& group,
                                           const ParabolicSubset& j,
                                           int degree);

}  // namespace nh
