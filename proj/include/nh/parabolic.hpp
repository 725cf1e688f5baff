#pragma once

#include <string>
#include <vector>

#include "nh/nilhecke.hpp"

namespace nh {

// Averaging idempotent e_P = (1/|W_J|) sum_{w in W_J} embed(w). Projects
// C[t] onto the W_J-invariant subring; e_P * e_P = e_P.
NHElement parabolic_idempotent(const NHContextPtr& ctx,
                               const ParabolicSubset& j);

// Element of the corner algebra e_P NH e_P (the model of NH^P). Construction
// verifies the sandwich identity carrier == e_P carrier e_P exactly.
class CornerElement {
 public:
  CornerElement(NHElement carrier, ParabolicSubset j);

  // e_P h e_P for arbitrary h.
  static CornerElement project(const NHElement& h, const ParabolicSubset& j);

  const NHElement& carrier() const { return carrier_; }
  const ParabolicSubset& parabolic() const { return j_; }
  bool is_zero() const { return carrier_.is_zero(); }

  CornerElement operator*(const CornerElement& o) const;
  CornerElement operator+(const CornerElement& o) const;
  bool operator==(const CornerElement& o) const {
    return carrier_ == o.carrier_ && j_ == o.j_;
  }

 private:
  NHElement carrier_;
  ParabolicSubset j_;
};

// Per-generator outcome of the delta_s o e_P = 0 check.
struct DeltaKillsReport {
  std::vector<std::pair<int, bool>> per_generator;
  bool all_zero = true;
};

DeltaKillsReport delta_kills_idempotent_check(const NHContextPtr& ctx,
                                              const ParabolicSubset& j);

// delta_w^P = e_P delta_w e_P for a minimal coset representative w.
CornerElement parabolic_demazure(const NHContextPtr& ctx, const WeylElement& w,
                                 const ParabolicSubset& j);

// Exhaustive W_J x W_J invariance check of an arbitrary NH element.
bool bimodule_invariance_check(const NHElement& h, const ParabolicSubset& j);

// Matrix of a corner element over C[t]^W with respect to a module basis of
// the W_J-invariants; every entry is W-invariant and the reconstruction
// identity h(b_v) = sum_u b_u m_{uv} is re-verified exactly.
struct InvariantMatrix {
  int size = 0;
  std::vector<std::vector<Polynomial>> entries;  // entries[u][v]
  std::vector<Polynomial> basis;
  int degree_bound = 0;

  std::vector<std::vector<Rational>> evaluate_at_zero() const;
  InvariantMatrix operator*(const InvariantMatrix& o) const;
  bool operator==(const InvariantMatrix& o) const {
    return size == o.size && entries == o.entries;
  }
};

struct BasisSpanError : std::runtime_error {
  int degree;
  explicit BasisSpanError(int d)
      : std::runtime_error("module basis fails to span in degree " +
                           std::to_string(d)),
        degree(d) {}
};

InvariantMatrix matrix_rep(const CornerElement& h,
                           const std::vector<Polynomial>& module_basis,
                           int degree_bound);

// Generates corner elements (products of parabolic Demazure elements and
// invariant multiplications), maps them through matrix_rep and entrywise
// evaluation at zero, and reports the dimension of the span in M_r(Q).
struct SpanCheckReport {
  int r = 0;
  int dimension = 0;
  int elements_tried = 0;
  bool full() const { return dimension == r * r; }
};

SpanCheckReport forgetful_span_check(const NHContextPtr& ctx,
                                     const ParabolicSubset& j,
                                     const std::vector<Polynomial>& module_basis,
                                     int degree_bound, int max_word_length);

// Exact degree-truncated independence/spanning experiment for the open
// question: is NH^P free over C[t]^{W_P} with basis delta_w^P, w in W^P?
struct FreenessDegreeRow {
  int degree = 0;
  int kernel_dim = 0;
  int span_count = 0;
  int free_prediction = 0;
};

struct FreenessReport {
  std::string group;
  std::vector<int> parabolic;
  int r = 0;
  std::vector<FreenessDegreeRow> per_degree;
  std::string verdict;
  // When a dependence is found: the smallest-degree witness, as one
  // W_J-invariant coefficient polynomial per minimal coset representative.
  std::vector<std::pair<std::vector<int>, Polynomial>> witness;
  bool independent() const;
};

FreenessReport freeness_experiment(const NHContextPtr& ctx,
                                   const ParabolicSubset& j, int max_degree);

}  // namespace nh
