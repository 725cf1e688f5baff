#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nh/cartan.hpp"
#include "nh/polynomial.hpp"

namespace nh {

// Subset of simple-reflection indices, 1-based, kept sorted and unique.
struct ParabolicSubset {
  std::vector<int> indices;

  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> idx);

  bool contains(int i) const;
  bool empty() const { return indices.empty(); }
  std::size_t size() const { return indices.size(); }
  void validate(int rank) const;
  bool operator==(const ParabolicSubset& o) const {
    return indices == o.indices;
  }
};

struct GroupTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class WeylGroup;

// Element of a finite Weyl group. The canonical form is the linear action on
// the ambient variables; elements are handles into the enumerated group, so
// equality and ordering are index comparisons.
class WeylElement {
 public:
  WeylElement() = default;

  int length() const;
  // Product of s_{word[0]} ... s_{word[k-1]} equals this element; 1-based.
  const std::vector<int>& reduced_word() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool is_identity() const { return idx_ == 0; }

  // Ring automorphism action on polynomials (t_j |-> w(t_j)).
  Polynomial apply(const Polynomial& f) const;
  LinearForm apply(const LinearForm& l) const;

  // Action matrix on the variable span: image of each t_j, 1-based j order.
  const std::vector<LinearForm>& variable_images() const;

  bool operator==(const WeylElement& o) const;
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const;

  std::size_t index() const { return idx_; }
  WeylGroup group() const;

 private:
  friend class WeylGroup;
  WeylElement(std::shared_ptr<const void> data, std::size_t idx)
      : data_(std::move(data)), idx_(idx) {}

  std::shared_ptr<const void> data_;  // WeylGroup::Data, type-erased
  std::size_t idx_ = 0;
};

// Finite Weyl group enumerated from a Cartan datum by closure under the
// generators, bounded; elements are sorted by (length, action matrix) so
// indices are a canonical order.
class WeylGroup {
 public:
  WeylGroup() = default;
  explicit WeylGroup(const CartanDatum& datum,
                     std::size_t bound = 1'000'000);

  const CartanDatum& datum() const;
  int rank() const { return datum().rank; }
  int vars() const { return datum().nvars; }
  std::size_t size() const;

  WeylElement identity() const;
  WeylElement simple(int i) const;  // 1-based
  WeylElement element(std::size_t idx) const;
  std::vector<WeylElement> elements() const;
  WeylElement longest() const { return element(size() - 1); }

  // Composes along a word of 1-based simple indices (left-to-right product).
  WeylElement from_word(const std::vector<int>& word) const;

  // Subgroup generated by {s_j : j in J}, sorted by (length, form).
  std::vector<WeylElement> parabolic_subgroup(const ParabolicSubset& j) const;
  // Unique minimal-length representatives of the left cosets W/W_J, sorted by
  // length; |result| * |W_J| = |W|.
  std::vector<WeylElement> min_coset_reps(const ParabolicSubset& j) const;
  // Minimal representative of the coset w W_J.
  WeylElement coset_min(const WeylElement& w, const ParabolicSubset& j) const;

  // All reflections (conjugates of simple reflections) with a representative
  // positive-direction root for each, as (element, root) pairs.
  std::vector<std::pair<WeylElement, LinearForm>> reflections() const;

  bool same_group(const WeylGroup& o) const { return data_ == o.data_; }

  struct Data;  // opaque; defined in weyl.cpp

 private:
  friend class WeylElement;
  std::shared_ptr<const Data> data_;
};

// Homogeneous basis of the W_J-invariant polynomials of degree <= max_degree,
// computed degreewise as the joint fixed space of the simple reflections in J.
// Elements are ordered by (degree, grlex) and normalized deterministically.
std::vector<Polynomial> invariant_basis(const WeylGroup& group,
                                        const ParabolicSubset& j,
                                        int max_degree);

// All monomials in n variables of total degree exactly d / at most d, in
// grlex-descending order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);

// Type A staircase monomials t^a with 0 <= a_i <= n-i (a free C[t]^W-module
// basis of C[t]); requires a permutation realization.
std::vector<Monomial> staircase_monomials(int nvars);

}  // namespace nh
