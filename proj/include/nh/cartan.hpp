#pragma once

#include <string>
#include <vector>

#include "nh/polynomial.hpp"

namespace nh {

// Realization of a finite crystallographic root datum on an ambient space of
// polynomial variables t_1..t_n: simple roots as linear forms and the simple
// reflections as linear substitutions, satisfying s_i(alpha_i) = -alpha_i.
//
// Two constructions are shipped: type A_r on r+1 variables (permutation
// action, GL conventions), and a generic realization on r variables in
// fundamental-weight coordinates from an explicit Cartan matrix.
struct CartanDatum {
  std::string name;
  int rank = 0;
  int nvars = 0;
  std::vector<std::vector<int>> cartan;   // a_ij = <alpha_j, alpha_i^vee>
  std::vector<LinearForm> simple_roots;   // alpha_i, 1-based index i-1
  // reflection_action[i][j] = s_{i+1}(t_{j+1}) as a linear form.
  std::vector<std::vector<LinearForm>> reflection_action;
  // For permutation realizations: perm[i][j-1] is the 1-based image of t_j
  // under s_{i+1}; empty when the action is not a variable permutation.
  std::vector<std::vector<int>> perms;

  static CartanDatum type_a(int rank);
  static CartanDatum from_cartan_matrix(std::vector<std::vector<int>> a,
                                        std::string name = "");
  // "A<k>" for any k >= 1, "B2"/"C2"/"G2" and "B3"/"C3"/"B4"/"C4"/"D4" via
  // built-in Cartan matrices.
  static CartanDatum named(const std::string& spec);

  const LinearForm& root(int i) const { return simple_roots.at(i - 1); }
  bool is_permutation_realization() const { return !perms.empty(); }

  // Validates diagonal entries, root/action consistency; throws on failure.
  void validate() const;
};

}  // namespace nh
