#pragma once

#include <map>
#include <string>
#include <vector>

#include "nh/nilhecke.hpp"

namespace nh {

// Schubert polynomial family for S_n (type A_{n-1} on n variables),
// constructed from the staircase monomial t_1^{n-1} t_2^{n-2} ... t_{n-1} by
// divided differences. In the classical convention the w = e entry is 1; the
// paper convention differs by (-1)^{l(w_0)-l(w)} per element.
std::map<WeylElement, Polynomial> schubert_family(const WeylGroup& type_a,
                                                  Convention conv);

// {S_v : v in W^J}: a module basis of the W_J-invariants over the
// W-invariants (classical convention), ordered like min_coset_reps(J).
std::vector<Polynomial> invariant_module_basis(const WeylGroup& type_a,
                                               const ParabolicSubset& j);

// Flow-up family delta_v(seed), v in W_J, with a degreewise exact check that
// it is a free module basis of C[t] over C[t]^{W_J} up to max_degree.
struct FlowUpResult {
  bool ok = false;
  std::map<WeylElement, Polynomial> generators;
  int valid_degree = -1;   // degrees 0..valid_degree verified
  int failed_degree = -1;  // first failing degree when !ok
  std::string reason;
};

FlowUpResult flowup_check(const NHContextPtr& ctx, const Polynomial& seed,
                          const ParabolicSubset& j, int max_degree);

// Graded dimensions of C[t]^{W_J} / (ideal generated by the positive-degree
// W-invariants), computed degreewise by exact linear algebra.
struct CoinvariantResult {
  std::vector<int> dims;  // per degree 0..max_degree
  int total = 0;
  bool stabilized = false;  // the top computed degree came out zero
};

CoinvariantResult coinvariant_dimension(const WeylGroup& group,
                                        const ParabolicSubset& j,
                                        int max_degree);

}  // namespace nh
