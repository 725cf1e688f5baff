#pragma once

#include <map>
#include <string>
#include <vector>

#include "nh/parabolic.hpp"

namespace nh {

// Configuration of the two-vertex quiver example on C[t_1..t_d], d = d1+d2.
// The three index sets admit several plausible readings (and only some keep
// the idempotent prefactor 1/((d2-1)! d1!) equal to 1/|W_P|), so all of them
// are parameters; the defaults are the internally consistent choice.
struct ReinekeConfig {
  int d1 = 1;
  int d2 = 2;
  std::vector<int> euler_range;        // variable indices j in theta's product
  std::vector<int> delta_indices;      // Demazure generator indices
  std::vector<int> parabolic_indices;  // generators of W_P

  static ReinekeConfig defaults(int d1, int d2);

  int d() const { return d1 + d2; }
  // (d2-1)! * d1!, the denominator of the stated idempotent prefactor.
  unsigned long paper_prefactor_denominator() const;
  // Order of the subgroup generated by the parabolic indices (product of
  // factorials over consecutive runs).
  unsigned long parabolic_order() const;
  bool prefactor_consistent() const {
    return paper_prefactor_denominator() == parabolic_order();
  }

  void validate() const;
};

// Generators as named NH elements over A_{d-1} data on d variables:
// "t1".."td", "d<i>" for i in delta_indices, and "theta".
std::map<std::string, NHElement> build_generators(const NHContextPtr& ctx,
                                                  const ReinekeConfig& cfg);

struct IdempotentResult {
  NHElement element;
  unsigned long subgroup_order = 1;
  unsigned long paper_denominator = 1;
  bool consistent = true;
  std::string warning;  // set when a custom parabolic breaks the prefactor
};

IdempotentResult build_idempotent(const NHContextPtr& ctx,
                                  const ReinekeConfig& cfg);

// Outcome of one relation: exactly-zero residual bookkeeping, with the solved
// coefficient polynomials when the relation has unknowns.
struct RelationReport {
  std::string relation;
  bool holds = false;
  std::map<std::string, Polynomial> coefficients;
  NHElement residual;
  bool residual_zero() const { return residual.is_zero(); }
};

std::vector<RelationReport> verify_relations(const NHContextPtr& ctx,
                                             const ReinekeConfig& cfg);

// Span data for the corner-generation claim: words in e_P theta^r e_P and
// e_P delta_2 theta^t e_P, their module span over W_P-invariant
// multiplications, graded dimensions, and a degree-trusted closure check.
struct CornerPresentationReport {
  int length_bound = 0;
  int degree_truncation = 0;
  int words = 0;
  std::vector<std::pair<int, int>> per_degree;  // (operator degree, dim)
  int closure_trusted_degree = 0;
  bool closed = true;
  std::string closure_witness;
};

CornerPresentationReport corner_presentation(const NHContextPtr& ctx,
                                             const ReinekeConfig& cfg,
                                             int length_bound,
                                             int degree_truncation);

// Shared helper (also used by the relation solver in tests): solve
// lhs = sum_j (q_j .) * basis_j for unknown polynomials q_j with an ansatz
// degree raised automatically up to the cap. On failure the returned
// residual is the exact least-squares remainder.
struct LeftCoefficientSolution {
  bool solved = false;
  std::vector<Polynomial> coefficients;
  NHElement residual;
};

LeftCoefficientSolution solve_left_coefficients(
    const NHElement& lhs, const std::vector<NHElement>& basis,
    int ansatz_degree_cap);

}  // namespace nh
