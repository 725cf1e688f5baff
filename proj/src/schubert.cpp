#include "nh/schubert.hpp"

#include <algorithm>

#include "nh/linalg.hpp"

namespace nh {

std::map<WeylElement, Polynomial> schubert_family(const WeylGroup& type_a,
                                                  Convention conv) {
  if (!type_a.datum().is_permutation_realization())
    throw std::invalid_argument("schubert_family requires a type A group");
  const int n = type_a.vars();
  if (n > 5) throw std::invalid_argument("schubert_family: n <= 5 (desk scale)");
  NHContextPtr ctx = make_context(type_a, conv);

  Monomial staircase(n);
  for (int i = 0; i < n; ++i) staircase.exps[i] = n - 1 - i;

  std::map<WeylElement, Polynomial> family;
  family.emplace(type_a.longest(), Polynomial::from_term(staircase, 1));
  // Descend from the longest element: S_w = delta_i(S_{w s_i}) whenever
  // l(w s_i) = l(w) + 1.
  auto els = type_a.elements();
  std::sort(els.begin(), els.end(), [](const auto& a, const auto& b) {
    return a.length() > b.length();
  });
  for (const auto& w : els) {
    if (family.count(w)) continue;
    for (int i = 1; i <= type_a.rank(); ++i) {
      WeylElement wsi = w * type_a.simple(i);
      if (wsi.length() == w.length() + 1 && family.count(wsi)) {
        family.emplace(w, demazure_apply(*ctx, i, family.at(wsi)));
        break;
      }
    }
  }
  return family;
}

std::vector<Polynomial> invariant_module_basis(const WeylGroup& type_a,
                                               const ParabolicSubset& j) {
  auto family = schubert_family(type_a, Convention::classical);
  std::vector<Polynomial> basis;
  for (const auto& w : type_a.min_coset_reps(j)) basis.push_back(family.at(w));
  return basis;
}

namespace {

// Degreewise free-basis check: the generators (with their invariant
// coefficient ring) must both be independent and span every graded piece.
struct GradedBasisCheck {
  bool ok = true;
  int failed_degree = -1;
  std::string reason;
};

GradedBasisCheck check_graded_free_basis(const WeylGroup& g,
                                         const ParabolicSubset& coeff_j,
                                         const std::vector<Polynomial>& gens,
                                         int max_degree) {
  GradedBasisCheck out;
  const int n = g.vars();
  std::vector<Polynomial> inv = invariant_basis(g, coeff_j, max_degree);
  std::vector<std::vector<Polynomial>> inv_by_degree(max_degree + 1);
  for (const auto& p : inv) inv_by_degree[p.degree()].push_back(p);

  for (int d = 0; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(n, d);
    std::map<Monomial, int, GrlexDesc> midx;
    for (std::size_t c = 0; c < monos.size(); ++c)
      midx.emplace(monos[c], static_cast<int>(c));
    std::vector<Polynomial> columns;
    for (const auto& gen : gens) {
      if (gen.is_zero()) continue;
      int qd = d - gen.degree();
      if (qd < 0 || qd > max_degree) continue;
      for (const auto& b : inv_by_degree[qd]) columns.push_back(gen * b);
    }
    RatMat a(monos.size(), RatVec(columns.size(), Rational(0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [m, coef] : columns[c].terms()) a[midx.at(m)][c] = coef;
    int rank = matrix_rank(a);
    if (rank < static_cast<int>(columns.size())) {
      out.ok = false;
      out.failed_degree = d;
      out.reason = "generators are dependent in degree " + std::to_string(d);
      return out;
    }
    if (rank < static_cast<int>(monos.size())) {
      out.ok = false;
      out.failed_degree = d;
      out.reason = "generators fail to span in degree " + std::to_string(d);
      return out;
    }
  }
  return out;
}

}  // namespace

FlowUpResult flowup_check(const NHContextPtr& ctx, const Polynomial& seed,
                          const ParabolicSubset& j, int max_degree) {
  const WeylGroup& g = ctx->group();
  j.validate(g.rank());
  FlowUpResult res;
  std::vector<Polynomial> gens;
  for (const auto& v : g.parabolic_subgroup(j)) {
    Polynomial dv = delta_w_apply(*ctx, v, seed);
    res.generators.emplace(v, dv);
    if (dv.is_zero()) {
      res.ok = false;
      res.failed_degree = 0;
      res.reason = "delta_v(seed) vanishes for a subgroup element";
      return res;
    }
    gens.push_back(dv);
  }
  auto check = check_graded_free_basis(g, j, gens, max_degree);
  res.ok = check.ok;
  res.failed_degree = check.failed_degree;
  res.reason = check.reason;
  res.valid_degree = check.ok ? max_degree : check.failed_degree - 1;
  return res;
}

CoinvariantResult coinvariant_dimension(const WeylGroup& group,
                                        const ParabolicSubset& j,
                                        int max_degree) {
  const int n = group.vars();
  int top = group.longest().length();
  if (max_degree < top)
    throw std::invalid_argument(
        "coinvariant degree bound below the top coinvariant degree " +
        std::to_string(top));
  ParabolicSubset full_j([&] {
    std::vector<int> all;
    for (int i = 1; i <= group.rank(); ++i) all.push_back(i);
    return all;
  }());

  std::vector<Polynomial> inv_j = invariant_basis(group, j, max_degree);
  std::vector<Polynomial> inv_w = invariant_basis(group, full_j, max_degree);
  std::vector<std::vector<Polynomial>> j_by_degree(max_degree + 1),
      w_by_degree(max_degree + 1);
  for (const auto& p : inv_j) j_by_degree[p.degree()].push_back(p);
  for (const auto& p : inv_w) w_by_degree[p.degree()].push_back(p);

  CoinvariantResult res;
  for (int d = 0; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(n, d);
    std::map<Monomial, int, GrlexDesc> midx;
    for (std::size_t c = 0; c < monos.size(); ++c)
      midx.emplace(monos[c], static_cast<int>(c));
    auto to_vec = [&](const Polynomial& p) {
      RatVec v(monos.size(), Rational(0));
      for (const auto& [m, coef] : p.terms()) v[midx.at(m)] = coef;
      return v;
    };
    // Ideal part in degree d: b * i with b a W_J-invariant of degree d-k and
    // i a positive-degree W-invariant of degree k.
    RatMat ideal_rows;
    for (int k = 1; k <= d; ++k)
      for (const auto& iw : w_by_degree[k])
        for (const auto& bj : j_by_degree[d - k])
          ideal_rows.push_back(to_vec(bj * iw));
    int ideal_rank = ideal_rows.empty() ? 0 : matrix_rank(ideal_rows);
    int inv_dim = static_cast<int>(j_by_degree[d].size());
    res.dims.push_back(inv_dim - ideal_rank);
    res.total += res.dims.back();
  }
  res.stabilized = res.dims.back() == 0;
  return res;
}

}  // namespace nh
