#include "nh/parabolic.hpp"

#include <algorithm>

#include "nh/linalg.hpp"

namespace nh {

NHElement parabolic_idempotent(const NHContextPtr& ctx,
                               const ParabolicSubset& j) {
  j.validate(ctx->group().rank());
  auto wj = ctx->group().parabolic_subgroup(j);
  NHElement sum = NHElement::zero(ctx);
  for (const auto& w : wj) sum += NHElement::embed(ctx, w);
  return sum * Rational(1, static_cast<unsigned long>(wj.size()));
}

CornerElement::CornerElement(NHElement carrier, ParabolicSubset j)
    : carrier_(std::move(carrier)), j_(std::move(j)) {
  NHElement e = parabolic_idempotent(carrier_.context(), j_);
  if (!(e * carrier_ * e == carrier_))
    throw std::invalid_argument(
        "not a corner element: carrier != e_P carrier e_P");
}

CornerElement CornerElement::project(const NHElement& h,
                                     const ParabolicSubset& j) {
  NHElement e = parabolic_idempotent(h.context(), j);
  return CornerElement(e * h * e, j);
}

CornerElement CornerElement::operator*(const CornerElement& o) const {
  if (!(j_ == o.j_))
    throw std::invalid_argument("corner elements over different parabolics");
  return CornerElement(carrier_ * o.carrier_, j_);
}

CornerElement CornerElement::operator+(const CornerElement& o) const {
  if (!(j_ == o.j_))
    throw std::invalid_argument("corner elements over different parabolics");
  return CornerElement(carrier_ + o.carrier_, j_);
}

DeltaKillsReport delta_kills_idempotent_check(const NHContextPtr& ctx,
                                              const ParabolicSubset& j) {
  DeltaKillsReport rep;
  NHElement e = parabolic_idempotent(ctx, j);
  for (int i : j.indices) {
    bool zero = (NHElement::delta(ctx, i) * e).is_zero();
    rep.per_generator.emplace_back(i, zero);
    rep.all_zero = rep.all_zero && zero;
  }
  return rep;
}

CornerElement parabolic_demazure(const NHContextPtr& ctx, const WeylElement& w,
                                 const ParabolicSubset& j) {
  auto reps = ctx->group().min_coset_reps(j);
  if (std::find(reps.begin(), reps.end(), w) == reps.end())
    throw std::invalid_argument(
        "parabolic_demazure: element is not a minimal coset representative");
  NHElement e = parabolic_idempotent(ctx, j);
  return CornerElement(e * NHElement::delta_w(ctx, w) * e, j);
}

bool bimodule_invariance_check(const NHElement& h, const ParabolicSubset& j) {
  auto wj = h.context()->group().parabolic_subgroup(j);
  for (const auto& v : wj)
    for (const auto& w : wj)
      if (!(wp_group_action(v, w, h) == h)) return false;
  return true;
}

std::vector<std::vector<Rational>> InvariantMatrix::evaluate_at_zero() const {
  std::vector<std::vector<Rational>> out(size,
                                         std::vector<Rational>(size, 0));
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v) out[u][v] = entries[u][v].constant_term();
  return out;
}

InvariantMatrix InvariantMatrix::operator*(const InvariantMatrix& o) const {
  InvariantMatrix r;
  r.size = size;
  r.basis = basis;
  r.degree_bound = std::min(degree_bound, o.degree_bound);
  const int nvars = basis.empty() ? 0 : basis[0].vars();
  r.entries.assign(size, std::vector<Polynomial>(size, Polynomial(nvars)));
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v)
      for (int k = 0; k < size; ++k)
        r.entries[u][v] += entries[u][k] * o.entries[k][v];
  return r;
}

InvariantMatrix matrix_rep(const CornerElement& h,
                           const std::vector<Polynomial>& module_basis,
                           int degree_bound) {
  const NHContextPtr& ctx = h.carrier().context();
  const WeylGroup& g = ctx->group();
  const int n = g.vars();
  const int r = static_cast<int>(module_basis.size());

  // Images of the basis under h; the solve must cover their full degree.
  std::vector<Polynomial> images;
  int needed = degree_bound;
  for (const auto& b : module_basis) {
    images.push_back(h.carrier().apply(b));
    needed = std::max(needed, images.back().degree());
  }

  ParabolicSubset full_j([&] {
    std::vector<int> all;
    for (int i = 1; i <= g.rank(); ++i) all.push_back(i);
    return all;
  }());
  std::vector<Polynomial> inv = invariant_basis(g, full_j, needed);
  // Homogeneous invariants grouped by degree.
  std::vector<std::vector<Polynomial>> inv_by_degree(needed + 1);
  for (const auto& p : inv)
    if (!p.is_zero()) inv_by_degree[p.degree()].push_back(p);

  InvariantMatrix out;
  out.size = r;
  out.basis = module_basis;
  out.degree_bound = needed;
  out.entries.assign(r, std::vector<Polynomial>(r, Polynomial(n)));

  for (int v = 0; v < r; ++v) {
    const Polynomial& target = images[v];
    if (target.is_zero()) continue;
    for (int d = 0; d <= target.degree(); ++d) {
      Polynomial td = target.homogeneous_part(d);
      if (td.is_zero()) continue;
      // Solve td = sum_u b_u * q_u with q_u invariant homogeneous of degree
      // d - deg b_u, in monomial coordinates.
      auto monos = monomials_of_degree(n, d);
      std::map<Monomial, int, GrlexDesc> midx;
      for (std::size_t c = 0; c < monos.size(); ++c)
        midx.emplace(monos[c], static_cast<int>(c));
      std::vector<std::pair<int, Polynomial>> columns;  // (basis row u, b_u*I)
      for (int u = 0; u < r; ++u) {
        int qd = d - module_basis[u].degree();
        if (qd < 0 || qd > needed) continue;
        for (const auto& inv_p : inv_by_degree[qd])
          columns.emplace_back(u, module_basis[u] * inv_p);
      }
      RatMat a(monos.size(), RatVec(columns.size(), Rational(0)));
      for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [m, coef] : columns[c].second.terms())
          a[midx.at(m)][c] = coef;
      RatVec b(monos.size(), Rational(0));
      for (const auto& [m, coef] : td.terms()) b[midx.at(m)] = coef;
      auto sol = solve_linear(std::move(a), std::move(b));
      if (!sol) throw BasisSpanError(d);
      // Accumulate the invariant pieces into the matrix entries.
      std::size_t c = 0;
      for (int u = 0; u < r; ++u) {
        int qd = d - module_basis[u].degree();
        if (qd < 0 || qd > needed) continue;
        for (const auto& inv_p : inv_by_degree[qd]) {
          if ((*sol)[c] != 0) out.entries[u][v] += inv_p * (*sol)[c];
          ++c;
        }
      }
    }
  }

  // Reconstruction identity, exact.
  for (int v = 0; v < r; ++v) {
    Polynomial recon(n);
    for (int u = 0; u < r; ++u)
      recon += module_basis[u] * out.entries[u][v];
    if (recon != images[v])
      throw std::logic_error("matrix_rep reconstruction failed");
  }
  return out;
}

SpanCheckReport forgetful_span_check(const NHContextPtr& ctx,
                                     const ParabolicSubset& j,
                                     const std::vector<Polynomial>& module_basis,
                                     int degree_bound, int max_word_length) {
  const WeylGroup& g = ctx->group();
  auto reps = g.min_coset_reps(j);
  const int r = static_cast<int>(reps.size());

  SpanCheckReport rep;
  rep.r = r;

  // Generators: parabolic Demazure elements and sandwiched multiplications by
  // the module basis.
  std::vector<CornerElement> gens;
  for (const auto& w : reps) gens.push_back(parabolic_demazure(ctx, w, j));
  NHElement e = parabolic_idempotent(ctx, j);
  for (const auto& b : module_basis) {
    if (b.degree() <= 0) continue;  // the constant already appears as e_P
    gens.push_back(CornerElement(NHElement::multiplication(ctx, b) * e, j));
  }

  SparseGauss<std::pair<int, int>> gauss;
  auto feed = [&](const CornerElement& c) {
    InvariantMatrix m = matrix_rep(c, module_basis, degree_bound);
    auto vals = m.evaluate_at_zero();
    std::map<std::pair<int, int>, Rational> row;
    for (int u = 0; u < r; ++u)
      for (int v = 0; v < r; ++v)
        if (vals[u][v] != 0) row[{u, v}] = vals[u][v];
    ++rep.elements_tried;
    gauss.add_row(std::move(row));
  };

  // Breadth-first products of generators up to the word-length bound,
  // stopping early once the span is full.
  std::vector<CornerElement> frontier{CornerElement(e, j)};
  feed(frontier[0]);
  for (int len = 1; len <= max_word_length && !rep.full(); ++len) {
    std::vector<CornerElement> next;
    for (const auto& x : frontier) {
      for (const auto& gen : gens) {
        if (gauss.rank() == r * r) break;
        CornerElement prod = x * gen;
        if (prod.is_zero()) continue;
        feed(prod);
        next.push_back(prod);
      }
      rep.dimension = gauss.rank();
      if (rep.full()) break;
    }
    frontier = std::move(next);
    rep.dimension = gauss.rank();
  }
  rep.dimension = gauss.rank();
  return rep;
}

bool FreenessReport::independent() const {
  for (const auto& row : per_degree)
    if (row.kernel_dim != 0) return false;
  return true;
}

FreenessReport freeness_experiment(const NHContextPtr& ctx,
                                   const ParabolicSubset& j, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  const WeylGroup& g = ctx->group();
  auto reps = g.min_coset_reps(j);

  FreenessReport report;
  report.group = g.datum().name;
  report.parabolic = j.indices;
  report.r = static_cast<int>(reps.size());

  // delta_w^P for each minimal representative, precomputed once.
  std::vector<NHElement> dwp;
  for (const auto& w : reps)
    dwp.push_back(parabolic_demazure(ctx, w, j).carrier());

  // Homogeneous W_J-invariant coefficients of degree <= max_degree.
  std::vector<Polynomial> inv = invariant_basis(g, j, max_degree);

  // Row (w, B): normal form of delta_w^P o (B .); homogeneous of operator
  // degree deg B - l(w), so the kernel splits along that grading.
  struct Row {
    int rep;
    int inv_index;
    int degree;    // deg B
    int op_degree; // deg B - l(w)
    std::map<std::pair<std::size_t, Monomial>, Rational> coords;
  };
  std::vector<Row> rows;
  for (std::size_t wi = 0; wi < reps.size(); ++wi) {
    for (std::size_t bi = 0; bi < inv.size(); ++bi) {
      NHElement el = dwp[wi] * NHElement::multiplication(ctx, inv[bi]);
      Row row;
      row.rep = static_cast<int>(wi);
      row.inv_index = static_cast<int>(bi);
      row.degree = inv[bi].degree();
      row.op_degree = row.degree - reps[wi].length();
      for (const auto& [u, c] : el.coeffs())
        for (const auto& [m, coef] : c.terms())
          row.coords[{u.index(), m}] = coef;
      rows.push_back(std::move(row));
    }
  }

  for (int d = 1; d <= max_degree; ++d) {
    // All rows with deg B <= d, grouped by operator degree.
    std::map<int, std::vector<const Row*>> blocks;
    for (const auto& row : rows)
      if (row.degree <= d) blocks[row.op_degree].push_back(&row);
    FreenessDegreeRow out;
    out.degree = d;
    for (const auto& [g_, block] : blocks) {
      SparseGauss<std::pair<std::size_t, Monomial>> gauss;
      std::vector<const Row*> fed;
      for (const Row* row : block) {
        auto combo = gauss.add_row(row->coords);
        fed.push_back(row);
        if (combo && report.witness.empty()) {
          // First dependence found: reconstruct the coefficient tuple.
          std::map<int, Polynomial> per_rep;
          for (std::size_t k = 0; k < combo->size(); ++k) {
            if ((*combo)[k] == 0) continue;
            const Row* rk = fed[k];
            auto [it, ins] =
                per_rep.try_emplace(rk->rep, Polynomial(g.vars()));
            it->second += inv[rk->inv_index] * (*combo)[k];
          }
          for (const auto& [ri, poly] : per_rep)
            report.witness.emplace_back(reps[ri].reduced_word(), poly);
        }
      }
      out.kernel_dim += gauss.rows_added() - gauss.rank();
      out.span_count += gauss.rank();
      out.free_prediction += gauss.rows_added();
    }
    report.per_degree.push_back(out);
  }

  if (report.independent()) {
    report.verdict =
        "independent up to degree " + std::to_string(max_degree);
  } else {
    int first = 0;
    for (const auto& row : report.per_degree)
      if (row.kernel_dim > 0) {
        first = row.degree;
        break;
      }
    report.verdict = "dependence found at degree " + std::to_string(first) +
                     " (witness attached)";
  }
  return report;
}

}  // namespace nh
