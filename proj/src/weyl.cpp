#include "nh/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nh/linalg.hpp"

namespace nh {

ParabolicSubset::ParabolicSubset(std::vector<int> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

void ParabolicSubset::validate(int rank) const {
  for (int i : indices)
    if (i < 1 || i > rank)
      throw std::invalid_argument("parabolic index out of range: " +
                                  std::to_string(i));
}

namespace {

// Action matrix as the tuple of variable images; canonical comparison key.
using ActionMatrix = std::vector<LinearForm>;

ActionMatrix identity_action(int nvars) {
  ActionMatrix m;
  for (int j = 0; j < nvars; ++j) {
    LinearForm img(nvars);
    img.coeffs[j] = 1;
    m.push_back(img);
  }
  return m;
}

// (a o b): apply b's substitution, then a's; image of t_j is a(b(t_j)).
ActionMatrix compose(const ActionMatrix& a, const ActionMatrix& b) {
  const int n = static_cast<int>(a.size());
  ActionMatrix r;
  r.reserve(n);
  for (int j = 0; j < n; ++j) {
    LinearForm img(n);
    for (int k = 0; k < n; ++k) {
      if (b[j].coeffs[k] == 0) continue;
      for (int l = 0; l < n; ++l)
        img.coeffs[l] += b[j].coeffs[k] * a[k].coeffs[l];
    }
    r.push_back(img);
  }
  return r;
}

std::optional<std::vector<int>> as_permutation(const ActionMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n, 0);
  for (int j = 0; j < n; ++j) {
    int image = -1;
    for (int k = 0; k < n; ++k) {
      if (m[j].coeffs[k] == 0) continue;
      if (m[j].coeffs[k] != 1 || image >= 0) return std::nullopt;
      image = k;
    }
    if (image < 0) return std::nullopt;
    perm[j] = image + 1;
  }
  return perm;
}

}  // namespace

struct WeylGroup::Data {
  CartanDatum datum;
  std::vector<ActionMatrix> action;             // per element
  std::vector<std::optional<std::vector<int>>> perm;
  std::vector<int> length;
  std::vector<std::vector<int>> word;           // one reduced word, 1-based
  std::vector<std::vector<std::size_t>> right;  // right[w][i-1] = w*s_i
  std::vector<std::size_t> inverse;
  std::map<ActionMatrix, std::size_t> lookup;
};

WeylGroup::WeylGroup(const CartanDatum& datum, std::size_t bound) {
  datum.validate();
  auto data = std::make_shared<Data>();
  data->datum = datum;
  const int n = datum.nvars;
  const int rank = datum.rank;

  std::vector<ActionMatrix> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(datum.reflection_action[i]);

  // BFS over the Cayley graph (right multiplication); depth equals length.
  struct Node {
    ActionMatrix m;
    int length;
    std::vector<int> word;
  };
  std::map<ActionMatrix, std::size_t> seen;
  std::vector<Node> nodes;
  nodes.push_back({identity_action(n), 0, {}});
  seen.emplace(nodes[0].m, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (int i = 1; i <= rank; ++i) {
      ActionMatrix next = compose(nodes[head].m, gens[i - 1]);
      if (seen.count(next)) continue;
      if (nodes.size() >= bound)
        throw GroupTooLargeError(
            "Weyl group enumeration exceeded the bound of " +
            std::to_string(bound) + " elements (infinite or too large)");
      std::vector<int> w = nodes[head].word;
      w.push_back(i);
      seen.emplace(next, nodes.size());
      nodes.push_back({std::move(next), nodes[head].length + 1, std::move(w)});
    }
  }

  // Canonical order: (length, action matrix).
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].length != nodes[b].length)
      return nodes[a].length < nodes[b].length;
    return nodes[a].m < nodes[b].m;
  });

  const std::size_t count = nodes.size();
  data->action.resize(count);
  data->perm.resize(count);
  data->length.resize(count);
  data->word.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Node& nd = nodes[order[k]];
    data->action[k] = nd.m;
    data->perm[k] = as_permutation(nd.m);
    data->length[k] = nd.length;
    data->word[k] = nd.word;
    data->lookup.emplace(nd.m, k);
  }
  data->right.assign(count, std::vector<std::size_t>(rank));
  for (std::size_t k = 0; k < count; ++k)
    for (int i = 1; i <= rank; ++i)
      data->right[k][i - 1] =
          data->lookup.at(compose(data->action[k], gens[i - 1]));
  data->inverse.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t inv = 0;
    const auto& w = data->word[k];
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      inv = data->right[inv][*it - 1];
    data->inverse[k] = inv;
  }
  data_ = std::move(data);
}

const CartanDatum& WeylGroup::datum() const { return data_->datum; }
std::size_t WeylGroup::size() const { return data_->action.size(); }

WeylElement WeylGroup::identity() const { return element(0); }

WeylElement WeylGroup::simple(int i) const {
  if (i < 1 || i > rank())
    throw std::invalid_argument("simple reflection index out of range: s" +
                                std::to_string(i));
  return element(data_->right[0][i - 1]);
}

WeylElement WeylGroup::element(std::size_t idx) const {
  if (idx >= size()) throw std::out_of_range("Weyl element index");
  return WeylElement(std::static_pointer_cast<const void>(data_), idx);
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(element(k));
  return out;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  std::size_t idx = 0;
  for (int i : word) {
    if (i < 1 || i > rank())
      throw std::invalid_argument("word letter out of range: " +
                                  std::to_string(i));
    idx = data_->right[idx][i - 1];
  }
  return element(idx);
}

std::vector<WeylElement> WeylGroup::parabolic_subgroup(
    const ParabolicSubset& j) const {
  j.validate(rank());
  std::set<std::size_t> seen{0};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t w : frontier)
      for (int i : j.indices) {
        std::size_t u = data_->right[w][i - 1];
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (std::size_t k : seen) out.push_back(element(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> WeylGroup::min_coset_reps(
    const ParabolicSubset& j) const {
  j.validate(rank());
  std::vector<WeylElement> reps;
  for (std::size_t k = 0; k < size(); ++k) {
    bool minimal = true;
    for (int i : j.indices)
      if (data_->length[data_->right[k][i - 1]] < data_->length[k]) {
        minimal = false;
        break;
      }
    if (minimal) reps.push_back(element(k));
  }
  return reps;  // index order is already (length, form) order
}

WeylElement WeylGroup::coset_min(const WeylElement& w,
                                 const ParabolicSubset& j) const {
  std::size_t cur = w.index();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : j.indices) {
      std::size_t next = data_->right[cur][i - 1];
      if (data_->length[next] < data_->length[cur]) {
        cur = next;
        moved = true;
      }
    }
  }
  return element(cur);
}

std::vector<std::pair<WeylElement, LinearForm>> WeylGroup::reflections() const {
  std::map<std::size_t, LinearForm> found;
  for (std::size_t v = 0; v < size(); ++v) {
    WeylElement w = element(v);
    for (int i = 1; i <= rank(); ++i) {
      WeylElement t = w * simple(i) * w.inverse();
      if (!found.count(t.index()))
        found.emplace(t.index(), w.apply(datum().root(i)));
    }
  }
  std::vector<std::pair<WeylElement, LinearForm>> out;
  for (const auto& [idx, root] : found) out.emplace_back(element(idx), root);
  return out;
}

// ---- WeylElement ----

namespace {
const WeylGroup::Data* data_of(const std::shared_ptr<const void>& p) {
  return static_cast<const WeylGroup::Data*>(p.get());
}
}  // namespace

int WeylElement::length() const { return data_of(data_)->length[idx_]; }

const std::vector<int>& WeylElement::reduced_word() const {
  return data_of(data_)->word[idx_];
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (data_ != o.data_)
    throw std::invalid_argument("Weyl elements from different groups");
  const auto* d = data_of(data_);
  std::size_t idx = idx_;
  for (int i : d->word[o.idx_]) idx = d->right[idx][i - 1];
  return WeylElement(data_, idx);
}

WeylElement WeylElement::inverse() const {
  return WeylElement(data_, data_of(data_)->inverse[idx_]);
}

Polynomial WeylElement::apply(const Polynomial& f) const {
  const auto* d = data_of(data_);
  if (f.vars() != d->datum.nvars)
    throw std::invalid_argument("polynomial/Weyl rank mismatch");
  if (d->perm[idx_]) return f.permute_vars(*d->perm[idx_]);
  return f.substitute(d->action[idx_]);
}

LinearForm WeylElement::apply(const LinearForm& l) const {
  const auto* d = data_of(data_);
  LinearForm out(d->datum.nvars);
  for (int j = 0; j < d->datum.nvars; ++j) {
    if (l.coeffs[j] == 0) continue;
    const LinearForm& img = d->action[idx_][j];
    for (int k = 0; k < d->datum.nvars; ++k)
      out.coeffs[k] += l.coeffs[j] * img.coeffs[k];
  }
  return out;
}

const std::vector<LinearForm>& WeylElement::variable_images() const {
  return data_of(data_)->action[idx_];
}

bool WeylElement::operator==(const WeylElement& o) const {
  return data_ == o.data_ && idx_ == o.idx_;
}

bool WeylElement::operator<(const WeylElement& o) const {
  return idx_ < o.idx_;
}

WeylGroup WeylElement::group() const {
  WeylGroup g;
  g.data_ = std::static_pointer_cast<const WeylGroup::Data>(data_);
  return g;
}

// ---- invariants and monomial helpers ----

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // Recursive enumeration, then sort grlex-desc for canonical order.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur.exps[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur.exps[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur.exps[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(0));
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexDesc{});
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Monomial> staircase_monomials(int nvars) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= nvars - var - 1; ++e) {
      cur.exps[var] = e;
      self(self, var + 1);
    }
    cur.exps[var] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<Polynomial> invariant_basis(const WeylGroup& group,
                                        const ParabolicSubset& j,
                                        int max_degree) {
  j.validate(group.rank());
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  const int n = group.vars();
  std::vector<Polynomial> basis;
  for (int d = 0; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(n, d);
    const int dim = static_cast<int>(monos.size());
    std::map<Monomial, int, GrlexDesc> index;
    for (int c = 0; c < dim; ++c) index.emplace(monos[c], c);
    // Stack (s_i - id) for all i in J; the kernel is the degree-d invariant
    // space. Rows are constraints indexed by (reflection, monomial), columns
    // are the coefficient unknowns.
    RatMat constraints;
    for (int i : j.indices) {
      WeylElement s = group.simple(i);
      RatMat block(dim, RatVec(dim, Rational(0)));
      for (int c = 0; c < dim; ++c) {
        Polynomial img = s.apply(Polynomial::from_term(monos[c], 1)) -
                         Polynomial::from_term(monos[c], 1);
        for (const auto& [m, coef] : img.terms()) block[index.at(m)][c] = coef;
      }
      constraints.insert(constraints.end(), block.begin(), block.end());
    }
    std::vector<RatVec> kernel;
    if (constraints.empty()) {
      // Trivial subgroup: everything is invariant.
      for (int c = 0; c < dim; ++c) {
        RatVec v(dim, Rational(0));
        v[c] = 1;
        kernel.push_back(std::move(v));
      }
    } else {
      kernel = kernel_basis(std::move(constraints));
    }
    for (const auto& v : kernel) {
      Polynomial p(n);
      for (int c = 0; c < dim; ++c)
        if (v[c] != 0) p.add_term(monos[c], v[c]);
      basis.push_back(p);
    }
  }
  return basis;
}

}  // namespace nh
