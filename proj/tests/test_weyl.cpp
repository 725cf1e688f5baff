#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "nh/weyl.hpp"

using namespace nh;

namespace {

// Independent BFS closure oracle: multiplies raw variable-image tables
// without going through WeylGroup.
std::size_t bfs_order_oracle(const CartanDatum& d) {
  using Key = std::vector<std::vector<std::pair<int, std::string>>>;
  auto encode = [&](const std::vector<LinearForm>& action) {
    Key k;
    for (const auto& img : action) {
      std::vector<std::pair<int, std::string>> row;
      for (int i = 0; i < d.nvars; ++i)
        row.emplace_back(i, img.coeffs[i].get_str());
      k.push_back(row);
    }
    return k;
  };
  std::vector<LinearForm> id;
  for (int j = 0; j < d.nvars; ++j) {
    LinearForm e(d.nvars);
    e.coeffs[j] = 1;
    id.push_back(e);
  }
  auto compose = [&](const std::vector<LinearForm>& a,
                     const std::vector<LinearForm>& b) {
    std::vector<LinearForm> r;
    for (int j = 0; j < d.nvars; ++j) {
      LinearForm img(d.nvars);
      for (int k = 0; k < d.nvars; ++k)
        if (b[j].coeffs[k] != 0)
          for (int l = 0; l < d.nvars; ++l)
            img.coeffs[l] += b[j].coeffs[k] * a[k].coeffs[l];
      r.push_back(img);
    }
    return r;
  };
  std::set<Key> seen{encode(id)};
  std::vector<std::vector<LinearForm>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<LinearForm>> next;
    for (const auto& w : frontier)
      for (int i = 0; i < d.rank; ++i) {
        auto u = compose(w, d.reflection_action[i]);
        if (seen.insert(encode(u)).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(WeylGroup(CartanDatum::type_a(1)).size() == 2);
  CHECK(WeylGroup(CartanDatum::type_a(2)).size() == 6);
  CHECK(WeylGroup(CartanDatum::type_a(3)).size() == 24);
  WeylGroup b2(CartanDatum::named("B2"));
  CHECK(b2.size() == bfs_order_oracle(b2.datum()));
  CHECK(b2.size() == 8);
  CHECK(WeylGroup(CartanDatum::named("G2")).size() == 12);
}

TEST_CASE("enumeration bound produces explicit error") {
  CHECK_THROWS_AS(WeylGroup(CartanDatum::type_a(3), 10), GroupTooLargeError);
  // Affine-type matrix generates an infinite group; the bound must trip.
  CHECK_THROWS_AS(
      WeylGroup(CartanDatum::from_cartan_matrix({{2, -2}, {-2, 2}}), 100),
      GroupTooLargeError);
}

TEST_CASE("elements are sorted by length and enumerated exactly once") {
  WeylGroup w(CartanDatum::type_a(2));
  auto els = w.elements();
  std::set<std::size_t> seen;
  int prev = 0;
  for (const auto& e : els) {
    CHECK(e.length() >= prev);
    prev = e.length();
    CHECK(seen.insert(e.index()).second);
  }
  CHECK(els.front().is_identity());
  CHECK(els.back().length() == 3);  // longest element of S_3
}

TEST_CASE("length and reduced words agree with exhaustive search") {
  WeylGroup w(CartanDatum::named("B2"));
  // Exhaustive: distance in the Cayley graph via words of increasing length.
  std::map<std::size_t, int> dist{{w.identity().index(), 0}};
  std::vector<WeylElement> frontier{w.identity()};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<WeylElement> next;
    for (const auto& u : frontier)
      for (int i = 1; i <= w.rank(); ++i) {
        WeylElement v = u * w.simple(i);
        if (!dist.count(v.index())) {
          dist[v.index()] = depth;
          next.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  for (const auto& e : w.elements()) {
    CHECK(e.length() == dist.at(e.index()));
    CHECK(static_cast<int>(e.reduced_word().size()) == e.length());
    CHECK(w.from_word(e.reduced_word()) == e);
  }
}

TEST_CASE("apply: type A permutation action") {
  WeylGroup w(CartanDatum::type_a(1));
  Polynomial t1 = Polynomial::variable(2, 1), t2 = Polynomial::variable(2, 2);
  CHECK(w.simple(1).apply(t1) == t2);
  CHECK(w.simple(1).apply(t1 * t2) == t1 * t2);

  WeylGroup a2(CartanDatum::type_a(2));
  // s1 s2 acting on t1 against the permutation oracle (apply s2 then s1).
  Polynomial u1 = Polynomial::variable(3, 1);
  WeylElement s1s2 = a2.simple(1) * a2.simple(2);
  CHECK(s1s2.apply(u1) == a2.simple(1).apply(a2.simple(2).apply(u1)));
  // group action property on random-ish inputs
  Polynomial f = *Polynomial::parse("t1^2*t3 - 2*t2", 3);
  for (const auto& v : a2.elements())
    for (const auto& u : a2.elements())
      CHECK((v * u).apply(f) == v.apply(u.apply(f)));
}

TEST_CASE("apply preserves degree and multiplicativity") {
  WeylGroup b2(CartanDatum::named("B2"));
  Polynomial f = *Polynomial::parse("t1^2 - t2", 2);
  Polynomial g = *Polynomial::parse("t1*t2 + 3", 2);
  for (const auto& e : b2.elements()) {
    CHECK(e.apply(f).degree() == f.degree());
    CHECK(e.apply(f * g) == e.apply(f) * e.apply(g));
  }
}

TEST_CASE("rank mismatch throws") {
  WeylGroup w(CartanDatum::type_a(2));
  CHECK_THROWS_AS(w.identity().apply(Polynomial::variable(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("parabolic subgroups") {
  WeylGroup a2(CartanDatum::type_a(2));
  auto sub = a2.parabolic_subgroup(ParabolicSubset({1}));
  REQUIRE(sub.size() == 2);
  CHECK(sub[0].is_identity());
  CHECK(sub[1] == a2.simple(1));
  CHECK(a2.parabolic_subgroup(ParabolicSubset(std::vector<int>{})).size() == 1);
  WeylGroup a3(CartanDatum::type_a(3));
  CHECK(a3.parabolic_subgroup(ParabolicSubset({1, 2})).size() == 6);
  CHECK_THROWS_AS(a3.parabolic_subgroup(ParabolicSubset({5})),
                  std::invalid_argument);
}

TEST_CASE("minimal coset representatives") {
  WeylGroup a2(CartanDatum::type_a(2));
  ParabolicSubset j({1});
  auto reps = a2.min_coset_reps(j);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].is_identity());
  CHECK(reps[1] == a2.simple(2));
  CHECK(reps[2] == a2.simple(1) * a2.simple(2));

  // Exhaustive coset-minimum oracle: group the elements into cosets w W_J and
  // pick the shortest element in each.
  auto wj = a2.parabolic_subgroup(j);
  std::set<std::size_t> oracle;
  for (const auto& w : a2.elements()) {
    WeylElement best = w;
    for (const auto& v : wj) {
      WeylElement c = w * v;
      if (c.length() < best.length()) best = c;
    }
    oracle.insert(best.index());
  }
  std::set<std::size_t> got;
  for (const auto& r : reps) got.insert(r.index());
  CHECK(got == oracle);

  CHECK(a2.min_coset_reps(ParabolicSubset({1, 2})).size() == 1);
  WeylGroup a1(CartanDatum::type_a(1));
  CHECK(a1.min_coset_reps(ParabolicSubset(std::vector<int>{})).size() == 2);
}

TEST_CASE("parabolic factorization w = u v is unique and length additive") {
  for (const auto& spec : {std::string("A2"), std::string("A3")}) {
    WeylGroup g(CartanDatum::named(spec));
    std::vector<ParabolicSubset> subsets;
    if (g.rank() == 2) subsets = {ParabolicSubset({1}), ParabolicSubset({2})};
    else
      subsets = {ParabolicSubset({1}), ParabolicSubset({1, 2}),
                 ParabolicSubset({1, 3})};
    for (const auto& j : subsets) {
      auto reps = g.min_coset_reps(j);
      auto wj = g.parabolic_subgroup(j);
      CHECK(reps.size() * wj.size() == g.size());
      std::set<std::size_t> covered;
      for (const auto& u : reps)
        for (const auto& v : wj) {
          WeylElement w = u * v;
          CHECK(w.length() == u.length() + v.length());
          CHECK(covered.insert(w.index()).second);
        }
      CHECK(covered.size() == g.size());
      for (const auto& w : g.elements())
        CHECK(g.coset_min(w, j).length() <= w.length());
    }
  }
}

TEST_CASE("length changes by one under simple multiplication") {
  WeylGroup b2(CartanDatum::named("B2"));
  for (const auto& w : b2.elements())
    for (int i = 1; i <= 2; ++i) {
      int diff = (w * b2.simple(i)).length() - w.length();
      CHECK((diff == 1 || diff == -1));
    }
}

TEST_CASE("reduced word examples") {
  WeylGroup a2(CartanDatum::type_a(2));
  CHECK(a2.identity().reduced_word().empty());
  WeylElement s1s2 = a2.simple(1) * a2.simple(2);
  CHECK(s1s2.reduced_word() == std::vector<int>{1, 2});
  CHECK(a2.longest().reduced_word().size() == 3);
}

TEST_CASE("invariant basis") {
  WeylGroup a1(CartanDatum::type_a(1));  // S_2 on two variables
  ParabolicSubset full({1});
  auto b1 = invariant_basis(a1, full, 1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == Polynomial::constant(2, 1));
  CHECK(b1[1] == *Polynomial::parse("t1 + t2", 2));

  auto trivial = invariant_basis(a1, ParabolicSubset(std::vector<int>{}), 1);
  REQUIRE(trivial.size() == 3);  // {1, t1, t2}

  auto b2 = invariant_basis(a1, full, 2);
  CHECK(b2.size() == 4);  // {1, e1, e1^2~, e2~}: dimension 4
  for (const auto& p : b2) CHECK(a1.simple(1).apply(p) == p);

  // Every basis element is fixed by all simple reflections of the subgroup.
  WeylGroup a3(CartanDatum::type_a(3));
  for (const auto& p : invariant_basis(a3, ParabolicSubset({1, 3}), 3)) {
    CHECK(a3.simple(1).apply(p) == p);
    CHECK(a3.simple(3).apply(p) == p);
  }
}

TEST_CASE("staircase monomials") {
  auto st = staircase_monomials(3);
  CHECK(st.size() == 6);
  for (const auto& m : st) {
    CHECK(m.exps[0] <= 2);
    CHECK(m.exps[1] <= 1);
    CHECK(m.exps[2] == 0);
  }
}

TEST_CASE("reflections with roots") {
  WeylGroup a2(CartanDatum::type_a(2));
  auto refl = a2.reflections();
  CHECK(refl.size() == 3);
  for (const auto& [t, root] : refl) {
    CHECK(t * t == a2.identity());
    // t sends its root to minus itself.
    CHECK(t.apply(root) == -root);
  }
}
