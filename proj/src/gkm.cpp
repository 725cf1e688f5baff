#include "nh/gkm.hpp"

#include <algorithm>

namespace nh {

namespace {

void check_index_set(const WeylGroup& group, const GKMClass& p) {
  auto reps = group.min_coset_reps(p.parabolic);
  if (reps.size() != p.values.size())
    throw std::invalid_argument("GKM class has a wrong index set");
  for (const auto& w : reps)
    if (!p.values.count(w))
      throw std::invalid_argument(
          "GKM class is missing a minimal coset representative");
}

void require_full_flag(const GKMClass& p, const char* op) {
  if (!p.parabolic.empty())
    throw std::invalid_argument(std::string(op) +
                                " is defined on the full flag only");
}

}  // namespace

GKMMemberReport gkm_member(const WeylGroup& group, const GKMClass& p) {
  check_index_set(group, p);
  GKMMemberReport rep;
  for (const auto& [w, pw] : p.values) {
    for (int s = 1; s <= group.rank(); ++s) {
      WeylElement sw = group.coset_min(group.simple(s) * w, p.parabolic);
      Polynomial diff = pw - p.values.at(sw);
      if (!exact_divide(diff, group.datum().root(s))) {
        rep.member = false;
        rep.witness_rep = w.reduced_word();
        rep.witness_s = s;
        return rep;
      }
    }
  }
  return rep;
}

bool gkm_member_strong(const WeylGroup& group, const GKMClass& p) {
  require_full_flag(p, "gkm_member_strong");
  check_index_set(group, p);
  for (const auto& [t, root] : group.reflections()) {
    for (const auto& [w, pw] : p.values) {
      Polynomial diff = pw - p.values.at(w * t);
      if (!exact_divide(diff, w.apply(root))) return false;
    }
  }
  return true;
}

GKMClass kk_apply(const WeylGroup& group, int i, const GKMClass& p) {
  require_full_flag(p, "kk_apply");
  check_index_set(group, p);
  const WeylElement s = group.simple(i);
  GKMClass out;
  out.parabolic = p.parabolic;
  for (const auto& [w, pw] : p.values) {
    Polynomial num = p.values.at(w * s) - pw;
    auto q = exact_divide(num, w.apply(group.datum().root(i)));
    if (!q)
      throw GKMDivisionError(
          "kk_apply: coordinate difference not divisible by w(alpha_s)",
          w.reduced_word(), i);
    out.values.emplace(w, *q);
  }
  auto member = gkm_member(group, out);
  if (!member.member)
    throw GKMDivisionError("kk_apply: output violates GKM membership",
                           member.witness_rep, member.witness_s);
  return out;
}

TymReport tym_apply_literal(const WeylGroup& group, int i, const GKMClass& p) {
  check_index_set(group, p);
  const WeylElement s = group.simple(i);
  TymReport rep;
  GKMClass out;
  out.parabolic = p.parabolic;
  for (const auto& w : group.min_coset_reps(p.parabolic)) {
    const Polynomial& pw = p.values.at(w);
    auto q = exact_divide(pw - s.apply(pw), group.datum().root(i));
    if (!q)
      throw std::logic_error("p_w - s(p_w) must always divide by alpha_s");
    rep.tuple.push_back(*q);
    out.values.emplace(w, *q);
  }
  rep.membership = gkm_member(group, out);
  return rep;
}

GKMClass tym_apply_corrected(const WeylGroup& group, int i, const GKMClass& p) {
  require_full_flag(p, "tym_apply_corrected");
  check_index_set(group, p);
  const WeylElement s = group.simple(i);
  GKMClass out;
  out.parabolic = p.parabolic;
  for (const auto& [w, pw] : p.values) {
    Polynomial num = pw - s.apply(p.values.at(s * w));
    auto q = exact_divide(num, group.datum().root(i));
    if (!q)
      throw GKMDivisionError(
          "tym_apply_corrected: p_w - s(p_{sw}) not divisible by alpha_s",
          w.reduced_word(), i);
    out.values.emplace(w, *q);
  }
  auto member = gkm_member(group, out);
  if (!member.member)
    throw GKMDivisionError(
        "tym_apply_corrected: output violates GKM membership",
        member.witness_rep, member.witness_s);
  return out;
}

// ---- RootFraction ----

RootFraction::RootFraction(Polynomial num, std::vector<LinearForm> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& l : den_)
    if (l.is_zero()) throw std::invalid_argument("zero denominator factor");
  std::sort(den_.begin(), den_.end());
  cancel();
}

void RootFraction::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = den_.begin(); it != den_.end(); ++it) {
      if (auto q = exact_divide(num_, *it)) {
        num_ = *q;
        den_.erase(it);
        progress = true;
        break;
      }
    }
  }
}

RootFraction RootFraction::operator+(const RootFraction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Common denominator through the multiset intersection of factors.
  std::vector<LinearForm> common, only_a = den_, only_b;
  for (const auto& l : o.den_) {
    auto it = std::find(only_a.begin(), only_a.end(), l);
    if (it != only_a.end()) {
      common.push_back(l);
      only_a.erase(it);
    } else {
      only_b.push_back(l);
    }
  }
  Polynomial num_a = num_;
  for (const auto& l : only_b) num_a = num_a * l.to_polynomial();
  Polynomial num_b = o.num_;
  for (const auto& l : only_a) num_b = num_b * l.to_polynomial();
  std::vector<LinearForm> den = common;
  den.insert(den.end(), only_a.begin(), only_a.end());
  den.insert(den.end(), only_b.begin(), only_b.end());
  return RootFraction(num_a + num_b, std::move(den));
}

RootFraction RootFraction::operator-() const {
  RootFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

RootFraction RootFraction::scale(const Polynomial& f) const {
  return RootFraction(num_ * f, den_);
}

RootFraction RootFraction::divide_by(const LinearForm& l) const {
  std::vector<LinearForm> den = den_;
  den.push_back(l);
  return RootFraction(num_, std::move(den));
}

bool RootFraction::operator==(const RootFraction& o) const {
  Polynomial lhs = num_;
  for (const auto& l : o.den_) lhs = lhs * l.to_polynomial();
  Polynomial rhs = o.num_;
  for (const auto& l : den_) rhs = rhs * l.to_polynomial();
  return lhs == rhs;
}

bool FixedPointVector::is_zero() const {
  for (const auto& [w, f] : values)
    if (!f.is_zero()) return false;
  return true;
}

bool FixedPointVector::operator==(const FixedPointVector& o) const {
  for (const auto& [w, f] : values) {
    auto it = o.values.find(w);
    if (it == o.values.end()) {
      if (!f.is_zero()) return false;
    } else if (!(f == it->second)) {
      return false;
    }
  }
  for (const auto& [w, f] : o.values)
    if (!values.count(w) && !f.is_zero()) return false;
  return true;
}

FixedPointVector localized_apply(const WeylGroup& group, int i,
                                 const FixedPointVector& v) {
  const WeylElement s = group.simple(i);
  FixedPointVector out;
  auto add = [&](const WeylElement& w, const RootFraction& f) {
    auto [it, inserted] = out.values.try_emplace(w, f);
    if (!inserted) it->second = it->second + f;
  };
  for (const auto& [w, lambda] : v.values) {
    if (lambda.is_zero()) continue;
    LinearForm walpha = w.apply(group.datum().root(i));
    RootFraction scaled = lambda.divide_by(walpha);
    add(w * s, scaled);
    add(w, -scaled);
  }
  return out;
}

std::vector<GKMClass> gkm_spanning_classes(const WeylGroup& group,
                                           const ParabolicSubset& j,
                                           int degree) {
  auto reps = group.min_coset_reps(j);
  std::vector<GKMClass> out;
  // Second factor: monomials for the full flag, W_J-invariants otherwise
  // (so the tuple is constant along cosets).
  std::vector<Polynomial> seconds;
  if (j.empty()) {
    for (const auto& m : monomials_up_to_degree(group.vars(), degree))
      seconds.push_back(Polynomial::from_term(m, 1));
  } else {
    seconds = invariant_basis(group, j, degree);
  }
  for (const auto& g_mono : monomials_up_to_degree(group.vars(), degree)) {
    Polynomial g = Polynomial::from_term(g_mono, 1);
    for (const auto& f : seconds) {
      if (g.degree() + f.degree() > degree) continue;
      GKMClass cls;
      cls.parabolic = j;
      for (const auto& w : reps) cls.values.emplace(w, g * w.apply(f));
      out.push_back(std::move(cls));
    }
  }
  return out;
}

}  // namespace nh
