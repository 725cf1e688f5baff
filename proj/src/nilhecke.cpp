#include "nh/nilhecke.hpp"

#include <stdexcept>

namespace nh {

namespace {

void check_context(const NHContextPtr& a, const NHContextPtr& b) {
  if (!a || !b) throw std::invalid_argument("NHElement without context");
  if (a == b) return;
  if (!a->group().same_group(b->group()) ||
      a->convention() != b->convention())
    throw std::invalid_argument("NHElement context (datum) mismatch");
}

}  // namespace

Polynomial demazure_apply(const NHContext& ctx, int i, const Polynomial& f) {
  const WeylGroup& g = ctx.group();
  if (i < 1 || i > g.rank())
    throw std::invalid_argument("demazure index out of range");
  Polynomial num = g.simple(i).apply(f) - f;
  if (ctx.convention() == Convention::classical) num = -num;
  auto q = exact_divide(num, g.datum().root(i));
  if (!q)
    throw std::logic_error(
        "divided difference was not exactly divisible by alpha_" +
        std::to_string(i) + ": root/action configuration bug");
  return *q;
}

Polynomial delta_w_apply(const NHContext& ctx, const WeylElement& w,
                         const Polynomial& f) {
  // delta_w = delta_{s_1} o ... o delta_{s_r} along a reduced word: apply the
  // rightmost letter first.
  const std::vector<int>& word = w.reduced_word();
  Polynomial cur = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = demazure_apply(ctx, *it, cur);
  return cur;
}

NHElement NHElement::identity(NHContextPtr ctx) {
  NHElement e(ctx);
  e.add_term(ctx->group().identity(),
             Polynomial::constant(ctx->vars(), 1));
  return e;
}

NHElement NHElement::delta(NHContextPtr ctx, int i) {
  NHElement e(ctx);
  e.add_term(ctx->group().simple(i), Polynomial::constant(ctx->vars(), 1));
  return e;
}

NHElement NHElement::delta_w(NHContextPtr ctx, const WeylElement& w) {
  NHElement e(ctx);
  e.add_term(w, Polynomial::constant(ctx->vars(), 1));
  return e;
}

NHElement NHElement::multiplication(NHContextPtr ctx, const Polynomial& f) {
  if (f.vars() != ctx->vars())
    throw std::invalid_argument("multiplication operator variable mismatch");
  NHElement e(ctx);
  e.add_term(ctx->group().identity(), f);
  return e;
}

NHElement NHElement::embed(NHContextPtr ctx, const WeylElement& w) {
  // s(f) = f + alpha_s * delta_s(f) in the paper convention, so the simple
  // embedding is 1 + (alpha_s .) delta_s; classical flips the sign.
  NHElement acc = identity(ctx);
  const Rational sign = ctx->convention() == Convention::paper ? 1 : -1;
  for (int i : w.reduced_word()) {
    NHElement s = identity(ctx);
    s.add_term(ctx->group().simple(i),
               ctx->group().datum().root(i).to_polynomial() * sign);
    acc = acc * s;
  }
  return acc;
}

Polynomial NHElement::coeff(const WeylElement& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Polynomial::zero(ctx_->vars()) : it->second;
}

void NHElement::add_term(const WeylElement& w, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

NHElement NHElement::operator+(const NHElement& o) const {
  check_context(ctx_, o.ctx_);
  NHElement r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, c);
  return r;
}

NHElement& NHElement::operator+=(const NHElement& o) {
  check_context(ctx_, o.ctx_);
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

NHElement NHElement::operator-(const NHElement& o) const {
  check_context(ctx_, o.ctx_);
  NHElement r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, -c);
  return r;
}

NHElement NHElement::operator-() const {
  NHElement r = *this;
  for (auto& [w, c] : r.coeffs_) c = -c;
  return r;
}

NHElement NHElement::operator*(const Rational& c) const {
  NHElement r(ctx_);
  if (c == 0) return r;
  r.coeffs_ = coeffs_;
  for (auto& [w, x] : r.coeffs_) x = x * c;
  return r;
}

// Straightening: normal form of delta_w o (f .), computed by pushing the
// multiplication through one letter at a time with
//   delta_s o (f .) = (delta_s(f) .) + (s(f) .) o delta_s
// and collapsing products delta_s delta_u by length additivity.
static std::map<WeylElement, Polynomial> straighten(const NHContext& ctx,
                                                    const WeylElement& w,
                                                    const Polynomial& f) {
  const WeylGroup& g = ctx.group();
  std::map<WeylElement, Polynomial> cur;
  if (!f.is_zero()) cur.emplace(g.identity(), f);
  const std::vector<int>& word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const WeylElement s = g.simple(i);
    std::map<WeylElement, Polynomial> next;
    auto add = [&](const WeylElement& u, Polynomial c) {
      if (c.is_zero()) return;
      auto [jt, inserted] = next.try_emplace(u, c);
      if (!inserted) {
        jt->second += c;
        if (jt->second.is_zero()) next.erase(jt);
      }
    };
    for (const auto& [u, c] : cur) {
      // delta_s o (c .) delta_u = (delta_s c .) delta_u + (s c .) delta_s delta_u
      add(u, demazure_apply(ctx, i, c));
      WeylElement su = s * u;
      if (su.length() == u.length() + 1) add(su, s.apply(c));
    }
    cur = std::move(next);
  }
  return cur;
}

NHElement NHElement::operator*(const NHElement& o) const {
  check_context(ctx_, o.ctx_);
  NHElement r(ctx_);
  for (const auto& [v, av] : coeffs_) {
    for (const auto& [w, bw] : o.coeffs_) {
      // (a_v .) delta_v (b_w .) delta_w
      auto mid = straighten(*ctx_, v, bw);
      for (const auto& [u, cu] : mid) {
        WeylElement uw = u * w;
        if (uw.length() == u.length() + w.length())
          r.add_term(uw, av * cu);
      }
    }
  }
  return r;
}

bool NHElement::operator==(const NHElement& o) const {
  check_context(ctx_, o.ctx_);
  return coeffs_ == o.coeffs_;
}

Polynomial NHElement::apply(const Polynomial& f) const {
  Polynomial out(ctx_->vars());
  for (const auto& [w, c] : coeffs_)
    out += c * delta_w_apply(*ctx_, w, f);
  return out;
}

int NHElement::max_op_degree() const {
  int best = 0;
  bool any = false;
  for (const auto& [w, c] : coeffs_) {
    int d = c.degree() - w.length();
    if (!any || d > best) best = d;
    any = true;
  }
  return any ? best : 0;
}

int NHElement::min_op_degree() const {
  int best = 0;
  bool any = false;
  for (const auto& [w, c] : coeffs_) {
    // smallest monomial degree present in c minus l(w)
    int dmin = c.degree();
    for (const auto& [m, coef] : c.terms()) dmin = std::min(dmin, m.degree());
    int d = dmin - w.length();
    if (!any || d < best) best = d;
    any = true;
  }
  return any ? best : 0;
}

NHElement NHElement::op_degree_part(int d) const {
  NHElement r(ctx_);
  for (const auto& [w, c] : coeffs_)
    r.add_term(w, c.homogeneous_part(d + w.length()));
  return r;
}

NHElement wp_group_action(const WeylElement& v, const WeylElement& w,
                          const NHElement& h) {
  const NHContextPtr& ctx = h.context();
  return NHElement::embed(ctx, v) * h * NHElement::embed(ctx, w.inverse());
}

std::optional<Polynomial> is_invariant_multiplication(const NHElement& h,
                                                      int max_degree) {
  const NHContextPtr& ctx = h.context();
  Polynomial p = h.apply(Polynomial::constant(ctx->vars(), 1));
  for (const auto& m : monomials_up_to_degree(ctx->vars(), max_degree)) {
    Polynomial mono = Polynomial::from_term(m, 1);
    if (h.apply(mono) != p * mono) return std::nullopt;
  }
  return p;
}

}  // namespace nh
