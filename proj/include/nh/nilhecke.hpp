#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "nh/weyl.hpp"

namespace nh {

// Sign convention for the divided difference operators.
//   paper:     delta_s(f) = (s f - f) / alpha_s
//   classical: delta_s(f) = (f - s f) / alpha_s   (the Schubert-polynomial
//              literature's partial_s, the negative of the paper operator)
enum class Convention { paper, classical };

inline std::string convention_name(Convention c) {
  return c == Convention::paper ? "paper" : "classical";
}

// Shared immutable context for nil Hecke computations: the Weyl group with
// its realization plus the sign convention.
class NHContext {
 public:
  NHContext(WeylGroup group, Convention conv = Convention::paper)
      : group_(std::move(group)), conv_(conv) {}

  const WeylGroup& group() const { return group_; }
  Convention convention() const { return conv_; }
  int vars() const { return group_.vars(); }

 private:
  WeylGroup group_;
  Convention conv_;
};

using NHContextPtr = std::shared_ptr<const NHContext>;

inline NHContextPtr make_context(WeylGroup g, Convention c = Convention::paper) {
  return std::make_shared<const NHContext>(std::move(g), c);
}

// Divided difference along the simple reflection s_i (1-based). The division
// by alpha_i is exact for every polynomial; a failure indicates an
// inconsistent root/action configuration and throws.
Polynomial demazure_apply(const NHContext& ctx, int i, const Polynomial& f);

// Composition along a reduced word of w (independent of the chosen word).
Polynomial delta_w_apply(const NHContext& ctx, const WeylElement& w,
                         const Polynomial& f);

// Element of the nil Hecke algebra in delta-basis normal form
//   sum_w (c_w .) o delta_w
// with the polynomial coefficients on the left. Canonical form never stores
// a zero coefficient; equality is structural.
class NHElement {
 public:
  NHElement() = default;
  explicit NHElement(NHContextPtr ctx) : ctx_(std::move(ctx)) {}

  static NHElement zero(NHContextPtr ctx) { return NHElement(std::move(ctx)); }
  static NHElement identity(NHContextPtr ctx);
  // delta_i for a simple reflection (1-based).
  static NHElement delta(NHContextPtr ctx, int i);
  // delta_w for a group element (product along a reduced word).
  static NHElement delta_w(NHContextPtr ctx, const WeylElement& w);
  // Multiplication operator (f .).
  static NHElement multiplication(NHContextPtr ctx, const Polynomial& f);
  // Image of a Weyl group element: acts as apply_weyl(w, -).
  static NHElement embed(NHContextPtr ctx, const WeylElement& w);

  const NHContextPtr& context() const { return ctx_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<WeylElement, Polynomial>& coeffs() const { return coeffs_; }
  // Coefficient of delta_w (zero polynomial if absent).
  Polynomial coeff(const WeylElement& w) const;
  void add_term(const WeylElement& w, const Polynomial& c);

  NHElement operator+(const NHElement& o) const;
  NHElement operator-(const NHElement& o) const;
  NHElement operator-() const;
  NHElement operator*(const NHElement& o) const;  // operator composition
  NHElement operator*(const Rational& c) const;
  NHElement& operator+=(const NHElement& o);

  bool operator==(const NHElement& o) const;
  bool operator!=(const NHElement& o) const { return !(*this == o); }

  // Action on a polynomial: sum_w c_w * delta_w(f).
  Polynomial apply(const Polynomial& f) const;

  // Maximum operator degree deg(c_w) - l(w) over the support; minimum too.
  int max_op_degree() const;
  int min_op_degree() const;
  // Component whose coefficient of delta_w is the homogeneous part of c_w in
  // polynomial degree (d + l(w)), i.e. the operator-degree-d piece.
  NHElement op_degree_part(int d) const;

 private:
  NHContextPtr ctx_;
  std::map<WeylElement, Polynomial> coeffs_;
};

// The W_P x W_P action (v,w) . h = embed(v) * h * embed(w^{-1}).
NHElement wp_group_action(const WeylElement& v, const WeylElement& w,
                          const NHElement& h);

// If h acts as multiplication by a single polynomial on every monomial of
// degree <= max_degree, returns that polynomial; otherwise nullopt.
std::optional<Polynomial> is_invariant_multiplication(const NHElement& h,
                                                      int max_degree);

}  // namespace nh
