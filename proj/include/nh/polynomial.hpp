#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nh/monomial.hpp"
#include "nh/rational.hpp"

namespace nh {

class Polynomial;

// Homogeneous degree-1 form sum c_i t_i (no constant term).
struct LinearForm {
  std::vector<Rational> coeffs;

  LinearForm() = default;
  explicit LinearForm(int nvars) : coeffs(nvars, 0) {}
  explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}

  int vars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  Polynomial to_polynomial() const;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const;
  LinearForm operator*(const Rational& c) const;
  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
  bool operator<(const LinearForm& o) const { return coeffs < o.coeffs; }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no stored coefficient is zero; terms are kept in graded-lex
// descending order, so iteration order is the printing order. Values are
// immutable in spirit: every operation returns a fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDesc>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  // 1-based variable index, matching the external t1..tn naming.
  static Polynomial variable(int nvars, int i);
  static Polynomial from_term(const Monomial& m, const Rational& c);

  int vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  // Constant coefficient, i.e. evaluation at t = 0.
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  // Structural order (vars, then term map); used for canonical containers.
  bool operator<(const Polynomial& o) const;

  // Component of total degree d.
  Polynomial homogeneous_part(int d) const;
  bool is_homogeneous() const;

  // Substitutes t_j |-> images[j-1]; images must all have the same length.
  Polynomial substitute(const std::vector<LinearForm>& images) const;
  // Fast path for permutation substitutions: t_j |-> t_{perm[j-1]} (1-based).
  Polynomial permute_vars(const std::vector<int>& perm) const;

  // Text form "-3/2*t1^2*t2 + 1"; "0" for zero.
  std::string str() const;
  // Parses the text form (signs, rational coefficients, t<i>[^e] factors).
  static std::optional<Polynomial> parse(const std::string& src, int nvars,
                                         std::string* error = nullptr);

 private:
  int nvars_;
  TermMap terms_;
};

// Exact division of f by a nonzero linear form. Returns q with q*l == f, or
// nullopt when l does not divide f. The quotient is re-multiplied and checked
// against f before being returned.
std::optional<Polynomial> exact_divide(const Polynomial& f, const LinearForm& l);

inline void check_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("polynomial variable count mismatch: " +
                                std::to_string(a.vars()) + " vs " +
                                std::to_string(b.vars()));
}

}  // namespace nh
