#include "nh/polynomial.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace nh {

bool LinearForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(vars());
  for (int i = 0; i < vars(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(vars());
    m.exps[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm r = *this;
  for (int i = 0; i < vars(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
  LinearForm r = *this;
  for (int i = 0; i < vars(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

LinearForm LinearForm::operator-() const {
  LinearForm r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

LinearForm LinearForm::operator*(const Rational& c) const {
  LinearForm r = *this;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars)
    throw std::invalid_argument("variable index out of range: t" +
                                std::to_string(i));
  Monomial m(nvars);
  m.exps[i - 1] = 1;
  return from_term(m, 1);
}

Polynomial Polynomial::from_term(const Monomial& m, const Rational& c) {
  Polynomial p(m.vars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();  // grlex-desc: first term is maximal
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Monomial(nvars_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.vars() != nvars_)
    throw std::invalid_argument("monomial/polynomial variable count mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_vars(*this, o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_vars(*this, o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_vars(*this, o);
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  auto cmp = [](const auto& a, const auto& b) {
    GrlexDesc lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return a.second < b.second;
  };
  return std::lexicographical_compare(terms_.begin(), terms_.end(),
                                      o.terms_.begin(), o.terms_.end(), cmp);
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::substitute(const std::vector<LinearForm>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: wrong number of variable images");
  // pow_cache[j] holds images[j]^0, ^1, ... extended on demand.
  std::vector<std::vector<Polynomial>> pow_cache(nvars_);
  auto power = [&](int j, int e) -> const Polynomial& {
    auto& cache = pow_cache[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(nvars_, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[j].to_polynomial());
    return cache[e];
  };
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(nvars_, c);
    for (int j = 0; j < nvars_; ++j)
      if (m.exps[j] > 0) t = t * power(j, m.exps[j]);
    r += t;
  }
  return r;
}

Polynomial Polynomial::permute_vars(const std::vector<int>& perm) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial im(nvars_);
    for (int j = 0; j < nvars_; ++j) im.exps[perm[j] - 1] = m.exps[j];
    r.add_term(im, c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool printed_coeff = false;
    if (m.is_one() || a != 1) {
      out << to_string(a);
      printed_coeff = true;
    }
    bool first_factor = !printed_coeff;
    for (int j = 0; j < nvars_; ++j) {
      if (m.exps[j] == 0) continue;
      if (!first_factor || printed_coeff) out << "*";
      out << "t" << (j + 1);
      if (m.exps[j] > 1) out << "^" << m.exps[j];
      first_factor = false;
    }
  }
  return out.str();
}

namespace {

struct PolyParser {
  const std::string& src;
  std::size_t pos = 0;
  int nvars;
  std::string error;

  explicit PolyParser(const std::string& s, int n) : src(s), nvars(n) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool fail(const std::string& msg) {
    error = msg + " at position " + std::to_string(pos + 1);
    return false;
  }

  bool parse_uint(std::string* out) {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start) return fail("expected integer");
    *out = src.substr(start, pos - start);
    return true;
  }

  // factor := rational | t<i>[^e]
  bool parse_factor(Polynomial* out) {
    skip_ws();
    if (pos >= src.size()) return fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(src[pos]))) {
      std::string num, den = "1";
      if (!parse_uint(&num)) return false;
      skip_ws();
      if (pos < src.size() && src[pos] == '/') {
        ++pos;
        if (!parse_uint(&den)) return false;
      }
      auto q = parse_rational(num + "/" + den);
      if (!q) return fail("bad rational");
      *out = Polynomial::constant(nvars, *q);
      return true;
    }
    if (src[pos] == 't') {
      ++pos;
      std::string idx;
      if (!parse_uint(&idx)) return false;
      int i = std::stoi(idx);
      if (i < 1 || i > nvars) return fail("variable t" + idx + " out of range");
      int e = 1;
      skip_ws();
      if (pos < src.size() && src[pos] == '^') {
        ++pos;
        std::string es;
        if (!parse_uint(&es)) return false;
        e = std::stoi(es);
      }
      Monomial m(nvars);
      m.exps[i - 1] = e;
      *out = Polynomial::from_term(m, 1);
      return true;
    }
    return fail("expected coefficient or variable");
  }

  bool parse_term(Polynomial* out) {
    Polynomial acc(nvars);
    if (!parse_factor(&acc)) return false;
    while (true) {
      skip_ws();
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        Polynomial f(nvars);
        if (!parse_factor(&f)) return false;
        acc = acc * f;
      } else {
        break;
      }
    }
    *out = acc;
    return true;
  }

  bool parse_poly(Polynomial* out) {
    Polynomial acc(nvars);
    skip_ws();
    bool negate = false;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) {
      negate = src[pos] == '-';
      ++pos;
    }
    Polynomial t(nvars);
    if (!parse_term(&t)) return false;
    acc += negate ? -t : t;
    while (true) {
      skip_ws();
      if (pos >= src.size()) break;
      if (src[pos] != '+' && src[pos] != '-')
        return fail("expected '+' or '-'");
      negate = src[pos] == '-';
      ++pos;
      if (!parse_term(&t)) return false;
      acc += negate ? -t : t;
    }
    *out = acc;
    return true;
  }
};

}  // namespace

std::optional<Polynomial> Polynomial::parse(const std::string& src, int nvars,
                                            std::string* error) {
  PolyParser p(src, nvars);
  Polynomial out(nvars);
  if (!p.parse_poly(&out)) {
    if (error) *error = p.error;
    return std::nullopt;
  }
  return out;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const LinearForm& l) {
  if (l.is_zero()) throw std::invalid_argument("exact_divide by zero form");
  if (f.vars() != l.vars())
    throw std::invalid_argument("exact_divide variable count mismatch");
  // Leading variable of l in grlex order = smallest index with nonzero coeff.
  int lead = -1;
  for (int j = 0; j < l.vars(); ++j)
    if (l.coeffs[j] != 0) {
      lead = j;
      break;
    }
  Polynomial lp = l.to_polynomial();
  Polynomial rem = f;
  Polynomial quot(f.vars());
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().begin();  // leading term
    if (m.exps[lead] == 0) return std::nullopt;
    Monomial qm = m;
    qm.exps[lead] -= 1;
    Rational qc = c / l.coeffs[lead];
    Polynomial piece = Polynomial::from_term(qm, qc);
    quot += piece;
    rem -= piece * lp;
  }
  // Contract check: the quotient reproduces f exactly.
  if (quot * lp != f) return std::nullopt;
  return quot;
}

}  // namespace nh
