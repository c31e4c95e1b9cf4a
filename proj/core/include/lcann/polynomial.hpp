#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcann/scalars.hpp"

namespace lcann {

template <class C>
struct Term {
  MultiIndex exponent;
  C coeff;
};

/// Sparse polynomial in n variables over the coefficient type C. Terms are kept
/// in strictly decreasing grlex order with no zero coefficients, so equality is
/// structural.
template <class C>
class Polynomial {
 public:
  using Coeff = C;

  explicit Polynomial(int n = 0) : n_(n) {}

  static Polynomial monomial(int n, MultiIndex exponent, C coeff) {
    Polynomial p(n);
    if (static_cast<int>(exponent.size()) != n) throw AlgebraError("exponent length mismatch");
    if (!scalar_is_zero(coeff)) p.terms_.push_back({std::move(exponent), std::move(coeff)});
    return p;
  }
  static Polynomial constant(int n, C coeff) {
    return monomial(n, MultiIndex(static_cast<std::size_t>(n), 0), std::move(coeff));
  }
  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static Polynomial from_terms(int n, std::vector<Term<C>> terms) {
    std::map<MultiIndex, C, GrlexGreater> acc;
    for (auto& t : terms) {
      if (static_cast<int>(t.exponent.size()) != n) throw AlgebraError("exponent length mismatch");
      auto it = acc.find(t.exponent);
      if (it == acc.end())
        acc.emplace(std::move(t.exponent), std::move(t.coeff));
      else
        it->second += t.coeff;
    }
    Polynomial p(n);
    for (auto& [e, c] : acc)
      if (!scalar_is_zero(c)) p.terms_.push_back({e, c});
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<C>>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponent) == 0);
  }
  bool is_term() const { return terms_.size() == 1; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exponent));
    return d;
  }

  /// The grlex-leading term.
  const Term<C>& leading_term() const {
    if (terms_.empty()) throw AlgebraError("no leading term");
    return terms_.front();
  }

  std::optional<C> coefficient(const MultiIndex& e) const {
    for (const auto& t : terms_)
      if (t.exponent == e) return t.coeff;
    return std::nullopt;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    std::map<MultiIndex, C, GrlexGreater> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto e = add(s.exponent, t.exponent);
        auto c = s.coeff * t.coeff;
        auto it = acc.find(e);
        if (it == acc.end())
          acc.emplace(std::move(e), std::move(c));
        else
          it->second += c;
      }
    Polynomial r(a.n_);
    for (auto& [e, c] : acc)
      if (!scalar_is_zero(c)) r.terms_.push_back({e, c});
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const C& c) const {
    Polynomial r(n_);
    for (const auto& t : terms_) {
      C v = t.coeff * c;
      if (!scalar_is_zero(v)) r.terms_.push_back({t.exponent, std::move(v)});
    }
    return r;
  }
  /// Multiplication by the monomial x^shift.
  Polynomial shifted(const MultiIndex& shift) const {
    Polynomial r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({add(t.exponent, shift), t.coeff});
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> Polynomial<decltype(f(std::declval<const C&>()))> {
    using D = decltype(f(std::declval<const C&>()));
    Polynomial<D> r(n_);
    std::vector<Term<D>> out;
    for (const auto& t : terms_) out.push_back({t.exponent, f(t.coeff)});
    return Polynomial<D>::from_terms(n_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exponent != b.terms_[i].exponent || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

  /// Human-readable form with variables named prefix + (index + first_index).
  std::string to_string(int first_index = 1, const std::string& prefix = "x") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      std::string c = scalar_to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      if (k == 0)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      std::string mono;
      for (int i = 0; i < n_; ++i) {
        int e = t.exponent[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += prefix + std::to_string(i + first_index);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty())
        s += c;
      else if (c == "1")
        s += mono;
      else
        s += c + "*" + mono;
    }
    return s;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw AlgebraError("polynomials live in different rings");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract_b) {
    check_same(a, b);
    Polynomial r(a.n_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && grlex_compare(a.terms_[i].exponent, b.terms_[j].exponent) > 0)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() ||
                 grlex_compare(a.terms_[i].exponent, b.terms_[j].exponent) < 0) {
        auto t = b.terms_[j++];
        if (subtract_b) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        C c = subtract_b ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!scalar_is_zero(c)) r.terms_.push_back({a.terms_[i].exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int n_;
  std::vector<Term<C>> terms_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;
using ModPPoly = Polynomial<ModP>;
using DvrPoly = Polynomial<DvrScalar>;

/// Leading exponent and coefficient under grlex with x_1 > ... > x_n.
template <class C>
std::pair<MultiIndex, C> grlex_leading_term(const Polynomial<C>& f) {
  const auto& t = f.leading_term();
  return {t.exponent, t.coeff};
}

namespace detail {
inline std::optional<Integer> divide_coeff(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline std::optional<Rational> divide_coeff(const Rational& a, const Rational& b) { return a / b; }
inline std::optional<ModP> divide_coeff(const ModP& a, const ModP& b) { return a * b.inverse(); }
inline std::optional<DvrScalar> divide_coeff(const DvrScalar& a, const DvrScalar& b) {
  return DvrScalar::divide(a, b);
}
}  // namespace detail

/// Exact division f / g over a domain by greedy grlex leading-term
/// cancellation; nullopt when g does not divide f.
template <class C>
std::optional<Polynomial<C>> exact_divide(const Polynomial<C>& f, const Polynomial<C>& g) {
  if (g.is_zero()) throw AlgebraError("division by zero polynomial");
  const int n = f.nvars();
  Polynomial<C> rest = f;
  std::vector<Term<C>> quotient;
  const auto& lg = g.leading_term();
  while (!rest.is_zero()) {
    const auto& lr = rest.leading_term();
    if (!divides(lg.exponent, lr.exponent)) return std::nullopt;
    auto c = detail::divide_coeff(lr.coeff, lg.coeff);
    if (!c) return std::nullopt;
    auto shift = subtract(lr.exponent, lg.exponent);
    quotient.push_back({shift, *c});
    rest -= g.shifted(shift).scaled(*c);
  }
  return Polynomial<C>::from_terms(n, std::move(quotient));
}

/// Minimum pi-adic valuation over the coefficients (the pi-content).
int min_coefficient_valuation(const DvrPoly& f);

/// Coefficientwise reduction V[x] -> k[x].
ModPPoly reduce_mod_pi(const DvrPoly& f);

}  // namespace lcann
