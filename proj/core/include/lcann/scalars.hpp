#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcann {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for precondition violations on algebraic inputs.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Largest e with p^e | a. a must be nonzero.
int p_valuation(const Integer& a, std::uint64_t p);

/// Exact C(n, k); zero when k > n or k < 0.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

// ---------------------------------------------------------------------------
// Residue field F_p.

class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t p, std::int64_t value);
  ModP(std::uint64_t p, const Integer& value);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP inverse() const;

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  ModP operator-() const;
  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }
  friend bool operator==(const ModP& a, const ModP& b) = default;

  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint64_t p_ = 2;
  std::uint64_t v_ = 0;
};

// ---------------------------------------------------------------------------
// The DVR V = Z localized at p, with uniformizer pi = p.

struct DvrSpec {
  std::uint64_t p;

  explicit DvrSpec(std::uint64_t prime);
  friend bool operator==(const DvrSpec&, const DvrSpec&) = default;
};

/// Element p^val * unit of Z_(p). The unit is a rational whose numerator and
/// denominator are both prime to p; zero has val = 0 and unit = 0.
class DvrScalar {
 public:
  DvrScalar() = default;
  DvrScalar(std::uint64_t p, const Rational& value);
  DvrScalar(std::uint64_t p, long value) : DvrScalar(p, Rational(value)) {}
  static DvrScalar pi_power(std::uint64_t p, int e);

  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return unit_ == 0; }
  /// pi-adic valuation; nullopt for zero.
  std::optional<int> valuation() const;
  int val() const { return val_; }
  const Rational& unit_part() const { return unit_; }
  Rational to_rational() const;
  /// True when the element is invertible in V.
  bool is_unit() const { return !is_zero() && val_ == 0; }

  /// Exact quotient a / b when b divides a in V.
  static std::optional<DvrScalar> divide(const DvrScalar& a, const DvrScalar& b);
  /// Image in the residue field k = V / pi V.
  ModP residue() const;

  friend DvrScalar operator+(const DvrScalar& a, const DvrScalar& b);
  friend DvrScalar operator-(const DvrScalar& a, const DvrScalar& b);
  friend DvrScalar operator*(const DvrScalar& a, const DvrScalar& b);
  DvrScalar operator-() const;
  DvrScalar& operator+=(const DvrScalar& b) { return *this = *this + b; }
  DvrScalar& operator-=(const DvrScalar& b) { return *this = *this - b; }
  DvrScalar& operator*=(const DvrScalar& b) { return *this = *this * b; }
  friend bool operator==(const DvrScalar& a, const DvrScalar& b) {
    return a.p_ == b.p_ && a.val_ == b.val_ && a.unit_ == b.unit_;
  }

  std::string to_string() const;

 private:
  std::uint64_t p_ = 2;
  int val_ = 0;
  Rational unit_{0};
};

// ---------------------------------------------------------------------------
// Uniform scalar hooks used by the polynomial templates.

inline bool scalar_is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool scalar_is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool scalar_is_zero(const ModP& a) { return a.is_zero(); }
inline bool scalar_is_zero(const DvrScalar& a) { return a.is_zero(); }

/// a * k for an integer k, staying inside the coefficient ring of a.
inline Integer scale_int(const Integer& a, const Integer& k) { return a * k; }
inline Rational scale_int(const Rational& a, const Integer& k) { return a * Rational(k); }
inline ModP scale_int(const ModP& a, const Integer& k) { return a * ModP(a.modulus(), k); }
inline DvrScalar scale_int(const DvrScalar& a, const Integer& k) {
  return a * DvrScalar(a.prime(), Rational(k));
}

inline std::string scalar_to_string(const Integer& a) { return a.get_str(); }
inline std::string scalar_to_string(const Rational& a) { return a.get_str(); }
inline std::string scalar_to_string(const ModP& a) { return a.to_string(); }
inline std::string scalar_to_string(const DvrScalar& a) { return a.to_string(); }

// ---------------------------------------------------------------------------
// Multi-indices.

/// Exponent vector (or grading degree, entries may be negative).
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& a);

/// Graded lexicographic comparison: total degree first, then lex with
/// x_1 > x_2 > ... > x_n.
std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b);
std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b);

bool divides(const MultiIndex& a, const MultiIndex& b);
MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);
MultiIndex add(const MultiIndex& a, const MultiIndex& b);
MultiIndex subtract(const MultiIndex& a, const MultiIndex& b);
bool all_nonnegative(const MultiIndex& a);

std::string format_multi_index(const MultiIndex& a);

struct GrlexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return grlex_compare(a, b) > 0;
  }
};

}  // namespace lcann
