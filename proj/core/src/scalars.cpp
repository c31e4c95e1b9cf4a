#include "lcann/scalars.hpp"

#include <algorithm>
#include <numeric>

namespace lcann {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z;
  mpz_set_ui(z.get_mpz_t(), n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

int p_valuation(const Integer& a, std::uint64_t p) {
  if (sgn(a) == 0) throw AlgebraError("valuation of zero");
  Integer prime;
  mpz_set_ui(prime.get_mpz_t(), p);
  Integer rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t()));
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t reduce_signed(std::uint64_t p, std::int64_t v) {
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

ModP::ModP(std::uint64_t p, std::int64_t value) : p_(p), v_(reduce_signed(p, value)) {}

ModP::ModP(std::uint64_t p, const Integer& value) : p_(p) {
  Integer m;
  mpz_set_ui(m.get_mpz_t(), p);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  v_ = mpz_get_ui(r.get_mpz_t());
}

ModP ModP::inverse() const {
  if (v_ == 0) throw AlgebraError("inverse of zero in F_p");
  // Fermat: p is prime.
  std::uint64_t result = 1, base = v_, e = p_ - 2;
  while (e) {
    if (e & 1) result = mulmod(result, base, p_);
    base = mulmod(base, base, p_);
    e >>= 1;
  }
  ModP r;
  r.p_ = p_;
  r.v_ = result;
  return r;
}

ModP operator+(const ModP& a, const ModP& b) {
  ModP r = a;
  r.v_ = a.v_ + b.v_;
  if (r.v_ >= a.p_) r.v_ -= a.p_;
  return r;
}

ModP operator-(const ModP& a, const ModP& b) {
  ModP r = a;
  r.v_ = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
  return r;
}

ModP operator*(const ModP& a, const ModP& b) {
  ModP r = a;
  r.v_ = mulmod(a.v_, b.v_, a.p_);
  return r;
}

ModP ModP::operator-() const {
  ModP r = *this;
  r.v_ = v_ == 0 ? 0 : p_ - v_;
  return r;
}

// ---------------------------------------------------------------------------

DvrSpec::DvrSpec(std::uint64_t prime) : p(prime) {
  if (!is_prime(prime)) throw AlgebraError("residue characteristic must be prime");
}

DvrScalar::DvrScalar(std::uint64_t p, const Rational& value) : p_(p) {
  if (sgn(value) == 0) return;
  Rational v = value;
  v.canonicalize();
  Integer prime;
  mpz_set_ui(prime.get_mpz_t(), p);
  Integer num, den;
  auto up = mpz_remove(num.get_mpz_t(), v.get_num_mpz_t(), prime.get_mpz_t());
  auto down = mpz_remove(den.get_mpz_t(), v.get_den_mpz_t(), prime.get_mpz_t());
  if (down > 0) throw AlgebraError("element is not in Z_(p): denominator divisible by p");
  val_ = static_cast<int>(up);
  unit_ = Rational(num, den);
  unit_.canonicalize();
}

DvrScalar DvrScalar::pi_power(std::uint64_t p, int e) {
  if (e < 0) throw AlgebraError("negative power of pi is not in V");
  DvrScalar r;
  r.p_ = p;
  r.val_ = e;
  r.unit_ = 1;
  return r;
}

std::optional<int> DvrScalar::valuation() const {
  if (is_zero()) return std::nullopt;
  return val_;
}

Rational DvrScalar::to_rational() const {
  if (is_zero()) return 0;
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), p_, static_cast<unsigned long>(val_));
  return unit_ * Rational(pw);
}

std::optional<DvrScalar> DvrScalar::divide(const DvrScalar& a, const DvrScalar& b) {
  if (b.is_zero()) throw AlgebraError("division by zero in V");
  if (a.is_zero()) return a;
  if (a.val_ < b.val_) return std::nullopt;
  DvrScalar r;
  r.p_ = a.p_;
  r.val_ = a.val_ - b.val_;
  r.unit_ = a.unit_ / b.unit_;
  return r;
}

ModP DvrScalar::residue() const {
  if (is_zero() || val_ > 0) return ModP(p_, std::int64_t{0});
  ModP num(p_, Integer(unit_.get_num()));
  ModP den(p_, Integer(unit_.get_den()));
  return num * den.inverse();
}

DvrScalar operator+(const DvrScalar& a, const DvrScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.p_ != b.p_) throw AlgebraError("mixing scalars of different DVRs");
  const DvrScalar& lo = a.val_ <= b.val_ ? a : b;
  const DvrScalar& hi = a.val_ <= b.val_ ? b : a;
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), a.p_, static_cast<unsigned long>(hi.val_ - lo.val_));
  Rational sum = lo.unit_ + hi.unit_ * Rational(pw);
  DvrScalar r(a.p_, sum);
  if (!r.is_zero()) r.val_ += lo.val_;
  return r;
}

DvrScalar DvrScalar::operator-() const {
  DvrScalar r = *this;
  r.unit_ = -unit_;
  return r;
}

DvrScalar operator-(const DvrScalar& a, const DvrScalar& b) { return a + (-b); }

DvrScalar operator*(const DvrScalar& a, const DvrScalar& b) {
  if (a.is_zero() || b.is_zero()) return DvrScalar(a.p_, 0L);
  if (a.p_ != b.p_) throw AlgebraError("mixing scalars of different DVRs");
  DvrScalar r;
  r.p_ = a.p_;
  r.val_ = a.val_ + b.val_;
  r.unit_ = a.unit_ * b.unit_;
  return r;
}

std::string DvrScalar::to_string() const { return to_rational().get_str(); }

// ---------------------------------------------------------------------------

int total_degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return a.size() <=> b.size();
}

std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da <=> db;
  return lex_compare(a, b);
}

bool divides(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiIndex subtract(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool all_nonnegative(const MultiIndex& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

std::string format_multi_index(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace lcann
