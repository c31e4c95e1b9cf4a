#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcann/monomial_ideal.hpp"
#include "lcann/polynomial.hpp"

namespace lcann {

enum class MonomialOrder { Grlex, Lex };

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::Grlex;
  /// Wall-clock limit; GroebnerTimeout is thrown when exceeded.
  std::optional<std::chrono::milliseconds> timeout;
};

class GroebnerTimeout : public AlgebraError {
 public:
  GroebnerTimeout() : AlgebraError("Groebner basis computation timed out") {}
};

/// Reduced Groebner basis over Q (characteristic 0) or F_p. Polynomials are
/// stored with rational coefficients; over F_p they are the representatives
/// 0..p-1. Each element is monic and listed in increasing leading term.
struct GroebnerBasis {
  std::uint64_t characteristic = 0;
  MonomialOrder order = MonomialOrder::Grlex;
  int nvars = 0;
  std::vector<RatPoly> basis;
  std::size_t pairs_reduced = 0;

  bool is_unit_ideal() const;
  /// Leading exponent of basis element k under the basis order.
  MultiIndex leading_exponent(std::size_t k) const;
};

GroebnerBasis groebner(const std::vector<RatPoly>& gens, std::uint64_t characteristic,
                       GroebnerOptions options = {});

/// Fully reduced normal form modulo the basis.
RatPoly normal_form(const RatPoly& f, const GroebnerBasis& g);
/// Normal form where each reduction step picks a random eligible divisor and
/// a random reducible term.
RatPoly normal_form_random(const RatPoly& f, const GroebnerBasis& g, std::mt19937_64& rng);

bool ideal_member(const RatPoly& f, const GroebnerBasis& g);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

/// m in sqrt(J) iff 1 in (J, 1 - t m) with t a fresh last variable.
bool radical_member(const RatPoly& m, const std::vector<RatPoly>& ideal, std::uint64_t characteristic,
                    GroebnerOptions options = {});

/// Coefficients mapped into F_p representatives; throws when a denominator
/// vanishes mod p.
RatPoly reduce_mod_p(const RatPoly& f, std::uint64_t p);

/// Compare exponents under an order; negative, zero or positive.
int compare_exponents(const MultiIndex& a, const MultiIndex& b, MonomialOrder order);

struct SvCheck {
  std::string name;
  bool passed = false;
};

struct SvReport {
  std::vector<RatPoly> elements;       // the four generators of J
  std::vector<MultiIndex> monomials;   // the ten generators of I
  std::vector<bool> elements_in_ideal; // (a) per element
  /// (b) per field: characteristic and per-monomial radical membership.
  std::vector<std::pair<std::uint64_t, std::vector<bool>>> radical;
  bool all_passed() const;
  std::vector<std::string> failures() const;
};

/// Four polynomials whose radical equals the Reisner ideal over F_2 and Q.
std::vector<RatPoly> schmitt_vogel_elements();

/// Every term of f is divisible by a generator of I.
bool terms_in_monomial_ideal(const RatPoly& f, const MonomialIdeal& ideal);

SvReport sv_containment_check(const std::vector<RatPoly>& elements, const MonomialIdeal& ideal,
                              GroebnerOptions options = {});

}  // namespace lcann
