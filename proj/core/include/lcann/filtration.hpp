#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcann/polynomial.hpp"

namespace lcann {

/// The module carried by one tier, M_i / M_{i-1}, together with the lattice
/// its layers are cut from.
///  - Quotient: M = R / pi^ell R, layers pi^s M (zero once s >= ell).
///  - Lattice:  layers pi^s B for a pi-torsion-free B. With pi_inverted the
///    tier module is B[1/pi] and every integer s is allowed; otherwise the
///    tier module is B itself and negative shifts clip to B.
struct BaseModule {
  enum class Kind { Quotient, Lattice };
  Kind kind = Kind::Lattice;
  int torsion_exponent = 0;  // Quotient only
  bool pi_inverted = false;  // Lattice only
  std::string label;         // free text, e.g. "R_g"

  /// Clipped exponent actually realised by pi^s.
  int effective(int s) const;
  /// pi^s-layer is the zero submodule.
  bool is_zero_layer(int s) const;
  /// pi^s-layer is the whole tier module.
  bool is_full_layer(int s) const;
};

/// How the layers continue outside the explicit window.
///  - Shift:  s_j keeps moving by one per step (multiplication by pi is an
///            isomorphism on consecutive layer quotients).
///  - Stable: s_j stays constant (all further layer quotients vanish).
///  - Wild:   nothing is known; multiplication by pi may fail to be an
///            isomorphism infinitely often.
enum class Tail { Shift, Stable, Wild };

/// One tier: N_j = pi^{s_j} B for j in [lo, hi], extended by the tails.
struct FiltrationTier {
  BaseModule base;
  int lo = 0;
  std::vector<int> shifts;  // s_lo .. s_hi
  Tail below = Tail::Stable;
  Tail above = Tail::Stable;
  std::optional<int> lower_bound;  // declared a with N_a = 0
  std::optional<int> upper_bound;  // declared b with N_b = M

  int hi() const { return lo + static_cast<int>(shifts.size()) - 1; }
  /// s_j, following the tail rules; nullopt on a wild side.
  std::optional<int> shift_at(int j) const;
};

/// 0 = M_0 ⊆ M_1 ⊆ ... ⊆ M_t with a layer family on each quotient.
struct FiltrationSpec {
  std::uint64_t p = 2;
  std::vector<FiltrationTier> tiers;
};

struct AxiomFailure {
  std::size_t tier = 0;
  int condition = 0;  // 1..5; 0 for a declared bound that does not hold
  std::optional<int> j;
  std::string message;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
  bool fails(int condition) const;
};

AxiomReport check_axioms(const FiltrationSpec& spec);

struct FiltrationVerdict {
  bool finite_length = false;
  /// Sum over tiers of b_i - a_i when of finite type.
  int length_bound = 0;
  std::vector<std::pair<int, int>> bounds;  // tight (a_i, b_i)
  /// "(0)" for infinite type, otherwise "pi^length_bound kills M".
  std::string annihilator(std::uint64_t p) const;
};

/// Throws AlgebraError when an axiom fails.
FiltrationVerdict finite_type_and_verdict(const FiltrationSpec& spec);

/// Tight (a, b) of a tier, when present.
std::optional<int> tight_lower_bound(const FiltrationTier& tier);
std::optional<int> tight_upper_bound(const FiltrationTier& tier);

FiltrationSpec build_filtration_quotient(std::uint64_t p, int ell);
/// Canonical filtration on R_f, f = pi^e g with g of pi-content zero.
FiltrationSpec build_filtration_localization(const DvrPoly& f);

/// Grow every explicit window by k steps on each non-wild side.
FiltrationSpec widen_window(const FiltrationSpec& spec, int k);
/// Tiers of b placed on top of the tiers of a.
FiltrationSpec concat(const FiltrationSpec& a, const FiltrationSpec& b);

/// r / f^k in R_f, kept with f not dividing r when k > 0.
class LocalizedElement {
 public:
  LocalizedElement(DvrPoly f, DvrPoly numerator, int k);

  const DvrPoly& numerator() const { return numerator_; }
  int f_power() const { return k_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Membership in N_j of the canonical filtration on R_f.
  bool in_layer(int j) const;
  /// Least j with membership; nullopt for zero.
  std::optional<int> layer_index() const;

  LocalizedElement times_pi() const;

 private:
  DvrPoly f_;
  int e_ = 0;
  DvrPoly numerator_;
  int k_ = 0;
};

/// Split f = pi^e g by coefficient valuations.
std::pair<int, DvrPoly> pi_content_split(const DvrPoly& f);

}  // namespace lcann
