#include "lcann/filtration.hpp"

#include <algorithm>
#include <cstdlib>

namespace lcann {

int BaseModule::effective(int s) const {
  if (kind == Kind::Quotient) return std::clamp(s, 0, torsion_exponent);
  return pi_inverted ? s : std::max(s, 0);
}

bool BaseModule::is_zero_layer(int s) const {
  return kind == Kind::Quotient && effective(s) >= torsion_exponent;
}

bool BaseModule::is_full_layer(int s) const {
  if (kind == Kind::Lattice && pi_inverted) return false;
  return effective(s) == 0;
}

std::optional<int> FiltrationTier::shift_at(int j) const {
  if (shifts.empty()) return std::nullopt;
  if (j >= lo && j <= hi()) return shifts[static_cast<std::size_t>(j - lo)];
  if (j < lo) {
    if (below == Tail::Wild) return std::nullopt;
    return below == Tail::Shift ? shifts.front() + (lo - j) : shifts.front();
  }
  if (above == Tail::Wild) return std::nullopt;
  return above == Tail::Shift ? shifts.back() - (j - hi()) : shifts.back();
}

bool AxiomReport::fails(int condition) const {
  return std::any_of(failures.begin(), failures.end(), [&](const AxiomFailure& f) { return f.condition == condition; });
}

namespace {

/// Window plus enough margin on each side for clipped tails to settle.
std::pair<int, int> scan_range(const FiltrationTier& t) {
  int reach = 2;
  for (int s : t.shifts) reach = std::max(reach, std::abs(s) + 2);
  if (t.base.kind == BaseModule::Kind::Quotient) reach += t.base.torsion_exponent;
  return {t.lo - reach, t.hi() + reach};
}

void validate_tier(const FiltrationTier& t) {
  if (t.shifts.empty()) throw AlgebraError("filtration tier has an empty window");
  if (t.base.kind == BaseModule::Kind::Quotient && t.base.torsion_exponent < 1)
    throw AlgebraError("quotient tier needs a positive torsion exponent");
}

}  // namespace

std::optional<int> tight_lower_bound(const FiltrationTier& tier) {
  validate_tier(tier);
  auto [first, last] = scan_range(tier);
  std::optional<int> best;
  for (int j = first; j <= last; ++j) {
    auto s = tier.shift_at(j);
    if (s && tier.base.is_zero_layer(*s)) best = j;
  }
  return best;
}

std::optional<int> tight_upper_bound(const FiltrationTier& tier) {
  validate_tier(tier);
  auto [first, last] = scan_range(tier);
  for (int j = first; j <= last; ++j) {
    auto s = tier.shift_at(j);
    if (s && tier.base.is_full_layer(*s)) return j;
  }
  return std::nullopt;
}

AxiomReport check_axioms(const FiltrationSpec& spec) {
  AxiomReport report;
  if (!is_prime(spec.p)) throw AlgebraError("residue characteristic must be prime");
  for (std::size_t i = 0; i < spec.tiers.size(); ++i) {
    const FiltrationTier& t = spec.tiers[i];
    validate_tier(t);
    const BaseModule& base = t.base;
    auto fail = [&](int condition, std::optional<int> j, std::string message) {
      report.failures.push_back({i, condition, j, std::move(message)});
    };
    auto [first, last] = scan_range(t);

    // (1) increasing, (3) pi N_j ⊆ N_{j-1}. Condition (4) reduces to (3) here:
    // a layer pi^a B / pi^b B is a module over R/pi exactly when b - a <= 1.
    for (int j = first + 1; j <= last; ++j) {
      auto s = t.shift_at(j), prev = t.shift_at(j - 1);
      if (!s || !prev) continue;
      int a = base.effective(*s), b = base.effective(*prev);
      if (a > b) fail(1, j, "N_{j-1} is not contained in N_j");
      if (a + 1 < b) fail(3, j, "pi N_j is not contained in N_{j-1}");
    }

    bool zero_in_window = base.is_zero_layer(t.shifts.front());
    bool full_in_window = base.is_full_layer(t.shifts.back());

    // (5) eventual isomorphism: shift and stable tails satisfy it; a wild
    // tail is acceptable only when the layers there are pinned down.
    if (t.below == Tail::Wild && !zero_in_window && !t.lower_bound)
      fail(5, std::nullopt, "multiplication by pi fails to be an isomorphism on the lower tail");
    if (t.above == Tail::Wild && !full_in_window && !t.upper_bound)
      fail(5, std::nullopt, "multiplication by pi fails to be an isomorphism on the upper tail");

    // (2) exhaustive and separated.
    bool reaches_zero = tight_lower_bound(t).has_value();
    if (!reaches_zero && t.below == Tail::Stable) fail(2, std::nullopt, "the layers do not intersect to zero");
    if (!reaches_zero && t.below == Tail::Shift && base.kind == BaseModule::Kind::Quotient)
      fail(2, std::nullopt, "the layers do not intersect to zero");
    bool reaches_full = tight_upper_bound(t).has_value();
    bool union_full = reaches_full || (t.above == Tail::Shift && base.kind == BaseModule::Kind::Lattice && base.pi_inverted);
    if (!union_full && t.above != Tail::Wild) fail(2, std::nullopt, "the layers do not exhaust the tier module");

    // Declared stabilization bounds.
    if (t.lower_bound) {
      int a = *t.lower_bound;
      auto s = t.shift_at(a);
      bool zero = s ? base.is_zero_layer(*s) : (a < t.lo && zero_in_window);
      if (!zero) fail(0, a, "declared lower bound a does not have N_a = 0");
    }
    if (t.upper_bound) {
      int b = *t.upper_bound;
      auto s = t.shift_at(b);
      bool full = s ? base.is_full_layer(*s) : (b > t.hi() && full_in_window);
      if (!full) fail(0, b, "declared upper bound b does not have N_b = M");
    }
  }
  return report;
}

std::string FiltrationVerdict::annihilator(std::uint64_t p) const {
  if (!finite_length) return "(0)";
  if (length_bound == 0) return "(1)";
  std::string power = std::to_string(p);
  if (length_bound > 1) power += "^" + std::to_string(length_bound);
  return "contains (" + power + ")";
}

FiltrationVerdict finite_type_and_verdict(const FiltrationSpec& spec) {
  auto report = check_axioms(spec);
  if (!report.ok()) throw AlgebraError("filtration axioms fail: " + report.failures.front().message);
  FiltrationVerdict v;
  v.finite_length = true;
  for (const auto& t : spec.tiers) {
    auto a = tight_lower_bound(t), b = tight_upper_bound(t);
    if (!a || !b) {
      v.finite_length = false;
      v.bounds.clear();
      v.length_bound = 0;
      break;
    }
    v.bounds.emplace_back(*a, *b);
    v.length_bound += *b - *a;
  }
  return v;
}

FiltrationSpec build_filtration_quotient(std::uint64_t p, int ell) {
  if (ell < 1) throw AlgebraError("quotient exponent must be at least 1");
  if (!is_prime(p)) throw AlgebraError("residue characteristic must be prime");
  FiltrationTier t;
  t.base = {BaseModule::Kind::Quotient, ell, false, "R/p^" + std::to_string(ell)};
  t.lo = -ell;
  for (int j = -ell; j <= 0; ++j) t.shifts.push_back(-j);
  t.below = t.above = Tail::Stable;
  t.lower_bound = -ell;
  t.upper_bound = 0;
  return {p, {t}};
}

std::pair<int, DvrPoly> pi_content_split(const DvrPoly& f) {
  if (f.is_zero()) throw AlgebraError("cannot split the zero polynomial");
  int e = min_coefficient_valuation(f);
  std::uint64_t p = f.leading_term().coeff.prime();
  DvrScalar pe = DvrScalar::pi_power(p, e);
  DvrPoly g = f.map_coefficients([&](const DvrScalar& c) { return *DvrScalar::divide(c, pe); });
  return {e, g};
}

FiltrationSpec build_filtration_localization(const DvrPoly& f) {
  auto [e, g] = pi_content_split(f);
  std::uint64_t p = f.leading_term().coeff.prime();
  FiltrationTier t;
  t.base.kind = BaseModule::Kind::Lattice;
  if (e > 0) {
    t.base.pi_inverted = true;
    t.base.label = "R_g, g = " + g.to_string();
    t.lo = -1;
    t.shifts = {1, 0, -1};
    t.below = t.above = Tail::Shift;
  } else {
    t.base.pi_inverted = false;
    t.base.label = "R_f, f = " + f.to_string();
    t.lo = -1;
    t.shifts = {1, 0};
    t.below = Tail::Shift;
    t.above = Tail::Stable;
    t.upper_bound = 0;
  }
  return {p, {t}};
}

FiltrationSpec widen_window(const FiltrationSpec& spec, int k) {
  if (k < 0) throw AlgebraError("cannot shrink a window");
  FiltrationSpec out = spec;
  for (auto& t : out.tiers) {
    validate_tier(t);
    int lo = t.below == Tail::Wild ? t.lo : t.lo - k;
    int hi = t.above == Tail::Wild ? t.hi() : t.hi() + k;
    std::vector<int> shifts;
    for (int j = lo; j <= hi; ++j) shifts.push_back(*t.shift_at(j));
    t.lo = lo;
    t.shifts = std::move(shifts);
  }
  return out;
}

FiltrationSpec concat(const FiltrationSpec& a, const FiltrationSpec& b) {
  if (a.p != b.p) throw AlgebraError("tiers use different residue characteristics");
  FiltrationSpec out = a;
  out.tiers.insert(out.tiers.end(), b.tiers.begin(), b.tiers.end());
  return out;
}

// ---------------------------------------------------------------------------

LocalizedElement::LocalizedElement(DvrPoly f, DvrPoly numerator, int k)
    : f_(std::move(f)), numerator_(std::move(numerator)), k_(k) {
  if (f_.is_zero()) throw AlgebraError("cannot localize at zero");
  if (k_ < 0) throw AlgebraError("negative power of f");
  if (numerator_.nvars() != f_.nvars()) throw AlgebraError("numerator and f live in different rings");
  e_ = pi_content_split(f_).first;
  while (k_ > 0 && !numerator_.is_zero()) {
    auto q = exact_divide(numerator_, f_);
    if (!q) break;
    numerator_ = std::move(*q);
    --k_;
  }
  if (numerator_.is_zero()) k_ = 0;
}

bool LocalizedElement::in_layer(int j) const {
  if (is_zero()) return true;
  return j - e_ * k_ + min_coefficient_valuation(numerator_) >= 0;
}

std::optional<int> LocalizedElement::layer_index() const {
  if (is_zero()) return std::nullopt;
  return e_ * k_ - min_coefficient_valuation(numerator_);
}

LocalizedElement LocalizedElement::times_pi() const {
  std::uint64_t p = f_.leading_term().coeff.prime();
  return LocalizedElement(f_, numerator_.scaled(DvrScalar::pi_power(p, 1)), k_);
}

}  // namespace lcann
