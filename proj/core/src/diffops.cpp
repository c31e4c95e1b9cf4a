#include "lcann/diffops.hpp"

#include <algorithm>

namespace lcann {

DividedPowerOp<DvrScalar> compose_divided_powers(const DvrSpec& dvr, int n, int i, int s, int t) {
  if (s < 0 || t < 0) throw AlgebraError("divided-power orders must be nonnegative");
  if (i < 0 || i >= n) throw AlgebraError("variable index out of range");
  MultiIndex order(static_cast<std::size_t>(n), 0);
  order[static_cast<std::size_t>(i)] = s + t;
  Rational c(binomial(s + t, s));
  return DividedPowerOp<DvrScalar>::single(DvrPoly::constant(n, DvrScalar(dvr.p, c)), order);
}

DSubmoduleVerdict classify_d_submodule(const std::vector<DvrPoly>& gens) {
  std::optional<int> ell;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int v = min_coefficient_valuation(g);
    ell = ell ? std::min(*ell, v) : v;
  }
  if (!ell) throw AlgebraError("zero submodule");
  return {*ell};
}

MonomialIdeal pi_saturate(const std::vector<DvrPoly>& gens) {
  if (gens.empty()) throw AlgebraError("no generators");
  const int n = gens.front().nvars();
  std::vector<MultiIndex> monos;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw AlgebraError("generators live in different rings");
    if (g.is_zero()) continue;
    if (!g.is_term()) throw AlgebraError("unsupported: requires Gröbner machinery");
    monos.push_back(g.leading_term().exponent);
  }
  return MonomialIdeal(n, std::move(monos));
}

bool is_divided_power_stable(const MonomialIdeal& ideal, int max_order) {
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < g.size(); ++i)
      for (int t = 1; t <= std::min(max_order, g[i]); ++t) {
        // d_i^[t] x^g = C(g_i, t) x^(g - t e_i); the binomial is nonzero.
        MultiIndex image = g;
        image[i] -= t;
        if (!ideal.contains(image)) return false;
      }
  return true;
}

std::string AnnihilatorIdeal::to_string(std::uint64_t p) const {
  switch (kind) {
    case Kind::Zero:
      return "(0)";
    case Kind::Unit:
      return "(1)";
    case Kind::PiPower:
      return ell == 1 ? "(" + std::to_string(p) + ")"
                      : "(" + std::to_string(p) + "^" + std::to_string(ell) + ")";
    case Kind::Inconclusive:
      break;
  }
  return "inconclusive";
}

AnnihilatorIdeal infer_annihilator(const AnnihilatorEvidence& ev) {
  if (!ev.nonzero) {
    if (ev.kill_exponent.value_or(0) != 0 || ev.infinite_type_witness)
      throw AlgebraError("inconsistent evidence: zero module with nontrivial kill data");
    return {AnnihilatorIdeal::Kind::Unit, 0};
  }
  if (ev.kill_exponent) {
    if (*ev.kill_exponent <= 0)
      throw AlgebraError("inconsistent evidence: a nonzero module is not killed by pi^0");
    if (ev.infinite_type_witness)
      throw AlgebraError("inconsistent evidence: killed by a pi-power yet of infinite type");
    return {AnnihilatorIdeal::Kind::PiPower, *ev.kill_exponent};
  }
  if (ev.infinite_type_witness) return {AnnihilatorIdeal::Kind::Zero, 0};
  return {AnnihilatorIdeal::Kind::Inconclusive, 0};
}

}  // namespace lcann
