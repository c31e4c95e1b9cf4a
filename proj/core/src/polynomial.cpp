#include "lcann/polynomial.hpp"

#include <algorithm>

namespace lcann {

int min_coefficient_valuation(const DvrPoly& f) {
  if (f.is_zero()) throw AlgebraError("pi-content of the zero polynomial");
  int best = f.terms().front().coeff.val();
  for (const auto& t : f.terms()) best = std::min(best, t.coeff.val());
  return best;
}

ModPPoly reduce_mod_pi(const DvrPoly& f) {
  return f.map_coefficients([](const DvrScalar& c) { return c.residue(); });
}

}  // namespace lcann
