#include "lcann/claims.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcann {

const std::vector<ClaimInfo>& claims_registry() {
  static const std::vector<ClaimInfo> registry = {
      {"dsubmodule-pi-power",
       "Every nonzero ideal of V[x_1..x_n] stable under all divided-power derivations is pi^ell R for one ell >= 0."},
      {"annihilator-dichotomy",
       "The annihilator in R of a module in the category of D(R,V)-modules considered here is either zero or a power of pi."},
      {"reduction-mod-pi",
       "Applying a divided-power operator commutes with reducing coefficients modulo pi."},
      {"taylor-chain-map",
       "Raising the generators to the (ell+1)-st power gives a comparison map of Taylor resolutions over the ell-th one."},
      {"ext-support-box",
       "For the Reisner ideal, every nonzero graded piece of Ext^4(A/I_ell, A) lies in the box [-ell, 0]^6 "
       "and the layer of degrees just outside the box is zero."},
      {"ext-torsion-persists",
       "If an integer kills Ext^j(A/I, A), it kills Ext^j(A/I_ell, A) for every power ideal I_ell of the given generators."},
      {"ext4-level1-residue-field",
       "For the Reisner ideal of the six-vertex projective plane, Ext^4(A/I, A) is Z/2 concentrated in degree (-1,...,-1) with every variable acting by zero."},
      {"ext4-truncated-presentation",
       "For the Reisner ideal, Ext^4(A/I_ell, A) is A/(2, x_0^ell, ..., x_5^ell), generated in degree (-ell,...,-ell)."},
      {"ext4-transition-injective",
       "The maps Ext^4(A/I_ell, A) -> Ext^4(A/I_{ell+1}, A) are injective in every degree."},
      {"ext4-transition-product",
       "On the truncated presentations the transition map is multiplication by x_0 x_1 ... x_5."},
      {"ann-h4-equals-2",
       "The local cohomology module H^4_I of the completed polynomial ring over Z_(2), I the Reisner ideal, has annihilator (2)."},
      {"rp2-integral-cohomology",
       "The six-vertex projective plane has reduced integral cohomology 0, 0, Z/2 in degrees 0, 1, 2."},
      {"rp2-mod2-cohomology",
       "Over F_2 the six-vertex projective plane has one-dimensional reduced cohomology in degrees 1 and 2."},
      {"universal-coefficients",
       "Mod-p Betti numbers equal the free rank plus the p-torsion counts in the same and the next degree."},
      {"rp2-cohen-macaulay-odd",
       "Over F_3 the local cohomology of the Stanley-Reisner ring vanishes below degree 3."},
      {"rp2-char2-defect",
       "Over F_2 the degree-0 piece of H^2 of the Stanley-Reisner ring is nonzero."},
      {"filtration-axioms",
       "The layer family is increasing, separated and exhaustive, pi shifts layers down by one, and multiplication by pi is an isomorphism on layer quotients away from a finite window."},
      {"filtration-finite-length",
       "A filtration of finite type with bounds (a_i, b_i) forces pi^(sum of b_i - a_i) to kill the module; otherwise the annihilator is zero."},
      {"localization-filtration",
       "On R_f with f = pi^e g, the layers pi^(-j) R_g (e > 0) or pi^(-j) R_f clipped at j = 0 (e = 0) form a filtration."},
      {"sv-containment",
       "Each of the four given polynomials lies in the Reisner ideal."},
      {"sv-radical",
       "Each Reisner generator lies in the radical of the four polynomials, over F_2 and over Q."},
  };
  return registry;
}

const ClaimInfo* find_claim(const std::string& id) {
  const auto& r = claims_registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const ClaimInfo& c) { return c.id == id; });
  return it == r.end() ? nullptr : &*it;
}

std::string ClaimResult::status_string() const {
  switch (status) {
    case ClaimStatus::Verified:
      return "verified";
    case ClaimStatus::EvidenceAtLevel:
      return "evidence-at-level-" + std::to_string(level);
    case ClaimStatus::Failed:
      break;
  }
  return "failed";
}

ClaimResult claim(const std::string& id, bool ok, std::string detail) {
  if (!find_claim(id)) throw std::logic_error("unregistered claim id: " + id);
  return {id, ok ? ClaimStatus::Verified : ClaimStatus::Failed, 0, std::move(detail)};
}

ClaimResult claim_at_level(const std::string& id, bool ok, int level, std::string detail) {
  if (!find_claim(id)) throw std::logic_error("unregistered claim id: " + id);
  return {id, ok ? ClaimStatus::EvidenceAtLevel : ClaimStatus::Failed, level, std::move(detail)};
}

}  // namespace lcann
