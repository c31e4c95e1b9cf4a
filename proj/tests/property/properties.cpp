#include "properties.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "lcann/diffops.hpp"
#include "lcann/ext.hpp"
#include "lcann/filtration.hpp"
#include "lcann/groebner.hpp"
#include "lcann/simplicial.hpp"
#include "oracles.hpp"

namespace lcann::testing {

void PropertyOutcome::check(bool ok, const std::string& what) {
  if (!ok) failures.push_back("case " + std::to_string(cases) + ": " + what);
}

std::uint64_t property_seed() {
  if (const char* s = std::getenv("LCANN_PROPERTY_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

PropertyOutcome run_property(const Property& property, std::uint64_t seed) {
  PropertyOutcome out;
  Gen gen(seed ^ std::hash<std::string>{}(property.name));
  for (std::size_t k = 0; k < property.cases; ++k) {
    ++out.cases;
    try {
      property.run_case(gen, out);
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
  }
  return out;
}

namespace {

const std::vector<std::uint64_t> kPrimes = {2, 3, 5, 7};

MultiIndex unit_vector(int n, int i, int t = 1) {
  MultiIndex e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = t;
  return e;
}

template <class C>
Polynomial<C> times_integer(const Polynomial<C>& f, const Integer& k) {
  return f.map_coefficients([&](const C& c) { return scale_int(c, k); });
}

DividedPowerOp<DvrScalar> random_op(Gen& g, std::uint64_t p, int n) {
  DividedPowerOp<DvrScalar> op;
  op.n = n;
  int count = g.uniform(1, 2);
  for (int k = 0; k < count; ++k) op.add(g.dvr_poly(p, n, 2, 2, 2), g.exponent(n, 3));
  return op;
}

// Torsion coordinates only matter modulo the summand order.
bool same_modulo_orders(const IntMatrix& a, const IntMatrix& b, const Cohomology& target) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Integer& d = target.summand_order(r);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Integer diff = a(r, c) - b(r, c);
      if (d == 0 ? diff != 0 : mpz_divisible_p(diff.get_mpz_t(), d.get_mpz_t()) == 0) return false;
    }
  }
  return true;
}

MonomialIdeal permute_generators(Gen& g, const MonomialIdeal& ideal) {
  auto gens = ideal.generators();
  std::shuffle(gens.begin(), gens.end(), g.engine());
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

std::vector<Property> build_catalog() {
  std::vector<Property> c;

  // -- divided powers -------------------------------------------------------
  c.push_back({"leibniz-order-one", "divided-powers", 150, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    auto f = g.dvr_poly(p, n, 4, 4, 3), h = g.dvr_poly(p, n, 4, 4, 3);
    int i = g.uniform(0, n - 1);
    auto d = unit_vector(n, i);
    out.check(divided_power_derivative(f * h, d) ==
                  divided_power_derivative(f, d) * h + f * divided_power_derivative(h, d),
              "d_i(fh) != d_i(f)h + f d_i(h)");
    // d_i^[t](fh) = sum_u d_i^[u](f) d_i^[t-u](h)
    int t = g.uniform(0, 4);
    DvrPoly rhs(n);
    for (int u = 0; u <= t; ++u)
      rhs += divided_power_derivative(f, unit_vector(n, i, u)) * divided_power_derivative(h, unit_vector(n, i, t - u));
    out.check(divided_power_derivative(f * h, unit_vector(n, i, t)) == rhs, "divided-power Leibniz");
  }});

  c.push_back({"factorial-times-divided-power", "divided-powers", 120, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    auto f = g.dvr_poly(p, n, 10, 5, 3);
    int i = g.uniform(0, n - 1), t = g.uniform(0, 8);
    out.check(iterated_derivative(f, i, t) ==
                  times_integer(divided_power_derivative(f, unit_vector(n, i, t)), factorial(static_cast<unsigned long>(t))),
              "t! d^[t] != d^t");
  }});

  c.push_back({"divided-power-composition", "divided-powers", 100, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    auto f = g.dvr_poly(p, n, 10, 5, 3);
    int i = g.uniform(0, n - 1), s = g.uniform(0, 5), t = g.uniform(0, 5);
    auto seq = divided_power_derivative(divided_power_derivative(f, unit_vector(n, i, t)), unit_vector(n, i, s));
    out.check(seq == times_integer(divided_power_derivative(f, unit_vector(n, i, s + t)), binomial(s + t, s)),
              "d^[s] d^[t] != C(s+t,s) d^[s+t]");
    out.check(compose_divided_powers(DvrSpec(p), n, i, s, t).apply(f) == seq, "compose_divided_powers");
  }});

  c.push_back({"compose-matches-sequential", "divided-powers", 100, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    auto a = random_op(g, p, n), b = random_op(g, p, n);
    auto f = g.dvr_poly(p, n, 6, 4, 2);
    out.check(compose(a, b).apply(f) == a.apply(b.apply(f)), "compose(a,b) f != a(b(f))");
  }});

  c.push_back({"grlex-extraction", "divided-powers", 100, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 4);
    auto f = g.dvr_poly(p, n, 5, 8, 3);
    auto [gamma, omega] = grlex_leading_term(f);
    out.check(divided_power_derivative(f, gamma) == DvrPoly::constant(n, omega), "d^[gamma] f != omega");
    auto best = f.terms().front().exponent;
    for (const auto& t : f.terms())
      if (grlex_compare(t.exponent, best) > 0) best = t.exponent;
    out.check(best == gamma, "leading term is not the grlex maximum");
    auto scaled = f.scaled(DvrScalar(p, g.unit(p)) * DvrScalar::pi_power(p, g.uniform(0, 3)));
    out.check(grlex_leading_term(scaled).first == gamma, "scaling moved the leading term");
  }});

  // -- integer linear algebra -------------------------------------------------
  c.push_back({"snf-remultiplication", "smith", 150, [](Gen& g, PropertyOutcome& out) {
    std::size_t r = static_cast<std::size_t>(g.uniform(1, 5)), cols = static_cast<std::size_t>(g.uniform(1, 5));
    IntMatrix m = g.matrix(r, cols, -9, 9);
    if (g.coin(0.2)) m = m * g.matrix(cols, cols, -1, 1);  // rank drops often
    auto s = smith_normal_form(m);
    out.check(s.u * m * s.w == s.d, "U M W != D");
    out.check(abs(determinant(s.u)) == 1 && abs(determinant(s.w)) == 1, "transform not unimodular");
    out.check(s.u * s.u_inv == IntMatrix::identity(r) && s.w * s.w_inv == IntMatrix::identity(cols),
              "tracked inverse wrong");
    bool diagonal = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < cols; ++k)
        if ((i != k || i >= s.rank) && s.d(i, k) != 0) diagonal = false;
    out.check(diagonal, "D not diagonal of the stated rank");
    auto inv = s.invariant_factors();
    bool chain = inv.size() == s.rank;
    for (std::size_t k = 0; chain && k < inv.size(); ++k) {
      chain = inv[k] > 0;
      if (k + 1 < inv.size()) chain = chain && mpz_divisible_p(inv[k + 1].get_mpz_t(), inv[k].get_mpz_t());
    }
    out.check(chain, "divisibility chain");
  }});

  c.push_back({"taylor-delta-squared", "resolutions", 100, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(1, 4);
    auto ideal = g.monomial_ideal(n, 5, 3);
    ExtCalculator calc(ideal);
    out.check(calc.taylor().verify_d_squared_zero(), "Taylor d o d != 0");
    auto box = default_box(ideal);
    auto points = box.points();
    for (int k = 0; k < 4; ++k) {
      const auto& alpha = g.pick(points);
      int j = g.uniform(0, static_cast<int>(ideal.size()));
      auto s = calc.strand_matrices(j, alpha);
      out.check((s.outgoing * s.incoming).is_zero(), "strand delta o delta != 0");
      bool small = true;
      for (const IntMatrix* mat : {&s.incoming, &s.outgoing})
        for (std::size_t r = 0; r < mat->rows(); ++r)
          for (std::size_t q = 0; q < mat->cols(); ++q)
            if (abs((*mat)(r, q)) > 1) small = false;
      out.check(small, "strand entry outside {-1,0,1}");
    }
  }});

  c.push_back({"comparison-chain-map", "resolutions", 30, [](Gen& g, PropertyOutcome& out) {
    auto ideal = g.monomial_ideal(g.uniform(1, 4), 4, 3);
    out.check(comparison_map_is_chain_map(ideal, g.uniform(1, 3)), "comparison map is not a chain map");
  }});

  // -- saturation and reduction mod pi ---------------------------------------
  c.push_back({"saturation-d-closure", "saturation", 100, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    std::vector<DvrPoly> gens;
    bool constants_only = g.coin(0.25);
    int count = g.uniform(1, 4);
    for (int k = 0; k < count; ++k) {
      MultiIndex e = constants_only ? MultiIndex(static_cast<std::size_t>(n), 0) : g.exponent(n, 3);
      gens.push_back(DvrPoly::monomial(n, e, g.dvr_scalar(p, 5)));
    }
    auto J = pi_saturate(gens);
    for (const auto& gen : gens) out.check(J.contains(gen.leading_term().exponent), "generator lost");
    // Brute force: apply every d_i^[t], t <= 6, to every generator.
    bool stable = true;
    for (const auto& m : J.generators())
      for (int i = 0; i < n; ++i)
        for (int t = 1; t <= 6; ++t) {
          auto image = divided_power_derivative(DvrPoly::monomial(n, m, DvrScalar(p, 1L)), unit_vector(n, i, t));
          for (const auto& term : image.terms())
            if (!J.contains(term.exponent)) stable = false;
        }
    out.check(stable == is_divided_power_stable(J, 6), "stability test disagrees with brute force");
    // A proper monomial ideal always loses a variable under some d_i.
    out.check(stable == J.is_unit(), "closed under D yet proper");
    if (constants_only) out.check(J.is_unit() && stable, "pi-power ideal did not saturate to (1)");
  }});

  c.push_back({"reduce-mod-pi-commutes", "reduction", 150, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    auto f = g.dvr_poly(p, n, 5, 5, 2), h = g.dvr_poly(p, n, 3, 3, 2);
    auto t = g.exponent(n, 4);
    out.check(reduce_mod_pi(divided_power_derivative(f, t)) == divided_power_derivative(reduce_mod_pi(f), t),
              "reduction does not commute with d^[t]");
    auto op = random_op(g, p, n);
    DividedPowerOp<ModP> bar;
    bar.n = n;
    for (const auto& e : op.terms) bar.add(reduce_mod_pi(e.coeff), e.order);
    out.check(reduce_mod_pi(op.apply(f)) == bar.apply(reduce_mod_pi(f)), "reduction does not commute with op");
    out.check(reduce_mod_pi(f * h) == reduce_mod_pi(f) * reduce_mod_pi(h), "reduction not multiplicative");
    out.check(reduce_mod_pi(f + h) == reduce_mod_pi(f) + reduce_mod_pi(h), "reduction not additive");
  }});

  c.push_back({"dvr-valuation-laws", "scalars", 200, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    auto a = g.dvr_scalar(p, 6), b = g.dvr_scalar(p, 6);
    if (g.coin(0.1)) b = DvrScalar(p, 0L);
    auto prod = a * b;
    if (b.is_zero()) {
      out.check(prod.is_zero(), "a * 0 != 0");
      return;
    }
    out.check(prod.val() == a.val() + b.val(), "v(ab) != v(a) + v(b)");
    auto sum = a + b;
    out.check(sum.is_zero() || sum.val() >= std::min(a.val(), b.val()), "v(a+b) < min");
    auto q = DvrScalar::divide(prod, b);
    out.check(q && *q == a, "(ab)/b != a");
    out.check((a * b).residue() == a.residue() * b.residue(), "residue map not multiplicative");
    out.check(DvrScalar::divide(a, b).has_value() == (a.val() >= b.val()), "divisibility not by valuation");
  }});

  c.push_back({"exact-divide-roundtrip", "scalars", 100, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(1, 3);
    auto q = g.rat_poly(n, 3, 5), d = g.rat_poly(n, 3, 5);
    auto back = exact_divide(q * d, d);
    out.check(back && *back == q, "(q d)/d != q");
  }});

  // -- monomial ideals and Ext ----------------------------------------------
  c.push_back({"monomial-colon-oracle", "monomial", 100, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(1, 4);
    auto I = g.monomial_ideal(n, 4, 4), J = g.monomial_ideal(n, 4, 4);
    out.check(colon_matches_divisibility(I, J, monomial_colon(I, J), 6), "colon disagrees with divisibility");
  }});

  c.push_back({"ext-local-duality", "monomial", 50, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(2, 5);
    auto ideal = g.squarefree_ideal(n, 5);
    ExtCalculator calc(ideal);
    auto points = DegreeBox::cube(n, -1, 0).points();
    for (std::uint64_t p : {2u, 3u})
      for (int j = 0; j <= n; ++j)
        for (const auto& alpha : points)
          out.check(ext_dim_mod_p(calc, j, alpha, p) == ext_dim_by_duality(ideal, j, alpha, p),
                    "Ext vs Hochster at j=" + std::to_string(j) + " alpha=" + format_multi_index(alpha) +
                        " ideal=" + ideal.to_string());
  }});

  c.push_back({"ext-generator-order", "monomial", 40, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(1, 4);
    auto ideal = g.monomial_ideal(n, 5, 3);
    ExtCalculator a(ideal), b(permute_generators(g, ideal));
    int j = g.uniform(0, static_cast<int>(ideal.size()));
    for (const auto& alpha : default_box(ideal).points())
      out.check(a.piece(j, alpha).group == b.piece(j, alpha).group, "generator order changed Ext");
  }});

  c.push_back({"ext-variable-relabel", "monomial", 30, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(2, 4);
    auto ideal = g.monomial_ideal(n, 5, 3);
    std::vector<std::size_t> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), g.engine());
    auto relabel = [&](const MultiIndex& e) {
      MultiIndex out_e(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) out_e[sigma[i]] = e[i];
      return out_e;
    };
    std::vector<MultiIndex> gens;
    for (const auto& m : ideal.generators()) gens.push_back(relabel(m));
    ExtCalculator a(ideal), b(MonomialIdeal(n, std::move(gens)));
    int j = g.uniform(0, static_cast<int>(ideal.size()));
    for (const auto& alpha : default_box(ideal).points())
      out.check(a.piece(j, alpha).group == b.piece(j, relabel(alpha)).group, "relabeling changed Ext");
  }});

  c.push_back({"mult-map-commute", "monomial", 30, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(2, 4);
    auto ideal = power_ideal(g.squarefree_ideal(n, 4), g.uniform(1, 2));
    ExtCalculator calc(ideal);
    auto points = default_box(ideal).points();
    for (int k = 0; k < 3; ++k) {
      auto alpha = g.pick(points);
      int j = g.uniform(0, static_cast<int>(ideal.size()));
      int i = g.uniform(0, n - 1), l = (i + g.uniform(1, n - 1)) % n;
      auto ei = unit_vector(n, i), el = unit_vector(n, l);
      auto one = mult_map(calc, j, add(alpha, ei), l).matrix * mult_map(calc, j, alpha, i).matrix;
      auto two = mult_map(calc, j, add(alpha, el), i).matrix * mult_map(calc, j, alpha, l).matrix;
      auto target = calc.piece(j, add(add(alpha, ei), el));
      auto direct = inclusion_induced_map(calc.piece(j, alpha), target).matrix;
      out.check(same_modulo_orders(one, two, target.strand->cohomology), "x_i x_l != x_l x_i on Ext");
      out.check(same_modulo_orders(one, direct, target.strand->cohomology), "composite != direct map");
    }
  }});

  // -- Groebner ----------------------------------------------------------------
  c.push_back({"groebner-criterion", "groebner", 40, [](Gen& g, PropertyOutcome& out) {
    const std::vector<std::uint64_t> chars = {0, 2, 3, 5};
    auto ch = g.pick(chars);
    int n = g.uniform(2, 3);
    std::vector<RatPoly> gens;
    int count = g.uniform(1, 3);
    for (int k = 0; k < count; ++k) gens.push_back(g.rat_poly(n, 2, 3, 3));
    GroebnerOptions opts;
    opts.order = g.coin() ? MonomialOrder::Grlex : MonomialOrder::Lex;
    opts.timeout = std::chrono::milliseconds(20000);
    auto basis = groebner(gens, ch, opts);
    out.check(satisfies_buchberger_criterion(basis), "S-pair does not reduce to zero");
    for (const auto& f : gens) {
      auto fr = ch ? reduce_mod_p(f, ch) : f;
      out.check(ideal_member(fr, basis), "input generator not in its own ideal");
    }
    for (int k = 0; k < 3; ++k) {
      auto f = g.rat_poly(n, 3, 5, 4);
      if (ch) f = reduce_mod_p(f, ch);
      out.check(normal_form_random(f, basis, g.engine()) == normal_form(f, basis), "normal form depends on order");
    }
  }});

  c.push_back({"radical-monotone", "groebner", 30, [](Gen& g, PropertyOutcome& out) {
    const std::vector<std::uint64_t> chars = {0, 2};
    auto ch = g.pick(chars);
    const int n = 2;
    auto m = g.rat_poly(n, 2, 2, 2);
    std::vector<RatPoly> J;
    int count = g.uniform(1, 2);
    for (int k = 0; k < count; ++k) J.push_back(g.rat_poly(n, 2, 2, 2));
    // Planting m^2 makes positive cases common.
    if (g.coin()) J.push_back(m * m);
    GroebnerOptions opts;
    opts.timeout = std::chrono::milliseconds(20000);
    bool before = radical_member(m, J, ch, opts);
    auto bigger = J;
    bigger.push_back(g.rat_poly(n, 2, 2, 2));
    bool after = radical_member(m, bigger, ch, opts);
    out.check(!before || after, "adding a generator lost radical membership");
    std::vector<RatPoly> power = {m * m * m};
    out.check(m.is_zero() || radical_member(m, power, ch, opts), "m not in sqrt(m^3)");
  }});

  // -- simplicial ----------------------------------------------------------------
  c.push_back({"simplicial-euler-uct", "simplicial", 100, [](Gen& g, PropertyOutcome& out) {
    int n = g.uniform(1, 7);
    auto delta = g.complex(n, 6);
    auto fv = delta.f_vector();
    long faces = 0, ranks = 0;
    for (std::size_t k = 0; k < fv.size(); ++k) faces += (k % 2 == 1 ? 1 : -1) * static_cast<long>(fv[k]);
    auto betti = rational_betti(delta);
    for (std::size_t k = 0; k < betti.size(); ++k) ranks += (k % 2 == 1 ? 1 : -1) * static_cast<long>(betti[k]);
    out.check(faces == ranks, "Euler characteristic mismatch");
    auto integral = reduced_cohomology(delta, 0);
    for (std::uint64_t p : {2u, 3u}) {
      auto field = reduced_cohomology(delta, p);
      for (int d = -1; d <= delta.dimension(); ++d) {
        std::size_t uct = integral.group(d).free_rank + integral.group(d).p_torsion_count(p) +
                          integral.group(d + 1).p_torsion_count(p);
        out.check(field.dimension(d) == uct, "universal coefficients fail in degree " + std::to_string(d));
      }
      MultiIndex zero(static_cast<std::size_t>(n), 0);
      for (int i = 0; i <= delta.dimension() + 2; ++i)
        out.check(hochster_local_cohomology_piece(delta, i, zero, p) == field.dimension(i - 1),
                  "Hochster degree-0 piece != reduced cohomology");
    }
  }});

  // -- filtrations -------------------------------------------------------------
  c.push_back({"filtration-window-invariance", "filtration", 60, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    FiltrationSpec spec = g.coin() ? build_filtration_quotient(p, g.uniform(1, 5))
                                   : build_filtration_localization(g.dvr_poly(p, 2, 2, 3, 2));
    auto wide = widen_window(spec, g.uniform(1, 3));
    out.check(check_axioms(spec).ok() && check_axioms(wide).ok(), "builder output fails the axioms");
    auto a = finite_type_and_verdict(spec), b = finite_type_and_verdict(wide);
    out.check(a.finite_length == b.finite_length && a.length_bound == b.length_bound &&
                  a.annihilator(p) == b.annihilator(p),
              "widening the window changed the verdict");
    int l1 = g.uniform(1, 4), l2 = g.uniform(1, 4);
    auto joined = finite_type_and_verdict(concat(build_filtration_quotient(p, l1), build_filtration_quotient(p, l2)));
    out.check(joined.finite_length && joined.length_bound == l1 + l2, "lengths do not add under extension");
  }});

  c.push_back({"localization-membership", "filtration", 100, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    auto f = g.dvr_poly(p, 2, 2, 3, 2);
    LocalizedElement x(f, g.dvr_poly(p, 2, 3, 3, 3), g.uniform(0, 3));
    if (x.is_zero()) return;
    for (int j = -8; j < 8; ++j) out.check(!x.in_layer(j) || x.in_layer(j + 1), "layers not increasing");
    int idx = *x.layer_index();
    out.check(x.in_layer(idx) && !x.in_layer(idx - 1), "layer index not sharp");
    out.check(*x.times_pi().layer_index() == idx - 1, "pi does not shift the layer by one");
  }});

  c.push_back({"quotient-killing", "filtration", 60, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int ell = g.uniform(1, 5);
    auto verdict = finite_type_and_verdict(build_filtration_quotient(p, ell));
    out.check(verdict.finite_length && verdict.length_bound == ell, "quotient length");
    // An element of R / pi^ell R with a unit coefficient somewhere.
    auto r = g.dvr_poly(p, 2, 3, 3, 3) + DvrPoly::constant(2, DvrScalar(p, g.unit(p)));
    if (min_coefficient_valuation(r) != 0) return;
    auto kill = r.scaled(DvrScalar::pi_power(p, verdict.length_bound));
    auto almost = r.scaled(DvrScalar::pi_power(p, verdict.length_bound - 1));
    out.check(min_coefficient_valuation(kill) >= ell, "pi^length does not kill");
    out.check(min_coefficient_valuation(almost) < ell, "a smaller power already kills");
  }});

  // -- D-submodules ------------------------------------------------------------
  c.push_back({"dsub-closure-oracle", "dsub", 200, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    std::vector<DvrPoly> gens;
    int count = g.uniform(1, 3);
    for (int k = 0; k < count; ++k) gens.push_back(g.dvr_poly(p, n, 4, 4, 5));
    int oracle = dsub_closure_oracle(gens);
    std::string shown;
    for (const auto& f : gens) shown += " [" + f.to_string() + "]";
    out.check(oracle == classify_d_submodule(gens).ell,
              "classifier " + std::to_string(classify_d_submodule(gens).ell) + " vs oracle " +
                  std::to_string(oracle) + " p=" + std::to_string(p) + shown);
  }});

  c.push_back({"dsub-closure-invariance", "dsub", 100, [](Gen& g, PropertyOutcome& out) {
    auto p = g.pick(kPrimes);
    int n = g.uniform(1, 3);
    std::vector<DvrPoly> gens;
    int count = g.uniform(1, 3);
    for (int k = 0; k < count; ++k) gens.push_back(g.dvr_poly(p, n, 4, 4, 5));
    int before = classify_d_submodule(gens).ell;
    const auto& base = g.pick(gens);
    switch (g.uniform(0, 2)) {
      case 0: gens.push_back(g.dvr_poly(p, n, 2, 3, 3) * base); break;
      case 1: gens.push_back(divided_power_derivative(base, g.exponent(n, 3))); break;
      default: gens.push_back(base + g.pick(gens).scaled(g.dvr_scalar(p, 3))); break;
    }
    out.check(classify_d_submodule(gens).ell == before, "adding a derived element changed the verdict");
  }});

  return c;
}

}  // namespace

const std::vector<Property>& property_catalog() {
  static const std::vector<Property> catalog = build_catalog();
  return catalog;
}

}  // namespace lcann::testing
