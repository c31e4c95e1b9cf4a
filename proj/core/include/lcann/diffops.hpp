#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcann/monomial_ideal.hpp"
#include "lcann/polynomial.hpp"

namespace lcann {

/// Divided-power derivative d^[t] = d_1^[t_1] ... d_n^[t_n], acting on
/// monomials by x^b -> C(b_1,t_1)...C(b_n,t_n) x^(b - t). The binomials are
/// computed exactly, so the operator is integral even where t! is not a unit.
template <class C>
Polynomial<C> divided_power_derivative(const Polynomial<C>& f, const MultiIndex& order) {
  if (static_cast<int>(order.size()) != f.nvars()) throw AlgebraError("operator and polynomial live in different rings");
  std::vector<Term<C>> out;
  for (const auto& t : f.terms()) {
    if (!divides(order, t.exponent)) continue;
    Integer factor = 1;
    for (std::size_t i = 0; i < order.size(); ++i) factor *= binomial(t.exponent[i], order[i]);
    out.push_back({subtract(t.exponent, order), scale_int(t.coeff, factor)});
  }
  return Polynomial<C>::from_terms(f.nvars(), std::move(out));
}

/// Ordinary derivative d/dx_i applied `times` times.
template <class C>
Polynomial<C> iterated_derivative(const Polynomial<C>& f, int i, int times) {
  MultiIndex e(static_cast<std::size_t>(f.nvars()), 0);
  e[static_cast<std::size_t>(i)] = 1;
  Polynomial<C> g = f;
  for (int k = 0; k < times; ++k) g = divided_power_derivative(g, e);
  return g;
}

/// Element sum_k r_k * d^[t_k] of D(R, V) with polynomial coefficients r_k.
template <class C>
struct DividedPowerOp {
  struct Entry {
    Polynomial<C> coeff;
    MultiIndex order;
  };
  int n = 0;
  std::vector<Entry> terms;  // distinct orders, nonzero coefficients

  static DividedPowerOp single(const Polynomial<C>& coeff, const MultiIndex& order) {
    DividedPowerOp op;
    op.n = coeff.nvars();
    op.add(coeff, order);
    return op;
  }

  void add(const Polynomial<C>& coeff, const MultiIndex& order) {
    if (coeff.nvars() != n || static_cast<int>(order.size()) != n) throw AlgebraError("operator ring mismatch");
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      if (it->order == order) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms.erase(it);
        return;
      }
    }
    if (!coeff.is_zero()) terms.push_back({coeff, order});
  }

  Polynomial<C> apply(const Polynomial<C>& f) const {
    if (f.nvars() != n) throw AlgebraError("operator and polynomial live in different rings");
    Polynomial<C> out(n);
    for (const auto& e : terms) out += e.coeff * divided_power_derivative(f, e.order);
    return out;
  }
};

/// Applies op to f; throws when the rings differ.
template <class C>
Polynomial<C> apply_op(const DividedPowerOp<C>& op, const Polynomial<C>& f) {
  return op.apply(f);
}

/// Composite a o b, using the divided-power Leibniz rule
/// d^[c](s g) = sum_{u <= c} d^[u](s) d^[c-u](g) and d^[u] d^[v] = C(u+v, u) d^[u+v].
template <class C>
DividedPowerOp<C> compose(const DividedPowerOp<C>& a, const DividedPowerOp<C>& b) {
  if (a.n != b.n) throw AlgebraError("operator ring mismatch");
  DividedPowerOp<C> out;
  out.n = a.n;
  const std::size_t n = static_cast<std::size_t>(a.n);
  for (const auto& left : a.terms) {
    for (const auto& right : b.terms) {
      // enumerate u <= left.order
      MultiIndex u(n, 0);
      for (;;) {
        Polynomial<C> ds = divided_power_derivative(right.coeff, u);
        if (!ds.is_zero()) {
          MultiIndex rest = subtract(left.order, u);
          MultiIndex total = add(rest, right.order);
          Integer factor = 1;
          for (std::size_t i = 0; i < n; ++i) factor *= binomial(total[i], rest[i]);
          Polynomial<C> c = (left.coeff * ds).map_coefficients([&](const C& x) { return scale_int(x, factor); });
          out.add(c, total);
        }
        std::size_t k = 0;
        while (k < n && u[k] == left.order[k]) u[k++] = 0;
        if (k == n) break;
        ++u[k];
      }
    }
  }
  return out;
}

/// d_i^[s] o d_i^[t] in normal form, namely C(s+t, s) d_i^[s+t].
DividedPowerOp<DvrScalar> compose_divided_powers(const DvrSpec& dvr, int n, int i, int s, int t);

/// Verdict for a nonzero D-stable ideal: it equals (pi^ell).
struct DSubmoduleVerdict {
  int ell = 0;
};

/// Classifies the D(R,V)-submodule of R generated by gens. The generated
/// submodule is (pi^ell) with ell the minimum pi-adic valuation over all
/// coefficients of all generators. Throws when every generator is zero.
DSubmoduleVerdict classify_d_submodule(const std::vector<DvrPoly>& gens);

/// (I : pi^inf) for an ideal generated by single terms w x^b: the unit and
/// pi-parts of each coefficient are stripped, leaving a monomial ideal.
MonomialIdeal pi_saturate(const std::vector<DvrPoly>& gens);

/// Whether a monomial ideal is stable under every d_i^[t] with t <= max_order.
bool is_divided_power_stable(const MonomialIdeal& ideal, int max_order);

/// What is known about an R-module M with a D(R,V)-structure.
struct AnnihilatorEvidence {
  bool nonzero = true;
  /// Smallest ell with pi^ell M = 0, when one exists.
  std::optional<int> kill_exponent;
  /// A Lyubeznik filtration of M that is not of finite type.
  bool infinite_type_witness = false;
};

struct AnnihilatorIdeal {
  enum class Kind { Zero, Unit, PiPower, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int ell = 0;

  /// "(0)", "(1)", "(p^ell)" written with the concrete prime, or "inconclusive".
  std::string to_string(std::uint64_t p) const;
  friend bool operator==(const AnnihilatorIdeal&, const AnnihilatorIdeal&) = default;
};

/// Annihilator of a nonzero D(R,V)-module is either (0) or (pi^ell), ell >= 1,
/// with ell the least exponent killing M; the zero module has the unit ideal.
AnnihilatorIdeal infer_annihilator(const AnnihilatorEvidence& ev);

}  // namespace lcann
