#include "lcann/groebner.hpp"

#include <algorithm>
#include <numeric>


namespace lcann {

int compare_exponents(const MultiIndex& a, const MultiIndex& b, MonomialOrder order) {
  auto c = order == MonomialOrder::Grlex ? grlex_compare(a, b) : lex_compare(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

RatPoly reduce_mod_p(const RatPoly& f, std::uint64_t p) {
  return f.map_coefficients([&](const Rational& c) {
    ModP num(p, Integer(c.get_num())), den(p, Integer(c.get_den()));
    if (den.is_zero()) throw AlgebraError("coefficient denominator vanishes mod p");
    return Rational(Integer((num * den.inverse()).value()));
  });
}

namespace {

using Clock = std::chrono::steady_clock;

// Coefficient adaptors for the two supported fields.
struct RationalField {
  using T = Rational;
  T from(const Rational& c) const { return c; }
  Rational to(const T& c) const { return c; }
  T one() const { return 1; }
};

struct PrimeField {
  using T = ModP;
  std::uint64_t p;
  T from(const Rational& c) const {
    ModP num(p, Integer(c.get_num())), den(p, Integer(c.get_den()));
    if (den.is_zero()) throw AlgebraError("coefficient denominator vanishes mod p");
    return num * den.inverse();
  }
  Rational to(const T& c) const { return Rational(Integer(c.value())); }
  T one() const { return ModP(p, std::int64_t{1}); }
};

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const ModP& c) { return c.is_zero(); }
inline Rational invert(const Rational& c) { return 1 / c; }
inline ModP invert(const ModP& c) { return c.inverse(); }

template <class Field>
class Engine {
 public:
  using T = typename Field::T;
  // Terms in increasing order, so the leading term is back().
  struct Poly {
    std::vector<std::pair<MultiIndex, T>> terms;
    int sugar = 0;
    bool zero() const { return terms.empty(); }
    const MultiIndex& lead() const { return terms.back().first; }
    const T& lead_coeff() const { return terms.back().second; }
  };

  Engine(Field field, int n, GroebnerOptions options) : field_(field), n_(n), options_(options) {
    if (options.timeout) deadline_ = Clock::now() + *options.timeout;
  }

  bool less(const MultiIndex& a, const MultiIndex& b) const {
    return compare_exponents(a, b, options_.order) < 0;
  }

  Poly import(const RatPoly& f) const {
    if (f.nvars() != n_) throw AlgebraError("polynomial lives in a different ring");
    Poly out;
    for (const auto& t : f.terms()) {
      T c = field_.from(t.coeff);
      if (!is_zero(c)) out.terms.emplace_back(t.exponent, c);
    }
    std::sort(out.terms.begin(), out.terms.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    out.sugar = f.is_zero() ? 0 : f.degree();
    return out;
  }

  RatPoly export_poly(const Poly& f) const {
    std::vector<Term<Rational>> terms;
    for (const auto& [e, c] : f.terms) terms.push_back({e, field_.to(c)});
    return RatPoly::from_terms(n_, std::move(terms));
  }

  /// f - c * x^shift * g
  Poly sub_mul(const Poly& f, const T& c, const MultiIndex& shift, const Poly& g) const {
    Poly out;
    out.sugar = std::max(f.sugar, g.sugar + total_degree(shift));
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, k = 0;
    while (i < f.terms.size() || k < g.terms.size()) {
      if (k == g.terms.size()) {
        out.terms.push_back(f.terms[i++]);
        continue;
      }
      MultiIndex ge = add(g.terms[k].first, shift);
      if (i == f.terms.size() || less(ge, f.terms[i].first)) {
        out.terms.emplace_back(std::move(ge), -(c * g.terms[k].second));
        ++k;
      } else if (less(f.terms[i].first, ge)) {
        out.terms.push_back(f.terms[i++]);
      } else {
        T v = f.terms[i].second - c * g.terms[k].second;
        if (!is_zero(v)) out.terms.emplace_back(std::move(ge), v);
        ++i;
        ++k;
      }
    }
    return out;
  }

  void make_monic(Poly& f) const {
    if (f.zero()) return;
    T inv = invert(f.lead_coeff());
    for (auto& t : f.terms) t.second = t.second * inv;
  }

  void tick() {
    if (deadline_ && (++ticks_ & 63) == 0 && Clock::now() > *deadline_) throw GroebnerTimeout();
  }

  /// Full reduction modulo polys[idx] for idx in set.
  Poly reduce(Poly f, const std::vector<std::size_t>& set) {
    Poly rem;
    rem.sugar = f.sugar;
    std::vector<std::pair<MultiIndex, T>> done;  // decreasing
    while (!f.zero()) {
      tick();
      const MultiIndex& lead = f.lead();
      const Poly* divisor = nullptr;
      for (std::size_t idx : set)
        if (divides(polys_[idx].lead(), lead)) {
          divisor = &polys_[idx];
          break;
        }
      if (!divisor) {
        done.push_back(f.terms.back());
        f.terms.pop_back();
        continue;
      }
      T c = f.lead_coeff() * invert(divisor->lead_coeff());
      f = sub_mul(f, c, subtract(lead, divisor->lead()), *divisor);
      rem.sugar = std::max(rem.sugar, f.sugar);
    }
    rem.terms.assign(done.rbegin(), done.rend());
    return rem;
  }

  Poly s_polynomial(std::size_t i, std::size_t j) const {
    const Poly& f = polys_[i];
    const Poly& g = polys_[j];
    MultiIndex l = lcm(f.lead(), g.lead());
    Poly scaled_f = sub_mul(Poly{{}, 0}, -invert(f.lead_coeff()), subtract(l, f.lead()), f);
    return sub_mul(scaled_f, invert(g.lead_coeff()), subtract(l, g.lead()), g);
  }

  struct Pair {
    std::size_t i, j;
    MultiIndex lcm;
    int sugar;
  };

  void update(std::size_t h) {
    const MultiIndex& lh = polys_[h].lead();
    auto coprime = [&](std::size_t g) {
      const MultiIndex& lg = polys_[g].lead();
      for (std::size_t k = 0; k < lh.size(); ++k)
        if (lh[k] > 0 && lg[k] > 0) return false;
      return true;
    };
    auto pair_sugar = [&](std::size_t a, std::size_t b, const MultiIndex& l) {
      int d = total_degree(l);
      return std::max(polys_[a].sugar + d - total_degree(polys_[a].lead()),
                      polys_[b].sugar + d - total_degree(polys_[b].lead()));
    };
    std::vector<Pair> c, d;
    for (std::size_t g : basis_) c.push_back({g, h, lcm(polys_[g].lead(), lh), 0});
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = coprime(p.i);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (divides(c[m].lcm, p.lcm)) keep = false;
        for (const Pair& q : d)
          if (divides(q.lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (Pair& p : pairs_) {
      bool drop = divides(lh, p.lcm) && lcm(polys_[p.i].lead(), lh) != p.lcm && lcm(polys_[p.j].lead(), lh) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (Pair& p : d)
      if (!coprime(p.i)) {
        p.sugar = pair_sugar(p.i, p.j, p.lcm);
        next.push_back(std::move(p));
      }
    pairs_ = std::move(next);
    std::vector<std::size_t> kept;
    for (std::size_t g : basis_)
      if (!divides(lh, polys_[g].lead())) kept.push_back(g);
    kept.push_back(h);
    basis_ = std::move(kept);
  }

  std::vector<Poly> run(const std::vector<RatPoly>& gens, std::size_t& pairs_reduced) {
    for (const auto& g : gens) {
      Poly f = reduce(import(g), basis_);
      if (f.zero()) continue;
      make_monic(f);
      polys_.push_back(std::move(f));
      update(polys_.size() - 1);
    }
    while (!pairs_.empty()) {
      tick();
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return less(a.lcm, b.lcm);
      });
      Pair p = *best;
      pairs_.erase(best);
      Poly s = s_polynomial(p.i, p.j);
      s.sugar = p.sugar;
      Poly h = reduce(std::move(s), basis_);
      ++pairs_reduced;
      if (h.zero()) continue;
      make_monic(h);
      bool constant = total_degree(h.lead()) == 0;
      polys_.push_back(std::move(h));
      update(polys_.size() - 1);
      if (constant) break;
    }
    // Inter-reduce the minimal basis.
    std::vector<Poly> out;
    for (std::size_t g : basis_) {
      std::vector<std::size_t> others;
      for (std::size_t k : basis_)
        if (k != g) others.push_back(k);
      Poly r = reduce(polys_[g], others);
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return less(a.lead(), b.lead()); });
    return out;
  }

  /// Normal form with random choices, against a fixed reduced basis.
  Poly reduce_random(Poly f, const std::vector<Poly>& basis, std::mt19937_64& rng) {
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> options;  // (term, divisor)
      for (std::size_t t = 0; t < f.terms.size(); ++t)
        for (std::size_t b = 0; b < basis.size(); ++b)
          if (divides(basis[b].lead(), f.terms[t].first)) options.emplace_back(t, b);
      if (options.empty()) return f;
      auto [t, b] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      T c = f.terms[t].second * invert(basis[b].lead_coeff());
      MultiIndex shift = subtract(f.terms[t].first, basis[b].lead());
      f = sub_mul(f, c, shift, basis[b]);
    }
  }

  std::vector<std::size_t> adopt(const std::vector<RatPoly>& basis) {
    std::vector<std::size_t> idx;
    for (const auto& g : basis) {
      polys_.push_back(import(g));
      idx.push_back(polys_.size() - 1);
    }
    return idx;
  }

  const Poly& poly(std::size_t k) const { return polys_[k]; }

 private:
  Field field_;
  int n_;
  GroebnerOptions options_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
  std::vector<Poly> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

template <class F>
auto with_field(std::uint64_t characteristic, F&& body) {
  if (characteristic == 0) return body(RationalField{});
  if (!is_prime(characteristic)) throw AlgebraError("field characteristic must be 0 or a prime");
  return body(PrimeField{characteristic});
}

int ring_size(const std::vector<RatPoly>& gens) {
  if (gens.empty()) throw AlgebraError("no generators");
  int n = gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw AlgebraError("generators live in different rings");
  return n;
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

MultiIndex GroebnerBasis::leading_exponent(std::size_t k) const {
  const auto& terms = basis.at(k).terms();
  if (terms.empty()) throw AlgebraError("zero basis element");
  MultiIndex best = terms.front().exponent;
  for (const auto& t : terms)
    if (compare_exponents(t.exponent, best, order) > 0) best = t.exponent;
  return best;
}

GroebnerBasis groebner(const std::vector<RatPoly>& gens, std::uint64_t characteristic, GroebnerOptions options) {
  const int n = ring_size(gens);
  GroebnerBasis out;
  out.characteristic = characteristic;
  out.order = options.order;
  out.nvars = n;
  with_field(characteristic, [&](auto field) {
    Engine<decltype(field)> engine(field, n, options);
    for (const auto& p : engine.run(gens, out.pairs_reduced)) out.basis.push_back(engine.export_poly(p));
    return 0;
  });
  return out;
}

RatPoly normal_form(const RatPoly& f, const GroebnerBasis& g) {
  return with_field(g.characteristic, [&](auto field) {
    Engine<decltype(field)> engine(field, g.nvars, {g.order, std::nullopt});
    auto idx = engine.adopt(g.basis);
    return engine.export_poly(engine.reduce(engine.import(f), idx));
  });
}

RatPoly normal_form_random(const RatPoly& f, const GroebnerBasis& g, std::mt19937_64& rng) {
  return with_field(g.characteristic, [&](auto field) {
    Engine<decltype(field)> engine(field, g.nvars, {g.order, std::nullopt});
    std::vector<typename Engine<decltype(field)>::Poly> basis;
    for (const auto& b : g.basis) basis.push_back(engine.import(b));
    return engine.export_poly(engine.reduce_random(engine.import(f), basis, rng));
  });
}

bool ideal_member(const RatPoly& f, const GroebnerBasis& g) { return normal_form(f, g).is_zero(); }

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  return with_field(g.characteristic, [&](auto field) {
    Engine<decltype(field)> engine(field, g.nvars, {g.order, std::nullopt});
    auto idx = engine.adopt(g.basis);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (!engine.reduce(engine.s_polynomial(idx[a], idx[b]), idx).zero()) return false;
    return true;
  });
}

bool radical_member(const RatPoly& m, const std::vector<RatPoly>& ideal, std::uint64_t characteristic,
                    GroebnerOptions options) {
  const int n = ring_size(ideal);
  if (m.nvars() != n) throw AlgebraError("polynomial lives in a different ring");
  auto lift = [&](const RatPoly& f) {
    std::vector<Term<Rational>> terms;
    for (const auto& t : f.terms()) {
      MultiIndex e = t.exponent;
      e.push_back(0);
      terms.push_back({e, t.coeff});
    }
    return RatPoly::from_terms(n + 1, std::move(terms));
  };
  std::vector<RatPoly> gens;
  for (const auto& f : ideal) gens.push_back(lift(f));
  MultiIndex t(static_cast<std::size_t>(n + 1), 0);
  t.back() = 1;
  RatPoly rabinowitsch = RatPoly::constant(n + 1, 1) - lift(m) * RatPoly::monomial(n + 1, t, 1);
  gens.push_back(rabinowitsch);
  return groebner(gens, characteristic, options).is_unit_ideal();
}

// ---------------------------------------------------------------------------

std::vector<RatPoly> schmitt_vogel_elements() {
  auto mono = [](std::initializer_list<int> vars) {
    MultiIndex e(6, 0);
    for (int v : vars) e[static_cast<std::size_t>(v)] = 1;
    return RatPoly::monomial(6, e, 1);
  };
  return {
      mono({0, 3, 5}),
      mono({0, 1, 3}) + mono({0, 4, 5}) + mono({2, 3, 5}),
      mono({0, 2, 4}) + mono({1, 2, 5}) + mono({1, 3, 4}),
      mono({0, 1, 2}) + mono({1, 4, 5}) + mono({2, 3, 4}),
  };
}

bool terms_in_monomial_ideal(const RatPoly& f, const MonomialIdeal& ideal) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term<Rational>& t) { return ideal.contains(t.exponent); });
}

bool SvReport::all_passed() const { return failures().empty(); }

std::vector<std::string> SvReport::failures() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < elements_in_ideal.size(); ++k)
    if (!elements_in_ideal[k]) out.push_back("element " + std::to_string(k) + " is not in I");
  for (const auto& [ch, flags] : radical)
    for (std::size_t k = 0; k < flags.size(); ++k)
      if (!flags[k])
        out.push_back("generator " + format_multi_index(monomials[k]) + " is not in the radical over " +
                      (ch == 0 ? std::string("Q") : "F_" + std::to_string(ch)));
  return out;
}

SvReport sv_containment_check(const std::vector<RatPoly>& elements, const MonomialIdeal& ideal,
                              GroebnerOptions options) {
  SvReport report;
  report.elements = elements;
  report.monomials = ideal.generators();
  for (const auto& f : elements) report.elements_in_ideal.push_back(terms_in_monomial_ideal(f, ideal));
  for (std::uint64_t ch : {std::uint64_t{2}, std::uint64_t{0}}) {
    std::vector<bool> flags;
    for (const auto& g : ideal.generators())
      flags.push_back(radical_member(RatPoly::monomial(ideal.nvars(), g, 1), elements, ch, options));
    report.radical.emplace_back(ch, std::move(flags));
  }
  return report;
}

}  // namespace lcann
