#include "lcann/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace lcann {

MonomialIdeal::MonomialIdeal(int n, std::vector<MultiIndex> generators) : n_(n) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw AlgebraError("generator length does not match variable count");
    if (!all_nonnegative(g)) throw AlgebraError("monomial exponents must be nonnegative");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < generators.size() && !redundant; ++k) {
      if (k == i) continue;
      if (divides(generators[k], generators[i])) {
        // keep the first of equal generators
        redundant = generators[k] != generators[i] || k < i;
      }
    }
    if (!redundant) gens_.push_back(generators[i]);
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const MultiIndex& g) { return total_degree(g) == 0; });
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (int e : g)
      if (e > 1) return false;
  return true;
}

bool MonomialIdeal::contains(const MultiIndex& monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const MultiIndex& g) { return divides(g, monomial); });
}

MultiIndex MonomialIdeal::lcm_of_generators() const {
  MultiIndex m(static_cast<std::size_t>(n_), 0);
  for (const auto& g : gens_) m = lcm(m, g);
  return m;
}

bool MonomialIdeal::same_ideal(const MonomialIdeal& other) const {
  if (n_ != other.n_ || gens_.size() != other.gens_.size()) return false;
  auto a = gens_, b = other.gens_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string MonomialIdeal::to_string(int first_index) const {
  std::string s = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    std::string m;
    for (int i = 0; i < n_; ++i) {
      int e = gens_[k][static_cast<std::size_t>(i)];
      if (e == 0) continue;
      m += "x" + std::to_string(i + first_index);
      if (e > 1) m += "^" + std::to_string(e);
    }
    s += m.empty() ? "1" : m;
  }
  return s + ")";
}

MonomialIdeal power_ideal(const MonomialIdeal& ideal, int ell) {
  if (ell < 1) throw AlgebraError("power must be at least 1");
  std::vector<MultiIndex> gens;
  for (auto g : ideal.generators()) {
    for (int& e : g) e *= ell;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw AlgebraError("ideals live in different rings");
  std::vector<MultiIndex> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal monomial_colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw AlgebraError("ideals live in different rings");
  const int n = I.nvars();
  MonomialIdeal result(n, {MultiIndex(static_cast<std::size_t>(n), 0)});
  for (const auto& m : J.generators()) {
    std::vector<MultiIndex> quotient;
    for (const auto& g : I.generators()) quotient.push_back(subtract(lcm(g, m), m));
    result = intersect(result, MonomialIdeal(n, std::move(quotient)));
  }
  return result;
}

// ---------------------------------------------------------------------------

TaylorComplex::TaylorComplex(MonomialIdeal ideal, std::size_t cap)
    : ideal_(std::move(ideal)), r_(ideal_.size()) {
  if (r_ > cap) throw AlgebraError("Taylor complex too large");
  if (r_ > 20) throw AlgebraError("Taylor complex too large");
  const std::uint32_t total = 1u << r_;
  by_size_.assign(r_ + 1, {});
  index_.assign(total, 0);
  degree_.assign(total, MultiIndex(static_cast<std::size_t>(nvars()), 0));
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    auto size = static_cast<std::size_t>(std::popcount(mask));
    index_[mask] = by_size_[size].size();
    by_size_[size].push_back(mask);
    if (mask) {
      unsigned low = static_cast<unsigned>(std::countr_zero(mask));
      degree_[mask] = lcm(degree_[mask & (mask - 1)], ideal_.generators()[low]);
    }
  }
}

int TaylorComplex::sign(std::uint32_t mask, unsigned s) {
  int position = std::popcount(mask & ((1u << s) - 1u));
  return position % 2 == 0 ? 1 : -1;
}

std::vector<TaylorComplex::Entry> TaylorComplex::differential(std::size_t j) const {
  std::vector<Entry> out;
  if (j == 0 || j > r_) return out;
  for (std::uint32_t mask : by_size_[j]) {
    for (unsigned s = 0; s < r_; ++s) {
      if (!(mask & (1u << s))) continue;
      std::uint32_t face = mask & ~(1u << s);
      out.push_back({index_[face], index_[mask], sign(mask, s), subtract(degree_[mask], degree_[face])});
    }
  }
  return out;
}

namespace {

using SparseMonomialMatrix = std::map<std::tuple<std::size_t, std::size_t, MultiIndex>, long>;

}  // namespace

bool TaylorComplex::verify_d_squared_zero() const {
  for (std::size_t j = 2; j <= r_; ++j) {
    auto outer = differential(j - 1);  // F_{j-1} -> F_{j-2}
    auto inner = differential(j);      // F_j -> F_{j-1}
    std::multimap<std::size_t, const Entry*> outer_by_col;
    for (const auto& e : outer) outer_by_col.emplace(e.col, &e);
    SparseMonomialMatrix acc;
    for (const auto& e : inner) {
      auto [lo, hi] = outer_by_col.equal_range(e.row);
      for (auto it = lo; it != hi; ++it) {
        const Entry& f = *it->second;
        acc[{f.row, e.col, add(f.monomial, e.monomial)}] += static_cast<long>(f.sign) * e.sign;
      }
    }
    for (const auto& [key, value] : acc)
      if (value != 0) return false;
  }
  return true;
}

bool comparison_map_is_chain_map(const MonomialIdeal& base, int ell) {
  TaylorComplex low(power_ideal(base, ell));
  TaylorComplex high(power_ideal(base, ell + 1));
  if (low.generator_count() != high.generator_count()) return false;
  auto shift = [&](std::uint32_t mask) {
    return subtract(high.multidegree(mask), low.multidegree(mask));
  };
  for (std::uint32_t mask = 0; mask < (1u << low.generator_count()); ++mask)
    if (!all_nonnegative(shift(mask))) return false;
  for (std::size_t j = 1; j <= low.generator_count(); ++j) {
    // d_low o phi and phi o d_high, as maps F_j^(ell+1) -> F_{j-1}^(ell).
    SparseMonomialMatrix lhs, rhs;
    for (const auto& e : low.differential(j)) {
      std::uint32_t mask = low.subsets(j)[e.col];
      lhs[{e.row, e.col, add(e.monomial, shift(mask))}] += e.sign;
    }
    for (const auto& e : high.differential(j)) {
      std::uint32_t face = high.subsets(j - 1)[e.row];
      rhs[{e.row, e.col, add(shift(face), e.monomial)}] += e.sign;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace lcann
