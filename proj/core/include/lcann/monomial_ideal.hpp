#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcann/scalars.hpp"

namespace lcann {

/// Monomial ideal in n variables, stored by its minimal generators in the
/// order they were first given. The zero ideal has no generators; the unit
/// ideal has the single generator 0.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int n, std::vector<MultiIndex> generators);

  int nvars() const { return n_; }
  const std::vector<MultiIndex>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;

  bool contains(const MultiIndex& monomial) const;
  /// lcm of all generators.
  MultiIndex lcm_of_generators() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  /// Same ideal regardless of generator order.
  bool same_ideal(const MonomialIdeal& other) const;

  std::string to_string(int first_index = 0) const;

 private:
  int n_ = 0;
  std::vector<MultiIndex> gens_;
};

/// Ideal generated by the ell-th powers of the given generators, in order.
MonomialIdeal power_ideal(const MonomialIdeal& ideal, int ell);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (I : J) = intersection over m in gens(J) of (I : m), where (I : m) is
/// generated by lcm(g, m) / m.
MonomialIdeal monomial_colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// The subset-indexed Taylor resolution of A / I. Subsets of the ordered
/// generator list are bitmasks; a_S = lcm of the generators in S.
class TaylorComplex {
 public:
  static constexpr std::size_t kDefaultCap = 12;

  explicit TaylorComplex(MonomialIdeal ideal, std::size_t cap = kDefaultCap);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t generator_count() const { return r_; }
  int nvars() const { return ideal_.nvars(); }

  /// Subsets of size j in increasing mask order.
  const std::vector<std::uint32_t>& subsets(std::size_t j) const { return by_size_.at(j); }
  std::size_t rank(std::size_t j) const { return j < by_size_.size() ? by_size_[j].size() : 0; }
  /// Position of a subset among those of its size.
  std::size_t index_of(std::uint32_t mask) const { return index_[mask]; }
  const MultiIndex& multidegree(std::uint32_t mask) const { return degree_[mask]; }

  /// Sign of removing generator s from S: (-1)^(position of s in sorted S).
  static int sign(std::uint32_t mask, unsigned s);

  struct Entry {
    std::size_t row;  // index in F_{j-1}
    std::size_t col;  // index in F_j
    int sign;
    MultiIndex monomial;  // x^(a_S - a_{S \ s})
  };
  /// Differential F_j -> F_{j-1} as sparse monomial entries.
  std::vector<Entry> differential(std::size_t j) const;

  /// d_{j-1} o d_j == 0, checked symbolically for every j.
  bool verify_d_squared_zero() const;

 private:
  MonomialIdeal ideal_;
  std::size_t r_;
  std::vector<std::vector<std::uint32_t>> by_size_;
  std::vector<std::size_t> index_;
  std::vector<MultiIndex> degree_;
};

/// The comparison map F^(ell+1) -> F^(ell), e_S -> x^(a_S^(ell+1) - a_S^(ell)) e_S,
/// commutes with both Taylor differentials.
bool comparison_map_is_chain_map(const MonomialIdeal& base, int ell);

}  // namespace lcann
