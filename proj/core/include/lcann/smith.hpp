#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcann/scalars.hpp"

namespace lcann {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  std::vector<Integer> column(std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant (Bareiss fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// U * M * W = D with U, W unimodular and D diagonal, d_1 | d_2 | ... .
/// The inverses are tracked alongside so cycle coordinates can be read off
/// without a second solve.
struct SmithForm {
  IntMatrix d;
  IntMatrix u, u_inv;
  IntMatrix w, w_inv;
  std::size_t rank = 0;

  /// Nonnegative diagonal entries d_1..d_rank.
  std::vector<Integer> invariant_factors() const;
};

struct SmithOptions {
  bool track_u = true;
  bool track_w = true;
};

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options = {});

/// Finitely generated abelian group Z^free_rank + sum Z/d_i with d_1 | d_2 | ...
/// and every d_i >= 2.
struct FinAbGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  static FinAbGroup from_diagonal(std::size_t generators, const std::vector<Integer>& diag);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// True when n * G = 0.
  bool killed_by(const Integer& n) const;
  /// Number of cyclic summands of p-power order (p-rank of the torsion).
  std::size_t p_torsion_count(std::uint64_t p) const;
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// Finite cochain complex of free Z-modules: deltas[i] maps C^i -> C^{i+1}
/// and has shape dims[i+1] x dims[i].
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> deltas;

  static CochainComplex from_deltas(std::vector<IntMatrix> deltas);
  /// delta_j as a matrix, with zero maps outside the stored range.
  IntMatrix delta(int j) const;
  std::size_t dim(int j) const;
};

/// ker(delta_j) / im(delta_{j-1}) together with the data needed to map
/// cocycles to coordinates and back.
class Cohomology {
 public:
  Cohomology() = default;

  const FinAbGroup& group() const { return group_; }
  std::size_t cochain_dim() const { return cochain_dim_; }
  /// Number of nontrivial cyclic summands (torsion first, then free).
  std::size_t generator_count() const { return visible_.size(); }
  /// Order of summand k; zero for a free summand.
  const Integer& summand_order(std::size_t k) const { return diag_[visible_[k]]; }
  /// Cocycle representing summand k, as a vector in C^j.
  std::vector<Integer> generator(std::size_t k) const;
  /// Coordinates of a cocycle in the summand basis (torsion coordinates
  /// reduced into [0, d)). Throws if z is not a cocycle.
  std::vector<Integer> coordinates(const std::vector<Integer>& z) const;

  friend Cohomology compute_cohomology(const IntMatrix& incoming, const IntMatrix& outgoing);

 private:
  FinAbGroup group_;
  std::size_t cochain_dim_ = 0;
  IntMatrix outgoing_;
  IntMatrix kernel_basis_;   // cochain_dim x k
  IntMatrix kernel_coords_;  // k x cochain_dim
  IntMatrix reduce_;         // k x k
  IntMatrix reduce_inv_;     // k x k
  std::vector<Integer> diag_;
  std::vector<std::size_t> visible_;
};

/// Cohomology at the middle of C^{j-1} --incoming--> C^j --outgoing--> C^{j+1}.
/// Throws AlgebraError("not a complex") when outgoing * incoming != 0.
Cohomology compute_cohomology(const IntMatrix& incoming, const IntMatrix& outgoing);

/// Cohomology of a complex at spot j.
Cohomology complex_cohomology(const CochainComplex& complex, int spot);

/// Matrix (target summands x source summands) of the map induced on
/// cohomology by a chain-level map C^j -> C'^j.
IntMatrix induced_map(const Cohomology& source, const Cohomology& target, const IntMatrix& chain_map);

/// Integer kernel basis (columns) of a matrix.
IntMatrix integer_kernel(const IntMatrix& m);

/// Whether a map between the cohomology groups, given by its summand matrix,
/// has trivial kernel.
bool induced_map_injective(const Cohomology& source, const Cohomology& target, const IntMatrix& map);
/// Whether the map is zero as a homomorphism of groups.
bool induced_map_zero(const Cohomology& target, const IntMatrix& map);

/// Rank of an integer matrix reduced modulo p.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

}  // namespace lcann
