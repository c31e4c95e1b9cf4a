#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcann/monomial_ideal.hpp"
#include "lcann/smith.hpp"

namespace lcann {

/// Finite simplicial complex on vertices 0..n-1, stored by facet bitmasks.
/// The void complex has no faces at all; the complex {∅} has the empty face
/// as its only facet.
class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 24;

  SimplicialComplex() = default;
  /// Keeps only inclusion-maximal sets; duplicates are dropped.
  SimplicialComplex(int n, const std::vector<std::vector<int>>& facets);

  static SimplicialComplex void_complex(int n);
  static SimplicialComplex empty_face_only(int n);
  static SimplicialComplex from_masks(int n, std::vector<std::uint32_t> facets);

  int nvertices() const { return n_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const;
  const std::vector<std::uint32_t>& facet_masks() const { return facets_; }
  std::vector<std::vector<int>> facets() const;

  bool contains(std::uint32_t face) const;
  /// Faces with k + 1 vertices, increasing mask order.
  std::vector<std::uint32_t> faces(int k) const;
  /// f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> facets_;  // increasing mask order
};

std::uint32_t vertex_mask(const std::vector<int>& vertices);
std::vector<int> mask_vertices(std::uint32_t mask);

/// Faces are the squarefree monomials outside I.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);
/// Ideal generated by the minimal nonfaces.
MonomialIdeal nonface_ideal(const SimplicialComplex& complex);

/// {F : F ∪ W ∈ Δ, F ∩ W = ∅}; void when W is not a face.
SimplicialComplex link(const SimplicialComplex& complex, std::uint32_t w);

/// Reduced cohomology in degrees -1..dim. Coefficient characteristic 0 means
/// Z (groups filled); a prime p means F_p (dimensions filled).
struct CohomologyTable {
  std::uint64_t characteristic = 0;
  int first_degree = -1;
  std::vector<FinAbGroup> groups;
  std::vector<std::size_t> dimensions;

  /// Zero outside the stored range.
  FinAbGroup group(int degree) const;
  std::size_t dimension(int degree) const;
  int last_degree() const;
};

CohomologyTable reduced_cohomology(const SimplicialComplex& complex, std::uint64_t characteristic = 0);

/// Rank over Q of the reduced cohomology in each degree.
std::vector<std::size_t> rational_betti(const SimplicialComplex& complex);

/// dim_k H^i_m(k[Δ])_a for a <= 0 by Hochster's formula; k = F_p, or Q when
/// characteristic is 0. Throws on a positive entry in a.
std::size_t hochster_local_cohomology_piece(const SimplicialComplex& complex, int i, const MultiIndex& a,
                                            std::uint64_t characteristic);

}  // namespace lcann
