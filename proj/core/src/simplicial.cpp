#include "lcann/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace lcann {

namespace {

std::vector<std::uint32_t> maximal_only(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : sets) {
    bool covered = std::any_of(sets.begin(), sets.end(), [&](std::uint32_t t) { return t != s && (s & t) == s; });
    if (!covered) out.push_back(s);
  }
  return out;
}

void check_vertex_count(int n) {
  if (n < 0 || n > SimplicialComplex::kMaxVertices) throw AlgebraError("unsupported vertex count");
}

}  // namespace

std::uint32_t vertex_mask(const std::vector<int>& vertices) {
  std::uint32_t m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= SimplicialComplex::kMaxVertices) throw AlgebraError("vertex index out of range");
    m |= 1u << v;
  }
  return m;
}

std::vector<int> mask_vertices(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

SimplicialComplex::SimplicialComplex(int n, const std::vector<std::vector<int>>& facets) : n_(n) {
  check_vertex_count(n);
  std::vector<std::uint32_t> masks;
  for (const auto& f : facets) {
    for (int v : f)
      if (v < 0 || v >= n) throw AlgebraError("vertex index out of range");
    masks.push_back(vertex_mask(f));
  }
  facets_ = maximal_only(std::move(masks));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_vertex_count(n);
  SimplicialComplex c;
  c.n_ = n;
  return c;
}

SimplicialComplex SimplicialComplex::empty_face_only(int n) { return from_masks(n, {0u}); }

SimplicialComplex SimplicialComplex::from_masks(int n, std::vector<std::uint32_t> facets) {
  check_vertex_count(n);
  SimplicialComplex c;
  c.n_ = n;
  c.facets_ = maximal_only(std::move(facets));
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (std::uint32_t f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  for (std::uint32_t f : facets_) out.push_back(mask_vertices(f));
  return out;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](std::uint32_t f) { return (face & f) == face; });
}

std::vector<std::uint32_t> SimplicialComplex::faces(int k) const {
  std::set<std::uint32_t> out;
  for (std::uint32_t f : facets_) {
    // enumerate submasks of f
    for (std::uint32_t s = f;; s = (s - 1) & f) {
      if (std::popcount(s) == k + 1) out.insert(s);
      if (s == 0) break;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int k = -1; k <= dimension(); ++k) out.push_back(faces(k).size());
  return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw AlgebraError("Stanley-Reisner complex needs a squarefree ideal");
  const int n = ideal.nvars();
  check_vertex_count(n);
  std::vector<std::uint32_t> faces;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    MultiIndex m(static_cast<std::size_t>(n), 0);
    for (int v : mask_vertices(mask)) m[static_cast<std::size_t>(v)] = 1;
    if (!ideal.contains(m)) faces.push_back(mask);
  }
  return SimplicialComplex::from_masks(n, std::move(faces));
}

MonomialIdeal nonface_ideal(const SimplicialComplex& complex) {
  const int n = complex.nvertices();
  std::vector<MultiIndex> gens;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (complex.contains(mask)) continue;
    bool minimal = true;
    for (int v : mask_vertices(mask))
      if (!complex.contains(mask & ~(1u << v))) minimal = false;
    if (!minimal) continue;
    MultiIndex m(static_cast<std::size_t>(n), 0);
    for (int v : mask_vertices(mask)) m[static_cast<std::size_t>(v)] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& complex, std::uint32_t w) {
  if (!complex.contains(w)) return SimplicialComplex::void_complex(complex.nvertices());
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : complex.facet_masks())
    if ((f & w) == w) out.push_back(f & ~w);
  return SimplicialComplex::from_masks(complex.nvertices(), std::move(out));
}

// ---------------------------------------------------------------------------

FinAbGroup CohomologyTable::group(int degree) const {
  int k = degree - first_degree;
  if (k < 0 || k >= static_cast<int>(groups.size())) return {};
  return groups[static_cast<std::size_t>(k)];
}

std::size_t CohomologyTable::dimension(int degree) const {
  int k = degree - first_degree;
  if (k < 0 || k >= static_cast<int>(dimensions.size())) return 0;
  return dimensions[static_cast<std::size_t>(k)];
}

int CohomologyTable::last_degree() const {
  return first_degree + static_cast<int>(std::max(groups.size(), dimensions.size())) - 1;
}

namespace {

/// delta: C^k -> C^{k+1}, where C^k has basis the faces with k + 1 vertices.
IntMatrix simplicial_coboundary(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
  IntMatrix m(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c)
    for (std::size_t r = 0; r < to.size(); ++r) {
      std::uint32_t extra = to[r] & ~from[c];
      if ((to[r] & from[c]) != from[c] || std::popcount(extra) != 1) continue;
      m(r, c) = TaylorComplex::sign(to[r], static_cast<unsigned>(std::countr_zero(extra)));
    }
  return m;
}

std::size_t rank_over(const IntMatrix& m, std::uint64_t characteristic) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (characteristic == 0) return smith_normal_form(m, {false, false}).rank;
  return rank_mod_p(m, characteristic);
}

}  // namespace

CohomologyTable reduced_cohomology(const SimplicialComplex& complex, std::uint64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) throw AlgebraError("coefficient field needs a prime");
  CohomologyTable table;
  table.characteristic = characteristic;
  const int dim = complex.dimension();
  if (complex.is_void()) return table;
  std::vector<std::vector<std::uint32_t>> faces;
  for (int k = -1; k <= dim; ++k) faces.push_back(complex.faces(k));
  auto basis = [&](int k) -> const std::vector<std::uint32_t>& {
    static const std::vector<std::uint32_t> none;
    if (k < -1 || k > dim) return none;
    return faces[static_cast<std::size_t>(k + 1)];
  };
  std::vector<IntMatrix> deltas;  // deltas[k + 2] : C^k -> C^{k+1}, k = -2..dim
  for (int k = -2; k <= dim; ++k) deltas.push_back(simplicial_coboundary(basis(k), basis(k + 1)));
  for (int k = -1; k <= dim; ++k) {
    const IntMatrix& in = deltas[static_cast<std::size_t>(k + 1)];
    const IntMatrix& out = deltas[static_cast<std::size_t>(k + 2)];
    if (characteristic == 0) {
      table.groups.push_back(compute_cohomology(in, out).group());
    } else {
      table.dimensions.push_back(basis(k).size() - rank_over(out, characteristic) - rank_over(in, characteristic));
    }
  }
  return table;
}

std::vector<std::size_t> rational_betti(const SimplicialComplex& complex) {
  std::vector<std::size_t> out;
  auto table = reduced_cohomology(complex, 0);
  for (const auto& g : table.groups) out.push_back(g.free_rank);
  return out;
}

std::size_t hochster_local_cohomology_piece(const SimplicialComplex& complex, int i, const MultiIndex& a,
                                            std::uint64_t characteristic) {
  if (static_cast<int>(a.size()) != complex.nvertices()) throw AlgebraError("degree has the wrong length");
  std::uint32_t w = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > 0) throw AlgebraError("Hochster's formula needs a <= 0");
    if (a[v] < 0) w |= 1u << v;
  }
  if (!complex.contains(w)) return 0;
  auto lk = link(complex, w);
  auto table = reduced_cohomology(lk, characteristic);
  int degree = i - std::popcount(w) - 1;
  if (characteristic == 0) return table.group(degree).free_rank;
  return table.dimension(degree);
}

}  // namespace lcann
