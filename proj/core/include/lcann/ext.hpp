#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcann/diffops.hpp"
#include "lcann/monomial_ideal.hpp"
#include "lcann/smith.hpp"

namespace lcann {

/// Product of closed integer intervals, iterated with the first coordinate
/// varying slowest.
struct DegreeBox {
  std::vector<std::pair<int, int>> ranges;

  static DegreeBox cube(int n, int lo, int hi);
  std::size_t count() const;
  bool contains(const MultiIndex& alpha) const;
  std::vector<MultiIndex> points() const;
  DegreeBox enlarged(int by) const;
  std::string to_string() const;
};

/// prod [-(a_full)_i, 0] where a_full is the lcm of the generators.
DegreeBox default_box(const MonomialIdeal& ideal);

/// Degree-alpha strand of Hom(Taylor(A/I), A) around spot j. The basis of
/// C^k is {e_S* : |S| = k, alpha + a_S >= 0}; coboundary entries are the
/// Taylor signs.
struct StrandMatrices {
  std::vector<std::uint32_t> prev_basis, basis, next_basis;
  IntMatrix incoming;  // C^{j-1} -> C^j
  IntMatrix outgoing;  // C^j -> C^{j+1}
};

struct StrandData {
  std::vector<std::uint32_t> basis;
  Cohomology cohomology;
};

/// Ext^j_A(A/I, A)_alpha over A = Z[x_1..x_n].
struct GradedExtPiece {
  MultiIndex alpha;
  int j = 0;
  FinAbGroup group;
  std::shared_ptr<const StrandData> strand;
};

struct InducedMap {
  IntMatrix matrix;  // target summands x source summands
  bool zero = true;
  bool injective = true;
};

/// Ext computations for one monomial ideal. Strands only depend on which
/// generator-subset multidegrees clear -alpha, so they are cached by that
/// key; the cache is safe to share between threads.
class ExtCalculator {
 public:
  explicit ExtCalculator(MonomialIdeal ideal, std::size_t cap = TaylorComplex::kDefaultCap);

  const TaylorComplex& taylor() const { return taylor_; }
  const MonomialIdeal& ideal() const { return taylor_.ideal(); }
  int nvars() const { return taylor_.nvars(); }

  using StrandKey = std::vector<int>;
  StrandKey strand_key(const MultiIndex& alpha) const;

  StrandMatrices strand_matrices(int j, const MultiIndex& alpha) const;
  GradedExtPiece piece(int j, const MultiIndex& alpha);

 private:
  StrandMatrices build(int j, const std::vector<int>& threshold) const;
  std::vector<int> threshold_of(const StrandKey& key) const;

  TaylorComplex taylor_;
  std::vector<std::vector<int>> levels_;  // distinct coordinate values of a_S, with 0
  std::mutex mutex_;
  std::map<std::pair<int, StrandKey>, std::shared_ptr<const StrandData>> cache_;
};

/// Map Ext^j(...)_source -> Ext^j(...)_target induced by basis-index inclusion
/// of strands (multiplication by a variable, or a transition between powers).
InducedMap inclusion_induced_map(const GradedExtPiece& source, const GradedExtPiece& target);

GradedExtPiece ext_graded_piece(const MonomialIdeal& ideal, int j, const MultiIndex& alpha);

struct ScanOptions {
  unsigned threads = 1;
};

struct ExtScan {
  DegreeBox box;
  int j = 0;
  std::vector<GradedExtPiece> pieces;  // nonzero pieces, box order
  std::vector<MultiIndex> shell_nonzero;
  bool shell_clean() const { return shell_nonzero.empty(); }
};

/// All nonzero pieces of Ext^j in the box, plus the shell certificate: every
/// piece on the layer one step outside the box must vanish.
ExtScan ext_support_scan(ExtCalculator& calc, int j, const DegreeBox& box, ScanOptions options = {});

/// Action of x_i (0-based) from degree alpha to alpha + e_i.
InducedMap mult_map(ExtCalculator& calc, int j, const MultiIndex& alpha, int i);

struct TransitionMapReport {
  int ell = 1;
  int j = 0;
  MultiIndex alpha;
  FinAbGroup source, target;
  IntMatrix matrix;
  bool injective = true;
};

/// Ext^j(A/I_ell, A)_alpha -> Ext^j(A/I_{ell+1}, A)_alpha induced by the dual
/// of the comparison map e_S -> x^(a_S^(ell+1) - a_S^(ell)) e_S. In each strand
/// this is again basis-index inclusion.
TransitionMapReport transition_map(ExtCalculator& level, ExtCalculator& next_level, int ell, int j,
                                   const MultiIndex& alpha);
TransitionMapReport transition_map(const MonomialIdeal& base, int ell, int j, const MultiIndex& alpha);

/// The ten squarefree cubics of the six-vertex real projective plane.
MonomialIdeal reisner_ideal();

/// p-primary part of a group (free part kept).
FinAbGroup localize_at(const FinAbGroup& g, std::uint64_t p);

struct PipelineOptions {
  std::uint64_t p = 2;
  int levels = 3;
  int j = 4;
  unsigned threads = 1;
};

struct LevelSummary {
  int ell = 1;
  DegreeBox box;
  std::size_t nonzero_pieces = 0;
  bool shell_clean = true;
  bool has_free = false;
  bool has_p_torsion = false;
  /// max nu_p over invariant factors; meaningful when !has_free.
  int p_exponent = 0;
  /// Every piece is (Z/p)^k for some k >= 1.
  bool all_elementary_p = true;
  /// Exponent of the whole scanned module when it is torsion.
  Integer exponent = 1;
  std::map<std::string, std::size_t> group_histogram;
};

struct TransitionSummary {
  int ell = 1;
  std::size_t degrees_checked = 0;
  std::vector<MultiIndex> non_injective;
};

struct PipelineReport {
  PipelineOptions options;
  MonomialIdeal ideal;
  bool is_reisner = false;
  std::vector<LevelSummary> levels;
  std::vector<TransitionSummary> transitions;

  /// Integer exponent of level 1 persists to every level (torsion persistence).
  std::optional<bool> torsion_persists;
  /// Level 1 is a single Z/p in one degree with every x_i acting by zero.
  std::optional<bool> residue_field_at_level_one;
  /// Level ell is Z/p exactly on [-ell,-1]^n with x_i acting as the truncated
  /// polynomial ring A/(p, x^ell) shifted to degree -ell.
  std::optional<bool> truncated_presentation;
  /// Transition maps act as multiplication by x_0...x_{n-1} on those presentations.
  std::optional<bool> transition_is_product_of_variables;

  bool colimit_nonzero = false;
  std::optional<AnnihilatorEvidence> evidence;
  AnnihilatorIdeal verdict;
  std::optional<std::string> failing_stage;
};

PipelineReport reisner_pipeline(const MonomialIdeal& ideal, PipelineOptions options = {});

}  // namespace lcann
