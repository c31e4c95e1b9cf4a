#include "lcann/ext.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <thread>

namespace lcann {

// ---------------------------------------------------------------------------
// Boxes.

DegreeBox DegreeBox::cube(int n, int lo, int hi) {
  DegreeBox b;
  b.ranges.assign(static_cast<std::size_t>(n), {lo, hi});
  return b;
}

std::size_t DegreeBox::count() const {
  std::size_t c = 1;
  for (auto [lo, hi] : ranges) c *= hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  return c;
}

bool DegreeBox::contains(const MultiIndex& alpha) const {
  if (alpha.size() != ranges.size()) return false;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] < ranges[i].first || alpha[i] > ranges[i].second) return false;
  return true;
}

std::vector<MultiIndex> DegreeBox::points() const {
  std::vector<MultiIndex> out;
  if (count() == 0) return out;
  out.reserve(count());
  MultiIndex a(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) a[i] = ranges[i].first;
  for (;;) {
    out.push_back(a);
    std::size_t k = ranges.size();
    while (k > 0) {
      --k;
      if (a[k] < ranges[k].second) {
        ++a[k];
        break;
      }
      a[k] = ranges[k].first;
      if (k == 0) return out;
    }
    if (ranges.empty()) return out;
  }
}

DegreeBox DegreeBox::enlarged(int by) const {
  DegreeBox b = *this;
  for (auto& r : b.ranges) {
    r.first -= by;
    r.second += by;
  }
  return b;
}

std::string DegreeBox::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (i) s += "x";
    s += "[" + std::to_string(ranges[i].first) + "," + std::to_string(ranges[i].second) + "]";
  }
  return s;
}

DegreeBox default_box(const MonomialIdeal& ideal) {
  DegreeBox b;
  for (int a : ideal.lcm_of_generators()) b.ranges.emplace_back(-a, 0);
  return b;
}

// ---------------------------------------------------------------------------
// Strands.

ExtCalculator::ExtCalculator(MonomialIdeal ideal, std::size_t cap) : taylor_(std::move(ideal), cap) {
  const auto n = static_cast<std::size_t>(nvars());
  levels_.assign(n, {0});
  for (const auto& g : taylor_.ideal().generators())
    for (std::size_t i = 0; i < n; ++i) levels_[i].push_back(g[i]);
  for (auto& v : levels_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

ExtCalculator::StrandKey ExtCalculator::strand_key(const MultiIndex& alpha) const {
  if (alpha.size() != levels_.size()) throw AlgebraError("degree has the wrong length");
  StrandKey key(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const auto& v = levels_[i];
    key[i] = static_cast<int>(std::lower_bound(v.begin(), v.end(), -alpha[i]) - v.begin());
  }
  return key;
}

std::vector<int> ExtCalculator::threshold_of(const StrandKey& key) const {
  std::vector<int> t(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    const auto& v = levels_[i];
    t[i] = key[i] < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(key[i])] : INT_MAX;
  }
  return t;
}

StrandMatrices ExtCalculator::build(int j, const std::vector<int>& threshold) const {
  const std::size_t r = taylor_.generator_count();
  auto qualifies = [&](std::uint32_t mask) {
    const auto& a = taylor_.multidegree(mask);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < threshold[i]) return false;
    return true;
  };
  auto basis_at = [&](int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > static_cast<int>(r)) return out;
    for (std::uint32_t mask : taylor_.subsets(static_cast<std::size_t>(k)))
      if (qualifies(mask)) out.push_back(mask);
    return out;
  };
  StrandMatrices s;
  s.prev_basis = basis_at(j - 1);
  s.basis = basis_at(j);
  s.next_basis = basis_at(j + 1);

  std::vector<int> position(std::size_t{1} << r, -1);
  auto coboundary = [&](const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
    for (std::size_t k = 0; k < to.size(); ++k) position[to[k]] = static_cast<int>(k);
    IntMatrix m(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      for (unsigned g = 0; g < r; ++g) {
        if (from[c] & (1u << g)) continue;
        std::uint32_t up = from[c] | (1u << g);
        int row = position[up];
        if (row < 0) throw AlgebraError("strand basis is not closed upward");
        m(static_cast<std::size_t>(row), c) = TaylorComplex::sign(up, g);
      }
    }
    for (std::uint32_t mask : to) position[mask] = -1;
    return m;
  };
  s.incoming = coboundary(s.prev_basis, s.basis);
  s.outgoing = coboundary(s.basis, s.next_basis);
  return s;
}

StrandMatrices ExtCalculator::strand_matrices(int j, const MultiIndex& alpha) const {
  return build(j, threshold_of(strand_key(alpha)));
}

GradedExtPiece ExtCalculator::piece(int j, const MultiIndex& alpha) {
  StrandKey key = strand_key(alpha);
  auto cache_key = std::make_pair(j, key);
  std::shared_ptr<const StrandData> data;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(cache_key);
    if (it != cache_.end()) data = it->second;
  }
  if (!data) {
    StrandMatrices m = build(j, threshold_of(key));
    auto fresh = std::make_shared<StrandData>();
    fresh->cohomology = compute_cohomology(m.incoming, m.outgoing);
    fresh->basis = std::move(m.basis);
    std::lock_guard lock(mutex_);
    data = cache_.emplace(cache_key, std::move(fresh)).first->second;
  }
  return GradedExtPiece{alpha, j, data->cohomology.group(), data};
}

GradedExtPiece ext_graded_piece(const MonomialIdeal& ideal, int j, const MultiIndex& alpha) {
  ExtCalculator calc(ideal);
  return calc.piece(j, alpha);
}

InducedMap inclusion_induced_map(const GradedExtPiece& source, const GradedExtPiece& target) {
  const auto& from = source.strand->basis;
  const auto& to = target.strand->basis;
  IntMatrix chain(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    auto it = std::lower_bound(to.begin(), to.end(), from[c]);
    if (it == to.end() || *it != from[c]) throw AlgebraError("strand bases are not nested");
    chain(static_cast<std::size_t>(it - to.begin()), c) = 1;
  }
  InducedMap out;
  out.matrix = induced_map(source.strand->cohomology, target.strand->cohomology, chain);
  out.zero = induced_map_zero(target.strand->cohomology, out.matrix);
  out.injective = induced_map_injective(source.strand->cohomology, target.strand->cohomology, out.matrix);
  return out;
}

// ---------------------------------------------------------------------------
// Scans.

namespace {

void warm_cache(ExtCalculator& calc, int j, const std::vector<MultiIndex>& points, unsigned threads) {
  std::vector<MultiIndex> reps;
  std::set<ExtCalculator::StrandKey> seen;
  for (const auto& a : points)
    if (seen.insert(calc.strand_key(a)).second) reps.push_back(a);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps.size())));
  if (threads <= 1) {
    for (const auto& a : reps) calc.piece(j, a);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < reps.size(); k += threads) calc.piece(j, reps[k]);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

ExtScan ext_support_scan(ExtCalculator& calc, int j, const DegreeBox& box, ScanOptions options) {
  if (box.ranges.size() != static_cast<std::size_t>(calc.nvars()))
    throw AlgebraError("box dimension does not match variable count");
  ExtScan scan;
  scan.box = box;
  scan.j = j;
  auto inside = box.points();
  std::vector<MultiIndex> shell;
  for (auto& a : box.enlarged(1).points())
    if (!box.contains(a)) shell.push_back(std::move(a));

  warm_cache(calc, j, inside, options.threads);
  warm_cache(calc, j, shell, options.threads);
  for (const auto& a : inside) {
    auto piece = calc.piece(j, a);
    if (!piece.group.is_trivial()) scan.pieces.push_back(std::move(piece));
  }
  for (const auto& a : shell)
    if (!calc.piece(j, a).group.is_trivial()) scan.shell_nonzero.push_back(a);
  return scan;
}

InducedMap mult_map(ExtCalculator& calc, int j, const MultiIndex& alpha, int i) {
  if (i < 0 || i >= calc.nvars()) throw AlgebraError("variable index out of range");
  MultiIndex up = alpha;
  ++up[static_cast<std::size_t>(i)];
  return inclusion_induced_map(calc.piece(j, alpha), calc.piece(j, up));
}

TransitionMapReport transition_map(ExtCalculator& level, ExtCalculator& next_level, int ell, int j,
                                   const MultiIndex& alpha) {
  if (ell < 1) throw AlgebraError("transition maps start at level 1");
  if (level.taylor().generator_count() != next_level.taylor().generator_count())
    throw AlgebraError("levels must use the same generator list");
  auto source = level.piece(j, alpha);
  auto target = next_level.piece(j, alpha);
  auto induced = inclusion_induced_map(source, target);
  TransitionMapReport report;
  report.ell = ell;
  report.j = j;
  report.alpha = alpha;
  report.source = source.group;
  report.target = target.group;
  report.matrix = std::move(induced.matrix);
  report.injective = induced.injective;
  return report;
}

TransitionMapReport transition_map(const MonomialIdeal& base, int ell, int j, const MultiIndex& alpha) {
  if (ell < 1) throw AlgebraError("transition maps start at level 1");
  ExtCalculator level(power_ideal(base, ell));
  ExtCalculator next(power_ideal(base, ell + 1));
  return transition_map(level, next, ell, j, alpha);
}

MonomialIdeal reisner_ideal() {
  const std::vector<std::vector<int>> triples = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                                 {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
  std::vector<MultiIndex> gens;
  for (const auto& t : triples) {
    MultiIndex g(6, 0);
    for (int v : t) g[static_cast<std::size_t>(v)] = 1;
    gens.push_back(g);
  }
  return MonomialIdeal(6, std::move(gens));
}

FinAbGroup localize_at(const FinAbGroup& g, std::uint64_t p) {
  FinAbGroup out;
  out.free_rank = g.free_rank;
  for (const auto& d : g.torsion) {
    if (!mpz_divisible_ui_p(d.get_mpz_t(), p)) continue;
    Integer part;
    mpz_ui_pow_ui(part.get_mpz_t(), p, static_cast<unsigned long>(p_valuation(d, p)));
    out.torsion.push_back(part);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The annihilator pipeline.

namespace {

class InducedMapCache {
 public:
  const InducedMap& get(const GradedExtPiece& s, const GradedExtPiece& t) {
    auto key = std::make_pair(s.strand.get(), t.strand.get());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, inclusion_induced_map(s, t)).first;
    return it->second;
  }

 private:
  std::map<std::pair<const StrandData*, const StrandData*>, InducedMap> cache_;
};

LevelSummary summarize(int ell, const ExtScan& scan, std::uint64_t p) {
  LevelSummary s;
  s.ell = ell;
  s.box = scan.box;
  s.nonzero_pieces = scan.pieces.size();
  s.shell_clean = scan.shell_clean();
  Integer prime;
  mpz_set_ui(prime.get_mpz_t(), p);
  for (const auto& piece : scan.pieces) {
    const auto& g = piece.group;
    ++s.group_histogram[g.to_string()];
    if (g.free_rank > 0) s.has_free = true;
    bool elementary = g.free_rank == 0 && !g.torsion.empty();
    for (const auto& d : g.torsion) {
      if (d != prime) elementary = false;
      if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        s.has_p_torsion = true;
        s.p_exponent = std::max(s.p_exponent, p_valuation(d, p));
      }
      mpz_lcm(s.exponent.get_mpz_t(), s.exponent.get_mpz_t(), d.get_mpz_t());
    }
    if (!elementary) s.all_elementary_p = false;
  }
  if (scan.pieces.empty()) s.all_elementary_p = false;
  return s;
}

bool is_single_z_mod_p(const FinAbGroup& g, std::uint64_t p) {
  Integer prime;
  mpz_set_ui(prime.get_mpz_t(), p);
  return g.free_rank == 0 && g.torsion.size() == 1 && g.torsion[0] == prime;
}

}  // namespace

PipelineReport reisner_pipeline(const MonomialIdeal& ideal, PipelineOptions options) {
  if (options.levels < 1) throw AlgebraError("at least one level is required");
  if (!is_prime(options.p)) throw AlgebraError("residue characteristic must be prime");
  PipelineReport report;
  report.options = options;
  report.ideal = ideal;
  report.is_reisner = ideal.same_ideal(reisner_ideal()) && options.j == 4;
  const int n = ideal.nvars();
  const int j = options.j;

  std::vector<std::unique_ptr<ExtCalculator>> calcs;
  std::vector<ExtScan> scans;
  for (int ell = 1; ell <= options.levels; ++ell) {
    auto power = power_ideal(ideal, ell);
    auto box = default_box(power);
    calcs.push_back(std::make_unique<ExtCalculator>(power));
    scans.push_back(ext_support_scan(*calcs.back(), j, box, {options.threads}));
    report.levels.push_back(summarize(ell, scans.back(), options.p));
  }
  auto fail = [&](std::string stage) {
    if (!report.failing_stage) report.failing_stage = std::move(stage);
  };
  for (const auto& level : report.levels)
    if (!level.shell_clean) fail("level " + std::to_string(level.ell) + ": support leaves the scan box");

  InducedMapCache maps;
  for (int ell = 1; ell < options.levels; ++ell) {
    TransitionSummary t;
    t.ell = ell;
    auto& low = *calcs[static_cast<std::size_t>(ell - 1)];
    auto& high = *calcs[static_cast<std::size_t>(ell)];
    for (const auto& piece : scans[static_cast<std::size_t>(ell - 1)].pieces) {
      ++t.degrees_checked;
      if (!maps.get(piece, high.piece(j, piece.alpha)).injective) t.non_injective.push_back(piece.alpha);
    }
    (void)low;
    if (!t.non_injective.empty()) fail("transition " + std::to_string(ell) + " -> " + std::to_string(ell + 1) + " is not injective");
    report.transitions.push_back(std::move(t));
  }

  const LevelSummary& first = report.levels.front();
  if (!first.has_free && first.nonzero_pieces > 0) {
    bool persists = true;
    for (const auto& level : report.levels)
      if (level.has_free || !mpz_divisible_p(first.exponent.get_mpz_t(), level.exponent.get_mpz_t())) persists = false;
    report.torsion_persists = persists;
    if (!persists) fail("integer torsion of level 1 does not persist");
  }

  if (report.is_reisner) {
    // Level 1: one Z/p, every variable acts by zero.
    bool residue = first.nonzero_pieces == 1 && is_single_z_mod_p(scans[0].pieces[0].group, options.p);
    if (residue) {
      for (int i = 0; i < n && residue; ++i) {
        MultiIndex up = scans[0].pieces[0].alpha;
        ++up[static_cast<std::size_t>(i)];
        residue = maps.get(scans[0].pieces[0], calcs[0]->piece(j, up)).zero;
      }
    }
    report.residue_field_at_level_one = residue;
    if (!residue) fail("level 1 is not the residue field");

    bool presentation = true;
    for (int ell = 1; ell <= options.levels && presentation; ++ell) {
      const auto& scan = scans[static_cast<std::size_t>(ell - 1)];
      auto& calc = *calcs[static_cast<std::size_t>(ell - 1)];
      DegreeBox support = DegreeBox::cube(n, -ell, -1);
      if (scan.pieces.size() != support.count()) presentation = false;
      for (const auto& piece : scan.pieces) {
        if (!presentation) break;
        if (!support.contains(piece.alpha) || !is_single_z_mod_p(piece.group, options.p)) {
          presentation = false;
          break;
        }
        for (int i = 0; i < n; ++i) {
          MultiIndex up = piece.alpha;
          ++up[static_cast<std::size_t>(i)];
          bool expect_zero = up[static_cast<std::size_t>(i)] > -1;
          const auto& m = maps.get(piece, calc.piece(j, up));
          if (expect_zero ? !m.zero : !m.injective) {
            presentation = false;
            break;
          }
        }
      }
    }
    report.truncated_presentation = presentation;
    if (!presentation) fail("Ext levels do not match A/(p, x^ell)");

    if (options.levels >= 2) {
      bool product = presentation;
      for (int ell = 1; ell < options.levels && product; ++ell) {
        MultiIndex generator_degree(static_cast<std::size_t>(n), -ell);
        auto src = calcs[static_cast<std::size_t>(ell - 1)]->piece(j, generator_degree);
        auto dst = calcs[static_cast<std::size_t>(ell)]->piece(j, generator_degree);
        product = maps.get(src, dst).injective && !src.group.is_trivial();
      }
      report.transition_is_product_of_variables = product;
      if (!product) fail("transition is not multiplication by the product of the variables");
    }
  }

  // Assemble evidence for the colimit H^j_I.
  bool all_injective = std::all_of(report.transitions.begin(), report.transitions.end(),
                                   [](const TransitionSummary& t) { return t.non_injective.empty(); });
  bool any_free = std::any_of(report.levels.begin(), report.levels.end(),
                              [](const LevelSummary& l) { return l.has_free; });
  bool first_p_nonzero = first.has_free || first.has_p_torsion;
  bool all_p_zero = std::none_of(report.levels.begin(), report.levels.end(),
                                 [](const LevelSummary& l) { return l.has_free || l.has_p_torsion; });
  bool shells_clean = std::all_of(report.levels.begin(), report.levels.end(),
                                  [](const LevelSummary& l) { return l.shell_clean; });
  if (all_p_zero && shells_clean) {
    report.evidence = AnnihilatorEvidence{false, std::nullopt, false};
  } else if (first_p_nonzero && all_injective) {
    report.colimit_nonzero = true;
    AnnihilatorEvidence ev;
    ev.nonzero = true;
    if (!any_free) {
      int e = 0;
      for (const auto& l : report.levels) e = std::max(e, l.p_exponent);
      ev.kill_exponent = e;
    }
    report.evidence = ev;
  }
  if (report.evidence)
    report.verdict = infer_annihilator(*report.evidence);
  else
    report.verdict = {AnnihilatorIdeal::Kind::Inconclusive, 0};
  return report;
}

}  // namespace lcann
