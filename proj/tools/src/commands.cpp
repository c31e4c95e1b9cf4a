#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "lcann/diffops.hpp"
#include "lcann/filtration.hpp"
#include "lcann/groebner.hpp"
#include "lcann/io.hpp"

namespace lcann::cli {

namespace {

const std::string kBuiltinReisner = "builtin:reisner";
const std::string kBuiltinRp2 = "builtin:rp2";

template <class F>
auto with_source(const std::string& source, Context& ctx, F&& parse) {
  if (source == "-") return parse(ctx.in);
  std::ifstream file(source);
  if (!file) throw InputError(0, "cannot open '" + source + "'");
  return parse(file);
}

std::string read_all(const std::string& source, Context& ctx) {
  return with_source(source, ctx, [](std::istream& s) {
    std::ostringstream os;
    os << s.rdbuf();
    return os.str();
  });
}

MultiIndex parse_alpha(const std::string& text, int n) {
  if (text.empty()) throw InputError(0, "--alpha is required");
  MultiIndex a;
  try {
    a = parse_int_list(text);
  } catch (const InputError& e) {
    throw InputError(0, std::string("--alpha: ") + e.what());
  }
  if (static_cast<int>(a.size()) != n)
    throw InputError(0, "--alpha needs " + std::to_string(n) + " entries, got " + std::to_string(a.size()));
  return a;
}

bool is_reisner(const MonomialIdeal& ideal) { return ideal.same_ideal(reisner_ideal()); }

bool is_rp2(const SimplicialComplex& complex) { return complex == stanley_reisner_complex(reisner_ideal()); }

Json histogram_json(const std::map<std::string, std::size_t>& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h) j[k] = v;
  return j;
}

Json pieces_json(const std::vector<GradedExtPiece>& pieces) {
  Json arr = Json::array();
  for (const auto& p : pieces) arr.push_back({{"alpha", to_json(p.alpha)}, {"group", p.group.to_string()}});
  return arr;
}


}  // namespace

MonomialIdeal load_ideal(const std::string& source, Context& ctx) {
  if (source.empty()) throw InputError(0, "--ideal is required");
  if (source == kBuiltinReisner) return reisner_ideal();
  return with_source(source, ctx, [](std::istream& s) { return parse_ideal(s); });
}

SimplicialComplex load_complex(const std::string& facets, const std::string& ideal, Context& ctx) {
  if (!facets.empty() && !ideal.empty()) throw InputError(0, "give either --facets or --ideal, not both");
  if (facets == kBuiltinRp2) return stanley_reisner_complex(reisner_ideal());
  if (!facets.empty()) return with_source(facets, ctx, [](std::istream& s) { return parse_facets(s); });
  if (!ideal.empty()) {
    auto I = load_ideal(ideal, ctx);
    if (!I.is_squarefree()) throw InputError(0, "the ideal is not squarefree");
    return stanley_reisner_complex(I);
  }
  throw InputError(0, "--facets or --ideal is required");
}

DegreeBox parse_box(const std::string& text, int n) {
  DegreeBox box;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw InputError(0, "--box entries look like lo:hi");
    auto lo = parse_int_list(part.substr(0, colon)), hi = parse_int_list(part.substr(colon + 1));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw InputError(0, "--box entry '" + part + "' is malformed");
    box.ranges.emplace_back(lo[0], hi[0]);
  }
  if (box.ranges.size() == 1 && n > 1) box = DegreeBox::cube(n, box.ranges[0].first, box.ranges[0].second);
  if (static_cast<int>(box.ranges.size()) != n)
    throw InputError(0, "--box needs 1 or " + std::to_string(n) + " ranges");
  return box;
}

// ---------------------------------------------------------------------------

Report run_ext(const ExtArgs& a, Context& ctx) {
  auto base = load_ideal(a.ideal, ctx);
  if (a.level < 1) throw InputError(0, "--level must be at least 1");
  ExtCalculator calc(power_ideal(base, a.level));
  MultiIndex alpha = parse_alpha(a.alpha, base.nvars());
  auto piece = calc.piece(a.j, alpha);
  auto m = calc.strand_matrices(a.j, alpha);

  Report r;
  r.command = "ext";
  r.inputs = {{"ideal", base.to_string()}, {"level", a.level}, {"j", a.j}, {"alpha", to_json(alpha)}};
  r.results["group"] = to_json(piece.group);
  r.results["strand_ranks"] = {m.prev_basis.size(), m.basis.size(), m.next_basis.size()};
  if (a.mult) {
    Json maps = Json::array();
    for (int i = 0; i < calc.nvars(); ++i) {
      auto mm = mult_map(calc, a.j, alpha, i);
      maps.push_back({{"variable", i}, {"zero", mm.zero}, {"injective", mm.injective}, {"matrix", to_json(mm.matrix)}});
    }
    r.results["multiplication_maps"] = maps;
  }
  return r;
}

Report run_scan(const ScanArgs& a, Context& ctx) {
  auto base = load_ideal(a.ideal, ctx);
  if (a.level < 1) throw InputError(0, "--level must be at least 1");
  auto power = power_ideal(base, a.level);
  ExtCalculator calc(power);
  bool default_used = a.box.empty();
  DegreeBox box = default_used ? default_box(power) : parse_box(a.box, base.nvars());
  auto scan = ext_support_scan(calc, a.j, box, {ctx.threads});

  Report r;
  r.command = "scan";
  r.inputs = {{"ideal", base.to_string()}, {"level", a.level}, {"j", a.j}, {"box", box.to_string()}};
  std::map<std::string, std::size_t> hist;
  for (const auto& p : scan.pieces) ++hist[p.group.to_string()];
  Json shell = Json::array();
  for (const auto& s : scan.shell_nonzero) shell.push_back(to_json(s));
  r.results = {{"pieces", pieces_json(scan.pieces)},
               {"nonzero_count", scan.pieces.size()},
               {"shell_clean", scan.shell_clean()},
               {"shell_nonzero", shell},
               {"group_histogram", histogram_json(hist)}};
  // Finite support is only expected for the finite-length Ext^4 of the Reisner ideal.
  if (default_used && is_reisner(base) && a.j == 4) r.claims.push_back(claim("ext-support-box", scan.shell_clean()));

  if (is_reisner(base) && a.j == 4) {
    FinAbGroup z2;
    z2.torsion = {Integer(2)};
    bool all_z2 = std::all_of(scan.pieces.begin(), scan.pieces.end(), [&](const auto& p) { return p.group == z2; });
    if (a.level == 1 && box.contains(MultiIndex(6, -1))) {
      bool ok = scan.pieces.size() == 1 && all_z2 && scan.shell_clean();
      Json maps = Json::array();
      if (ok) {
        for (int i = 0; i < 6; ++i) {
          bool zero = mult_map(calc, 4, scan.pieces[0].alpha, i).zero;
          maps.push_back(zero);
          ok = ok && zero;
        }
      }
      r.results["multiplication_maps_zero"] = maps;
      r.claims.push_back(claim("ext4-level1-residue-field", ok));
    } else if (a.level >= 2 && box.contains(MultiIndex(6, -a.level))) {
      DegreeBox cube = DegreeBox::cube(6, -a.level, -1);
      bool ok = scan.pieces.size() == cube.count() && all_z2 && scan.shell_clean() &&
                std::all_of(scan.pieces.begin(), scan.pieces.end(), [&](const auto& p) { return cube.contains(p.alpha); });
      r.claims.push_back(claim_at_level("ext4-truncated-presentation", ok, a.level, "support and groups only"));
    }
  }
  return r;
}

Report run_transition(const TransitionArgs& a, Context& ctx) {
  auto base = load_ideal(a.ideal, ctx);
  if (a.level < 1) throw InputError(0, "--level must be at least 1");
  ExtCalculator low(power_ideal(base, a.level)), high(power_ideal(base, a.level + 1));
  std::vector<MultiIndex> degrees;
  if (!a.alpha.empty()) {
    degrees.push_back(parse_alpha(a.alpha, base.nvars()));
  } else {
    auto scan = ext_support_scan(low, a.j, default_box(low.ideal()), {ctx.threads});
    for (const auto& p : scan.pieces) degrees.push_back(p.alpha);
  }
  Report r;
  r.command = "transition";
  r.inputs = {{"ideal", base.to_string()}, {"level", a.level}, {"j", a.j}};
  if (!a.alpha.empty()) r.inputs["alpha"] = to_json(degrees.front());
  Json maps = Json::array();
  bool all_injective = true;
  for (const auto& alpha : degrees) {
    auto t = transition_map(low, high, a.level, a.j, alpha);
    all_injective = all_injective && t.injective;
    maps.push_back({{"alpha", to_json(alpha)},
                    {"source", t.source.to_string()},
                    {"target", t.target.to_string()},
                    {"injective", t.injective},
                    {"matrix", to_json(t.matrix)}});
  }
  r.results = {{"maps", maps}, {"degrees_checked", degrees.size()}, {"all_injective", all_injective}};
  if (is_reisner(base) && a.j == 4)
    r.claims.push_back(claim_at_level("ext4-transition-injective", all_injective, a.level + 1));
  return r;
}

Report run_pipeline(const PipelineArgs& a, Context& ctx) {
  auto base = load_ideal(a.ideal, ctx);
  if (a.levels < 1) throw InputError(0, "--levels must be at least 1");
  if (!is_prime(a.p)) throw InputError(0, "--p must be prime");
  PipelineOptions opt;
  opt.p = a.p;
  opt.levels = a.levels;
  opt.j = a.j;
  opt.threads = ctx.threads;
  auto rep = reisner_pipeline(base, opt);

  Report r;
  r.command = "pipeline";
  r.inputs = {{"ideal", base.to_string()}, {"p", a.p}, {"levels", a.levels}, {"j", a.j}};
  Json levels = Json::array();
  for (const auto& l : rep.levels)
    levels.push_back({{"level", l.ell},
                      {"box", l.box.to_string()},
                      {"nonzero_pieces", l.nonzero_pieces},
                      {"shell_clean", l.shell_clean},
                      {"has_free", l.has_free},
                      {"p_exponent", l.p_exponent},
                      {"all_elementary_p", l.all_elementary_p},
                      {"exponent", l.has_free ? Json(nullptr) : to_json(l.exponent)},
                      {"group_histogram", histogram_json(l.group_histogram)}});
  Json transitions = Json::array();
  for (const auto& t : rep.transitions) {
    Json bad = Json::array();
    for (const auto& d : t.non_injective) bad.push_back(to_json(d));
    transitions.push_back({{"from_level", t.ell}, {"degrees_checked", t.degrees_checked}, {"non_injective", bad}});
  }
  auto opt_json = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  r.results = {{"levels", levels},
               {"transitions", transitions},
               {"is_reisner", rep.is_reisner},
               {"torsion_persists", opt_json(rep.torsion_persists)},
               {"residue_field_at_level_one", opt_json(rep.residue_field_at_level_one)},
               {"truncated_presentation", opt_json(rep.truncated_presentation)},
               {"transition_is_product_of_variables", opt_json(rep.transition_is_product_of_variables)},
               {"colimit_nonzero", rep.colimit_nonzero},
               {"annihilator", rep.verdict.to_string(a.p)},
               {"failing_stage", rep.failing_stage ? Json(*rep.failing_stage) : Json(nullptr)}};

  const int L = a.levels;
  bool shells = std::all_of(rep.levels.begin(), rep.levels.end(), [](const LevelSummary& l) { return l.shell_clean; });
  if (rep.is_reisner) r.claims.push_back(claim_at_level("ext-support-box", shells, L));
  if (rep.torsion_persists) r.claims.push_back(claim_at_level("ext-torsion-persists", *rep.torsion_persists, L));
  if (rep.is_reisner) {
    r.claims.push_back(claim("ext4-level1-residue-field", rep.residue_field_at_level_one.value_or(false)));
    r.claims.push_back(claim_at_level("ext4-truncated-presentation", rep.truncated_presentation.value_or(false), L));
    if (L >= 2) {
      bool injective = std::all_of(rep.transitions.begin(), rep.transitions.end(),
                                   [](const TransitionSummary& t) { return t.non_injective.empty(); });
      r.claims.push_back(claim_at_level("ext4-transition-injective", injective, L));
      r.claims.push_back(
          claim_at_level("ext4-transition-product", rep.transition_is_product_of_variables.value_or(false), L));
    }
    if (a.p == 2) {
      bool ok = rep.verdict.kind == AnnihilatorIdeal::Kind::PiPower && rep.verdict.ell == 1;
      r.claims.push_back(claim_at_level("ann-h4-equals-2", ok, L, "Ann = " + rep.verdict.to_string(a.p)));
    }
  }
  return r;
}

namespace {

std::vector<DvrPoly> load_dvr_gens(const DsubArgs& a, Context& ctx) {
  if (!is_prime(a.p)) throw InputError(0, "--p must be prime");
  std::string text;
  if (!a.gens_file.empty()) text = read_all(a.gens_file, ctx);
  for (const auto& g : a.gens) text += "\n" + g;
  std::istringstream in(text);
  return parse_dvr_generators(in, a.p, a.nvars);
}

}  // namespace

Report run_dsub(const DsubArgs& a, Context& ctx) {
  auto gens = load_dvr_gens(a, ctx);
  Report r;
  r.command = "dsub";
  Json echo = Json::array();
  Json vals = Json::array();
  for (const auto& g : gens) {
    echo.push_back(g.to_string());
    vals.push_back(g.is_zero() ? Json(nullptr) : Json(min_coefficient_valuation(g)));
  }
  r.inputs = {{"p", a.p}, {"generators", echo}};
  auto v = classify_d_submodule(gens);
  std::string ideal = v.ell == 0 ? "(1)" : "(" + std::to_string(a.p) + (v.ell > 1 ? "^" + std::to_string(v.ell) : "") + ")";
  r.results = {{"ell", v.ell}, {"ideal", ideal}, {"generator_valuations", vals}};
  return r;
}

Report run_saturate(const DsubArgs& a, Context& ctx) {
  auto gens = load_dvr_gens(a, ctx);
  auto J = pi_saturate(gens);
  Report r;
  r.command = "saturate";
  Json echo = Json::array();
  for (const auto& g : gens) echo.push_back(g.to_string());
  r.inputs = {{"p", a.p}, {"generators", echo}, {"order", a.order}};
  r.results = {{"saturation", J.to_string(1)},
               {"is_unit", J.is_unit()},
               {"divided_power_stable", is_divided_power_stable(J, a.order)}};
  return r;
}

Report run_simplicial(const SimplicialArgs& a, Context& ctx) {
  auto complex = load_complex(a.facets, a.ideal, ctx);
  Report r;
  r.command = "simplicial";
  Json facets = Json::array();
  for (const auto& f : complex.facets()) facets.push_back(f);
  r.inputs = {{"vertices", complex.nvertices()}, {"facets", facets}};
  auto integral = reduced_cohomology(complex, 0);
  r.results["dimension"] = complex.dimension();
  r.results["f_vector"] = complex.f_vector();
  r.results["nonface_ideal"] = nonface_ideal(complex).to_string();
  r.results["integral"] = to_json(integral);

  long euler_faces = 0, euler_ranks = 0;
  auto fv = complex.f_vector();
  for (std::size_t k = 0; k < fv.size(); ++k) euler_faces += (k % 2 == 0 ? -1 : 1) * static_cast<long>(fv[k]);
  for (int d = integral.first_degree; d <= integral.last_degree(); ++d)
    euler_ranks += (d % 2 == 0 ? 1 : -1) * static_cast<long>(integral.group(d).free_rank);
  r.results["euler_characteristic_consistent"] = euler_faces == euler_ranks;

  bool uct = true;
  Json fields = Json::object();
  for (auto p : a.primes) {
    if (!is_prime(p)) throw InputError(0, "--primes entries must be prime");
    auto mod = reduced_cohomology(complex, p);
    fields[std::to_string(p)] = to_json(mod);
    for (int d = mod.first_degree; d <= mod.last_degree(); ++d) {
      std::size_t expect = integral.group(d).free_rank + integral.group(d).p_torsion_count(p) +
                           integral.group(d + 1).p_torsion_count(p);
      if (mod.dimension(d) != expect) uct = false;
    }
  }
  r.results["mod_p"] = fields;
  r.claims.push_back(claim("universal-coefficients", uct));
  if (is_rp2(complex)) {
    FinAbGroup z2;
    z2.torsion = {Integer(2)};
    bool ok = integral.group(0).is_trivial() && integral.group(1).is_trivial() && integral.group(2) == z2;
    r.claims.push_back(claim("rp2-integral-cohomology", ok));
    auto mod2 = reduced_cohomology(complex, 2);
    r.claims.push_back(claim("rp2-mod2-cohomology", mod2.dimension(1) == 1 && mod2.dimension(2) == 1));
  }
  return r;
}

Report run_hochster(const HochsterArgs& a, Context& ctx) {
  auto complex = load_complex(a.facets, a.ideal, ctx);
  if (!is_prime(a.p)) throw InputError(0, "--p must be prime");
  const int n = complex.nvertices();
  const int top = complex.dimension() + 1;  // Krull dimension of k[Δ]
  Report r;
  r.command = "hochster";
  r.inputs = {{"vertices", n}, {"p", a.p}};
  std::vector<int> degrees;
  if (a.i >= 0) {
    degrees.push_back(a.i);
    r.inputs["i"] = a.i;
  } else {
    for (int i = 0; i <= std::max(top, 0); ++i) degrees.push_back(i);
  }
  if (!a.alpha.empty()) {
    MultiIndex alpha = parse_alpha(a.alpha, n);
    r.inputs["alpha"] = to_json(alpha);
    Json pieces = Json::array();
    for (int i : degrees)
      pieces.push_back({{"i", i}, {"dimension", hochster_local_cohomology_piece(complex, i, alpha, a.p)}});
    r.results["pieces"] = pieces;
    return r;
  }
  if (n > 16) throw InputError(0, "support scans need at most 16 vertices; pass --alpha");
  Json nonzero = Json::array();
  std::optional<int> lowest;
  for (int i : degrees)
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
      MultiIndex alpha(static_cast<std::size_t>(n), 0);
      for (int v : mask_vertices(w)) alpha[static_cast<std::size_t>(v)] = -1;
      auto dim = hochster_local_cohomology_piece(complex, i, alpha, a.p);
      if (dim == 0) continue;
      nonzero.push_back({{"i", i}, {"support", mask_vertices(w)}, {"dimension", dim}});
      lowest = lowest ? std::min(*lowest, i) : i;
    }
  r.results = {{"nonzero", nonzero},
               {"lowest_nonvanishing", lowest ? Json(*lowest) : Json(nullptr)},
               {"krull_dimension", top}};
  if (is_rp2(complex) && a.i < 0) {
    if (a.p == 3) r.claims.push_back(claim("rp2-cohen-macaulay-odd", lowest.value_or(top) >= 3));
    if (a.p == 2)
      r.claims.push_back(
          claim("rp2-char2-defect", hochster_local_cohomology_piece(complex, 2, MultiIndex(6, 0), 2) > 0));
  }
  return r;
}

Report run_filtration(const FiltrationArgs& a, Context& ctx) {
  int sources = (!a.spec.empty()) + (a.quotient > 0) + (!a.localize.empty());
  if (sources != 1) throw InputError(0, "give exactly one of --spec, --quotient, --localize");
  if (!is_prime(a.p)) throw InputError(0, "--p must be prime");
  FiltrationSpec spec;
  std::optional<DvrPoly> f;
  if (!a.spec.empty()) {
    spec = with_source(a.spec, ctx, [](std::istream& s) { return parse_filtration(s); });
  } else if (a.quotient > 0) {
    spec = build_filtration_quotient(a.p, a.quotient);
  } else {
    std::istringstream in(a.localize);
    auto gens = parse_dvr_generators(in, a.p, a.nvars);
    if (gens.size() != 1 || gens[0].is_zero()) throw InputError(0, "--localize needs one nonzero polynomial");
    f = gens[0];
    spec = build_filtration_localization(*f);
  }
  if (a.widen < 0) throw InputError(0, "--widen must be nonnegative");
  if (a.widen > 0) spec = widen_window(spec, a.widen);

  Report r;
  r.command = "filtration";
  r.inputs = {{"spec", format_filtration(spec)}, {"samples", a.samples}, {"seed", a.seed}};
  auto axioms = check_axioms(spec);
  Json failures = Json::array();
  for (const auto& fl : axioms.failures)
    failures.push_back({{"tier", fl.tier},
                        {"condition", fl.condition},
                        {"j", fl.j ? Json(*fl.j) : Json(nullptr)},
                        {"message", fl.message}});
  r.results["axiom_failures"] = failures;
  r.claims.push_back(claim("filtration-axioms", axioms.ok()));
  if (!axioms.ok()) return r;

  auto verdict = finite_type_and_verdict(spec);
  Json bounds = Json::array();
  for (auto [lo, hi] : verdict.bounds) bounds.push_back({lo, hi});
  r.results["finite_length"] = verdict.finite_length;
  r.results["length_bound"] = verdict.length_bound;
  r.results["bounds"] = bounds;
  r.results["annihilator"] = verdict.annihilator(spec.p);

  std::mt19937_64 rng(a.seed);
  auto random_poly = [&](int n) {
    std::uniform_int_distribution<int> coef(-9, 9), val(0, 4), deg(0, 3), count(1, 4);
    std::vector<Term<DvrScalar>> terms;
    int c = count(rng);
    for (int k = 0; k < c; ++k) {
      MultiIndex e(static_cast<std::size_t>(n));
      for (auto& x : e) x = deg(rng);
      int u = coef(rng);
      if (u == 0 || u % static_cast<int>(spec.p) == 0) u = 1;
      terms.push_back({e, DvrScalar::pi_power(spec.p, val(rng)) * DvrScalar(spec.p, u)});
    }
    return DvrPoly::from_terms(n, std::move(terms));
  };

  bool samples_ok = true;
  bool all_quotient = std::all_of(spec.tiers.begin(), spec.tiers.end(),
                                  [](const FiltrationTier& t) { return t.base.kind == BaseModule::Kind::Quotient; });
  if (verdict.finite_length && all_quotient) {
    // Model M by R / pi^T with T the total torsion exponent.
    int total = 0;
    for (const auto& t : spec.tiers) total += t.base.torsion_exponent;
    for (int s = 0; s < a.samples; ++s) {
      DvrPoly x = random_poly(2);
      if (x.is_zero()) continue;
      DvrPoly killed = x.scaled(DvrScalar::pi_power(spec.p, verdict.length_bound));
      if (!killed.is_zero() && min_coefficient_valuation(killed) < total) samples_ok = false;
    }
    r.results["sampled_elements_killed"] = samples_ok;
  }
  if (f) {
    bool monotone = true;
    for (int s = 0; s < a.samples; ++s) {
      LocalizedElement x(*f, random_poly(f->nvars()), s % 3);
      if (x.is_zero()) continue;
      int idx = *x.layer_index();
      if (x.in_layer(idx - 1) || !x.in_layer(idx) || !x.in_layer(idx + 1)) monotone = false;
      auto y = x.times_pi();
      if (y.is_zero() || *y.layer_index() != idx - 1) monotone = false;
    }
    r.results["membership_consistent"] = monotone;
    r.claims.push_back(claim("localization-filtration", monotone));
  }
  r.claims.push_back(claim("filtration-finite-length", samples_ok, verdict.finite_length ? "finite type" : "infinite type"));
  return r;
}

Report run_radical_check(const RadicalArgs& a, Context& ctx) {
  auto ideal = a.ideal.empty() ? reisner_ideal() : load_ideal(a.ideal, ctx);
  std::vector<RatPoly> elements =
      a.polys.empty() ? schmitt_vogel_elements()
                      : with_source(a.polys, ctx, [](std::istream& s) { return parse_polynomial_file(s, 0); });
  for (const auto& e : elements)
    if (e.nvars() != ideal.nvars()) throw InputError(0, "polynomials and ideal use different variable counts");
  GroebnerOptions opt;
  if (a.order == "lex")
    opt.order = MonomialOrder::Lex;
  else if (a.order != "grlex")
    throw InputError(0, "--order must be grlex or lex");
  if (a.timeout_secs <= 0) throw InputError(0, "--timeout-secs must be positive");
  opt.timeout = std::chrono::seconds(a.timeout_secs);

  Report r;
  r.command = "radical-check";
  Json echo = Json::array();
  for (const auto& e : elements) echo.push_back(e.to_string(0, "x"));
  r.inputs = {{"ideal", ideal.to_string()}, {"elements", echo}, {"order", a.order}, {"timeout_secs", a.timeout_secs}};
  try {
    auto rep = sv_containment_check(elements, ideal, opt);
    Json containment = Json::array();
    for (bool b : rep.elements_in_ideal) containment.push_back(b);
    Json radical = Json::object();
    bool all_radical = true;
    for (const auto& [ch, flags] : rep.radical) {
      Json row = Json::array();
      for (std::size_t k = 0; k < flags.size(); ++k) {
        row.push_back({{"generator", format_multi_index(rep.monomials[k])}, {"member", static_cast<bool>(flags[k])}});
        all_radical = all_radical && flags[k];
      }
      radical[ch == 0 ? "Q" : "F_" + std::to_string(ch)] = row;
    }
    bool all_in = std::all_of(rep.elements_in_ideal.begin(), rep.elements_in_ideal.end(), [](bool b) { return b; });
    r.results = {{"elements_in_ideal", containment},
                 {"radical_membership", radical},
                 {"note", "equality of radicals is checked over F_2 and Q only, not over Z"}};
    r.claims.push_back(claim("sv-containment", all_in));
    r.claims.push_back(claim("sv-radical", all_radical));
  } catch (const GroebnerTimeout&) {
    r.results = {{"timed_out", true}};
    r.claims.push_back(claim("sv-radical", false, "timeout"));
  }
  return r;
}

}  // namespace lcann::cli
