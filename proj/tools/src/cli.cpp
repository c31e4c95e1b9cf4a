#include "lcann_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "commands.hpp"
#include "lcann/io.hpp"

namespace lcann::cli {

namespace {

void add_ideal(CLI::App* sub, std::string& target, bool required = true) {
  auto* opt = sub->add_option("--ideal", target, "Ideal file ('-' for stdin, or builtin:reisner)");
  if (required) opt->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact Ext, D-submodule and filtration computations over Z_(p)", "lcann"};
  app.require_subcommand(1);
  unsigned threads = 1;
  bool timing = false;
  app.add_option("--threads", threads, "Worker threads for degree scans")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", timing, "Add wall-clock time to the report");

  ExtArgs ext;
  auto* s_ext = app.add_subcommand("ext", "One graded piece Ext^j(A/I_ell, A)_alpha over Z");
  add_ideal(s_ext, ext.ideal);
  s_ext->add_option("--level", ext.level, "Power ell of the generators");
  s_ext->add_option("--j", ext.j, "Cohomological degree");
  s_ext->add_option("--alpha", ext.alpha, "Degree, comma separated")->required();
  s_ext->add_flag("--mult", ext.mult, "Also report multiplication by each variable");

  ScanArgs scan;
  auto* s_scan = app.add_subcommand("scan", "All nonzero pieces of Ext^j in a degree box");
  add_ideal(s_scan, scan.ideal);
  s_scan->add_option("--level", scan.level, "Power ell of the generators");
  s_scan->add_option("--j", scan.j, "Cohomological degree");
  s_scan->add_option("--box", scan.box, "lo:hi for a cube, or one lo:hi per variable (comma separated)");

  TransitionArgs tr;
  auto* s_tr = app.add_subcommand("transition", "Maps Ext^j(A/I_ell, A) -> Ext^j(A/I_{ell+1}, A)");
  add_ideal(s_tr, tr.ideal);
  s_tr->add_option("--level", tr.level, "Source power ell");
  s_tr->add_option("--j", tr.j, "Cohomological degree");
  s_tr->add_option("--alpha", tr.alpha, "Single degree (default: every support degree)");

  PipelineArgs pl;
  auto* s_pl = app.add_subcommand("pipeline", "Levels, transitions and the annihilator verdict");
  add_ideal(s_pl, pl.ideal);
  s_pl->add_option("--p", pl.p, "Residue characteristic");
  s_pl->add_option("--levels", pl.levels, "Number of power levels");
  s_pl->add_option("--j", pl.j, "Cohomological degree");

  DsubArgs ds;
  auto* s_ds = app.add_subcommand("dsub", "Classify the D-submodule generated by polynomials over Z_(p)");
  DsubArgs sat;
  auto* s_sat = app.add_subcommand("saturate", "pi-saturation of a term ideal and its divided-power stability");
  for (auto [sub, a] : {std::pair{s_ds, &ds}, std::pair{s_sat, &sat}}) {
    sub->add_option("--p", a->p, "Residue characteristic")->required();
    sub->add_option("--gens", a->gens_file, "Generator file, one polynomial per line ('-' for stdin)");
    sub->add_option("--gen", a->gens, "Generator polynomial (repeatable)");
    sub->add_option("--nvars", a->nvars, "Variable count (default: highest index used)");
  }
  s_sat->add_option("--order", sat.order, "Largest divided-power order checked");

  SimplicialArgs sc;
  auto* s_sc = app.add_subcommand("simplicial", "Reduced cohomology of a simplicial complex");
  s_sc->add_option("--facets", sc.facets, "Facet file ('-' for stdin, or builtin:rp2)");
  add_ideal(s_sc, sc.ideal, false);
  s_sc->add_option("--primes", sc.primes, "Primes for field coefficients")->delimiter(',');

  HochsterArgs hs;
  auto* s_hs = app.add_subcommand("hochster", "Graded local cohomology of k[Δ] by Hochster's formula");
  s_hs->add_option("--facets", hs.facets, "Facet file ('-' for stdin, or builtin:rp2)");
  add_ideal(s_hs, hs.ideal, false);
  s_hs->add_option("--p", hs.p, "Field characteristic");
  s_hs->add_option("--i", hs.i, "Cohomological degree (default: all)");
  s_hs->add_option("--alpha", hs.alpha, "Degree a <= 0 (default: scan all squarefree supports)");

  FiltrationArgs fl;
  auto* s_fl = app.add_subcommand("filtration", "Check a filtration description and decide finite length");
  s_fl->add_option("--spec", fl.spec, "Filtration file ('-' for stdin)");
  s_fl->add_option("--quotient", fl.quotient, "Build the filtration of R/p^ell");
  s_fl->add_option("--localize", fl.localize, "Build the filtration of R_f for this polynomial");
  s_fl->add_option("--p", fl.p, "Residue characteristic");
  s_fl->add_option("--nvars", fl.nvars, "Variable count for --localize");
  s_fl->add_option("--widen", fl.widen, "Enlarge the explicit window by this many steps");
  s_fl->add_option("--samples", fl.samples, "Sampled elements for spot checks");
  s_fl->add_option("--seed", fl.seed, "Sampling seed");

  RadicalArgs rc;
  auto* s_rc = app.add_subcommand("radical-check", "Radical membership of monomial generators via Groebner bases");
  s_rc->add_option("--polys", rc.polys, "Polynomial file (default: the bundled four elements)");
  add_ideal(s_rc, rc.ideal, false);
  s_rc->add_option("--timeout-secs", rc.timeout_secs, "Limit per Groebner basis");
  s_rc->add_option("--order", rc.order, "grlex or lex");

  if (args.empty()) {
    err << app.help();
    return kUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Context ctx{in, threads};
  auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*s_ext) report = run_ext(ext, ctx);
    else if (*s_scan) report = run_scan(scan, ctx);
    else if (*s_tr) report = run_transition(tr, ctx);
    else if (*s_pl) report = run_pipeline(pl, ctx);
    else if (*s_ds) report = run_dsub(ds, ctx);
    else if (*s_sat) report = run_saturate(sat, ctx);
    else if (*s_sc) report = run_simplicial(sc, ctx);
    else if (*s_hs) report = run_hochster(hs, ctx);
    else if (*s_fl) report = run_filtration(fl, ctx);
    else report = run_radical_check(rc, ctx);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << report.to_json().dump(2) << "\n";
  return report.any_failed() ? kClaimFailed : kOk;
}

}  // namespace lcann::cli
