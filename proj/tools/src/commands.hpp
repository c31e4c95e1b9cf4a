#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "lcann/monomial_ideal.hpp"
#include "lcann/simplicial.hpp"
#include "lcann_cli/json_out.hpp"

namespace lcann::cli {

struct Context {
  std::istream& in;
  unsigned threads = 1;
};

/// Reads a file, or stdin for "-". "builtin:reisner" and "builtin:rp2" name
/// the bundled examples.
MonomialIdeal load_ideal(const std::string& source, Context& ctx);
SimplicialComplex load_complex(const std::string& facets, const std::string& ideal, Context& ctx);
DegreeBox parse_box(const std::string& text, int n);

struct ExtArgs {
  std::string ideal;
  int level = 1;
  int j = 4;
  std::string alpha;
  bool mult = false;
};
struct ScanArgs {
  std::string ideal;
  int level = 1;
  int j = 4;
  std::string box;
};
struct TransitionArgs {
  std::string ideal;
  int level = 1;
  int j = 4;
  std::string alpha;
};
struct PipelineArgs {
  std::string ideal;
  std::uint64_t p = 2;
  int levels = 3;
  int j = 4;
};
struct DsubArgs {
  std::uint64_t p = 2;
  std::string gens_file;
  std::vector<std::string> gens;
  int nvars = 0;
  int order = 4;
};
struct SimplicialArgs {
  std::string facets;
  std::string ideal;
  std::vector<std::uint64_t> primes{2, 3};
};
struct HochsterArgs {
  std::string facets;
  std::string ideal;
  std::uint64_t p = 2;
  int i = -1;  // -1: every degree
  std::string alpha;
};
struct FiltrationArgs {
  std::string spec;
  int quotient = 0;
  std::string localize;
  std::uint64_t p = 2;
  int nvars = 0;
  int widen = 0;
  int samples = 50;
  std::uint64_t seed = 1;
};
struct RadicalArgs {
  std::string polys;
  std::string ideal;
  int timeout_secs = 600;
  std::string order = "grlex";
};

Report run_ext(const ExtArgs& a, Context& ctx);
Report run_scan(const ScanArgs& a, Context& ctx);
Report run_transition(const TransitionArgs& a, Context& ctx);
Report run_pipeline(const PipelineArgs& a, Context& ctx);
Report run_dsub(const DsubArgs& a, Context& ctx);
Report run_saturate(const DsubArgs& a, Context& ctx);
Report run_simplicial(const SimplicialArgs& a, Context& ctx);
Report run_hochster(const HochsterArgs& a, Context& ctx);
Report run_filtration(const FiltrationArgs& a, Context& ctx);
Report run_radical_check(const RadicalArgs& a, Context& ctx);

}  // namespace lcann::cli
