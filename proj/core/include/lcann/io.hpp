#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcann/filtration.hpp"
#include "lcann/monomial_ideal.hpp"
#include "lcann/polynomial.hpp"
#include "lcann/simplicial.hpp"

namespace lcann {

/// Malformed input; line is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// "vars n" then one generator per line as n nonnegative exponents.
MonomialIdeal parse_ideal(std::istream& in);
std::string format_ideal(const MonomialIdeal& ideal);

/// Optional "vertices n", then one facet per line as vertex indices.
SimplicialComplex parse_facets(std::istream& in);
std::string format_facets(const SimplicialComplex& complex);

/// Sum of terms like "3*x1^2*x3", "-x0", "5/2". Variables are named
/// x<first_index> .. x<first_index + n - 1>.
RatPoly parse_polynomial(const std::string& text, int n, int first_index);

/// "vars n" then one polynomial per line, 0-based variable names.
std::vector<RatPoly> parse_polynomial_file(std::istream& in, int first_index = 0);

/// Generator lines for the D-submodule classifier: one polynomial per line,
/// 1-based names, the variable count inferred unless given.
std::vector<DvrPoly> parse_dvr_generators(std::istream& in, std::uint64_t p, int nvars = 0);

FiltrationSpec parse_filtration(std::istream& in);
std::string format_filtration(const FiltrationSpec& spec);

/// Integer list such as "-1,-1,0" or "-1 -1 0".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace lcann
