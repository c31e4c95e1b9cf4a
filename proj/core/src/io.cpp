#include "lcann/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace lcann {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Non-blank lines with comments removed.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({n, t});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

long parse_long(const std::string& w, std::size_t line) {
  try {
    std::size_t used = 0;
    long v = std::stol(w, &used);
    if (used != w.size()) throw InputError(line, "not an integer: '" + w + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InputError(line, "not an integer: '" + w + "'");
  }
}

int parse_int(const std::string& w, std::size_t line) {
  long v = parse_long(w, line);
  if (v < -1000000 || v > 1000000) throw InputError(line, "integer out of range: '" + w + "'");
  return static_cast<int>(v);
}

int parse_vars_header(const Line& l, const std::string& keyword) {
  auto w = words(l.text);
  if (w.size() != 2 || w[0] != keyword) throw InputError(l.number, "expected '" + keyword + " <n>'");
  int n = parse_int(w[1], l.number);
  if (n < 1 || n > 64) throw InputError(l.number, "variable count must be between 1 and 64");
  return n;
}

// ---------------------------------------------------------------------------
// Polynomial text.

using RawTerm = std::pair<std::map<int, int>, Rational>;

class PolyLexer {
 public:
  explicit PolyLexer(const std::string& s) : s_(s) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    if (at_end()) throw InputError(0, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw InputError(0, "expected '+' or '-' at column " + std::to_string(pos_ + 1));
      }
      auto t = term();
      t.second *= sign;
      terms.push_back(std::move(t));
      first = false;
      skip();
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw InputError(0, "expected a number at column " + std::to_string(pos_ + 1));
    return Integer(s_.substr(start, pos_ - start));
  }

  RawTerm term() {
    RawTerm t{{}, Rational(1)};
    bool any = false;
    for (;;) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Rational v(number());
        skip();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip();
          Integer d = number();
          if (d == 0) throw InputError(0, "zero denominator");
          v /= Rational(d);
        }
        t.second *= v;
      } else if (c == 'x') {
        ++pos_;
        Integer idx = number();
        if (idx > 1000) throw InputError(0, "variable index too large");
        int e = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          Integer ev = number();
          if (ev > 100000) throw InputError(0, "exponent too large");
          e = static_cast<int>(ev.get_si());
        }
        t.first[static_cast<int>(idx.get_si())] += e;
      } else {
        break;
      }
      any = true;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      if (!at_end() && (peek() == 'x' || std::isdigit(static_cast<unsigned char>(peek())))) continue;
      break;
    }
    if (!any) throw InputError(0, "expected a term at column " + std::to_string(pos_ + 1));
    t.second.canonicalize();
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

RatPoly build_poly(const std::vector<RawTerm>& raw, int n, int first_index) {
  std::vector<Term<Rational>> terms;
  for (const auto& [vars, c] : raw) {
    MultiIndex e(static_cast<std::size_t>(n), 0);
    for (auto [v, k] : vars) {
      int i = v - first_index;
      if (i < 0 || i >= n)
        throw InputError(0, "variable x" + std::to_string(v) + " outside x" + std::to_string(first_index) + "..x" +
                                std::to_string(first_index + n - 1));
      e[static_cast<std::size_t>(i)] += k;
    }
    terms.push_back({e, c});
  }
  return RatPoly::from_terms(n, std::move(terms));
}

[[noreturn]] void rethrow_at(const InputError& e, std::size_t line) {
  throw InputError(line, e.what());
}

}  // namespace

RatPoly parse_polynomial(const std::string& text, int n, int first_index) {
  return build_poly(PolyLexer(text).parse(), n, first_index);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::vector<int> out;
  for (const auto& w : words(s)) out.push_back(parse_int(w, 0));
  return out;
}

// ---------------------------------------------------------------------------

MonomialIdeal parse_ideal(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw InputError(0, "empty ideal file");
  int n = parse_vars_header(lines.front(), "vars");
  std::vector<MultiIndex> gens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto w = words(lines[k].text);
    if (static_cast<int>(w.size()) != n)
      throw InputError(lines[k].number, "expected " + std::to_string(n) + " exponents, found " + std::to_string(w.size()));
    MultiIndex g;
    for (const auto& x : w) {
      int e = parse_int(x, lines[k].number);
      if (e < 0) throw InputError(lines[k].number, "exponents must be nonnegative");
      g.push_back(e);
    }
    gens.push_back(std::move(g));
  }
  if (gens.empty()) throw InputError(lines.front().number, "ideal has no generators");
  return MonomialIdeal(n, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string s = "vars " + std::to_string(ideal.nvars()) + "\n";
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? " " : "") + std::to_string(g[i]);
    s += "\n";
  }
  return s;
}

SimplicialComplex parse_facets(std::istream& in) {
  auto lines = content_lines(in);
  std::optional<int> n;
  std::size_t start = 0;
  if (!lines.empty() && words(lines.front().text).front() == "vertices") {
    n = parse_vars_header(lines.front(), "vertices");
    if (*n > SimplicialComplex::kMaxVertices) throw InputError(lines.front().number, "too many vertices");
    start = 1;
  }
  std::vector<std::vector<int>> facets;
  int max_vertex = -1;
  for (std::size_t k = start; k < lines.size(); ++k) {
    std::vector<int> f;
    for (const auto& w : words(lines[k].text)) {
      int v = parse_int(w, lines[k].number);
      if (v < 0 || v >= SimplicialComplex::kMaxVertices) throw InputError(lines[k].number, "vertex index out of range");
      if (n && v >= *n) throw InputError(lines[k].number, "vertex " + std::to_string(v) + " exceeds the vertex count");
      if (std::find(f.begin(), f.end(), v) != f.end()) throw InputError(lines[k].number, "repeated vertex");
      f.push_back(v);
      max_vertex = std::max(max_vertex, v);
    }
    facets.push_back(std::move(f));
  }
  if (facets.empty()) throw InputError(0, "no facets given");
  return SimplicialComplex(n.value_or(max_vertex + 1), facets);
}

std::string format_facets(const SimplicialComplex& complex) {
  std::string s = "vertices " + std::to_string(complex.nvertices()) + "\n";
  for (const auto& f : complex.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + std::to_string(f[i]);
    s += "\n";
  }
  return s;
}

std::vector<RatPoly> parse_polynomial_file(std::istream& in, int first_index) {
  auto lines = content_lines(in);
  if (lines.empty()) throw InputError(0, "empty polynomial file");
  int n = parse_vars_header(lines.front(), "vars");
  std::vector<RatPoly> out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    try {
      out.push_back(parse_polynomial(lines[k].text, n, first_index));
    } catch (const InputError& e) {
      rethrow_at(e, lines[k].number);
    }
  }
  if (out.empty()) throw InputError(lines.front().number, "no polynomials given");
  return out;
}

std::vector<DvrPoly> parse_dvr_generators(std::istream& in, std::uint64_t p, int nvars) {
  auto lines = content_lines(in);
  std::size_t start = 0;
  if (!lines.empty() && words(lines.front().text).front() == "vars") {
    nvars = parse_vars_header(lines.front(), "vars");
    start = 1;
  }
  std::vector<std::pair<std::size_t, std::vector<RawTerm>>> raw;
  int max_index = 0;
  for (std::size_t k = start; k < lines.size(); ++k) {
    try {
      auto terms = PolyLexer(lines[k].text).parse();
      for (const auto& t : terms)
        for (auto [v, e] : t.first) max_index = std::max(max_index, v);
      raw.emplace_back(lines[k].number, std::move(terms));
    } catch (const InputError& e) {
      rethrow_at(e, lines[k].number);
    }
  }
  if (raw.empty()) throw InputError(0, "no generators given");
  int n = nvars > 0 ? nvars : std::max(1, max_index);
  std::vector<DvrPoly> out;
  for (const auto& [line, terms] : raw) {
    try {
      RatPoly f = build_poly(terms, n, 1);
      out.push_back(f.map_coefficients([&](const Rational& c) { return DvrScalar(p, c); }));
    } catch (const InputError& e) {
      rethrow_at(e, line);
    } catch (const AlgebraError& e) {
      throw InputError(line, e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filtration text.

namespace {

Tail parse_tail(const std::string& w, std::size_t line) {
  if (w == "shift") return Tail::Shift;
  if (w == "stable") return Tail::Stable;
  if (w == "wild") return Tail::Wild;
  throw InputError(line, "tail must be shift, stable or wild");
}

const char* tail_name(Tail t) {
  switch (t) {
    case Tail::Shift:
      return "shift";
    case Tail::Stable:
      return "stable";
    case Tail::Wild:
      break;
  }
  return "wild";
}

}  // namespace

FiltrationSpec parse_filtration(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty() || lines.front().text != "filtration v1")
    throw InputError(lines.empty() ? 0 : lines.front().number, "expected header 'filtration v1'");
  FiltrationSpec spec;
  std::optional<FiltrationTier> tier;
  bool has_window = false;
  int window_hi = 0;
  std::size_t tier_line = 0;
  auto finish = [&](std::size_t line) {
    if (!tier) throw InputError(line, "'end' without 'tier'");
    if (tier->shifts.empty()) throw InputError(tier_line, "tier has no shifts");
    if (has_window && window_hi != tier->hi())
      throw InputError(tier_line, "window length does not match the number of shifts");
    if (tier->base.kind == BaseModule::Kind::Quotient && tier->base.torsion_exponent < 1)
      throw InputError(tier_line, "tier has no base");
    spec.tiers.push_back(*tier);
    tier.reset();
    has_window = false;
  };
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    auto w = words(l.text);
    const std::string& key = w.front();
    auto need = [&](std::size_t count) {
      if (w.size() != count) throw InputError(l.number, "malformed '" + key + "' line");
    };
    if (key == "p") {
      need(2);
      long p = parse_long(w[1], l.number);
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw InputError(l.number, "p must be prime");
      spec.p = static_cast<std::uint64_t>(p);
      continue;
    }
    if (key == "tier") {
      need(1);
      if (tier) throw InputError(l.number, "previous tier is missing 'end'");
      tier.emplace();
      tier->base.kind = BaseModule::Kind::Quotient;
      tier->base.torsion_exponent = 0;
      tier_line = l.number;
      continue;
    }
    if (!tier) throw InputError(l.number, "'" + key + "' outside a tier");
    if (key == "end") {
      need(1);
      finish(l.number);
    } else if (key == "base") {
      if (w.size() == 3 && w[1] == "quotient") {
        tier->base.kind = BaseModule::Kind::Quotient;
        tier->base.torsion_exponent = parse_int(w[2], l.number);
        if (tier->base.torsion_exponent < 1) throw InputError(l.number, "quotient exponent must be positive");
      } else if (w.size() == 3 && w[1] == "lattice" && (w[2] == "pi-inverted" || w[2] == "pi-fixed")) {
        tier->base.kind = BaseModule::Kind::Lattice;
        tier->base.torsion_exponent = 1;  // marks the base as set
        tier->base.pi_inverted = w[2] == "pi-inverted";
      } else {
        throw InputError(l.number, "base must be 'quotient <ell>' or 'lattice pi-inverted|pi-fixed'");
      }
    } else if (key == "label") {
      tier->base.label = trim(l.text.substr(5));
    } else if (key == "window") {
      need(3);
      tier->lo = parse_int(w[1], l.number);
      window_hi = parse_int(w[2], l.number);
      has_window = true;
      if (window_hi < tier->lo) throw InputError(l.number, "window is empty");
    } else if (key == "shifts") {
      if (w.size() < 2) throw InputError(l.number, "no shifts given");
      tier->shifts.clear();
      for (std::size_t i = 1; i < w.size(); ++i) tier->shifts.push_back(parse_int(w[i], l.number));
    } else if (key == "tail-below") {
      need(2);
      tier->below = parse_tail(w[1], l.number);
    } else if (key == "tail-above") {
      need(2);
      tier->above = parse_tail(w[1], l.number);
    } else if (key == "lower") {
      need(2);
      tier->lower_bound = parse_int(w[1], l.number);
    } else if (key == "upper") {
      need(2);
      tier->upper_bound = parse_int(w[1], l.number);
    } else {
      throw InputError(l.number, "unknown key '" + key + "'");
    }
  }
  if (tier) throw InputError(tier_line, "tier is missing 'end'");
  if (spec.tiers.empty()) throw InputError(0, "no tiers given");
  for (auto& t : spec.tiers)
    if (t.base.kind == BaseModule::Kind::Lattice) t.base.torsion_exponent = 0;
  return spec;
}

std::string format_filtration(const FiltrationSpec& spec) {
  std::string s = "filtration v1\np " + std::to_string(spec.p) + "\n";
  for (const auto& t : spec.tiers) {
    s += "tier\n";
    if (t.base.kind == BaseModule::Kind::Quotient)
      s += "base quotient " + std::to_string(t.base.torsion_exponent) + "\n";
    else
      s += std::string("base lattice ") + (t.base.pi_inverted ? "pi-inverted" : "pi-fixed") + "\n";
    if (!t.base.label.empty()) s += "label " + t.base.label + "\n";
    s += "window " + std::to_string(t.lo) + " " + std::to_string(t.hi()) + "\nshifts";
    for (int v : t.shifts) s += " " + std::to_string(v);
    s += std::string("\ntail-below ") + tail_name(t.below) + "\ntail-above " + tail_name(t.above) + "\n";
    if (t.lower_bound) s += "lower " + std::to_string(*t.lower_bound) + "\n";
    if (t.upper_bound) s += "upper " + std::to_string(*t.upper_bound) + "\n";
    s += "end\n";
  }
  return s;
}

}  // namespace lcann
