#include "stanpart/parse.hpp"

#include <cctype>
#include <map>

#include "stanpart/errors.hpp"

namespace stanpart {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  std::vector<std::string> vars;
  std::map<std::string, int> var_index;
  bool fixed_ring;

  explicit Parser(const std::string& t, const std::optional<RingContext>& ring)
      : text(t), fixed_ring(ring.has_value()) {
    if (ring) {
      vars = ring->var_names;
      for (int i = 0; i < ring->n(); ++i) var_index[vars[static_cast<std::size_t>(i)]] = i;
    }
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  int parse_var() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected a variable name", pos);
    ++pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string name = text.substr(start, pos - start);
    const auto it = var_index.find(name);
    if (it != var_index.end()) return it->second;
    if (fixed_ring) throw parse_error("unknown variable '" + name + "'", start);
    const int idx = static_cast<int>(vars.size());
    vars.push_back(name);
    var_index[name] = idx;
    return idx;
  }

  std::uint64_t parse_nat() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected an exponent", pos);
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > kExponentCap) throw parse_error("exponent exceeds cap", start);
      ++pos;
    }
    return v;
  }

  // term := var ("^" nat)?; accumulates into the exponent map.
  void parse_term(std::map<int, std::uint64_t>& exps) {
    const int var = parse_var();
    std::uint64_t e = 1;
    if (peek('^')) {
      ++pos;
      e = parse_nat();
    }
    exps[var] += e;
    if (exps[var] > kExponentCap) throw parse_error("exponent exceeds cap", pos);
  }

  std::map<int, std::uint64_t> parse_mono() {
    std::map<int, std::uint64_t> exps;
    parse_term(exps);
    while (peek('*')) {
      ++pos;
      parse_term(exps);
    }
    return exps;
  }

  std::vector<std::map<int, std::uint64_t>> parse_ideal() {
    std::vector<std::map<int, std::uint64_t>> monos;
    monos.push_back(parse_mono());
    while (peek(',')) {
      ++pos;
      monos.push_back(parse_mono());
    }
    skip_ws();
    if (pos != text.size()) throw parse_error("unexpected trailing input", pos);
    return monos;
  }
};

}  // namespace

MonomialIdeal parse_ideal_expr(const std::string& text, const std::optional<RingContext>& ring) {
  Parser parser(text, ring);
  parser.skip_ws();
  if (parser.pos == text.size()) throw parse_error("empty generator list", 0);
  const auto monos = parser.parse_ideal();

  const RingContext ctx = ring ? *ring : RingContext(parser.vars);
  std::vector<Monomial> gens;
  gens.reserve(monos.size());
  for (const auto& m : monos) {
    std::vector<std::uint64_t> e(static_cast<std::size_t>(ctx.n()), 0);
    for (const auto& [i, v] : m) e[static_cast<std::size_t>(i)] = v;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(ctx, gens);
}

}  // namespace stanpart
