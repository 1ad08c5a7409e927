#include <algorithm>
#include <set>
#include <stdexcept>

#include "stanpart/ideal.hpp"
#include "stanpart/interval.hpp"
#include "stanpart/ring.hpp"

namespace stanpart {

RingContext::RingContext(std::vector<std::string> names) : var_names(std::move(names)) {
  if (var_names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : var_names) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name: " + v);
  }
}

RingContext RingContext::standard(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return RingContext(std::move(names));
}

bool Face::is_finite() const {
  for (const auto& c : coords)
    if (c.is_infinite()) return false;
  return true;
}

std::string Face::str() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ", ";
    s += coords[static_cast<std::size_t>(i)].str();
  }
  return s + ")";
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::is_one() const { return degree() == 0; }

bool Monomial::divides(const Monomial& other) const {
  if (n() != other.n()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < n(); ++i)
    if ((*this)[i] > other[i]) return false;
  return true;
}

Face Monomial::to_face() const {
  std::vector<ExtNat> c;
  c.reserve(exponents.size());
  for (auto e : exponents) c.emplace_back(e);
  return Face(std::move(c));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::uint64_t> e(a.exponents);
  for (int i = 0; i < b.n(); ++i)
    e[static_cast<std::size_t>(i)] = std::max(e[static_cast<std::size_t>(i)], b[i]);
  return Monomial(std::move(e));
}

bool face_leq(const Face& a, const Face& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < a.n(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

std::vector<int> infinite_part(const Face& a) {
  std::vector<int> idx;
  for (int i = 0; i < a.n(); ++i)
    if (a[i].is_infinite()) idx.push_back(i);
  return idx;
}

bool face_lex_less(const Face& a, const Face& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < a.n(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

bool monomial_canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Within a degree, earlier-variable-heavier first: x1^2 before x1*x2.
  return a.exponents > b.exponents;
}

std::vector<Monomial> minimalize(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("minimalize: empty generator list");
  const int n = gens.front().n();
  for (const auto& g : gens) {
    if (g.n() != n) throw std::invalid_argument("dimension mismatch");
    if (g.is_one()) throw std::invalid_argument("unit ideal: generator 1");
  }
  std::vector<Monomial> sorted(gens);
  std::sort(sorted.begin(), sorted.end(), monomial_canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> out;
  for (const auto& g : sorted) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal MonomialIdeal::make(RingContext ring, const std::vector<Monomial>& gens) {
  MonomialIdeal I;
  I.ring = std::move(ring);
  if (!gens.empty()) {
    for (const auto& g : gens)
      if (g.n() != I.ring.n())
        throw std::invalid_argument("generator arity does not match ring");
    I.gens = minimalize(gens);
  }
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

std::vector<std::uint64_t> MonomialIdeal::max_exponents() const {
  std::vector<std::uint64_t> r(static_cast<std::size_t>(ring.n()), 0);
  for (const auto& g : gens)
    for (int i = 0; i < g.n(); ++i)
      r[static_cast<std::size_t>(i)] = std::max(r[static_cast<std::size_t>(i)], g[i]);
  return r;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring != b.ring) throw std::invalid_argument("ring mismatch");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::make(a.ring, {});
  std::vector<Monomial> prods;
  prods.reserve(a.gens.size() * b.gens.size());
  for (const auto& g : a.gens)
    for (const auto& h : b.gens) prods.push_back(lcm(g, h));
  return MonomialIdeal::make(a.ring, prods);
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring != b.ring) throw std::invalid_argument("ring mismatch");
  std::vector<Monomial> all(a.gens);
  all.insert(all.end(), b.gens.begin(), b.gens.end());
  if (all.empty()) return MonomialIdeal::make(a.ring, {});
  return MonomialIdeal::make(a.ring, all);
}

std::string monomial_str(const Monomial& m, const RingContext& ring) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.n(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_names[static_cast<std::size_t>(i)];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string ideal_str(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < I.gens.size(); ++i) {
    if (i) s += ", ";
    s += monomial_str(I.gens[i], I.ring);
  }
  return s + ")";
}

Interval::Interval(Face lo_, Face hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!face_leq(lo, hi))
    throw std::invalid_argument("interval endpoints not ordered: " + lo.str() + " !<= " + hi.str());
}

std::string Interval::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

std::pair<ExtNat, ExtNat> coordinate_range(const Interval& iv, int i) {
  if (i < 0 || i >= iv.lo.n()) throw std::invalid_argument("coordinate index out of range");
  return {iv.lo[i], iv.hi[i]};
}

}  // namespace stanpart
