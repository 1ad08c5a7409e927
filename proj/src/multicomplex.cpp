// The dictionary between monomial ideals and multicomplexes: irreducible
// components, their maximal faces, membership, and facet enumeration over
// the finite candidate box.

#include "stanpart/multicomplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stanpart/errors.hpp"

namespace stanpart {

MonomialIdeal IrreducibleComponent::to_ideal(const RingContext& ring) const {
  std::vector<Monomial> gens;
  for (const auto& [i, e] : pure_powers) {
    std::vector<std::uint64_t> exp(static_cast<std::size_t>(ring.n()), 0);
    exp[static_cast<std::size_t>(i)] = e;
    gens.emplace_back(std::move(exp));
  }
  return MonomialIdeal::make(ring, gens);
}

Face IrreducibleComponent::max_face(int n) const {
  std::vector<ExtNat> c(static_cast<std::size_t>(n), ExtNat::infinity());
  for (const auto& [i, e] : pure_powers) c[static_cast<std::size_t>(i)] = ExtNat(e - 1);
  return Face(std::move(c));
}

namespace {

// Splits until every generator is a pure power, collecting the leaves.
// Splitting off the lowest-variable part of a mixed generator keeps the
// recursion deterministic; the two parts are coprime, so the ideal is the
// intersection of the two split ideals.
void decompose_rec(const MonomialIdeal& I, std::set<std::map<int, std::uint64_t>>& out) {
  for (std::size_t gi = 0; gi < I.gens.size(); ++gi) {
    const Monomial& g = I.gens[gi];
    int support = 0;
    int first_var = -1;
    for (int i = 0; i < g.n(); ++i)
      if (g[i] > 0) {
        ++support;
        if (first_var < 0) first_var = i;
      }
    if (support < 2) continue;

    std::vector<std::uint64_t> head(static_cast<std::size_t>(g.n()), 0);
    head[static_cast<std::size_t>(first_var)] = g[first_var];
    std::vector<std::uint64_t> tail(g.exponents);
    tail[static_cast<std::size_t>(first_var)] = 0;

    std::vector<Monomial> rest;
    for (std::size_t j = 0; j < I.gens.size(); ++j)
      if (j != gi) rest.push_back(I.gens[j]);

    auto left = rest;
    left.emplace_back(std::move(head));
    auto right = rest;
    right.emplace_back(std::move(tail));
    decompose_rec(MonomialIdeal::make(I.ring, left), out);
    decompose_rec(MonomialIdeal::make(I.ring, right), out);
    return;
  }

  // All pure powers: one irreducible component.
  std::map<int, std::uint64_t> comp;
  for (const auto& g : I.gens)
    for (int i = 0; i < g.n(); ++i)
      if (g[i] > 0) comp[i] = g[i];
  out.insert(std::move(comp));
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("zero ideal has no irreducible decomposition");

  std::set<std::map<int, std::uint64_t>> leaves;
  decompose_rec(I, leaves);

  const int n = I.ring.n();
  std::vector<IrreducibleComponent> comps;
  comps.reserve(leaves.size());
  for (auto& m : leaves) comps.push_back(IrreducibleComponent{m});

  // Canonical order before irredundancy filtering, keyed by maximal face.
  std::sort(comps.begin(), comps.end(), [n](const auto& a, const auto& b) {
    return face_lex_less(a.max_face(n), b.max_face(n));
  });

  // A component is redundant iff the others' intersection sits inside it,
  // which for irreducible components means its maximal face lies below
  // another component's maximal face.
  std::vector<IrreducibleComponent> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Face mi = comps[i].max_face(n);
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i == j) continue;
      const Face mj = comps[j].max_face(n);
      if (face_leq(mi, mj) && mi != mj) {
        redundant = true;
        break;
      }
      if (mi == mj && j < i) {  // exact duplicates keep the first
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(comps[i]);
  }

  // Sanity: each generator lies in every component.
  for (const auto& g : I.gens)
    for (const auto& c : kept) {
      bool in = false;
      for (const auto& [v, e] : c.pure_powers)
        if (g[v] >= e) {
          in = true;
          break;
        }
      if (!in) throw std::logic_error("decomposition lost a generator");
    }
  return kept;
}

std::vector<Face> maximal_faces(const MonomialIdeal& I) {
  const int n = I.ring.n();
  if (I.is_zero())
    return {Face(std::vector<ExtNat>(static_cast<std::size_t>(n), ExtNat::infinity()))};
  std::vector<Face> out;
  for (const auto& c : irreducible_decomposition(I)) out.push_back(c.max_face(n));
  std::sort(out.begin(), out.end(), face_lex_less);
  return out;
}

bool member(const std::vector<Face>& maximal, const Face& a) {
  for (const auto& m : maximal)
    if (face_leq(a, m)) return true;
  return false;
}

std::vector<Face> facets(const MonomialIdeal& I, std::uint64_t candidate_cap) {
  const int n = I.ring.n();
  const auto maximal = maximal_faces(I);
  const auto r = I.max_exponents();

  // Candidate coordinates: inf, or a finite value below the generator
  // exponent bound. Variables dividing no generator admit only inf.
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t per_coord = r[static_cast<std::size_t>(i)] + 1;
    if (total > candidate_cap / per_coord)
      throw cap_exceeded("facet candidate space exceeds cap");
    total *= per_coord;
  }

  std::vector<Face> out;
  std::vector<std::uint64_t> odo(static_cast<std::size_t>(n), 0);  // r_i encodes inf
  for (std::uint64_t it = 0; it < total; ++it) {
    Face b;
    b.coords.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const std::uint64_t v = odo[static_cast<std::size_t>(i)];
      b.coords.push_back(v == r[static_cast<std::size_t>(i)] ? ExtNat::infinity() : ExtNat(v));
    }
    bool is_facet = false;
    const auto inf_b = infinite_part(b);
    for (const auto& m : maximal) {
      if (!face_leq(b, m)) continue;
      if (infinite_part(m) == inf_b) {
        is_facet = true;
      } else {
        is_facet = false;
        break;
      }
    }
    if (is_facet) out.push_back(std::move(b));

    for (int i = n - 1; i >= 0; --i) {
      auto& d = odo[static_cast<std::size_t>(i)];
      if (++d <= r[static_cast<std::size_t>(i)]) break;
      d = 0;
    }
  }
  std::sort(out.begin(), out.end(), face_lex_less);
  return out;
}

int krull_dim(const MonomialIdeal& I) {
  int best = 0;
  for (const auto& m : maximal_faces(I))
    best = std::max(best, static_cast<int>(infinite_part(m).size()));
  return best;
}

std::vector<std::vector<int>> assoc_primes(const MonomialIdeal& I) {
  std::set<std::vector<int>> primes;
  for (const auto& c : irreducible_decomposition(I)) {
    std::vector<int> vars;
    for (const auto& [i, e] : c.pure_powers) vars.push_back(i);
    primes.insert(std::move(vars));
  }
  std::vector<std::vector<int>> out(primes.begin(), primes.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

MulticomplexView MulticomplexView::build(const MonomialIdeal& I, std::uint64_t candidate_cap) {
  MulticomplexView v;
  v.ideal = I;
  v.maximal = maximal_faces(I);
  v.facet_list = facets(I, candidate_cap);
  return v;
}

MonomialIdeal ideal_of_union(const std::vector<MulticomplexView>& views) {
  if (views.empty()) throw std::invalid_argument("ideal_of_union: empty list");
  MonomialIdeal acc = views.front().ideal;
  for (std::size_t i = 1; i < views.size(); ++i) {
    if (views[i].ideal.ring != acc.ring) throw std::invalid_argument("ring mismatch");
    acc = intersect(acc, views[i].ideal);
  }
  return acc;
}

}  // namespace stanpart
