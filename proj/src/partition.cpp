#include "stanpart/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "stanpart/errors.hpp"
#include "stanpart/multicomplex.hpp"

namespace stanpart {

bool is_stanley_interval(const Interval& iv) {
  if (!iv.lo.is_finite()) return false;
  for (int i = 0; i < iv.hi.n(); ++i)
    if (iv.hi[i].is_finite() && iv.hi[i] != iv.lo[i]) return false;
  return true;
}

std::vector<Interval> split_to_stanley(const Interval& iv, std::uint64_t cap) {
  if (!iv.lo.is_finite())
    throw std::invalid_argument("split requires a finite lower endpoint");
  const int n = iv.lo.n();
  std::vector<int> finite_coords;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (iv.hi[i].is_infinite()) continue;
    finite_coords.push_back(i);
    const std::uint64_t span = iv.hi[i].value() - iv.lo[i].value() + 1;
    if (total > cap / span) throw cap_exceeded("stanley split exceeds cap");
    total *= span;
  }

  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::uint64_t> choice;
  for (int i : finite_coords) choice.push_back(iv.lo[i].value());
  for (std::uint64_t it = 0; it < total; ++it) {
    Face lo = iv.lo;
    Face hi;
    hi.coords.assign(static_cast<std::size_t>(n), ExtNat::infinity());
    for (std::size_t k = 0; k < finite_coords.size(); ++k) {
      lo[finite_coords[k]] = ExtNat(choice[k]);
      hi[finite_coords[k]] = ExtNat(choice[k]);
    }
    out.emplace_back(std::move(lo), std::move(hi));
    for (std::size_t k = finite_coords.size(); k-- > 0;) {
      if (++choice[k] <= iv.hi[finite_coords[k]].value()) break;
      choice[k] = iv.lo[finite_coords[k]].value();
    }
  }
  return out;
}

bool intervals_disjoint(const Interval& a, const Interval& b) {
  if (a.lo.n() != b.lo.n()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < a.lo.n(); ++i)
    if (max(a.lo[i], b.lo[i]) > min(a.hi[i], b.hi[i])) return true;
  return false;
}

VerificationReport verify(const Partition& p, std::uint64_t depth) {
  VerificationReport rep;
  rep.depth_used = depth;

  const auto maximal = maximal_faces(p.ideal);
  rep.contained = true;
  for (std::size_t i = 0; i < p.intervals.size(); ++i) {
    const Interval& iv = p.intervals[i];
    if (!iv.lo.is_finite()) {
      rep.contained = false;
      rep.failures.push_back("interval " + std::to_string(i) +
                             " has an infinite lower endpoint: " + iv.str());
      break;
    }
    if (!member(maximal, iv.hi)) {
      rep.contained = false;
      rep.failures.push_back("interval " + std::to_string(i) +
                             " leaves the multicomplex: " + iv.str());
      break;
    }
  }

  rep.disjoint = true;
  for (std::size_t i = 0; i < p.intervals.size() && rep.disjoint; ++i)
    for (std::size_t j = i + 1; j < p.intervals.size(); ++j)
      if (!intervals_disjoint(p.intervals[i], p.intervals[j])) {
        rep.disjoint = false;
        rep.failures.push_back("intervals " + std::to_string(i) + " and " + std::to_string(j) +
                               " overlap");
        break;
      }

  if (rep.contained && rep.disjoint) {
    RationalSeries sum;
    for (const auto& iv : p.intervals) sum = sum + interval_series(iv);
    rep.covers = series_equal(sum, hilbert_series(p.ideal));
    if (!rep.covers) rep.failures.push_back("interval series sum differs from the quotient series");
  }

  rep.min_inf = static_cast<std::uint64_t>(p.ideal.ring.n());
  for (const auto& iv : p.intervals)
    rep.min_inf = std::min(rep.min_inf, static_cast<std::uint64_t>(infinite_part(iv.hi).size()));
  rep.nice = rep.min_inf >= depth;
  if (!rep.nice)
    rep.failures.push_back("a top has fewer than " + std::to_string(depth) +
                           " infinite coordinates");
  return rep;
}

Partition refine_to_facets(const Partition& p, const std::vector<Face>& facet_list) {
  Partition out;
  out.ideal = p.ideal;
  for (const auto& iv : p.intervals) {
    if (std::find(facet_list.begin(), facet_list.end(), iv.hi) == facet_list.end())
      throw std::invalid_argument("refinement requires every top to be a facet, got " +
                                  iv.hi.str());
    for (const auto& e : facet_list) {
      if (!face_leq(iv.lo, e) || !face_leq(e, iv.hi)) continue;
      Face lo = iv.lo;
      for (int i = 0; i < e.n(); ++i)
        if (iv.hi[i].is_finite()) lo[i] = e[i];
      out.intervals.emplace_back(std::move(lo), e);
    }
  }
  return out;
}

Classification classify(const Partition& p, std::uint64_t depth,
                        const std::vector<Face>& facet_list, const std::vector<Face>& maximal) {
  if (!verify(p, depth).all_good())
    throw std::invalid_argument("classify requires a verified partition");
  Classification c;
  c.nice = true;
  for (const auto& iv : p.intervals)
    if (infinite_part(iv.hi).size() < depth) c.nice = false;

  c.tops_subset_of_facets = true;
  for (const auto& iv : p.intervals)
    if (std::find(facet_list.begin(), facet_list.end(), iv.hi) == facet_list.end())
      c.tops_subset_of_facets = false;

  bool contains_maximal = true;
  for (const auto& m : maximal) {
    bool found = false;
    for (const auto& iv : p.intervals)
      if (iv.hi == m) {
        found = true;
        break;
      }
    if (!found) {
      contains_maximal = false;
      break;
    }
  }
  c.tops_contain_all_maximal = contains_maximal && c.tops_subset_of_facets;
  return c;
}

std::vector<std::pair<Monomial, std::vector<int>>> partition_to_decomposition(
    const Partition& p) {
  std::vector<std::pair<Monomial, std::vector<int>>> out;
  for (const auto& iv : p.intervals) {
    if (!is_stanley_interval(iv))
      throw std::invalid_argument("not a Stanley interval: " + iv.str());
    std::vector<std::uint64_t> exps;
    exps.reserve(static_cast<std::size_t>(iv.lo.n()));
    for (int i = 0; i < iv.lo.n(); ++i) exps.push_back(iv.lo[i].value());
    out.emplace_back(Monomial(std::move(exps)), infinite_part(iv.hi));
  }
  return out;
}

}  // namespace stanpart
