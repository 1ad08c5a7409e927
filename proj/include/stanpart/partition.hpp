#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stanpart/hilbert.hpp"
#include "stanpart/ideal.hpp"
#include "stanpart/interval.hpp"

namespace stanpart {

inline constexpr std::uint64_t kSplitCap = 1'000'000;

/// A candidate presentation of the multicomplex of an ideal as a disjoint
/// union of intervals. Nothing is assumed: containment, disjointness and
/// coverage are certified by verify().
struct Partition {
  MonomialIdeal ideal;
  std::vector<Interval> intervals;
};

/// Outcome of certifying a partition. `covers` is decided by exact Hilbert
/// series equality, which is sound and complete once containment and
/// disjointness hold; `nice` means every top has at least `depth_used`
/// infinite coordinates.
struct VerificationReport {
  bool contained = false;
  bool disjoint = false;
  bool covers = false;
  bool nice = false;
  std::uint64_t min_inf = 0;
  std::uint64_t depth_used = 0;
  std::vector<std::string> failures;

  bool all_good() const { return contained && disjoint && covers; }
};

/// The three equivalent conditions on a verified partition of a
/// Cohen-Macaulay quotient, computed independently of one another.
struct Classification {
  bool nice = false;
  bool tops_subset_of_facets = false;
  bool tops_contain_all_maximal = false;
};

/// Whether the interval is a Stanley interval: finite lower endpoint, and
/// every finite coordinate of the top pinned to the bottom.
bool is_stanley_interval(const Interval& iv);

/// Write an interval with finite lower endpoint as the disjoint family of
/// Stanley intervals obtained by fixing each finite coordinate of the top.
std::vector<Interval> split_to_stanley(const Interval& iv, std::uint64_t cap = kSplitCap);

/// Box disjointness: some coordinate's ranges miss each other. Exact in
/// both directions for intervals.
bool intervals_disjoint(const Interval& a, const Interval& b);

/// Certify containment, disjointness, coverage (by series equality) and
/// niceness against the supplied depth. Failures are diagnostics, not
/// exceptions.
VerificationReport verify(const Partition& p, std::uint64_t depth);

/// Refine a verified partition whose tops are facets so that the tops
/// become exactly the facet list: each interval is replaced by one interval
/// per facet it contains.
Partition refine_to_facets(const Partition& p, const std::vector<Face>& facet_list);

/// Classification flags for a verified partition; depth and the face lists
/// are passed in so the check stays decoupled from the engines computing
/// them.
Classification classify(const Partition& p, std::uint64_t depth,
                        const std::vector<Face>& facet_list,
                        const std::vector<Face>& maximal);

/// Stanley spaces of a partition of Stanley intervals: (monomial, variable
/// index set) pairs.
std::vector<std::pair<Monomial, std::vector<int>>> partition_to_decomposition(
    const Partition& p);

}  // namespace stanpart
