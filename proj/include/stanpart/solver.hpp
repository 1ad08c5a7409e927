#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stanpart/depth.hpp"
#include "stanpart/partition.hpp"

namespace stanpart {

inline constexpr std::uint64_t kBoxCap = 1'000'000;
inline constexpr std::uint64_t kNodeCap = 10'000'000;

/// The finite slice of the multicomplex that carries the interval search:
/// all exponent vectors below the bound whose monomials avoid the ideal, in
/// graded-lex order. Downward closed inside the box.
struct CharacteristicPoset {
  std::vector<std::uint64_t> bound;
  std::vector<std::vector<std::uint64_t>> elements;

  int n() const { return static_cast<int>(bound.size()); }

  /// Index of an element, or -1.
  long find(const std::vector<std::uint64_t>& a) const;

  /// Number of coordinates pinned to the bound: the Stanley-set size the
  /// element would get as an interval top.
  int saturation(const std::vector<std::uint64_t>& a) const;
};

/// Builds the poset with the componentwise generator-exponent bound (or a
/// caller-supplied bump above it). Throws cap_exceeded when the box is too
/// large.
CharacteristicPoset characteristic_poset(const MonomialIdeal& I, std::uint64_t bump = 0,
                                         std::uint64_t box_cap = kBoxCap);

struct PosetInterval {
  std::vector<std::uint64_t> lo;
  std::vector<std::uint64_t> hi;
};

struct SolverOptions {
  std::uint64_t node_cap = kNodeCap;
  int max_bound_bumps = 2;
  std::uint64_t box_cap = kBoxCap;
};

struct SolverResult {
  int sdepth = 0;
  /// False when some level above sdepth hit the node cap, so sdepth is only
  /// a proven lower bound ("unknown above").
  bool exact = true;
  std::vector<PosetInterval> poset_partition;
  Partition lifted;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> bound_used;
};

/// Expand a disjoint cover of the poset by intervals into a partition of
/// the multicomplex: coordinates at the bound extend to infinity, the rest
/// enumerate their finite range.
Partition lift(const std::vector<PosetInterval>& cover, const CharacteristicPoset& poset,
               const MonomialIdeal& I);

/// Exact Stanley depth of the quotient with a verified witness partition.
/// Scans the target level downward; each witness is lifted and re-certified
/// by the Hilbert-series verifier, retrying with a bumped bound if that
/// ever failed.
SolverResult solve_stanley_depth(const MonomialIdeal& I, const SolverOptions& opts = {});

struct NicePartitionResult {
  std::optional<Partition> partition;
  DepthReport depth;
  SolverResult solver;
  std::string finding;
};

/// Witness that the quotient admits a partition whose tops all have at
/// least depth many infinite coordinates; absent (with a finding) when the
/// solver's best is below the depth.
NicePartitionResult nice_partition(const MonomialIdeal& I, const FieldSpec& field = {},
                                   const SolverOptions& opts = {});

}  // namespace stanpart
