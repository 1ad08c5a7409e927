#pragma once

#include <cstdint>
#include <vector>

#include "stanpart/ideal.hpp"

namespace stanpart {

struct CorpusOptions {
  std::uint64_t seed = 1;
  int count = 200;
  int max_n = 4;
  std::uint64_t max_exp = 3;
  int max_gens = 6;
};

/// Deterministic stream of random proper nonzero monomial ideals. The same
/// options always produce the same list, on every platform.
std::vector<MonomialIdeal> generate_corpus(const CorpusOptions& opts);

}  // namespace stanpart
