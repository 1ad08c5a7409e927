#include "stanpart/corpus.hpp"

#include <random>

namespace stanpart {

std::vector<MonomialIdeal> generate_corpus(const CorpusOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  // Plain modulo keeps the stream identical across standard libraries;
  // uniformity bias is irrelevant here.
  auto pick = [&rng](std::uint64_t bound) { return rng() % bound; };

  std::vector<MonomialIdeal> out;
  out.reserve(static_cast<std::size_t>(opts.count));
  while (out.size() < static_cast<std::size_t>(opts.count)) {
    const int n = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(opts.max_n)));
    const int gens_wanted = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(opts.max_gens)));
    std::vector<Monomial> gens;
    for (int g = 0; g < gens_wanted; ++g) {
      std::vector<std::uint64_t> e(static_cast<std::size_t>(n), 0);
      std::uint64_t total = 0;
      for (int i = 0; i < n; ++i) {
        e[static_cast<std::size_t>(i)] = pick(opts.max_exp + 1);
        total += e[static_cast<std::size_t>(i)];
      }
      if (total == 0) continue;  // skip the unit monomial
      gens.emplace_back(std::move(e));
    }
    if (gens.empty()) continue;
    out.push_back(MonomialIdeal::make(RingContext::standard(n), gens));
  }
  return out;
}

}  // namespace stanpart
