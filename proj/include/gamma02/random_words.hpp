#pragma once

#include "gamma02/knowledge_base.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gamma02 {

// Seeded random words over {T^+-1, W^+-1, L^+-1}. Each letter picks one of
// the three families with equal probability, then a sign, then (for L) a
// uniform element of `pool`. Lengths are uniform in [0, max_len].
class RandomWordGenerator {
 public:
  RandomWordGenerator(std::vector<std::string> pool, std::uint64_t seed, unsigned max_len = 12);

  GeneratorWord next();

 private:
  std::vector<std::string> pool_;
  std::mt19937_64 rng_;
  unsigned max_len_;
};

// Keys of the certified L02 elements with level <= max_level, in descriptor
// order. Certifies them first if needed.
std::vector<std::string> certified_L_pool(KnowledgeBase& kb, unsigned long max_level);

}  // namespace gamma02
