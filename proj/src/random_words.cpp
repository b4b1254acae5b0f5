#include "gamma02/random_words.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/process.hpp"

namespace gamma02 {

RandomWordGenerator::RandomWordGenerator(std::vector<std::string> pool, std::uint64_t seed,
                                         unsigned max_len)
    : pool_(std::move(pool)), rng_(seed), max_len_(max_len) {
  if (pool_.empty()) throw PreconditionError("random word pool is empty");
}

GeneratorWord RandomWordGenerator::next() {
  std::uniform_int_distribution<unsigned> length(0, max_len_);
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  const unsigned len = length(rng_);
  GeneratorWord w;
  w.reserve(len);
  for (unsigned i = 0; i < len; ++i) {
    const int f = family(rng_);
    const bool inv = sign(rng_) == 1;
    if (f == 0) {
      w.push_back(Token::T(inv ? -1 : 1));
    } else if (f == 1) {
      w.push_back(Token::W(inv ? -1 : 1));
    } else {
      w.push_back(Token::cert(pool_[pick(rng_)], inv));
    }
  }
  return w;
}

std::vector<std::string> certified_L_pool(KnowledgeBase& kb, unsigned long max_level) {
  const auto certified = enumerate_certified_L(kb, max_level, Execution::Serial);
  std::vector<std::string> keys;
  keys.reserve(certified.size());
  for (const auto& [d, key] : certified) keys.push_back(key);
  return keys;
}

}  // namespace gamma02
