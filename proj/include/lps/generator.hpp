#pragma once

/**
 * @file generator.hpp
 * @brief Seeded random strings over the first A lowercase letters.
 *
 * The stream is SplitMix64, so a (length, alphabet, seed) triple names the same
 * text on every platform.
 */

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace lps {

inline constexpr unsigned kMaxAlphabet = 26;

struct RngState {
  std::uint64_t state = 0;
};

/// One SplitMix64 step.
constexpr std::pair<RngState, std::uint64_t> rng_next(RngState rng) noexcept {
  rng.state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = rng.state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {rng, z ^ (z >> 31)};
}

/// Stateful wrapper around rng_next.
class SplitMix64 {
 public:
  constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_{seed} {}

  constexpr std::uint64_t operator()() noexcept {
    auto [next, value] = rng_next(state_);
    state_ = next;
    return value;
  }

  /// Uniform draw from [0, bound) by plain modulo. bound must be nonzero.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept { return (*this)() % bound; }

  constexpr RngState state() const noexcept { return state_; }

 private:
  RngState state_;
};

struct GenSpec {
  std::size_t length = 0;
  unsigned alphabet_size = 2;
  std::uint64_t seed = 0;
};

/// Throws InvalidAlphabet unless 1 <= alphabet_size <= 26.
void validate(const GenSpec& spec);

std::string gen_text(const GenSpec& spec);

/// Writes the same text as gen_text to @p out in fixed-size chunks.
void gen_text_to(const GenSpec& spec, std::ostream& out);

}  // namespace lps
