#include "lps/generator.hpp"

#include <algorithm>
#include <array>

#include "lps/error.hpp"

namespace lps {

void validate(const GenSpec& spec) {
  if (spec.alphabet_size < 1 || spec.alphabet_size > kMaxAlphabet) {
    throw InvalidAlphabet("alphabet size must be in [1, 26], got " +
                          std::to_string(spec.alphabet_size));
  }
}

std::string gen_text(const GenSpec& spec) {
  validate(spec);
  SplitMix64 rng{spec.seed};
  std::string text(spec.length, 'a');
  for (char& c : text) {
    c = static_cast<char>('a' + rng.below(spec.alphabet_size));
  }
  return text;
}

void gen_text_to(const GenSpec& spec, std::ostream& out) {
  validate(spec);
  SplitMix64 rng{spec.seed};
  std::array<char, 1 << 16> chunk{};
  std::size_t left = spec.length;
  while (left > 0) {
    const std::size_t n = std::min(left, chunk.size());
    for (std::size_t i = 0; i < n; ++i) {
      chunk[i] = static_cast<char>('a' + rng.below(spec.alphabet_size));
    }
    out.write(chunk.data(), static_cast<std::streamsize>(n));
    left -= n;
  }
}

}  // namespace lps
