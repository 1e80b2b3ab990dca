#pragma once

/**
 * @file reference.hpp
 * @brief Ground-truth solvers: quadratic center expansion and Manacher over a
 * literally augmented string.
 *
 * Both produce tables with the same meaning as lps::compute_radii, so the three
 * routes can be compared entrywise.
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "lps/core.hpp"
#include "lps/error.hpp"

namespace lps::reference {

inline constexpr std::size_t kDefaultOracleCap = 100'000;

/// Symbols usable with literal augmentation: a finite ordered alphabet that can
/// be scanned for an unused value.
template <class T>
concept AugmentableSymbol = std::integral<T> && !std::same_as<T, bool>;

/// Caps the bytes the augmented buffer may take. Unset means only the real
/// allocator can refuse.
struct AugmentLimits {
  std::optional<std::size_t> max_buffer_bytes;
};

/// Literal augmented string: dummy, s0, dummy, s1, ..., dummy.
template <AugmentableSymbol Symbol>
struct AugmentedText {
  std::vector<Symbol> symbols;
  Symbol dummy{};
};

/// Expands every center symmetrically until a mismatch. O(N^2).
template <std::equality_comparable Symbol>
RadiiTable naive_radii(Text<Symbol> text, std::size_t oracle_cap = kDefaultOracleCap,
                       CompareStats* stats = nullptr) {
  const std::size_t n = text.size();
  if (n > oracle_cap) {
    throw OracleCapExceeded("naive solver capped at " + std::to_string(oracle_cap) +
                            " symbols, got " + std::to_string(n));
  }
  RadiiTable radii(augmented_size(n), 0);
  for (std::size_t c = 0; c < radii.size(); ++c) {
    // Odd center 2k+1 sits on symbol k; even center 2k sits before symbol k.
    std::size_t left = c / 2;
    std::size_t right = (c % 2 == 1) ? left + 1 : left;
    while (left > 0 && right < n) {
      if (stats != nullptr) {
        ++stats->comparisons;
      }
      if (!(text[left - 1] == text[right])) {
        break;
      }
      --left;
      ++right;
    }
    radii[c] = right - left;
  }
  return radii;
}

template <std::equality_comparable Symbol>
LpsResult naive_lps(Text<Symbol> text, std::size_t oracle_cap = kDefaultOracleCap) {
  return result_from_radii(naive_radii(text, oracle_cap));
}

/**
 * Picks a symbol absent from @p text.
 *
 * Candidates are tried in increasing order starting from the minimum value of
 * the symbol type, so the result is the smallest unused value. Only values up
 * to min + N need tracking: N symbols cannot cover N+1 candidates.
 */
template <AugmentableSymbol Symbol>
Symbol choose_dummy(Text<Symbol> text) {
  using Wide = std::make_unsigned_t<Symbol>;
  constexpr Symbol lowest = std::numeric_limits<Symbol>::min();
  constexpr auto alphabet_span =
      static_cast<std::size_t>(static_cast<Wide>(std::numeric_limits<Symbol>::max()) -
                               static_cast<Wide>(lowest));
  const std::size_t tracked = std::min(text.size(), alphabet_span) + 1;
  std::vector<bool> seen(tracked, false);
  for (const Symbol s : text) {
    const auto offset = static_cast<std::size_t>(static_cast<Wide>(s) - static_cast<Wide>(lowest));
    if (offset < tracked) {
      seen[offset] = true;
    }
  }
  for (std::size_t offset = 0; offset < tracked; ++offset) {
    if (!seen[offset]) {
      return static_cast<Symbol>(static_cast<Wide>(lowest) + static_cast<Wide>(offset));
    }
  }
  throw DummyUnavailable("every symbol of the alphabet occurs in the text");
}

template <AugmentableSymbol Symbol>
AugmentedText<Symbol> augment(Text<Symbol> text, Symbol dummy, const AugmentLimits& limits = {}) {
  const std::size_t size = augmented_size(text.size());
  if (limits.max_buffer_bytes && size > *limits.max_buffer_bytes / sizeof(Symbol)) {
    throw AugmentOutOfMemory("augmented buffer of " + std::to_string(size * sizeof(Symbol)) +
                             " bytes exceeds cap of " + std::to_string(*limits.max_buffer_bytes));
  }
  AugmentedText<Symbol> out;
  out.dummy = dummy;
  try {
    out.symbols.assign(size, dummy);
  } catch (const std::bad_alloc&) {
    throw AugmentOutOfMemory("could not allocate augmented buffer of " +
                             std::to_string(size * sizeof(Symbol)) + " bytes");
  }
  for (std::size_t k = 0; k < text.size(); ++k) {
    out.symbols[2 * k + 1] = text[k];
  }
  return out;
}

/**
 * Manacher's scan over the materialized augmented string.
 *
 * Every position is compared uniformly, dummies included, and each comparison
 * is counted. The half-width of an augmented palindrome equals the length of
 * its original counterpart, so the table needs no conversion.
 */
template <AugmentableSymbol Symbol>
RadiiResult augmented_radii(Text<Symbol> text, const AugmentLimits& limits = {}) {
  const AugmentedText<Symbol> aug = augment(text, choose_dummy(text), limits);
  const std::vector<Symbol>& s = aug.symbols;
  const std::size_t size = s.size();

  RadiiResult result{RadiiTable(size, 0), {}};
  RadiiTable& radii = result.radii;
  std::size_t center = 0;
  std::size_t right = 0;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = 0;
    if (i < right) {
      r = std::min(radii[2 * center - i], right - i);
    }
    while (i >= r + 1 && i + r + 1 < size) {
      ++result.stats.comparisons;
      if (s[i - r - 1] != s[i + r + 1]) {
        break;
      }
      ++r;
    }
    radii[i] = r;
    if (i + r > right) {
      center = i;
      right = i + r;
    }
  }
  return result;
}

template <AugmentableSymbol Symbol>
LpsResult augmented_lps(Text<Symbol> text, const AugmentLimits& limits = {}) {
  return result_from_radii(augmented_radii(text, limits).radii);
}

// Convenience overloads for narrow and UTF-32 strings.

inline RadiiTable naive_radii(std::string_view text, std::size_t cap = kDefaultOracleCap) {
  return naive_radii(Text<char>(text.data(), text.size()), cap);
}
inline RadiiTable naive_radii(std::u32string_view text, std::size_t cap = kDefaultOracleCap) {
  return naive_radii(Text<char32_t>(text.data(), text.size()), cap);
}
inline LpsResult naive_lps(std::string_view text, std::size_t cap = kDefaultOracleCap) {
  return naive_lps(Text<char>(text.data(), text.size()), cap);
}
inline RadiiResult augmented_radii(std::string_view text, const AugmentLimits& limits = {}) {
  return augmented_radii(Text<char>(text.data(), text.size()), limits);
}
inline RadiiResult augmented_radii(std::u32string_view text, const AugmentLimits& limits = {}) {
  return augmented_radii(Text<char32_t>(text.data(), text.size()), limits);
}
inline LpsResult augmented_lps(std::string_view text, const AugmentLimits& limits = {}) {
  return augmented_lps(Text<char>(text.data(), text.size()), limits);
}

}  // namespace lps::reference
