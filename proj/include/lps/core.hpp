#pragma once

/**
 * @file core.hpp
 * @brief Linear-time longest palindromic substring by index mapping.
 *
 * A text of N symbols has 2N+1 palindromic centers. They are addressed by
 * indices into a *virtual* augmented string: even indices are the gaps
 * between symbols (including both ends), odd index 2k+1 is symbol k.
 * Nothing of that augmented string is ever stored; every position is
 * resolved arithmetically:
 *
 *   2*c - x          mirror of x about c
 *   i - radii[i]     left bound (augmented, always even)
 *   i + radii[i]     right bound (augmented, always even)
 *   bound / 2        the same bound in the original text
 *
 * radii[i] is the length, in original symbols, of the longest palindrome
 * centered at i. Its parity always matches the parity of i.
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lps/error.hpp"

namespace lps {

/// Read-only view of the input symbols.
template <class Symbol>
using Text = std::span<const Symbol>;

/// Per-center palindrome lengths, 2N+1 entries.
using RadiiTable = std::vector<std::size_t>;

/// Half-open [start, end) interval of original-text indices.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  constexpr std::size_t length() const noexcept { return end - start; }
  friend constexpr bool operator==(const Span&, const Span&) = default;
};

struct LpsResult {
  Span span;
  std::size_t length = 0;
  std::size_t center = 0;  // augmented index

  friend constexpr bool operator==(const LpsResult&, const LpsResult&) = default;
};

struct CompareStats {
  std::size_t comparisons = 0;
};

struct RadiiResult {
  RadiiTable radii;
  CompareStats stats;
};

/// Number of augmented positions for a text of n symbols. Throws InputTooLarge
/// when 2n+1 does not fit in std::size_t.
constexpr std::size_t augmented_size(std::size_t n) {
  if (n > (std::numeric_limits<std::size_t>::max() - 1) / 2) {
    throw InputTooLarge("text of " + std::to_string(n) + " symbols exceeds index width");
  }
  return 2 * n + 1;
}

constexpr std::size_t to_mirror_image(std::size_t center, std::size_t x) noexcept {
  return 2 * center - x;
}

inline std::size_t get_left_bound(std::size_t i, const RadiiTable& radii) {
  return i - radii[i];
}

inline std::size_t get_right_bound(std::size_t i, const RadiiTable& radii) {
  return i + radii[i];
}

inline std::size_t palength(std::size_t i, const RadiiTable& radii) {
  return (get_right_bound(i, radii) - get_left_bound(i, radii)) / 2;
}

/// Maps a palindrome (center, radius) in augmented space to original indices.
constexpr Span to_original_span(std::size_t center, std::size_t radius) noexcept {
  return Span{(center - radius) / 2, (center + radius) / 2};
}

/**
 * Tests whether augmented positions p and q fail to match.
 *
 * Positions outside [0, 2N] block extension and count as a mismatch. Two even
 * positions are both virtual gaps and always match without a comparison.
 * Two odd positions compare the underlying symbols; this is the only case that
 * touches the text and the only one counted in @p stats.
 */
template <std::equality_comparable Symbol>
bool is_mismatch(Text<Symbol> text, std::ptrdiff_t p, std::ptrdiff_t q, CompareStats& stats) {
  const auto last = static_cast<std::ptrdiff_t>(2 * text.size());
  if (p < 0 || q > last) {
    return true;
  }
  if (p % 2 == 0 && q % 2 == 0) {
    return false;
  }
  ++stats.comparisons;
  return !(text[static_cast<std::size_t>((p - 1) / 2)] ==
           text[static_cast<std::size_t>((q - 1) / 2)]);
}

/// Grows the palindrome at @p center from a radius already known to be
/// palindromic until the next pair mismatches or hits a text edge.
template <std::equality_comparable Symbol>
std::size_t expand(Text<Symbol> text, std::size_t center, std::size_t start_radius,
                   CompareStats& stats) {
  std::size_t radius = start_radius;
  while (!is_mismatch(text, static_cast<std::ptrdiff_t>(center) - static_cast<std::ptrdiff_t>(radius) - 1,
                      static_cast<std::ptrdiff_t>(center + radius + 1), stats)) {
    ++radius;
  }
  return radius;
}

/**
 * Manacher's scan over all 2N+1 virtual centers.
 *
 * The reference center is the one whose palindrome reaches farthest right so
 * far. A center j inside that palindrome first looks at its mirror k. If the
 * mirror palindrome lies strictly inside the reference one, radii[j] is a copy
 * of radii[k]. Otherwise the radius is clamped to the reference right bound
 * and only the part beyond it is compared.
 */
template <std::equality_comparable Symbol>
RadiiResult compute_radii(Text<Symbol> text) {
  const std::size_t size = augmented_size(text.size());
  RadiiResult result{RadiiTable(size, 0), {}};
  RadiiTable& radii = result.radii;

  std::size_t ref_center = 0;
  for (std::size_t j = 0; j < size; ++j) {
    const std::size_t ref_right = get_right_bound(ref_center, radii);
    if (j >= ref_right) {
      radii[j] = expand(text, j, 0, result.stats);
    } else {
      const std::size_t mirror = to_mirror_image(ref_center, j);
      if (get_left_bound(mirror, radii) > get_left_bound(ref_center, radii)) {
        radii[j] = radii[mirror];
        continue;
      }
      radii[j] = expand(text, j, ref_right - j, result.stats);
    }
    if (get_right_bound(j, radii) > ref_right) {
      ref_center = j;
    }
  }
  return result;
}

/// Smallest index holding the maximum value. The table is never empty.
inline std::size_t argmax(const RadiiTable& radii) {
  return static_cast<std::size_t>(std::max_element(radii.begin(), radii.end()) - radii.begin());
}

/// Builds the result for the leftmost longest palindrome in a finished table.
inline LpsResult result_from_radii(const RadiiTable& radii) {
  const std::size_t center = argmax(radii);
  const std::size_t length = radii[center];
  return LpsResult{to_original_span(center, length), length, center};
}

template <std::equality_comparable Symbol>
LpsResult longest_palindrome(Text<Symbol> text) {
  return result_from_radii(compute_radii(text).radii);
}

template <class Symbol>
Text<Symbol> substring(Text<Symbol> text, Span span) {
  return text.subspan(span.start, span.length());
}

inline std::string_view substring(std::string_view text, Span span) {
  return text.substr(span.start, span.length());
}

// Convenience overloads for narrow and UTF-32 strings.

inline RadiiResult compute_radii(std::string_view text) {
  return compute_radii(Text<char>(text.data(), text.size()));
}

inline RadiiResult compute_radii(std::u32string_view text) {
  return compute_radii(Text<char32_t>(text.data(), text.size()));
}

inline LpsResult longest_palindrome(std::string_view text) {
  return longest_palindrome(Text<char>(text.data(), text.size()));
}

inline LpsResult longest_palindrome(std::u32string_view text) {
  return longest_palindrome(Text<char32_t>(text.data(), text.size()));
}

}  // namespace lps
