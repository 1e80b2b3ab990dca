#pragma once

/**
 * @file bench.hpp
 * @brief Benchmark protocol: random strings per (length, alphabet) cell,
 * several repeats, every selected implementation timed on the same string.
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lps/reference.hpp"

namespace lps::bench {

enum class Impl { naive, augmented, indexmap };
enum class Outcome { ok, out_of_memory, skipped };

std::string_view to_string(Impl impl);
std::string_view to_string(Outcome outcome);
std::optional<Impl> parse_impl(std::string_view name);
std::optional<Outcome> parse_outcome(std::string_view name);

/// All implementations in report order.
std::vector<Impl> all_impls();

struct BenchSpec {
  std::vector<std::size_t> lengths;
  std::vector<unsigned> alphabet_sizes;
  std::size_t repeats = 3;
  std::vector<Impl> impls = all_impls();
  std::uint64_t seed = 1;
  /// Naive trials on lengths above this are recorded as skipped.
  std::size_t oracle_cap = reference::kDefaultOracleCap;
  /// Injected budget for the augmented buffer; trials over it record out_of_memory.
  std::optional<std::size_t> augment_byte_cap;
  /// One untimed run per (impl, cell) before the timed repeats.
  bool warmup = true;
};

/// Throws lps::Error on an unusable spec.
void validate(const BenchSpec& spec);

struct BenchRecord {
  Impl impl = Impl::indexmap;
  std::size_t length = 0;
  unsigned alphabet_size = 0;
  std::optional<std::size_t> repeat;  // empty for the per-cell mean row
  double wall_seconds = 0.0;
  std::optional<std::size_t> comparisons;  // empty unless outcome is ok
  Outcome outcome = Outcome::ok;

  bool is_summary() const noexcept { return !repeat.has_value(); }
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct TrialResult {
  double wall_seconds = 0.0;
  std::optional<std::size_t> comparisons;
  Outcome outcome = Outcome::ok;
  std::size_t lps_length = 0;
};

/// Runs one implementation on one text. Never throws for out-of-memory or an
/// over-cap naive run; those become the matching outcome.
TrialResult run_trial(Impl impl, std::string_view text, const BenchSpec& spec);

/// Mean row for trials of one (impl, cell). Averages only ok trials; the row is
/// ok only when every trial was.
BenchRecord summarize(const std::vector<BenchRecord>& trials);

/**
 * Runs the whole grid sequentially. For each cell, repeat r uses the string
 * generated from seed + r, shared by all implementations. Records for a cell
 * are emitted as all trials in (repeat, impl) order followed by one mean row
 * per implementation.
 */
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "impl,length,alphabet,repeat,wall_seconds,comparisons,outcome";

/// Mean rows print "mean" in the repeat column; absent comparisons print empty.
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

/// Throws lps::Error on malformed input.
std::vector<BenchRecord> parse_csv(std::istream& in);

/// Lengths as rows, implementations as columns, mean seconds to two decimals;
/// one block per alphabet size.
void write_table(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace lps::bench
