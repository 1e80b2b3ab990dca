#include "lps/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <new>
#include <sstream>
#include <tuple>

#include "lps/core.hpp"
#include "lps/error.hpp"
#include "lps/generator.hpp"

namespace lps::bench {

namespace {

constexpr std::string_view kMeanTag = "mean";

template <class Int>
Int parse_int(std::string_view field, std::string_view what) {
  Int value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw Error("bad " + std::string(what) + " field '" + std::string(field) + "'");
  }
  return value;
}

double parse_seconds(std::string_view field) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw Error("bad wall_seconds field '" + std::string(field) + "'");
  }
  return value;
}

std::string format_seconds(double seconds) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), seconds);
  return std::string(buf, ptr);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    fields.push_back(line.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) {
      return fields;
    }
    pos = next + 1;
  }
}

}  // namespace

std::string_view to_string(Impl impl) {
  switch (impl) {
    case Impl::naive: return "naive";
    case Impl::augmented: return "augmented";
    case Impl::indexmap: return "indexmap";
  }
  return "?";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::ok: return "ok";
    case Outcome::out_of_memory: return "out_of_memory";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

std::optional<Impl> parse_impl(std::string_view name) {
  for (Impl impl : all_impls()) {
    if (to_string(impl) == name) return impl;
  }
  return std::nullopt;
}

std::optional<Outcome> parse_outcome(std::string_view name) {
  for (Outcome o : {Outcome::ok, Outcome::out_of_memory, Outcome::skipped}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

std::vector<Impl> all_impls() { return {Impl::augmented, Impl::indexmap, Impl::naive}; }

void validate(const BenchSpec& spec) {
  if (spec.repeats < 1) throw Error("repeats must be at least 1");
  if (spec.lengths.empty()) throw Error("no lengths given");
  if (spec.alphabet_sizes.empty()) throw Error("no alphabet sizes given");
  if (spec.impls.empty()) throw Error("no implementations selected");
  for (unsigned a : spec.alphabet_sizes) {
    validate(GenSpec{0, a, 0});
  }
}

TrialResult run_trial(Impl impl, std::string_view text, const BenchSpec& spec) {
  const Text<char> symbols(text.data(), text.size());
  TrialResult trial;
  if (impl == Impl::naive && text.size() > spec.oracle_cap) {
    trial.outcome = Outcome::skipped;
    return trial;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    RadiiResult computed;
    switch (impl) {
      case Impl::naive:
        computed.radii = reference::naive_radii(symbols, spec.oracle_cap, &computed.stats);
        break;
      case Impl::augmented:
        computed = reference::augmented_radii(symbols, {spec.augment_byte_cap});
        break;
      case Impl::indexmap:
        computed = compute_radii(symbols);
        break;
    }
    trial.lps_length = result_from_radii(computed.radii).length;
    trial.comparisons = computed.stats.comparisons;
  } catch (const AugmentOutOfMemory&) {
    trial.outcome = Outcome::out_of_memory;
  } catch (const std::bad_alloc&) {
    // The radii table itself did not fit.
    trial.outcome = Outcome::out_of_memory;
  }
  const auto stop = std::chrono::steady_clock::now();
  if (trial.outcome == Outcome::ok) {
    trial.wall_seconds = std::chrono::duration<double>(stop - start).count();
  }
  return trial;
}

BenchRecord summarize(const std::vector<BenchRecord>& trials) {
  if (trials.empty()) throw Error("cannot summarize zero trials");
  BenchRecord mean = trials.front();
  mean.repeat.reset();
  double seconds = 0.0;
  std::size_t comparisons = 0;
  std::size_t ok = 0;
  bool any_oom = false;
  for (const BenchRecord& t : trials) {
    if (t.outcome == Outcome::ok) {
      seconds += t.wall_seconds;
      comparisons += t.comparisons.value_or(0);
      ++ok;
    } else if (t.outcome == Outcome::out_of_memory) {
      any_oom = true;
    }
  }
  mean.wall_seconds = ok > 0 ? seconds / static_cast<double>(ok) : 0.0;
  if (ok == trials.size()) {
    mean.outcome = Outcome::ok;
    mean.comparisons = (comparisons + ok / 2) / ok;
  } else {
    mean.outcome = any_oom ? Outcome::out_of_memory : Outcome::skipped;
    mean.comparisons.reset();
  }
  return mean;
}

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  validate(spec);
  std::vector<BenchRecord> records;
  for (std::size_t length : spec.lengths) {
    for (unsigned alphabet : spec.alphabet_sizes) {
      std::map<Impl, std::vector<BenchRecord>> per_impl;
      for (std::size_t r = 0; r < spec.repeats; ++r) {
        const std::string text = gen_text(GenSpec{length, alphabet, spec.seed + r});
        for (Impl impl : spec.impls) {
          if (r == 0 && spec.warmup) {
            run_trial(impl, text, spec);
          }
          const TrialResult trial = run_trial(impl, text, spec);
          BenchRecord rec{impl, length, alphabet, r, trial.wall_seconds, trial.comparisons,
                          trial.outcome};
          records.push_back(rec);
          per_impl[impl].push_back(rec);
        }
      }
      for (Impl impl : spec.impls) {
        records.push_back(summarize(per_impl[impl]));
      }
    }
  }
  return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << to_string(r.impl) << ',' << r.length << ',' << r.alphabet_size << ',';
    if (r.repeat) {
      out << *r.repeat;
    } else {
      out << kMeanTag;
    }
    out << ',' << format_seconds(r.wall_seconds) << ',';
    if (r.comparisons) {
      out << *r.comparisons;
    }
    out << ',' << to_string(r.outcome) << '\n';
  }
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error("missing or unexpected CSV header");
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) {
      throw Error("expected 7 fields, got " + std::to_string(f.size()) + ": " + line);
    }
    BenchRecord r;
    const auto impl = parse_impl(f[0]);
    if (!impl) throw Error("unknown impl '" + std::string(f[0]) + "'");
    r.impl = *impl;
    r.length = parse_int<std::size_t>(f[1], "length");
    r.alphabet_size = parse_int<unsigned>(f[2], "alphabet");
    if (f[3] != kMeanTag) {
      r.repeat = parse_int<std::size_t>(f[3], "repeat");
    }
    r.wall_seconds = parse_seconds(f[4]);
    if (!f[5].empty()) {
      r.comparisons = parse_int<std::size_t>(f[5], "comparisons");
    }
    const auto outcome = parse_outcome(f[6]);
    if (!outcome) throw Error("unknown outcome '" + std::string(f[6]) + "'");
    r.outcome = *outcome;
    records.push_back(r);
  }
  return records;
}

void write_table(const std::vector<BenchRecord>& records, std::ostream& out) {
  std::vector<unsigned> alphabets;
  std::vector<std::size_t> lengths;
  std::vector<Impl> impls;
  std::map<std::tuple<unsigned, std::size_t, Impl>, const BenchRecord*> cells;
  auto note = [](auto& list, const auto& v) {
    if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
  };
  for (const BenchRecord& r : records) {
    if (!r.is_summary()) continue;
    note(alphabets, r.alphabet_size);
    note(lengths, r.length);
    note(impls, r.impl);
    cells[{r.alphabet_size, r.length, r.impl}] = &r;
  }

  constexpr int kLengthWidth = 12;
  constexpr int kCellWidth = 14;
  bool first = true;
  for (unsigned a : alphabets) {
    if (!first) out << '\n';
    first = false;
    out << "alphabet " << a << '\n';
    out << std::setw(kLengthWidth) << "length";
    for (Impl impl : impls) out << std::setw(kCellWidth) << to_string(impl);
    out << '\n';
    for (std::size_t len : lengths) {
      out << std::setw(kLengthWidth) << len;
      for (Impl impl : impls) {
        const auto it = cells.find({a, len, impl});
        std::ostringstream cell;
        if (it == cells.end() || it->second->outcome == Outcome::skipped) {
          cell << '-';
        } else if (it->second->outcome == Outcome::out_of_memory) {
          cell << "OutOfMemory";
        } else {
          cell << std::fixed << std::setprecision(2) << it->second->wall_seconds;
        }
        out << std::setw(kCellWidth) << cell.str();
      }
      out << '\n';
    }
  }
}

}  // namespace lps::bench
