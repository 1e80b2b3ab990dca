// lps: longest palindromic substring tool.
//
//   lps find  [--span] [--impl NAME] [--raw] [--bytes] [FILE|-]
//   lps radii [--impl NAME] [--raw] [--bytes] [FILE|-]
//   lps gen   --length L --alphabet A [--seed S] [--newline]
//   lps bench --lengths L,... --alphabets A,... [--repeats R] [--impls ...]
//             [--seed S] [--format csv|table] [--out FILE] [--mem-cap BYTES]
//
// Exit codes: 0 success, 2 input error, 64 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lps/bench.hpp"
#include "lps/core.hpp"
#include "lps/generator.hpp"
#include "lps/reference.hpp"
#include "lps/utf8.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path = "-";
  std::string impl = "indexmap";
  bool raw = false;
  bool span = false;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class Symbol>
lps::RadiiResult radii_with(lps::bench::Impl impl, lps::Text<Symbol> text) {
  switch (impl) {
    case lps::bench::Impl::naive: {
      lps::RadiiResult r;
      r.radii = lps::reference::naive_radii(text, lps::reference::kDefaultOracleCap, &r.stats);
      return r;
    }
    case lps::bench::Impl::augmented:
      return lps::reference::augmented_radii(text);
    case lps::bench::Impl::indexmap:
      break;
  }
  return lps::compute_radii(text);
}

void print_radii(const lps::RadiiTable& radii) {
  std::string line;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0) line.push_back(',');
    line += std::to_string(radii[i]);
  }
  line.push_back('\n');
  std::fwrite(line.data(), 1, line.size(), stdout);
}

void print_span(const lps::LpsResult& r) {
  std::printf("%zu %zu %zu\n", r.span.start, r.span.end, r.length);
}

int run_text_command(const InputOptions& opt, bool bytes, bool find) {
  const auto impl = lps::bench::parse_impl(opt.impl);
  std::string input = read_all(opt.path);

  if (bytes) {
    const lps::Text<unsigned char> text(reinterpret_cast<const unsigned char*>(input.data()),
                                        input.size());
    const lps::RadiiResult computed = radii_with(*impl, text);
    if (!find) {
      print_radii(computed.radii);
      return 0;
    }
    const lps::LpsResult r = lps::result_from_radii(computed.radii);
    std::fwrite(input.data() + r.span.start, 1, r.length, stdout);
    std::fputc('\n', stdout);
    if (opt.span) print_span(r);
    return 0;
  }

  if (!opt.raw && !input.empty() && input.back() == '\n') {
    input.pop_back();
  }
  const std::u32string decoded = lps::utf8::decode(input);
  const lps::Text<char32_t> text(decoded.data(), decoded.size());
  const lps::RadiiResult computed = radii_with(*impl, text);
  if (!find) {
    print_radii(computed.radii);
    return 0;
  }
  const lps::LpsResult r = lps::result_from_radii(computed.radii);
  const std::string out =
      lps::utf8::encode(std::u32string_view(decoded).substr(r.span.start, r.length)) + "\n";
  std::fwrite(out.data(), 1, out.size(), stdout);
  if (opt.span) print_span(r);
  return 0;
}

int run_gen(const lps::GenSpec& spec, bool newline) {
  lps::gen_text_to(spec, std::cout);
  if (newline) std::cout << '\n';
  std::cout.flush();
  return 0;
}

int run_bench(const lps::bench::BenchSpec& spec, const std::string& format, const std::string& out_path) {
  const auto records = lps::bench::run_bench(spec);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + out_path);
    out = &file;
  }
  if (format == "table") {
    lps::bench::write_table(records, *out);
  } else {
    lps::bench::write_csv(records, *out);
  }
  out->flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest palindromic substring by index-mapped Manacher"};
  app.require_subcommand(1);
  app.fallthrough();
  bool bytes = false;
  app.add_flag("--bytes", bytes, "Treat input as raw bytes instead of UTF-8");

  const std::vector<std::string> impl_names{"naive", "augmented", "indexmap"};

  InputOptions find_opt;
  auto* find = app.add_subcommand("find", "Print the longest palindromic substring");
  find->add_option("input", find_opt.path, "Input file, or - for stdin");
  find->add_flag("--span", find_opt.span, "Also print 'start end length'");
  find->add_flag("--raw", find_opt.raw, "Keep a trailing line feed");
  find->add_option("--impl", find_opt.impl, "Implementation")->check(CLI::IsMember(impl_names));

  InputOptions radii_opt;
  auto* radii = app.add_subcommand("radii", "Print the per-center palindrome lengths");
  radii->add_option("input", radii_opt.path, "Input file, or - for stdin");
  radii->add_flag("--raw", radii_opt.raw, "Keep a trailing line feed");
  radii->add_option("--impl", radii_opt.impl, "Implementation")->check(CLI::IsMember(impl_names));

  lps::GenSpec gen_spec;
  bool newline = false;
  auto* gen = app.add_subcommand("gen", "Write a seeded random string");
  gen->add_option("--length", gen_spec.length, "Number of symbols")->required();
  gen->add_option("--alphabet", gen_spec.alphabet_size, "Alphabet size")
      ->required()
      ->check(CLI::Range(1u, lps::kMaxAlphabet));
  gen->add_option("--seed", gen_spec.seed, "Seed");
  gen->add_flag("--newline", newline, "Terminate output with a line feed");

  lps::bench::BenchSpec bench_spec;
  std::vector<std::string> bench_impls{"all"};
  std::string format = "csv";
  std::string out_path;
  std::size_t mem_cap = 0;
  bool no_warmup = false;
  auto* bench = app.add_subcommand("bench", "Time implementations on random strings");
  bench->add_option("--lengths", bench_spec.lengths, "String lengths")->required()->delimiter(',');
  bench->add_option("--alphabets", bench_spec.alphabet_sizes, "Alphabet sizes")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1u, lps::kMaxAlphabet));
  bench->add_option("--repeats", bench_spec.repeats, "Trials per cell")->check(CLI::PositiveNumber);
  bench->add_option("--impls", bench_impls, "Implementations, or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"all", "naive", "augmented", "indexmap"}));
  bench->add_option("--seed", bench_spec.seed, "Base seed; repeat r uses seed + r");
  bench->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "table"}));
  bench->add_option("--out", out_path, "Write to file instead of stdout");
  auto* mem_cap_opt =
      bench->add_option("--mem-cap", mem_cap, "Byte budget for the augmented buffer");
  bench->add_option("--oracle-cap", bench_spec.oracle_cap, "Longest text the naive solver runs on");
  bench->add_flag("--no-warmup", no_warmup, "Skip the untimed warm-up run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*find) return run_text_command(find_opt, bytes, true);
    if (*radii) return run_text_command(radii_opt, bytes, false);
    if (*gen) return run_gen(gen_spec, newline);
    if (*bench) {
      bench_spec.impls.clear();
      for (const std::string& name : bench_impls) {
        if (name == "all") {
          bench_spec.impls = lps::bench::all_impls();
          break;
        }
        bench_spec.impls.push_back(*lps::bench::parse_impl(name));
      }
      if (*mem_cap_opt) bench_spec.augment_byte_cap = mem_cap;
      bench_spec.warmup = !no_warmup;
      return run_bench(bench_spec, format, out_path);
    }
  } catch (const lps::DecodeError& e) {
    std::cerr << "lps: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "lps: " << e.what() << '\n';
    return kExitInput;
  } catch (const lps::Error& e) {
    std::cerr << "lps: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
