// synchrolab command-line front end. Every command writes a deterministic
// table to stdout; progress and diagnostics go to stderr.
//
// Exit codes: 0 success, 2 validation error, 3 not synchronizing / not
// primitive, 4 resource refusal or search cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "synchrolab/canonical.hpp"
#include "synchrolab/census.hpp"
#include "synchrolab/dfa.hpp"
#include "synchrolab/digraph.hpp"
#include "synchrolab/errors.hpp"
#include "synchrolab/parallel.hpp"
#include "synchrolab/series.hpp"
#include "synchrolab/sync.hpp"
#include "synchrolab/transforms.hpp"

namespace {

using namespace synchrolab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNegative = 3;
constexpr int kExitResource = 4;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

// Aligned rendering of a two-column TSV.
std::string prettify(const std::string& tsv) {
  std::istringstream in(tsv);
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t width = 0;
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    rows.emplace_back(line.substr(0, tab), tab == std::string::npos ? "" : line.substr(tab + 1));
    width = std::max(width, rows.back().first.size());
  }
  std::ostringstream out;
  for (const auto& [left, right] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << left << right << "\n";
  return out.str();
}

std::vector<Word> parse_actions(const std::string& text) {
  std::vector<Word> actions;
  std::istringstream in(text);
  for (std::string part; std::getline(in, part, ',');) actions.push_back(Word::parse(part));
  return actions;
}

int cmd_rt(const std::string& path, std::optional<std::size_t> cap) {
  const Dfa dfa = parse_dfa(read_input(path));
  const ResetResult r = reset_threshold(dfa, cap);
  switch (r.status) {
    case ResetStatus::kSynchronizing:
      std::cout << r.threshold << "\n" << r.witness.to_string() << "\n";
      return kExitOk;
    case ResetStatus::kNotSynchronizing:
      std::cout << "not synchronizing\n";
      return kExitNegative;
    case ResetStatus::kCapExceeded:
      std::cout << "cap exceeded: threshold > " << *cap << "\n";
      return kExitResource;
  }
  return kExitOk;
}

int cmd_series(const std::string& name, std::size_t n, bool verify, const std::string& emit,
               const std::string& emit_digraph) {
  const Series s = parse_series(name);
  const Dfa dfa = build_series(s, n);
  std::cout << "series\t" << series_name(s) << "\n"
            << "states\t" << n << "\n"
            << "claimed\t" << claimed_threshold(s, n) << "\n"
            << "word\t" << claimed_word(s, n).to_string() << "\n";
  int code = kExitOk;
  if (verify) {
    const SeriesReport report = verify_series(s, n);
    std::cout << report.summary() << "\n";
    if (!report.ok()) code = kExitVerifyFailed;
  }
  if (!emit.empty()) write_output(emit == "-" ? "" : emit, serialize_dfa(dfa));
  if (!emit_digraph.empty()) {
    write_output(emit_digraph == "-" ? "" : emit_digraph, serialize_digraph(underlying_digraph(dfa)));
  }
  return code;
}

int cmd_census(std::size_t n, std::size_t k, std::size_t min_rt, const std::string& shard, bool no_dedup,
               std::size_t jobs, const std::string& out, bool pretty) {
  CensusOptions options;
  options.min_threshold = min_rt;
  options.dedup_iso = !no_dedup;
  if (!shard.empty()) options.shard = parse_shard(shard);
  std::mutex progress_mutex;
  std::size_t last_percent = 0;
  CensusCallbacks callbacks;
  callbacks.on_progress = [&](std::size_t done, std::size_t total) {
    std::lock_guard lock(progress_mutex);
    const std::size_t percent = done * 100 / total;
    if (percent >= last_percent + 10 || done == total) {
      last_percent = percent;
      std::cerr << "census: " << percent << "% of " << total << " tasks\n";
    }
  };
  const CensusResult result = census(n, k, options, jobs, callbacks);
  std::cerr << "census: " << result.strings << " canonical strings, " << result.not_synchronizing
            << " not synchronizing\n";
  const std::string tsv = result.to_tsv();
  write_output(out, pretty ? prettify(tsv) : tsv);
  return kExitOk;
}

int cmd_exponent(const std::string& path) {
  const Digraph d = parse_digraph(read_input(path));
  const auto e = exponent(d);
  if (!e) {
    std::cout << "not primitive\n";
    return kExitNegative;
  }
  std::cout << *e << "\n";
  return kExitOk;
}

int cmd_digraph(const std::string& name, std::size_t n) {
  std::cout << serialize_digraph(digraph_series(parse_digraph_series(name), n));
  return kExitOk;
}

int cmd_digraph_census(std::size_t n, bool all, bool no_dedup, std::size_t jobs, bool pretty) {
  DigraphCensusOptions options;
  options.primitive_only = !all;
  options.dedup_iso = !no_dedup;
  const DigraphCensus result = digraph_census(n, options, jobs);
  if (all) std::cerr << "digraph-census: " << result.not_primitive << " not primitive\n";
  const std::string tsv = result.exponents.to_tsv("exponent");
  std::cout << (pretty ? prettify(tsv) : tsv);
  return kExitOk;
}

int cmd_colorings(const std::string& path, std::size_t k, bool all) {
  const Digraph d = parse_digraph(read_input(path));
  const Colorings result = colorings(d, k, !all);
  if (!result.diagnostic.empty()) std::cerr << "colorings: " << result.diagnostic << "\n";
  std::cout << "colorings\t" << result.automata.size() << "\n";
  for (const Dfa& dfa : result.automata) std::cout << "\n" << serialize_dfa(dfa);
  return kExitOk;
}

int cmd_derive(const std::string& path, const std::string& actions) {
  const Dfa dfa = parse_dfa(read_input(path));
  std::cout << serialize_dfa(derive(dfa, parse_actions(actions)));
  return kExitOk;
}

int cmd_canon(const std::string& path) {
  const Dfa dfa = parse_dfa(read_input(path));
  std::cout << iso_canonical_form(dfa).to_string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of synchronizing automata and primitive digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "synchrolab 1.0");

  std::size_t jobs = default_jobs();
  bool pretty = false;

  std::string file;
  std::optional<std::size_t> cap;
  auto* rt = app.add_subcommand("rt", "Reset threshold and a shortest reset word");
  rt->add_option("dfa-file", file, "Automaton file ('-' for stdin)")->required();
  rt->add_option("--cap", cap, "Give up beyond this word length");

  std::string series_name_arg;
  std::size_t series_n = 0;
  bool verify = false;
  std::string emit;
  std::string emit_digraph;
  auto* series = app.add_subcommand("series", "Slowly synchronizing series: claimed threshold and word");
  series->add_option("name", series_name_arg, "c, w, e, h, dprime, ddouble, f, b or g")->required();
  series->add_option("n", series_n, "State count")->required();
  series->add_flag("--verify", verify, "Compare against the exact reset threshold");
  series->add_option("--emit", emit, "Write the automaton file ('-' for stdout)");
  series->add_option("--emit-digraph", emit_digraph, "Write the underlying digraph file ('-' for stdout)");

  std::size_t states = 0;
  std::size_t letters = 2;
  std::size_t min_rt = 0;
  std::string shard;
  std::string out;
  bool no_dedup = false;
  auto* census_cmd = app.add_subcommand("census", "Reset-threshold census of initially-connected automata");
  census_cmd->add_option("--states", states, "State count n")->required();
  census_cmd->add_option("--letters", letters, "Letter count k")->capture_default_str();
  census_cmd->add_option("--min-rt", min_rt, "Only report thresholds >= R");
  census_cmd->add_option("--shard", shard, "Run only shard i of m, written i/m");
  census_cmd->add_option("--out", out, "Write the TSV here instead of stdout");
  census_cmd->add_flag("--no-dedup", no_dedup, "Count canonical strings instead of isomorphism classes");

  auto* exponent_cmd = app.add_subcommand("exponent", "Exponent of a primitive digraph");
  exponent_cmd->add_option("digraph-file", file, "Digraph file ('-' for stdin)")->required();

  std::string digraph_name;
  std::size_t digraph_n = 0;
  auto* digraph_cmd = app.add_subcommand("digraph", "Print a named extremal digraph (W, D, V, R, G, G')");
  digraph_cmd->add_option("name", digraph_name, "W, D, V, R, G or G'")->required();
  digraph_cmd->add_option("n", digraph_n, "Vertex count")->required();

  std::size_t vertices = 0;
  bool all_digraphs = false;
  auto* digraph_census_cmd = app.add_subcommand("digraph-census", "Exponent census of n-vertex digraphs");
  digraph_census_cmd->add_option("--vertices", vertices, "Vertex count n (at most 5)")->required();
  digraph_census_cmd->add_flag("--all", all_digraphs, "Also tally non-primitive digraphs (reported on stderr)");
  digraph_census_cmd->add_flag("--no-dedup", no_dedup, "Count labelled digraphs instead of classes");

  std::size_t coloring_letters = 2;
  bool all_colorings = false;
  auto* colorings_cmd = app.add_subcommand("colorings", "Colorings of a digraph by k letters");
  colorings_cmd->add_option("digraph-file", file, "Digraph file ('-' for stdin)")->required();
  colorings_cmd->add_option("--letters", coloring_letters, "Letter count k")->capture_default_str();
  colorings_cmd->add_flag("--all", all_colorings, "List every coloring, not one per isomorphism class");

  std::string actions;
  auto* derive_cmd = app.add_subcommand("derive", "Automaton whose letters act as the given words");
  derive_cmd->add_option("dfa-file", file, "Automaton file ('-' for stdin)")->required();
  derive_cmd->add_option("--actions", actions, "Comma-separated words over a, b, ...")->required();

  auto* canon_cmd = app.add_subcommand("canon", "Isomorphism-invariant canonical string");
  canon_cmd->add_option("dfa-file", file, "Automaton file ('-' for stdin)")->required();

  for (auto* sub : {census_cmd, digraph_census_cmd}) {
    sub->add_option("--jobs", jobs, "Worker threads (default: SYNCHROLAB_JOBS or hardware threads)");
    sub->add_flag("--pretty", pretty, "Aligned columns instead of TSV");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*rt) return cmd_rt(file, cap);
    if (*series) return cmd_series(series_name_arg, series_n, verify, emit, emit_digraph);
    if (*census_cmd) return cmd_census(states, letters, min_rt, shard, no_dedup, jobs, out, pretty);
    if (*exponent_cmd) return cmd_exponent(file);
    if (*digraph_cmd) return cmd_digraph(digraph_name, digraph_n);
    if (*digraph_census_cmd) return cmd_digraph_census(vertices, all_digraphs, no_dedup, jobs, pretty);
    if (*colorings_cmd) return cmd_colorings(file, coloring_letters, all_colorings);
    if (*derive_cmd) return cmd_derive(file, actions);
    if (*canon_cmd) return cmd_canon(file);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NotSynchronizingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const ResourceRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitOk;
}
