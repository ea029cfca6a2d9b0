// sepq: separability checks for pure n-qubit states stored as JSON files.
//
// Exit codes: 0 separable / success, 1 not separable, 2 input error,
// 3 disagreement with the rank oracle under --verify.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sepq/bench.hpp"
#include "sepq/decomposition.hpp"
#include "sepq/error.hpp"
#include "sepq/full_separability.hpp"
#include "sepq/oracle.hpp"
#include "sepq/pq_separability.hpp"
#include "sepq/random.hpp"
#include "sepq/report.hpp"
#include "sepq/state_io.hpp"

namespace {

using nlohmann::json;
using sepq::report::Report;

constexpr int kExitSeparable = 0;
constexpr int kExitNotSeparable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDisagreement = 3;

struct CommonFlags {
  std::string file;
  double tol_zero = sepq::kTolZero;
  double tol_pp = sepq::kTolPairProduct;
  double tol_rank = sepq::kTolRank;
  bool verify = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("file", flags.file, "state file")->required();
  cmd->add_option("--tol-zero", flags.tol_zero, "amplitudes with |a| <= tol are zero")->capture_default_str();
  cmd->add_option("--tol-pp", flags.tol_pp, "relative tolerance for product comparisons")->capture_default_str();
  cmd->add_option("--tol-rank", flags.tol_rank, "relative tolerance of the rank oracle")->capture_default_str();
}

Report base_report(const std::string& command, const CommonFlags& flags, const sepq::PureState& state) {
  Report r;
  r.command = command;
  r.arguments = {{"file", flags.file}, {"verify", flags.verify}};
  r.input = sepq::report::digest(state, flags.tol_zero);
  r.tolerances = {flags.tol_zero, flags.tol_pp, flags.tol_rank};
  return r;
}

std::int64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
}

void emit(const Report& r) { std::cout << json(r).dump(2) << '\n'; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw sepq::Error(sepq::ErrorKind::Parse, "bad integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw sepq::Error(sepq::ErrorKind::Parse, "empty integer list");
  return out;
}

int run_check_full(const CommonFlags& flags) {
  const auto state = sepq::io::read_state_file(flags.file);
  Report r = base_report("check-full", flags, state);
  const auto start = std::chrono::steady_clock::now();
  const auto result = sepq::is_fully_separable(state, flags.tol_zero, flags.tol_pp);
  r.timing_ns = elapsed_ns(start);
  r.result = sepq::report::to_json(result);
  r.counters = {{"pair_comparisons", result.counters.pair_comparisons},
                {"products", result.counters.products},
                {"wf_comparisons", result.counters.wf_comparisons},
                {"zeros", result.counters.zeros}};
  int code = result.separable ? kExitSeparable : kExitNotSeparable;
  if (flags.verify) {
    const bool oracle = sepq::oracle::oracle_fully_separable(state, flags.tol_rank);
    r.verify = json{{"oracle_separable", oracle}, {"agrees", oracle == result.separable}};
    if (oracle != result.separable) code = kExitDisagreement;
  }
  emit(r);
  return code;
}

int run_check_pq(const CommonFlags& flags, std::optional<int> p, const std::string& subset_text) {
  const auto state = sepq::io::read_state_file(flags.file);
  Report r = base_report("check-pq", flags, state);
  const auto start = std::chrono::steady_clock::now();
  if (!p && subset_text.empty()) throw sepq::Error(sepq::ErrorKind::Parse, "check-pq needs --p or --subset");
  sepq::PqReport result;
  if (!subset_text.empty()) {
    const auto subset = parse_int_list(subset_text);
    r.arguments["subset"] = subset;
    result = sepq::is_pq_separable_subset(state, subset, flags.tol_zero, flags.tol_pp);
  } else {
    r.arguments["p"] = *p;
    result = sepq::is_pq_separable(state, *p, flags.tol_zero, flags.tol_pp);
  }
  r.timing_ns = elapsed_ns(start);
  r.result = sepq::report::to_json(result);
  r.counters = {{"cross_comparisons", result.cross_comparisons}, {"zero_checks", result.zero_checks}};
  int code = result.separable ? kExitSeparable : kExitNotSeparable;
  if (flags.verify) {
    const auto checked = result.permutation ? sepq::permute_qubits(state, *result.permutation) : state;
    const bool oracle = sepq::oracle::oracle_pq(checked, result.p, flags.tol_rank);
    r.verify = json{{"oracle_separable", oracle}, {"agrees", oracle == result.separable}};
    if (oracle != result.separable) code = kExitDisagreement;
  }
  emit(r);
  return code;
}

int run_decompose(const CommonFlags& flags) {
  const auto state = sepq::io::read_state_file(flags.file);
  Report r = base_report("decompose", flags, state);
  const auto start = std::chrono::steady_clock::now();
  const auto tree = sepq::decompose(state, {flags.tol_zero, flags.tol_pp});
  r.timing_ns = elapsed_ns(start);
  r.result = sepq::report::to_json(tree);
  r.counters = {{"blocks", tree.blocks.size()}, {"bipartitions", sepq::count_bipartitions(state.qubits())}};
  int code = kExitSeparable;
  if (flags.verify) {
    const double err = sepq::max_abs_diff(sepq::reconstruct(tree).amplitudes(), state.amplitudes());
    r.verify = json{{"reconstruction_error", err}, {"agrees", err < sepq::kReconstructionTol}};
    if (!(err < sepq::kReconstructionTol)) code = kExitDisagreement;
  }
  emit(r);
  return code;
}

int run_random(std::optional<int> n, const std::string& blocks_text, std::uint64_t seed, const std::string& out) {
  const auto blocks = parse_int_list(blocks_text);
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw sepq::Error(sepq::ErrorKind::Parse, "block sizes must be positive");
    total += b;
  }
  if (n && *n != total) {
    throw sepq::Error(sepq::ErrorKind::LengthMismatch,
                      "--n " + std::to_string(*n) + " does not match block total " + std::to_string(total));
  }
  const auto state = sepq::random_structured_state(blocks, seed);
  if (out.empty()) {
    std::cout << sepq::io::format_state(state);
    return kExitSeparable;
  }
  sepq::io::write_state_file(out, state);
  Report r;
  r.command = "random";
  r.arguments = {{"blocks", blocks}, {"seed", seed}, {"out", out}};
  r.input = sepq::report::digest(state, sepq::kTolZero);
  r.result = {{"written", out}, {"n", state.qubits()}};
  emit(r);
  return kExitSeparable;
}

int run_bench(int n_min, int n_max, int reps) {
  if (n_min < 1 || n_max < n_min || n_max > 28 || reps < 1) {
    throw sepq::Error(sepq::ErrorKind::Parse, "need 1 <= n-min <= n-max <= 28 and reps >= 1");
  }
  Report r;
  r.command = "bench";
  r.arguments = {{"n_min", n_min}, {"n_max", n_max}, {"reps", reps}};
  json rows = json::array();
  bool bounds_ok = true;
  const auto start = std::chrono::steady_clock::now();
  for (int n = n_min; n <= n_max; ++n) {
    const auto row = sepq::bench::check_full(n, reps);
    const std::uint64_t N = row.amplitudes;
    const std::uint64_t comparisons = row.pair_comparisons + row.wf_comparisons;
    const bool ok = row.products <= N && comparisons <= 2 * N;
    bounds_ok = bounds_ok && ok;
    rows.push_back({{"n", n},
                    {"amplitudes", N},
                    {"mean_ns", row.mean_ns},
                    {"products", row.products},
                    {"pair_comparisons", row.pair_comparisons},
                    {"wf_comparisons", row.wf_comparisons},
                    {"within_bounds", ok}});
  }
  r.timing_ns = elapsed_ns(start);
  r.result = {{"rows", rows}, {"within_bounds", bounds_ok}};
  emit(r);
  return bounds_ok ? kExitSeparable : kExitNotSeparable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability of pure n-qubit states"};
  app.require_subcommand(1);

  CommonFlags full_flags;
  auto* full = app.add_subcommand("check-full", "decide full separability and list qubit factors");
  add_common(full, full_flags);
  full->add_flag("--verify", full_flags.verify, "cross-check with the rank oracle");

  CommonFlags pq_flags;
  std::optional<int> pq_p;
  std::string pq_subset;
  auto* pq = app.add_subcommand("check-pq", "decide p-q separability");
  add_common(pq, pq_flags);
  pq->add_flag("--verify", pq_flags.verify, "cross-check with the rank oracle");
  auto* p_opt = pq->add_option("--p", pq_p, "number of leading qubits in the left factor");
  auto* subset_opt = pq->add_option("--subset", pq_subset, "comma-separated qubits forming the left factor");
  p_opt->excludes(subset_opt);

  CommonFlags dec_flags;
  auto* dec = app.add_subcommand("decompose", "finest factorization by exhaustive bipartition search");
  add_common(dec, dec_flags);
  dec->add_flag("--verify", dec_flags.verify, "check that the blocks reproduce the input");

  std::optional<int> rnd_n;
  std::string rnd_blocks;
  std::uint64_t rnd_seed = 0;
  std::string rnd_out;
  auto* rnd = app.add_subcommand("random", "write a random state that factors along the given blocks");
  rnd->add_option("--n", rnd_n, "total qubit count (must match the blocks)");
  rnd->add_option("--blocks", rnd_blocks, "comma-separated block sizes")->required();
  rnd->add_option("--seed", rnd_seed, "PRNG seed")->capture_default_str();
  rnd->add_option("--out", rnd_out, "output file (stdout when omitted)");

  int bench_min = 10;
  int bench_max = 20;
  int bench_reps = 5;
  auto* bench = app.add_subcommand("bench", "time check-full on full-support product states");
  bench->add_option("--n-min", bench_min)->capture_default_str();
  bench->add_option("--n-max", bench_max)->capture_default_str();
  bench->add_option("--reps", bench_reps)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*full) return run_check_full(full_flags);
    if (*pq) return run_check_pq(pq_flags, pq_p, pq_subset);
    if (*dec) return run_decompose(dec_flags);
    if (*rnd) return run_random(rnd_n, rnd_blocks, rnd_seed, rnd_out);
    if (*bench) return run_bench(bench_min, bench_max, bench_reps);
  } catch (const sepq::Error& e) {
    std::cerr << "sepq: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "sepq: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
