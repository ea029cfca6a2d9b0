// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sepq/bench.hpp"
#include "sepq/decomposition.hpp"
#include "sepq/full_separability.hpp"
#include "sepq/mask.hpp"
#include "sepq/oracle.hpp"
#include "sepq/pq_separability.hpp"
#include "sepq/random.hpp"
#include "sepq/state.hpp"
#include "support/corpus.hpp"

namespace {

using namespace sepq;
using clock_type = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

SupportMask mask_from_bits(std::uint64_t bits, std::size_t length) {
  std::vector<bool> b(length);
  for (std::size_t i = 0; i < length; ++i) b[i] = (bits >> (length - 1 - i)) & 1U;
  return SupportMask(std::move(b));
}

// States whose first nonzero amplitude sits at (0, 1) of the P x Q layout, with
// the rest of the support on row 0 and column 0. The cross-product condition is
// vacuous for them, yet the reshape has rank 2.
PureState vacuous_cross_state(int n, int p, Prng& rng) {
  const std::uint64_t Q = std::uint64_t{1} << (n - p);
  const std::uint64_t P = std::uint64_t{1} << p;
  std::vector<Amplitude> a(std::size_t{1} << n);
  for (std::uint64_t r = 1; r < Q; ++r) a[r] = rng.complex_gaussian();
  for (std::uint64_t k = 1; k < P; ++k) a[k * Q] = rng.complex_gaussian();
  double norm = 0.0;
  for (const auto& x : a) norm += std::norm(x);
  for (auto& x : a) x /= std::sqrt(norm);
  return PureState::make(n, std::move(a));
}

std::vector<PureState> corpus_states(int n, int count, std::uint64_t seed) {
  std::vector<PureState> out;
  for (auto& ls : testing::make_corpus(n, count, seed)) out.push_back(std::move(ls.state));
  return out;
}

constexpr int kCorpusPerN = 1000;
constexpr std::uint64_t kCorpusSeed = 20260101;

Outcome counting_law() {
  const auto start = clock_type::now();
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    const auto members = enumerate_well_formed(n);
    const auto expected = static_cast<std::size_t>(std::pow(3.0, n));
    if (members.size() != expected) {
      o.pass = false;
      o.detail += fmt("n=%d: %zu members, expected %zu; ", n, members.size(), expected);
    }
  }
  std::uint64_t masks = 0;
  for (int n = 1; n <= 4; ++n) {
    const std::size_t length = std::size_t{1} << n;
    const auto members = enumerate_well_formed(n);
    const std::set<SupportMask> member_set(members.begin(), members.end());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
      ++masks;
      const auto m = mask_from_bits(bits, length);
      if (is_well_formed_mask(m) != (member_set.count(m) == 1)) {
        o.pass = false;
        o.detail += "membership mismatch at n=" + std::to_string(n) + " mask " + m.to_string() + "; ";
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 1.0) o.pass = false;
  o.detail += fmt("3^n for n=1..10, %llu masks checked, %.3fs", static_cast<unsigned long long>(masks), t);
  return o;
}

Outcome oracle_full() {
  const auto start = clock_type::now();
  Outcome o;
  std::uint64_t states = 0, disagreements = 0, separable = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const auto& s : corpus_states(n, kCorpusPerN, kCorpusSeed + n)) {
      ++states;
      const bool ours = is_fully_separable(s).separable;
      const bool oracle = oracle::oracle_fully_separable(s);
      separable += ours;
      if (ours != oracle) ++disagreements;
    }
  }
  const double t = seconds_since(start);
  o.pass = disagreements == 0 && t < 30.0;
  o.detail = fmt("%llu states (%llu separable), %llu disagreements, %.2fs", static_cast<unsigned long long>(states),
                 static_cast<unsigned long long>(separable), static_cast<unsigned long long>(disagreements), t);
  return o;
}

Outcome oracle_pq() {
  Outcome o;
  std::uint64_t checks = 0, disagreements = 0, separable = 0, regression = 0;
  Prng rng(77);
  for (int n = 2; n <= 8; ++n) {
    auto states = corpus_states(n, kCorpusPerN, kCorpusSeed + n);
    for (int p = 1; p < n; ++p) {
      for (int i = 0; i < 20; ++i) states.push_back(vacuous_cross_state(n, p, rng));
    }
    states.push_back(w_state(n));
    states.push_back(ghz_state(n));
    for (const auto& s : states) {
      for (int p = 1; p < n; ++p) {
        ++checks;
        const bool ours = is_pq_separable(s, p).separable;
        separable += ours;
        if (ours != oracle::oracle_pq(s, p)) ++disagreements;
      }
    }
    regression += 20 * static_cast<std::uint64_t>(n - 1);
  }
  o.pass = disagreements == 0;
  o.detail = fmt("%llu (state, split) checks (%llu separable, %llu vacuous-cross cases), %llu disagreements",
                 static_cast<unsigned long long>(checks), static_cast<unsigned long long>(separable),
                 static_cast<unsigned long long>(regression), static_cast<unsigned long long>(disagreements));
  return o;
}

Outcome round_trips() {
  Outcome o;
  double worst_rec = 0.0, worst_norm = 0.0;
  std::uint64_t verdicts = 0;
  auto norm_gap = [](const PureState& s) { return std::abs(std::sqrt(s.norm_squared()) - 1.0); };
  for (int n = 2; n <= 8; ++n) {
    for (const auto& s : corpus_states(n, kCorpusPerN, kCorpusSeed + n)) {
      const auto full = is_fully_separable(s);
      if (full.separable) {
        ++verdicts;
        const auto rebuilt = tensor(std::span<const QubitFactor>(*full.factors));
        worst_rec = std::max(worst_rec, max_abs_diff(rebuilt.amplitudes(), s.amplitudes()));
        for (const auto& f : *full.factors) {
          worst_norm = std::max(worst_norm, std::abs(std::sqrt(std::norm(f.amp0) + std::norm(f.amp1)) - 1.0));
        }
      }
      for (int p = 1; p < n; ++p) {
        const auto r = is_pq_separable(s, p);
        if (!r.separable) continue;
        ++verdicts;
        const auto rebuilt = tensor(r.factors->first, r.factors->second);
        worst_rec = std::max(worst_rec, max_abs_diff(rebuilt.amplitudes(), s.amplitudes()));
        worst_norm = std::max({worst_norm, norm_gap(r.factors->first), norm_gap(r.factors->second)});
      }
      if (n <= 6) {
        const auto tree = decompose(s);
        ++verdicts;
        worst_rec = std::max(worst_rec, max_abs_diff(reconstruct(tree).amplitudes(), s.amplitudes()));
        for (const auto& b : tree.blocks) worst_norm = std::max(worst_norm, norm_gap(b.state));
      }
    }
  }
  o.pass = worst_rec < 1e-9 && worst_norm < 1e-9;
  o.detail = fmt("%llu separable verdicts, max reconstruction error %.2e, max norm gap %.2e",
                 static_cast<unsigned long long>(verdicts), worst_rec, worst_norm);
  return o;
}

Outcome adjacent_pairs() {
  Outcome o;
  Prng rng(4242);
  double worst = 0.0;
  std::uint64_t failures = 0;
  constexpr int kVectors = 10000;
  for (int t = 0; t < kVectors; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<PureState> f;
    for (int q = 0; q < n; ++q) {
      // Both amplitudes bounded away from zero keeps the support full.
      Amplitude a0, a1;
      do {
        a0 = rng.complex_gaussian();
        a1 = rng.complex_gaussian();
      } while (std::abs(a0) < 1e-3 || std::abs(a1) < 1e-3);
      const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
      f.push_back(PureState::make(1, {a0 / norm, a1 / norm}));
    }
    const auto s = tensor(std::span<const PureState>(f));
    const auto v = s.amplitudes();
    for (std::size_t i = 1; i + 1 <= v.size() / 2; ++i) {
      // alpha_{2i-1} alpha_{2i} = alpha_{2i-2} alpha_{2i+1}
      const Amplitude lhs = v[2 * i - 1] * v[2 * i];
      const Amplitude rhs = v[2 * i - 2] * v[2 * i + 1];
      const double err = std::abs(lhs - rhs);
      worst = std::max(worst, err);
      if (err > 1e-9) ++failures;
    }
  }
  o.pass = failures == 0;
  o.detail = fmt("%d product vectors, max deviation %.2e, %llu violations", kVectors, worst,
                 static_cast<unsigned long long>(failures));
  return o;
}

Outcome counters() {
  Outcome o;
  std::uint64_t full_cases = 0, wf_cases = 0;
  for (int n = 1; n <= 16; ++n) {
    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto s = random_structured_state(ones, seed);
      const auto r = is_fully_separable(s);
      const std::uint64_t K = s.size();
      ++full_cases;
      if (!r.separable || r.counters.pair_comparisons != K - static_cast<std::uint64_t>(n) - 1 ||
          r.counters.products > K) {
        o.pass = false;
        o.detail += fmt("n=%d: %llu comparisons, %llu products; ", n,
                        static_cast<unsigned long long>(r.counters.pair_comparisons),
                        static_cast<unsigned long long>(r.counters.products));
      }
    }
  }
  Prng rng(99);
  auto check_wf = [&](const SupportMask& m, std::uint64_t comparisons) {
    ++wf_cases;
    const double z = static_cast<double>(m.size() - m.popcount());
    const double bound = z + (z > 0 ? 4.0 * std::log2(z) : 0.0) + 8.0;
    if (static_cast<double>(comparisons) > bound) {
      o.pass = false;
      o.detail += fmt("|z|=%.0f: %llu comparisons > %.1f; ", z, static_cast<unsigned long long>(comparisons), bound);
    }
  };
  for (int n = 1; n <= 14; ++n) {
    for (int t = 0; t < 40; ++t) {
      const SupportMask m = t % 2 == 0 ? testing::random_well_formed_mask(n, rng)
                                       : testing::random_nonempty_mask(std::size_t{1} << n, rng.uniform(), rng);
      const auto zeros = m.zero_indices();
      check_wf(m, check_well_formed(zeros, m.size()).comparisons);
    }
    // Through the full check as well, on states carrying these zero patterns.
    for (int t = 0; t < 5; ++t) {
      const SupportMask m = testing::random_well_formed_mask(n, rng);
      const auto s = random_block_state(n, rng, &m);
      check_wf(m, is_fully_separable(s).counters.wf_comparisons);
    }
  }
  o.detail += fmt("%llu full-support states, %llu zero patterns", static_cast<unsigned long long>(full_cases),
                  static_cast<unsigned long long>(wf_cases));
  return o;
}

Outcome scaling() {
  const auto start = clock_type::now();
  Outcome o;
  constexpr int kReps = 5;
  const auto small = bench::check_full(18, kReps);
  const auto large = bench::check_full(22, kReps);
  const double ratio = large.mean_ns / small.mean_ns;
  const double t = seconds_since(start);
  o.pass = ratio >= 8.0 && ratio <= 48.0 && t < 120.0;
  o.detail = fmt("n=18 %.2fms, n=22 %.2fms, ratio %.1f, %.1fs", small.mean_ns / 1e6, large.mean_ns / 1e6, ratio, t);
  return o;
}

std::vector<std::vector<int>> proper_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
    std::vector<int> s;
    for (int q = 0; q < n; ++q) {
      if ((bits >> q) & 1U) s.push_back(q);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Outcome named_panel() {
  Outcome o;
  std::uint64_t checks = 0;
  auto fail = [&](const std::string& what) {
    o.pass = false;
    o.detail += what + "; ";
  };
  for (int n = 3; n <= 8; ++n) {
    for (const auto& [name, s] : {std::pair{"GHZ", ghz_state(n)}, std::pair{"W", w_state(n)}}) {
      ++checks;
      if (is_fully_separable(s).separable) fail(std::string(name) + std::to_string(n) + " fully separable");
      for (int p = 1; p < n; ++p) {
        ++checks;
        if (is_pq_separable(s, p).separable) fail(std::string(name) + std::to_string(n) + " split p=" + std::to_string(p));
      }
      if (n <= 6) {
        for (const auto& subset : proper_subsets(n)) {
          ++checks;
          if (is_pq_separable_subset(s, subset).separable) fail(std::string(name) + std::to_string(n) + " subset");
        }
      }
    }
  }
  const auto bell_zero = tensor(bell_state(), basis_state(1, 0));
  checks += 2;
  if (!is_pq_separable(bell_zero, 2).separable) fail("Bell x |0> not 2-1 separable");
  if (is_pq_separable(bell_zero, 1).separable) fail("Bell x |0> 1-2 separable");

  Prng rng(2024);
  int recovered = 0;
  constexpr int kTrees = 200;
  for (int t = 0; t < kTrees; ++t) {
    const int n = 1 + static_cast<int>(rng.below(10));
    std::vector<std::vector<int>> planted;
    const auto s = testing::planted_state(n, rng, planted);
    const auto tree = decompose(s);
    std::vector<std::vector<int>> found;
    for (const auto& b : tree.blocks) found.push_back(b.qubits);
    std::sort(found.begin(), found.end());
    if (found == planted && max_abs_diff(reconstruct(tree).amplitudes(), s.amplitudes()) < 1e-9) {
      ++recovered;
    } else {
      fail("planted tree " + std::to_string(t) + " (n=" + std::to_string(n) + ") not recovered");
    }
  }
  o.detail += fmt("%llu named-state checks, %d/%d planted trees recovered", static_cast<unsigned long long>(checks),
                  recovered, kTrees);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"C1 counting law", counting_law},
      {"C2 full separability vs oracle", oracle_full},
      {"C3 p-q separability vs oracle", oracle_pq},
      {"C4 constructive round-trips", round_trips},
      {"C5 adjacent pair products of product vectors", adjacent_pairs},
      {"C6 complexity counters", counters},
      {"C7 linear scaling of check-full", scaling},
      {"C8 named-state panel", named_panel},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
