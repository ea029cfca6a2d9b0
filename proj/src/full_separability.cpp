#include "sepq/full_separability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sepq/error.hpp"

namespace sepq {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// A sublist of the zero list whose stored values are offset by `base`.
// low/high splits never copy; high[] subtracts m by bumping the base.
struct ZeroRun {
  std::span<const std::uint64_t> values;
  std::uint64_t base = 0;

  std::size_t size() const { return values.size(); }
  std::uint64_t at(std::size_t i) const { return values[i] - base; }
};

std::pair<ZeroRun, ZeroRun> split(const ZeroRun& run, std::uint64_t m) {
  const auto cut = std::partition_point(run.values.begin(), run.values.end(),
                                        [&](std::uint64_t v) { return v - run.base < m; });
  const auto idx = static_cast<std::size_t>(cut - run.values.begin());
  return {ZeroRun{run.values.first(idx), run.base}, ZeroRun{run.values.subspan(idx), run.base + m}};
}

}  // namespace

WellFormedness check_well_formed(std::span<const std::uint64_t> zeros, std::size_t length) {
  if (length < 2 || !is_power_of_two(length)) {
    throw Error(ErrorKind::BadLength, "mask length " + std::to_string(length) + " is not a power of two >= 2");
  }
  WellFormedness out;
  auto fail = [&](std::size_t n, std::uint64_t offset) {
    out.well_formed = false;
    out.failed_length = n;
    out.failed_offset = offset;
    return out;
  };
  if (zeros.size() >= length) return fail(length, 0);  // no amplitude survives

  std::uint64_t n = length;
  std::uint64_t offset = 0;
  auto [low, high] = split(ZeroRun{zeros, 0}, n / 2);
  for (;;) {
    if (n == 2) break;
    ++out.comparisons;
    if (low.size() == 0 && high.size() == 0) break;  // both halves all ones

    const std::uint64_t half = n / 2;
    ZeroRun next;
    ++out.comparisons;
    if (low.size() > high.size()) {
      ++out.comparisons;
      if (low.size() != half) return fail(n, offset);
      next = high;
      offset += half;
    } else {
      ++out.comparisons;
      if (low.size() < high.size()) {
        ++out.comparisons;
        if (high.size() != half) return fail(n, offset);
        next = low;
      } else {
        for (std::size_t i = 0; i < low.size(); ++i) {
          ++out.comparisons;
          if (low.at(i) != high.at(i)) return fail(n, offset);
        }
        next = low;
      }
    }
    n = half;
    std::tie(low, high) = split(next, n / 2);
  }
  out.well_formed = true;
  return out;
}

bool is_well_formed_mask(const SupportMask& mask) {
  const auto zeros = mask.zero_indices();
  return check_well_formed(zeros, mask.size()).well_formed;
}

std::vector<SupportMask> enumerate_well_formed(int qubits) {
  if (qubits < 1) throw Error(ErrorKind::BadLength, "need at least one qubit");
  if (qubits > kMaxEnumerateQubits) {
    throw Error(ErrorKind::TooLarge, std::to_string(qubits) + " qubits exceeds the enumeration limit of " +
                                         std::to_string(kMaxEnumerateQubits));
  }
  // Strings of '0'/'1' concatenate and compare much faster than vector<bool>.
  std::vector<std::string> level = {"01", "10", "11"};
  for (int m = 1; m < qubits; ++m) {
    std::vector<std::string> next;
    next.reserve(level.size() * 3);
    for (const auto& x : level) {
      const std::string zeros(x.size(), '0');
      next.push_back(zeros + x);
      next.push_back(x + zeros);
      next.push_back(x + x);
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());

  std::vector<SupportMask> out;
  out.reserve(level.size());
  for (const auto& bits : level) out.push_back(SupportMask::from_string(bits));
  return out;
}

std::vector<Amplitude> zero_deletion(const PureState& state, const SupportMask& mask) {
  if (mask.size() != state.size()) throw Error(ErrorKind::LengthMismatch, "mask and state differ in length");
  if (mask.popcount() < 2) {
    throw Error(ErrorKind::TooFewNonzero, "zero deletion needs at least 2 nonzero amplitudes, got " +
                                              std::to_string(mask.popcount()));
  }
  std::vector<Amplitude> out;
  out.reserve(mask.popcount());
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (mask.test(i)) out.push_back(amps[i]);
  return out;
}

bool products_equal(Amplitude lhs, Amplitude rhs, double tol) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= tol * scale;
}

PairProductResult pair_product_invariant(std::span<const Amplitude> v, double tol_pp) {
  const std::size_t size = v.size();
  if (size < 2 || !is_power_of_two(size)) {
    throw Error(ErrorKind::BadLength, "pair product test needs a power-of-two length >= 2, got " +
                                          std::to_string(size));
  }
  PairProductResult out;
  const int k = std::countr_zero(size);
  // Level 1 (L = 2) has a single product and nothing to compare.
  for (int l = 2; l <= k; ++l) {
    const std::size_t len = std::size_t{1} << l;
    const Amplitude ref = v[0] * v[len - 1];
    ++out.products;
    for (std::size_t i = 1; i < len / 2; ++i) {
      const Amplitude lhs = v[i] * v[len - i - 1];
      ++out.products;
      ++out.comparisons;
      if (!products_equal(lhs, ref, tol_pp)) {
        out.witness = PairProductWitness{l, i, len, lhs, ref};
        return out;
      }
    }
  }
  out.invariant = true;
  return out;
}

std::string_view to_string(FullSepReason reason) {
  switch (reason) {
    case FullSepReason::WellFormednessFailed: return "WellFormednessFailed";
    case FullSepReason::PairProductFailed: return "PairProductFailed";
    case FullSepReason::Separable: return "Separable";
    case FullSepReason::TrivialBasisState: return "TrivialBasisState";
  }
  return "Unknown";
}

namespace {

// Thrown internally by the peeling loop; converted to a report or an Error.
struct NotProportional {
  ProportionalityWitness witness;
};

std::vector<QubitFactor> peel_factors(const PureState& state, double tol_zero, double tol_pp) {
  const int n = state.qubits();
  std::vector<QubitFactor> factors;
  factors.reserve(static_cast<std::size_t>(n));
  std::vector<Amplitude> cur(state.amplitudes().begin(), state.amplitudes().end());

  auto is_zero = [&](Amplitude a) { return std::abs(a) <= tol_zero; };

  for (int q = 0; q + 1 < n; ++q) {
    const std::size_t half = cur.size() / 2;
    const std::span<const Amplitude> a(cur.data(), half);
    const std::span<const Amplitude> b(cur.data() + half, half);
    const bool a_zero = std::all_of(a.begin(), a.end(), is_zero);
    const bool b_zero = std::all_of(b.begin(), b.end(), is_zero);

    std::vector<Amplitude> quotient;
    if (a_zero && b_zero) {
      throw NotProportional{{q, 0}};
    } else if (a_zero) {
      factors.push_back({0.0, 1.0});
      quotient.assign(b.begin(), b.end());
    } else if (b_zero) {
      factors.push_back({1.0, 0.0});
      quotient.assign(a.begin(), a.end());
    } else {
      const auto j = static_cast<std::size_t>(std::find_if_not(a.begin(), a.end(), is_zero) - a.begin());
      const Amplitude lambda = b[j] / a[j];
      for (std::size_t i = 0; i < half; ++i) {
        if (is_zero(a[i]) != is_zero(b[i]) || !products_equal(b[i] * a[j], a[i] * b[j], tol_pp)) {
          throw NotProportional{{q, i}};
        }
      }
      const double d0 = 1.0 / std::sqrt(1.0 + std::norm(lambda));
      const Amplitude d1 = lambda * d0;
      factors.push_back({d0, d1});
      // Projection onto (d0, d1): equals a / d0 for an exact product.
      quotient.resize(half);
      for (std::size_t i = 0; i < half; ++i) quotient[i] = d0 * a[i] + std::conj(d1) * b[i];
    }
    cur = std::move(quotient);
  }

  // cur is the last qubit with every leftover phase; move the phase to qubit 0.
  if (n == 1) {
    factors.push_back({cur[0], cur[1]});
    return factors;
  }
  const Amplitude lead = is_zero(cur[0]) ? cur[1] : cur[0];
  const Amplitude phase = lead / std::abs(lead);
  QubitFactor last{cur[0] / phase, cur[1] / phase};
  (is_zero(cur[0]) ? last.amp1 : last.amp0) = std::abs(lead);
  factors.push_back(last);
  factors.front().amp0 *= phase;
  factors.front().amp1 *= phase;
  return factors;
}

}  // namespace

std::vector<QubitFactor> extract_qubit_factors(const PureState& state, double tol_zero, double tol_pp) {
  try {
    return peel_factors(state, tol_zero, tol_pp);
  } catch (const NotProportional& e) {
    throw Error(ErrorKind::NotSeparable, "halves not proportional when peeling qubit " +
                                             std::to_string(e.witness.qubit) + " at offset " +
                                             std::to_string(e.witness.index));
  }
}

FullSepReport is_fully_separable(const PureState& state, double tol_zero, double tol_pp) {
  FullSepReport report;
  const SupportMask mask = amplitude_abstraction(state, tol_zero);
  const std::size_t popcount = mask.popcount();
  report.counters.zeros = mask.size() - popcount;

  if (popcount == 1) {
    const auto index = static_cast<std::uint64_t>(
        std::find(mask.bits().begin(), mask.bits().end(), true) - mask.bits().begin());
    const int n = state.qubits();
    std::vector<QubitFactor> factors;
    for (int q = 0; q < n; ++q) {
      const bool one = (index >> (n - 1 - q)) & 1U;
      factors.push_back(one ? QubitFactor{0.0, 1.0} : QubitFactor{1.0, 0.0});
    }
    const Amplitude phase = state[index] / std::abs(state[index]);
    factors.front().amp0 *= phase;
    factors.front().amp1 *= phase;
    report.separable = true;
    report.reason = FullSepReason::TrivialBasisState;
    report.factors = std::move(factors);
    return report;
  }

  if (!is_power_of_two(popcount)) {
    report.reason = FullSepReason::WellFormednessFailed;
    report.witness = MaskWitness{popcount, mask.size(), 0};
    return report;
  }

  const auto zeros = mask.zero_indices();
  const WellFormedness wf = check_well_formed(zeros, mask.size());
  report.counters.wf_comparisons = wf.comparisons;
  if (!wf.well_formed) {
    report.reason = FullSepReason::WellFormednessFailed;
    report.witness = MaskWitness{popcount, wf.failed_length, wf.failed_offset};
    return report;
  }

  const auto reduced = zero_deletion(state, mask);
  const PairProductResult pp = pair_product_invariant(reduced, tol_pp);
  report.counters.pair_comparisons = pp.comparisons;
  report.counters.products = pp.products;
  if (!pp.invariant) {
    report.reason = FullSepReason::PairProductFailed;
    report.witness = *pp.witness;
    return report;
  }

  try {
    report.factors = peel_factors(state, tol_zero, tol_pp);
  } catch (const NotProportional& e) {
    // Only reachable when tolerances disagree at the margin.
    report.reason = FullSepReason::PairProductFailed;
    report.witness = e.witness;
    return report;
  }
  report.separable = true;
  report.reason = FullSepReason::Separable;
  return report;
}

}  // namespace sepq
