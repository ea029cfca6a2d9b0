#include "sepq/report.hpp"

#include <cmath>

namespace sepq::report {

using nlohmann::json;

namespace {

json complex_json(Amplitude a) { return json::array({a.real(), a.imag()}); }

json pair_witness_json(const PairProductWitness& w) {
  return {{"kind", "pair_product"},
          {"level", w.level},
          {"pair", {w.i, w.length - w.i - 1}},
          {"reference_pair", {0, w.length - 1}},
          {"product", complex_json(w.lhs)},
          {"reference_product", complex_json(w.rhs)}};
}

}  // namespace

void to_json(json& j, const InputDigest& d) { j = {{"n", d.n}, {"norm", d.norm}, {"popcount", d.popcount}}; }

void from_json(const json& j, InputDigest& d) {
  j.at("n").get_to(d.n);
  j.at("norm").get_to(d.norm);
  j.at("popcount").get_to(d.popcount);
}

void to_json(json& j, const Tolerances& t) {
  j = {{"tol_zero", t.tol_zero}, {"tol_pp", t.tol_pp}, {"tol_rank", t.tol_rank}};
}

void from_json(const json& j, Tolerances& t) {
  j.at("tol_zero").get_to(t.tol_zero);
  j.at("tol_pp").get_to(t.tol_pp);
  j.at("tol_rank").get_to(t.tol_rank);
}

void to_json(json& j, const Report& r) {
  j = json::object();
  j["command"] = r.command;
  j["arguments"] = r.arguments;
  if (r.input) j["input"] = *r.input;
  j["tolerances"] = r.tolerances;
  j["result"] = r.result;
  j["counters"] = r.counters;
  if (r.verify) j["verify"] = *r.verify;
  j["timing_ns"] = r.timing_ns;
}

void from_json(const json& j, Report& r) {
  j.at("command").get_to(r.command);
  r.arguments = j.at("arguments");
  if (j.contains("input")) {
    r.input = j.at("input").get<InputDigest>();
  } else {
    r.input.reset();
  }
  j.at("tolerances").get_to(r.tolerances);
  r.result = j.at("result");
  r.counters = j.at("counters");
  if (j.contains("verify")) {
    r.verify = j.at("verify");
  } else {
    r.verify.reset();
  }
  j.at("timing_ns").get_to(r.timing_ns);
}

json amplitudes_json(std::span<const Amplitude> amplitudes) {
  json out = json::array();
  for (const auto& a : amplitudes) out.push_back(complex_json(a));
  return out;
}

json to_json(const FullSepReport& report) {
  json j = {{"separable", report.separable}, {"reason", std::string(to_string(report.reason))}};
  if (report.witness) {
    j["witness"] = std::visit(
        [](const auto& w) -> json {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, MaskWitness>) {
            return {{"kind", "mask"},
                    {"popcount", w.popcount},
                    {"failed_length", w.failed_length},
                    {"failed_offset", w.failed_offset}};
          } else if constexpr (std::is_same_v<W, PairProductWitness>) {
            return pair_witness_json(w);
          } else {
            return {{"kind", "proportionality"}, {"qubit", w.qubit}, {"index", w.index}};
          }
        },
        *report.witness);
  }
  if (report.factors) {
    json factors = json::array();
    for (const auto& f : *report.factors) factors.push_back({complex_json(f.amp0), complex_json(f.amp1)});
    j["factors"] = std::move(factors);
  }
  return j;
}

json to_json(const PqReport& report) {
  json j = {{"separable", report.separable}, {"p", report.p}, {"q", report.q}};
  if (report.pivot) j["pivot"] = {{"i0", report.pivot->i0}, {"k0", report.pivot->k0}, {"r0", report.pivot->r0}};
  if (report.permutation) {
    j["permutation"] = std::vector<int>(report.permutation->values().begin(), report.permutation->values().end());
  }
  if (report.witness) {
    j["witness"] = std::visit(
        [](const auto& w) -> json {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, CrossProductWitness>) {
            return {{"kind", "cross_product"},
                    {"k", w.k},
                    {"r", w.r},
                    {"product", complex_json(w.lhs)},
                    {"cross_product", complex_json(w.rhs)}};
          } else if constexpr (std::is_same_v<W, ZeroPatternWitness>) {
            return {{"kind", "zero_pattern"}, {"k", w.k}, {"r", w.r}, {"magnitude", w.magnitude}};
          } else {
            return {{"kind", "reconstruction"}, {"index", w.index}, {"error", w.error}};
          }
        },
        *report.witness);
  }
  if (report.factors) {
    j["factors"] = {{"left", amplitudes_json(report.factors->first.amplitudes())},
                    {"right", amplitudes_json(report.factors->second.amplitudes())}};
  }
  return j;
}

json to_json(const FactorTree& tree) {
  json blocks = json::array();
  for (const auto& b : tree.blocks) {
    blocks.push_back({{"qubits", b.qubits}, {"amplitudes", amplitudes_json(b.state.amplitudes())}});
  }
  return {{"blocks", std::move(blocks)},
          {"permutation", std::vector<int>(tree.permutation.values().begin(), tree.permutation.values().end())}};
}

InputDigest digest(const PureState& state, double tol_zero) {
  return {state.qubits(), std::sqrt(state.norm_squared()), amplitude_abstraction(state, tol_zero).popcount()};
}

}  // namespace sepq::report
