#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "sepq/error.hpp"
#include "sepq/random.hpp"
#include "sepq/report.hpp"
#include "sepq/state_io.hpp"

using namespace sepq;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    io::parse_state(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse failure for " << text);
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("state files parse", "[io]") {
  const auto s = io::parse_state(R"({"n": 1, "amplitudes": [[0.6, 0], [0, 0.8]]})");
  CHECK(s.qubits() == 1);
  CHECK(s[0] == Amplitude{0.6, 0.0});
  CHECK(s[1] == Amplitude{0.0, 0.8});

  const auto t = io::parse_state(R"({"amplitudes": [[1, 0], [0, 0]], "n": 1, "comment": "extra keys are ignored"})");
  CHECK(t[0] == Amplitude{1.0});
}

TEST_CASE("malformed state files are rejected with the right kind", "[io]") {
  CHECK(parse_error_kind("not json") == ErrorKind::Parse);
  CHECK(parse_error_kind(R"({"n": 1})") == ErrorKind::Parse);
  CHECK(parse_error_kind(R"({"n": 1.5, "amplitudes": []})") == ErrorKind::Parse);
  CHECK(parse_error_kind(R"({"n": 1, "amplitudes": [[1, 0], [0]]})") == ErrorKind::Parse);
  CHECK(parse_error_kind(R"({"n": 1, "amplitudes": [[1, 0], ["0", 0]]})") == ErrorKind::Parse);
  CHECK(parse_error_kind(R"({"n": 2, "amplitudes": [[1, 0], [0, 0], [0, 0]]})") == ErrorKind::LengthMismatch);
  CHECK(parse_error_kind(R"({"n": 1, "amplitudes": [[1, 0], [1, 0]]})") == ErrorKind::NotNormalized);
  CHECK(parse_error_kind(R"({"n": 0, "amplitudes": [[1, 0]]})") == ErrorKind::LengthMismatch);
}

TEST_CASE("formatted states round-trip exactly", "[io][property]") {
  Prng rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto s = random_block_state(n, rng);
    const auto text = io::format_state(s);
    CHECK(io::parse_state(text) == s);
    CHECK(io::format_state(io::parse_state(text)) == text);
  }
}

TEST_CASE("reports round-trip through JSON", "[report][property]") {
  Prng rng(65);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const auto s = random_block_state(n, rng);
    report::Report r;
    r.command = "check-pq";
    r.arguments = {{"file", "x.json"}, {"p", 1}};
    r.input = report::digest(s, kTolZero);
    r.tolerances = {1e-12, 1e-9 * (1 + trial), 1e-9};
    r.result = report::to_json(is_pq_separable(s, 1));
    r.counters = {{"cross_comparisons", trial}};
    if (trial % 2) r.verify = nlohmann::json{{"agrees", true}};
    r.timing_ns = 1000 + trial;

    const auto text = nlohmann::json(r).dump();
    const auto back = nlohmann::json::parse(text).get<report::Report>();
    CHECK(back == r);
    CHECK(nlohmann::json(back).dump() == text);
  }
}

TEST_CASE("report payloads name their witnesses", "[report]") {
  const auto full = report::to_json(is_fully_separable(ghz_state(3)));
  CHECK(full["reason"] == "WellFormednessFailed");
  CHECK(full["witness"]["kind"] == "mask");
  CHECK_FALSE(full.contains("factors"));

  const auto pp = report::to_json(is_fully_separable(make_state(2, {0.5, 0.5, 0.5, -0.5})));
  CHECK(pp["witness"]["kind"] == "pair_product");
  CHECK(pp["witness"]["pair"] == nlohmann::json::array({1, 2}));

  const auto pq = report::to_json(is_pq_separable(tensor(bell_state(), basis_state(1, 0)), 1));
  CHECK(pq["witness"]["kind"] == "cross_product");
  CHECK(pq["witness"]["k"] == 1);
  CHECK(pq["witness"]["r"] == 2);

  const auto tree = report::to_json(decompose(ghz_state(3)));
  CHECK(tree["blocks"].size() == 1);
}
