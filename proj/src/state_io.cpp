#include "sepq/state_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sepq/error.hpp"

namespace sepq::io {

namespace {

constexpr int kMaxFileQubits = 30;

}  // namespace

PureState parse_state(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes")) {
    throw Error(ErrorKind::Parse, "expected an object with \"n\" and \"amplitudes\"");
  }
  const auto& n_field = doc["n"];
  if (!n_field.is_number_integer()) throw Error(ErrorKind::Parse, "\"n\" must be an integer");
  const auto n = n_field.get<std::int64_t>();
  if (n < 1 || n > kMaxFileQubits) throw Error(ErrorKind::LengthMismatch, "\"n\" out of range");

  const auto& list = doc["amplitudes"];
  if (!list.is_array()) throw Error(ErrorKind::Parse, "\"amplitudes\" must be an array");
  std::vector<Amplitude> amps;
  amps.reserve(list.size());
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(ErrorKind::Parse, "each amplitude must be a [re, im] pair of numbers");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return PureState::make(static_cast<int>(n), std::move(amps));
}

PureState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

std::string format_state(const PureState& state) {
  std::string out = "{\n  \"n\": " + std::to_string(state.qubits()) + ",\n  \"amplitudes\": [\n";
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out += "    [" + nlohmann::json(amps[i].real()).dump() + ", " + nlohmann::json(amps[i].imag()).dump() + "]";
    out += i + 1 < amps.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_state_file(const std::filesystem::path& path, const PureState& state) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
  out << format_state(state);
}

}  // namespace sepq::io
