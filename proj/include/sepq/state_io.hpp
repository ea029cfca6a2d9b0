#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sepq/state.hpp"

namespace sepq::io {

// {"n": <int>, "amplitudes": [[re, im], ...]} with exactly 2^n pairs.
PureState parse_state(std::string_view text);
PureState read_state_file(const std::filesystem::path& path);

// Canonical form: one amplitude per line, shortest round-trip decimals.
std::string format_state(const PureState& state);
void write_state_file(const std::filesystem::path& path, const PureState& state);

}  // namespace sepq::io
