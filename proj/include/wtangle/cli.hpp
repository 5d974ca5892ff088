#pragma once

// Command-line front end: teleport, densecode, analyze, bases.
//
// Exit codes: 0 success, 1 protocol/verification failure, 2 usage or parse
// error. With --json a report carrying "schema": "wtangle/1" and a "status"
// field is written to `out`, also on failure.

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wtangle/qcore.hpp"

namespace wtangle::cli {

inline constexpr const char* kSchema = "wtangle/1";

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "re", "re+imi", "re-imi", "imi" (also "i", "-i").
std::optional<std::complex<double>> parse_complex(std::string_view text);

struct LoadedState {
  std::string description;
  qcore::StateVector state;
  bool renormalized = false;
};

// A preset name ("ghz", "w", "w1", "wn(n,gamma,delta)") or the path of a JSON
// file holding {"preset": ...} or {"amps": [[re, im] x 8]}. Amplitude lists off
// unit norm by at most 1e-6 are renormalized; anything else throws
// qcore::QuantumError.
LoadedState load_state(const std::string& spec);

}  // namespace wtangle::cli
