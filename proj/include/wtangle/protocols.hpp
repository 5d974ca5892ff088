#pragma once

// Teleportation and superdense coding over GHZ and W_n resources.
//
// Teleportation joint system: (a, 1, 2, 3) with the input qubit `a` most
// significant. Alice measures (a, 1, 2); Bob holds qubit 3.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wtangle/qcore.hpp"
#include "wtangle/rng.hpp"
#include "wtangle/states.hpp"

namespace wtangle::protocols {

using qcore::Complex;
using qcore::MeasurementBasis;
using qcore::StateVector;
using states::WParams;

// Raised when a run cannot complete: missing correction entries, or a
// decoder landing on a completion filler.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corrections are phase-free Paulis; Y is sigma_2 even where i*sigma_2 would
// be exact, since teleported states are compared up to global phase.
enum class Pauli { I, X, Y, Z };

std::string_view to_string(Pauli p);
qcore::Operator pauli_operator(Pauli p);
// i * sigma_2, the encoding operator used in dense coding.
qcore::Operator i_sigma2();

struct InputQubit {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  // Throws qcore::QuantumError unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  void validate() const;
  StateVector state() const;
  // Haar-random pure qubit: |alpha|^2 uniform on [0,1), relative phase uniform.
  static InputQubit random(Rng& rng);
};

using CorrectionTable = std::map<std::string, Pauli>;

CorrectionTable ghz_correction_table();  // psi1+ I, psi1- Z, psi2+ X, psi2- Y
CorrectionTable w_correction_table();    // eta+ I, eta- Z, xi+ X, xi- Y

struct TeleportSetup {
  std::string resource_name;
  StateVector resource;
  MeasurementBasis basis;
  CorrectionTable table;
  std::optional<WParams> params;
};

TeleportSetup ghz_setup();
TeleportSetup w_setup(const WParams& p);
// Prototype W resource measured in the W_1 basis with the W correction table.
// The pairing is mismatched on purpose.
TeleportSetup prototype_w_setup();

struct TeleportTrace {
  std::string resource_name;
  std::optional<WParams> params;
  InputQubit input;
  std::string outcome_label;
  std::size_t outcome_index = 0;
  double outcome_probability = 0.0;
  // Two-bit code of the labeled outcome (its position among the labeled
  // vectors: 0 -> "00" ... 3 -> "11"); empty for filler outcomes.
  std::optional<unsigned> classical_bits;
  Pauli correction = Pauli::I;
  double fidelity = 0.0;
  std::uint64_t seed = 0;
  bool aux_outcome = false;
  // Probabilities of the labeled outcomes and total filler mass for this input.
  std::vector<double> labeled_probabilities;
  double aux_probability = 0.0;
  StateVector bob_state = StateVector::basis(1, 0);
};

std::string bits_string(unsigned code);

TeleportTrace teleport(const TeleportSetup& setup, const InputQubit& input, Rng& rng);
TeleportTrace teleport(const StateVector& resource, const MeasurementBasis& basis,
                       const CorrectionTable& table, const InputQubit& input, Rng& rng);
TeleportTrace w_teleport(const WParams& p, const InputQubit& input, Rng& rng);
TeleportTrace ghz_teleport(const InputQubit& input, Rng& rng);

// |<a|b>|^2 for single-qubit states.
double fidelity(const StateVector& a, const StateVector& b);

// ---------------------------------------------------------------- dense coding

enum class DenseScheme { Bell2, Wn2, GHZ2, GHZ3 };

std::string_view to_string(DenseScheme s);
int message_bits(DenseScheme s);
int qubits_sent(DenseScheme s);
// Alice's qubits in the shared state before encoding.
std::vector<int> alice_qubits(DenseScheme s);

// Bell: (|00>+|11>)/sqrt(2); Wn2: eta+_n; GHZ2/GHZ3: psi1+.
StateVector shared_state(DenseScheme s, const WParams& p = {});
MeasurementBasis decode_basis(DenseScheme s, const WParams& p = {});
// Basis label that message m encodes to.
std::string message_label(DenseScheme s, int message);

// Messages 0..3 apply I, sigma_1, i sigma_2, sigma_3 to Alice's first qubit.
// GHZ3 adds 4: I(x)s1, 5: I(x)is2, 6: s1(x)s1, 7: s1(x)is2 on qubits (1, 2).
StateVector sdc_encode(DenseScheme s, int message, const StateVector& shared);
// Projective measurement in decode_basis; returns the message of the outcome.
int sdc_decode(DenseScheme s, const StateVector& received, const WParams& p, Rng& rng);

struct DenseCodeTrace {
  DenseScheme scheme = DenseScheme::GHZ2;
  std::optional<WParams> params;
  int message = 0;
  std::string encoded_label;
  int decoded = 0;
  int qubits_sent = 1;
  double ebits_used = 0.0;
  std::uint64_t seed = 0;
};

DenseCodeTrace dense_code(DenseScheme s, int message, const WParams& p, Rng& rng);

// Von Neumann entropy (bits) of the reduction onto Alice's qubits.
double resource_accounting(const StateVector& resource, std::span<const int> alice_qubits);
inline double resource_accounting(const StateVector& resource, std::initializer_list<int> alice) {
  return resource_accounting(resource, std::span<const int>(alice.begin(), alice.size()));
}

// ---------------------------------------------------------------- negative control

struct FailureDemoReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // Prototype W with the W_1 pairing, sampled outcomes.
  double mismatched_mean_fidelity = 0.0;
  double mismatched_min_fidelity = 1.0;
  // Outcome-averaged fidelity sum_i p_i F_i, averaged over inputs.
  double mismatched_mean_expected_fidelity = 0.0;
  double max_aux_probability = 0.0;
  // Same inputs with the matched W_1 resource.
  double matched_mean_fidelity = 0.0;
  double matched_min_fidelity = 1.0;
};

// Trial k uses Rng(seed).split(k) for both its input and its measurement.
FailureDemoReport prototype_w_failure_demo(std::size_t trials = 1000, std::uint64_t seed = 42);

}  // namespace wtangle::protocols
