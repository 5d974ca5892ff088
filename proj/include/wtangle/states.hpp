#pragma once

// Named three-qubit states and the measurement bases paired with them.
//
// Basis vectors are addressed with the same ket labels as the states: a
// vector on qubits (a, 1, 2) written |xyz> has x on the first qubit of the
// measured subset.

#include <span>
#include <string>
#include <vector>

#include "wtangle/qcore.hpp"

namespace wtangle::states {

using qcore::MeasurementBasis;
using qcore::StateVector;

// Parameters of the W_n family
//   (|100> + sqrt(n) e^{i gamma} |010> + sqrt(n+1) e^{i delta} |001>) / sqrt(2+2n).
struct WParams {
  double n = 1.0;
  double gamma = 0.0;
  double delta = 0.0;

  // Throws qcore::QuantumError unless n >= 0 and every field is finite.
  void validate() const;
};

// Fixed label strings shared by correction tables, decoders and JSON output.
namespace labels {
inline constexpr const char* kEtaPlus = "eta+";
inline constexpr const char* kEtaMinus = "eta-";
inline constexpr const char* kXiPlus = "xi+";
inline constexpr const char* kXiMinus = "xi-";
inline constexpr const char* kPsi1Plus = "psi1+";
inline constexpr const char* kPsi1Minus = "psi1-";
inline constexpr const char* kPsi2Plus = "psi2+";
inline constexpr const char* kPsi2Minus = "psi2-";
inline constexpr const char* kPsi3Plus = "psi3+";
inline constexpr const char* kPsi3Minus = "psi3-";
inline constexpr const char* kPsi4Plus = "psi4+";
inline constexpr const char* kPsi4Minus = "psi4-";
std::string aux(std::size_t k);
}  // namespace labels

StateVector make_ghz();
StateVector make_w_prototype();
StateVector make_w_n(const WParams& p);

// GHZ-family vectors (|x> +- |~x>)/sqrt(2). k in 1..4 selects the pair
// psi_1 = 000/111, psi_2 = 100/011, psi_3 = 010/101, psi_4 = 110/001.
StateVector make_psi(int k, bool plus);
// eta^{+-}_n and xi^{+-}_n.
StateVector make_eta(const WParams& p, bool plus);
StateVector make_xi(const WParams& p, bool plus);

// psi1+-, psi2+- on qubits {0,1,2}, completed to 8 vectors.
MeasurementBasis ghz_teleport_basis();
// psi1+- .. psi4+-: a full basis with no filler.
MeasurementBasis ghz_dense8_basis();
// eta+-, xi+- on qubits {0,1,2}, completed to 8 vectors.
MeasurementBasis w_teleport_basis(const WParams& p);

// Completes an orthonormal partial basis with modified Gram-Schmidt over the
// computational kets in index order. Candidates whose residual norm falls
// below 1e-8 are dropped. Labeled vectors keep their order and come first;
// fillers are labeled aux_0, aux_1, ...
MeasurementBasis complete_basis(MeasurementBasis partial);

struct OrthonormalityReport {
  double max_deviation = 0.0;
  bool pass = false;
};
OrthonormalityReport check_orthonormal(std::span<const StateVector> vectors, double tol);
OrthonormalityReport check_orthonormal(const MeasurementBasis& basis, double tol);

}  // namespace wtangle::states
