#pragma once

// Entanglement measures for pure three-qubit states and SLOCC classification.
//
// Qubits are 0-based as in qcore. Reports label pairs and cuts with the
// 1-based names used in the literature ("12", "1|23").

#include <map>
#include <string>
#include <string_view>

#include "wtangle/qcore.hpp"

namespace wtangle::entanglement {

using qcore::DensityMatrix;
using qcore::StateVector;

inline constexpr double kDefaultClassifyTol = 1e-9;
// Measures within this distance below zero are roundoff and clamp to zero.
inline constexpr double kClampTol = 1e-10;

enum class SloccClass { Product, Biseparable, WClass, GHZClass };

std::string_view to_string(SloccClass c);

struct EntanglementReport {
  std::map<std::string, double> entropy_bits_per_cut;  // "1|23", "2|13", "3|12"
  std::map<std::string, double> concurrence_pairs;     // "12", "13", "23"
  double concurrence_1_23 = 0.0;
  double tangle = 0.0;
  SloccClass slocc_class = SloccClass::Product;
  // C^2_{1(23)} - C^2_{12} - C^2_{13}
  double monogamy_slack = 0.0;
};

// -sum lambda log2 lambda over eigenvalues above 1e-12, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// 2 sqrt(det rho_a) for the single-qubit reduction of a pure state, in [0, 1].
double concurrence_pure_cut(const StateVector& s, int qubit);

// Two-qubit concurrence max(0, l1 - l2 - l3 - l4) with l_i the descending
// square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho),
// rho~ = (Y (x) Y) rho* (Y (x) Y).
double wootters_concurrence(const DensityMatrix& rho);

// Concurrence of the two-qubit reduction on qubits (a, b) of a pure state.
double pair_concurrence(const StateVector& s, int a, int b);

// Residual tangle C^2_{1(23)} - C^2_{12} - C^2_{13}; values below 1e-10 read 0.
double three_tangle(const StateVector& s);

// Product if two or more single-qubit determinants are <= tol, Biseparable if
// exactly one is; otherwise GHZClass when the tangle exceeds tol, else WClass.
SloccClass slocc_classify(const StateVector& s, double tol = kDefaultClassifyTol);

EntanglementReport analyze(const StateVector& s, double tol = kDefaultClassifyTol);

// det of the single-qubit reduced density matrix of `qubit`.
double single_qubit_det(const StateVector& s, int qubit);

}  // namespace wtangle::entanglement
