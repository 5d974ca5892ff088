#include "wtangle/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wtangle/qcore.hpp"

namespace wtangle::entanglement {

using qcore::Complex;
using qcore::Matrix;
using qcore::QuantumError;

namespace {

// Eigenvalues of a reduced state below this are treated as exact zeros
// before taking square roots.
constexpr double kSqrtFloor = 1e-14;

void require_three_qubits(const StateVector& s, const char* what) {
  if (s.num_qubits() != 3) throw QuantumError(std::string(what) + ": expects a 3-qubit state");
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

Matrix sqrt_psd(const Matrix& m) {
  const auto eig = qcore::hermitian_eigensystem(m);
  const std::size_t n = m.dim();
  Matrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = eig.values[k];
    if (lam <= kSqrtFloor) continue;
    const double r = std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += r * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return out;
}

// sigma_y (x) sigma_y in the computational basis.
Matrix spin_flip() {
  Matrix y(4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

std::string_view to_string(SloccClass c) {
  switch (c) {
    case SloccClass::Product: return "Product";
    case SloccClass::Biseparable: return "Biseparable";
    case SloccClass::WClass: return "WClass";
    case SloccClass::GHZClass: return "GHZClass";
  }
  return "Unknown";
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (double lam : qcore::hermitian_eigenvalues(rho)) {
    if (lam > 1e-12) h -= lam * std::log2(lam);
  }
  return std::clamp(h, 0.0, static_cast<double>(rho.num_qubits()));
}

double single_qubit_det(const StateVector& s, int qubit) {
  const auto rho = qcore::partial_trace(qcore::density(s), {qubit});
  return (rho(0, 0) * rho(1, 1)).real() - std::norm(rho(0, 1));
}

double concurrence_pure_cut(const StateVector& s, int qubit) {
  const double det = single_qubit_det(s, qubit);
  return clamp_unit(2.0 * std::sqrt(std::max(det, 0.0)));
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) throw QuantumError("wootters_concurrence: expects a 2-qubit state");

  // sqrt(rho) rho~ sqrt(rho) = M M^dagger with M = sqrt(rho) Y sqrt(rho)*, so
  // the l_i are the singular values of M. They are read off the Hermitian
  // dilation [[0, M], [M^dagger, 0]], whose spectrum is {+-l_i}; this avoids
  // square-rooting near-zero eigenvalues of M M^dagger.
  const Matrix root = sqrt_psd(rho.matrix());
  const Matrix m = root * spin_flip() * root.conjugate();
  const Matrix m_adj = m.adjoint();
  Matrix dilation(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = m(i, j);
      dilation(4 + i, j) = m_adj(i, j);
    }
  const auto eig = qcore::hermitian_eigenvalues(dilation);
  std::array<double, 4> l{};
  for (std::size_t k = 0; k < 4; ++k) l[k] = std::max(eig[k], 0.0);
  return clamp_unit(l[0] - l[1] - l[2] - l[3]);
}

double pair_concurrence(const StateVector& s, int a, int b) {
  return wootters_concurrence(qcore::partial_trace(qcore::density(s), {a, b}));
}

double three_tangle(const StateVector& s) {
  require_three_qubits(s, "three_tangle");
  const double c1 = concurrence_pure_cut(s, 0);
  const double c12 = pair_concurrence(s, 0, 1);
  const double c13 = pair_concurrence(s, 0, 2);
  const double tau = c1 * c1 - c12 * c12 - c13 * c13;
  return tau < kClampTol ? 0.0 : std::min(tau, 1.0);
}

SloccClass slocc_classify(const StateVector& s, double tol) {
  require_three_qubits(s, "slocc_classify");
  int vanishing = 0;
  for (int q = 0; q < 3; ++q) {
    if (single_qubit_det(s, q) <= tol) ++vanishing;
  }
  if (vanishing >= 2) return SloccClass::Product;
  if (vanishing == 1) return SloccClass::Biseparable;
  return three_tangle(s) > tol ? SloccClass::GHZClass : SloccClass::WClass;
}

EntanglementReport analyze(const StateVector& s, double tol) {
  require_three_qubits(s, "analyze");
  const auto rho = qcore::density(s);

  EntanglementReport r;
  r.entropy_bits_per_cut["1|23"] = von_neumann_entropy(qcore::partial_trace(rho, {0}));
  r.entropy_bits_per_cut["2|13"] = von_neumann_entropy(qcore::partial_trace(rho, {1}));
  r.entropy_bits_per_cut["3|12"] = von_neumann_entropy(qcore::partial_trace(rho, {2}));

  r.concurrence_pairs["12"] = wootters_concurrence(qcore::partial_trace(rho, {0, 1}));
  r.concurrence_pairs["13"] = wootters_concurrence(qcore::partial_trace(rho, {0, 2}));
  r.concurrence_pairs["23"] = wootters_concurrence(qcore::partial_trace(rho, {1, 2}));
  r.concurrence_1_23 = concurrence_pure_cut(s, 0);

  const double c12 = r.concurrence_pairs["12"], c13 = r.concurrence_pairs["13"];
  const double slack = r.concurrence_1_23 * r.concurrence_1_23 - c12 * c12 - c13 * c13;
  r.monogamy_slack = std::abs(slack) < kClampTol ? 0.0 : slack;
  r.tangle = three_tangle(s);
  r.slocc_class = slocc_classify(s, tol);
  return r;
}

}  // namespace wtangle::entanglement
