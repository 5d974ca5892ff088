#include "wtangle/states.hpp"

#include <cmath>
#include <numbers>

namespace wtangle::states {

using qcore::Complex;
using qcore::QuantumError;

namespace {

constexpr double kResidualDrop = 1e-8;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::vector<Complex> zeros(std::size_t dim) { return std::vector<Complex>(dim); }

// Amplitudes (a, b, c) on the kets (x, y, z) of an otherwise empty 3-qubit vector.
StateVector three_term(std::size_t x, Complex a, std::size_t y, Complex b, std::size_t z,
                       Complex c) {
  auto amps = zeros(8);
  amps[x] = a;
  amps[y] = b;
  amps[z] = c;
  return StateVector(std::move(amps));
}

MeasurementBasis labeled_basis(std::vector<qcore::LabeledVector> vectors) {
  MeasurementBasis b;
  b.subset = {0, 1, 2};
  b.labeled_count = vectors.size();
  b.vectors = std::move(vectors);
  return b;
}

}  // namespace

void WParams::validate() const {
  if (!std::isfinite(n) || !std::isfinite(gamma) || !std::isfinite(delta)) {
    throw QuantumError("WParams: non-finite parameter");
  }
  if (n < 0.0) throw QuantumError("WParams: n must be >= 0");
}

std::string labels::aux(std::size_t k) { return "aux_" + std::to_string(k); }

StateVector make_ghz() { return make_psi(1, true); }

StateVector make_w_prototype() {
  const double a = 1.0 / std::sqrt(3.0);
  return three_term(0b100, a, 0b010, a, 0b001, a);
}

StateVector make_w_n(const WParams& p) {
  p.validate();
  const double norm = 1.0 / std::sqrt(2.0 + 2.0 * p.n);
  return three_term(0b100, norm,
                    0b010, std::polar(std::sqrt(p.n) * norm, p.gamma),
                    0b001, std::polar(std::sqrt(p.n + 1.0) * norm, p.delta));
}

StateVector make_psi(int k, bool plus) {
  static constexpr std::size_t kFirst[] = {0b000, 0b100, 0b010, 0b110};
  if (k < 1 || k > 4) throw QuantumError("make_psi: k must be in 1..4");
  const std::size_t x = kFirst[k - 1];
  auto amps = zeros(8);
  amps[x] = kInvSqrt2;
  amps[x ^ 0b111] = plus ? kInvSqrt2 : -kInvSqrt2;
  return StateVector(std::move(amps));
}

StateVector make_eta(const WParams& p, bool plus) {
  p.validate();
  const double norm = 1.0 / std::sqrt(2.0 + 2.0 * p.n);
  const double sign = plus ? 1.0 : -1.0;
  return three_term(0b010, norm,
                    0b001, std::polar(std::sqrt(p.n) * norm, p.gamma),
                    0b100, std::polar(sign * std::sqrt(p.n + 1.0) * norm, p.delta));
}

StateVector make_xi(const WParams& p, bool plus) {
  p.validate();
  const double norm = 1.0 / std::sqrt(2.0 + 2.0 * p.n);
  const double sign = plus ? 1.0 : -1.0;
  return three_term(0b110, norm,
                    0b101, std::polar(std::sqrt(p.n) * norm, p.gamma),
                    0b000, std::polar(sign * std::sqrt(p.n + 1.0) * norm, p.delta));
}

MeasurementBasis ghz_teleport_basis() {
  return complete_basis(labeled_basis({
      {labels::kPsi1Plus, make_psi(1, true)},
      {labels::kPsi1Minus, make_psi(1, false)},
      {labels::kPsi2Plus, make_psi(2, true)},
      {labels::kPsi2Minus, make_psi(2, false)},
  }));
}

MeasurementBasis ghz_dense8_basis() {
  return complete_basis(labeled_basis({
      {labels::kPsi1Plus, make_psi(1, true)},
      {labels::kPsi1Minus, make_psi(1, false)},
      {labels::kPsi2Plus, make_psi(2, true)},
      {labels::kPsi2Minus, make_psi(2, false)},
      {labels::kPsi3Plus, make_psi(3, true)},
      {labels::kPsi3Minus, make_psi(3, false)},
      {labels::kPsi4Plus, make_psi(4, true)},
      {labels::kPsi4Minus, make_psi(4, false)},
  }));
}

MeasurementBasis w_teleport_basis(const WParams& p) {
  p.validate();
  return complete_basis(labeled_basis({
      {labels::kEtaPlus, make_eta(p, true)},
      {labels::kEtaMinus, make_eta(p, false)},
      {labels::kXiPlus, make_xi(p, true)},
      {labels::kXiMinus, make_xi(p, false)},
  }));
}

MeasurementBasis complete_basis(MeasurementBasis partial) {
  if (partial.subset.empty()) throw QuantumError("complete_basis: empty qubit subset");
  const std::size_t dim = partial.subset_dim();
  for (const auto& lv : partial.vectors) {
    if (lv.vector.dim() != dim) throw QuantumError("complete_basis: vector dimension mismatch");
  }
  if (partial.vectors.size() > dim) throw QuantumError("complete_basis: too many vectors");
  if (!check_orthonormal(partial, qcore::kOrthoTol).pass) {
    throw QuantumError("complete_basis: partial basis is not orthonormal");
  }
  if (partial.labeled_count > partial.vectors.size()) {
    throw QuantumError("complete_basis: labeled_count exceeds vector count");
  }

  std::size_t aux_count = partial.vectors.size() - partial.labeled_count;
  for (std::size_t ket = 0; ket < dim && partial.vectors.size() < dim; ++ket) {
    auto cand = zeros(dim);
    cand[ket] = 1.0;
    // Two passes of modified Gram-Schmidt against everything accepted so far.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& lv : partial.vectors) {
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(lv.vector[i]) * cand[i];
        for (std::size_t i = 0; i < dim; ++i) cand[i] -= overlap * lv.vector[i];
      }
    }
    double norm2 = 0.0;
    for (const auto& z : cand) norm2 += std::norm(z);
    if (std::sqrt(norm2) < kResidualDrop) continue;
    partial.vectors.push_back({labels::aux(aux_count++), StateVector::normalized(std::move(cand))});
  }
  if (partial.vectors.size() != dim) throw QuantumError("complete_basis: completion failed");
  return partial;
}

OrthonormalityReport check_orthonormal(std::span<const StateVector> vectors, double tol) {
  const double dev = qcore::max_gram_deviation(vectors);
  return {dev, dev <= tol};
}

OrthonormalityReport check_orthonormal(const MeasurementBasis& basis, double tol) {
  const double dev = qcore::max_gram_deviation(basis);
  return {dev, dev <= tol};
}

}  // namespace wtangle::states
