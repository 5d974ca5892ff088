#pragma once

// Dense complex linear algebra for few-qubit systems.
//
// Qubit convention: qubits are addressed by 0-based position in the ket label.
// Qubit 0 is the leftmost label and the most significant bit of the amplitude
// index, so |q0 q1 q2> lives at index 4*q0 + 2*q1 + q2.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wtangle/rng.hpp"

namespace wtangle::qcore {

using Complex = std::complex<double>;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kOrthoTol = 1e-10;
inline constexpr int kMaxQubits = 6;

// Thrown whenever an argument violates a documented precondition.
class QuantumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Square row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<Complex> row_major);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Matrix conjugate() const;
  Complex trace() const;
  // Largest entrywise |A - A^dagger|.
  double hermiticity_error() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex k, const Matrix& a);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// Largest entrywise |a - b|.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Normalized amplitude vector over num_qubits qubits.
class StateVector {
 public:
  // Validates length (a power of two, 1..kMaxQubits qubits), finiteness and
  // unit norm within kNormTol.
  explicit StateVector(std::vector<Complex> amps);

  // Rescales to unit norm first; rejects the zero vector.
  static StateVector normalized(std::vector<Complex> amps);
  static StateVector basis(int num_qubits, std::size_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amps() const { return amps_; }

 private:
  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  // Validates Hermiticity and trace within 1e-12 and eigenvalues >= -1e-10.
  explicit DensityMatrix(Matrix m);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  struct Trusted {};
  DensityMatrix(Matrix m, Trusted);

  int num_qubits_ = 0;
  Matrix m_;

  friend DensityMatrix density(const StateVector&);
  friend DensityMatrix partial_trace(const DensityMatrix&, std::span<const int>);
};

// Operator on 2^k dimensions. Unitary operators are checked on construction.
class Operator {
 public:
  static Operator unitary(Matrix m);
  static Operator general(Matrix m);

  std::size_t dim() const { return m_.dim(); }
  int num_qubits() const { return num_qubits_; }
  bool is_unitary() const { return unitary_; }
  const Matrix& matrix() const { return m_; }

  // Kronecker product with `this` acting on the more significant qubits.
  Operator kron(const Operator& rhs) const;

 private:
  Operator(Matrix m, bool unitary);

  Matrix m_;
  int num_qubits_ = 0;
  bool unitary_ = false;
};

struct LabeledVector {
  std::string label;
  StateVector vector;
};

// Ordered orthonormal vectors on a subset of qubits. The first labeled_count
// vectors carry protocol labels; the rest are completion fillers ("aux_k").
struct MeasurementBasis {
  std::vector<int> subset;
  std::vector<LabeledVector> vectors;
  std::size_t labeled_count = 0;

  std::size_t subset_dim() const { return std::size_t{1} << subset.size(); }
  bool is_complete() const { return vectors.size() == subset_dim(); }
  bool is_labeled(std::size_t index) const { return index < labeled_count; }
  // Index of the vector with this label, if any.
  std::optional<std::size_t> find(std::string_view label) const;
};

struct MeasurementOutcome {
  std::size_t index = 0;
  std::string label;
  double probability = 0.0;
  // State of the unmeasured qubits, in their original relative order. Empty
  // when every qubit was measured.
  std::optional<StateVector> collapsed;
};

StateVector tensor(const StateVector& a, const StateVector& b);

// Applies op to `targets` (targets[0] is the op's most significant qubit).
StateVector apply_local(const Operator& op, std::span<const int> targets,
                        const StateVector& s);
inline StateVector apply_local(const Operator& op, std::initializer_list<int> targets,
                               const StateVector& s) {
  return apply_local(op, std::span<const int>(targets.begin(), targets.size()), s);
}

// <a|b>, conjugate-linear in a.
Complex inner(const StateVector& a, const StateVector& b);
// 1 - |<a|b>|: zero iff the states agree up to a global phase.
double phase_distance(const StateVector& a, const StateVector& b);

DensityMatrix density(const StateVector& s);

// Reduced state on `keep` (a nonempty proper subset; output keeps the
// original qubit order regardless of the order given).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

struct EigenSystem {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k is the eigenvector of values[k]
};

// Cyclic complex Jacobi; stops when the off-diagonal Frobenius norm < 1e-13.
// Requires Hermiticity within 1e-10.
EigenSystem hermitian_eigensystem(const Matrix& h);
std::vector<double> hermitian_eigenvalues(const Matrix& h);
inline std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  return hermitian_eigenvalues(rho.matrix());
}

// Branch of `s` on basis vector `index`: probability and normalized
// remainder (nullopt when every qubit is measured or the branch is empty).
struct Projection {
  double probability = 0.0;
  std::optional<StateVector> remainder;
};
Projection project(const StateVector& s, const MeasurementBasis& basis, std::size_t index);

// max_{i,j} |<v_i|v_j> - delta_ij| over equal-dimension vectors.
double max_gram_deviation(std::span<const StateVector> vectors);
double max_gram_deviation(const MeasurementBasis& basis);

// p_i for every vector of a complete basis.
std::vector<double> outcome_probabilities(const StateVector& s, const MeasurementBasis& basis);

MeasurementOutcome projective_measure(const StateVector& s, const MeasurementBasis& basis,
                                      Rng& rng);

}  // namespace wtangle::qcore
