#include "wtangle/qcore.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace wtangle::qcore {
namespace {

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int qubits_for_dim(std::size_t dim, const char* what) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw QuantumError(std::string(what) + ": dimension must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > kMaxQubits) {
    throw QuantumError(std::string(what) + ": more than 6 qubits is not supported");
  }
  return n;
}

// Bit mask of qubit q in an n-qubit index.
std::size_t qubit_bit(int n, int q) { return std::size_t{1} << (n - 1 - q); }

void check_targets(std::span<const int> targets, int n, const char* what) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int q : targets) {
    if (q < 0 || q >= n) throw QuantumError(std::string(what) + ": qubit index out of range");
    if (seen[q]) throw QuantumError(std::string(what) + ": duplicate qubit index");
    seen[q] = true;
  }
}

// Complement of `subset` in 0..n-1, ascending.
std::vector<int> complement(std::span<const int> subset, int n) {
  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    if (std::find(subset.begin(), subset.end(), q) == subset.end()) rest.push_back(q);
  }
  return rest;
}

// Full-register index from the local indices of two disjoint qubit groups.
// Bit 0 of a local index corresponds to the last qubit of its group.
std::size_t scatter(int n, std::span<const int> group, std::size_t local) {
  std::size_t idx = 0;
  const std::size_t k = group.size();
  for (std::size_t j = 0; j < k; ++j) {
    if ((local >> (k - 1 - j)) & 1U) idx |= qubit_bit(n, group[j]);
  }
  return idx;
}

}  // namespace

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) throw QuantumError("Matrix: entry count != dim*dim");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Matrix Matrix::conjugate() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return err;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw QuantumError("Matrix product: dimension mismatch");
  const std::size_t n = a.dim_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw QuantumError("Matrix sum: dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw QuantumError("Matrix difference: dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(Complex k, const Matrix& a) {
  Matrix out = a;
  for (auto& z : out.data_) z *= k;
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw QuantumError("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
  num_qubits_ = qubits_for_dim(amps_.size(), "StateVector");
  double norm2 = 0.0;
  for (const auto& a : amps_) {
    if (!is_finite(a)) throw QuantumError("StateVector: non-finite amplitude");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw QuantumError("StateVector: amplitudes are not normalized (norm^2 = " +
                       std::to_string(norm2) + ")");
  }
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
  double norm2 = 0.0;
  for (const auto& a : amps) {
    if (!is_finite(a)) throw QuantumError("StateVector: non-finite amplitude");
    norm2 += std::norm(a);
  }
  if (norm2 == 0.0) throw QuantumError("StateVector: cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return StateVector(std::move(amps));
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw QuantumError("StateVector::basis: qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw QuantumError("StateVector::basis: index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

// ---------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  num_qubits_ = qubits_for_dim(m_.dim(), "DensityMatrix");
  for (const auto& z : m_.data()) {
    if (!is_finite(z)) throw QuantumError("DensityMatrix: non-finite entry");
  }
  if (m_.hermiticity_error() > kHermitianTol) throw QuantumError("DensityMatrix: not Hermitian");
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kHermitianTol) {
    throw QuantumError("DensityMatrix: trace is not 1");
  }
  const auto eig = hermitian_eigenvalues(m_);
  if (eig.back() < -kPsdTol) throw QuantumError("DensityMatrix: negative eigenvalue");
}

DensityMatrix::DensityMatrix(Matrix m, Trusted) : m_(std::move(m)) {
  num_qubits_ = std::countr_zero(m_.dim());
}

// ---------------------------------------------------------------- Operator

Operator::Operator(Matrix m, bool unitary) : m_(std::move(m)), unitary_(unitary) {
  num_qubits_ = qubits_for_dim(m_.dim(), "Operator");
  for (const auto& z : m_.data()) {
    if (!is_finite(z)) throw QuantumError("Operator: non-finite entry");
  }
}

Operator Operator::unitary(Matrix m) {
  const double err = max_abs_diff(m.adjoint() * m, Matrix::identity(m.dim()));
  if (err > kNormTol) throw QuantumError("Operator: matrix is not unitary");
  return Operator(std::move(m), true);
}

Operator Operator::general(Matrix m) { return Operator(std::move(m), false); }

Operator Operator::kron(const Operator& rhs) const {
  const std::size_t da = dim(), db = rhs.dim();
  Matrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = m_(i, j) * rhs.m_(k, l);
  return Operator(std::move(out), unitary_ && rhs.unitary_);
}

// ---------------------------------------------------------------- basis lookup

std::optional<std::size_t> MeasurementBasis::find(std::string_view label) const {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].label == label) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- operations

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
    throw QuantumError("tensor: result exceeds 6 qubits");
  }
  std::vector<Complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
  return StateVector(std::move(amps));
}

StateVector apply_local(const Operator& op, std::span<const int> targets, const StateVector& s) {
  const int n = s.num_qubits();
  check_targets(targets, n, "apply_local");
  if (op.dim() != (std::size_t{1} << targets.size())) {
    throw QuantumError("apply_local: operator dimension does not match target count");
  }
  if (!op.is_unitary()) throw QuantumError("apply_local: operator is not unitary");

  const auto rest = complement(targets, n);
  const std::size_t k = op.dim();
  const std::size_t rest_dim = std::size_t{1} << rest.size();
  std::vector<std::size_t> target_idx(k);
  for (std::size_t t = 0; t < k; ++t) target_idx[t] = scatter(n, targets, t);

  std::vector<Complex> out(s.dim());
  std::vector<Complex> local(k);
  for (std::size_t r = 0; r < rest_dim; ++r) {
    const std::size_t base = scatter(n, rest, r);
    for (std::size_t t = 0; t < k; ++t) local[t] = s[base | target_idx[t]];
    for (std::size_t i = 0; i < k; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < k; ++j) acc += op.matrix()(i, j) * local[j];
      out[base | target_idx[i]] = acc;
    }
  }
  return StateVector(std::move(out));
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw QuantumError("inner: size mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double phase_distance(const StateVector& a, const StateVector& b) {
  return std::max(0.0, 1.0 - std::abs(inner(a, b)));
}

DensityMatrix density(const StateVector& s) {
  Matrix m(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.dim(); ++c) m(r, c) = s[r] * std::conj(s[c]);
  return DensityMatrix(std::move(m), DensityMatrix::Trusted{});
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  if (keep.empty()) throw QuantumError("partial_trace: keep set is empty");
  check_targets(keep, n, "partial_trace");
  if (static_cast<int>(keep.size()) == n) throw QuantumError("partial_trace: keep set is every qubit");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  const auto traced = complement(kept, n);
  const std::size_t kd = std::size_t{1} << kept.size();
  const std::size_t td = std::size_t{1} << traced.size();

  std::vector<std::size_t> kidx(kd), tidx(td);
  for (std::size_t i = 0; i < kd; ++i) kidx[i] = scatter(n, kept, i);
  for (std::size_t e = 0; e < td; ++e) tidx[e] = scatter(n, traced, e);

  Matrix out(kd);
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = 0; j < kd; ++j) {
      Complex acc = 0.0;
      for (std::size_t e = 0; e < td; ++e) acc += rho(kidx[i] | tidx[e], kidx[j] | tidx[e]);
      out(i, j) = acc;
    }
  return DensityMatrix(std::move(out), DensityMatrix::Trusted{});
}

EigenSystem hermitian_eigensystem(const Matrix& h) {
  constexpr double kInputHermitianTol = 1e-10;
  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 100;

  const std::size_t n = h.dim();
  if (n == 0) throw QuantumError("hermitian_eigensystem: empty matrix");
  if (h.hermiticity_error() > kInputHermitianTol) {
    throw QuantumError("hermitian_eigensystem: matrix is not Hermitian");
  }

  Matrix a = 0.5 * (h + h.adjoint());
  Matrix v = Matrix::identity(n);

  double fro = 0.0;
  for (const auto& z : a.data()) fro += std::norm(z);
  const double threshold = kOffTol * std::max(1.0, std::sqrt(fro));

  auto off_norm = [&] {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) off += std::norm(a(p, q));
    return std::sqrt(off);
  };

  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase shift on q makes the pivot real, then a real Jacobi rotation
        // zeroes it. Combined: U = diag(1, conj(e)) * [[c, s], [-s, c]].
        const Complex e = apq / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex upp = c, upq = s;
        const Complex uqp = -s * std::conj(e), uqq = c * std::conj(e);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  EigenSystem out{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& h) { return hermitian_eigensystem(h).values; }

double max_gram_deviation(std::span<const StateVector> vectors) {
  double dev = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const Complex g = inner(vectors[i], vectors[j]);
      dev = std::max(dev, std::abs(g - (i == j ? Complex(1.0) : Complex(0.0))));
    }
  return dev;
}

double max_gram_deviation(const MeasurementBasis& basis) {
  std::vector<StateVector> vs;
  vs.reserve(basis.vectors.size());
  for (const auto& lv : basis.vectors) vs.push_back(lv.vector);
  return max_gram_deviation(vs);
}

namespace {

void check_basis_shape(const StateVector& s, const MeasurementBasis& basis) {
  check_targets(basis.subset, s.num_qubits(), "measurement");
  if (basis.subset.empty()) throw QuantumError("measurement: empty qubit subset");
  for (const auto& lv : basis.vectors) {
    if (lv.vector.dim() != basis.subset_dim()) {
      throw QuantumError("measurement: basis vector dimension does not match subset");
    }
  }
}

// Unnormalized remainder of `s` projected onto basis vector `index`.
std::vector<Complex> branch(const StateVector& s, const MeasurementBasis& basis,
                            std::size_t index, const std::vector<int>& rest) {
  const int n = s.num_qubits();
  const auto& b = basis.vectors.at(index).vector;
  const std::size_t rest_dim = std::size_t{1} << rest.size();
  std::vector<Complex> out(rest_dim);
  for (std::size_t m = 0; m < b.dim(); ++m) {
    const Complex cb = std::conj(b[m]);
    if (cb == 0.0) continue;
    const std::size_t mi = scatter(n, basis.subset, m);
    for (std::size_t r = 0; r < rest_dim; ++r) out[r] += cb * s[mi | scatter(n, rest, r)];
  }
  return out;
}

}  // namespace

Projection project(const StateVector& s, const MeasurementBasis& basis, std::size_t index) {
  check_basis_shape(s, basis);
  const auto rest = complement(basis.subset, s.num_qubits());
  auto amps = branch(s, basis, index, rest);
  double p = 0.0;
  for (const auto& z : amps) p += std::norm(z);
  Projection out{p, std::nullopt};
  if (!rest.empty() && p > 0.0) out.remainder = StateVector::normalized(std::move(amps));
  return out;
}

std::vector<double> outcome_probabilities(const StateVector& s, const MeasurementBasis& basis) {
  check_basis_shape(s, basis);
  if (!basis.is_complete()) throw QuantumError("measurement: basis is not complete");
  if (max_gram_deviation(basis) > kOrthoTol) {
    throw QuantumError("measurement: basis is not orthonormal");
  }
  const auto rest = complement(basis.subset, s.num_qubits());
  std::vector<double> probs(basis.vectors.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    for (const auto& z : branch(s, basis, i, rest)) probs[i] += std::norm(z);
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > kOrthoTol) {
    throw QuantumError("measurement: outcome probabilities do not sum to 1");
  }
  return probs;
}

MeasurementOutcome projective_measure(const StateVector& s, const MeasurementBasis& basis,
                                      Rng& rng) {
  const auto probs = outcome_probabilities(s, basis);
  const double u = rng.uniform();
  double cum = 0.0;
  std::size_t chosen = probs.size();
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last_nonzero = i;
    cum += probs[i];
    if (u < cum) {
      chosen = i;
      break;
    }
  }
  // Roundoff can leave u above the final cumulative sum.
  if (chosen == probs.size()) chosen = last_nonzero;

  auto proj = project(s, basis, chosen);
  if (!(proj.probability > 0.0)) throw QuantumError("measurement: sampled an empty branch");
  return MeasurementOutcome{chosen, basis.vectors[chosen].label, proj.probability,
                            std::move(proj.remainder)};
}

}  // namespace wtangle::qcore
