#include "wtangle/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wtangle/entanglement.hpp"

namespace wtangle::protocols {

using qcore::Matrix;
using qcore::Operator;
using qcore::QuantumError;
namespace lbl = states::labels;

namespace {

Operator op2(Complex a, Complex b, Complex c, Complex d) {
  return Operator::unitary(Matrix(2, {a, b, c, d}));
}

struct Encoding {
  Operator op;
  std::vector<int> targets;
};

Encoding encoding_for(DenseScheme s, int message) {
  if (message < 0 || message >= (1 << message_bits(s))) {
    throw QuantumError("dense coding: message " + std::to_string(message) +
                       " out of range for " + std::string(to_string(s)));
  }
  switch (message) {
    case 0: return {pauli_operator(Pauli::I), {0}};
    case 1: return {pauli_operator(Pauli::X), {0}};
    case 2: return {i_sigma2(), {0}};
    case 3: return {pauli_operator(Pauli::Z), {0}};
    case 4: return {pauli_operator(Pauli::X), {1}};
    case 5: return {i_sigma2(), {1}};
    case 6: return {pauli_operator(Pauli::X).kron(pauli_operator(Pauli::X)), {0, 1}};
    default: return {pauli_operator(Pauli::X).kron(i_sigma2()), {0, 1}};
  }
}

std::vector<std::string> message_labels(DenseScheme s) {
  switch (s) {
    case DenseScheme::Bell2: return {"phi+", "psi+", "psi-", "phi-"};
    case DenseScheme::Wn2: return {lbl::kEtaPlus, lbl::kXiPlus, lbl::kXiMinus, lbl::kEtaMinus};
    case DenseScheme::GHZ2:
      return {lbl::kPsi1Plus, lbl::kPsi2Plus, lbl::kPsi2Minus, lbl::kPsi1Minus};
    case DenseScheme::GHZ3:
      return {lbl::kPsi1Plus, lbl::kPsi2Plus, lbl::kPsi2Minus, lbl::kPsi1Minus,
              lbl::kPsi3Plus, lbl::kPsi3Minus, lbl::kPsi4Plus, lbl::kPsi4Minus};
  }
  return {};
}

MeasurementBasis bell_basis() {
  const double r = 1.0 / std::numbers::sqrt2;
  MeasurementBasis b;
  b.subset = {0, 1};
  b.labeled_count = 4;
  b.vectors = {
      {"phi+", StateVector({r, 0.0, 0.0, r})},
      {"psi+", StateVector({0.0, r, r, 0.0})},
      {"psi-", StateVector({0.0, r, -r, 0.0})},
      {"phi-", StateVector({r, 0.0, 0.0, -r})},
  };
  return b;
}

void check_setup(const TeleportSetup& setup) {
  if (setup.resource.num_qubits() != 3) throw QuantumError("teleport: resource must be 3 qubits");
  const auto& b = setup.basis;
  if (b.subset.size() != 3 || std::find(b.subset.begin(), b.subset.end(), 3) != b.subset.end()) {
    throw QuantumError("teleport: basis must act on qubits (a, 1, 2)");
  }
  if (!b.is_complete()) throw QuantumError("teleport: basis is not complete");
  for (std::size_t i = 0; i < b.labeled_count; ++i) {
    if (!setup.table.contains(b.vectors[i].label)) {
      throw ProtocolError("teleport: no correction for outcome " + b.vectors[i].label);
    }
  }
}

// Bob's qubit after the correction attached to outcome `index`.
StateVector corrected(const TeleportSetup& setup, std::size_t index, const StateVector& bob,
                      Pauli* applied = nullptr) {
  Pauli p = Pauli::I;
  if (setup.basis.is_labeled(index)) p = setup.table.at(setup.basis.vectors[index].label);
  if (applied) *applied = p;
  return qcore::apply_local(pauli_operator(p), {0}, bob);
}

}  // namespace

// ---------------------------------------------------------------- Pauli

std::string_view to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

Operator pauli_operator(Pauli p) {
  const Complex i{0.0, 1.0};
  switch (p) {
    case Pauli::I: return op2(1.0, 0.0, 0.0, 1.0);
    case Pauli::X: return op2(0.0, 1.0, 1.0, 0.0);
    case Pauli::Y: return op2(0.0, -i, i, 0.0);
    case Pauli::Z: return op2(1.0, 0.0, 0.0, -1.0);
  }
  throw QuantumError("pauli_operator: unknown tag");
}

Operator i_sigma2() { return op2(0.0, 1.0, -1.0, 0.0); }

// ---------------------------------------------------------------- input

void InputQubit::validate() const {
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > qcore::kNormTol) {
    throw QuantumError("InputQubit: |alpha|^2 + |beta|^2 must be 1");
  }
}

StateVector InputQubit::state() const {
  validate();
  return StateVector({alpha, beta});
}

InputQubit InputQubit::random(Rng& rng) {
  const double u = rng.uniform();
  const double phase = 2.0 * std::numbers::pi * rng.uniform();
  return {Complex(std::sqrt(u), 0.0), std::polar(std::sqrt(1.0 - u), phase)};
}

// ---------------------------------------------------------------- teleportation

CorrectionTable ghz_correction_table() {
  return {{lbl::kPsi1Plus, Pauli::I},
          {lbl::kPsi1Minus, Pauli::Z},
          {lbl::kPsi2Plus, Pauli::X},
          {lbl::kPsi2Minus, Pauli::Y}};
}

CorrectionTable w_correction_table() {
  return {{lbl::kEtaPlus, Pauli::I},
          {lbl::kEtaMinus, Pauli::Z},
          {lbl::kXiPlus, Pauli::X},
          {lbl::kXiMinus, Pauli::Y}};
}

TeleportSetup ghz_setup() {
  return {"ghz", states::make_ghz(), states::ghz_teleport_basis(), ghz_correction_table(),
          std::nullopt};
}

TeleportSetup w_setup(const WParams& p) {
  return {"wn", states::make_w_n(p), states::w_teleport_basis(p), w_correction_table(), p};
}

TeleportSetup prototype_w_setup() {
  const WParams w1{1.0, 0.0, 0.0};
  return {"w-prototype", states::make_w_prototype(), states::w_teleport_basis(w1),
          w_correction_table(), w1};
}

std::string bits_string(unsigned code) {
  return {static_cast<char>('0' + ((code >> 1) & 1U)), static_cast<char>('0' + (code & 1U))};
}

TeleportTrace teleport(const TeleportSetup& setup, const InputQubit& input, Rng& rng) {
  check_setup(setup);
  const auto joint = qcore::tensor(input.state(), setup.resource);
  const auto probs = qcore::outcome_probabilities(joint, setup.basis);
  auto outcome = qcore::projective_measure(joint, setup.basis, rng);

  TeleportTrace t;
  t.resource_name = setup.resource_name;
  t.params = setup.params;
  t.input = input;
  t.seed = rng.seed();
  t.outcome_label = outcome.label;
  t.outcome_index = outcome.index;
  t.outcome_probability = outcome.probability;
  t.aux_outcome = !setup.basis.is_labeled(outcome.index);
  if (!t.aux_outcome) t.classical_bits = static_cast<unsigned>(outcome.index);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (setup.basis.is_labeled(i)) {
      t.labeled_probabilities.push_back(probs[i]);
    } else {
      t.aux_probability += probs[i];
    }
  }
  t.bob_state = corrected(setup, outcome.index, *outcome.collapsed, &t.correction);
  t.fidelity = fidelity(input.state(), t.bob_state);
  return t;
}

TeleportTrace teleport(const StateVector& resource, const MeasurementBasis& basis,
                       const CorrectionTable& table, const InputQubit& input, Rng& rng) {
  return teleport(TeleportSetup{"custom", resource, basis, table, std::nullopt}, input, rng);
}

TeleportTrace w_teleport(const WParams& p, const InputQubit& input, Rng& rng) {
  return teleport(w_setup(p), input, rng);
}

TeleportTrace ghz_teleport(const InputQubit& input, Rng& rng) {
  return teleport(ghz_setup(), input, rng);
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != 1 || b.num_qubits() != 1) {
    throw QuantumError("fidelity: expects single-qubit states");
  }
  return std::clamp(std::norm(qcore::inner(a, b)), 0.0, 1.0);
}

// ---------------------------------------------------------------- dense coding

std::string_view to_string(DenseScheme s) {
  switch (s) {
    case DenseScheme::Bell2: return "bell2";
    case DenseScheme::Wn2: return "wn2";
    case DenseScheme::GHZ2: return "ghz2";
    case DenseScheme::GHZ3: return "ghz3";
  }
  return "?";
}

int message_bits(DenseScheme s) { return s == DenseScheme::GHZ3 ? 3 : 2; }
int qubits_sent(DenseScheme s) { return s == DenseScheme::GHZ3 ? 2 : 1; }

std::vector<int> alice_qubits(DenseScheme s) {
  return s == DenseScheme::GHZ3 ? std::vector<int>{0, 1} : std::vector<int>{0};
}

StateVector shared_state(DenseScheme s, const WParams& p) {
  switch (s) {
    case DenseScheme::Bell2: return bell_basis().vectors[0].vector;
    case DenseScheme::Wn2: return states::make_eta(p, true);
    case DenseScheme::GHZ2:
    case DenseScheme::GHZ3: return states::make_ghz();
  }
  throw QuantumError("shared_state: unknown scheme");
}

MeasurementBasis decode_basis(DenseScheme s, const WParams& p) {
  switch (s) {
    case DenseScheme::Bell2: return bell_basis();
    case DenseScheme::Wn2: return states::w_teleport_basis(p);
    case DenseScheme::GHZ2: return states::ghz_teleport_basis();
    case DenseScheme::GHZ3: return states::ghz_dense8_basis();
  }
  throw QuantumError("decode_basis: unknown scheme");
}

std::string message_label(DenseScheme s, int message) {
  const auto labels = message_labels(s);
  if (message < 0 || message >= static_cast<int>(labels.size())) {
    throw QuantumError("message_label: message out of range");
  }
  return labels[message];
}

StateVector sdc_encode(DenseScheme s, int message, const StateVector& shared) {
  const int expected = s == DenseScheme::Bell2 ? 2 : 3;
  if (shared.num_qubits() != expected) {
    throw QuantumError("sdc_encode: shared state has the wrong qubit count");
  }
  const auto enc = encoding_for(s, message);
  return qcore::apply_local(enc.op, enc.targets, shared);
}

int sdc_decode(DenseScheme s, const StateVector& received, const WParams& p, Rng& rng) {
  const auto basis = decode_basis(s, p);
  if (received.num_qubits() != static_cast<int>(basis.subset.size())) {
    throw QuantumError("sdc_decode: received state has the wrong qubit count");
  }
  const auto outcome = qcore::projective_measure(received, basis, rng);
  const auto labels = message_labels(s);
  const auto it = std::find(labels.begin(), labels.end(), outcome.label);
  if (it == labels.end()) {
    throw ProtocolError("sdc_decode: outcome " + outcome.label + " carries no message");
  }
  return static_cast<int>(it - labels.begin());
}

DenseCodeTrace dense_code(DenseScheme s, int message, const WParams& p, Rng& rng) {
  if (s == DenseScheme::Wn2) p.validate();
  const auto shared = shared_state(s, p);
  const auto encoded = sdc_encode(s, message, shared);

  DenseCodeTrace t;
  t.scheme = s;
  if (s == DenseScheme::Wn2) t.params = p;
  t.message = message;
  t.encoded_label = message_label(s, message);
  t.seed = rng.seed();
  t.decoded = sdc_decode(s, encoded, p, rng);
  t.qubits_sent = qubits_sent(s);
  t.ebits_used = resource_accounting(shared, alice_qubits(s));
  return t;
}

double resource_accounting(const StateVector& resource, std::span<const int> alice) {
  if (alice.empty() || static_cast<int>(alice.size()) >= resource.num_qubits()) {
    throw QuantumError("resource_accounting: Alice must hold a nonempty proper subset");
  }
  return entanglement::von_neumann_entropy(qcore::partial_trace(qcore::density(resource), alice));
}

// ---------------------------------------------------------------- negative control

FailureDemoReport prototype_w_failure_demo(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw QuantumError("prototype_w_failure_demo: trials must be positive");
  const auto mismatched = prototype_w_setup();
  const auto matched = w_setup(WParams{1.0, 0.0, 0.0});
  const Rng master(seed);

  FailureDemoReport r;
  r.trials = trials;
  r.seed = seed;
  for (std::size_t k = 0; k < trials; ++k) {
    Rng rng = master.split(k);
    const auto input = InputQubit::random(rng);
    Rng measure_rng = rng;
    const auto bad = teleport(mismatched, input, rng);
    const auto good = teleport(matched, input, measure_rng);

    r.mismatched_mean_fidelity += bad.fidelity;
    r.mismatched_min_fidelity = std::min(r.mismatched_min_fidelity, bad.fidelity);
    r.max_aux_probability = std::max(r.max_aux_probability, bad.aux_probability);
    r.matched_mean_fidelity += good.fidelity;
    r.matched_min_fidelity = std::min(r.matched_min_fidelity, good.fidelity);

    const auto joint = qcore::tensor(input.state(), mismatched.resource);
    double expected = 0.0;
    for (std::size_t i = 0; i < mismatched.basis.vectors.size(); ++i) {
      const auto branch = qcore::project(joint, mismatched.basis, i);
      if (!branch.remainder) continue;
      expected += branch.probability *
                  fidelity(input.state(), corrected(mismatched, i, *branch.remainder));
    }
    r.mismatched_mean_expected_fidelity += expected;
  }
  const double n = static_cast<double>(trials);
  r.mismatched_mean_fidelity /= n;
  r.matched_mean_fidelity /= n;
  r.mismatched_mean_expected_fidelity /= n;
  return r;
}

}  // namespace wtangle::protocols
