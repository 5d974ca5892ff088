#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wtangle/protocols.hpp"

using namespace wtangle;
using protocols::DenseScheme;
using protocols::InputQubit;
using protocols::Pauli;
using qcore::Complex;
using qcore::StateVector;
using states::WParams;

namespace {

const double kPi = std::numbers::pi;

std::vector<WParams> sweep() {
  std::vector<WParams> out;
  for (double n : {0.0, 0.25, 1.0, 2.0, 7.5})
    for (double g : {0.0, kPi / 4, kPi})
      for (double d : {0.0, kPi / 4, kPi}) out.push_back({n, g, d});
  return out;
}

}  // namespace

TEST_CASE("Pauli operators") {
  CHECK(protocols::to_string(Pauli::Y) == "Y");
  for (auto p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) CHECK(protocols::pauli_operator(p).is_unitary());
  CHECK(protocols::i_sigma2().is_unitary());
}

TEST_CASE("InputQubit") {
  CHECK_THROWS_AS((InputQubit{1.0, 1.0}.validate()), qcore::QuantumError);
  Rng rng(1);
  for (int k = 0; k < 100; ++k) CHECK_NOTHROW(InputQubit::random(rng).validate());
}

TEST_CASE("fidelity") {
  const auto zero = StateVector::basis(1, 0), one = StateVector::basis(1, 1);
  CHECK(protocols::fidelity(zero, zero) == 1.0);
  CHECK(protocols::fidelity(zero, one) == 0.0);
  Rng rng(2);
  const auto psi = oracle::haar_state(1, rng);
  for (double theta : {0.3, 1.7, -2.9}) {
    const Complex ph = std::polar(1.0, theta);
    const StateVector rotated({ph * psi[0], ph * psi[1]});
    CHECK(protocols::fidelity(psi, rotated) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(protocols::fidelity(zero, StateVector::basis(2, 0)), qcore::QuantumError);
}

TEST_CASE("teleport through W_1 with the W_1 basis") {
  const WParams w1{1.0, 0.0, 0.0};
  const auto setup = protocols::w_setup(w1);
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto in = InputQubit::random(rng);
    const auto t = protocols::teleport(setup.resource, setup.basis, setup.table, in, rng);
    CHECK(t.fidelity >= 1.0 - 1e-10);
    CHECK_FALSE(t.aux_outcome);
    REQUIRE(t.classical_bits.has_value());
    CHECK(*t.classical_bits < 4);
    CHECK(t.aux_probability < 1e-12);
    REQUIRE(t.labeled_probabilities.size() == 4);
    for (double p : t.labeled_probabilities) CHECK(std::abs(p - 0.25) < 1e-10);
  }
  Rng rng2(4);
  const auto t = protocols::teleport(setup, InputQubit{1.0, 0.0}, rng2);
  CHECK(t.outcome_probability == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("correction table reproduces the input on every labeled branch") {
  // Deterministic check over every branch, not just sampled ones.
  Rng rng(5);
  std::vector<protocols::TeleportSetup> setups = {protocols::ghz_setup()};
  for (const auto& p : sweep()) setups.push_back(protocols::w_setup(p));
  for (const auto& setup : setups) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto in = InputQubit::random(rng);
      const auto joint = qcore::tensor(in.state(), setup.resource);
      for (std::size_t i = 0; i < setup.basis.labeled_count; ++i) {
        const auto branch = qcore::project(joint, setup.basis, i);
        REQUIRE(branch.remainder.has_value());
        const auto pauli = setup.table.at(setup.basis.vectors[i].label);
        const auto out = qcore::apply_local(protocols::pauli_operator(pauli), {0}, *branch.remainder);
        CHECK(qcore::phase_distance(in.state(), out) <= 1e-10);
      }
    }
  }
}

TEST_CASE("ghz_teleport") {
  SUBCASE("input |0>: pre-correction Bob states are |0>, |0>, |1>, |1>") {
    const auto setup = protocols::ghz_setup();
    const auto joint = qcore::tensor(StateVector::basis(1, 0), setup.resource);
    const std::size_t want[] = {0, 0, 1, 1};
    for (std::size_t i = 0; i < 4; ++i) {
      const auto branch = qcore::project(joint, setup.basis, i);
      CHECK(branch.probability == doctest::Approx(0.25).epsilon(1e-12));
      REQUIRE(branch.remainder.has_value());
      CHECK(std::abs((*branch.remainder)[want[i]]) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("input |1> teleports perfectly") {
    Rng rng(6);
    for (int k = 0; k < 20; ++k) CHECK(protocols::ghz_teleport(InputQubit{0.0, 1.0}, rng).fidelity >= 1.0 - 1e-12);
  }
  SUBCASE("outcomes are uniform for any input") {
    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
      const auto t = protocols::ghz_teleport(InputQubit::random(rng), rng);
      for (double p : t.labeled_probabilities) CHECK(std::abs(p - 0.25) < 1e-10);
      CHECK(t.fidelity >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("w_teleport") {
  SUBCASE("n = 1 with a fixed complex input") {
    Rng rng(8);
    const InputQubit in{std::sqrt(0.3), std::polar(std::sqrt(0.7), 0.4)};
    for (int k = 0; k < 20; ++k) CHECK(protocols::w_teleport({1.0, 0.0, 0.0}, in, rng).fidelity >= 1.0 - 1e-12);
  }
  SUBCASE("n = 3.2 with phases, 200 seeded trials") {
    const Rng master(9);
    double min_f = 1.0;
    for (std::uint64_t k = 0; k < 200; ++k) {
      Rng rng = master.split(k);
      min_f = std::min(min_f, protocols::w_teleport({3.2, 0.7, 2.1}, InputQubit::random(rng), rng).fidelity);
    }
    CHECK(min_f >= 1.0 - 1e-10);
  }
  SUBCASE("n = 0 still teleports") {
    Rng rng(10);
    for (int k = 0; k < 50; ++k) {
      CHECK(protocols::w_teleport({0.0, 0.0, 0.0}, InputQubit::random(rng), rng).fidelity >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("teleport errors") {
  auto setup = protocols::w_setup({1.0, 0.0, 0.0});
  setup.table.erase("xi-");
  Rng rng(11);
  CHECK_THROWS_AS(protocols::teleport(setup, InputQubit{}, rng), protocols::ProtocolError);
  auto two = protocols::w_setup({1.0, 0.0, 0.0});
  two.resource = StateVector::basis(2, 0);
  CHECK_THROWS_AS(protocols::teleport(two, InputQubit{}, rng), qcore::QuantumError);
}

TEST_CASE("property: perfect teleportation over the W_n sweep") {
  for (const auto& p : sweep()) {
    const auto setup = protocols::w_setup(p);
    const Rng master(static_cast<std::uint64_t>(p.n * 1000 + p.gamma * 10 + p.delta));
    for (std::uint64_t k = 0; k < 100; ++k) {
      Rng rng = master.split(k);
      const auto t = protocols::teleport(setup, InputQubit::random(rng), rng);
      CHECK(t.fidelity >= 1.0 - 1e-10);
      CHECK(t.aux_probability <= 1e-12);
      CHECK(t.classical_bits.has_value());
    }
  }
}

TEST_CASE("sdc_encode") {
  const WParams w1{1.0, 0.0, 0.0};
  const auto eta_plus = states::make_eta(w1, true);
  const auto xi = protocols::sdc_encode(DenseScheme::Wn2, 1, eta_plus);
  CHECK(qcore::phase_distance(xi, states::make_xi(w1, true)) < 1e-15);
  const auto psi1m = protocols::sdc_encode(DenseScheme::GHZ2, 3, states::make_ghz());
  CHECK(qcore::phase_distance(psi1m, states::make_psi(1, false)) < 1e-15);
  const auto psi3p = protocols::sdc_encode(DenseScheme::GHZ3, 4, states::make_ghz());
  CHECK(qcore::phase_distance(psi3p, states::make_psi(3, true)) < 1e-15);
  // i sigma_2 rows hold up to a global phase of -1.
  const auto psi2m = protocols::sdc_encode(DenseScheme::GHZ2, 2, states::make_ghz());
  CHECK(qcore::phase_distance(psi2m, states::make_psi(2, false)) < 1e-15);

  CHECK_THROWS_AS(protocols::sdc_encode(DenseScheme::GHZ2, 4, states::make_ghz()), qcore::QuantumError);
  CHECK_THROWS_AS(protocols::sdc_encode(DenseScheme::GHZ3, 8, states::make_ghz()), qcore::QuantumError);
  CHECK_THROWS_AS(protocols::sdc_encode(DenseScheme::GHZ3, -1, states::make_ghz()), qcore::QuantumError);
  CHECK_THROWS_AS(protocols::sdc_encode(DenseScheme::Bell2, 0, states::make_ghz()), qcore::QuantumError);
}

TEST_CASE("encoded states match the decoder labels") {
  for (auto s : {DenseScheme::Bell2, DenseScheme::Wn2, DenseScheme::GHZ2, DenseScheme::GHZ3}) {
    const WParams p{2.5, 0.4, 1.3};
    const auto basis = protocols::decode_basis(s, p);
    const auto shared = protocols::shared_state(s, p);
    for (int m = 0; m < (1 << protocols::message_bits(s)); ++m) {
      const auto enc = protocols::sdc_encode(s, m, shared);
      const auto idx = basis.find(protocols::message_label(s, m));
      REQUIRE(idx.has_value());
      CHECK(qcore::phase_distance(enc, basis.vectors[*idx].vector) < 1e-12);
    }
  }
}

TEST_CASE("property: dense coding roundtrips with orthogonal encodings") {
  std::vector<std::pair<DenseScheme, WParams>> cases = {
      {DenseScheme::Bell2, {}}, {DenseScheme::GHZ2, {}}, {DenseScheme::GHZ3, {}}};
  for (const auto& p : sweep()) cases.emplace_back(DenseScheme::Wn2, p);
  for (const auto& [s, p] : cases) {
    const auto shared = protocols::shared_state(s, p);
    std::vector<StateVector> encoded;
    for (int m = 0; m < (1 << protocols::message_bits(s)); ++m) {
      encoded.push_back(protocols::sdc_encode(s, m, shared));
      for (std::uint64_t seed : {1ULL, 77ULL, 12345ULL}) {
        Rng rng(seed);
        CHECK(protocols::sdc_decode(s, encoded.back(), p, rng) == m);
      }
    }
    CHECK(qcore::max_gram_deviation(encoded) < 1e-10);
  }
}

TEST_CASE("sdc_decode of the unencoded shared state returns message 0") {
  Rng rng(12);
  const WParams w1{1.0, 0.0, 0.0};
  for (int k = 0; k < 20; ++k) CHECK(protocols::sdc_decode(DenseScheme::Wn2, states::make_eta(w1, true), w1, rng) == 0);
}

TEST_CASE("sdc_decode flags a corrupted channel") {
  // A state living on the GHZ2 fillers carries no message.
  const auto aux = protocols::decode_basis(DenseScheme::GHZ2).vectors[4].vector;
  Rng rng(13);
  CHECK_THROWS_AS(protocols::sdc_decode(DenseScheme::GHZ2, aux, {}, rng), protocols::ProtocolError);
}

TEST_CASE("dense_code traces") {
  Rng rng(14);
  const auto t2 = protocols::dense_code(DenseScheme::Wn2, 3, {1.0, 0.0, 0.0}, rng);
  CHECK(t2.decoded == 3);
  CHECK(t2.encoded_label == "eta-");
  CHECK(t2.qubits_sent == 1);
  CHECK(t2.ebits_used == doctest::Approx(1.0).epsilon(1e-10));
  const auto t3 = protocols::dense_code(DenseScheme::GHZ3, 7, {}, rng);
  CHECK(t3.decoded == 7);
  CHECK(t3.qubits_sent == 2);
  CHECK(t3.ebits_used == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("resource_accounting") {
  for (const auto& p : sweep()) {
    CHECK(std::abs(protocols::resource_accounting(states::make_w_n(p), {0, 1}) - 1.0) <= 1e-10);
  }
  CHECK(protocols::resource_accounting(states::make_ghz(), {0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(protocols::resource_accounting(StateVector::basis(3, 0), {0}) == 0.0);
  CHECK(protocols::resource_accounting(StateVector::basis(3, 0), {1, 2}) == 0.0);
  CHECK_THROWS_AS(protocols::resource_accounting(states::make_ghz(), {}), qcore::QuantumError);
  CHECK_THROWS_AS(protocols::resource_accounting(states::make_ghz(), {0, 1, 2}), qcore::QuantumError);
}

TEST_CASE("prototype W failure demo") {
  const auto r = protocols::prototype_w_failure_demo(1000, 42);
  CHECK(r.trials == 1000);
  CHECK(r.mismatched_mean_fidelity < 1.0 - 1e-3);
  CHECK(r.mismatched_min_fidelity < 1.0 - 1e-3);
  CHECK(std::abs(r.mismatched_mean_expected_fidelity - r.mismatched_mean_fidelity) < 0.01);
  CHECK(r.matched_min_fidelity >= 1.0 - 1e-10);
  // The prototype W joint state lies inside span{eta+-, xi+-}, so the
  // completion fillers never fire.
  CHECK(r.max_aux_probability < 1e-12);
}

TEST_CASE("identical seeds give identical traces") {
  auto run = [] {
    std::vector<std::tuple<std::string, double, double>> out;
    const Rng master(2024);
    for (std::uint64_t k = 0; k < 50; ++k) {
      Rng rng = master.split(k);
      const auto t = protocols::w_teleport({2.0, 0.1, 0.2}, InputQubit::random(rng), rng);
      out.emplace_back(t.outcome_label, t.outcome_probability, t.fidelity);
    }
    return out;
  };
  CHECK(run() == run());
}
