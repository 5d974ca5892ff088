#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wtangle/entanglement.hpp"
#include "wtangle/states.hpp"

using namespace wtangle;
using entanglement::SloccClass;
using qcore::Complex;
using qcore::Matrix;
using qcore::StateVector;

namespace {

const double kR2 = 1.0 / std::numbers::sqrt2;

StateVector zero_bell() {  // |0> (x) (|00> + |11>)/sqrt2
  return qcore::tensor(StateVector::basis(1, 0), StateVector({kR2, 0.0, 0.0, kR2}));
}

}  // namespace

TEST_CASE("von_neumann_entropy") {
  CHECK(entanglement::von_neumann_entropy(qcore::DensityMatrix(0.5 * Matrix::identity(2))) ==
        doctest::Approx(1.0).epsilon(1e-14));
  Rng rng(1);
  CHECK(std::abs(entanglement::von_neumann_entropy(qcore::density(oracle::haar_state(3, rng)))) < 1e-9);
  // -(3/4) log2(3/4) - (1/4) log2(1/4)
  const double h = entanglement::von_neumann_entropy(qcore::DensityMatrix(Matrix(2, {0.75, 0.0, 0.0, 0.25})));
  CHECK(h == doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("property: entropy is bounded by the qubit count") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = oracle::haar_state(4, rng);
    const auto rho = qcore::density(s);
    for (const auto& keep : std::vector<std::vector<int>>{{0}, {0, 1}, {1, 2, 3}}) {
      const double h = entanglement::von_neumann_entropy(qcore::partial_trace(rho, keep));
      CHECK(h >= 0.0);
      CHECK(h <= static_cast<double>(keep.size()));
    }
  }
}

TEST_CASE("concurrence_pure_cut") {
  const auto w1 = states::make_w_n({1.0, 0.0, 0.0});
  CHECK(entanglement::concurrence_pure_cut(w1, 0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(std::abs(entanglement::concurrence_pure_cut(w1, 0) - 0.86602540) < 1e-8);
  for (int q = 0; q < 3; ++q) {
    CHECK(entanglement::concurrence_pure_cut(StateVector::basis(3, 0), q) == 0.0);
    CHECK(entanglement::concurrence_pure_cut(states::make_ghz(), q) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("wootters_concurrence") {
  const auto w1 = states::make_w_n({1.0, 0.0, 0.0});
  CHECK(std::abs(entanglement::pair_concurrence(w1, 0, 1) - 0.5) < 1e-12);
  CHECK(std::abs(entanglement::pair_concurrence(w1, 0, 2) - kR2) < 1e-12);
  const auto bell = qcore::density(StateVector({kR2, 0.0, 0.0, kR2}));
  CHECK(entanglement::wootters_concurrence(bell) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entanglement::wootters_concurrence(qcore::DensityMatrix(0.25 * Matrix::identity(4))) == 0.0);
  CHECK_THROWS_AS(entanglement::wootters_concurrence(qcore::density(states::make_ghz())),
                  qcore::QuantumError);
}

TEST_CASE("property: Wootters concurrence matches the W-family closed form") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto raw = oracle::haar_state(2, rng);  // only the amplitudes are reused
    const auto s = StateVector::normalized({0.0, raw[0], raw[1], 0.0, raw[2], 0.0, 0.0, 0.0});
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      CHECK(std::abs(entanglement::pair_concurrence(s, a, b) - oracle::w_family_pair_concurrence(s, a, b)) <
            1e-10);
    }
  }
}

TEST_CASE("three_tangle") {
  CHECK(entanglement::three_tangle(states::make_w_n({1.0, 0.0, 0.0})) == 0.0);
  CHECK(entanglement::three_tangle(states::make_w_prototype()) == 0.0);
  CHECK(entanglement::three_tangle(StateVector::basis(3, 0)) == 0.0);
  // Hyperdeterminant oracle fixes tau(GHZ) = 1.
  CHECK(oracle::hyperdet_tangle(states::make_ghz()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(entanglement::three_tangle(states::make_ghz()) == doctest::Approx(1.0).epsilon(1e-10));
  for (double n : {0.0, 0.25, 3.0})
    for (double g : {0.0, 1.0}) CHECK(entanglement::three_tangle(states::make_w_n({n, g, -g})) == 0.0);
}

TEST_CASE("property: residual tangle equals the hyperdeterminant, monogamy holds") {
  Rng rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = oracle::haar_state(3, rng);
    const double tau = entanglement::three_tangle(s);
    CHECK(std::abs(tau - oracle::hyperdet_tangle(s)) < 1e-7);
    const double c1 = entanglement::concurrence_pure_cut(s, 0);
    const double c12 = entanglement::pair_concurrence(s, 0, 1);
    const double c13 = entanglement::pair_concurrence(s, 0, 2);
    CHECK(c12 * c12 + c13 * c13 <= c1 * c1 + 1e-9);
  }
}

TEST_CASE("property: measures are invariant under local unitaries") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = oracle::haar_state(3, rng);
    auto t = s;
    for (int q = 0; q < 3; ++q) t = qcore::apply_local(oracle::haar_unitary2(rng), {q}, t);
    const auto a = entanglement::analyze(s);
    const auto b = entanglement::analyze(t);
    CHECK(std::abs(a.tangle - b.tangle) < 1e-9);
    CHECK(std::abs(a.concurrence_1_23 - b.concurrence_1_23) < 1e-9);
    for (const auto& [k, v] : a.concurrence_pairs) CHECK(std::abs(v - b.concurrence_pairs.at(k)) < 1e-9);
    for (const auto& [k, v] : a.entropy_bits_per_cut) CHECK(std::abs(v - b.entropy_bits_per_cut.at(k)) < 1e-9);
    CHECK(a.slocc_class == b.slocc_class);
  }
}

TEST_CASE("slocc_classify") {
  CHECK(entanglement::slocc_classify(states::make_ghz()) == SloccClass::GHZClass);
  CHECK(entanglement::slocc_classify(states::make_w_n({1.0, 0.0, 0.0})) == SloccClass::WClass);
  CHECK(entanglement::slocc_classify(states::make_w_prototype()) == SloccClass::WClass);
  CHECK(entanglement::slocc_classify(zero_bell()) == SloccClass::Biseparable);
  CHECK(entanglement::slocc_classify(StateVector::basis(3, 5)) == SloccClass::Product);
  CHECK(entanglement::slocc_classify(states::make_w_n({0.0, 0.0, 0.0})) == SloccClass::Biseparable);
  CHECK(entanglement::to_string(SloccClass::WClass) == "WClass");
}

TEST_CASE("analyze") {
  SUBCASE("W_1") {
    const auto r = entanglement::analyze(states::make_w_n({1.0, 0.0, 0.0}));
    CHECK(std::abs(r.concurrence_pairs.at("12") - 0.5) < 1e-8);
    CHECK(std::abs(r.concurrence_pairs.at("13") - 0.70710678) < 1e-8);
    CHECK(std::abs(r.concurrence_1_23 - 0.86602540) < 1e-8);
    CHECK(r.tangle == 0.0);
    CHECK(std::abs(r.monogamy_slack) <= 1e-9);
    CHECK(r.slocc_class == SloccClass::WClass);
    CHECK(r.entropy_bits_per_cut.at("3|12") == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("|000>") {
    const auto r = entanglement::analyze(StateVector::basis(3, 0));
    CHECK(r.concurrence_1_23 == 0.0);
    CHECK(r.tangle == 0.0);
    for (const auto& [k, v] : r.concurrence_pairs) CHECK(v == 0.0);
    for (const auto& [k, v] : r.entropy_bits_per_cut) CHECK(std::abs(v) < 1e-12);
    CHECK(r.slocc_class == SloccClass::Product);
  }
  SUBCASE("prototype W") {
    const auto r = entanglement::analyze(states::make_w_prototype());
    // a = b = c = 1/sqrt3: every pair has 2|ab| = 2/3.
    for (const auto& [k, v] : r.concurrence_pairs) CHECK(std::abs(v - 2.0 / 3.0) < 1e-10);
    CHECK(r.tangle == 0.0);
    CHECK(r.slocc_class == SloccClass::WClass);
  }
  SUBCASE("non-3-qubit input is rejected") {
    CHECK_THROWS_AS(entanglement::analyze(StateVector::basis(2, 0)), qcore::QuantumError);
  }
}

TEST_CASE("property: W_n saturates the monogamy inequality") {
  for (double n : {0.0, 0.25, 1.0, 2.0, 7.5})
    for (double g : {0.0, std::numbers::pi / 4, std::numbers::pi})
      for (double d : {0.0, std::numbers::pi / 4, std::numbers::pi}) {
        const auto r = entanglement::analyze(states::make_w_n({n, g, d}));
        CHECK(std::abs(r.monogamy_slack) <= 1e-9);
        CHECK(r.tangle == 0.0);
        CHECK(r.entropy_bits_per_cut.at("3|12") == doctest::Approx(1.0).epsilon(1e-10));
      }
}
