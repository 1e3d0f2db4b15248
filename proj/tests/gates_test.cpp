#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <numbers>
#include <random>
#include <vector>

#include "cove/error.hpp"
#include "cove/gates.hpp"
#include "cove/inspect.hpp"
#include "cove/plan.hpp"
#include "test_support.hpp"

using namespace cove;
using namespace std::complex_literals;
using cove::debug::peek_amplitudes;
using cove::debug::peek_context;
using cove::fixtures::inspectable;

namespace {

const double kR = 1.0 / std::numbers::sqrt2;

// Entries typed in from the gate tables.
const ComplexMatrix kTableH{{kR, kR}, {kR, -kR}};
const ComplexMatrix kTableX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kTableY{{0.0, -1i}, {1i, 0.0}};
const ComplexMatrix kTableZ{{1.0, 0.0}, {0.0, -1.0}};
const ComplexMatrix kTableS{{1.0, 0.0}, {0.0, 1i}};
const ComplexMatrix kTableT{{1.0, 0.0}, {0.0, std::exp(1i * std::numbers::pi / 4.0)}};
const ComplexMatrix kTableCnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
const ComplexMatrix kReversedCnot{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
const ComplexMatrix kTableSwap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};

ComplexMatrix permutation_matrix(const std::vector<std::size_t>& image) {
  ComplexMatrix m(image.size(), image.size());
  for (std::size_t col = 0; col < image.size(); ++col) m(image[col], col) = 1.0;
  return m;
}

const ComplexMatrix kTableToffoli = permutation_matrix({0, 1, 2, 3, 4, 5, 7, 6});
const ComplexMatrix kTableFredkin = permutation_matrix({0, 1, 2, 3, 4, 6, 5, 7});

std::uint64_t basis_image(const QuantumOperation& op, std::size_t n, std::uint64_t in) {
  const auto out = evaluate_basis(OperationPlan{{op}, {}}, fixtures::bits_of(in, n));
  std::uint64_t v = 0;
  for (std::uint8_t b : out) v = (v << 1) | b;
  return v;
}

}  // namespace

TEST(Catalog, SingleQubitMatricesMatchTable) {
  EXPECT_TRUE(approx_equal(hadamard().matrix(), kTableH, 1e-12));
  EXPECT_TRUE(approx_equal(pauli_x().matrix(), kTableX, 1e-12));
  EXPECT_TRUE(approx_equal(pauli_y().matrix(), kTableY, 1e-12));
  EXPECT_TRUE(approx_equal(pauli_z().matrix(), kTableZ, 1e-12));
  EXPECT_TRUE(approx_equal(phase_s().matrix(), kTableS, 1e-12));
  EXPECT_TRUE(approx_equal(phase_t().matrix(), kTableT, 1e-12));
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::identity()), identity(1), 1e-12));
}

TEST(Catalog, RotationsUseHalfAngles) {
  const double th = 0.7;
  const ComplexMatrix rx{{std::cos(th / 2), -1i * std::sin(th / 2)},
                         {-1i * std::sin(th / 2), std::cos(th / 2)}};
  const ComplexMatrix ry{{std::cos(th / 2), -std::sin(th / 2)}, {std::sin(th / 2), std::cos(th / 2)}};
  const ComplexMatrix rz{{std::exp(-1i * th / 2.0), 0.0}, {0.0, std::exp(1i * th / 2.0)}};
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::rx(th)), rx, 1e-12));
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::ry(th)), ry, 1e-12));
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::rz(th)), rz, 1e-12));
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::rz(0.0)), identity(1), 1e-12));
  // The unnamed real rotation by theta is Ry(2 theta).
  const ComplexMatrix real_rotation{{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}};
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::ry(2 * th)), real_rotation, 1e-12));
}

TEST(Catalog, MultiQubitMatricesMatchTable) {
  EXPECT_TRUE(approx_equal(cnot(0, 1).matrix(), kTableCnot, 1e-12));
  EXPECT_TRUE(approx_equal(swap(0, 1).matrix(), kTableSwap, 1e-12));
  EXPECT_TRUE(approx_equal(toffoli(0, 1, 2).matrix(), kTableToffoli, 1e-12));
  EXPECT_TRUE(approx_equal(fredkin(0, 1, 2).matrix(), kTableFredkin, 1e-12));
  EXPECT_TRUE(approx_equal(expand_to_full_matrix(cnot(1, 0), 2), kReversedCnot, 1e-12));
  EXPECT_TRUE(approx_equal(expand_to_full_matrix(retarget(cnot(0, 1), {1, 0}), 2), kReversedCnot, 1e-12));
}

TEST(Catalog, EveryGateIsUnitary) {
  for (const auto& op : {hadamard(), pauli_x(), pauli_y(), pauli_z(), phase_s(), phase_t(), cnot(),
                         swap(), toffoli(), fredkin(), single_qubit_gate(GateSpec::rk(5)),
                         single_qubit_gate(GateSpec::rx(1.1)), single_qubit_gate(GateSpec::ry(-2.0)),
                         single_qubit_gate(GateSpec::rz(3.0))}) {
    EXPECT_TRUE(op.is_unitary()) << op.name();
    EXPECT_TRUE(is_unitary(op.matrix(), 1e-10)) << op.name();
  }
}

TEST(Catalog, PhaseLadder) {
  EXPECT_TRUE(approx_equal(multiply(kTableT, kTableT), kTableS, 1e-12));
  EXPECT_TRUE(approx_equal(multiply(kTableS, kTableS), kTableZ, 1e-12));
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::rk(2)), kTableS, 1e-12));
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::rk(3)), kTableT, 1e-12));
  EXPECT_TRUE(approx_equal(gate_matrix(GateSpec::rk(1)), kTableZ, 1e-12));
}

TEST(Catalog, Involutions) {
  for (const auto& op : {hadamard(), pauli_x(), pauli_y(), pauli_z(), cnot(), swap(), toffoli(),
                         fredkin()}) {
    const ComplexMatrix m = op.matrix();
    EXPECT_TRUE(approx_equal(multiply(m, m), identity(op.arity()), 1e-10)) << op.name();
  }
}

TEST(Catalog, ParameterValidation) {
  EXPECT_THROW(gate_matrix(GateSpec::rk(0)), InvalidParameter);
  EXPECT_THROW(gate_matrix(GateSpec{GateKind::Rk, 1.5}), InvalidParameter);
  EXPECT_THROW(gate_matrix(GateSpec{GateKind::Rx, {}}), InvalidParameter);
  EXPECT_THROW(gate_matrix(GateSpec{GateKind::H, 2}), InvalidParameter);
}

TEST(Cnot, TruthTable) {
  EXPECT_EQ(basis_image(cnot(0, 1), 2, 0b00), 0b00u);
  EXPECT_EQ(basis_image(cnot(0, 1), 2, 0b01), 0b01u);
  EXPECT_EQ(basis_image(cnot(0, 1), 2, 0b10), 0b11u);
  EXPECT_EQ(basis_image(cnot(0, 1), 2, 0b11), 0b10u);
  EXPECT_THROW(cnot(1, 1), DuplicateIndexes);
}

TEST(Cnot, ReversedSwapsOneOneAndZeroOne) {
  const ComplexMatrix m = expand_to_full_matrix(cnot(1, 0), 2);
  EXPECT_EQ(m(0b11, 0b01), Complex(1.0));
  EXPECT_EQ(m(0b01, 0b11), Complex(1.0));
  EXPECT_EQ(m(0b10, 0b10), Complex(1.0));
}

TEST(Swap, BasisExamplesAndThreeCnots) {
  EXPECT_EQ(basis_image(swap(0, 1), 2, 0b01), 0b10u);
  EXPECT_EQ(basis_image(swap(0, 1), 2, 0b00), 0b00u);
  const ComplexMatrix three = multiply(
      expand_to_full_matrix(cnot(0, 1), 2),
      multiply(expand_to_full_matrix(cnot(1, 0), 2), expand_to_full_matrix(cnot(0, 1), 2)));
  EXPECT_TRUE(approx_equal(three, kTableSwap, 1e-12));
  EXPECT_THROW(swap(0, 0), DuplicateIndexes);
}

TEST(Toffoli, QuantumAnd) {
  EXPECT_EQ(basis_image(toffoli(), 3, 0b110), 0b111u);
  EXPECT_EQ(basis_image(toffoli(), 3, 0b010), 0b010u);
  EXPECT_EQ(basis_image(toffoli(), 3, 0b111), 0b110u);
  EXPECT_THROW(toffoli(0, 1, 1), DuplicateIndexes);
}

TEST(Fredkin, ClassicalConstructions) {
  // Targets (control, a, b) are bound to bits (2, 0, 1) so the ket reads |a b control>.
  const QuantumOperation f = fredkin(2, 0, 1);
  for (std::uint64_t x = 0; x < 2; ++x) {
    for (std::uint64_t y = 0; y < 2; ++y) {
      const std::uint64_t out = basis_image(f, 3, (0 << 2) | (y << 1) | x);
      EXPECT_EQ(out, ((x & y) << 2) | (((1 - x) & y) << 1) | x);
    }
    EXPECT_EQ(basis_image(f, 3, (1 << 2) | (0 << 1) | x), ((1 - x) << 2) | (x << 1) | x);
  }
  for (std::uint64_t in = 0; in < 8; ++in)
    EXPECT_EQ(std::popcount(basis_image(f, 3, in)), std::popcount(in));
}

TEST(ControlledU, BlockForm) {
  for (std::uint64_t in = 0; in < 4; ++in)
    EXPECT_EQ(basis_image(controlled_u(pauli_x(), {0}, 1), 2, in), basis_image(cnot(0, 1), 2, in));
  const ComplexMatrix cs = controlled_u(phase_s(), {0}, 1).matrix();
  EXPECT_EQ(cs(0b10, 0b10), Complex(1.0));
  EXPECT_EQ(cs(0b11, 0b11), Complex(0.0, 1.0));
  EXPECT_TRUE(approx_equal(controlled_u(pauli_x(), {0, 1}, 2).matrix(), kTableToffoli, 1e-12));
  EXPECT_THROW(controlled_u(pauli_x(), {1}, 1), DuplicateIndexes);
  EXPECT_THROW(controlled_u(cnot(), {2}, 3), SizeMismatch);
}

TEST(Retarget, ChecksAndPreservesOriginal) {
  const QuantumOperation op = cnot(0, 1);
  const QuantumOperation moved = retarget(op, {2, 0});
  EXPECT_EQ(op.targets()[0], 0u);
  EXPECT_EQ(moved.targets()[0], 2u);
  EXPECT_THROW(retarget(op, {0}), SizeMismatch);
  EXPECT_THROW(retarget(op, {1, 1}), DuplicateIndexes);
  EXPECT_EQ(expand_to_full_matrix(retarget(op, {0, 1}), 2), expand_to_full_matrix(op, 2));
}

TEST(Retarget, EquivalentToSlicedApplication) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = fixtures::random_state(4, rng);
    std::vector<std::size_t> s{0, 1, 2, 3};
    std::shuffle(s.begin(), s.end(), rng);
    const QuantumOperation op = controlled_u(single_qubit_gate(GateSpec::ry(0.3 * trial)), {1}, 3);
    auto c1 = inspectable();
    auto c2 = inspectable();
    c1.allocate_prepared(psi).slice(s).apply_operation(op);
    std::vector<std::size_t> mapped;
    for (std::size_t t : op.targets()) mapped.push_back(s[t]);
    c2.allocate_prepared(psi).apply_operation(retarget(op, mapped));
    EXPECT_TRUE(approx_equal(peek_context(c1), peek_context(c2), 1e-12));
  }
}

TEST(Expand, Examples) {
  EXPECT_TRUE(approx_equal(expand_to_full_matrix(hadamard(0), 2), tensor(kTableH, identity(1)), 1e-12));
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_EQ(expand_to_full_matrix(single_qubit_gate(GateSpec::identity(), 0), n), identity(n));
  const ComplexMatrix m = expand_to_full_matrix(cnot(0, 2), 3);
  std::vector<std::size_t> image{0, 1, 2, 3, 5, 4, 7, 6};
  EXPECT_EQ(m, permutation_matrix(image));
  EXPECT_THROW(expand_to_full_matrix(hadamard(0), kExpansionQubitLimit + 1), QubitLimitExceeded);
  EXPECT_THROW(expand_to_full_matrix(cnot(0, 3), 3), SizeMismatch);
  const auto perm = QuantumOperation::from_permutation(
      "Inc", 2, [](std::uint64_t v) { return (v + 1) % 4; }, {0, 1});
  EXPECT_THROW(expand_to_full_matrix(perm, 2), SemanticOracleNotMaterializable);
}

TEST(DualPath, DirectApplicationMatchesFullMatrix) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> kind(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 3;
    std::vector<std::size_t> q(n);
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(q.begin(), q.end(), rng);
    QuantumOperation op = hadamard(q[0]);
    switch (kind(rng)) {
      case 0: op = hadamard(q[0]); break;
      case 1: op = pauli_y(q[0]); break;
      case 2: op = phase_t(q[0]); break;
      case 3: op = single_qubit_gate(GateSpec::rx(0.1 * trial), q[0]); break;
      case 4: op = cnot(q[0], q[1]); break;
      case 5: op = swap(q[0], q[1]); break;
      case 6: op = toffoli(q[0], q[1], q[2]); break;
      case 7: op = fredkin(q[0], q[1], q[2]); break;
      case 8: op = controlled_u(single_qubit_gate(GateSpec::rk(3)), {q[0], q[1]}, q[2]); break;
      default:
        op = QuantumOperation::from_matrix("HxS", tensor(kTableH, kTableS), {q[0], q[1]});
        break;
    }
    const auto psi = fixtures::random_state(n, rng);
    auto ctx = inspectable();
    ctx.allocate_prepared(psi).apply_operation(op);
    const ComplexMatrix expected = multiply(expand_to_full_matrix(op, n), fixtures::column(psi));
    EXPECT_LT(max_abs_difference(peek_context(ctx), expected), 1e-9) << op.name();
  }
}

TEST(Permutation, OracleChecksBijection) {
  EXPECT_THROW(QuantumOperation::from_permutation("Zero", 2, [](std::uint64_t) { return 0; }, {0, 1}),
               InvalidParameter);
  EXPECT_THROW(QuantumOperation::from_permutation("Null", 1, nullptr, {0}), ArgumentNull);
  const auto inc = QuantumOperation::from_permutation(
      "Inc", 2, [](std::uint64_t v) { return (v + 1) % 4; }, {0, 1});
  auto ctx = inspectable();
  RegisterView r = ctx.allocate_register(2);
  r.set_from_unsigned(3).apply_operation(inc);
  EXPECT_EQ(r.measure().to_unsigned(), 0u);
  r.apply_operation(inc.adjoint());
  EXPECT_EQ(r.measure().to_unsigned(), 3u);
}

TEST(Walsh, EqualsIndependentHadamards) {
  const ComplexMatrix walsh = tensor(kTableH, tensor(kTableH, kTableH));
  auto ctx = inspectable();
  RegisterView r = ctx.allocate_register(3);
  r.set_from_unsigned(0b101);
  for (std::size_t i = 0; i < 3; ++i) r.apply_operation(hadamard(i));
  EXPECT_TRUE(approx_equal(peek_context(ctx), multiply(walsh, fixtures::basis_column(3, 0b101)), 1e-12));
}

TEST(NamedStates, Amplitudes) {
  auto amps = [](NamedState s) {
    auto ctx = inspectable();
    return peek_amplitudes(prepare_named_state(ctx, s)).amplitudes;
  };
  auto col = [](std::vector<Complex> v) { return ComplexMatrix::column(v); };
  const double w = 1.0 / std::sqrt(3.0);
  EXPECT_TRUE(approx_equal(amps(NamedState::Beta00), col({kR, 0, 0, kR}), 1e-12));
  EXPECT_TRUE(approx_equal(amps(NamedState::Beta01), col({0, kR, kR, 0}), 1e-12));
  EXPECT_TRUE(approx_equal(amps(NamedState::Beta10), col({kR, 0, 0, -kR}), 1e-12));
  EXPECT_TRUE(approx_equal(amps(NamedState::Beta11), col({0, kR, -kR, 0}), 1e-12));
  EXPECT_TRUE(approx_equal(amps(NamedState::Ghz), col({kR, 0, 0, 0, 0, 0, 0, kR}), 1e-12));
  EXPECT_TRUE(approx_equal(amps(NamedState::W), col({0, w, w, 0, w, 0, 0, 0}), 1e-12));
}

TEST(NamedStates, CapacityIsChecked) {
  SimulationContext ctx(ContextOptions{0, 2, false});
  EXPECT_THROW(prepare_named_state(ctx, NamedState::Ghz), QubitLimitExceeded);
}
