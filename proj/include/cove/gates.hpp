#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cove/complex_matrix.hpp"
#include "cove/operation.hpp"
#include "cove/state.hpp"

namespace cove {

enum class GateKind { H, X, Y, Z, S, T, Rk, Rx, Ry, Rz, I };

/// A single-qubit gate from the catalog. `parameter` holds k for Rk and an
/// angle in radians for Rx/Ry/Rz; it is empty for every other kind.
struct GateSpec {
  GateKind kind = GateKind::I;
  std::variant<std::monostate, int, double> parameter;

  static GateSpec hadamard() { return {GateKind::H, {}}; }
  static GateSpec pauli_x() { return {GateKind::X, {}}; }
  static GateSpec pauli_y() { return {GateKind::Y, {}}; }
  static GateSpec pauli_z() { return {GateKind::Z, {}}; }
  static GateSpec phase_s() { return {GateKind::S, {}}; }
  static GateSpec phase_t() { return {GateKind::T, {}}; }
  static GateSpec identity() { return {GateKind::I, {}}; }
  static GateSpec rk(int k) { return {GateKind::Rk, k}; }
  static GateSpec rx(double theta) { return {GateKind::Rx, theta}; }
  static GateSpec ry(double theta) { return {GateKind::Ry, theta}; }
  static GateSpec rz(double theta) { return {GateKind::Rz, theta}; }
};

std::string_view gate_name(GateKind kind);

/// 2x2 matrix for a spec. Throws InvalidParameter on a missing, extra or
/// out-of-range parameter (Rk needs k >= 1).
ComplexMatrix gate_matrix(const GateSpec& spec);

QuantumOperation single_qubit_gate(const GateSpec& spec, std::size_t target = 0);

QuantumOperation hadamard(std::size_t target = 0);
QuantumOperation pauli_x(std::size_t target = 0);
QuantumOperation pauli_y(std::size_t target = 0);
QuantumOperation pauli_z(std::size_t target = 0);
QuantumOperation phase_s(std::size_t target = 0);
QuantumOperation phase_t(std::size_t target = 0);

/// Flips target iff control is |1>. cnot(1, 0) is the reversed CNot.
QuantumOperation cnot(std::size_t control = 0, std::size_t target = 1);
QuantumOperation swap(std::size_t a = 0, std::size_t b = 1);
/// Doubly controlled Not: the reversible And.
QuantumOperation toffoli(std::size_t control1 = 0, std::size_t control2 = 1, std::size_t target = 2);
/// Controlled swap of a and b.
QuantumOperation fredkin(std::size_t control = 0, std::size_t a = 1, std::size_t b = 2);

/// Applies the single-qubit `u` to `target` iff all controls are |1>.
QuantumOperation controlled_u(const QuantumOperation& u, std::vector<std::size_t> controls,
                              std::size_t target);

QuantumOperation retarget(const QuantumOperation& op, std::vector<std::size_t> new_targets);

/// Largest register width expand_to_full_matrix will build.
inline constexpr std::size_t kExpansionQubitLimit = 10;

/// 2^n x 2^n matrix of op acting on an n-qubit register (exposed index 0 is
/// the most significant bit), identity on untouched qubits. Built entry by
/// entry, independently of the state-vector kernels, as a validation oracle.
ComplexMatrix expand_to_full_matrix(const QuantumOperation& op, std::size_t n);

enum class NamedState { Beta00, Beta01, Beta10, Beta11, Ghz, W };

std::string_view state_name(NamedState state);

/// Allocates a fresh register in the named state: Bell states from H and CNot
/// (with X then Z on the first qubit for the other three), GHZ from H and two
/// CNots, W from its amplitudes.
RegisterView prepare_named_state(SimulationContext& ctx, NamedState state);

}  // namespace cove
