#include "cove/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cove/error.hpp"

namespace cove {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "Hadamard";
    case GateKind::X: return "Not";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::Rk: return "R";
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::I: return "Identity";
  }
  return "?";
}

namespace {

bool parameterized(GateKind kind) {
  return kind == GateKind::Rk || kind == GateKind::Rx || kind == GateKind::Ry ||
         kind == GateKind::Rz;
}

double angle_of(const GateSpec& spec) {
  if (!std::holds_alternative<double>(spec.parameter)) {
    throw InvalidParameter(std::string(gate_name(spec.kind)) + " needs an angle in radians");
  }
  return std::get<double>(spec.parameter);
}

}  // namespace

ComplexMatrix gate_matrix(const GateSpec& spec) {
  using namespace std::complex_literals;
  if (!parameterized(spec.kind) && !std::holds_alternative<std::monostate>(spec.parameter)) {
    throw InvalidParameter(std::string(gate_name(spec.kind)) + " takes no parameter");
  }
  const double r = std::numbers::sqrt2 / 2.0;
  switch (spec.kind) {
    case GateKind::H: return {{r, r}, {r, -r}};
    case GateKind::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::Y: return {{0.0, -1i}, {1i, 0.0}};
    case GateKind::Z: return {{1.0, 0.0}, {0.0, -1.0}};
    case GateKind::S: return {{1.0, 0.0}, {0.0, 1i}};
    case GateKind::T: return {{1.0, 0.0}, {0.0, Complex(r, r)}};
    case GateKind::I: return {{1.0, 0.0}, {0.0, 1.0}};
    case GateKind::Rk: {
      if (!std::holds_alternative<int>(spec.parameter)) {
        throw InvalidParameter("R_k needs an integer k");
      }
      const int k = std::get<int>(spec.parameter);
      if (k < 1 || k > 62) throw InvalidParameter("R_k needs 1 <= k <= 62, got " + std::to_string(k));
      const double phi = 2.0 * std::numbers::pi / std::ldexp(1.0, k);
      return {{1.0, 0.0}, {0.0, std::polar(1.0, phi)}};
    }
    case GateKind::Rx: {
      const double h = angle_of(spec) / 2.0;
      return {{std::cos(h), -1i * std::sin(h)}, {-1i * std::sin(h), std::cos(h)}};
    }
    case GateKind::Ry: {
      const double h = angle_of(spec) / 2.0;
      return {{std::cos(h), -std::sin(h)}, {std::sin(h), std::cos(h)}};
    }
    case GateKind::Rz: {
      const double h = angle_of(spec) / 2.0;
      return {{std::polar(1.0, -h), 0.0}, {0.0, std::polar(1.0, h)}};
    }
  }
  throw InvalidParameter("unknown gate kind");
}

QuantumOperation single_qubit_gate(const GateSpec& spec, std::size_t target) {
  std::string name(gate_name(spec.kind));
  if (spec.kind == GateKind::Rk && std::holds_alternative<int>(spec.parameter)) {
    name += "(" + std::to_string(std::get<int>(spec.parameter)) + ")";
  }
  return QuantumOperation::from_matrix(std::move(name), gate_matrix(spec), {target});
}

QuantumOperation hadamard(std::size_t target) { return single_qubit_gate(GateSpec::hadamard(), target); }
QuantumOperation pauli_x(std::size_t target) { return single_qubit_gate(GateSpec::pauli_x(), target); }
QuantumOperation pauli_y(std::size_t target) { return single_qubit_gate(GateSpec::pauli_y(), target); }
QuantumOperation pauli_z(std::size_t target) { return single_qubit_gate(GateSpec::pauli_z(), target); }
QuantumOperation phase_s(std::size_t target) { return single_qubit_gate(GateSpec::phase_s(), target); }
QuantumOperation phase_t(std::size_t target) { return single_qubit_gate(GateSpec::phase_t(), target); }

QuantumOperation cnot(std::size_t control, std::size_t target) {
  return QuantumOperation::controlled("CNot", pauli_x(target), {control});
}

QuantumOperation swap(std::size_t a, std::size_t b) {
  static const ComplexMatrix kSwap{{1.0, 0.0, 0.0, 0.0},
                                   {0.0, 0.0, 1.0, 0.0},
                                   {0.0, 1.0, 0.0, 0.0},
                                   {0.0, 0.0, 0.0, 1.0}};
  return QuantumOperation::from_matrix("Swap", kSwap, {a, b});
}

QuantumOperation toffoli(std::size_t control1, std::size_t control2, std::size_t target) {
  return QuantumOperation::controlled("Toffoli", pauli_x(target), {control1, control2});
}

QuantumOperation fredkin(std::size_t control, std::size_t a, std::size_t b) {
  return QuantumOperation::controlled("Fredkin", swap(a, b), {control});
}

QuantumOperation controlled_u(const QuantumOperation& u, std::vector<std::size_t> controls,
                              std::size_t target) {
  if (u.arity() != 1) {
    throw SizeMismatch("controlled_u needs a single-qubit operation, '" + u.name() + "' has " +
                       std::to_string(u.arity()) + " targets");
  }
  if (controls.empty()) throw InvalidParameter("controlled_u needs at least one control");
  return QuantumOperation::controlled("C-" + u.name(), u.retarget({target}), std::move(controls));
}

QuantumOperation retarget(const QuantumOperation& op, std::vector<std::size_t> new_targets) {
  return op.retarget(std::move(new_targets));
}

ComplexMatrix expand_to_full_matrix(const QuantumOperation& op, std::size_t n) {
  if (n > kExpansionQubitLimit) {
    throw QubitLimitExceeded("full-matrix expansion is limited to " +
                             std::to_string(kExpansionQubitLimit) + " qubits, asked for " +
                             std::to_string(n));
  }
  for (std::size_t t : op.targets()) {
    if (t >= n) {
      throw SizeMismatch("operation '" + op.name() + "' targets index " + std::to_string(t) +
                         " outside a " + std::to_string(n) + "-qubit register");
    }
  }
  const ComplexMatrix local = op.matrix();
  std::uint64_t target_bits = 0;
  for (std::size_t t : op.targets()) target_bits |= std::uint64_t{1} << (n - 1 - t);
  auto local_of = [&](std::uint64_t basis) {
    std::uint64_t l = 0;
    for (std::size_t t : op.targets()) l = (l << 1) | ((basis >> (n - 1 - t)) & 1U);
    return l;
  };

  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix out(dim, dim);
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      if ((row & ~target_bits) != (col & ~target_bits)) continue;
      out(row, col) = local(local_of(row), local_of(col));
    }
  }
  return out;
}

std::string_view state_name(NamedState state) {
  switch (state) {
    case NamedState::Beta00: return "beta00";
    case NamedState::Beta01: return "beta01";
    case NamedState::Beta10: return "beta10";
    case NamedState::Beta11: return "beta11";
    case NamedState::Ghz: return "ghz";
    case NamedState::W: return "w";
  }
  return "?";
}

RegisterView prepare_named_state(SimulationContext& ctx, NamedState state) {
  if (state == NamedState::W) {
    const double a = 1.0 / std::sqrt(3.0);
    // |001>, |010>, |100>
    const std::vector<Complex> amps{0.0, a, a, 0.0, a, 0.0, 0.0, 0.0};
    return ctx.allocate_prepared(amps);
  }
  if (state == NamedState::Ghz) {
    RegisterView reg = ctx.allocate_register(3);
    reg.apply_operation(hadamard(0)).apply_operation(cnot(0, 1)).apply_operation(cnot(1, 2));
    return reg;
  }
  RegisterView reg = ctx.allocate_register(2);
  reg.apply_operation(hadamard(0)).apply_operation(cnot(0, 1));
  if (state == NamedState::Beta01 || state == NamedState::Beta11) reg.apply_operation(pauli_x(0));
  if (state == NamedState::Beta10 || state == NamedState::Beta11) reg.apply_operation(pauli_z(0));
  return reg;
}

}  // namespace cove
