#pragma once

#include <cstddef>
#include <vector>

#include "cove/complex_matrix.hpp"
#include "cove/state.hpp"

/// Test and debugging access to amplitudes. A real device cannot do this, so
/// it only works on contexts created with ContextOptions::allow_inspection.
namespace cove::debug {

struct AmplitudeSnapshot {
  /// True when the view's qubits are unentangled with the rest of the context;
  /// `amplitudes` is then the 2^k column for the view in exposed order, with
  /// the global phase fixed by the dominant branch of the remaining qubits.
  bool separable = false;
  ComplexMatrix amplitudes;
  /// Physical index of each exposed qubit. When not separable, `amplitudes`
  /// is the whole context vector in physical order.
  std::vector<std::size_t> exposed;
};

/// Never mutates state. Throws DebugOnlyViolation on non-inspectable contexts.
AmplitudeSnapshot peek_amplitudes(const RegisterView& view);

/// The whole context vector in physical ket order.
ComplexMatrix peek_context(const SimulationContext& ctx);

}  // namespace cove::debug
