#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cove/complex_matrix.hpp"
#include "cove/operation.hpp"
#include "cove/state.hpp"

namespace cove::detail {

/// Amplitudes over P physical qubits. Physical qubit p occupies bit (P-1-p)
/// of the basis index, so the vector reads in ket order |q0 q1 ... q(P-1)>.
class SharedState {
 public:
  explicit SharedState(ContextOptions options);

  std::vector<std::size_t> append(std::size_t n);
  std::vector<std::size_t> append_prepared(std::span<const Complex> amplitudes);

  /// physical_targets[i] binds op target i.
  void apply(const QuantumOperation& op, std::span<const std::size_t> physical_targets);

  std::vector<bool> measure(std::span<const std::size_t> physical);

  double probability_of_one(std::size_t physical) const;

  std::uint64_t mask_of(std::size_t physical) const noexcept {
    return std::uint64_t{1} << (count_ - 1 - physical);
  }

  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  std::size_t count() const noexcept { return count_; }
  const ContextOptions& options() const noexcept { return options_; }

  std::string location = std::string(kLocalhost);
  std::uint64_t applied_operations = 0;

 private:
  void check_capacity(std::size_t extra) const;
  void apply_matrix(const QuantumOperation& op, std::span<const std::uint64_t> action_masks,
                    std::uint64_t control_mask);
  void apply_permutation(const QuantumOperation& op, std::span<const std::uint64_t> action_masks,
                         std::uint64_t control_mask);
  double uniform();

  ContextOptions options_;
  std::size_t count_ = 0;
  std::vector<Complex> amplitudes_{Complex{1.0}};
  std::mt19937_64 rng_;
};

/// Library-internal back door to the shared state behind handles.
struct ContextAccess {
  static SharedState& shared(const SimulationContext& ctx) { return *ctx.shared_; }
  static SharedState& shared(const RegisterView& view) { return *view.shared_; }
};

}  // namespace cove::detail
