#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cove/complex_matrix.hpp"
#include "cove/operation.hpp"

namespace cove {

/// Hard architectural ceiling on physical qubits per context.
inline constexpr std::size_t kMaxQubitCap = 62;
/// Default cap: 2^26 amplitudes is about 1 GiB.
inline constexpr std::size_t kDefaultQubitCap = 26;
/// Outcomes whose probability falls below this are never sampled.
inline constexpr double kExtinctProbability = 1e-12;

inline constexpr std::string_view kLocalhost = "localhost";

/// Stable per-trial seed derived from a master seed (splitmix64 mixing), so
/// batch results do not depend on execution order.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

/// Ordered bits produced by measurement; bit 0 is the most significant.
class ClassicalResult {
 public:
  ClassicalResult() = default;
  explicit ClassicalResult(std::vector<bool> bits) : bits_(std::move(bits)) {}

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_.at(i); }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  /// Big-endian value. Throws Overflow beyond 64 bits.
  std::uint64_t to_unsigned() const;
  std::string to_bitstring() const;

  friend bool operator==(const ClassicalResult&, const ClassicalResult&) = default;

 private:
  std::vector<bool> bits_;
};

struct ContextOptions {
  std::uint64_t seed = 0;
  std::size_t qubit_cap = kDefaultQubitCap;
  /// Enables cove::debug::peek_amplitudes on this context. Off for anything
  /// reachable from the command line.
  bool allow_inspection = false;
};

class RegisterView;

namespace detail {
class SharedState;
struct ContextAccess;
}  // namespace detail

/// Handle to one simulation: the amplitude vector over every physical qubit
/// allocated so far, its RNG, and its resource location. Copies alias the
/// same simulation; there is no way to duplicate amplitudes.
///
/// A context and all views on it form a single-threaded unit.
class SimulationContext {
 public:
  explicit SimulationContext(ContextOptions options = {});

  /// Appends n qubits in |0...0>. Existing qubits, including entangled ones,
  /// are unaffected. Throws QubitLimitExceeded past the cap.
  RegisterView allocate_register(std::size_t n);

  /// Appends a fresh register initialized from a classical description of its
  /// amplitudes (length 2^k, normalized within kStateTolerance).
  RegisterView allocate_prepared(std::span<const Complex> amplitudes);

  std::size_t physical_count() const noexcept;
  std::size_t qubit_cap() const noexcept;
  std::uint64_t seed() const noexcept;

  const std::string& location() const noexcept;
  /// Only "localhost" is accepted; anything else throws InvalidLocation.
  void set_location(std::string_view location);

  /// Sum of |amplitude|^2 across the whole context.
  double total_probability() const;

  /// Number of operations applied so far (measurements excluded).
  std::uint64_t applied_operation_count() const noexcept;

  friend bool operator==(const SimulationContext& a, const SimulationContext& b) noexcept {
    return a.shared_ == b.shared_;
  }

 private:
  friend class RegisterView;
  friend struct detail::ContextAccess;
  explicit SimulationContext(std::shared_ptr<detail::SharedState> shared)
      : shared_(std::move(shared)) {}

  std::shared_ptr<detail::SharedState> shared_;
};

/// A logical register: exposed index i refers to physical qubit exposed()[i].
/// Exposed index 0 is the leftmost ket symbol and the most significant bit.
/// Views are cheap handles; every copy and every slice aliases the same
/// amplitudes.
class RegisterView {
 public:
  std::size_t size() const noexcept { return exposed_.size(); }
  std::span<const std::size_t> exposed() const noexcept { return exposed_; }
  SimulationContext context() const { return SimulationContext(shared_); }

  /// New view over the selected exposed indices, in the given order.
  /// Throws IndexOutOfRange or DuplicateIndexes.
  RegisterView slice(std::span<const std::size_t> indices) const;
  RegisterView slice(std::initializer_list<std::size_t> indices) const;
  /// Exposed indices [0, count).
  RegisterView slice_to(std::size_t count) const;
  /// Exposed indices [start, size()).
  RegisterView slice_from(std::size_t start) const;
  /// Exposed indices [start, end).
  RegisterView slice_range(std::size_t start, std::size_t end) const;
  RegisterView slice_reverse() const;
  /// Selected indices kept in this view's order.
  RegisterView slice_subset(std::span<const std::size_t> indices) const;
  /// Full permutation of this view's indices.
  RegisterView slice_reorder(std::span<const std::size_t> order) const;

  /// Applies op to the exposed indices named by its targets. Throws
  /// SizeMismatch when a target does not exist in this view and
  /// NotUnitaryOperation (state untouched) for non-unitary actions.
  RegisterView& apply_operation(const QuantumOperation& op);
  RegisterView& apply_operations(std::span<const QuantumOperation> ops);

  /// Measures every exposed qubit.
  ClassicalResult measure();
  /// Measures the given exposed indices, in the given order.
  ClassicalResult measure(std::span<const std::size_t> subset);
  ClassicalResult measure(std::initializer_list<std::size_t> subset);

  /// Flips exactly the qubits whose classical bit differs from `value`
  /// (big-endian). Throws ValueOutOfRange or NotClassicalState.
  RegisterView& set_from_unsigned(std::uint64_t value);

 private:
  friend class SimulationContext;
  friend struct detail::ContextAccess;
  RegisterView(std::shared_ptr<detail::SharedState> shared, std::vector<std::size_t> exposed)
      : shared_(std::move(shared)), exposed_(std::move(exposed)) {}

  std::vector<std::size_t> physical_of(std::span<const std::size_t> indices) const;

  std::shared_ptr<detail::SharedState> shared_;
  std::vector<std::size_t> exposed_;
};

}  // namespace cove
