#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cove/operation.hpp"
#include "cove/state.hpp"

namespace cove {

/// An ordered gate sequence plus the indices that carry its semantic output.
struct OperationPlan {
  std::vector<QuantumOperation> ops;
  std::vector<std::size_t> result_indices;

  void append(const OperationPlan& other) {
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
  }
  void append(QuantumOperation op) { ops.push_back(std::move(op)); }
};

/// Reversed sequence with every operation replaced by its adjoint.
/// result_indices are carried over unchanged.
OperationPlan inverse_plan(const OperationPlan& plan);

/// Applies every operation of the plan, left to right.
RegisterView& apply_plan(RegisterView& view, const OperationPlan& plan);

/// Runs a plan of classical permutation gates on a single basis state.
/// bits[i] is the value of register index i. Throws InvalidParameter for
/// operations that do not map basis states to basis states, and SizeMismatch
/// when a target lies outside `bits`.
std::vector<std::uint8_t> evaluate_basis(const OperationPlan& plan, std::vector<std::uint8_t> bits);

/// Little-endian helpers for the arithmetic builders: element 0 of `indices`
/// is the least significant bit.
std::uint64_t read_little_endian(const std::vector<std::uint8_t>& bits,
                                 const std::vector<std::size_t>& indices);
void write_little_endian(std::vector<std::uint8_t>& bits, const std::vector<std::size_t>& indices,
                         std::uint64_t value);

}  // namespace cove
