#include "cove/plan.hpp"

#include <string>

#include "cove/error.hpp"

namespace cove {

OperationPlan inverse_plan(const OperationPlan& plan) {
  OperationPlan out;
  out.result_indices = plan.result_indices;
  out.ops.reserve(plan.ops.size());
  for (auto it = plan.ops.rbegin(); it != plan.ops.rend(); ++it) out.ops.push_back(it->adjoint());
  return out;
}

RegisterView& apply_plan(RegisterView& view, const OperationPlan& plan) {
  return view.apply_operations(plan.ops);
}

std::vector<std::uint8_t> evaluate_basis(const OperationPlan& plan, std::vector<std::uint8_t> bits) {
  for (const QuantumOperation& op : plan.ops) {
    if (!op.is_classical_permutation()) {
      throw InvalidParameter("operation '" + op.name() + "' does not permute basis states");
    }
    for (std::size_t t : op.targets()) {
      if (t >= bits.size()) {
        throw SizeMismatch("operation '" + op.name() + "' targets index " + std::to_string(t) +
                           " outside " + std::to_string(bits.size()) + " bits");
      }
    }
    bool enabled = true;
    for (std::size_t c : op.controls()) enabled = enabled && bits[c] != 0;
    if (!enabled) continue;
    const auto targets = op.action_targets();
    const std::size_t k = targets.size();
    std::uint64_t local = 0;
    for (std::size_t t : targets) local = (local << 1) | (bits[t] ? 1U : 0U);
    const std::uint64_t image = *op.map_action_basis(local);
    for (std::size_t i = 0; i < k; ++i) bits[targets[i]] = (image >> (k - 1 - i)) & 1U;
  }
  return bits;
}

std::uint64_t read_little_endian(const std::vector<std::uint8_t>& bits,
                                 const std::vector<std::size_t>& indices) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (bits.at(indices[i])) value |= std::uint64_t{1} << i;
  return value;
}

void write_little_endian(std::vector<std::uint8_t>& bits, const std::vector<std::size_t>& indices,
                         std::uint64_t value) {
  for (std::size_t i = 0; i < indices.size(); ++i) bits.at(indices[i]) = (value >> i) & 1U;
}

}  // namespace cove
