#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cove/plan.hpp"

/// Plan builders for reversible arithmetic, assembled only from X, CNot,
/// Toffoli and Swap.
///
/// Multi-qubit operands are little-endian index lists: element 0 is the least
/// significant bit. Every scratch qubit must be |0> when a plan starts and is
/// |0> again when it ends.
namespace cove::arithmetic {

using Indices = std::vector<std::size_t>;

/// y <- c xor x xor y; c and x unchanged.
OperationPlan sum_ops(std::size_t carry, std::size_t x, std::size_t y);

/// y <- x xor y; ancilla accumulates the majority of (carry, x, y).
OperationPlan carry_ops(std::size_t carry, std::size_t x, std::size_t y, std::size_t ancilla);

/// The carry sequence run backwards.
OperationPlan carry_inverse_ops(std::size_t carry, std::size_t x, std::size_t y,
                                std::size_t ancilla);

/// Ripple-carry adder: Y <- X + Y with |X| == |Y| == n and n + 1 ancillae.
/// The sum's top bit lands in the last ancilla; result_indices lists Y
/// followed by that ancilla. The inverse plan subtracts.
/// Throws ArgumentNull for empty lists, SizeMismatch, DuplicateIndexes.
OperationPlan add_n_ops(const Indices& x, const Indices& y, const Indices& ancillae);

/// Y <- (X + Y) mod modulus for X, Y < modulus.
///
/// `n_register` must hold the modulus when the plan runs and is restored.
/// `ancillae` holds n + 1 qubits (the adder's carries and overflow bit) and
/// `flag` records the comparison against the modulus. The controlled reset of
/// the modulus register uses the overflow-flag construction: the flag is set
/// by the sign of X + Y - modulus, gates the add-back, and is cleared by
/// recomputing the sign of the result minus X.
OperationPlan modular_add_ops(const Indices& x, const Indices& y, const Indices& n_register,
                              const Indices& ancillae, std::size_t flag, std::uint64_t modulus);

/// Scratch qubits needed by controlled_modular_multiply_ops for n-bit operands.
constexpr std::size_t multiplier_ancilla_count(std::size_t n) { return 2 * n + 2; }

/// Y_out <- (multiplier * X) mod modulus when `control` is |1>, else Y_out <- X.
/// Y_out must start at 0 and X < modulus; `n_register` holds the modulus.
/// Ancilla layout: [0, n) addend, [n, 2n] adder carries and overflow, 2n + 1 flag.
/// The addends (multiplier * 2^j) mod modulus are computed classically.
OperationPlan controlled_modular_multiply_ops(std::size_t control, const Indices& x,
                                              const Indices& y_out, const Indices& n_register,
                                              const Indices& ancillae, std::uint64_t multiplier,
                                              std::uint64_t modulus);

/// Scratch qubits needed by modular_exponentiation_ops for n-bit values.
constexpr std::size_t exponentiation_ancilla_count(std::size_t n) { return 4 * n + 2; }

/// REG2 <- base^x mod modulus for the value x held in REG1, with REG2 holding 1
/// on entry. One controlled multiplication by base^(2^j) mod modulus per REG1
/// bit j, each followed by a swap of accumulators and an uncomputation with the
/// modular inverse. Ancilla layout: [0, n) second accumulator, [n, 2n) modulus
/// register (loaded and unloaded by the plan), [2n, 4n + 2) multiplier scratch.
OperationPlan modular_exponentiation_ops(const Indices& reg1, const Indices& reg2,
                                         const Indices& ancillae, std::uint64_t base,
                                         std::uint64_t modulus);

/// X gates writing a classical constant into |0...0>.
OperationPlan load_constant_ops(const Indices& indices, std::uint64_t value);

/// Position i <-> position len - 1 - i, each swap built from three CNots.
OperationPlan reverse_ops(const Indices& indices);

}  // namespace cove::arithmetic
