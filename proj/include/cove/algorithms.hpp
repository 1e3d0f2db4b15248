#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cove/operation.hpp"
#include "cove/plan.hpp"
#include "cove/state.hpp"

namespace cove::algorithms {

using Indices = std::vector<std::size_t>;

/// One Hadamard per index. Throws DuplicateIndexes.
OperationPlan hadamard_all_ops(const Indices& indices);

/// How the bit-reversal at the end of the QFT is realized.
enum class QftTail {
  /// Swaps built from CNots; result_indices == indices.
  Physical,
  /// No gates; result_indices lists the indices in reversed order, which is
  /// where the transformed value must be read from.
  Logical,
};

/// Hadamard plus controlled R_k ladder. Reading the register through
/// result_indices (index 0 most significant) gives the DFT with
/// omega = e^(2 pi i / 2^n) of the value read through `indices`.
OperationPlan qft_ops(const Indices& indices, QftTail tail = QftTail::Physical);

/// Adjoint of qft_ops: the ladder reversed with negated phases. Input read
/// through `indices`, output through result_indices.
OperationPlan inverse_qft_ops(const Indices& indices, QftTail tail = QftTail::Physical);

/// |x>|y> -> |x>|y xor f(x)> with f(x) = m^x mod N over `reg1_width + reg2_width`
/// targets 0, 1, ...: x is the big-endian value of the first reg1_width, y of
/// the rest. Throws InvalidParameter when gcd(m, N) != 1 or the widths are
/// unusable.
QuantumOperation semantic_uf(std::uint64_t m, std::uint64_t modulus, std::size_t reg1_width,
                             std::size_t reg2_width);

/// Same oracle shape, but f is obtained by running the reversible
/// modular-exponentiation plan on each REG1 basis value. The plan itself needs
/// 9n + 2 qubits, so it is evaluated classically rather than simulated.
QuantumOperation circuit_uf(std::uint64_t m, std::uint64_t modulus, std::size_t reg1_width,
                            std::size_t reg2_width);

enum class OracleKind { Semantic, Circuit };

std::string_view oracle_name(OracleKind kind);

/// U_f for the quantum step: REG1 has 2n qubits and REG2 n, n = bits_to_express(N).
QuantumOperation build_uf(std::uint64_t m, std::uint64_t modulus, OracleKind kind);

struct PeriodSample {
  std::uint64_t measured = 0;
  std::uint64_t modulus = 1;
  /// REG2 value observed before the inverse QFT.
  std::uint64_t reg2 = 0;
};

struct QuantumStepOptions {
  OracleKind oracle = OracleKind::Semantic;
  /// Called right after REG2 is measured, before the inverse QFT, with the
  /// REG1 view and the observed REG2 value.
  std::function<void(const RegisterView& reg1, std::uint64_t reg2)> after_reg2;
};

/// Allocates 3n fresh qubits in ctx, then: Hadamard-all on REG1, U_f, measure
/// REG2, inverse QFT on REG1, measure REG1.
/// Throws QubitLimitExceeded or InvalidParameter.
PeriodSample shor_quantum_step(SimulationContext& ctx, std::uint64_t modulus, std::uint64_t m,
                               const QuantumStepOptions& options = {});

/// As above with a prebuilt oracle from build_uf(m, modulus, ...).
PeriodSample shor_quantum_step(SimulationContext& ctx, std::uint64_t modulus,
                               const QuantumOperation& uf, const QuantumStepOptions& options = {});

/// Denominators of the continued-fraction convergents of num / den.
std::vector<std::uint64_t> convergent_denominators(std::uint64_t num, std::uint64_t den);

/// Smallest P <= N with m^P mod N == 1 found among convergent denominators of
/// the samples, their multiples, and the lcm of every sample's last usable
/// denominator. nullopt means another sample is needed.
std::optional<std::uint64_t> extract_period(const std::vector<PeriodSample>& samples,
                                            std::uint64_t m, std::uint64_t modulus);

/// The four one-bit functions.
enum class DeutschOracle { Zero, One, Identity, Negation };

enum class DeutschVerdict { Constant, Balanced };

std::string_view verdict_name(DeutschVerdict verdict);

/// Two-qubit U_f on (x, y) built from CNot and X on y.
QuantumOperation deutsch_oracle(DeutschOracle oracle, std::size_t x = 0, std::size_t y = 1);

/// Allocates two qubits, runs H, U_f, H with the second qubit prepared |1>,
/// and measures the first.
DeutschVerdict deutsch(SimulationContext& ctx, DeutschOracle oracle);

}  // namespace cove::algorithms
