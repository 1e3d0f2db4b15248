#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cove/complex_matrix.hpp"

namespace cove {

/// Maps a local basis index of a permutation action to its image. Bit
/// (arity - 1 - i) of the index is the value of target i, so target 0 is the
/// most significant bit.
using BasisMap = std::function<std::uint64_t(std::uint64_t)>;

/// Permutation actions up to this arity are tabulated and checked for
/// bijectivity exhaustively at construction.
inline constexpr std::size_t kPermutationOracleLimit = 20;

/// A gate or composite bound to explicit target indices.
///
/// The first `control_count()` targets are controls; the action (a unitary
/// matrix or a basis permutation) acts on the remaining targets whenever all
/// controls are |1>. Instances are immutable; `retarget` and `adjoint` return
/// new values.
class QuantumOperation {
 public:
  /// Matrix action over all targets. Unitarity is evaluated here and enforced
  /// when the operation is applied, not at construction.
  static QuantumOperation from_matrix(std::string name, ComplexMatrix matrix,
                                      std::vector<std::size_t> targets);

  /// Semantic oracle acting as a basis permutation. Throws InvalidParameter when
  /// the map is not a bijection (checked up to kPermutationOracleLimit).
  static QuantumOperation from_permutation(std::string name, std::size_t arity, BasisMap map,
                                           std::vector<std::size_t> targets);

  /// Applies `base` to its own targets only when every control is |1>.
  /// Resulting target order: controls, then base targets.
  static QuantumOperation controlled(std::string name, const QuantumOperation& base,
                                     std::vector<std::size_t> controls);

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return targets_.size(); }
  std::span<const std::size_t> targets() const noexcept { return targets_; }
  std::size_t control_count() const noexcept { return control_count_; }
  std::span<const std::size_t> controls() const noexcept {
    return std::span(targets_).first(control_count_);
  }
  std::span<const std::size_t> action_targets() const noexcept {
    return std::span(targets_).subspan(control_count_);
  }

  bool is_unitary() const noexcept { return unitary_; }
  bool has_matrix() const noexcept { return kernel_->matrix.has_value(); }

  /// Matrix of the action without controls. Throws SemanticOracleNotMaterializable
  /// for permutation actions.
  const ComplexMatrix& action_matrix() const;

  /// Full 2^arity matrix including the control block structure.
  ComplexMatrix matrix() const;

  /// Image of an action-local basis index for permutation actions, or for
  /// matrix actions that are 0/1 permutation matrices. nullopt otherwise.
  std::optional<std::uint64_t> map_action_basis(std::uint64_t local) const;

  /// True when the whole operation maps basis states to basis states with unit
  /// coefficient (X, CNot, Toffoli, Swap, Fredkin, semantic oracles).
  bool is_classical_permutation() const noexcept;

  /// Same action bound to new targets. Throws SizeMismatch or DuplicateIndexes.
  QuantumOperation retarget(std::vector<std::size_t> new_targets) const;

  /// Inverse operation, named "<name>^-1" unless self-inverse.
  QuantumOperation adjoint() const;

 private:
  struct Kernel {
    std::optional<ComplexMatrix> matrix;
    std::size_t arity = 0;
    BasisMap map;
    std::shared_ptr<const std::vector<std::uint64_t>> table;
    std::shared_ptr<const std::vector<std::uint64_t>> matrix_permutation;
  };

  QuantumOperation() = default;
  std::size_t action_arity() const noexcept { return targets_.size() - control_count_; }

  std::string name_;
  std::vector<std::size_t> targets_;
  std::size_t control_count_ = 0;
  std::shared_ptr<const Kernel> kernel_;
  bool unitary_ = false;
};

/// Throws DuplicateIndexes when any index repeats.
void require_distinct(std::span<const std::size_t> indices, const char* what);

}  // namespace cove
