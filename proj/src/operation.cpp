#include "cove/operation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "cove/error.hpp"

namespace cove {

void require_distinct(std::span<const std::size_t> indices, const char* what) {
  std::unordered_set<std::size_t> seen;
  for (std::size_t index : indices) {
    if (!seen.insert(index).second) {
      throw DuplicateIndexes(std::string(what) + ": index " + std::to_string(index) +
                             " is specified more than once");
    }
  }
}

namespace {

constexpr double kPermutationEntryTolerance = 1e-12;

// Column -> row table when every column holds a single entry equal to 1.
std::shared_ptr<const std::vector<std::uint64_t>> detect_permutation(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() > 64) return nullptr;
  std::vector<std::uint64_t> image(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Complex z = m(r, c);
      if (std::abs(z) <= kPermutationEntryTolerance) continue;
      if (row || std::abs(z - Complex{1.0}) > kPermutationEntryTolerance) return nullptr;
      row = r;
    }
    if (!row) return nullptr;
    image[c] = *row;
  }
  return std::make_shared<const std::vector<std::uint64_t>>(std::move(image));
}

std::size_t dimension_log2(std::size_t dim) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < dim) ++k;
  return (std::size_t{1} << k) == dim ? k : static_cast<std::size_t>(-1);
}

}  // namespace

QuantumOperation QuantumOperation::from_matrix(std::string name, ComplexMatrix matrix,
                                               std::vector<std::size_t> targets) {
  if (!matrix.is_square()) throw NotSquare("operation '" + name + "' needs a square matrix");
  const std::size_t k = dimension_log2(matrix.rows());
  if (k != targets.size()) {
    throw SizeMismatch("operation '" + name + "' has a " + std::to_string(matrix.rows()) +
                       "-dimensional matrix but " + std::to_string(targets.size()) + " targets");
  }
  require_distinct(targets, name.c_str());

  QuantumOperation op;
  op.name_ = std::move(name);
  op.targets_ = std::move(targets);
  op.unitary_ = cove::is_unitary(matrix, kUnitaryTolerance);
  auto kernel = std::make_shared<Kernel>();
  kernel->arity = k;
  kernel->matrix_permutation = detect_permutation(matrix);
  kernel->matrix = std::move(matrix);
  op.kernel_ = std::move(kernel);
  return op;
}

QuantumOperation QuantumOperation::from_permutation(std::string name, std::size_t arity,
                                                    BasisMap map,
                                                    std::vector<std::size_t> targets) {
  if (arity != targets.size()) {
    throw SizeMismatch("operation '" + name + "' has arity " + std::to_string(arity) + " but " +
                       std::to_string(targets.size()) + " targets");
  }
  if (arity == 0 || arity > 62) throw InvalidParameter("permutation arity out of range");
  if (!map) throw ArgumentNull("operation '" + name + "' has no basis map");
  require_distinct(targets, name.c_str());

  auto kernel = std::make_shared<Kernel>();
  kernel->arity = arity;
  if (arity <= kPermutationOracleLimit) {
    const std::uint64_t dim = std::uint64_t{1} << arity;
    std::vector<std::uint64_t> table(dim);
    std::vector<bool> hit(dim, false);
    for (std::uint64_t i = 0; i < dim; ++i) {
      const std::uint64_t j = map(i);
      if (j >= dim || hit[j]) {
        throw InvalidParameter("operation '" + name + "' is not a bijection on basis states");
      }
      hit[j] = true;
      table[i] = j;
    }
    kernel->table = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
  }
  kernel->map = std::move(map);

  QuantumOperation op;
  op.name_ = std::move(name);
  op.targets_ = std::move(targets);
  op.kernel_ = std::move(kernel);
  op.unitary_ = true;
  return op;
}

QuantumOperation QuantumOperation::controlled(std::string name, const QuantumOperation& base,
                                              std::vector<std::size_t> controls) {
  if (controls.empty()) throw InvalidParameter("controlled operation needs at least one control");
  QuantumOperation op = base;
  op.name_ = std::move(name);
  controls.insert(controls.end(), base.targets_.begin(), base.targets_.end());
  require_distinct(controls, op.name_.c_str());
  op.control_count_ = base.control_count_ + (controls.size() - base.targets_.size());
  op.targets_ = std::move(controls);
  return op;
}

const ComplexMatrix& QuantumOperation::action_matrix() const {
  if (!kernel_->matrix) {
    throw SemanticOracleNotMaterializable("operation '" + name_ +
                                          "' is a semantic permutation without a matrix");
  }
  return *kernel_->matrix;
}

ComplexMatrix QuantumOperation::matrix() const {
  const ComplexMatrix& base = action_matrix();
  if (control_count_ == 0) return base;
  // Block diagonal: identity everywhere except the all-controls-set block.
  const std::size_t dim = std::size_t{1} << arity();
  const std::size_t block = base.rows();
  const std::size_t offset = dim - block;
  ComplexMatrix out(dim, dim);
  for (std::size_t i = 0; i < offset; ++i) out(i, i) = 1.0;
  for (std::size_t r = 0; r < block; ++r)
    for (std::size_t c = 0; c < block; ++c) out(offset + r, offset + c) = base(r, c);
  return out;
}

std::optional<std::uint64_t> QuantumOperation::map_action_basis(std::uint64_t local) const {
  if (kernel_->matrix) {
    if (!kernel_->matrix_permutation) return std::nullopt;
    return (*kernel_->matrix_permutation)[local];
  }
  if (kernel_->table) return (*kernel_->table)[local];
  return kernel_->map(local);
}

bool QuantumOperation::is_classical_permutation() const noexcept {
  return !kernel_->matrix || kernel_->matrix_permutation != nullptr;
}

QuantumOperation QuantumOperation::retarget(std::vector<std::size_t> new_targets) const {
  if (new_targets.size() != targets_.size()) {
    throw SizeMismatch("operation '" + name_ + "' needs " + std::to_string(targets_.size()) +
                       " targets, got " + std::to_string(new_targets.size()));
  }
  require_distinct(new_targets, name_.c_str());
  QuantumOperation op = *this;
  op.targets_ = std::move(new_targets);
  return op;
}

QuantumOperation QuantumOperation::adjoint() const {
  QuantumOperation op = *this;
  auto kernel = std::make_shared<Kernel>();
  kernel->arity = kernel_->arity;
  bool self_inverse = false;
  if (kernel_->matrix) {
    ComplexMatrix inverse = conjugate_transpose(*kernel_->matrix);
    self_inverse = approx_equal(inverse, *kernel_->matrix, 0.0);
    kernel->matrix_permutation = detect_permutation(inverse);
    kernel->matrix = std::move(inverse);
  } else {
    if (!kernel_->table) {
      throw InvalidParameter("operation '" + name_ + "' is too wide to invert");
    }
    const auto& forward = *kernel_->table;
    std::vector<std::uint64_t> backward(forward.size());
    for (std::uint64_t i = 0; i < forward.size(); ++i) backward[forward[i]] = i;
    self_inverse = backward == forward;
    auto table = std::make_shared<const std::vector<std::uint64_t>>(std::move(backward));
    kernel->map = [table](std::uint64_t i) { return (*table)[i]; };
    kernel->table = std::move(table);
  }
  op.kernel_ = std::move(kernel);
  if (!self_inverse) op.name_ = name_ + "^-1";
  return op;
}

}  // namespace cove
