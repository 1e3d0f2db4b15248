#include "cove/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cove/error.hpp"
#include "shared_state.hpp"

namespace cove {

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
  // splitmix64 finalizer over a combination of both inputs.
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t ClassicalResult::to_unsigned() const {
  if (bits_.size() > 64) {
    throw Overflow("a " + std::to_string(bits_.size()) + "-bit result does not fit 64 bits");
  }
  std::uint64_t value = 0;
  for (bool bit : bits_) value = (value << 1) | (bit ? 1U : 0U);
  return value;
}

std::string ClassicalResult::to_bitstring() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool bit : bits_) out.push_back(bit ? '1' : '0');
  return out;
}

namespace detail {

SharedState::SharedState(ContextOptions options) : options_(options), rng_(options.seed) {
  if (options_.qubit_cap > kMaxQubitCap) {
    throw QubitLimitExceeded("qubit cap " + std::to_string(options_.qubit_cap) +
                             " exceeds the architectural limit of " +
                             std::to_string(kMaxQubitCap));
  }
}

void SharedState::check_capacity(std::size_t extra) const {
  if (count_ + extra > options_.qubit_cap) {
    throw QubitLimitExceeded("allocating " + std::to_string(extra) + " qubits would make " +
                             std::to_string(count_ + extra) + ", cap is " +
                             std::to_string(options_.qubit_cap));
  }
}

std::vector<std::size_t> SharedState::append(std::size_t n) {
  check_capacity(n);
  std::vector<std::size_t> added(n);
  std::iota(added.begin(), added.end(), count_);
  if (n == 0) return added;
  // old (x) |0...0>: old index i moves to i << n.
  std::vector<Complex> grown(amplitudes_.size() << n);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) grown[i << n] = amplitudes_[i];
  amplitudes_ = std::move(grown);
  count_ += n;
  return added;
}

std::vector<std::size_t> SharedState::append_prepared(std::span<const Complex> amplitudes) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amplitudes.size()) ++n;
  if (amplitudes.empty() || (std::size_t{1} << n) != amplitudes.size()) {
    throw InvalidParameter("prepared amplitudes must have a power-of-two length");
  }
  double norm = 0.0;
  for (const Complex& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kStateTolerance) {
    throw InvalidParameter("prepared amplitudes are not normalized (sum " + std::to_string(norm) +
                           ")");
  }
  check_capacity(n);
  std::vector<std::size_t> added(n);
  std::iota(added.begin(), added.end(), count_);
  std::vector<Complex> grown(amplitudes_.size() << n);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i)
    for (std::size_t j = 0; j < amplitudes.size(); ++j)
      grown[(i << n) | j] = amplitudes_[i] * amplitudes[j];
  amplitudes_ = std::move(grown);
  count_ += n;
  return added;
}

void SharedState::apply(const QuantumOperation& op, std::span<const std::size_t> physical_targets) {
  if (!op.is_unitary()) {
    throw NotUnitaryOperation("operation '" + op.name() + "' is not unitary");
  }
  std::uint64_t control_mask = 0;
  for (std::size_t i = 0; i < op.control_count(); ++i) control_mask |= mask_of(physical_targets[i]);
  std::vector<std::uint64_t> action_masks;
  for (std::size_t i = op.control_count(); i < physical_targets.size(); ++i)
    action_masks.push_back(mask_of(physical_targets[i]));

  if (op.has_matrix()) {
    apply_matrix(op, action_masks, control_mask);
  } else {
    apply_permutation(op, action_masks, control_mask);
  }
  ++applied_operations;
}

void SharedState::apply_matrix(const QuantumOperation& op,
                               std::span<const std::uint64_t> action_masks,
                               std::uint64_t control_mask) {
  const ComplexMatrix& m = op.action_matrix();
  const std::size_t k = action_masks.size();
  const std::size_t dim = std::size_t{1} << k;
  std::uint64_t action_mask = 0;
  for (std::uint64_t mask : action_masks) action_mask |= mask;

  if (k == 1) {
    const std::uint64_t bit = action_masks[0];
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
      if ((i & bit) || (i & control_mask) != control_mask) continue;
      const Complex a0 = amplitudes_[i];
      const Complex a1 = amplitudes_[i | bit];
      amplitudes_[i] = m00 * a0 + m01 * a1;
      amplitudes_[i | bit] = m10 * a0 + m11 * a1;
    }
    return;
  }

  // offsets[l]: physical bits set for action-local index l (target 0 is the MSB of l).
  std::vector<std::uint64_t> offsets(dim, 0);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t t = 0; t < k; ++t)
      if (l & (std::size_t{1} << (k - 1 - t))) offsets[l] |= action_masks[t];

  std::vector<Complex> in(dim), out(dim);
  for (std::uint64_t base = 0; base < amplitudes_.size(); ++base) {
    if ((base & action_mask) || (base & control_mask) != control_mask) continue;
    for (std::size_t l = 0; l < dim; ++l) in[l] = amplitudes_[base | offsets[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      Complex sum{};
      for (std::size_t c = 0; c < dim; ++c) sum += m(r, c) * in[c];
      out[r] = sum;
    }
    for (std::size_t l = 0; l < dim; ++l) amplitudes_[base | offsets[l]] = out[l];
  }
}

void SharedState::apply_permutation(const QuantumOperation& op,
                                    std::span<const std::uint64_t> action_masks,
                                    std::uint64_t control_mask) {
  const std::size_t k = action_masks.size();
  std::uint64_t action_mask = 0;
  for (std::uint64_t mask : action_masks) action_mask |= mask;

  std::vector<Complex> next = amplitudes_;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & control_mask) != control_mask) continue;
    std::uint64_t local = 0;
    for (std::size_t t = 0; t < k; ++t) local = (local << 1) | ((i & action_masks[t]) ? 1U : 0U);
    const std::uint64_t image = *op.map_action_basis(local);
    std::uint64_t j = i & ~action_mask;
    for (std::size_t t = 0; t < k; ++t)
      if (image & (std::uint64_t{1} << (k - 1 - t))) j |= action_masks[t];
    next[j] = amplitudes_[i];
  }
  amplitudes_ = std::move(next);
}

double SharedState::uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::vector<bool> SharedState::measure(std::span<const std::size_t> physical) {
  const std::size_t m = physical.size();
  std::vector<std::uint64_t> masks;
  masks.reserve(m);
  for (std::size_t p : physical) masks.push_back(mask_of(p));
  auto outcome_of = [&](std::uint64_t i) {
    std::uint64_t out = 0;
    for (std::uint64_t mask : masks) out = (out << 1) | ((i & mask) ? 1U : 0U);
    return out;
  };

  std::vector<double> probs(std::size_t{1} << m, 0.0);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) probs[outcome_of(i)] += std::norm(amplitudes_[i]);

  double live = 0.0;
  for (double p : probs)
    if (p >= kExtinctProbability) live += p;
  const double target = uniform() * live;
  std::uint64_t chosen = 0;
  bool found = false;
  double cumulative = 0.0;
  for (std::uint64_t o = 0; o < probs.size(); ++o) {
    if (probs[o] < kExtinctProbability) continue;
    cumulative += probs[o];
    chosen = o;
    found = true;
    if (target < cumulative) break;
  }
  if (!found) throw Error("measurement found no outcome with non-zero probability");

  const double scale = 1.0 / std::sqrt(probs[chosen]);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (outcome_of(i) == chosen) {
      amplitudes_[i] *= scale;
    } else {
      amplitudes_[i] = Complex{};
    }
  }

  std::vector<bool> bits(m);
  for (std::size_t t = 0; t < m; ++t) bits[t] = (chosen >> (m - 1 - t)) & 1U;
  return bits;
}

double SharedState::probability_of_one(std::size_t physical) const {
  const std::uint64_t mask = mask_of(physical);
  double p = 0.0;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i)
    if (i & mask) p += std::norm(amplitudes_[i]);
  return p;
}

}  // namespace detail

SimulationContext::SimulationContext(ContextOptions options)
    : shared_(std::make_shared<detail::SharedState>(options)) {}

RegisterView SimulationContext::allocate_register(std::size_t n) {
  return RegisterView(shared_, shared_->append(n));
}

RegisterView SimulationContext::allocate_prepared(std::span<const Complex> amplitudes) {
  return RegisterView(shared_, shared_->append_prepared(amplitudes));
}

std::size_t SimulationContext::physical_count() const noexcept { return shared_->count(); }
std::size_t SimulationContext::qubit_cap() const noexcept { return shared_->options().qubit_cap; }
std::uint64_t SimulationContext::seed() const noexcept { return shared_->options().seed; }
const std::string& SimulationContext::location() const noexcept { return shared_->location; }

void SimulationContext::set_location(std::string_view location) {
  if (location != kLocalhost) {
    throw InvalidLocation("quantum resource must be local, cannot use '" + std::string(location) +
                          "'");
  }
}

double SimulationContext::total_probability() const {
  double sum = 0.0;
  for (const Complex& a : shared_->amplitudes()) sum += std::norm(a);
  return sum;
}

std::uint64_t SimulationContext::applied_operation_count() const noexcept {
  return shared_->applied_operations;
}

std::vector<std::size_t> RegisterView::physical_of(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= exposed_.size()) {
      throw IndexOutOfRange("index " + std::to_string(i) + " is outside a register of " +
                            std::to_string(exposed_.size()) + " qubits");
    }
    out.push_back(exposed_[i]);
  }
  return out;
}

RegisterView RegisterView::slice(std::span<const std::size_t> indices) const {
  require_distinct(indices, "slice");
  return RegisterView(shared_, physical_of(indices));
}

RegisterView RegisterView::slice(std::initializer_list<std::size_t> indices) const {
  return slice(std::span<const std::size_t>(indices.begin(), indices.size()));
}

RegisterView RegisterView::slice_to(std::size_t count) const { return slice_range(0, count); }

RegisterView RegisterView::slice_from(std::size_t start) const {
  return slice_range(start, exposed_.size());
}

RegisterView RegisterView::slice_range(std::size_t start, std::size_t end) const {
  if (start > end || end > exposed_.size()) {
    throw IndexOutOfRange("range [" + std::to_string(start) + ", " + std::to_string(end) +
                          ") is outside a register of " + std::to_string(exposed_.size()) +
                          " qubits");
  }
  return RegisterView(shared_, std::vector<std::size_t>(exposed_.begin() + start, exposed_.begin() + end));
}

RegisterView RegisterView::slice_reverse() const {
  return RegisterView(shared_, std::vector<std::size_t>(exposed_.rbegin(), exposed_.rend()));
}

RegisterView RegisterView::slice_subset(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  return slice(sorted);
}

RegisterView RegisterView::slice_reorder(std::span<const std::size_t> order) const {
  if (order.size() != exposed_.size()) {
    throw SizeMismatch("reorder needs all " + std::to_string(exposed_.size()) + " indices");
  }
  return slice(order);
}

RegisterView& RegisterView::apply_operation(const QuantumOperation& op) {
  std::vector<std::size_t> physical;
  physical.reserve(op.arity());
  for (std::size_t t : op.targets()) {
    if (t >= exposed_.size()) {
      throw SizeMismatch("operation '" + op.name() + "' targets index " + std::to_string(t) +
                         " but the register has " + std::to_string(exposed_.size()) + " qubits");
    }
    physical.push_back(exposed_[t]);
  }
  shared_->apply(op, physical);
  return *this;
}

RegisterView& RegisterView::apply_operations(std::span<const QuantumOperation> ops) {
  for (const QuantumOperation& op : ops) apply_operation(op);
  return *this;
}

ClassicalResult RegisterView::measure() { return ClassicalResult(shared_->measure(exposed_)); }

ClassicalResult RegisterView::measure(std::span<const std::size_t> subset) {
  require_distinct(subset, "measure");
  return ClassicalResult(shared_->measure(physical_of(subset)));
}

ClassicalResult RegisterView::measure(std::initializer_list<std::size_t> subset) {
  return measure(std::span<const std::size_t>(subset.begin(), subset.size()));
}

RegisterView& RegisterView::set_from_unsigned(std::uint64_t value) {
  const std::size_t n = exposed_.size();
  if (n < 64 && value >= (std::uint64_t{1} << n)) {
    throw ValueOutOfRange("value " + std::to_string(value) + " does not fit " + std::to_string(n) +
                          " qubits");
  }
  std::vector<bool> current(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p1 = shared_->probability_of_one(exposed_[i]);
    if (p1 < kExtinctProbability) {
      current[i] = false;
    } else if (p1 > 1.0 - kExtinctProbability) {
      current[i] = true;
    } else {
      throw NotClassicalState("qubit " + std::to_string(i) +
                              " is in superposition; initialization needs classical qubits");
    }
  }
  static const ComplexMatrix kNot{{0.0, 1.0}, {1.0, 0.0}};
  for (std::size_t i = 0; i < n; ++i) {
    const bool want = (value >> (n - 1 - i)) & 1U;
    if (want != current[i]) {
      shared_->apply(QuantumOperation::from_matrix("Not", kNot, {0}), std::vector{exposed_[i]});
    }
  }
  return *this;
}

}  // namespace cove
