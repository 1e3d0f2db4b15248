#include "cove/inspect.hpp"

#include <cmath>

#include "cove/error.hpp"
#include "shared_state.hpp"

namespace cove::debug {

namespace {

const detail::SharedState& inspectable(const detail::SharedState& shared) {
  if (!shared.options().allow_inspection) {
    throw DebugOnlyViolation(
        "amplitudes cannot be observed without measurement; create the context with "
        "allow_inspection for tests");
  }
  return shared;
}

}  // namespace

ComplexMatrix peek_context(const SimulationContext& ctx) {
  const auto& shared = inspectable(detail::ContextAccess::shared(ctx));
  return ComplexMatrix::column(shared.amplitudes());
}

AmplitudeSnapshot peek_amplitudes(const RegisterView& view) {
  const auto& shared = inspectable(detail::ContextAccess::shared(view));
  const auto& amps = shared.amplitudes();
  const std::size_t k = view.size();
  AmplitudeSnapshot snap;
  snap.exposed.assign(view.exposed().begin(), view.exposed().end());

  std::vector<std::uint64_t> masks;
  std::uint64_t view_mask = 0;
  for (std::size_t p : view.exposed()) {
    masks.push_back(shared.mask_of(p));
    view_mask |= masks.back();
  }
  auto local_of = [&](std::uint64_t i) {
    std::uint64_t out = 0;
    for (std::uint64_t m : masks) out = (out << 1) | ((i & m) ? 1U : 0U);
    return out;
  };

  // Arrange the state as M[local][rest]; the view is separable iff M has rank one.
  const std::size_t rows = std::size_t{1} << k;
  std::vector<double> rest_weight(amps.size() >> k, 0.0);
  auto rest_of = [&](std::uint64_t i) {
    std::uint64_t out = 0;
    std::uint64_t bit = 0;
    for (std::uint64_t m = 1; m != 0 && m < (std::uint64_t{1} << shared.count()); m <<= 1) {
      if (!(view_mask & m)) {
        if (i & m) out |= std::uint64_t{1} << bit;
        ++bit;
      }
    }
    return out;
  };
  for (std::uint64_t i = 0; i < amps.size(); ++i) rest_weight[rest_of(i)] += std::norm(amps[i]);
  std::uint64_t dominant = 0;
  for (std::uint64_t r = 1; r < rest_weight.size(); ++r)
    if (rest_weight[r] > rest_weight[dominant]) dominant = r;

  ComplexMatrix column(rows, 1);
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if (rest_of(i) == dominant) column(local_of(i), 0) = amps[i];
  const double scale = 1.0 / std::sqrt(rest_weight[dominant]);
  for (Complex& z : column.entries()) z *= scale;

  // Every other rest-column must be parallel to the dominant one.
  std::vector<Complex> overlap(rest_weight.size(), Complex{});
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    overlap[rest_of(i)] += std::conj(column(local_of(i), 0)) * amps[i];
  bool separable = true;
  for (std::uint64_t r = 0; r < rest_weight.size() && separable; ++r)
    separable = std::abs(std::norm(overlap[r]) - rest_weight[r]) <= kStateTolerance;

  snap.separable = separable;
  snap.amplitudes = separable ? std::move(column) : ComplexMatrix::column(amps);
  return snap;
}

}  // namespace cove::debug
