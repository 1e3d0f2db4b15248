#include "cove/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cove/arithmetic.hpp"
#include "cove/error.hpp"
#include "cove/gates.hpp"
#include "cove/number_theory.hpp"

namespace cove::algorithms {

namespace {

Indices iota_indices(std::size_t start, std::size_t count) {
  Indices out(count);
  std::iota(out.begin(), out.end(), start);
  return out;
}

QuantumOperation controlled_rk(int k, std::size_t control, std::size_t target) {
  return controlled_u(single_qubit_gate(GateSpec::rk(k)), {control}, target);
}

// H on each qubit followed by the R_k ladder, without the final reversal.
OperationPlan qft_ladder(const Indices& indices) {
  require_distinct(indices, "qft");
  OperationPlan plan;
  const std::size_t n = indices.size();
  for (std::size_t j = 0; j < n; ++j) {
    plan.append(hadamard(indices[j]));
    for (std::size_t k = 2; j + k <= n; ++k)
      plan.append(controlled_rk(static_cast<int>(k), indices[j + k - 1], indices[j]));
  }
  return plan;
}

void require_widths(std::uint64_t modulus, std::size_t reg1_width, std::size_t reg2_width) {
  if (modulus < 2) throw InvalidParameter("modulus must be at least 2");
  if (reg1_width == 0 || reg2_width == 0 || reg1_width + reg2_width > 62) {
    throw InvalidParameter("oracle register widths must be positive and total at most 62");
  }
  if (reg2_width < 63 && modulus > (std::uint64_t{1} << reg2_width)) {
    throw InvalidParameter("modulus " + std::to_string(modulus) + " does not fit a " +
                           std::to_string(reg2_width) + "-qubit REG2");
  }
  if (reg1_width > 24) throw InvalidParameter("REG1 wider than 24 qubits cannot be tabulated");
}

void require_coprime(std::uint64_t m, std::uint64_t modulus) {
  if (number_theory::gcd(m, modulus) != 1) {
    throw InvalidParameter("gcd(" + std::to_string(m) + ", " + std::to_string(modulus) +
                           ") != 1");
  }
}

QuantumOperation xor_oracle(std::string name, std::vector<std::uint64_t> table,
                            std::size_t reg1_width, std::size_t reg2_width) {
  const std::uint64_t y_mask = (std::uint64_t{1} << reg2_width) - 1;
  auto shared = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
  BasisMap map = [shared, reg2_width, y_mask](std::uint64_t local) {
    const std::uint64_t x = local >> reg2_width;
    return (x << reg2_width) | ((local ^ (*shared)[x]) & y_mask);
  };
  return QuantumOperation::from_permutation(std::move(name), reg1_width + reg2_width,
                                            std::move(map),
                                            iota_indices(0, reg1_width + reg2_width));
}

}  // namespace

OperationPlan hadamard_all_ops(const Indices& indices) {
  require_distinct(indices, "hadamard_all");
  OperationPlan plan;
  for (std::size_t i : indices) plan.append(hadamard(i));
  plan.result_indices = indices;
  return plan;
}

OperationPlan qft_ops(const Indices& indices, QftTail tail) {
  OperationPlan plan = qft_ladder(indices);
  if (tail == QftTail::Physical) {
    plan.append(arithmetic::reverse_ops(indices));
    plan.result_indices = indices;
  } else {
    plan.result_indices.assign(indices.rbegin(), indices.rend());
  }
  return plan;
}

OperationPlan inverse_qft_ops(const Indices& indices, QftTail tail) {
  if (tail == QftTail::Physical) return inverse_plan(qft_ops(indices, QftTail::Physical));
  // QFT = Rev . L(I), so QFT^-1 = L(I)^-1 . Rev, and moving Rev past L^-1
  // turns L(I) into L(reversed I).
  const Indices reversed(indices.rbegin(), indices.rend());
  OperationPlan plan = inverse_plan(qft_ladder(reversed));
  plan.result_indices = reversed;
  return plan;
}

QuantumOperation semantic_uf(std::uint64_t m, std::uint64_t modulus, std::size_t reg1_width,
                             std::size_t reg2_width) {
  require_widths(modulus, reg1_width, reg2_width);
  require_coprime(m, modulus);
  return xor_oracle("U_f", number_theory::mod_pow_table(m, std::size_t{1} << reg1_width, modulus),
                    reg1_width, reg2_width);
}

QuantumOperation circuit_uf(std::uint64_t m, std::uint64_t modulus, std::size_t reg1_width,
                            std::size_t reg2_width) {
  require_widths(modulus, reg1_width, reg2_width);
  require_coprime(m, modulus);
  const std::size_t n = reg2_width;
  const Indices reg1 = iota_indices(0, reg1_width);
  const Indices reg2 = iota_indices(reg1_width, n);
  const Indices ancillae =
      iota_indices(reg1_width + n, arithmetic::exponentiation_ancilla_count(n));
  const OperationPlan plan = arithmetic::modular_exponentiation_ops(reg1, reg2, ancillae, m, modulus);
  const std::size_t width = reg1_width + n + ancillae.size();

  std::vector<std::uint64_t> table(std::size_t{1} << reg1_width);
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    std::vector<std::uint8_t> bits(width, 0);
    write_little_endian(bits, reg1, x);
    write_little_endian(bits, reg2, 1);
    bits = evaluate_basis(plan, std::move(bits));
    const bool clean = read_little_endian(bits, reg1) == x &&
                       std::all_of(ancillae.begin(), ancillae.end(),
                                   [&](std::size_t a) { return bits[a] == 0; });
    if (!clean) throw Error("modular exponentiation plan left scratch qubits dirty");
    table[x] = read_little_endian(bits, reg2);
  }
  return xor_oracle("U_f[circuit]", std::move(table), reg1_width, reg2_width);
}

std::string_view oracle_name(OracleKind kind) {
  return kind == OracleKind::Circuit ? "circuit" : "semantic";
}

QuantumOperation build_uf(std::uint64_t m, std::uint64_t modulus, OracleKind kind) {
  const std::size_t n = number_theory::bits_to_express(modulus);
  return kind == OracleKind::Circuit ? circuit_uf(m, modulus, 2 * n, n)
                                     : semantic_uf(m, modulus, 2 * n, n);
}

PeriodSample shor_quantum_step(SimulationContext& ctx, std::uint64_t modulus, std::uint64_t m,
                               const QuantumStepOptions& options) {
  const std::size_t n = number_theory::bits_to_express(modulus);
  if (ctx.physical_count() + 3 * n > ctx.qubit_cap()) {
    throw QubitLimitExceeded("the quantum step for N=" + std::to_string(modulus) + " needs " +
                             std::to_string(3 * n) + " qubits, cap is " +
                             std::to_string(ctx.qubit_cap()));
  }
  return shor_quantum_step(ctx, modulus, build_uf(m, modulus, options.oracle), options);
}

PeriodSample shor_quantum_step(SimulationContext& ctx, std::uint64_t modulus,
                               const QuantumOperation& uf, const QuantumStepOptions& options) {
  const std::size_t n = number_theory::bits_to_express(modulus);
  if (uf.arity() != 3 * n) {
    throw SizeMismatch("U_f for N=" + std::to_string(modulus) + " must act on " +
                       std::to_string(3 * n) + " qubits");
  }
  RegisterView reg = ctx.allocate_register(3 * n);
  const Indices reg1 = iota_indices(0, 2 * n);
  const Indices reg2 = iota_indices(2 * n, n);

  apply_plan(reg, hadamard_all_ops(reg1));
  reg.apply_operation(uf);

  PeriodSample sample;
  sample.reg2 = reg.measure(reg2).to_unsigned();
  if (options.after_reg2) options.after_reg2(reg.slice_to(2 * n), sample.reg2);

  const OperationPlan iqft = inverse_qft_ops(reg1, QftTail::Logical);
  apply_plan(reg, iqft);
  sample.measured = reg.measure(iqft.result_indices).to_unsigned();
  sample.modulus = std::uint64_t{1} << (2 * n);
  return sample;
}

std::vector<std::uint64_t> convergent_denominators(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidParameter("continued fraction with zero denominator");
  std::vector<std::uint64_t> out;
  std::uint64_t k_prev2 = 1, k_prev = 0;
  while (den != 0) {
    const std::uint64_t a = num / den;
    const std::uint64_t k = a * k_prev + k_prev2;
    out.push_back(k);
    k_prev2 = k_prev;
    k_prev = k;
    const std::uint64_t r = num % den;
    num = den;
    den = r;
  }
  return out;
}

std::optional<std::uint64_t> extract_period(const std::vector<PeriodSample>& samples,
                                            std::uint64_t m, std::uint64_t modulus) {
  if (modulus < 2) return std::nullopt;
  std::optional<std::uint64_t> best;
  auto consider = [&](std::uint64_t d) {
    for (std::uint64_t p = d; p >= 1 && p <= modulus; p += d) {
      if (best && p >= *best) return;
      if (number_theory::mod_pow(m, p, modulus) == 1) {
        best = p;
        return;
      }
    }
  };

  std::uint64_t combined = 1;
  for (const PeriodSample& s : samples) {
    if (s.measured == 0 || s.modulus == 0) continue;
    std::uint64_t last = 0;
    for (std::uint64_t d : convergent_denominators(s.measured, s.modulus)) {
      if (d > modulus) break;
      last = d;
      consider(d);
    }
    if (last != 0) combined = number_theory::lcm(combined, last);
  }
  if (combined > 1 && combined <= modulus) consider(combined);
  return best;
}

std::string_view verdict_name(DeutschVerdict verdict) {
  return verdict == DeutschVerdict::Constant ? "constant" : "balanced";
}

QuantumOperation deutsch_oracle(DeutschOracle oracle, std::size_t x, std::size_t y) {
  const ComplexMatrix cnot_m = expand_to_full_matrix(cnot(0, 1), 2);
  const ComplexMatrix not_y = expand_to_full_matrix(pauli_x(1), 2);
  ComplexMatrix m = identity(2);
  switch (oracle) {
    case DeutschOracle::Zero: break;
    case DeutschOracle::One: m = not_y; break;
    case DeutschOracle::Identity: m = cnot_m; break;
    case DeutschOracle::Negation: m = multiply(not_y, cnot_m); break;
  }
  return QuantumOperation::from_matrix("U_f", std::move(m), {x, y});
}

DeutschVerdict deutsch(SimulationContext& ctx, DeutschOracle oracle) {
  RegisterView reg = ctx.allocate_register(2);
  reg.apply_operation(pauli_x(1))
      .apply_operation(hadamard(0))
      .apply_operation(hadamard(1))
      .apply_operation(deutsch_oracle(oracle))
      .apply_operation(hadamard(0));
  return reg.measure({0})[0] ? DeutschVerdict::Balanced : DeutschVerdict::Constant;
}

}  // namespace cove::algorithms
