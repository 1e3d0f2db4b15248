#include "cove/arithmetic.hpp"

#include <algorithm>
#include <string>

#include "cove/error.hpp"
#include "cove/gates.hpp"
#include "cove/number_theory.hpp"

namespace cove::arithmetic {

namespace {

void require_all_distinct(std::initializer_list<const Indices*> lists,
                          std::initializer_list<std::size_t> singles, const char* what) {
  Indices all;
  for (const Indices* list : lists) all.insert(all.end(), list->begin(), list->end());
  all.insert(all.end(), singles.begin(), singles.end());
  require_distinct(all, what);
}

void require_size(const Indices& list, std::size_t expected, const char* what) {
  if (list.size() != expected) {
    throw SizeMismatch(std::string(what) + " needs " + std::to_string(expected) +
                       " indices, got " + std::to_string(list.size()));
  }
}

void require_modulus_fits(std::uint64_t modulus, std::size_t n) {
  if (modulus < 2) throw InvalidParameter("modulus must be at least 2");
  if (n >= 63 || modulus > (std::uint64_t{1} << n)) {
    throw SizeMismatch("modulus " + std::to_string(modulus) + " does not fit " +
                       std::to_string(n) + " qubits");
  }
}

// CNot from `control` onto every bit of `reg` where `value` has a 1.
void controlled_load(OperationPlan& plan, std::size_t control, const Indices& reg,
                     std::uint64_t value) {
  for (std::size_t k = 0; k < reg.size(); ++k)
    if ((value >> k) & 1U) plan.append(cnot(control, reg[k]));
}

// Toffoli(c1, c2) onto every bit of `reg` where `value` has a 1.
void doubly_controlled_load(OperationPlan& plan, std::size_t c1, std::size_t c2, const Indices& reg,
                            std::uint64_t value) {
  for (std::size_t k = 0; k < reg.size(); ++k)
    if ((value >> k) & 1U) plan.append(toffoli(c1, c2, reg[k]));
}

Indices slice(const Indices& from, std::size_t start, std::size_t count) {
  return Indices(from.begin() + static_cast<std::ptrdiff_t>(start),
                 from.begin() + static_cast<std::ptrdiff_t>(start + count));
}

}  // namespace

OperationPlan sum_ops(std::size_t carry, std::size_t x, std::size_t y) {
  const std::size_t idx[] = {carry, x, y};
  require_distinct(idx, "sum");
  OperationPlan plan;
  plan.append(cnot(carry, y));
  plan.append(cnot(x, y));
  plan.result_indices = {y};
  return plan;
}

OperationPlan carry_ops(std::size_t carry, std::size_t x, std::size_t y, std::size_t ancilla) {
  const std::size_t idx[] = {carry, x, y, ancilla};
  require_distinct(idx, "carry");
  OperationPlan plan;
  plan.append(toffoli(x, y, ancilla));
  plan.append(cnot(x, y));
  plan.append(toffoli(carry, y, ancilla));
  plan.result_indices = {y, ancilla};
  return plan;
}

OperationPlan carry_inverse_ops(std::size_t carry, std::size_t x, std::size_t y,
                                std::size_t ancilla) {
  OperationPlan plan = carry_ops(carry, x, y, ancilla);
  std::reverse(plan.ops.begin(), plan.ops.end());
  return plan;
}

OperationPlan add_n_ops(const Indices& x, const Indices& y, const Indices& ancillae) {
  if (x.empty() || y.empty() || ancillae.empty()) {
    throw ArgumentNull("add_n needs non-empty X, Y and ancilla index lists");
  }
  if (x.size() != y.size()) {
    throw SizeMismatch("X and Y must contain an equal number of indices");
  }
  if (x.size() + 1 != ancillae.size()) {
    throw SizeMismatch("the ancillae need one more index than X and Y");
  }
  require_all_distinct({&x, &y, &ancillae}, {}, "add_n");

  const std::size_t n = x.size();
  OperationPlan plan;
  plan.result_indices = y;
  plan.result_indices.push_back(ancillae[n]);

  for (std::size_t i = 0; i < n; ++i) plan.append(carry_ops(ancillae[i], x[i], y[i], ancillae[i + 1]));

  plan.append(cnot(x[n - 1], y[n - 1]));
  plan.append(sum_ops(ancillae[n - 1], x[n - 1], y[n - 1]));

  // One carry inverse fewer than carries: the top bit was finished above.
  for (std::size_t i = n - 1; i-- > 0;) {
    plan.append(carry_inverse_ops(ancillae[i], x[i], y[i], ancillae[i + 1]));
    plan.append(sum_ops(ancillae[i], x[i], y[i]));
  }
  return plan;
}

OperationPlan modular_add_ops(const Indices& x, const Indices& y, const Indices& n_register,
                              const Indices& ancillae, std::size_t flag, std::uint64_t modulus) {
  if (x.empty() || y.empty() || n_register.empty() || ancillae.empty()) {
    throw ArgumentNull("modular_add needs non-empty index lists");
  }
  const std::size_t n = x.size();
  require_size(y, n, "modular_add Y");
  require_size(n_register, n, "modular_add modulus register");
  require_size(ancillae, n + 1, "modular_add ancillae");
  require_all_distinct({&x, &y, &n_register, &ancillae}, {flag}, "modular_add");
  require_modulus_fits(modulus, n);

  const std::size_t overflow = ancillae[n];
  const OperationPlan add_x = add_n_ops(x, y, ancillae);
  const OperationPlan add_modulus = add_n_ops(n_register, y, ancillae);

  OperationPlan plan;
  plan.append(add_x);                      // y + x
  plan.append(inverse_plan(add_modulus));  // y + x - N, overflow set iff negative
  plan.append(cnot(overflow, flag));

  // Controlled reset: keep N in the register only when the flag is set.
  plan.append(pauli_x(flag));
  controlled_load(plan, flag, n_register, modulus);
  plan.append(pauli_x(flag));
  plan.append(add_modulus);  // add N back iff the difference went negative
  plan.append(pauli_x(flag));
  controlled_load(plan, flag, n_register, modulus);
  plan.append(pauli_x(flag));

  // (x + y) mod N - x is negative exactly when the flag is clear.
  plan.append(inverse_plan(add_x));
  plan.append(pauli_x(overflow));
  plan.append(cnot(overflow, flag));
  plan.append(pauli_x(overflow));
  plan.append(add_x);

  plan.result_indices = y;
  return plan;
}

OperationPlan controlled_modular_multiply_ops(std::size_t control, const Indices& x,
                                              const Indices& y_out, const Indices& n_register,
                                              const Indices& ancillae, std::uint64_t multiplier,
                                              std::uint64_t modulus) {
  if (x.empty() || y_out.empty() || n_register.empty() || ancillae.empty()) {
    throw ArgumentNull("controlled_modular_multiply needs non-empty index lists");
  }
  const std::size_t n = x.size();
  require_size(y_out, n, "multiplier output");
  require_size(n_register, n, "multiplier modulus register");
  require_size(ancillae, multiplier_ancilla_count(n), "multiplier ancillae");
  require_all_distinct({&x, &y_out, &n_register, &ancillae}, {control}, "controlled_modular_multiply");
  require_modulus_fits(modulus, n);
  if (number_theory::gcd(multiplier % modulus, modulus) != 1) {
    throw InvalidParameter("multiplier " + std::to_string(multiplier) + " is not coprime with " +
                           std::to_string(modulus));
  }

  const Indices addend = slice(ancillae, 0, n);
  const Indices adder_scratch = slice(ancillae, n, n + 1);
  const std::size_t flag = ancillae[2 * n + 1];

  OperationPlan plan;
  std::uint64_t addend_value = multiplier % modulus;  // multiplier * 2^j mod N
  for (std::size_t j = 0; j < n; ++j) {
    doubly_controlled_load(plan, control, x[j], addend, addend_value);
    plan.append(modular_add_ops(addend, y_out, n_register, adder_scratch, flag, modulus));
    doubly_controlled_load(plan, control, x[j], addend, addend_value);
    addend_value = (addend_value * 2) % modulus;
  }

  // Control clear: copy X into the output instead.
  plan.append(pauli_x(control));
  for (std::size_t j = 0; j < n; ++j) plan.append(toffoli(control, x[j], y_out[j]));
  plan.append(pauli_x(control));

  plan.result_indices = y_out;
  return plan;
}

OperationPlan modular_exponentiation_ops(const Indices& reg1, const Indices& reg2,
                                         const Indices& ancillae, std::uint64_t base,
                                         std::uint64_t modulus) {
  if (reg1.empty() || reg2.empty() || ancillae.empty()) {
    throw ArgumentNull("modular_exponentiation needs non-empty index lists");
  }
  const std::size_t n = reg2.size();
  require_size(ancillae, exponentiation_ancilla_count(n), "modular_exponentiation ancillae");
  require_all_distinct({&reg1, &reg2, &ancillae}, {}, "modular_exponentiation");
  require_modulus_fits(modulus, n);
  if (number_theory::gcd(base % modulus, modulus) != 1) {
    throw InvalidParameter("base " + std::to_string(base) + " is not coprime with " +
                           std::to_string(modulus));
  }

  const Indices accumulator = slice(ancillae, 0, n);
  const Indices n_register = slice(ancillae, n, n);
  const Indices scratch = slice(ancillae, 2 * n, multiplier_ancilla_count(n));

  OperationPlan plan = load_constant_ops(n_register, modulus);
  std::uint64_t factor = base % modulus;  // base^(2^j) mod N
  for (std::size_t j = 0; j < reg1.size(); ++j) {
    if (factor != 1) {
      const std::uint64_t inverse = *number_theory::mod_inverse(factor, modulus);
      plan.append(controlled_modular_multiply_ops(reg1[j], reg2, accumulator, n_register, scratch,
                                                  factor, modulus));
      for (std::size_t k = 0; k < n; ++k) plan.append(swap(reg2[k], accumulator[k]));
      plan.append(inverse_plan(controlled_modular_multiply_ops(
          reg1[j], reg2, accumulator, n_register, scratch, inverse, modulus)));
    }
    factor = number_theory::mod_pow(factor, 2, modulus);
  }
  plan.append(load_constant_ops(n_register, modulus));
  plan.result_indices = reg2;
  return plan;
}

OperationPlan load_constant_ops(const Indices& indices, std::uint64_t value) {
  if (indices.size() < 64 && (value >> indices.size()) != 0) {
    throw ValueOutOfRange("constant " + std::to_string(value) + " does not fit " +
                          std::to_string(indices.size()) + " qubits");
  }
  OperationPlan plan;
  for (std::size_t k = 0; k < indices.size(); ++k)
    if ((value >> k) & 1U) plan.append(pauli_x(indices[k]));
  plan.result_indices = indices;
  return plan;
}

OperationPlan reverse_ops(const Indices& indices) {
  require_distinct(indices, "reverse");
  OperationPlan plan;
  const std::size_t len = indices.size();
  for (std::size_t i = 0; i < len / 2; ++i) {
    const std::size_t a = indices[i];
    const std::size_t b = indices[len - 1 - i];
    plan.append(cnot(a, b));
    plan.append(cnot(b, a));
    plan.append(cnot(a, b));
  }
  plan.result_indices = indices;
  return plan;
}

}  // namespace cove::arithmetic
