#include "cove/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <random>

#include "cove/error.hpp"
#include "cove/gates.hpp"
#include "cove/shor.hpp"

namespace cove::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::string output = "text";
  std::size_t qubit_cap = kDefaultQubitCap;

  bool json() const { return output == "json"; }
};

struct Summary {
  std::uint64_t seed;
  std::size_t trials;
  std::chrono::steady_clock::time_point start;
};

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) | rd();
}

std::int64_t elapsed_ms(const Summary& s) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               s.start)
      .count();
}

void print_summary(std::ostream& out, const RunConfig& cfg, const Summary& s, json extra = {}) {
  if (cfg.json()) {
    json j = extra.is_object() ? std::move(extra) : json::object();
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["elapsed_ms"] = elapsed_ms(s);
    out << j.dump() << '\n';
  } else {
    out << "seed " << s.seed << ", " << s.trials << " trial(s), " << elapsed_ms(s) << " ms\n";
  }
}

std::string bitstring(std::uint64_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if ((value >> (width - 1 - i)) & 1U) s[i] = '1';
  return s;
}

// Every outcome of a `width`-bit measurement, zero counts included.
using Tally = std::map<std::string, std::uint64_t>;

Tally empty_tally(std::size_t width) {
  Tally t;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) t[bitstring(v, width)] = 0;
  return t;
}

void print_tally(std::ostream& out, const RunConfig& cfg, const Tally& tally) {
  for (const auto& [outcome, count] : tally) {
    if (cfg.json()) {
      out << json{{"outcome", outcome}, {"count", count}}.dump() << '\n';
    } else {
      out << outcome << ' ' << count << '\n';
    }
  }
}

template <typename Prepare>
void run_trials(std::ostream& out, const RunConfig& cfg, const Summary& s, std::size_t width,
                Prepare prepare) {
  Tally tally = empty_tally(width);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    SimulationContext ctx(ContextOptions{derive_seed(s.seed, t), cfg.qubit_cap, false});
    RegisterView reg = prepare(ctx);
    ++tally[reg.measure().to_bitstring()];
  }
  print_tally(out, cfg, tally);
  print_summary(out, cfg, s);
}

void print_factoring(std::ostream& out, const RunConfig& cfg, const Summary& s,
                     const FactoringOutcome& result, algorithms::OracleKind oracle) {
  std::size_t i = 0;
  for (const IterationRecord& r : result.trace) {
    ++i;
    if (cfg.json()) {
      json j{{"iteration", i}, {"m", r.m}, {"verdict", verdict_name(r.verdict)}};
      if (r.sample) {
        j["sample"] = r.sample->measured;
        j["modulus"] = r.sample->modulus;
        j["reg2"] = r.sample->reg2;
      }
      j["period"] = r.period ? json(*r.period) : json(nullptr);
      out << j.dump() << '\n';
    } else {
      out << "iteration " << i << ": m=" << r.m;
      if (r.sample) {
        out << " reg2=" << r.sample->reg2 << " sample=" << r.sample->measured << '/'
            << r.sample->modulus;
      }
      if (r.period) out << " period=" << *r.period;
      out << ' ' << verdict_name(r.verdict) << '\n';
    }
  }
  if (!cfg.json()) out << result.n << " = " << result.p << " x " << result.q << '\n';
  print_summary(out, cfg, s,
                json{{"n", result.n},
                     {"factors", {result.p, result.q}},
                     {"oracle", algorithms::oracle_name(oracle)},
                     {"iterations", result.trace.size()}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"State-vector quantum circuit simulator", "cove"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Master seed (default: from entropy)");
  app.add_option("--trials", cfg.trials, "Independent trials")->check(CLI::Range(1, 100000000));
  app.add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--qubit-cap", cfg.qubit_cap, "Qubits allowed per context")
      ->check(CLI::Range(std::size_t{1}, kMaxQubitCap));

  int tosses = 1;
  CLI::App* coin = app.add_subcommand("coin-toss", "Hadamard coin toss from |0>");
  coin->add_option("--tosses", tosses, "Hadamards before measuring")
      ->check(CLI::IsMember({1, 2}));

  CLI::App* entangle = app.add_subcommand("entangle", "Bell pair from H then CNot");

  std::uint64_t n = 0;
  std::string oracle = "semantic";
  std::optional<std::uint64_t> force_m;
  CLI::App* factor = app.add_subcommand("factor", "Shor factoring");
  factor->add_option("N", n, "Odd composite to factor")->required();
  factor->add_option("--oracle", oracle, "U_f construction")
      ->check(CLI::IsMember({"semantic", "circuit"}));
  factor->add_option("--force-m", force_m, "Try this m first");

  std::string state_arg;
  CLI::App* state = app.add_subcommand("state", "Prepare and measure a named state");
  state->add_option("name", state_arg, "beta00, beta01, beta10, beta11, ghz or w")
      ->required()
      ->check(CLI::IsMember({"beta00", "beta01", "beta10", "beta11", "ghz", "w"}));

  for (CLI::App* sub : {coin, entangle, factor, state}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const Summary summary{cfg.seed ? *cfg.seed : entropy_seed(), cfg.trials,
                        std::chrono::steady_clock::now()};

  try {
    if (coin->parsed()) {
      run_trials(out, cfg, summary, 1, [&](SimulationContext& ctx) {
        RegisterView reg = ctx.allocate_register(1);
        for (int i = 0; i < tosses; ++i) reg.apply_operation(hadamard(0));
        return reg;
      });
    } else if (entangle->parsed()) {
      run_trials(out, cfg, summary, 2, [](SimulationContext& ctx) {
        return prepare_named_state(ctx, NamedState::Beta00);
      });
    } else if (state->parsed()) {
      NamedState which = NamedState::Beta00;
      for (NamedState s : {NamedState::Beta00, NamedState::Beta01, NamedState::Beta10,
                           NamedState::Beta11, NamedState::Ghz, NamedState::W}) {
        if (state_name(s) == state_arg) which = s;
      }
      const std::size_t width = (which == NamedState::Ghz || which == NamedState::W) ? 3 : 2;
      run_trials(out, cfg, summary, width,
                 [&](SimulationContext& ctx) { return prepare_named_state(ctx, which); });
    } else if (factor->parsed()) {
      ShorOptions options;
      options.seed = summary.seed;
      options.oracle =
          oracle == "circuit" ? algorithms::OracleKind::Circuit : algorithms::OracleKind::Semantic;
      options.force_m = force_m;
      options.qubit_cap = cfg.qubit_cap;
      print_factoring(out, cfg, summary, shor_factor(n, options), options.oracle);
    }
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const QubitLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kSuccess;
}

}  // namespace cove::cli
