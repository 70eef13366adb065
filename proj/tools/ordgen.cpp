// ordgen: command-line front end.
//
// Exit codes: 0 ok, 2 usage or invalid input, 3 unsupported rank,
// 4 oracle budget exceeded, 5 arithmetic data needed (exceptional prime).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include "ordgen/algebra_expr.hpp"
#include "ordgen/arith_spec.hpp"
#include "ordgen/counting.hpp"
#include "ordgen/errors.hpp"
#include "ordgen/finalg.hpp"
#include "ordgen/report.hpp"
#include "ordgen/solver.hpp"

namespace {

using namespace ordgen;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedRank:
      return 3;
    case ErrorKind::BudgetExceeded:
      return 4;
    case ErrorKind::ExceptionalPrimeNeedsOverride:
    case ErrorKind::Exceptional:
      return 5;
    default:
      return 2;
  }
}

struct Common {
  std::string format = "text";
  unsigned workers = 0;
  std::optional<std::uint64_t> budget;

  bool machine() const { return format == "machine"; }

  OracleOptions oracle() const {
    OracleOptions o;
    o.workers = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
    if (budget) {
      o.budget = *budget;
    } else if (const char* env = std::getenv("ORDGEN_BUDGET")) {
      try {
        o.budget = std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "ORDGEN_BUDGET must be a positive integer");
      }
    }
    if (o.budget < 1) throw Error(ErrorKind::InvalidArgument, "budget must be at least 1");
    return o;
  }

  void emit(const Json& doc, std::string (*text)(const Json&)) const {
    std::cout << (machine() ? render_machine(doc) : text(doc));
  }
};

PrimePower prime_power_arg(std::uint64_t q) {
  const auto pp = PrimePower::from_q(q, ~std::uint64_t{0});
  if (!pp) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  return *pp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating tuples of finite algebras and generator counts of maximal orders"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--workers", common.workers, "Worker threads for the oracle (0 = all cores)");
  app.add_option("--budget", common.budget, "Oracle closure budget (overrides ORDGEN_BUDGET)");

  // count
  auto* count = app.add_subcommand("count", "Closed-form generating tuple counts");
  int c_k = 0, c_n = 0, c_r = 1;
  std::uint64_t c_q = 0;
  std::optional<std::int64_t> c_m;
  bool c_lower = false;
  count->add_option("--k", c_k, "Tuple length")->required()->check(CLI::PositiveNumber);
  count->add_option("--n", c_n, "Matrix size")->required()->check(CLI::PositiveNumber);
  count->add_option("--q", c_q, "Base field size (prime power)")->required();
  count->add_option("--r", c_r, "Extension degree")->check(CLI::PositiveNumber)->capture_default_str();
  count->add_option("--m", c_m, "Copies: count for M_n(F_{q^r})^m")->check(CLI::NonNegativeNumber);
  count->add_flag("--lower", c_lower, "Certified lower bound instead of the exact value");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive or sampled generating tuple counts");
  std::string o_alg;
  int o_k = 0;
  std::optional<std::uint64_t> o_samples, o_seed;
  bool o_lift = false;
  std::vector<std::uint64_t> o_tuple;
  oracle->add_option("--alg", o_alg, "Algebra expression, e.g. M(2,2) or TW(q=2,m=2)")->required();
  oracle->add_option("--k", o_k, "Tuple length")->check(CLI::PositiveNumber);
  oracle->add_option("--samples", o_samples, "Sample count (Monte Carlo mode)");
  oracle->add_option("--seed", o_seed, "Seed, required with --samples");
  oracle->add_flag("--lift", o_lift, "Count lifts over the radical of the tuple given by --tuple");
  oracle->add_option("--tuple", o_tuple, "Element indices of the quotient tuple (with --lift)")->delimiter(',');

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Smallest number of generators of a maximal order");
  std::string a_spec;
  analyze->add_option("--spec", a_spec, "Spec file (JSON)")->required();

  // density
  auto* dens = app.add_subcommand("density", "Certified interval for the generating k-tuple density");
  std::string d_spec;
  int d_k = 0;
  std::optional<std::uint64_t> d_bound;
  dens->add_option("--spec", d_spec, "Spec file (JSON)")->required();
  dens->add_option("--k", d_k, "Tuple length")->required()->check(CLI::PositiveNumber);
  dens->add_option("--bound", d_bound, "Truncation prime bound B (default max(1000, minimum))");

  // quaternion
  auto* quat = app.add_subcommand("quaternion", "h(m) for powers of a quaternion order over Z");
  std::vector<std::uint64_t> q_ram;
  std::int64_t q_mmax = 0;
  quat->add_option("--ramified", q_ram, "Ramified primes, comma separated")->required()->delimiter(',');
  quat->add_option("--mmax", q_mmax, "Largest number of copies")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count) {
      const PrimePower pp = prime_power_arg(c_q);
      const mpz_class q(static_cast<unsigned long>(pp.q));
      Json j;
      j["command"] = "count";
      j["k"] = c_k;
      j["n"] = c_n;
      j["q"] = pp.q;
      j["r"] = c_r;
      if (c_lower) {
        if (c_m) throw Error(ErrorKind::InvalidArgument, "--lower does not combine with --m");
        j["mode"] = "lower";
        j["value"] = gen_count_twisted_lower(c_k, c_n, q, c_r).get_str();
      } else {
        j["mode"] = "exact";
        if (c_m) {
          j["m"] = *c_m;
          j["value"] = gen_count_power(c_k, c_n, q, c_r, mpz_class(std::to_string(*c_m))).get_str();
        } else {
          j["value"] = gen_count_twisted(c_k, c_n, q, c_r).get_str();
        }
      }
      if (common.machine()) {
        std::cout << render_machine(j);
      } else {
        std::cout << j["value"].get<std::string>() << "\n";
      }
    } else if (*oracle) {
      const FiniteAlgebra a = parse_algebra(o_alg);
      const OracleOptions opt = common.oracle();
      if (o_lift) {
        if (o_tuple.empty()) throw Error(ErrorKind::InvalidArgument, "--lift needs --tuple");
        std::vector<Vec> reps;
        for (auto idx : o_tuple) {
          if (mpz_class(std::to_string(idx)) >= a.cardinality()) {
            throw Error(ErrorKind::InvalidArgument, "tuple index " + std::to_string(idx) + " out of range");
          }
          reps.push_back(a.element(idx));
        }
        Json j;
        j["command"] = "oracle";
        j["mode"] = "lift";
        j["algebra"] = a.label();
        j["dim"] = a.dim();
        j["tuple"] = o_tuple;
        j["count"] = lift_count(a, a.radical_basis(), reps, opt).get_str();
        common.emit(j, render_flat_text);
      } else if (o_samples) {
        if (!o_seed) throw Error(ErrorKind::InvalidArgument, "--samples requires --seed");
        if (o_k < 1) throw Error(ErrorKind::InvalidArgument, "--k is required");
        const auto e = sample_gen_fraction(a, o_k, *o_samples, *o_seed, opt.workers);
        common.emit(estimate_json(a, o_k, *o_seed, e), render_flat_text);
      } else {
        if (o_k < 1) throw Error(ErrorKind::InvalidArgument, "--k is required");
        Json j;
        j["command"] = "oracle";
        j["mode"] = "exhaustive";
        j["algebra"] = a.label();
        j["dim"] = a.dim();
        j["k"] = o_k;
        j["count"] = brute_gen_count(a, o_k, opt).get_str();
        if (common.machine()) {
          std::cout << render_machine(j);
        } else {
          std::cout << j["count"].get<std::string>() << "\n";
        }
      }
    } else if (*analyze) {
      const OrderSpec spec = load_spec(a_spec);
      common.emit(verdict_json(spec, smallest_h(spec)), render_verdict_text);
    } else if (*dens) {
      const OrderSpec spec = load_spec(d_spec);
      std::uint64_t bound = d_bound ? *d_bound : std::max<std::uint64_t>(1000, density_min_bound(spec));
      common.emit(density_json(spec, density(spec, d_k, bound)), render_density_text);
    } else if (*quat) {
      common.emit(quaternion_json(quaternion_example(q_ram, q_mmax)), render_quaternion_text);
    }
  } catch (const Error& e) {
    std::cerr << "ordgen: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ordgen: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
