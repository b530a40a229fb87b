#include "pdepot/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <vector>

#include "pdepot/betting.hpp"
#include "pdepot/olo.hpp"
#include "pdepot/potential.hpp"
#include "pdepot/specfun.hpp"

namespace pdepot {
namespace {

struct Checker {
  std::ostream& log;
  int failures = 0;
  int checks = 0;

  void expect(bool ok, const char* what, double lhs, double rhs) {
    ++checks;
    if (!ok) {
      ++failures;
      log << "  FAIL " << what << ": " << lhs << " vs " << rhs << "\n";
    }
  }
};

std::vector<Potential> stock_potentials() {
  return {Potential::ogd(1.0), Potential::exponential(1.0),
          Potential::erfi(1.0)};
}

bool suite_pde(std::ostream& log) {
  Checker c{log};
  for (const Potential& p : stock_potentials()) {
    for (int t = 1; t <= 100; t += 7) {
      const double s_max = std::sqrt(10.0 * t);
      for (double S = -std::floor(s_max); S <= s_max; S += 1.0) {
        const double v = p.value(t, S);
        const double r = pde_residual(p, t, S);
        c.expect(std::fabs(r) <= 1e-6 * (1.0 + std::fabs(v)), "pde residual",
                 r, v);
      }
    }
  }
  const struct {
    double alpha;
    double (*g)(double);
  } solutions[] = {
      {1.0, [](double z) { return 2.0 * z * z - 1.0; }},
      {-0.5, [](double z) { return std::exp(z * z); }},
      {0.5,
       [](double z) {
         return 2.0 * z * specfun::exp_integral(z) - std::exp(z * z);
       }},
  };
  for (const auto& sol : solutions) {
    for (double z = -3.0; z <= 3.0; z += 0.25) {
      const double r = hermite_residual(sol.alpha, sol.g, z);
      c.expect(std::fabs(r) <= 1e-5 * (1.0 + std::fabs(sol.g(z))),
               "hermite residual", r, sol.g(z));
    }
  }
  log << "pde: " << c.checks << " checks, " << c.failures << " failures\n";
  return c.failures == 0;
}

bool suite_ito(std::ostream& log) {
  Checker c{log};
  std::mt19937_64 rng(7);
  for (const Potential& p : stock_potentials()) {
    double S = 0.0;
    for (int t = 0; t < 100; ++t) {
      const double x = player_bet(p, t + 1, S).bet;
      const double diamond = perturbation(p, t + 1, S);
      const double base = p.value(t, S);
      // Exact decomposition at the endpoints c = +-1.
      const double coin = (rng() & 1u) ? 1.0 : -1.0;
      const double lhs = p.value(t + 1, S + coin) - base;
      const double rhs = coin * x + diamond;
      c.expect(std::fabs(lhs - rhs) <= 1e-9 * (1.0 + std::fabs(lhs)),
               "ito equality", lhs, rhs);
      // Convexity makes it an upper bound for interior coins.
      const double frac = (static_cast<double>(rng() >> 11) * 0x1.0p-53) *
                              2.0 -
                          1.0;
      const double lhs_frac = p.value(t + 1, S + frac) - base;
      const double rhs_frac = frac * x + diamond;
      c.expect(lhs_frac <= rhs_frac + 1e-9 * (1.0 + std::fabs(rhs_frac)),
               "ito inequality", lhs_frac, rhs_frac);
      S += coin;
    }
  }
  log << "ito: " << c.checks << " checks, " << c.failures << " failures\n";
  return c.failures == 0;
}

bool suite_bounds(std::ostream& log) {
  Checker c{log};
  const Potential erfi = Potential::erfi(1.0);
  const Potential expo = Potential::exponential(1.0);
  const int T = 500;
  for (int run = 0; run < 100; ++run) {
    AdversaryPolicy adv_a = AdversaryPolicy::rademacher(1000 + run);
    AdversaryPolicy adv_b = AdversaryPolicy::rademacher(1000 + run);
    const Trajectory traj_erfi = play_game(PlayerPolicy(erfi), adv_a, T);
    const Trajectory traj_exp = play_game(PlayerPolicy(expo), adv_b, T);
    const double S = traj_erfi.back().coin_sum;
    c.expect(traj_erfi.back().wealth >=
                 wealth_lower_bound(erfi, T, S) - 1e-7,
             "erfi wealth floor", traj_erfi.back().wealth,
             wealth_lower_bound(erfi, T, S));
    c.expect(traj_exp.back().wealth >=
                 wealth_lower_bound(expo, T, traj_exp.back().coin_sum) - 1e-7,
             "exp wealth floor", traj_exp.back().wealth,
             wealth_lower_bound(expo, T, traj_exp.back().coin_sum));
  }
  std::mt19937_64 rng(11);
  const auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int i = 0; i < 100; ++i) {
    const double C = uniform(0.1, 10.0);
    const double horizon = std::floor(uniform(1.0, 1000.0));
    const double w = uniform(0.0, 100.0);
    const double conj = fenchel_conjugate(Potential::erfi(C), horizon, w);
    const double cap =
        C * std::sqrt(horizon) +
        w * std::sqrt(2.0 * horizon) *
            (std::sqrt(std::log1p(w / (std::sqrt(2.0) * C))) + 1.0);
    c.expect(conj <= cap + 1e-9 * (1.0 + std::fabs(cap)), "conjugate cap",
             conj, cap);
    c.expect(bound_corC4(Potential::erfi(C), horizon, w) <=
                 bound_thm41(C, horizon, w) + 1e-9,
             "bound ordering", conj, bound_thm41(C, horizon, w));
  }
  double prev = HUGE_VAL;
  for (double U = 1e3; U <= 1e12 * 1.5; U *= 10.0) {
    const double r = leading_ratio(1.0, U, 1.0);
    c.expect(r < prev, "leading ratio monotone", r, prev);
    prev = r;
  }
  log << "bounds: " << c.checks << " checks, " << c.failures << " failures\n";
  return c.failures == 0;
}

bool suite_tail(std::ostream& log) {
  Checker c{log};
  for (int T : {100, 400, 900}) {
    const double root = std::sqrt(static_cast<double>(T));
    for (double f : {0.5, 1.0, 1.5, 2.0}) {
      const TailBoundResult r = tail_bound_check(T, f * root);
      c.expect(r.exact_prob >= r.bound, "tail bound", r.exact_prob, r.bound);
    }
  }
  log << "tail: " << c.checks << " checks, " << c.failures << " failures\n";
  return c.failures == 0;
}

}  // namespace

bool verify_suite(const std::string& name, std::ostream& log) {
  if (name == "pde") return suite_pde(log);
  if (name == "ito") return suite_ito(log);
  if (name == "bounds") return suite_bounds(log);
  if (name == "tail") return suite_tail(log);
  if (name == "all") {
    bool ok = suite_pde(log);
    ok = suite_ito(log) && ok;
    ok = suite_bounds(log) && ok;
    ok = suite_tail(log) && ok;
    return ok;
  }
  log << "unknown suite '" << name << "' (expected pde|ito|bounds|tail|all)\n";
  return false;
}

}  // namespace pdepot
