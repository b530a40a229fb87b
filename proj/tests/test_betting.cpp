#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <doctest.h>

#include "pdepot/betting.hpp"

using namespace pdepot;

TEST_CASE("player bets") {
  CHECK(player_bet(Potential::ogd(1.5), 4, 2.0).bet == doctest::Approx(6.0));
  CHECK(player_bet(Potential::erfi(1.0), 1, 0.0).bet == 0.0);
  CHECK(player_bet(Potential::exponential(1.0), 2, 1.0).bet ==
        doctest::Approx(0.60750436644650544).epsilon(1e-13));
}

TEST_CASE("bet saturation far beyond double range") {
  // One-sided coin stream pushes S ~ t; near t = 1500 the exponential
  // potential leaves double range and the bet clamps with a sticky flag.
  const PlayerPolicy player(Potential::exponential(1.0));
  const double huge_bet = player.bet(1500, 1499.0);
  CHECK(huge_bet == std::numeric_limits<double>::max());
  CHECK(player.overflowed());
}

TEST_CASE("adversary coin argmax") {
  const Potential ogd = Potential::ogd(1.0);
  CHECK(adversary_coin(ogd, 1, 0.0, 0.0) == 1.0);  // symmetric tie
  CHECK(adversary_coin(ogd, 3, 2.0, 0.0) == 1.0);
  CHECK(adversary_coin(ogd, 3, -2.0, 0.0) == -1.0);
  // Against its own player both coins attain the max.
  for (const Potential& p :
       {Potential::ogd(1.0), Potential::erfi(1.0), Potential::exponential(1.0)}) {
    for (int t = 1; t <= 30; ++t) {
      for (double S = -3; S <= 3; ++S) {
        const double x = player_bet(p, t, S).bet;
        const double up = p.value(t, S + 1) - x;
        const double dn = p.value(t, S - 1) + x;
        CHECK(std::fabs(up - dn) <= 1e-9 * (1.0 + std::fabs(up)));
      }
    }
  }
}

TEST_CASE("scripted adversary validation") {
  AdversaryPolicy adv = AdversaryPolicy::scripted({0.5, -1.0});
  CHECK(adv.coin(1, 0, 0) == 0.5);
  CHECK(adv.coin(2, 0.5, 0) == -1.0);
  CHECK_THROWS_AS(adv.coin(3, -0.5, 0), std::out_of_range);
  AdversaryPolicy bad = AdversaryPolicy::scripted({1.5});
  CHECK_THROWS_AS(bad.coin(1, 0, 0), std::invalid_argument);
}

TEST_CASE("quadratic potential plays to an exact value function") {
  for (int t = 0; t <= 100; t += 5) {
    for (double S = -t; S <= t; S += 1.0) {
      CHECK(std::fabs(verify_value_function_ogd(t, S)) <= 1e-9);
    }
  }
  // Wealth identity C[(sum c)^2 - T] for +-1 coins.
  std::mt19937_64 rng(5);
  std::vector<double> coins(200);
  for (double& c : coins) c = (rng() & 1u) ? 1.0 : -1.0;
  AdversaryPolicy adv = AdversaryPolicy::scripted(coins);
  const Trajectory traj =
      play_game(PlayerPolicy(Potential::ogd(0.7)), adv, 200);
  const double S = traj.back().coin_sum;
  CHECK(traj.back().wealth == doctest::Approx(0.7 * (S * S - 200.0)));
}

TEST_CASE("three-phase coin sequence") {
  CHECK(theorem35_sequence(4, 4.0) == std::vector<double>{1, 1, 1, 1});
  CHECK(theorem35_sequence(2, 0.0) == std::vector<double>{-1, 1});
  CHECK_THROWS_AS(theorem35_sequence(3, 4.0), std::domain_error);

  for (int T : {3, 4, 7, 10, 25}) {
    for (double S = -T; S <= T; S += 0.5) {
      const std::vector<double> c = theorem35_sequence(T, S);
      REQUIRE(static_cast<int>(c.size()) == T);
      CHECK(std::fabs(c[0]) <= 1.0 + 1e-12);
      for (std::size_t i = 1; i < c.size(); ++i) {
        CHECK(std::fabs(c[i]) == 1.0);
      }
      CHECK(std::accumulate(c.begin(), c.end(), 0.0) ==
            doctest::Approx(S).epsilon(1e-12));
      // Partial sums stay within 1 before the final constant phase.
      const double s_tilde = S - c[0];
      const int tail = static_cast<int>(std::fabs(s_tilde) + 0.5);
      double partial = 0.0;
      for (int i = 0; i < T - tail; ++i) {
        partial += c[i];
        CHECK(std::fabs(partial) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("wealth lower bounds by kind") {
  const Potential erfi = Potential::erfi(1.0);
  const Potential expo = Potential::exponential(2.0);
  CHECK(wealth_lower_bound(erfi, 9, 0.0) == doctest::Approx(-3.0));
  CHECK(wealth_lower_bound(Potential::exponential(1.0), 1, 0.0) ==
        doctest::Approx(1.0 - std::sqrt(M_E)));
  CHECK(wealth_lower_bound(expo, 4, 2.0) ==
        doctest::Approx(expo.value(4, 2) - 2.0 * std::sqrt(M_E)));
  CHECK(wealth_lower_bound(erfi, 8, 4.0) >=
        std::sqrt(8.0) * (0.5 * M_E - 1.5));
  CHECK_THROWS_AS(wealth_lower_bound(Potential::ogd(1.0), 4, 0.0),
                  std::invalid_argument);
}

TEST_CASE("random-coin runs never fall below the wealth floor") {
  const Potential erfi = Potential::erfi(1.0);
  const Potential expo = Potential::exponential(1.0);
  for (int run = 0; run < 200; ++run) {
    AdversaryPolicy a = AdversaryPolicy::rademacher(500 + run);
    AdversaryPolicy b = AdversaryPolicy::rademacher(500 + run);
    const Trajectory te = play_game(PlayerPolicy(erfi), a, 300);
    const Trajectory tx = play_game(PlayerPolicy(expo), b, 300);
    CHECK(te.back().wealth >=
          wealth_lower_bound(erfi, 300, te.back().coin_sum) - 1e-7);
    CHECK(tx.back().wealth >=
          wealth_lower_bound(expo, 300, tx.back().coin_sum) - 1e-7);
  }
}

TEST_CASE("scripted three-phase sequences meet the wealth ceiling") {
  const Potential erfi = Potential::erfi(1.0);
  for (int T : {10, 50}) {
    for (double S = -T; S <= T; S += 1.0) {
      AdversaryPolicy adv =
          AdversaryPolicy::scripted(theorem35_sequence(T, S));
      const Trajectory traj = play_game(PlayerPolicy(erfi), adv, T);
      CHECK(traj.back().coin_sum == doctest::Approx(S).epsilon(1e-12));
      CHECK(traj.back().wealth <=
            wealth_upper_bound_thm35(1.0, T, S) + 1e-7);
      CHECK(traj.back().wealth >= wealth_lower_bound(erfi, T, S) - 1e-7);
    }
  }
}

TEST_CASE("state sufficiency: replay from (t, S) matches full history") {
  AdversaryPolicy adv = AdversaryPolicy::rademacher(321);
  const PlayerPolicy player(Potential::erfi(1.0));
  const Trajectory traj = play_game(player, adv, 150);
  double S = 0.0;
  for (const CoinGameRound& r : traj) {
    CHECK(player_bet(player.potential(), r.t, S).bet == r.bet);
    S += r.coin;
    CHECK(S == r.coin_sum);
  }
}

TEST_CASE("seeded adversary determinism and fairness") {
  AdversaryPolicy a = AdversaryPolicy::rademacher(77);
  AdversaryPolicy b = AdversaryPolicy::rademacher(77);
  double sum = 0.0;
  for (int t = 1; t <= 1000000; ++t) {
    const double c = a.coin(t, 0, 0);
    CHECK(c == b.coin(t, 0, 0));
    sum += c;
  }
  CHECK(std::fabs(sum / 1e6) <= 0.004);  // 3.9 sigma band
}

TEST_CASE("exact binomial tails dominate the analytic floor") {
  CHECK(tail_bound_check(1, 0.5).exact_prob == doctest::Approx(1.0));
  for (int T : {100, 400, 900}) {
    const double root = std::sqrt(static_cast<double>(T));
    for (double f : {0.5, 1.0, 1.5, 2.0}) {
      const TailBoundResult r = tail_bound_check(T, f * root);
      CHECK(r.exact_prob >= r.bound);
      CHECK(r.exact_prob <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("policy-independent wealth ceiling") {
  const double lambda_min = std::exp((std::sqrt(2.0) + 1.0) / 2.0);
  const double T_min = 8.0 * M_PI * lambda_min * lambda_min *
                       std::log(lambda_min);
  CHECK(wealth_optimality_bound(1.0, lambda_min, T_min) ==
        doctest::Approx(2.0 * std::sqrt(2.0 * M_PI) * lambda_min *
                        std::sqrt(std::log(lambda_min)) * std::sqrt(T_min)));
  CHECK_THROWS_AS(wealth_optimality_bound(1.0, 1.0, 1e6), std::domain_error);
  CHECK_THROWS_AS(wealth_optimality_bound(1.0, lambda_min, 10.0),
                  std::domain_error);
  // The guaranteed wealth at the barrier stays below the ceiling.
  for (double lambda : {lambda_min, 5.0, 10.0, 100.0}) {
    const double T = std::ceil(8.0 * M_PI * lambda * lambda *
                               std::log(lambda)) + 100.0;
    const double barrier = std::sqrt(2.0 * T * std::log(lambda));
    CHECK(barrier <= T);
    const double floor_expr = std::sqrt(T) *
                              (lambda / (2.0 * std::log(lambda)) - 1.5);
    CHECK(floor_expr <= wealth_optimality_bound(1.0, lambda, T));
  }
}

TEST_CASE("trajectory CSV export") {
  AdversaryPolicy adv = AdversaryPolicy::scripted({1.0, -1.0, 1.0});
  const Trajectory traj = play_game(PlayerPolicy(Potential::ogd(1.0)), adv, 3);
  std::ostringstream out;
  write_trajectory_csv(out, traj);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,bet,coin,coin_sum,wealth");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}
