#include "pdepot/betting.hpp"

#include <cfloat>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pdepot {

BetResult player_bet(const Potential& potential, int t, double coin_sum_prev) {
  if (t < 1) throw std::domain_error("player_bet: t must be >= 1");
  // Polynomial potentials never overflow and value() keeps them exact.
  if (potential.kind() == Potential::Kind::Ogd ||
      potential.kind() == Potential::Kind::Linear) {
    return {0.5 * (potential.value(t, coin_sum_prev + 1.0) -
                   potential.value(t, coin_sum_prev - 1.0)),
            false};
  }
  const ScaledValue half_diff =
      (potential.value_scaled(t, coin_sum_prev + 1.0) -
       potential.value_scaled(t, coin_sum_prev - 1.0)) /
      2.0;
  if (!half_diff.fits_double()) {
    return {half_diff.sign() >= 0 ? DBL_MAX : -DBL_MAX, true};
  }
  return {half_diff.to_double(), false};
}

double adversary_coin(const Potential& potential, int t, double coin_sum_prev,
                      double bet) {
  if (t < 1) throw std::domain_error("adversary_coin: t must be >= 1");
  const ScaledValue plus = potential.value_scaled(t, coin_sum_prev + 1.0) -
                           ScaledValue::from_double(bet);
  const ScaledValue minus = potential.value_scaled(t, coin_sum_prev - 1.0) +
                            ScaledValue::from_double(bet);
  return plus >= minus ? 1.0 : -1.0;
}

AdversaryPolicy AdversaryPolicy::pde_argmax(Potential potential) {
  AdversaryPolicy a;
  a.kind_ = Kind::PdeArgmax;
  a.potential_ = std::make_shared<Potential>(std::move(potential));
  return a;
}

AdversaryPolicy AdversaryPolicy::scripted(std::vector<double> coins) {
  AdversaryPolicy a;
  a.kind_ = Kind::Scripted;
  a.script_ = std::move(coins);
  return a;
}

AdversaryPolicy AdversaryPolicy::rademacher(std::uint64_t seed) {
  AdversaryPolicy a;
  a.kind_ = Kind::Rademacher;
  a.rng_.seed(seed);
  return a;
}

double AdversaryPolicy::coin(int t, double coin_sum_prev, double bet) {
  switch (kind_) {
    case Kind::PdeArgmax:
      return adversary_coin(*potential_, t, coin_sum_prev, bet);
    case Kind::Scripted: {
      if (script_pos_ >= script_.size()) {
        throw std::out_of_range("AdversaryPolicy: coin script exhausted");
      }
      const double c = script_[script_pos_++];
      if (!(c >= -1.0 && c <= 1.0)) {
        throw std::invalid_argument(
            "AdversaryPolicy: scripted coin outside [-1, 1]");
      }
      return c;
    }
    case Kind::Rademacher:
      return (rng_() & 1u) ? 1.0 : -1.0;
  }
  throw std::logic_error("AdversaryPolicy: unknown kind");
}

Trajectory play_game(const PlayerPolicy& player, AdversaryPolicy& adversary,
                     int T) {
  if (T < 1) throw std::domain_error("play_game: T must be >= 1");
  Trajectory trajectory;
  trajectory.reserve(static_cast<std::size_t>(T));
  double coin_sum = 0.0;
  double wealth = 0.0;
  for (int t = 1; t <= T; ++t) {
    const double bet = player.bet(t, coin_sum);
    const double c = adversary.coin(t, coin_sum, bet);
    coin_sum += c;
    wealth += c * bet;
    trajectory.push_back({t, bet, c, coin_sum, wealth});
  }
  return trajectory;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  out << "t,bet,coin,coin_sum,wealth\n";
  char buf[160];
  for (const CoinGameRound& r : trajectory) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", r.t, r.bet,
                  r.coin, r.coin_sum, r.wealth);
    out << buf;
  }
}

std::vector<double> theorem35_sequence(int T, double S) {
  if (T < 1) throw std::domain_error("theorem35_sequence: T must be >= 1");
  if (std::fabs(S) > T) {
    throw std::domain_error("theorem35_sequence: |S| must be <= T");
  }

  // Integer target S_tilde: |S_tilde| <= T, parity opposite to T
  // ((|S_tilde|+1) mod 2 == T mod 2), |S - S_tilde| <= 1. When S is an
  // integer of the wrong parity both neighbors qualify; break the tie
  // toward sign(S), and toward + when S = 0 (clamped by |S_tilde| <= T).
  const int wanted_parity = (T % 2 == 0) ? 1 : 0;  // parity of |S_tilde|
  double s_tilde;
  const double fl = std::floor(S);
  if (S == fl && std::fabs(std::fmod(std::fabs(S), 2.0)) ==
                     static_cast<double>(wanted_parity)) {
    s_tilde = S;
  } else if (S == fl) {
    // Integral S with the wrong parity: both S-1 and S+1 qualify.
    const double toward = (S > 0) ? 1.0 : (S < 0 ? -1.0 : 1.0);
    s_tilde = S + toward;
    if (std::fabs(s_tilde) > T) s_tilde = S - toward;
  } else {
    // Non-integral S: exactly one of floor/ceil has the wanted parity.
    const double a = fl;
    const double b = fl + 1.0;
    const bool a_ok = std::fabs(std::fmod(std::fabs(a), 2.0)) ==
                      static_cast<double>(wanted_parity);
    s_tilde = a_ok ? a : b;
    if (std::fabs(s_tilde) > T) s_tilde = a_ok ? b : a;
  }

  std::vector<double> coins;
  coins.reserve(static_cast<std::size_t>(T));
  const double c1 = S - s_tilde;
  coins.push_back(c1);
  const int abs_tilde = static_cast<int>(std::fabs(s_tilde));
  const double alt_sign = c1 >= 0 ? 1.0 : -1.0;  // sign(0) taken as +
  for (int t = 2; t <= T - abs_tilde; ++t) {
    coins.push_back(alt_sign * ((t % 2 == 1) ? 1.0 : -1.0));
  }
  const double tail_sign = s_tilde > 0 ? 1.0 : -1.0;
  for (int t = T - abs_tilde + 1; t <= T; ++t) {
    coins.push_back(tail_sign);
  }
  return coins;
}

double wealth_lower_bound(const Potential& potential, int T, double S) {
  switch (potential.kind()) {
    case Potential::Kind::Erfi:
      return potential.value(T, S);
    case Potential::Kind::Exp:
      return potential.value(T, S) - potential.params().C * std::sqrt(M_E);
    default:
      throw std::invalid_argument(
          "wealth_lower_bound: supported for Erfi and Exp potentials only");
  }
}

double wealth_upper_bound_thm35(double C, int T, double S) {
  const double v = Potential::erfi(C).value(T, S);
  const double s2t = S * S / static_cast<double>(T);
  return v + (3.0 * C / 8.0) * std::exp(s2t / 2.0) * (s2t + 1.0) + 2.0 * C;
}

double verify_value_function_ogd(int t, double S, double C) {
  const Potential v = Potential::ogd(C);
  // Minimizing bet = discrete derivative at the next slice.
  const double x =
      0.5 * (v.value(t + 1, S + 1.0) - v.value(t + 1, S - 1.0));
  const double up = v.value(t + 1, S + 1.0) - x;
  const double down = v.value(t + 1, S - 1.0) + x;
  return std::max(up, down) - v.value(t, S);
}

TailBoundResult tail_bound_check(int T, double k) {
  if (T < 1) throw std::domain_error("tail_bound_check: T must be >= 1");
  if (!(k > 0)) throw std::domain_error("tail_bound_check: k must be > 0");

  // Exact binomial sum in log space with compensated accumulation:
  // sum_t z_t = 2j - T over j heads out of T.
  const double log_half_T = T * std::log(0.5);
  const double lgT = std::lgamma(T + 1.0);
  double sum = 0.0, comp = 0.0;
  for (int j = 0; j <= T; ++j) {
    if (std::fabs(2.0 * j - T) < k) continue;
    const double logp = lgT - std::lgamma(j + 1.0) -
                        std::lgamma(T - j + 1.0) + log_half_T;
    const double y = std::exp(logp) - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }

  const double bound = std::sqrt(2.0 / M_PI) * k * std::sqrt(T) /
                           (k * k + T) * std::exp(-k * k / (2.0 * T)) -
                       1.0 / std::sqrt(T);
  return {sum, bound};
}

double wealth_optimality_bound(double C, double lambda, double T) {
  const double lambda_min = std::exp((std::sqrt(2.0) + 1.0) / 2.0);
  if (!(lambda >= lambda_min)) {
    throw std::domain_error(
        "wealth_optimality_bound: lambda must be >= e^{(sqrt(2)+1)/2}");
  }
  if (!(T >= 8.0 * M_PI * lambda * lambda * std::log(lambda))) {
    throw std::domain_error(
        "wealth_optimality_bound: T must be >= 8 pi lambda^2 log lambda");
  }
  return 2.0 * std::sqrt(2.0 * M_PI) * lambda * std::sqrt(std::log(lambda)) *
         C * std::sqrt(T);
}

}  // namespace pdepot
