#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "pdepot/potential.hpp"

namespace pdepot {

/// One round of a coin-betting game; indices are 1-based.
struct CoinGameRound {
  int t = 0;
  double bet = 0;
  double coin = 0;
  double coin_sum = 0;  // running sum including this round's coin
  double wealth = 0;    // running sum of coin * bet
};

using Trajectory = std::vector<CoinGameRound>;

/// Result of a bet evaluation; `saturated` flags that the half central
/// difference exceeded double range and was clamped to +-DBL_MAX.
struct BetResult {
  double bet = 0;
  bool saturated = false;
};

/// Player bet x_t = 1/2 [V(t, S+1) - V(t, S-1)] evaluated through the
/// overflow-safe potential variant.
BetResult player_bet(const Potential& potential, int t, double coin_sum_prev);

/// Adversary coin argmax_{c in {-1,+1}} [V(t, S+c) - c x]; ties go to +1.
double adversary_coin(const Potential& potential, int t, double coin_sum_prev,
                      double bet);

/// Betting policy wrapper with a sticky saturation flag.
class PlayerPolicy {
 public:
  explicit PlayerPolicy(Potential potential) : potential_(std::move(potential)) {}

  double bet(int t, double coin_sum_prev) const {
    const BetResult r = player_bet(potential_, t, coin_sum_prev);
    overflowed_ = overflowed_ || r.saturated;
    return r.bet;
  }

  bool overflowed() const { return overflowed_; }
  const Potential& potential() const { return potential_; }

 private:
  Potential potential_;
  mutable bool overflowed_ = false;
};

/// Coin source: PDE argmax, a scripted coin list, or seeded fair +-1 coins.
class AdversaryPolicy {
 public:
  static AdversaryPolicy pde_argmax(Potential potential);
  static AdversaryPolicy scripted(std::vector<double> coins);
  static AdversaryPolicy rademacher(std::uint64_t seed);

  /// Next coin; throws std::out_of_range when a script is exhausted and
  /// std::invalid_argument when a scripted coin leaves [-1, 1].
  double coin(int t, double coin_sum_prev, double bet);

 private:
  AdversaryPolicy() = default;
  enum class Kind { PdeArgmax, Scripted, Rademacher } kind_ = Kind::Rademacher;
  std::shared_ptr<const Potential> potential_;
  std::vector<double> script_;
  std::size_t script_pos_ = 0;
  std::mt19937_64 rng_;
};

/// Run T rounds; deterministic given the policies.
Trajectory play_game(const PlayerPolicy& player, AdversaryPolicy& adversary,
                     int T);

/// One CSV row per round (t, bet, coin, coin_sum, wealth), with header.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

/// The three-phase coin sequence that drives the wealth of the Erfi player
/// up to its matching upper bound: c_1 in [-1,1], the rest in {-1,+1},
/// summing exactly to S. Requires |S| <= T.
std::vector<double> theorem35_sequence(int T, double S);

/// Anytime wealth floor of the potential's player policy:
/// Erfi -> V(T,S); Exp -> V(T,S) - C sqrt(e). Other kinds rejected.
double wealth_lower_bound(const Potential& potential, int T, double S);

/// V_erfi(T,S) + (3C/8) e^{S^2/(2T)} (S^2/T + 1) + 2C.
double wealth_upper_bound_thm35(double C, int T, double S);

/// Residual of the exact Bellman recursion for the quadratic potential:
/// min_x max_{c in {-1,+1}} [V(t+1, S+c) - c x] - V(t, S), with the
/// minimizing bet taken at the discrete derivative. Zero up to rounding.
double verify_value_function_ogd(int t, double S, double C = 1.0);

/// Exact two-sided binomial tail versus its analytic floor.
struct TailBoundResult {
  double exact_prob = 0;  // P[|sum of T Rademacher vars| >= k]
  double bound = 0;       // sqrt(2/pi) k sqrt(T)/(k^2+T) e^{-k^2/(2T)} - 1/sqrt(T)
};
TailBoundResult tail_bound_check(int T, double k);

/// Policy-independent wealth ceiling 2 sqrt(2 pi) lambda sqrt(log lambda) C sqrt(T).
/// Requires lambda >= e^{(sqrt(2)+1)/2} and T >= 8 pi lambda^2 log lambda.
double wealth_optimality_bound(double C, double lambda, double T);

}  // namespace pdepot
