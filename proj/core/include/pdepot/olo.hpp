#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "pdepot/betting.hpp"
#include "pdepot/potential.hpp"

namespace pdepot {

/// One-dimensional unconstrained online linear learner. predict() gives
/// x_t for the current round; update() feeds the observed gradient and
/// advances the round. Gradients with |g| > 1 are rejected, not clipped.
class Learner1d {
 public:
  virtual ~Learner1d() = default;
  virtual double predict() = 0;
  virtual void update(double g) = 0;
  virtual bool overflowed() const { return false; }
  /// Current round, 1-based.
  virtual int round() const = 0;
};

/// Potential-driven learner: x_t is the betting-policy bet at the
/// sufficient statistic S = -sum of gradients.
class PotentialLearner1d final : public Learner1d {
 public:
  explicit PotentialLearner1d(Potential potential)
      : potential_(std::move(potential)) {}

  double predict() override;
  void update(double g) override;
  bool overflowed() const override { return overflowed_; }
  int round() const override { return t_; }

  double state_S() const { return S_; }
  const Potential& potential() const { return potential_; }

 private:
  Potential potential_;
  int t_ = 1;
  double S_ = 0.0;  // minus the gradient sum
  bool overflowed_ = false;
};

/// Krichevsky-Trofimov baseline: x_t = (-sum_{i<t} g_i / t) * wealth_term,
/// wealth_term = eps - sum_{i<t} g_i x_i.
class KtLearner final : public Learner1d {
 public:
  explicit KtLearner(double eps);

  double predict() override;
  void update(double g) override;
  int round() const override { return t_; }

  double eps() const { return eps_; }
  double grad_sum() const { return grad_sum_; }
  double wealth_term() const { return wealth_term_; }

 private:
  double eps_;
  int t_ = 1;
  double grad_sum_ = 0.0;
  double wealth_term_;
  double last_x_ = 0.0;
};

/// One projected-gradient step on the unit ball with eta_t = 1/sqrt(t):
/// project(z - g/sqrt(t)). Requires ||g|| <= 1, ||z|| <= 1, t >= 1.
std::vector<double> ogd_ball_step(const std::vector<double>& z,
                                  const std::vector<double>& g, int t);

/// Direction learner: unit-ball OGD started at the origin.
class OgdBall {
 public:
  explicit OgdBall(int dimension);

  const std::vector<double>& direction() const { return z_; }
  void update(const std::vector<double>& g);
  int round() const { return t_; }

 private:
  std::vector<double> z_;
  int t_ = 1;
};

/// Polar reduction: x_t = y_t z_t with y_t from a scalar magnitude learner
/// and z_t from unit-ball OGD. The magnitude learner sees <g_t, z_t>.
class ReducedLearner {
 public:
  ReducedLearner(std::unique_ptr<Learner1d> magnitude, int dimension);

  std::vector<double> predict();
  void update(const std::vector<double>& g);
  bool overflowed() const { return magnitude_->overflowed(); }
  int dimension() const { return static_cast<int>(direction_.direction().size()); }
  int round() const { return magnitude_->round(); }

  const Learner1d& magnitude() const { return *magnitude_; }
  const std::vector<double>& direction() const { return direction_.direction(); }

 private:
  std::unique_ptr<Learner1d> magnitude_;
  OgdBall direction_;
};

/// Exact regret accounting via the affine identity
/// regret(u) = cumulative_loss - <gradient_sum, u>, so one run prices
/// regret at every comparator.
class RegretLedger {
 public:
  explicit RegretLedger(int dimension = 1);

  void record(const std::vector<double>& x, const std::vector<double>& g);
  void record(double x, double g);

  double cumulative_loss() const { return cumulative_loss_; }
  const std::vector<double>& gradient_sum() const { return gradient_sum_; }
  const std::vector<std::vector<double>>& predictions() const {
    return predictions_;
  }
  int rounds() const { return static_cast<int>(predictions_.size()); }

  double regret(const std::vector<double>& u) const;
  double regret(double u) const;

 private:
  double cumulative_loss_ = 0.0;
  std::vector<double> gradient_sum_;
  std::vector<std::vector<double>> predictions_;
};

/// C sqrt(T) + u sqrt(2T) [sqrt(log(1 + u/(sqrt(2) C))) + 2].
double bound_thm41(double C, double T, double u_norm);

/// C sqrt(e) + u sqrt(2T) [sqrt(log(1 + u T / C)) + 1].
double bound_thmC2(double C, double T, double u_norm);

/// fenchel_conjugate of the given Erfi potential at (T, u_norm);
/// always <= bound_thm41 with the same C.
double bound_corC4(const Potential& erfi_potential, double T, double u_norm);

/// Additive gap between the conjugate upper bound and the achievable
/// wealth: (3C/8) e^{s^2/(2T)} (s^2/T + 1) + 2C with
/// s = sqrt(2T) [sqrt(log(1 + u/(sqrt(2) C))) + 1].
/// Requires 0 <= u_norm <= (3/8) C (T+3) e^{T/2}.
double bound_thmC6_gap(double C, double T, double u_norm);

/// eps + |u| sqrt(T log(1 + 24 u^2 T^2 / eps^2)).
double bound_kt(double eps, double T, double u);

/// Leading-constant diagnostic: bound_thm41(C,T,U) / (U sqrt(T log U))
/// expanded analytically so T cancels,
/// sqrt(2) sqrt(log(1 + U/(sqrt(2) C)) / log U) + 2/sqrt(log U)
/// + C/(U sqrt(log U)). Tends to sqrt(2) as U grows. Requires U > 1.
double leading_ratio(double C, double U, double T);

/// Learner factory configuration; eps defaults to sqrt(e) * C when NaN.
struct LearnerConfig {
  std::string algorithm;  // erfi | exp | ogd-potential | linear | kt
  double C = 1.0;
  double eps = std::numeric_limits<double>::quiet_NaN();
  int dimension = 1;
};

std::unique_ptr<Learner1d> make_learner_1d(const LearnerConfig& config);
ReducedLearner make_reduced_learner(const LearnerConfig& config);

}  // namespace pdepot
