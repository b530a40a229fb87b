#include "pdepot/olo.hpp"

#include <cmath>
#include <stdexcept>

namespace pdepot {
namespace {

void check_gradient(double g) {
  if (!(std::fabs(g) <= 1.0)) {
    throw std::invalid_argument("gradient magnitude must be <= 1");
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void check_gradient(const std::vector<double>& g) {
  if (!(norm2(g) <= 1.0 + 1e-12)) {
    throw std::invalid_argument("gradient norm must be <= 1");
  }
}

}  // namespace

double PotentialLearner1d::predict() {
  const BetResult r = player_bet(potential_, t_, S_);
  overflowed_ = overflowed_ || r.saturated;
  return r.bet;
}

void PotentialLearner1d::update(double g) {
  check_gradient(g);
  S_ -= g;
  ++t_;
}

KtLearner::KtLearner(double eps) : eps_(eps), wealth_term_(eps) {
  if (!(eps > 0)) throw std::invalid_argument("KtLearner: eps must be > 0");
}

double KtLearner::predict() {
  last_x_ = (-grad_sum_ / t_) * wealth_term_;
  return last_x_;
}

void KtLearner::update(double g) {
  check_gradient(g);
  grad_sum_ += g;
  wealth_term_ -= g * last_x_;
  ++t_;
}

std::vector<double> ogd_ball_step(const std::vector<double>& z,
                                  const std::vector<double>& g, int t) {
  if (t < 1) throw std::domain_error("ogd_ball_step: t must be >= 1");
  if (z.size() != g.size()) {
    throw std::invalid_argument("ogd_ball_step: dimension mismatch");
  }
  check_gradient(g);
  const double eta = 1.0 / std::sqrt(static_cast<double>(t));
  std::vector<double> next(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) next[i] = z[i] - eta * g[i];
  const double n = norm2(next);
  if (n > 1.0) {
    for (double& x : next) x /= n;
  }
  return next;
}

OgdBall::OgdBall(int dimension) {
  if (dimension < 1) throw std::invalid_argument("OgdBall: dimension must be >= 1");
  z_.assign(static_cast<std::size_t>(dimension), 0.0);
}

void OgdBall::update(const std::vector<double>& g) {
  z_ = ogd_ball_step(z_, g, t_);
  ++t_;
}

ReducedLearner::ReducedLearner(std::unique_ptr<Learner1d> magnitude,
                               int dimension)
    : magnitude_(std::move(magnitude)), direction_(dimension) {
  if (!magnitude_) throw std::invalid_argument("ReducedLearner: null magnitude");
}

std::vector<double> ReducedLearner::predict() {
  const double y = magnitude_->predict();
  std::vector<double> x = direction_.direction();
  for (double& v : x) v *= y;
  return x;
}

void ReducedLearner::update(const std::vector<double>& g) {
  check_gradient(g);
  const std::vector<double>& z = direction_.direction();
  if (g.size() != z.size()) {
    throw std::invalid_argument("ReducedLearner: dimension mismatch");
  }
  double inner = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) inner += g[i] * z[i];
  magnitude_->update(inner);
  direction_.update(g);
}

RegretLedger::RegretLedger(int dimension) {
  if (dimension < 1) throw std::invalid_argument("RegretLedger: dimension must be >= 1");
  gradient_sum_.assign(static_cast<std::size_t>(dimension), 0.0);
}

void RegretLedger::record(const std::vector<double>& x,
                          const std::vector<double>& g) {
  if (x.size() != gradient_sum_.size() || g.size() != gradient_sum_.size()) {
    throw std::invalid_argument("RegretLedger: dimension mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    cumulative_loss_ += g[i] * x[i];
    gradient_sum_[i] += g[i];
  }
  predictions_.push_back(x);
}

void RegretLedger::record(double x, double g) {
  record(std::vector<double>{x}, std::vector<double>{g});
}

double RegretLedger::regret(const std::vector<double>& u) const {
  if (u.size() != gradient_sum_.size()) {
    throw std::invalid_argument("RegretLedger: dimension mismatch");
  }
  double inner = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) inner += gradient_sum_[i] * u[i];
  return cumulative_loss_ - inner;
}

double RegretLedger::regret(double u) const {
  return regret(std::vector<double>{u});
}

double bound_thm41(double C, double T, double u_norm) {
  if (!(C > 0) || !(T >= 1) || !(u_norm >= 0)) {
    throw std::domain_error("bound_thm41: need C > 0, T >= 1, u_norm >= 0");
  }
  return C * std::sqrt(T) +
         u_norm * std::sqrt(2.0 * T) *
             (std::sqrt(std::log1p(u_norm / (std::sqrt(2.0) * C))) + 2.0);
}

double bound_thmC2(double C, double T, double u_norm) {
  if (!(C > 0) || !(T >= 1) || !(u_norm >= 0)) {
    throw std::domain_error("bound_thmC2: need C > 0, T >= 1, u_norm >= 0");
  }
  return C * std::sqrt(M_E) +
         u_norm * std::sqrt(2.0 * T) *
             (std::sqrt(std::log1p(u_norm * T / C)) + 1.0);
}

double bound_corC4(const Potential& erfi_potential, double T, double u_norm) {
  if (erfi_potential.kind() != Potential::Kind::Erfi) {
    throw std::invalid_argument("bound_corC4: potential must be Erfi kind");
  }
  return fenchel_conjugate(erfi_potential, T, u_norm);
}

double bound_thmC6_gap(double C, double T, double u_norm) {
  if (!(C > 0) || !(T >= 1)) {
    throw std::domain_error("bound_thmC6_gap: need C > 0, T >= 1");
  }
  if (!(u_norm >= 0) ||
      u_norm > (3.0 / 8.0) * C * (T + 3.0) * std::exp(T / 2.0)) {
    throw std::domain_error(
        "bound_thmC6_gap: u_norm outside [0, (3/8) C (T+3) e^{T/2}]");
  }
  const double s = std::sqrt(2.0 * T) *
                   (std::sqrt(std::log1p(u_norm / (std::sqrt(2.0) * C))) + 1.0);
  const double s2t = s * s / T;
  return (3.0 * C / 8.0) * std::exp(s2t / 2.0) * (s2t + 1.0) + 2.0 * C;
}

double bound_kt(double eps, double T, double u) {
  if (!(eps > 0) || !(T >= 1)) {
    throw std::domain_error("bound_kt: need eps > 0, T >= 1");
  }
  const double a = std::fabs(u);
  return eps + a * std::sqrt(T * std::log1p(24.0 * a * a * T * T /
                                            (eps * eps)));
}

double leading_ratio(double C, double U, double T) {
  if (!(C > 0) || !(U > 1) || !(T >= 1)) {
    throw std::domain_error("leading_ratio: need C > 0, U > 1, T >= 1");
  }
  const double logU = std::log(U);
  return std::sqrt(2.0) *
             std::sqrt(std::log1p(U / (std::sqrt(2.0) * C)) / logU) +
         2.0 / std::sqrt(logU) + C / (U * std::sqrt(logU));
}

std::unique_ptr<Learner1d> make_learner_1d(const LearnerConfig& config) {
  const double eps =
      std::isnan(config.eps) ? std::sqrt(M_E) * config.C : config.eps;
  if (config.algorithm == "erfi") {
    return std::make_unique<PotentialLearner1d>(Potential::erfi(config.C));
  }
  if (config.algorithm == "exp") {
    return std::make_unique<PotentialLearner1d>(Potential::exponential(config.C));
  }
  if (config.algorithm == "ogd-potential") {
    return std::make_unique<PotentialLearner1d>(Potential::ogd(config.C));
  }
  if (config.algorithm == "linear") {
    return std::make_unique<PotentialLearner1d>(Potential::linear(config.C));
  }
  if (config.algorithm == "kt") {
    return std::make_unique<KtLearner>(eps);
  }
  throw std::invalid_argument("make_learner_1d: unknown algorithm '" +
                              config.algorithm + "'");
}

ReducedLearner make_reduced_learner(const LearnerConfig& config) {
  return ReducedLearner(make_learner_1d(config), config.dimension);
}

}  // namespace pdepot
