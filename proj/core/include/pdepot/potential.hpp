#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "pdepot/scaled_value.hpp"

namespace pdepot {

/// Scale constant plus the shifting constants C0, tau, S0. A shifted
/// potential evaluates C0 + base(t + tau, S + S0), which stays a solution
/// of the backward heat equation.
struct PotentialParams {
  double C = 1.0;    // scale, > 0
  double C0 = 0.0;   // value shift
  double tau = 0.0;  // time shift, >= 0
  double S0 = 0.0;   // space shift
};

/// Closed-form partial derivatives of a potential at a point.
struct Derivatives {
  double d_t = 0, d_tt = 0;
  double d_S = 0, d_SS = 0, d_SSS = 0, d_SSSS = 0;
};

/// A solution of the 1-D backward heat equation d_t V = -1/2 d_SS V,
/// used as a coin-betting potential. Immutable after construction.
///
/// The domain is t > 0 plus the single anchor point V(0,0) = 0; evaluating
/// Exp/Erfi at t = 0 with S != 0 throws std::domain_error.
class Potential {
 public:
  enum class Kind { Ogd, Exp, Erfi, Linear, Combination };

  /// V(t,S) = C (S^2 - t). An exact value function of the discrete game.
  static Potential ogd(double C);
  /// V(t,S) = C t^{-1/2} e^{S^2 / (2t)}.
  static Potential exponential(double C);
  /// V(t,S) = C sqrt(t) [2 int_0^{S/sqrt(2t)} int_0^u e^{x^2} dx du - 1].
  static Potential erfi(double C);
  /// V(t,S) = C S.
  static Potential linear(double C);
  /// a * p1 + b * p2. Requires a, b >= 0 (a negative weight can break the
  /// convexity in S the betting policies rely on).
  static Potential combine(double a, const Potential& p1, double b,
                           const Potential& p2);

  /// C0 + this(t + tau, S + S0); shifts compose additively.
  Potential shifted(double C0, double tau, double S0) const;

  Kind kind() const { return kind_; }
  const PotentialParams& params() const { return params_; }

  double value(double t, double S) const;
  ScaledValue value_scaled(double t, double S) const;

  /// Analytic d/dS, monotone in S for the convex potentials; overflow-safe.
  ScaledValue space_derivative_scaled(double t, double S) const;

  // Combination accessors (only valid when kind() == Combination).
  double weight_a() const { return weight_a_; }
  double weight_b() const { return weight_b_; }
  const Potential& sub_a() const { return *sub_a_; }
  const Potential& sub_b() const { return *sub_b_; }

 private:
  Potential(Kind kind, PotentialParams params) : kind_(kind), params_(params) {}

  ScaledValue raw_scaled(double t, double S) const;  // before C0/tau/S0

  Kind kind_;
  PotentialParams params_;
  double weight_a_ = 0, weight_b_ = 0;
  std::shared_ptr<const Potential> sub_a_, sub_b_;
};

/// Convenience alias matching Potential::combine.
Potential combine(double a, const Potential& p1, double b, const Potential& p2);
Potential shift(const Potential& p, double C0, double tau, double S0);

/// Discrete derivatives: (V(t,S) - V(t-1,S), V(t,S+1) + V(t,S-1) - 2 V(t,S)).
/// Requires t >= 1; t = 1 touches the t = 0 anchor.
std::pair<double, double> discrete_derivatives(const Potential& p, double t,
                                               double S);

/// The discrete residual dbar_t + dbar_SS / 2, evaluated directly as
/// 1/2 V(t,S+1) + 1/2 V(t,S-1) - V(t-1,S).
double perturbation(const Potential& p, double t, double S);

/// Central finite-difference residual of the backward heat equation,
/// d_t V + 1/2 d_SS V. Near zero for exact solutions.
double pde_residual(const Potential& p, double t, double S);

/// Central finite-difference residual of g'' - 2 z g' + 4 alpha g.
double hermite_residual(double alpha, const std::function<double(double)>& g,
                        double z);

/// Closed-form derivative table; Exp and Erfi kinds only.
Derivatives analytic_derivatives(const Potential& p, double t, double S);

/// sup_S [S w - p(T, S)], solved by safeguarded bisection on the monotone
/// analytic space derivative. Throws std::runtime_error on non-convergence.
double fenchel_conjugate(const Potential& p, double T, double w);

}  // namespace pdepot
