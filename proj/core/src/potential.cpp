#include "pdepot/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "pdepot/specfun.hpp"

namespace pdepot {
namespace {

void check_params(const PotentialParams& p) {
  if (!(p.C > 0)) throw std::invalid_argument("Potential: C must be > 0");
  if (!(p.tau >= 0)) throw std::invalid_argument("Potential: tau must be >= 0");
}

[[noreturn]] void anchor_violation() {
  throw std::domain_error(
      "Potential: t = 0 is defined only at the anchor point S = 0");
}

}  // namespace

Potential Potential::ogd(double C) {
  PotentialParams p;
  p.C = C;
  check_params(p);
  return Potential(Kind::Ogd, p);
}

Potential Potential::exponential(double C) {
  PotentialParams p;
  p.C = C;
  check_params(p);
  return Potential(Kind::Exp, p);
}

Potential Potential::erfi(double C) {
  PotentialParams p;
  p.C = C;
  check_params(p);
  return Potential(Kind::Erfi, p);
}

Potential Potential::linear(double C) {
  PotentialParams p;
  p.C = C;
  check_params(p);
  return Potential(Kind::Linear, p);
}

Potential Potential::combine(double a, const Potential& p1, double b,
                             const Potential& p2) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument(
        "Potential::combine: negative weights can break convexity in S");
  }
  Potential p(Kind::Combination, PotentialParams{});
  p.weight_a_ = a;
  p.weight_b_ = b;
  p.sub_a_ = std::make_shared<Potential>(p1);
  p.sub_b_ = std::make_shared<Potential>(p2);
  return p;
}

Potential Potential::shifted(double C0, double tau, double S0) const {
  if (!(tau >= 0)) throw std::invalid_argument("Potential: tau must be >= 0");
  Potential p = *this;
  p.params_.C0 += C0;
  p.params_.tau += tau;
  p.params_.S0 += S0;
  return p;
}

ScaledValue Potential::raw_scaled(double t, double S) const {
  const double C = params_.C;
  switch (kind_) {
    case Kind::Ogd:
      if (t < 0) throw std::domain_error("Potential: t must be >= 0");
      return ScaledValue::from_double(C * (S * S - t));
    case Kind::Linear:
      return ScaledValue::from_double(C * S);
    case Kind::Exp: {
      if (t < 0) throw std::domain_error("Potential: t must be >= 0");
      if (t == 0) {
        if (S == 0) return ScaledValue::zero();
        anchor_violation();
      }
      return ScaledValue::from_log(
          1, std::log(C) - 0.5 * std::log(t) + S * S / (2.0 * t));
    }
    case Kind::Erfi: {
      if (t < 0) throw std::domain_error("Potential: t must be >= 0");
      if (t == 0) {
        if (S == 0) return ScaledValue::zero();
        anchor_violation();
      }
      const double z = S / std::sqrt(2.0 * t);
      const ScaledValue de2m1 =
          2.0 * specfun::double_exp_integral_scaled(z) -
          ScaledValue::from_double(1.0);
      return ScaledValue::from_double(C * std::sqrt(t)) * de2m1;
    }
    case Kind::Combination: {
      ScaledValue v = ScaledValue::zero();
      if (weight_a_ != 0) v = v + weight_a_ * sub_a_->value_scaled(t, S);
      if (weight_b_ != 0) v = v + weight_b_ * sub_b_->value_scaled(t, S);
      return v;
    }
  }
  throw std::logic_error("Potential: unknown kind");
}

ScaledValue Potential::value_scaled(double t, double S) const {
  const ScaledValue raw = raw_scaled(t + params_.tau, S + params_.S0);
  if (params_.C0 == 0) return raw;
  return ScaledValue::from_double(params_.C0) + raw;
}

double Potential::value(double t, double S) const {
  // Polynomial kinds stay in plain arithmetic so exact identities (the
  // quadratic game recursion, zero perturbation) hold bit-for-bit.
  const double te = t + params_.tau;
  const double Se = S + params_.S0;
  switch (kind_) {
    case Kind::Ogd:
      if (te < 0) throw std::domain_error("Potential: t must be >= 0");
      return params_.C0 + params_.C * (Se * Se - te);
    case Kind::Linear:
      return params_.C0 + params_.C * Se;
    default:
      break;
  }
  const ScaledValue v = value_scaled(t, S);
  if (!v.fits_double()) {
    throw std::overflow_error("Potential::value: result exceeds double range");
  }
  return v.to_double();
}

ScaledValue Potential::space_derivative_scaled(double t, double S) const {
  const double te = t + params_.tau;
  const double Se = S + params_.S0;
  const double C = params_.C;
  switch (kind_) {
    case Kind::Ogd:
      return ScaledValue::from_double(2.0 * C * Se);
    case Kind::Linear:
      return ScaledValue::from_double(C);
    case Kind::Exp: {
      if (!(te > 0)) throw std::domain_error("Potential: t must be > 0");
      if (Se == 0) return ScaledValue::zero();
      return ScaledValue::from_log(
          Se > 0 ? 1 : -1, std::log(C) + std::log(std::fabs(Se)) -
                               1.5 * std::log(te) + Se * Se / (2.0 * te));
    }
    case Kind::Erfi: {
      if (!(te > 0)) throw std::domain_error("Potential: t must be > 0");
      const double z = Se / std::sqrt(2.0 * te);
      return std::sqrt(2.0) * C * specfun::exp_integral_scaled(z);
    }
    case Kind::Combination: {
      ScaledValue v = ScaledValue::zero();
      if (weight_a_ != 0) v = v + weight_a_ * sub_a_->space_derivative_scaled(t, S);
      if (weight_b_ != 0) v = v + weight_b_ * sub_b_->space_derivative_scaled(t, S);
      return v;
    }
  }
  throw std::logic_error("Potential: unknown kind");
}

Potential combine(double a, const Potential& p1, double b, const Potential& p2) {
  return Potential::combine(a, p1, b, p2);
}

Potential shift(const Potential& p, double C0, double tau, double S0) {
  return p.shifted(C0, tau, S0);
}

std::pair<double, double> discrete_derivatives(const Potential& p, double t,
                                               double S) {
  if (!(t >= 1)) throw std::domain_error("discrete_derivatives: t must be >= 1");
  const double here = p.value(t, S);
  const double dbar_t = here - p.value(t - 1, S);
  const double dbar_SS = p.value(t, S + 1) + p.value(t, S - 1) - 2.0 * here;
  return {dbar_t, dbar_SS};
}

double perturbation(const Potential& p, double t, double S) {
  if (!(t >= 1)) throw std::domain_error("perturbation: t must be >= 1");
  return 0.5 * p.value(t, S + 1) + 0.5 * p.value(t, S - 1) - p.value(t - 1, S);
}

double pde_residual(const Potential& p, double t, double S) {
  if (!(t > 0)) throw std::domain_error("pde_residual: t must be > 0");
  const double h_t = std::min(1e-4 * t, 1e-4);
  const double h_S = 1e-4;
  const double d_t = (p.value(t + h_t, S) - p.value(t - h_t, S)) / (2.0 * h_t);
  const double d_SS =
      (p.value(t, S + h_S) - 2.0 * p.value(t, S) + p.value(t, S - h_S)) /
      (h_S * h_S);
  return d_t + 0.5 * d_SS;
}

double hermite_residual(double alpha, const std::function<double(double)>& g,
                        double z) {
  const double h = 1e-4;
  const double gp = g(z + h);
  const double gm = g(z - h);
  const double g0 = g(z);
  const double d1 = (gp - gm) / (2.0 * h);
  const double d2 = (gp - 2.0 * g0 + gm) / (h * h);
  return d2 - 2.0 * z * d1 + 4.0 * alpha * g0;
}

Derivatives analytic_derivatives(const Potential& p, double t, double S) {
  const double te = t + p.params().tau;
  const double Se = S + p.params().S0;
  const double C = p.params().C;
  if (!(te > 0)) throw std::domain_error("analytic_derivatives: t must be > 0");
  Derivatives d;
  const double e = std::exp(Se * Se / (2.0 * te));
  switch (p.kind()) {
    case Potential::Kind::Erfi: {
      const double z = Se / std::sqrt(2.0 * te);
      d.d_S = std::sqrt(2.0) * C * specfun::exp_integral(z);
      d.d_SS = C / std::sqrt(te) * e;
      d.d_SSS = C * Se / std::pow(te, 1.5) * e;
      d.d_SSSS = C / std::pow(te, 1.5) * e * (Se * Se / te + 1.0);
      d.d_t = -C / (2.0 * std::sqrt(te)) * e;
      d.d_tt = C / (4.0 * std::pow(te, 1.5)) * e * (Se * Se / te + 1.0);
      return d;
    }
    case Potential::Kind::Exp: {
      const double s2t = Se * Se / te;
      d.d_S = C * Se / std::pow(te, 1.5) * e;
      d.d_SS = C / std::pow(te, 1.5) * e * (s2t + 1.0);
      d.d_SSS = C / std::pow(te, 1.5) * e * (Se * s2t / te + 3.0 * Se / te);
      d.d_SSSS =
          C / std::pow(te, 2.5) * e * (s2t * s2t + 6.0 * s2t + 3.0);
      d.d_t = -C / (2.0 * std::pow(te, 1.5)) * e * (s2t + 1.0);
      d.d_tt =
          C / (4.0 * std::pow(te, 2.5)) * e * (s2t * s2t + 6.0 * s2t + 3.0);
      return d;
    }
    default:
      throw std::invalid_argument(
          "analytic_derivatives: closed forms available for Exp and Erfi only");
  }
}

double fenchel_conjugate(const Potential& p, double T, double w) {
  if (!std::isfinite(w)) throw std::domain_error("fenchel_conjugate: w must be finite");
  const ScaledValue target = ScaledValue::from_double(w);
  const auto deriv = [&](double S) { return p.space_derivative_scaled(T, S); };

  // Bracket from the conjugate proof's cap on the maximizer, expanded
  // geometrically if the derivative has not yet reached w.
  const double C = std::max(p.params().C, 1e-12);
  double hi = std::sqrt(2.0 * T) *
                  (std::sqrt(std::log1p(std::fabs(w) / (std::sqrt(2.0) * C))) +
                   1.0) +
              1.0;
  double lo = -hi;
  int expansions = 0;
  while (deriv(hi) < target) {
    hi *= 2.0;
    if (++expansions > 200 || !std::isfinite(hi)) {
      throw std::runtime_error("fenchel_conjugate: bracketing failed");
    }
  }
  expansions = 0;
  while (deriv(lo) > target) {
    lo *= 2.0;
    if (++expansions > 200 || !std::isfinite(lo)) {
      throw std::runtime_error("fenchel_conjugate: bracketing failed");
    }
  }

  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (deriv(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double S_star = 0.5 * (lo + hi);
  const ScaledValue result = ScaledValue::from_double(S_star * w) -
                             p.value_scaled(T, S_star);
  if (!result.fits_double()) {
    throw std::overflow_error("fenchel_conjugate: result exceeds double range");
  }
  return result.to_double();
}

}  // namespace pdepot
