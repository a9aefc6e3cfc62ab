#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "pulseforge/types.hpp"

namespace pulseforge {

class Pulse;

/// One term of an exponential-sum pulse representation, coeff * exp(rate*t).
/// Analytic variants expose this so responses and their time integrals can
/// be evaluated in closed form under any SystemMatrix.
struct ExpTerm {
  Complex coeff;
  Complex rate;
};

/// Minimum-energy steering pulse eps(t) = coeff * exp(conj(lambda)*(t_f - t))
/// for lambda = -(kappa/2 + i*rotation_rate).
struct EnergyOptimalPulse {
  Complex alpha0;
  Complex alpha_f;
  double t_f = 0.0;
  double rotation_rate = 0.0;
  double kappa = 0.0;
  Complex coeff;
};

/// Constant-modulus pulse eps(t) = eps_max * exp(i*(-rotation_rate*t + theta)).
struct TimeOptimalPulse {
  double eps_max = 0.0;
  double theta = 0.0;
  double rotation_rate = 0.0;
  double t_f = 0.0;
};

/// Real sinusoidal ramp eps(t) = omega0 * sin^2(pi*t/(2*t_f)).
struct HahnPulse {
  double omega0 = 0.0;
  double t_f = 0.0;
};

/// Counter-diabatic transform of a base pulse:
/// eps_cd(t) = eps(t) + eps'(t)/(kappa/2 + i*rotation_rate).
struct CdPulse {
  std::shared_ptr<const Pulse> base;
  double rotation_rate = 0.0;
  double kappa = 0.0;
};

/// Externally imported samples with linear interpolation.
struct SampledPulse {
  std::vector<double> times;
  std::vector<Complex> values;
};

/// Tagged analytic descriptor of a complex drive envelope, evaluable at any
/// t in [0, t_f]. Immutable after construction.
class Pulse {
 public:
  using Variant = std::variant<EnergyOptimalPulse, TimeOptimalPulse, HahnPulse,
                               CdPulse, SampledPulse>;

  explicit Pulse(Variant v);

  double duration() const;
  Complex eval(double t) const;
  Complex derivative(double t) const;

  /// True for all variants except Sampled.
  bool analytic() const;

  /// Exponential-sum representation; throws for Sampled.
  std::vector<ExpTerm> exp_terms() const;

  const Variant& variant() const { return v_; }

  template <typename T>
  const T* get_if() const { return std::get_if<T>(&v_); }

 private:
  Variant v_;
};

}  // namespace pulseforge
