#include "pulseforge/pulse.hpp"

#include <algorithm>
#include <cmath>

namespace pulseforge {

namespace {

const Complex kI(0.0, 1.0);

Complex sampled_eval(const SampledPulse& p, double t) {
  const auto& ts = p.times;
  if (ts.empty()) throw ValidationError("sampled pulse has no nodes");
  if (t <= ts.front()) return p.values.front();
  if (t >= ts.back()) return p.values.back();
  const auto it = std::upper_bound(ts.begin(), ts.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - ts.begin());
  const std::size_t lo = hi - 1;
  const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
  return p.values[lo] + w * (p.values[hi] - p.values[lo]);
}

}  // namespace

Pulse::Pulse(Variant v) : v_(std::move(v)) {
  const double tf = duration();
  if (!(tf > 0.0)) throw ValidationError("pulse duration t_f must be positive");
  if (const auto* s = get_if<SampledPulse>()) {
    if (s->times.size() != s->values.size() || s->times.size() < 2) {
      throw ValidationError("sampled pulse needs matching time/value arrays");
    }
    for (std::size_t i = 1; i < s->times.size(); ++i) {
      if (!(s->times[i] > s->times[i - 1])) {
        throw ValidationError("sampled pulse times must be strictly increasing");
      }
    }
  }
}

double Pulse::duration() const {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CdPulse>) {
          return p.base->duration();
        } else if constexpr (std::is_same_v<T, SampledPulse>) {
          return p.times.empty() ? 0.0 : p.times.back();
        } else {
          return p.t_f;
        }
      },
      v_);
}

Complex Pulse::eval(double t) const {
  return std::visit(
      [t](const auto& p) -> Complex {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, EnergyOptimalPulse>) {
          const Complex lam(-0.5 * p.kappa, -p.rotation_rate);
          return p.coeff * std::exp(std::conj(lam) * (p.t_f - t));
        } else if constexpr (std::is_same_v<T, TimeOptimalPulse>) {
          return p.eps_max * std::exp(kI * (-p.rotation_rate * t + p.theta));
        } else if constexpr (std::is_same_v<T, HahnPulse>) {
          const double s = std::sin(0.5 * M_PI * t / p.t_f);
          return Complex(p.omega0 * s * s, 0.0);
        } else if constexpr (std::is_same_v<T, CdPulse>) {
          const Complex denom(0.5 * p.kappa, p.rotation_rate);
          return p.base->eval(t) + p.base->derivative(t) / denom;
        } else {
          return sampled_eval(p, t);
        }
      },
      v_);
}

Complex Pulse::derivative(double t) const {
  return std::visit(
      [t, this](const auto& p) -> Complex {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, EnergyOptimalPulse>) {
          const Complex lam(-0.5 * p.kappa, -p.rotation_rate);
          return -std::conj(lam) * eval(t);
        } else if constexpr (std::is_same_v<T, TimeOptimalPulse>) {
          return Complex(0.0, -p.rotation_rate) * eval(t);
        } else if constexpr (std::is_same_v<T, HahnPulse>) {
          const double u = M_PI * t / p.t_f;
          return Complex(p.omega0 * 0.5 * M_PI / p.t_f * std::sin(u), 0.0);
        } else if constexpr (std::is_same_v<T, CdPulse>) {
          // Central difference; CD pulses are smooth away from endpoints.
          const double tf = duration();
          const double h = tf * 1e-7;
          const double a = std::max(0.0, t - h), b = std::min(tf, t + h);
          return (eval(b) - eval(a)) / (b - a);
        } else {
          const double tf = duration();
          const double h = tf * 1e-6;
          const double a = std::max(0.0, t - h), b = std::min(tf, t + h);
          return (eval(b) - eval(a)) / (b - a);
        }
      },
      v_);
}

bool Pulse::analytic() const {
  if (const auto* cd = get_if<CdPulse>()) return cd->base->analytic();
  return get_if<SampledPulse>() == nullptr;
}

std::vector<ExpTerm> Pulse::exp_terms() const {
  return std::visit(
      [](const auto& p) -> std::vector<ExpTerm> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, EnergyOptimalPulse>) {
          const Complex lam(-0.5 * p.kappa, -p.rotation_rate);
          const Complex lbar = std::conj(lam);
          return {{p.coeff * std::exp(lbar * p.t_f), -lbar}};
        } else if constexpr (std::is_same_v<T, TimeOptimalPulse>) {
          return {{p.eps_max * std::exp(kI * p.theta),
                   Complex(0.0, -p.rotation_rate)}};
        } else if constexpr (std::is_same_v<T, HahnPulse>) {
          // sin^2(pi t / 2 t_f) = 1/2 - (1/4) e^{i pi t/t_f} - (1/4) e^{-i pi t/t_f}
          const double nu = M_PI / p.t_f;
          return {{Complex(0.5 * p.omega0, 0.0), Complex(0.0, 0.0)},
                  {Complex(-0.25 * p.omega0, 0.0), Complex(0.0, nu)},
                  {Complex(-0.25 * p.omega0, 0.0), Complex(0.0, -nu)}};
        } else if constexpr (std::is_same_v<T, CdPulse>) {
          const Complex denom(0.5 * p.kappa, p.rotation_rate);
          auto terms = p.base->exp_terms();
          for (auto& term : terms) {
            term.coeff *= (1.0 + term.rate / denom);
          }
          return terms;
        } else {
          throw ValidationError("sampled pulses have no exponential-sum form");
        }
      },
      v_);
}

}  // namespace pulseforge
