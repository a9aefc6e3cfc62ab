#include "pulseforge/types.hpp"

#include <cmath>

namespace pulseforge {

double to_angular(double value, Unit unit) {
  return unit == Unit::Cyclic ? value * kTwoPi : value;
}

double from_angular(double value, Unit unit) {
  return unit == Unit::Cyclic ? value / kTwoPi : value;
}

Unit parse_unit(const std::string& s) {
  if (s == "angular") return Unit::Angular;
  if (s == "cyclic") return Unit::Cyclic;
  throw ValidationError("unknown unit tag '" + s + "' (expected angular|cyclic)");
}

SystemParams validate(SystemParams raw, Unit unit) {
  SystemParams p;
  p.omega_r = to_angular(raw.omega_r, unit);
  p.kappa = to_angular(raw.kappa, unit);
  if (!std::isfinite(p.omega_r)) throw ValidationError("omega_r must be finite");
  if (!(p.kappa > 0.0) || !std::isfinite(p.kappa)) {
    throw ValidationError("kappa must be positive and finite");
  }
  return p;
}

DispersiveParams validate(DispersiveParams raw, Unit unit) {
  DispersiveParams p;
  p.omega_r = to_angular(raw.omega_r, unit);
  p.omega_q = to_angular(raw.omega_q, unit);
  p.g = to_angular(raw.g, unit);
  p.kappa = to_angular(raw.kappa, unit);
  if (!std::isfinite(p.omega_r) || !std::isfinite(p.omega_q)) {
    throw ValidationError("frequencies must be finite");
  }
  if (!(p.kappa > 0.0)) throw ValidationError("kappa must be positive");
  const double delta = p.omega_q - p.omega_r;
  if (delta == 0.0) {
    throw ValidationError("omega_q must differ from omega_r (chi is singular)");
  }
  if (p.g == 0.0) throw ValidationError("coupling g must be nonzero");
  p.chi = p.g * p.g / delta;
  p.n_crit = delta * delta / (4.0 * p.g * p.g);
  return p;
}

}  // namespace pulseforge
