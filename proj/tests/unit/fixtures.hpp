#pragma once

// The two shipped parameter sets and the pipeline built from them.

#include <cmath>
#include <numbers>

#include "qlangevin/evolution.hpp"
#include "qlangevin/friction.hpp"
#include "qlangevin/liouvillian.hpp"
#include "qlangevin/models.hpp"
#include "qlangevin/thermo.hpp"

namespace qlangevin::gen {

inline SystemModel oscillator16() { return build_oscillator(16, 1.0, 1.0, 1.0); }
inline SystemModel well15() { return build_well(15, 3.0, 2.0, 1.0); }
inline BathParams oscillator_bath(Variant v = Variant::proposed) {
  return BathParams(1.0, 0.3, 1.0, 0.5, v);
}
inline BathParams well_bath(Variant v = Variant::proposed) {
  return BathParams(1.0, 1.0, 1.0, 0.5, v);
}
inline constexpr double kOscillatorDt = std::numbers::pi / 200.0;
inline constexpr double kWellDt = 0.007;

struct Pipeline {
  SystemModel model;
  BathParams bath;
  ComplexMatrix theta;
  Liouvillian l;
  ThermoEvaluator observer;

  Pipeline(SystemModel m, BathParams b, double force = 0.0)
      : model(m),
        bath(b),
        theta(friction_operator(m, b)),
        l(assemble(m, b, theta, force)),
        observer(m, b, l, theta, force) {}

  // Exact state at time t from rho0.
  ComplexMatrix state_at(const ComplexMatrix& rho0, double t) const {
    const auto n = rho0.rows();
    if (t == 0.0) {
      return rho0;
    }
    return unvectorize(expm(l.full * t) * vectorize(rho0), n, n);
  }
};

}  // namespace qlangevin::gen
