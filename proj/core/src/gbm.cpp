#include "qlangevin/gbm.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qlangevin/errors.hpp"

namespace qlangevin {

ComplexMatrix GBMSystem::mean_generator() const {
  ComplexMatrix g = drift;
  for (const auto& d : noise) {
    g += 2.0 * alpha * (d * d);
  }
  return g;
}

void GBMSystem::validate() const {
  require_square(drift, "GBMSystem drift");
  for (const auto& d : noise) {
    require_same_shape(drift, d, "GBMSystem noise");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("GBMSystem: alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

ComplexVector mean_ode_solution(const GBMSystem& sys, const ComplexVector& y0, double t) {
  sys.validate();
  if (y0.size() != sys.drift.rows()) {
    throw DimensionError("mean_ode_solution: y0 does not match the system");
  }
  if (!(t >= 0.0)) {
    throw ParameterError("mean_ode_solution: t must be non-negative");
  }
  return expm(sys.mean_generator() * t) * y0;
}

TrajectoryStatistics simulate_trajectories(const GBMSystem& sys, const ComplexVector& y0,
                                           double dt, std::size_t steps, std::size_t n_traj,
                                           std::uint64_t seed) {
  sys.validate();
  if (y0.size() != sys.drift.rows()) {
    throw DimensionError("simulate_trajectories: y0 does not match the system");
  }
  if (!(dt > 0.0)) {
    throw ParameterError("simulate_trajectories: dt must be positive");
  }
  if (n_traj < 1) {
    throw ParameterError("simulate_trajectories: need at least one trajectory");
  }

  const Eigen::Index dim = y0.size();
  const ComplexMatrix step_drift = sys.mean_generator() * dt;
  const double sigma = std::sqrt(2.0 * dt);

  // Welford accumulators per (step, component), real and imaginary apart.
  std::vector<ComplexVector> mean(steps + 1, ComplexVector::Zero(dim));
  std::vector<RealVector> m2_re(steps + 1, RealVector::Zero(dim));
  std::vector<RealVector> m2_im(steps + 1, RealVector::Zero(dim));

  for (std::size_t k = 0; k < n_traj; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, sigma);
    const double count = static_cast<double>(k + 1);

    ComplexVector y = y0;
    for (std::size_t s = 0; s <= steps; ++s) {
      if (s > 0) {
        ComplexVector dy = step_drift * y;
        for (const auto& d : sys.noise) {
          dy += gauss(rng) * (d * y);
        }
        y += dy;
      }
      const ComplexVector delta = y - mean[s];
      mean[s] += delta / count;
      const ComplexVector delta2 = y - mean[s];
      m2_re[s] += delta.real().cwiseProduct(delta2.real());
      m2_im[s] += delta.imag().cwiseProduct(delta2.imag());
    }
  }

  TrajectoryStatistics out;
  out.n_traj = n_traj;
  out.times.resize(steps + 1);
  out.std_error.resize(steps + 1);
  const double nt = static_cast<double>(n_traj);
  const double denom = n_traj > 1 ? nt * (nt - 1.0) : 1.0;
  for (std::size_t s = 0; s <= steps; ++s) {
    out.times[s] = static_cast<double>(s) * dt;
    ComplexVector se(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
      se(c) = Complex(std::sqrt(m2_re[s](c) / denom), std::sqrt(m2_im[s](c) / denom));
    }
    out.std_error[s] = se;
  }
  out.mean = std::move(mean);
  return out;
}

RealMatrix decomplexify(const ComplexMatrix& a) {
  require_square(a, "decomplexify");
  const Eigen::Index n = a.rows();
  RealMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = a.real();
  out.topRightCorner(n, n) = -a.imag();
  out.bottomLeftCorner(n, n) = a.imag();
  out.bottomRightCorner(n, n) = a.real();
  return out;
}

NormDecay norm_decay_demo(const ComplexMatrix& h0, const std::vector<ComplexMatrix>& a,
                          double alpha, const ComplexVector& psi0,
                          const std::vector<double>& t_grid, double hbar) {
  require_hermitian(h0, "norm_decay_demo H0");
  for (const auto& ak : a) {
    require_same_shape(h0, ak, "norm_decay_demo");
    require_hermitian(ak, "norm_decay_demo A_k");
  }
  if (psi0.size() != h0.rows()) {
    throw DimensionError("norm_decay_demo: psi0 does not match H0");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(hbar > 0.0)) {
    throw ParameterError("norm_decay_demo: need alpha in [0, 1] and hbar > 0");
  }

  ComplexMatrix g = h0 / Complex(0.0, hbar);
  for (const auto& ak : a) {
    g -= (2.0 * alpha / (hbar * hbar)) * (ak * ak);
  }

  NormDecay out;
  for (double t : t_grid) {
    if (!(t >= 0.0)) {
      throw ParameterError("norm_decay_demo: times must be non-negative");
    }
    const ComplexVector psi = expm(g * t) * psi0;
    double rate = 0.0;
    for (const auto& ak : a) {
      rate += (ak * psi).squaredNorm();
    }
    out.times.push_back(t);
    out.norms.push_back(psi.squaredNorm());
    out.rates.push_back(-4.0 * alpha / (hbar * hbar) * rate);
    out.derivatives.push_back(2.0 * psi.dot(g * psi).real());
  }
  return out;
}

}  // namespace qlangevin
