#pragma once

#include <string>

#include "qlangevin/matrix.hpp"
#include "qlangevin/models.hpp"

namespace qlangevin {

enum class Variant { proposed, caldeira_leggett };

const char* to_string(Variant v);

// Bath parameters. The diffusion constant is derived, never stored.
class BathParams {
 public:
  BathParams(double temperature, double beta, double kb = 1.0, double alpha = 0.5,
             Variant variant = Variant::proposed);

  double temperature() const { return temperature_; }
  double beta() const { return beta_; }
  double kb() const { return kb_; }
  double alpha() const { return alpha_; }
  Variant variant() const { return variant_; }

  double kt() const { return kb_ * temperature_; }
  // D = kB T β / (2α)
  double diffusion() const { return kt() * beta_ / (2.0 * alpha_); }

  BathParams with_variant(Variant v) const;

 private:
  double temperature_;
  double beta_;
  double kb_;
  double alpha_;
  Variant variant_;
};

enum class ThetaRoute { energy_basis, lyapunov, quadrature, series };

const char* to_string(ThetaRoute r);

/// tanh(Δ)/Δ with the limit 1 at Δ = 0.
double friction_factor(double delta);

/// Θ_lj = p_lj · tanh(Δ_lj)/Δ_lj, Δ_lj = (E_l - E_j)/(2 kB T).
ComplexMatrix theta_energy_basis(const SystemModel& model, const BathParams& bath);

/// Solves Θe + eΘ = i(2 m kB T/ħ)[x, e] with e = exp(-H/kB T).
ComplexMatrix theta_lyapunov(const SystemModel& model, const BathParams& bath);

struct QuadratureConfig {
  double tolerance = 1e-8;  // absolute, per kernel evaluation
  double split = 1.0;       // η where the substitution η = e^{-u} ends
  double u_max = 40.0;      // upper limit in u on (0, split)
  double eta_max = 14.0;    // ln coth(π η/2) ~ 2e^{-πη} is negligible beyond
  unsigned max_depth = 20;
};

/// (4/π) ∫₀^∞ cos(ω η) ln coth(π η/2) dη. Equals tanh(ω/2)/(ω/2).
/// Throws AccuracyError when the error estimate exceeds the tolerance.
double quadrature_kernel(double omega, const QuadratureConfig& quad = {});

/// (2/π) ∫_{-∞}^{∞} ln coth(π|η|/2) dη, which is 1.
double log_coth_weight_integral(const QuadratureConfig& quad = {});

ComplexMatrix theta_quadrature(const SystemModel& model, const BathParams& bath,
                               const QuadratureConfig& quad = {});

struct SeriesResult {
  ComplexMatrix theta;
  bool divergent = false;
  double max_ratio = 0.0;  // max |ΔE|/(2 kB T) over coupled pairs
};

inline constexpr unsigned kMaxSeriesOrder = 14;

/// Partial sum of the Bernoulli expansion in nested commutators [H, ·]^{2n} p.
/// Orders above kMaxSeriesOrder throw ParameterError. The result is
/// flagged divergent when max_ratio ≥ π/2.
SeriesResult theta_series(const SystemModel& model, const BathParams& bath, unsigned order);

/// Bernoulli number B_k (B_1 = +1/2) for k ≤ 30, exact rational rounded to double.
double bernoulli_number(unsigned k);
/// Same, as "num/den".
std::string bernoulli_fraction(unsigned k);

/// Θ_ab = i(2 m kB T/ħ) x_ab tanh((E_a - E_b)/(2 kB T)). Valid on a
/// degenerate spectrum too, where it gives zero inside each degenerate block.
ComplexMatrix theta_position_form(const SystemModel& model, const BathParams& bath);

/// Θ for the bath variant: the selected route for `proposed`, p itself for
/// `caldeira_leggett`.
ComplexMatrix friction_operator(const SystemModel& model, const BathParams& bath,
                                ThetaRoute route = ThetaRoute::energy_basis,
                                unsigned series_order = 6);

/// max |Θρ + ρΘ - i(2 m kB T/ħ)[x, ρ]| at ρ = exp(-H/kB T)/Z.
double stationarity_residual(const SystemModel& model, const BathParams& bath,
                             const ComplexMatrix& theta);

}  // namespace qlangevin
