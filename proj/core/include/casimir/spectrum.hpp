#pragma once

#include <optional>

#include "casimir/roundtrip.hpp"

namespace casimir {

/// Numerical knobs shared by the spectrum operations.
struct NumericsConfig {
    double rel_tol = 1e-8;
    std::optional<int> l_max_override;
    int quad_panels = 8;
    int matsubara_cap = 100000;
    double fit_stencil_h = 1e-2;
    int fit_degree = 5;

    void validate() const;
};

/// Hard cap on the multipole truncation order.
inline constexpr int kLMaxCap = 240;

struct EnergyResult {
    double value = 0.0;        ///< natural units, energies in 1/length
    double err_estimate = 0.0;
    int l_max_used = 0;
    long nodes_or_terms = 0;
    bool converged = false;
};

struct LowTempCoefficients {
    double n1 = 0.0;
    double n3 = 0.0;
    double fit_residual = 0.0;
    double stencil_h = 0.0;
};

/// Tr ln (1 - M) at dimensionless frequency x = xi L, summed over magnetic
/// numbers with weight 2 for m > 0. x = 0 routes to the closed-form
/// zero-frequency blocks. Truncation grows until consecutive even orders agree
/// to rel_tol.
double trace_log(const Geometry& geometry, const MaterialModel& model, double x,
                 const NumericsConfig& config);

/// Same with a pinned truncation order; used by the low-temperature fit where
/// the truncation must not change across the stencil. A positive m_tail_rel
/// stops the magnetic-number sum once a whole chunk of contributions falls
/// below m_tail_rel times the running sum; 0 keeps every m.
double trace_log_fixed(const Geometry& geometry, const MaterialModel& model,
                       double x, int l_max, double m_tail_rel = 0.0);

/// Zero-temperature Casimir energy by adaptive Gauss-Legendre quadrature over
/// the folded imaginary-frequency axis.
EnergyResult casimir_energy_T0(const Geometry& geometry, const MaterialModel& model,
                               const NumericsConfig& config);

/// Finite-temperature free energy as a Matsubara sum.
EnergyResult free_energy(const Geometry& geometry, const MaterialModel& model,
                         double T, const NumericsConfig& config);

/// Classical high-temperature coefficient F0 = (1/2) Tr ln (1 - M(0)).
double f0_classical(const Geometry& geometry, const MaterialModel& model,
                    const NumericsConfig& config);

/// Linear and cubic frequency coefficients of Tr ln (1 - M) at x -> 0,
/// extracted by polynomial fits on a two-level stencil with Richardson
/// combination. n1 vanishes for the electromagnetic field.
LowTempCoefficients low_temp_coefficients(const Geometry& geometry,
                                          const MaterialModel& model,
                                          const NumericsConfig& config);

/// T^4 correction to the Casimir energy built from the cubic coefficient.
/// Valid for T L << 1; *regime_warning (optional) is set when T L >= 0.1.
double low_temp_correction(const Geometry& geometry, const MaterialModel& model,
                           double T, const NumericsConfig& config,
                           bool* regime_warning = nullptr);

}  // namespace casimir
