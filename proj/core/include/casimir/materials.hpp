#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casimir/scaled.hpp"

namespace casimir {

enum class MaterialTag {
    PerfectConductor,
    PerfectMagnetic,
    ConstantEpsMu,
    PlasmaEps,
    PlasmaMu,
    PlasmaBoth,
};

/// Sphere response model. Plasma strengths are stored dimensionless,
/// Omega = omega * R, so that eps(z) = 1 + Omega^2/z^2 with z = xi R.
struct MaterialModel {
    MaterialTag tag = MaterialTag::PerfectConductor;
    double eps0 = 0.0;     ///< ConstantEpsMu, PlasmaMu
    double mu0 = 0.0;      ///< ConstantEpsMu, PlasmaEps
    double omega_p = 0.0;  ///< PlasmaEps, PlasmaBoth
    double omega_m = 0.0;  ///< PlasmaMu, PlasmaBoth

    static MaterialModel perfect_conductor();
    static MaterialModel perfect_magnetic();
    static MaterialModel constant(double eps, double mu);
    static MaterialModel plasma_eps(double Omega_p, double mu = 1.0);
    static MaterialModel plasma_mu(double Omega_m, double eps = 1.0);
    static MaterialModel plasma_both(double Omega_p, double Omega_m);

    /// Throws ModelParameterError when the active tag's fields are unset or
    /// out of range (eps, mu < 1 are rejected).
    void validate() const;

    std::string name() const;
    std::string params() const;
};

/// T-matrix diagonal of the sphere at imaginary frequency, one multipole order.
struct MieCoefficient {
    int l = 0;
    double z = 0.0;      ///< xi R
    ScaledValue te, tm;  ///< d_l^TE(z), d_l^TM(z)
};

MieCoefficient mie_coefficients(const MaterialModel& model, int l, double z);

/// All orders 1..l_max at once; first = TE, second = TM, index l-1.
std::pair<std::vector<ScaledValue>, std::vector<ScaledValue>>
mie_table(const MaterialModel& model, int l_max, double z);

/// Factors (fTE, fTM) multiplying the material-neutral zero-frequency matrix,
/// the exact xi -> 0 limits used by the classical (n = 0 Matsubara) term.
std::pair<double, double> zero_frequency_factors(const MaterialModel& model, int l);

}  // namespace casimir
