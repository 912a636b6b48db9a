#include "casimir/materials.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

namespace {

constexpr double kTwoOverPi = 2.0 / 3.14159265358979323846;

void check_ge_one(double v, const char* what) {
    if (!(v >= 1.0))
        throw ModelParameterError(std::string(what) + " must be >= 1");
}

void check_positive(double v, const char* what) {
    if (!(v > 0.0))
        throw ModelParameterError(std::string(what) + " must be > 0");
}

// eps(z), mu(z) for the four dielectric models at imaginary frequency z = xi R.
std::pair<double, double> response_at(const MaterialModel& model, double z) {
    switch (model.tag) {
        case MaterialTag::ConstantEpsMu:
            return {model.eps0, model.mu0};
        case MaterialTag::PlasmaEps:
            return {1.0 + model.omega_p * model.omega_p / (z * z), model.mu0};
        case MaterialTag::PlasmaMu:
            return {model.eps0, 1.0 + model.omega_m * model.omega_m / (z * z)};
        case MaterialTag::PlasmaBoth:
            return {1.0 + model.omega_p * model.omega_p / (z * z),
                    1.0 + model.omega_m * model.omega_m / (z * z)};
        default:
            throw ModelParameterError("response_at: not a dielectric model");
    }
}

// Riccati ratio of the plasma zero-frequency factor:
// [a s'(a) - b (l+1) s(a)] / [a s'(a) + b l s(a)]  with a = Omega*b, b = sqrt(c0).
double plasma_zero_ratio(double Omega, double c0, int l) {
    const double b = std::sqrt(c0);
    const double a = Omega * b;
    const RiccatiPair rp = riccati_pair(l, a);
    const double ratio = (rp.s_prime / rp.s).to_double();  // s'(a)/s(a), order 1
    return (Omega * ratio - b * (l + 1)) / (Omega * ratio + b * l);
}

}  // namespace

MaterialModel MaterialModel::perfect_conductor() {
    return {MaterialTag::PerfectConductor};
}
MaterialModel MaterialModel::perfect_magnetic() {
    return {MaterialTag::PerfectMagnetic};
}
MaterialModel MaterialModel::constant(double eps, double mu) {
    MaterialModel m{MaterialTag::ConstantEpsMu};
    m.eps0 = eps;
    m.mu0 = mu;
    m.validate();
    return m;
}
MaterialModel MaterialModel::plasma_eps(double Omega_p, double mu) {
    MaterialModel m{MaterialTag::PlasmaEps};
    m.omega_p = Omega_p;
    m.mu0 = mu;
    m.validate();
    return m;
}
MaterialModel MaterialModel::plasma_mu(double Omega_m, double eps) {
    MaterialModel m{MaterialTag::PlasmaMu};
    m.omega_m = Omega_m;
    m.eps0 = eps;
    m.validate();
    return m;
}
MaterialModel MaterialModel::plasma_both(double Omega_p, double Omega_m) {
    MaterialModel m{MaterialTag::PlasmaBoth};
    m.omega_p = Omega_p;
    m.omega_m = Omega_m;
    m.validate();
    return m;
}

void MaterialModel::validate() const {
    switch (tag) {
        case MaterialTag::PerfectConductor:
        case MaterialTag::PerfectMagnetic:
            return;
        case MaterialTag::ConstantEpsMu:
            check_ge_one(eps0, "eps0");
            check_ge_one(mu0, "mu0");
            return;
        case MaterialTag::PlasmaEps:
            check_positive(omega_p, "Omega_p");
            check_ge_one(mu0, "mu0");
            return;
        case MaterialTag::PlasmaMu:
            check_positive(omega_m, "Omega_m");
            check_ge_one(eps0, "eps0");
            return;
        case MaterialTag::PlasmaBoth:
            check_positive(omega_p, "Omega_p");
            check_positive(omega_m, "Omega_m");
            return;
    }
    throw ModelParameterError("unknown material tag");
}

std::string MaterialModel::name() const {
    switch (tag) {
        case MaterialTag::PerfectConductor: return "perfect-conductor";
        case MaterialTag::PerfectMagnetic: return "perfect-magnetic";
        case MaterialTag::ConstantEpsMu: return "const";
        case MaterialTag::PlasmaEps: return "plasma-eps";
        case MaterialTag::PlasmaMu: return "plasma-mu";
        case MaterialTag::PlasmaBoth: return "plasma-both";
    }
    return "?";
}

std::string MaterialModel::params() const {
    std::ostringstream os;
    switch (tag) {
        case MaterialTag::PerfectConductor:
        case MaterialTag::PerfectMagnetic:
            break;
        case MaterialTag::ConstantEpsMu:
            os << "eps=" << eps0 << ";mu=" << mu0;
            break;
        case MaterialTag::PlasmaEps:
            os << "Omega_p=" << omega_p << ";mu=" << mu0;
            break;
        case MaterialTag::PlasmaMu:
            os << "Omega_m=" << omega_m << ";eps=" << eps0;
            break;
        case MaterialTag::PlasmaBoth:
            os << "Omega_p=" << omega_p << ";Omega_m=" << omega_m;
            break;
    }
    return os.str();
}

std::pair<std::vector<ScaledValue>, std::vector<ScaledValue>>
mie_table(const MaterialModel& model, int l_max, double z) {
    model.validate();
    if (!(std::isfinite(z)) || z <= 0.0)
        throw DomainError("mie: argument must be finite and positive");
    if (l_max < 1) throw DomainError("mie: l_max must be >= 1");

    std::vector<ScaledValue> te(static_cast<size_t>(l_max));
    std::vector<ScaledValue> tm(static_cast<size_t>(l_max));

    if (model.tag == MaterialTag::PerfectConductor ||
        model.tag == MaterialTag::PerfectMagnetic) {
        const RiccatiTable t = riccati_table(l_max, z);
        for (int l = 1; l <= l_max; ++l) {
            const ScaledValue a = (t.s[l] / t.e[l]) * kTwoOverPi;
            const ScaledValue b = (t.s_prime[l] / t.e_prime[l]) * kTwoOverPi;
            if (model.tag == MaterialTag::PerfectConductor) {
                te[l - 1] = a;
                tm[l - 1] = b;
            } else {  // perfect magnetic: TE and TM exchanged
                te[l - 1] = b;
                tm[l - 1] = a;
            }
        }
        return {te, tm};
    }

    const auto [eps, mu] = response_at(model, z);
    const double n = std::sqrt(eps * mu);
    const double se = std::sqrt(eps);
    const double sm = std::sqrt(mu);
    const RiccatiTable t = riccati_table(l_max, z);
    const RiccatiTable tn = riccati_table(l_max, n * z);
    for (int l = 1; l <= l_max; ++l) {
        const ScaledValue& s = t.s[l];
        const ScaledValue& sp = t.s_prime[l];
        const ScaledValue& e = t.e[l];
        const ScaledValue& ep = t.e_prime[l];
        const ScaledValue& sn = tn.s[l];
        const ScaledValue& snp = tn.s_prime[l];
        // d^TE from the dielectric T-matrix; d^TM by eps <-> mu.
        te[l - 1] = ((se * s * snp - sm * sp * sn) /
                     (se * e * snp - sm * ep * sn)) * kTwoOverPi;
        tm[l - 1] = ((sm * s * snp - se * sp * sn) /
                     (sm * e * snp - se * ep * sn)) * kTwoOverPi;
    }
    return {te, tm};
}

MieCoefficient mie_coefficients(const MaterialModel& model, int l, double z) {
    if (l < 1) throw DomainError("mie_coefficients: l must be >= 1");
    auto [te, tm] = mie_table(model, l, z);
    return {l, z, te[l - 1], tm[l - 1]};
}

std::pair<double, double> zero_frequency_factors(const MaterialModel& model, int l) {
    model.validate();
    if (l < 1) throw DomainError("zero_frequency_factors: l must be >= 1");
    const double lp1_over_l = (l + 1.0) / l;
    switch (model.tag) {
        case MaterialTag::PerfectConductor:
            return {1.0, lp1_over_l};
        case MaterialTag::PerfectMagnetic:
            return {-lp1_over_l, -1.0};
        case MaterialTag::ConstantEpsMu:
            return {(l + 1.0) * (1.0 - model.mu0) / ((l + 1.0) + model.mu0 * l),
                    -(l + 1.0) * (1.0 - model.eps0) / ((l + 1.0) + model.eps0 * l)};
        case MaterialTag::PlasmaEps:
            return {plasma_zero_ratio(model.omega_p, model.mu0, l), lp1_over_l};
        case MaterialTag::PlasmaMu:
            return {-lp1_over_l, -plasma_zero_ratio(model.omega_m, model.eps0, l)};
        case MaterialTag::PlasmaBoth:
            return {-lp1_over_l, lp1_over_l};
    }
    throw ModelParameterError("unknown material tag");
}

}  // namespace casimir
