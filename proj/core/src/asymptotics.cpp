#include "casimir/asymptotics.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZeta3 = 1.2020569031595942854;

double rational(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

SeriesExpansion make_series(std::vector<std::pair<int, double>> terms,
                            std::string note) {
    SeriesExpansion s;
    s.variable = SeriesExpansion::Variable::Rho;
    s.terms = std::move(terms);
    s.validity_note = std::move(note);
    return s;
}

}  // namespace

SeriesExpansion large_sep_coefficients(const MaterialModel& model) {
    model.validate();
    switch (model.tag) {
        case MaterialTag::PerfectMagnetic:
            return make_series(
                {{3, rational(9, 16)},
                 {5, rational(25, 32)},
                 {6, rational(2737, 4096)},
                 {7, rational(12551, 9600)},
                 {8, rational(-1298187, 163840)},
                 {9, rational(31982323007LL, 722534400LL)},
                 {10, rational(-39548025347LL, 412876800LL)}},
                "rho << 1; multiply by 1/(pi L)");
        case MaterialTag::PerfectConductor:
            return make_series({{3, rational(-9, 16)}, {5, rational(-25, 32)}},
                               "rho << 1; first three orders only");
        case MaterialTag::ConstantEpsMu: {
            const double e = model.eps0, u = model.mu0;
            const double c4 = -9.0 * (e - u) / (8.0 * (2.0 + e) * (2.0 + u));
            const double c6 =
                -3.0 * (e - u) *
                (380.0 + 320.0 * (e + u) + 50.0 * (e * e + u * u) +
                 217.0 * e * u + 8.0 * e * u * (e + u) - 11.0 * e * e * u * u +
                 3.0 * e * e * u * u * (e + u) + 2.0 * e * e * e * u * u * u) /
                (8.0 * (2.0 + e) * (2.0 + e) * (3.0 + 2.0 * e) * (2.0 + u) *
                 (2.0 + u) * (3.0 + 2.0 * u));
            const double c7 =
                (128.0 - 11584.0 * e + 3023.0 * e * e + 11456.0 * u -
                 382.0 * e * u + 5792.0 * e * e * u - 2737.0 * u * u -
                 5728.0 * e * u * u + 32.0 * e * e * u * u) /
                (1024.0 * (2.0 + e) * (2.0 + e) * (2.0 + u) * (2.0 + u));
            return make_series({{3, c4}, {5, c6}, {6, c7}},
                               "rho << 1; constant eps, mu");
        }
        case MaterialTag::PlasmaBoth: {
            const double p = model.omega_p, m = model.omega_m;
            const double p2 = p * p, m2 = m * m;
            const double c5 = -9.0 * (p2 - m2) / (16.0 * m * p);
            const double c6 = 15.0 * (p2 * p2 - m2 * m2) / (16.0 * m2 * p2);
            // Dimensionless-Omega reading (Omega = omega R); the doubled 256
            // denominator is kept exactly as printed.
            const double c7 = -1.0 / 32.0 -
                              (135.0 / 64.0) * (p2 * p2 * p2 - m2 * m2 * m2) /
                                  (m2 * m * p2 * p) -
                              (415.0 / 256.0) * (m2 - p2) / (256.0 * m * p) -
                              (135.0 / 64.0) * (p2 - m2) / (m2 * m * p2 * p) +
                              (125.0 / 128.0) * (p2 * p2 - m2 * m2) /
                                  (m2 * m * p2 * p);
            return make_series({{4, c5}, {5, c6}, {6, c7}},
                               "rho << 1; plasma eps and mu");
        }
        default:
            throw UnsupportedModelError(
                "large_sep_coefficients: no printed series for " + model.name());
    }
}

double eval_series(const SeriesExpansion& series, double value, double prefactor) {
    double sum = 0.0;
    for (const auto& [power, coeff] : series.terms)
        sum += coeff * std::pow(value, power);
    return prefactor * sum;
}

double pfa_scalar(ScalarBoundaryPair kind, double d, double R, double robin_u) {
    if (!(d > 0.0) || !(R > 0.0)) throw DomainError("pfa_scalar: need d, R > 0");
    const double dr = d / R;
    const double lead_dd = -kPi * kPi * kPi * R / (1440.0 * d * d);
    const double lead_nd = 7.0 * kPi * kPi * kPi * R / (11520.0 * d * d);
    switch (kind) {
        case ScalarBoundaryPair::DD:
            return lead_dd * (1.0 + dr / 3.0);
        case ScalarBoundaryPair::ND:
            return lead_nd * (1.0 + dr / 3.0);
        case ScalarBoundaryPair::NR:
            return lead_dd *
                   (1.0 + (1.0 / 3.0 +
                           10.0 * (6.0 * robin_u - 1.0) / (kPi * kPi)) * dr);
        case ScalarBoundaryPair::DR:
            return lead_nd *
                   (1.0 + (1.0 / 3.0 + 40.0 * (6.0 * robin_u - 1.0) /
                                           (7.0 * kPi * kPi)) * dr);
    }
    throw DomainError("pfa_scalar: unknown boundary pair");
}

double pfa_delta_term(double d, double R) {
    if (!(d > 0.0) || !(R > 0.0)) throw DomainError("pfa_delta_term: need d, R > 0");
    return (R / (4.0 * kPi * d * d)) * (kPi * kPi / 6.0) * (d / R);
}

double pfa_em(const MaterialModel& model, double d, double R) {
    if (!(d > 0.0) || !(R > 0.0)) throw DomainError("pfa_em: need d, R > 0");
    const double dr = d / R;
    switch (model.tag) {
        case MaterialTag::PerfectConductor:
            return -kPi * kPi * kPi * R / (720.0 * d * d) *
                   (1.0 + (1.0 / 3.0 - 20.0 / (kPi * kPi)) * dr);
        case MaterialTag::PerfectMagnetic:
            return 7.0 * kPi * kPi * kPi * R / (5760.0 * d * d) *
                   (1.0 + (1.0 / 3.0 + 40.0 / (kPi * kPi)) * dr);
        default:
            throw UnsupportedModelError("pfa_em: only the perfect cases");
    }
}

double f0_large_sep(const MaterialModel& model, double rho) {
    model.validate();
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("f0_large_sep: rho in (0,1)");
    const double r3 = rho * rho * rho;
    auto tanh_ratio = [](double Omega, double c0) {
        const double b = std::sqrt(c0);
        const double t = std::tanh(b * Omega);
        return (-b * Omega + (1.0 + c0 * Omega * Omega) * t) /
               ((c0 - 1.0) * b * Omega + ((1.0 + c0 * Omega * Omega) - c0) * t);
    };
    switch (model.tag) {
        case MaterialTag::PerfectConductor:
            return -3.0 / 8.0 * r3;
        case MaterialTag::PerfectMagnetic:
            return 3.0 / 8.0 * r3;
        case MaterialTag::ConstantEpsMu:
            return -0.25 * ((1.0 - model.mu0) / (2.0 + model.mu0) -
                            (1.0 - model.eps0) / (2.0 + model.eps0)) * r3;
        case MaterialTag::PlasmaEps:
            return -3.0 / 8.0 * tanh_ratio(model.omega_p, model.mu0) * r3;
        case MaterialTag::PlasmaMu:
            return 3.0 / 8.0 * tanh_ratio(model.omega_m, model.eps0) * r3;
        case MaterialTag::PlasmaBoth:
            return -3.0 / 64.0 * r3 * r3;
    }
    throw ModelParameterError("unknown material tag");
}

double pfa_high_t(const MaterialModel& model, double d, double R, double T) {
    if (!(d > 0.0) || !(R > 0.0) || !(T > 0.0))
        throw DomainError("pfa_high_t: need d, R, T > 0");
    switch (model.tag) {
        case MaterialTag::PerfectConductor:
            return -kZeta3 * R * T / (4.0 * d);
        case MaterialTag::PerfectMagnetic:
            return 3.0 * kZeta3 * R * T / (16.0 * d);
        case MaterialTag::PlasmaBoth:
            return -(T / 32.0) * (R / d) * kZeta3;
        default:
            throw UnsupportedModelError("pfa_high_t: unsupported model " +
                                        model.name());
    }
}

double n3_series(const MaterialModel& model, double rho) {
    if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("n3_series: rho in [0,1)");
    const double r3 = rho * rho * rho;
    const double r6 = r3 * r3;
    const double r9 = r6 * r3;
    switch (model.tag) {
        case MaterialTag::PerfectConductor:
            return r3 - r6 / 4.0 - 5.0 * r9 / 64.0;
        case MaterialTag::PerfectMagnetic:
            return -r3 + r6 / 4.0 - r9 / 32.0;
        default:
            throw UnsupportedModelError("n3_series: unsupported model " +
                                        model.name());
    }
}

}  // namespace casimir
