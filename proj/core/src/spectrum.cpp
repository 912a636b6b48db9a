#include "casimir/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on P_n; built once.
GaussRule make_gauss_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& gauss15() {
    static const GaussRule rule = make_gauss_rule(15);
    return rule;
}

double logdet_one_minus(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd b =
        Eigen::MatrixXd::Identity(a.rows(), a.cols()) - a;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
    int sign = lu.permutationP().determinant() > 0 ? 1 : -1;
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
        const double d = lu.matrixLU()(i, i);
        if (d == 0.0 || !std::isfinite(d))
            throw NonPositiveDeterminantError("singular 1 - M block");
        if (d < 0.0) sign = -sign;
        logdet += std::log(std::fabs(d));
    }
    if (sign <= 0)
        throw NonPositiveDeterminantError(
            "det(1 - M) <= 0; truncation or scaling failure");
    return logdet;
}

int heuristic_l_max(double rho) {
    return std::max(8, static_cast<int>(std::ceil(6.0 * rho / (1.0 - rho))));
}

// One magnetic-number contribution at fixed truncation.
double block_logdet(const Geometry& geometry, const MaterialModel& model,
                    int m, double x, int l_max) {
    if (x == 0.0) {
        const Eigen::MatrixXd te =
            zero_freq_polarization_block(geometry, model, m, l_max, 0);
        const Eigen::MatrixXd tm =
            zero_freq_polarization_block(geometry, model, m, l_max, 1);
        return logdet_one_minus(te) + logdet_one_minus(tm);
    }
    const RoundTripBlock block = assemble_block(geometry, model, m, x, l_max);
    if (m == 0) {
        // TE and TM decouple exactly at m = 0; factor the log-det.
        const int n = block.orders();
        return logdet_one_minus(block.entries.topLeftCorner(n, n)) +
               logdet_one_minus(block.entries.bottomRightCorner(n, n));
    }
    return logdet_one_minus(block.entries);
}

}  // namespace

void NumericsConfig::validate() const {
    if (!(rel_tol > 1e-14 && rel_tol < 1e-2))
        throw DomainError("NumericsConfig: rel_tol must lie in (1e-14, 1e-2)");
    if (quad_panels < 1 || matsubara_cap < 1 || fit_degree < 3 ||
        !(fit_stencil_h > 0.0))
        throw DomainError("NumericsConfig: all knobs must be positive");
    if (l_max_override && (*l_max_override < 1 || *l_max_override > kLMaxCap))
        throw DomainError("NumericsConfig: l_max_override out of range");
}

double trace_log_fixed(const Geometry& geometry, const MaterialModel& model,
                       double x, int l_max, double m_tail_rel) {
    // Chunked so the early-out decision falls on fixed boundaries and the
    // result does not depend on the thread count.
    constexpr int kChunk = 8;
    double sum = 0.0;
    bool failed = false;
    std::string message;
    for (int m0 = 0; m0 <= l_max && !failed; m0 += kChunk) {
        const int m1 = std::min(m0 + kChunk - 1, l_max);
        std::array<double, kChunk> per_m{};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int m = m0; m <= m1; ++m) {
            try {
                per_m[m - m0] = block_logdet(geometry, model, m, x, l_max);
            } catch (const Error& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
                {
                    failed = true;
                    message = e.what();
                }
            }
        }
        if (failed) break;
        // Deterministic index-ordered reduction.
        double chunk_max = 0.0;
        for (int m = m0; m <= m1; ++m) {
            const double c = (m == 0 ? 1.0 : 2.0) * per_m[m - m0];
            sum += c;
            chunk_max = std::max(chunk_max, std::fabs(c));
        }
        if (m_tail_rel > 0.0 && chunk_max <= m_tail_rel * std::fabs(sum)) break;
    }
    if (failed) throw NonPositiveDeterminantError(message);
    return sum;
}

namespace {

struct TraceLogResult {
    double value = 0.0;
    int l_max = 0;
};

// warm, when given, carries the converged truncation of the previous call at
// a nearby frequency; the search restarts just below it instead of at the
// rho-only heuristic. The convergence rule itself is unchanged.
TraceLogResult trace_log_adaptive(const Geometry& geometry,
                                  const MaterialModel& model, double x,
                                  const NumericsConfig& config,
                                  int* warm = nullptr) {
    config.validate();
    if (x < 0.0 || !std::isfinite(x))
        throw DomainError("trace_log: x must be finite and >= 0");
    const double m_tail = 0.01 * config.rel_tol;
    if (config.l_max_override)
        return {trace_log_fixed(geometry, model, x, *config.l_max_override,
                                m_tail),
                *config.l_max_override};

    int l = heuristic_l_max(geometry.rho());
    if (warm && *warm >= 8) l = std::max(8, *warm - 4);
    double prev = trace_log_fixed(geometry, model, x, l, m_tail);
    while (true) {
        if (l + 2 > kLMaxCap)
            throw NonConvergenceError("trace_log: l_max cap reached at x = " +
                                      std::to_string(x));
        const double cur = trace_log_fixed(geometry, model, x, l + 2, m_tail);
        l += 2;
        if (std::fabs(cur - prev) <= config.rel_tol * std::fabs(cur)) {
            if (warm) *warm = l;
            return {cur, l};
        }
        prev = cur;
    }
}

}  // namespace

double trace_log(const Geometry& geometry, const MaterialModel& model, double x,
                 const NumericsConfig& config) {
    return trace_log_adaptive(geometry, model, x, config).value;
}

EnergyResult casimir_energy_T0(const Geometry& geometry,
                               const MaterialModel& model,
                               const NumericsConfig& config) {
    config.validate();
    const double rho = geometry.rho();
    const double x_cut = 40.0 / (2.0 * (1.0 - rho));

    EnergyResult result;
    long evals = 0;
    int l_used = 0;
    int warm = -1;
    auto g = [&](double x) {
        const TraceLogResult r =
            trace_log_adaptive(geometry, model, x, config, &warm);
        ++evals;
        l_used = std::max(l_used, r.l_max);
        return r.value;
    };

    const GaussRule& rule = gauss15();
    auto panel = [&](double a, double b) {
        const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
        double s = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] * g(c + hw * rule.nodes[i]);
        return s * hw;
    };

    // First pass on uniform panels sets the absolute scale.
    std::vector<double> edges(static_cast<size_t>(config.quad_panels) + 1);
    for (int i = 0; i <= config.quad_panels; ++i)
        edges[i] = x_cut * i / config.quad_panels;
    std::vector<double> coarse(static_cast<size_t>(config.quad_panels));
    double rough = 0.0;
    for (int i = 0; i < config.quad_panels; ++i) {
        coarse[i] = panel(edges[i], edges[i + 1]);
        rough += coarse[i];
    }
    const double abs_tol = config.rel_tol * std::max(std::fabs(rough), 1e-300);

    bool refine_ok = true;
    double integral = 0.0, err = 0.0;
    std::function<void(double, double, double, double, int)> refine =
        [&](double a, double b, double whole, double tol, int depth) {
            const double mid = 0.5 * (a + b);
            const double left = panel(a, mid);
            const double right = panel(mid, b);
            const double delta = std::fabs(left + right - whole);
            if (delta <= tol || depth >= 12) {
                if (delta > tol) refine_ok = false;
                integral += left + right;
                err += delta;
                return;
            }
            refine(a, mid, left, 0.5 * tol, depth + 1);
            refine(mid, b, right, 0.5 * tol, depth + 1);
        };
    for (int i = 0; i < config.quad_panels; ++i)
        refine(edges[i], edges[i + 1], coarse[i],
               abs_tol / config.quad_panels, 0);

    // Analytic bound on the dropped tail, using the exp[2(rho-1)x]/x decay.
    const double tail = std::fabs(g(x_cut)) / (2.0 * (1.0 - rho));
    err += tail;

    const double scale = 1.0 / (2.0 * kPi * geometry.L());
    result.value = integral * scale;
    result.err_estimate = err * scale;
    result.l_max_used = l_used;
    result.nodes_or_terms = evals;
    result.converged = refine_ok && result.err_estimate <=
                           config.rel_tol * std::max(std::fabs(result.value), 1e-300) * 10.0;
    return result;
}

EnergyResult free_energy(const Geometry& geometry, const MaterialModel& model,
                         double T, const NumericsConfig& config) {
    config.validate();
    if (!(T > 0.0)) throw DomainError("free_energy: T must be > 0");
    const double step = 2.0 * kPi * T * geometry.L();  // x spacing
    EnergyResult result;
    int l_used = 0;
    int warm = -1;
    auto g = [&](double x) {
        const TraceLogResult r =
            trace_log_adaptive(geometry, model, x, config, &warm);
        l_used = std::max(l_used, r.l_max);
        return r.value;
    };

    double sum = 0.5 * g(0.0);
    long n = 0;
    double term = 0.0;
    while (true) {
        ++n;
        if (n > config.matsubara_cap)
            throw NonConvergenceError("free_energy: Matsubara cap reached");
        term = g(step * n);
        sum += term;
        if (n >= 2 && std::fabs(term) < config.rel_tol * std::fabs(sum)) break;
    }
    // Remaining terms decay at least geometrically.
    const double q = std::exp(-2.0 * (1.0 - geometry.rho()) * step);
    const double tail = std::fabs(term) * q / (1.0 - q);

    result.value = T * sum;
    result.err_estimate = T * (tail + config.rel_tol * std::fabs(sum));
    result.l_max_used = l_used;
    result.nodes_or_terms = n;
    result.converged = true;
    return result;
}

double f0_classical(const Geometry& geometry, const MaterialModel& model,
                    const NumericsConfig& config) {
    return 0.5 * trace_log(geometry, model, 0.0, config);
}

namespace {

// Polynomial coefficients (in t = x/h) through the stencil values.
Eigen::VectorXd fit_poly(const std::vector<double>& values, int degree,
                         double* residual) {
    const int n = static_cast<int>(values.size());
    Eigen::MatrixXd v(n, degree + 1);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        double p = 1.0;
        for (int k = 0; k <= degree; ++k) {
            v(i, k) = p;
            p *= i;
        }
        y(i) = values[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double cond = svd.singularValues()(0) /
                        svd.singularValues()(svd.singularValues().size() - 1);
    if (!(cond < 1e12))
        throw FitIllConditionedError("low-temperature stencil fit: condition " +
                                     std::to_string(cond));
    const Eigen::VectorXd a = svd.solve(y);
    if (residual) *residual = (v * a - y).cwiseAbs().maxCoeff();
    return a;
}

}  // namespace

LowTempCoefficients low_temp_coefficients(const Geometry& geometry,
                                          const MaterialModel& model,
                                          const NumericsConfig& config) {
    config.validate();
    const double h = config.fit_stencil_h;
    const int deg = config.fit_degree;

    // Pin the truncation at the outermost stencil point so the whole stencil
    // sees one and the same matrix family.
    NumericsConfig probe = config;
    probe.rel_tol = std::min(config.rel_tol, 1e-10);
    const TraceLogResult anchor =
        trace_log_adaptive(geometry, model, deg * h, probe);
    const int l_fix = config.l_max_override.value_or(anchor.l_max);

    auto coeffs_at = [&](double step, double* residual) {
        std::vector<double> values(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i)
            values[i] = trace_log_fixed(geometry, model, step * i, l_fix);
        return fit_poly(values, deg, residual);
    };

    double residual = 0.0;
    const Eigen::VectorXd a_h = coeffs_at(h, &residual);
    const Eigen::VectorXd a_h2 = coeffs_at(0.5 * h, nullptr);

    const double h3 = h * h * h;
    const double n3_h = a_h(3) / h3;
    const double n3_h2 = a_h2(3) / (0.125 * h3);
    const double n1_h = a_h(1) / h;
    const double n1_h2 = a_h2(1) / (0.5 * h);

    LowTempCoefficients out;
    // Coefficient errors of a degree-d interpolant scale as h^(d+1-k).
    out.n3 = (8.0 * n3_h2 - n3_h) / 7.0;
    out.n1 = (32.0 * n1_h2 - n1_h) / 31.0;
    out.fit_residual = residual;
    out.stencil_h = h;
    return out;
}

double low_temp_correction(const Geometry& geometry, const MaterialModel& model,
                           double T, const NumericsConfig& config,
                           bool* regime_warning) {
    if (T < 0.0) throw DomainError("low_temp_correction: T must be >= 0");
    if (regime_warning) *regime_warning = T * geometry.L() >= 0.1;
    if (T == 0.0) return 0.0;
    const LowTempCoefficients c = low_temp_coefficients(geometry, model, config);
    const double L = geometry.L();
    // Leading Matsubara-sum-minus-integral difference of the cubic term.
    return kPi * kPi * kPi * T * T * T * T * L * L * L * c.n3 / 15.0;
}

}  // namespace casimir
