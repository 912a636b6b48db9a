#include "casimir/roundtrip.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;

double log_factorial(int n) { return std::lgamma(n + 1.0); }

// log | (l1 l2 l1+l2; 0 0 0) | ; the sign is (-1)^(l1+l2).
double log_w000_top(int l1, int l2) {
    const int J = 2 * (l1 + l2);
    const int g = J / 2;
    return 0.5 * (log_factorial(J - 2 * l1) + log_factorial(J - 2 * l2) +
                  log_factorial(0) - log_factorial(J + 1)) +
           log_factorial(g) - log_factorial(g - l1) - log_factorial(g - l2);
}

// log | (l1 l2 l1+l2; m -m 0) | ; the sign is (-1)^(l1-l2).
double log_wm_top(int l1, int l2, int m) {
    return 0.5 * (log_factorial(2 * l1) + log_factorial(2 * l2) +
                  2.0 * log_factorial(l1 + l2) - log_factorial(2 * (l1 + l2) + 1) -
                  log_factorial(l1 + m) - log_factorial(l1 - m) -
                  log_factorial(l2 + m) - log_factorial(l2 - m));
}

double lambda_factor(int l, int lp, int ldp) {
    return 0.5 * (ldp * (ldp + 1.0) - l * (l + 1.0) - lp * (lp + 1.0)) /
           std::sqrt(l * (l + 1.0) * lp * (lp + 1.0));
}

// Material-neutral zero-frequency matrix element, log form; always positive.
// The pure-similarity factor L^(l-l') is dropped (equivalent to a diagonal
// balancing), so only rho enters.
ScaledValue m_tilde_log(int l, int lp, int m, double rho) {
    const int ldp = l + lp;
    const double log_H = 0.5 * std::log((2.0 * l + 1.0) * (2.0 * lp + 1.0)) +
                         std::log(2.0 * ldp + 1.0) + log_w000_top(l, lp) +
                         log_wm_top(l, lp, m);
    const double lambda = lambda_factor(l, lp, ldp);  // l l' / sqrt(...), > 0
    const ScaledValue gamma = gamma_ratio_neg_half_scaled(l, lp);
    // (-1)^l' prefactor cancels the gamma-ratio sign; H and Lambda are
    // positive at the stretched top, so the element is positive.
    const double log_mag = std::log(std::sqrt(kPi) / 2.0) + log_H +
                           std::log(lambda) + (2.0 * l + 1.0) * std::log(rho / 2.0) +
                           gamma.log_mag;
    return {log_mag, +1};
}

double finalize_entry(const ScaledValue& v, double shift) {
    if (v.sign == 0) return 0.0;
    const double lg = v.log_mag + shift;
    if (lg > 700.0)
        throw ScalingOverflowError(
            "balanced round-trip entry overflows double range");
    return v.sign * std::exp(lg);
}

}  // namespace

TranslationFactors translation_factors(int l, int l_prime, int l_dprime, int m,
                                       double x) {
    if (l < 1 || l_prime < 1)
        throw DomainError("translation_factors: l, l' must be >= 1");
    if (std::abs(m) > std::min(l, l_prime))
        throw DomainError("translation_factors: |m| exceeds min(l, l')");
    TranslationFactors f;
    const double w000 = wigner3j(l, l_prime, l_dprime, 0, 0, 0);
    const double wm = wigner3j(l, l_prime, l_dprime, m, -m, 0);
    f.H = std::sqrt((2.0 * l + 1.0) * (2.0 * l_prime + 1.0)) *
          (2.0 * l_dprime + 1.0) * w000 * wm;
    f.Lambda = lambda_factor(l, l_prime, l_dprime);
    f.LambdaTilde = 2.0 * m * x / std::sqrt(l * (l + 1.0) * l_prime * (l_prime + 1.0));
    return f;
}

RoundTripBlock assemble_block(const Geometry& geometry, const MaterialModel& model,
                              int m, double x, int l_max, bool balance) {
    if (m < 0) throw DomainError("assemble_block: m must be >= 0");
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("assemble_block: x must be finite and positive");
    const int l_min = std::max(1, m);
    if (l_max < l_min) throw DomainError("assemble_block: l_max < max(1, m)");

    const double rho = geometry.rho();
    RoundTripBlock block;
    block.m = m;
    block.l_min = l_min;
    block.l_max = l_max;
    block.x = x;
    const int n = block.orders();
    block.entries.setZero(2 * n, 2 * n);

    const RiccatiTable bess = riccati_table(2 * l_max, 2.0 * x);
    const auto [dte, dtm] = mie_table(model, l_max, x * rho);
    const ScaledValue pref = ScaledValue::from_double(kPi / (4.0 * x));

    // The entries factor into a row-only sphere response times a translation
    // part that grows factorially in l + l'. The det-preserving similarity
    // D_(p,l) = |d_l^p|^(-1/2) spreads the response over row and column, which
    // bounds every entry by the geometric mean of the two mirrored ones and
    // cancels the x^(l-l') spread at small x as a side effect.
    std::vector<std::array<double, 2>> half_logd(static_cast<size_t>(l_max) + 1,
                                                 {0.0, 0.0});
    if (balance)
        for (int l = l_min; l <= l_max; ++l) {
            const auto& te = dte[l - 1];
            const auto& tm = dtm[l - 1];
            half_logd[l][0] = te.sign == 0 ? 0.0 : 0.5 * te.log_mag;
            half_logd[l][1] = tm.sign == 0 ? 0.0 : 0.5 * tm.log_mag;
        }

    for (int l = l_min; l <= l_max; ++l) {
        for (int lp = l; lp <= l_max; ++lp) {
            const auto fam = wigner3j_family(l, lp, m);
            const int ldp_min = lp - l;  // lp >= l here
            // e_l'' grows with l'', so the top order sets the scale; the sum
            // runs in plain doubles relative to it.
            const double log_top = bess.e[l + lp].log_mag;
            double acc_lambda = 0.0;
            double acc_plain = 0.0;
            for (int ldp = ldp_min; ldp <= l + lp; ++ldp) {
                if ((l + lp + ldp) % 2 != 0) continue;  // parity of the 000 symbol
                const double w000 = wigner3j_000(l, lp, ldp);
                const double H = std::sqrt((2.0 * l + 1.0) * (2.0 * lp + 1.0)) *
                                 (2.0 * ldp + 1.0) * w000 * fam[ldp - ldp_min];
                if (H == 0.0) continue;
                const double w = H * bess.e[ldp].sign *
                                 std::exp(bess.e[ldp].log_mag - log_top);
                acc_lambda += w * lambda_factor(l, lp, ldp);
                acc_plain += w;
            }
            ScaledValue sum_lambda = ScaledValue::from_double(acc_lambda);
            ScaledValue sum_plain = ScaledValue::from_double(acc_plain);
            if (sum_lambda.sign != 0) sum_lambda.log_mag += log_top;
            if (sum_plain.sign != 0) sum_plain.log_mag += log_top;
            const ScaledValue n_diag = pref * sum_lambda;
            const double lt = 2.0 * m * x /
                              std::sqrt(l * (l + 1.0) * lp * (lp + 1.0));
            const ScaledValue n_off = pref * sum_plain * lt;

            // Row factor: the sphere response d^TE_l, -d^TM_l.
            // The translation part is symmetric in (l, l').
            for (auto [row_l, col_l] : {std::pair{l, lp}, std::pair{lp, l}}) {
                const ScaledValue row_te = dte[row_l - 1];
                const ScaledValue row_tm = -dtm[row_l - 1];
                const int i_te = block.index(0, row_l);
                const int i_tm = block.index(1, row_l);
                const int j_te = block.index(0, col_l);
                const int j_tm = block.index(1, col_l);
                const auto& hr = half_logd[row_l];
                const auto& hc = half_logd[col_l];
                block.entries(i_te, j_te) =
                    finalize_entry(row_te * n_diag, hc[0] - hr[0]);
                block.entries(i_tm, j_tm) =
                    finalize_entry(row_tm * n_diag, hc[1] - hr[1]);
                block.entries(i_te, j_tm) =
                    finalize_entry(row_te * n_off, hc[1] - hr[0]);
                block.entries(i_tm, j_te) =
                    finalize_entry(row_tm * n_off, hc[0] - hr[1]);
                if (l == lp) break;
            }
        }
    }
    return block;
}

Eigen::MatrixXd zero_freq_polarization_block(const Geometry& geometry,
                                             const MaterialModel& model, int m,
                                             int l_max, int pol, bool balance) {
    if (m < 0) throw DomainError("zero_freq block: m must be >= 0");
    const int l_min = std::max(1, m);
    if (l_max < l_min) throw DomainError("zero_freq block: l_max < max(1, m)");
    const double rho = geometry.rho();
    const int n = l_max - l_min + 1;

    std::vector<double> f(static_cast<size_t>(l_max) + 1, 0.0);
    for (int l = l_min; l <= l_max; ++l) {
        const auto [fte, ftm] = zero_frequency_factors(model, l);
        f[l] = (pol == 0) ? fte : ftm;
    }

    Eigen::MatrixXd a(n, n);
    for (int l = l_min; l <= l_max; ++l) {
        for (int lp = l_min; lp <= l_max; ++lp) {
            const ScaledValue mt = m_tilde_log(l, lp, m, rho) * f[l];
            const double shift =
                balance ? (lp - l) * std::log(rho / 2.0) : 0.0;
            a(l - l_min, lp - l_min) = finalize_entry(mt, shift);
        }
    }
    return a;
}

RoundTripBlock assemble_zero_freq_block(const Geometry& geometry,
                                        const MaterialModel& model, int m,
                                        int l_max, bool balance) {
    RoundTripBlock block;
    block.m = m;
    block.l_min = std::max(1, m);
    block.l_max = l_max;
    block.x = 0.0;
    const int n = block.orders();
    block.entries.setZero(2 * n, 2 * n);
    block.entries.topLeftCorner(n, n) =
        zero_freq_polarization_block(geometry, model, m, l_max, 0, balance);
    block.entries.bottomRightCorner(n, n) =
        zero_freq_polarization_block(geometry, model, m, l_max, 1, balance);
    return block;
}

}  // namespace casimir
