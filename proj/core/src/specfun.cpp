#include "casimir/specfun.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void check_argument(int l, double z) {
    if (!(std::isfinite(z)) || z <= 0.0)
        throw DomainError("riccati: argument must be finite and positive, got " +
                          std::to_string(z));
    if (l < 0) throw DomainError("riccati: order must be non-negative");
    if (l > kMaxRiccatiOrder)
        throw OrderOverflowError("riccati: order " + std::to_string(l) +
                                 " exceeds cap " + std::to_string(kMaxRiccatiOrder));
}

// log sinh z and log cosh z without overflow.
double log_sinh(double z) {
    if (z < 1.0) return std::log(std::sinh(z));
    return z + std::log1p(-std::exp(-2.0 * z)) - std::log(2.0);
}

double log_cosh(double z) {
    if (z < 1.0) return std::log(std::cosh(z));
    return z + std::log1p(std::exp(-2.0 * z)) - std::log(2.0);
}

// Ratios r_l = s_l(z) / s_{l-1}(z) for l = 1..l_max by the downward continued
// fraction 1/r_l = (2l+1)/z + r_{l+1}. The start index must exceed both the
// target order and z for the truncation error to die out.
std::vector<double> s_ratios(int l_max, double z) {
    const int start = std::max(l_max, static_cast<int>(z)) + 60;
    double r = z / (2.0 * start + 3.0);
    std::vector<double> ratios(static_cast<size_t>(l_max) + 1, 0.0);
    for (int l = start; l >= 1; --l) {
        r = 1.0 / ((2.0 * l + 1.0) / z + r);
        if (l <= l_max) ratios[static_cast<size_t>(l)] = r;
    }
    return ratios;
}

}  // namespace

RiccatiTable riccati_table(int l_max, double z) {
    check_argument(l_max, z);
    RiccatiTable t;
    t.z = z;
    const size_t n = static_cast<size_t>(l_max) + 1;
    t.s.resize(n);
    t.s_prime.resize(n);
    t.e.resize(n);
    t.e_prime.resize(n);

    // s_l: closed form at l = 0, then multiply up the continued-fraction ratios.
    t.s[0] = ScaledValue{log_sinh(z), +1};
    const auto ratios = s_ratios(l_max, z);
    for (int l = 1; l <= l_max; ++l)
        t.s[l] = ScaledValue{t.s[l - 1].log_mag + std::log(ratios[l]), +1};

    // e_l: stable upward recurrence e_{l+1} = e_{l-1} + (2l+1)/z e_l.
    t.e[0] = ScaledValue{-z, +1};
    if (l_max >= 1) t.e[1] = ScaledValue{-z + std::log1p(1.0 / z), +1};
    for (int l = 1; l + 1 <= l_max; ++l)
        t.e[l + 1] = t.e[l - 1] + t.e[l] * ((2.0 * l + 1.0) / z);

    // Derivatives from the lowering relations. Both combinations keep a fixed
    // sign, so no cancellation occurs.
    t.s_prime[0] = ScaledValue{log_cosh(z), +1};
    t.e_prime[0] = -t.e[0];
    for (int l = 1; l <= l_max; ++l) {
        t.s_prime[l] = t.s[l - 1] - t.s[l] * (l / z);
        t.e_prime[l] = -(t.e[l - 1] + t.e[l] * (l / z));
    }
    return t;
}

RiccatiPair riccati_pair(int l, double z) {
    const RiccatiTable t = riccati_table(l, z);
    return {l, z, t.s[l], t.s_prime[l], t.e[l], t.e_prime[l]};
}

double gamma_ratio_neg_half(int l, int l_prime) {
    return gamma_ratio_neg_half_scaled(l, l_prime).to_double();
}

ScaledValue gamma_ratio_neg_half_scaled(int l, int l_prime) {
    if (l < 1 || l_prime < 1)
        throw DomainError("gamma_ratio_neg_half: orders must be >= 1");
    // Gamma(-l+1/2)/Gamma(-l-l'+1/2) = prod_{j=0}^{l'-1} (-l-l'+1/2+j).
    // Every factor is negative, so the sign is (-1)^l'.
    double log_prod = 0.0;
    for (int j = 0; j < l_prime; ++j)
        log_prod += std::log(l + l_prime - 0.5 - j);
    const int sign = (l_prime % 2 == 0) ? +1 : -1;
    return {log_prod - std::lgamma(l + 1.5), sign};
}

}  // namespace casimir
