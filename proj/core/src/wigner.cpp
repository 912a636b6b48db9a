#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr int kFactorialCap = 768;

const std::vector<cpp_int>& factorials() {
    static const std::vector<cpp_int> table = [] {
        std::vector<cpp_int> f(kFactorialCap + 1);
        f[0] = 1;
        for (int i = 1; i <= kFactorialCap; ++i) f[i] = f[i - 1] * i;
        return f;
    }();
    return table;
}

const std::vector<double>& log_factorials() {
    static const std::vector<double> table = [] {
        std::vector<double> f(4097, 0.0);
        for (size_t i = 1; i < f.size(); ++i)
            f[i] = f[i - 1] + std::log(static_cast<double>(i));
        return f;
    }();
    return table;
}

// Rational -> double with explicit exponent alignment, so that astronomically
// large numerators and denominators never overflow on the way.
double rational_to_double(const cpp_rational& r) {
    if (r == 0) return 0.0;
    const cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    const long bn = static_cast<long>(msb(abs(num)));
    const long bd = static_cast<long>(msb(abs(den)));
    // Keep ~64 significant bits of each.
    const long sn = std::max(0L, bn - 64);
    const long sd = std::max(0L, bd - 64);
    const double top = static_cast<double>(num >> sn);
    const double bot = static_cast<double>(den >> sd);
    return std::ldexp(top / bot, static_cast<int>(sn - sd));
}

bool triangle_ok(int l1, int l2, int l3) {
    return l3 >= std::abs(l1 - l2) && l3 <= l1 + l2;
}

}  // namespace

double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3) {
    if (l1 < 0 || l2 < 0 || l3 < 0)
        throw DomainError("wigner3j: negative angular momentum");
    if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3)
        throw DomainError("wigner3j: |m| exceeds l");
    if (m1 + m2 + m3 != 0) return 0.0;
    if (!triangle_ok(l1, l2, l3)) return 0.0;
    if (l1 + l2 + l3 + 1 > kFactorialCap)
        throw OrderOverflowError("wigner3j: combined order too large");

    const auto& f = factorials();

    // Racah single-sum form. The alternating sum is done exactly in rationals;
    // only the final square root is floating point.
    const int kmin = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
    const int kmax = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
    cpp_rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        cpp_int den = f[k] * f[l1 + l2 - l3 - k] * f[l1 - m1 - k] *
                      f[l2 + m2 - k] * f[l3 - l2 + m1 + k] * f[l3 - l1 - m2 + k];
        cpp_rational term(1, den);
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    if (sum == 0) return 0.0;

    cpp_rational radicand(f[l1 + l2 - l3] * f[l1 - l2 + l3] * f[-l1 + l2 + l3],
                          f[l1 + l2 + l3 + 1]);
    radicand *= f[l1 + m1] * f[l1 - m1];
    radicand *= f[l2 + m2] * f[l2 - m2];
    radicand *= f[l3 + m3] * f[l3 - m3];
    radicand *= sum * sum;

    int sign = (sum > 0) ? +1 : -1;
    if ((l1 - l2 - m3) % 2 != 0) sign = -sign;
    return sign * std::sqrt(rational_to_double(radicand));
}

double wigner3j_000(int l1, int l2, int l3) {
    if (!triangle_ok(l1, l2, l3)) return 0.0;
    const int J = l1 + l2 + l3;
    if (J % 2 != 0) return 0.0;
    const auto& lf = log_factorials();
    const int g = J / 2;
    const double log_val =
        0.5 * (lf[J - 2 * l1] + lf[J - 2 * l2] + lf[J - 2 * l3] - lf[J + 1]) +
        lf[g] - lf[g - l1] - lf[g - l2] - lf[g - l3];
    const int sign = (g % 2 == 0) ? +1 : -1;
    return sign * std::exp(log_val);
}

std::vector<double> wigner3j_family(int l1, int l2, int m) {
    if (l1 < 0 || l2 < 0) throw DomainError("wigner3j_family: negative order");
    if (std::abs(m) > std::min(l1, l2))
        throw DomainError("wigner3j_family: |m| exceeds min(l1, l2)");

    const int jmin = std::abs(l1 - l2);
    const int jmax = l1 + l2;
    const int n = jmax - jmin + 1;
    std::vector<double> fam(static_cast<size_t>(n), 0.0);

    if (m == 0) {
        for (int j = jmin; j <= jmax; ++j)
            fam[j - jmin] = wigner3j_000(l1, l2, j);
        return fam;
    }

    // Three-term recurrence in j for f(j) = (l1 l2 j; m -m 0):
    //   j A(j+1) f(j+1) + B(j) f(j) + (j+1) A(j) f(j-1) = 0,
    // with A(j) = j sqrt[(j^2-(l1-l2)^2)((l1+l2+1)^2-j^2)] and
    // B(j) = -(2j+1) 2m j(j+1). A(jmin) = 0, so the upward sweep starts with a
    // two-term step. Upward from jmin and downward from jmax are glued at the
    // upward peak, then the orthogonality sum fixes the scale and f(jmax)
    // fixes the overall sign.
    auto A = [&](int j) {
        const double jj = j;
        const double d = static_cast<double>(l1 - l2);
        const double s = static_cast<double>(l1 + l2 + 1);
        return jj * std::sqrt((jj * jj - d * d) * (s * s - jj * jj));
    };
    auto B = [&](int j) {
        const double jj = j;
        return -(2.0 * jj + 1.0) * 2.0 * m * jj * (jj + 1.0);
    };

    if (n == 1) {
        // jmin == jmax only when l1 == 0 or l2 == 0, which forces m == 0.
        fam[0] = wigner3j_000(l1, l2, jmin);
        return fam;
    }

    std::vector<double> up(static_cast<size_t>(n), 0.0);
    up[0] = 1.0;
    int peak = 0;
    if (jmin == 0) {
        // l1 == l2; B(0) = 0 makes the first step vacuous, so seed with the
        // closed forms f(0) and f(1).
        const int l = l1;
        const double f0 = ((l - m) % 2 == 0 ? 1.0 : -1.0) / std::sqrt(2.0 * l + 1.0);
        const double f1 = ((l - m) % 2 == 0 ? 1.0 : -1.0) * 2.0 * m /
                          std::sqrt(2.0 * l * (2.0 * l + 1.0) * (2.0 * l + 2.0));
        up[0] = f0;
        up[1] = f1;
        peak = 1;
    } else {
        up[1] = -B(jmin) * up[0] / (jmin * A(jmin + 1));
        peak = 1;
    }
    double amax = std::max(std::fabs(up[0]), std::fabs(up[1]));
    for (int i = peak; i + 1 < n; ++i) {
        const int j = jmin + i;
        up[i + 1] = (-B(j) * up[i] - (j + 1) * A(j) * up[i - 1]) / (j * A(j + 1));
        const double a = std::fabs(up[i + 1]);
        if (a > amax) {
            amax = a;
            peak = i + 1;
        }
        if (a > 1e280) {  // rescale to dodge overflow
            for (int k = 0; k <= i + 1; ++k) up[k] *= 1e-280;
            amax *= 1e-280;
        }
    }

    std::vector<double> dn(static_cast<size_t>(n), 0.0);
    dn[n - 1] = 1.0;
    if (n >= 2) {
        // Two-term step at jmax: jmax A(jmax+1) would multiply f(jmax+1) = 0.
        dn[n - 2] = -B(jmax) * dn[n - 1] / ((jmax + 1) * A(jmax));
    }
    for (int i = n - 2; i > peak; --i) {
        const int j = jmin + i;
        dn[i - 1] = (-B(j) * dn[i] - j * A(j + 1) * dn[i + 1]) / ((j + 1) * A(j));
        if (std::fabs(dn[i - 1]) > 1e280) {
            for (int k = i - 1; k < n; ++k) dn[k] *= 1e-280;
        }
    }

    const double scale = up[peak] / dn[peak];
    for (int i = 0; i < n; ++i) fam[i] = (i <= peak) ? up[i] : dn[i] * scale;

    double norm = 0.0;
    for (int i = 0; i < n; ++i)
        norm += (2.0 * (jmin + i) + 1.0) * fam[i] * fam[i];
    double inv = 1.0 / std::sqrt(norm);
    // Sign convention at the stretched top: sign f(jmax) = (-1)^(l1-l2).
    const int top_sign = ((l1 - l2) % 2 == 0) ? +1 : -1;
    if (fam[n - 1] * top_sign * inv < 0.0) inv = -inv;
    for (auto& v : fam) v *= inv;
    return fam;
}

}  // namespace casimir
