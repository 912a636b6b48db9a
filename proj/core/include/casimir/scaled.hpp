#pragma once

#include <cmath>
#include <limits>

namespace casimir {

/// Sign-and-log representation of a real number.
///
/// Values like K_{l+1/2}(2 xi L) * I_{l+1/2}(xi R) overflow or underflow double
/// precision long before the products that enter the round-trip matrix do, so
/// every special-function result is carried as sign * exp(log_mag) and only
/// exponentiated after all factors have been combined.
struct ScaledValue {
    double log_mag = 0.0;  ///< natural log of |value|; meaningless when sign == 0
    int sign = 0;          ///< -1, 0 or +1

    static ScaledValue zero() { return {0.0, 0}; }

    static ScaledValue from_double(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
    }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_mag);
    }

    bool is_zero() const { return sign == 0; }

    ScaledValue operator-() const { return {log_mag, -sign}; }

    friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.log_mag + b.log_mag, a.sign * b.sign};
    }

    friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) {
        if (a.sign == 0) return zero();
        return {a.log_mag - b.log_mag, a.sign * b.sign};
    }

    friend ScaledValue operator*(const ScaledValue& a, double c) {
        return a * from_double(c);
    }

    friend ScaledValue operator*(double c, const ScaledValue& a) {
        return a * from_double(c);
    }

    friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const ScaledValue& hi = (a.log_mag >= b.log_mag) ? a : b;
        const ScaledValue& lo = (a.log_mag >= b.log_mag) ? b : a;
        const double d = lo.log_mag - hi.log_mag;  // <= 0
        if (hi.sign == lo.sign) {
            return {hi.log_mag + std::log1p(std::exp(d)), hi.sign};
        }
        const double t = -std::expm1(d);  // 1 - exp(d), in [0, 1]
        if (t == 0.0) return zero();
        return {hi.log_mag + std::log(t), hi.sign};
    }

    friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) {
        return a + (-b);
    }
};

}  // namespace casimir
