#pragma once

#include <vector>

#include "casimir/scaled.hpp"

namespace casimir {

/// Largest supported Riccati-Bessel order.
inline constexpr int kMaxRiccatiOrder = 300;

/// Modified Riccati-Bessel functions of one order at one argument:
/// s_l(z) = sqrt(pi z / 2) I_{l+1/2}(z), e_l(z) = sqrt(2 z / pi) K_{l+1/2}(z)
/// together with the first derivatives. Satisfies s e' - s' e = -1.
struct RiccatiPair {
    int l = 0;
    double z = 0.0;
    ScaledValue s, s_prime, e, e_prime;
};

/// All orders 0..l_max at a fixed argument. The workhorse for matrix assembly,
/// where every order is needed at the same frequency.
struct RiccatiTable {
    double z = 0.0;
    std::vector<ScaledValue> s, s_prime, e, e_prime;  // index = order

    int l_max() const { return static_cast<int>(s.size()) - 1; }
};

RiccatiTable riccati_table(int l_max, double z);
RiccatiPair riccati_pair(int l, double z);

/// Wigner 3j symbol, evaluated exactly in big-integer rational arithmetic and
/// converted to double at the end. Selection-rule violations return 0; |m_i| >
/// l_i throws DomainError.
double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3);

/// (l1 l2 l3; 0 0 0) through the non-alternating closed form; full double
/// accuracy at any order.
double wigner3j_000(int l1, int l2, int l3);

/// The whole family (l1 l2 j; m -m 0) for j = |l1-l2| .. l1+l2 by three-term
/// recurrence in j, normalised through the orthogonality sum. Fast path for
/// block assembly; agrees with wigner3j to ~1e-13.
std::vector<double> wigner3j_family(int l1, int l2, int m);

/// Gamma(-l+1/2) / (Gamma(-l-l'+1/2) Gamma(l+3/2)) via the finite Pochhammer
/// product; never evaluates Gamma near a pole.
double gamma_ratio_neg_half(int l, int l_prime);
ScaledValue gamma_ratio_neg_half_scaled(int l, int l_prime);

}  // namespace casimir
