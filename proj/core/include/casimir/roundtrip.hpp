#pragma once

#include <Eigen/Dense>

#include "casimir/errors.hpp"
#include "casimir/materials.hpp"

namespace casimir {

/// Sphere of radius R with its center a distance L from the plate.
class Geometry {
public:
    Geometry(double R, double L) : R_(R), L_(L) {
        if (!(R > 0.0) || !(L > R))
            throw DomainError("Geometry: need 0 < R < L");
    }
    static Geometry from_rho(double rho, double L = 1.0) {
        return Geometry(rho * L, L);
    }

    double R() const { return R_; }
    double L() const { return L_; }
    double rho() const { return R_ / L_; }
    double gap() const { return L_ - R_; }

private:
    double R_, L_;
};

/// Dense round-trip matrix at fixed magnetic number m and frequency x = xi L.
/// Storage is polarization-major: TE rows/columns first, then TM, each indexed
/// by l = l_min .. l_max. Entries are balanced by the det-preserving diagonal
/// similarity described in assemble_block.
struct RoundTripBlock {
    int m = 0;
    int l_min = 1;
    int l_max = 1;
    double x = 0.0;
    Eigen::MatrixXd entries;

    int orders() const { return l_max - l_min + 1; }
    int dim() const { return 2 * orders(); }
    /// (pol, l) -> flat index; pol 0 = TE, 1 = TM.
    int index(int pol, int l) const { return pol * orders() + (l - l_min); }
};

struct TranslationFactors {
    double H = 0.0;
    double Lambda = 0.0;
    double LambdaTilde = 0.0;
};

/// H, Lambda, LambdaTilde of the spherical-wave translation formulas at one
/// (l, l', l'', m) and dimensionless frequency x.
TranslationFactors translation_factors(int l, int l_prime, int l_dprime, int m,
                                       double x);

RoundTripBlock assemble_block(const Geometry& geometry, const MaterialModel& model,
                              int m, double x, int l_max, bool balance = true);

/// Closed-form zero-frequency matrix; off-diagonal polarization blocks vanish.
RoundTripBlock assemble_zero_freq_block(const Geometry& geometry,
                                        const MaterialModel& model, int m,
                                        int l_max, bool balance = true);

/// Per-polarization zero-frequency matrix over l alone (TE or TM), used where
/// the decoupled structure is exploited directly.
Eigen::MatrixXd zero_freq_polarization_block(const Geometry& geometry,
                                             const MaterialModel& model, int m,
                                             int l_max, int pol,
                                             bool balance = true);

}  // namespace casimir
