#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

/// Closed-form power series; terms ordered by strictly increasing power.
struct SeriesExpansion {
    enum class Variable { Rho, DOverR };
    Variable variable = Variable::Rho;
    std::vector<std::pair<int, double>> terms;  // (power, coefficient)
    std::string validity_note;
};

/// Large-separation coefficients c_j of E0 = (1/(pi L)) sum_j c_j rho^(j-1).
/// Supported: PerfectMagnetic (c4..c11), PerfectConductor (c4..c6),
/// ConstantEpsMu (c4, c6, c7) and PlasmaBoth (c5..c7).
SeriesExpansion large_sep_coefficients(const MaterialModel& model);

/// prefactor * sum coeff * value^power, accumulated in ascending-power order.
double eval_series(const SeriesExpansion& series, double value, double prefactor);

enum class ScalarBoundaryPair { DD, ND, NR, DR };

/// Two leading short-distance terms of the scalar-field energy for the given
/// plane/sphere boundary pair; robin_u enters NR and DR only.
double pfa_scalar(ScalarBoundaryPair kind, double d, double R, double robin_u);

/// Two leading short-distance terms of the electromagnetic energy for a
/// perfectly conducting or perfectly permeable sphere above a conducting plane.
double pfa_em(const MaterialModel& model, double d, double R);

/// The geometric Delta-term entering the short-distance composition rule.
double pfa_delta_term(double d, double R);

/// Leading large-separation F0 for all six material models.
double f0_large_sep(const MaterialModel& model, double rho);

/// High-temperature short-distance free energy.
double pfa_high_t(const MaterialModel& model, double d, double R, double T);

/// Large-separation series of the cubic low-temperature coefficient N3.
double n3_series(const MaterialModel& model, double rho);

}  // namespace casimir
