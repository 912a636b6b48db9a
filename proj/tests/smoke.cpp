#include <cstdio>
#include <cmath>
#include "casimir/specfun.hpp"
#include "casimir/spectrum.hpp"
#include "casimir/asymptotics.hpp"
using namespace casimir;
int main() {
    NumericsConfig cfg;
    // (a) low-temp constant check: conductor rho=0.3
    auto g = Geometry::from_rho(0.3);
    auto pc = MaterialModel::perfect_conductor();
    auto lt = low_temp_coefficients(g, pc, cfg);
    std::printf("n1=%.6e n3=%.6e (n3 series: %.6e)\n", lt.n1, lt.n3, n3_series(pc, 0.3));
    auto e0 = casimir_energy_T0(g, pc, cfg);
    std::printf("E0 = %.10e (err %.1e, lmax %d)\n", e0.value, e0.err_estimate, e0.l_max_used);
    for (double TL : {0.02, 0.01, 0.005}) {
        auto fe = free_energy(g, pc, TL, cfg);
        double diff = fe.value - e0.value;
        double pi = M_PI;
        double c2 = pi*pi*TL*TL*TL*TL/15.0*lt.n3;   // L = 1
        double c3 = pi*c2;
        std::printf("TL=%.3f  dF=%.6e  pi^2 form=%.6e (ratio %.4f)  pi^3 form=%.6e (ratio %.4f)\n",
                    TL, diff, c2, diff/c2, c3, diff/c3);
    }
    return 0;
}
