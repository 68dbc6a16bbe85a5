// Watches (1-q)^2 sum_n sigma(2n+1) q^n approach pi^2/4 along q = 1 - 2^-j,
// and the scaled eq18 sides approach pi^4/16.

#include <iostream>

#include "qzeta/qlimits.hpp"
#include "qzeta/report.hpp"

using namespace qzeta;

int main() {
    for (const char* name : {"sigma-lambert", "eq18"}) {
        const auto ex = limits::run_limit_experiment(name, 1, 8);
        limits::PrecisionScope scope(50);
        std::cout << ex.name << ": (1-q)^" << ex.scaling << " x value -> " << ex.target_name
                  << " = " << report::real_str(ex.target, 12) << "\n";
        for (const auto& pt : ex.points)
            std::cout << "  j=" << pt.j << "  scaled=" << report::real_str(pt.lhs_scaled, 12)
                      << "  |error|=" << report::real_str(pt.abs_error, 4) << "\n";
        std::cout << "\n";
    }
    return 0;
}
