// Three routes to the same coefficients: the Lambert sum, the infinite
// product psi(q)^4, and plain divisor sums sigma(2n+1). Prints the first
// few coefficients from each and confirms they agree at a larger order.

#include <cstdio>

#include "qzeta/arith.hpp"
#include "qzeta/catalog.hpp"

using namespace qzeta;

int main() {
    const std::size_t show = 12, order = 400;

    const PowerSeries sum_side = eq13_lhs(order);
    const PowerSeries product_side = eq13_rhs(order);
    const PowerSeries divisor_side = sigma_series(order);

    std::printf("%4s %14s %14s %14s\n", "n", "lambert sum", "psi(q)^4", "sigma(2n+1)");
    for (std::size_t n = 0; n < show; ++n)
        std::printf("%4zu %14s %14s %14s\n", n, sum_side[n].str().c_str(),
                    product_side[n].str().c_str(), divisor_side[n].str().c_str());

    const bool ok = !equal_up_to(sum_side, product_side, order) &&
                    !equal_up_to(sum_side, divisor_side, order);
    std::printf("\nall three agree through q^%zu: %s\n", order - 1, ok ? "yes" : "NO");
    return ok ? 0 : 1;
}
