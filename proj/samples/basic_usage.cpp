// Finds the first critical point of x(x-1)...(x-N) and compares it with the
// asymptotic expansion in 1/log N.
#include <iostream>

#include <zetapoly/zetapoly.hpp>

int main() {
    using namespace zetapoly;
    const Precision p(128);

    const FormalSeries series = expansion_coefficients(4);
    for (unsigned j = 1; j <= 4; ++j)
        std::cout << "c" << j << " = " << series.c(j).to_string() << "\n";

    const ConstantBinding constants = default_binding_for_order(4, p);
    for (unsigned long n : {100UL, 10000UL}) {
        const RootEstimate root = find_root(GapQuery(n), p);
        const HPReal approx = evaluate_expansion(n, 4, constants, p);
        std::cout << "N = " << n << "  alpha = " << root.value.to_string(25)
                  << "  expansion = " << approx.to_string(25) << "\n";
    }

    std::cout << "zeta(3) = " << zeta_value(3, p).to_string(30) << "\n";
    return 0;
}
