// Searches all small (mu0, mu0') for a constant ratio A(mu0)(n) / B(mu0')(n+2)
// and reports which of them the odd-parts-plus-power-of-2-run rule predicts.

#include <cstdlib>
#include <iostream>

#include "charsum.hpp"

int main(int argc, char** argv) {
    using namespace charsum;
    const int K = argc > 1 ? std::atoi(argv[1]) : 10;
    int unpredicted = 0;
    for (const auto& p : search_pairs(K, 12)) {
        std::cout << "(" << to_string(p.mu0) << ") -> (" << to_string(p.mu0_prime) << ")  " << to_string(p.ratio)
                  << (p.theorem_predicted ? "" : "  <- not predicted") << '\n';
        unpredicted += !p.theorem_predicted;
    }
    std::cout << unpredicted << " unpredicted pairs\n";
    return 0;
}
