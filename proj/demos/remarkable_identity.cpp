// Prints A((3))(n) next to B((3,2))(n+2) and checks that the second is twice the first.

#include <iostream>

#include "charsum.hpp"

int main() {
    using namespace charsum;
    const Partition mu0{3};
    const Partition mu0p = companion_mu_prime(*theorem_form_of(mu0));
    std::cout << "n  A(3)(n)  B(" << to_string(mu0p) << ")(n+2)\n";
    bool all = true;
    for (int n = 3; n <= 20; ++n) {
        const auto a = sum_A(mu0, n);
        const auto b = sum_B(mu0p, n + 2);
        all = all && 2 * a == b;
        std::cout << n << "  " << a << "  " << b << '\n';
    }
    std::cout << (all ? "identity holds\n" : "identity FAILS\n");
    return all ? 0 : 1;
}
