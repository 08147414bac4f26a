#include "shf/basis.hpp"

#include "shf/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace shf::basis {

int basis_size(int n_max) {
    if (n_max < 1) throw std::domain_error("basis_size: n_max must be >= 1");
    return n_max * (n_max + 1) * (2 * n_max + 1) / 6;
}

std::vector<QuantumNumbers> enumerate_orbitals(int n_max) {
    std::vector<QuantumNumbers> orbitals;
    orbitals.reserve(static_cast<std::size_t>(basis_size(n_max)));
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < n; ++l)
            for (int m = -l; m <= l; ++m) orbitals.push_back({n, l, m});
    return orbitals;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t K) {
    if (i >= K || j >= K) throw std::domain_error("pair_index: index out of range");
    return i * K + j;
}

std::pair<std::size_t, std::size_t> unpair_index(std::size_t sigma, std::size_t K) {
    if (sigma >= K * K) throw std::domain_error("unpair_index: index out of range");
    return {sigma / K, sigma % K};
}

double orbital_energy(int n, double Z) {
    if (n < 1 || Z <= 0.0) throw std::domain_error("orbital_energy: need n >= 1, Z > 0");
    return -Z * Z / (2.0 * n * n);
}

double radial_wavefunction(int n, int l, double Z, double r) {
    if (n < 1 || l < 0 || l >= n || r < 0.0)
        throw std::domain_error("radial_wavefunction: invalid arguments");
    const double rho = 2.0 * Z * r / n;
    const double norm = (2.0 / (n * n)) *
        std::sqrt(Z * Z * Z * std::exp(specfun::log_factorial(n - l - 1) -
                                       specfun::log_factorial(n + l)));
    return norm * std::exp(-0.5 * rho) * std::pow(rho, l) *
           specfun::assoc_laguerre(n - l - 1, 2 * l + 1, rho);
}

unsigned long long orbital_order_hash(int n_max) {
    unsigned long long h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        h ^= static_cast<unsigned long long>(static_cast<unsigned>(v));
        h *= 1099511628211ull;
    };
    for (const auto& q : enumerate_orbitals(n_max)) {
        mix(q.n);
        mix(q.l);
        mix(q.m + 64);
    }
    return h;
}

} // namespace shf::basis
