#pragma once

#include <cstddef>
#include <vector>

namespace shf::basis {

// Spatial quantum numbers of a hydrogen-like orbital. Spin is carried
// separately: the interaction is spin-free, so indexing and the two-body
// decomposition run over (n, l, m) only.
struct QuantumNumbers {
    int n = 1; // principal, n >= 1
    int l = 0; // orbital, 0 <= l <= n-1
    int m = 0; // magnetic, |m| <= l

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

// Number of spatial orbitals with n <= n_max: n_max(n_max+1)(2n_max+1)/6.
int basis_size(int n_max);

// All (n, l, m) with n <= n_max in lexicographic order by n, then l, then m.
// The position in this list is the orbital's BasisIndex; the order is part
// of the decomposition file contract.
std::vector<QuantumNumbers> enumerate_orbitals(int n_max);

// Row-major composite index over ordered orbital pairs: sigma = i*K + j.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t K);
std::pair<std::size_t, std::size_t> unpair_index(std::size_t sigma, std::size_t K);

// Bound-state energy -Z^2 / (2 n^2) in hartree.
double orbital_energy(int n, double Z);

// Radial wavefunction R_{n,l}(r) in atomic units,
//   R_{n,l}(r) = (2/n^2) sqrt(Z^3 (n-l-1)!/(n+l)!) e^{-Zr/n} (2Zr/n)^l
//                L^{2l+1}_{n-l-1}(2Zr/n).
double radial_wavefunction(int n, int l, double Z, double r);

// FNV-1a hash of the orbital list; stored in decomposition files so a file
// produced under a different ordering convention is rejected on load.
unsigned long long orbital_order_hash(int n_max);

} // namespace shf::basis
