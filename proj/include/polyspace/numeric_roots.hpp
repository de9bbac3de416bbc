#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polyspace/polynomial.hpp"

namespace polyspace {

/// Simultaneous iteration did not reach its backward-error target within the
/// iteration cap. Retrying with a different `restart_seed` usually helps.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A disk holding `multiplicity` computed roots.
struct RootCluster {
    std::complex<double> center;
    double radius = 0.0;
    int multiplicity = 1;
};

/// Coefficients in extended precision. Rationals are split into a double plus
/// a double correction so the long double value keeps its full mantissa.
template <class C>
std::vector<std::complex<long double>> to_long_double_coefficients(const Polynomial<C>& f);

/// Raw Aberth-Ehrlich iteration on ascending complex coefficients. Returns
/// degree-many approximations (unordered, unclustered).
std::vector<std::complex<long double>> aberth_roots(const std::vector<std::complex<long double>>& ascending,
                                                    std::uint64_t restart_seed = 0, int max_iterations = 2000);

/// Groups approximations whose disks of radius `tol` overlap (single linkage).
/// The returned disks are pairwise disjoint and their multiplicities sum to the
/// number of inputs.
std::vector<RootCluster> cluster_roots(const std::vector<std::complex<long double>>& roots, double tol);

/// All complex roots of f, clustered at radius tol. Throws DomainError for a
/// constant/zero f or tol <= 0, ConvergenceError on stagnation.
template <class C>
std::vector<RootCluster> complex_roots_numeric(const Polynomial<C>& f, double tol, std::uint64_t restart_seed = 0);

/// Same, with the default radius 1e-8 * cauchy_root_bound(f).
template <class C>
std::vector<RootCluster> complex_roots_numeric(const Polynomial<C>& f);

extern template std::vector<std::complex<long double>> to_long_double_coefficients(const QPoly&);
extern template std::vector<std::complex<long double>> to_long_double_coefficients(const GPoly&);
extern template std::vector<RootCluster> complex_roots_numeric(const QPoly&, double, std::uint64_t);
extern template std::vector<RootCluster> complex_roots_numeric(const GPoly&, double, std::uint64_t);
extern template std::vector<RootCluster> complex_roots_numeric(const QPoly&);
extern template std::vector<RootCluster> complex_roots_numeric(const GPoly&);

}  // namespace polyspace
