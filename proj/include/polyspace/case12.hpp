#pragma once

// Squarefree real monic polynomials, (m, n) = (1, 2). A polynomial with 2j
// non-real roots lies in component j and corresponds to a configuration of
// d - 2j real points and j points of the upper half plane.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "polyspace/mapdeg.hpp"
#include "polyspace/random.hpp"

namespace polyspace::case12 {

struct ComponentLabel {
    int j = 0;
    friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

struct HalfPlaneConfig {
    std::vector<std::complex<double>> points;  // Im > 0
    std::vector<double> real_points;           // strictly increasing
};

/// j = (d - #real roots) / 2, by Sturm counting. Throws DomainError unless f
/// is monic, of degree >= 1 and squarefree.
ComponentLabel component_of(const QPoly& f);

/// Exact sorted real roots plus the numeric upper-half-plane roots.
HalfPlaneConfig to_configuration(const QPoly& f);

/// prod (z - x_i) * prod (z - a_k)(z - conj a_k), in floating point, ascending.
std::vector<double> reconstruct(const HalfPlaneConfig& config);

/// 1 + sum_k 1 / (alpha - a_k); nullopt (the point [0 : 1]) when alpha is one
/// of the a_k.
std::optional<std::complex<double>> electric_field(const std::vector<std::complex<double>>& points,
                                                   std::complex<double> alpha);

/// Degree of alpha -> [f(alpha) : f(alpha) + f'(alpha)], f = prod (z - a_k), by
/// the argument principle on a circle enclosing the zeros of a generic
/// combination lambda_1 f + lambda_2 (f + f').
MapDegreeResult electric_degree(const std::vector<std::complex<double>>& points);

using ConfigLoop = std::function<std::vector<std::complex<double>>(double)>;

/// Exponent sum of the braid traced by a closed loop of unordered
/// configurations: the winding of prod_{k<l} (a_k - a_l)^2, which equals
/// sum over pairs of (argument change of a_k - a_l) / pi. Throws WindingError
/// on collisions and DomainError if the loop does not close up as a set.
WindingResult abelian_braid_invariant(const ConfigLoop& loop, std::size_t refinement_cap = kDefaultRefinementCap);

/// The generator sigma_1 as a closed loop: points p and q swap counterclockwise
/// about their midpoint, every other point stays fixed.
ConfigLoop half_twist(std::vector<std::complex<double>> base, std::size_t p, std::size_t q);

/// f * (z^2 + T^2). Requires f squarefree and T > cauchy_root_bound(f).
QPoly stabilize(const QPoly& f, const Rational& T);

/// cauchy_root_bound(f) + 1.
Rational default_stabilization_parameter(const QPoly& f);

/// Random squarefree monic polynomial of degree d: coefficients p/q with
/// |p| <= 100, 1 <= q <= 10 below the leading term, rejected until squarefree.
QPoly random_member(int d, Rng& rng, long* rejected = nullptr);

/// prod_{i<d-2j} (z - i) * prod_{k<j} ((z - k)^2 + 1): an explicit member with label j.
QPoly representative(int d, int j);

struct CensusResult {
    std::map<int, long> counts;
    long rejected = 0;
};

/// Labels `samples` random members of degree d.
CensusResult census(int d, long samples, std::uint64_t seed);

}  // namespace polyspace::case12
