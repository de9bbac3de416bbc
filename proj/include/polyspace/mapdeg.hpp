#pragma once

// Natural maps into CP^{mn-1}, argument-principle degrees and winding numbers.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyspace/nonres.hpp"

namespace polyspace {

/// Adaptive refinement hit its sample cap or met a vanishing value.
class WindingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A tuple that was promised to be a member evaluated to the zero vector.
class MembershipViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultRefinementCap = std::size_t{1} << 20;

using PathFn = std::function<std::complex<double>(double)>;

struct ArgumentChange {
    double radians = 0.0;
    std::size_t samples = 0;
};

/// Continuous argument change of `path` over [a, b]. Starts from `initial_steps`
/// uniform steps and bisects until every step's principal argument jump is
/// below pi/2. Throws WindingError if a sample vanishes or the sample count
/// exceeds `refinement_cap`.
ArgumentChange argument_change(const PathFn& path, double a, double b,
                               std::size_t refinement_cap = kDefaultRefinementCap, int initial_steps = 64);

struct WindingResult {
    int winding = 0;
    double raw_turns = 0.0;  // argument change / 2pi before rounding
    std::size_t samples = 0;
};

/// Winding number of a closed loop theta -> loop(theta), theta in [0, 2pi].
WindingResult winding_detailed(const PathFn& loop, std::size_t refinement_cap = kDefaultRefinementCap,
                               int initial_steps = 64);

inline int winding_number(const PathFn& loop, std::size_t refinement_cap = kDefaultRefinementCap) {
    return winding_detailed(loop, refinement_cap).winding;
}

/// A point of CP^{N-1} given by homogeneous coordinates.
struct ProjectivePoint {
    std::vector<std::complex<double>> coords;
};

/// a ~ b iff b = c a for some scalar c, within relative tolerance.
bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b, double rel_tol = 1e-9);

ProjectivePoint conjugate(const ProjectivePoint& p);

/// Evaluates alpha -> [F_n(f_1)(alpha) : ... : F_n(f_m)(alpha)] with the jet
/// polynomials converted to floating point once.
class NaturalMap {
public:
    /// Requires equal degrees. Membership is the caller's precondition.
    explicit NaturalMap(const SystemTuple& t);

    /// nullopt stands for the point at infinity, which maps to [1 : ... : 1].
    /// Throws MembershipViolation if every coordinate is below 1e-13.
    ProjectivePoint operator()(std::optional<std::complex<double>> alpha) const;

    int dimension() const { return static_cast<int>(jets_.size()); }
    const std::vector<std::vector<std::complex<double>>>& jet_coefficients() const { return jets_; }

private:
    std::vector<std::vector<std::complex<double>>> jets_;
};

inline ProjectivePoint eval_natural_map(const SystemTuple& t, std::optional<std::complex<double>> alpha) {
    return NaturalMap(t)(alpha);
}

struct MapDegreeResult {
    int degree = 0;
    double raw_turns = 0.0;
    std::size_t samples = 0;
    double radius = 0.0;
};

/// Degree of S^2 -> CP^{mn-1} via the argument principle: winding of
/// alpha -> lambda . v(alpha) on |alpha| = radius, where radius is twice the
/// larger of the tuple's Cauchy bound and that of lambda . v. Doubles the
/// radius on winding failure (at most 5 retries). Throws DomainError when
/// lambda is degenerate (sum lambda ~ 0) or has the wrong length.
MapDegreeResult map_degree(const SystemTuple& t, const std::vector<std::complex<double>>& lambda);

/// Draws a seeded random covector and retries on degeneracy.
MapDegreeResult map_degree(const SystemTuple& t, std::uint64_t seed);

struct Rp1DegreeResult {
    int j = 0;
    double raw = 0.0;  // argument change / pi before rounding
    std::size_t samples = 0;
};

/// Degree of x -> [f1(x) : f2(x)] on R u {infinity}: continuous argument change
/// of f1 + i f2 along x = tan(s), s from -pi/2 to pi/2, divided by pi. Evaluated
/// in homogeneous form cos(s)^d (f1 + i f2)(tan s) so both ends are finite.
/// Throws DomainError if f1, f2 are not monic of one degree or share a root.
Rp1DegreeResult rp1_degree_detailed(const QPoly& f1, const QPoly& f2, std::size_t refinement_cap = kDefaultRefinementCap);

inline int rp1_degree(const QPoly& f1, const QPoly& f2) { return rp1_degree_detailed(f1, f2).j; }

}  // namespace polyspace
