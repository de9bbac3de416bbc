#pragma once

// Real triples, (m, n) = (3, 1). Work happens in the model where f1 is monic of
// degree d and f2, f3 have degree < d; the S^1-action rotates (f2, f3) and the
// splitting map r_d reads off a point of S^1 from the real roots of f1.

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "polyspace/mapdeg.hpp"
#include "polyspace/nonres.hpp"

namespace polyspace::case31 {

struct Model31 {
    QPoly f1;  // monic, degree d
    QPoly f2;  // degree < d
    QPoly f3;  // degree < d

    int degree() const { return f1.degree(); }
    friend bool operator==(const Model31&, const Model31&) = default;
};

/// Shape check: f1 monic of degree >= 1, deg f2, deg f3 < deg f1.
void validate(const Model31& m);

/// (f1, f2, f3) share no complex root.
bool is_member(const Model31& m);

/// (f1, f2, f3) -> (f1, f2 - f1, f3 - f1). Requires a real member with
/// m = 3, n = 1 and d >= 2; throws DomainError otherwise.
Model31 phi(const SystemTuple& t);

/// (f1, u, v) -> (f1, f1 + u, f1 + v) as a real tuple with n = 1.
SystemTuple phi_inverse(const Model31& m);

/// Rotation of (f2, f3) by the exact rational pair (c, s); requires c^2 + s^2 = 1.
Model31 s1_act_exact(const Rational& c, const Rational& s, const Model31& m);

/// Rotation by theta with cos/sin taken as their (exact dyadic) double values.
Model31 s1_act(double theta, const Model31& m);

/// (c, s) = ((p^2 - q^2) / (p^2 + q^2), 2pq / (p^2 + q^2)); a rational point of S^1.
std::pair<Rational, Rational> pythagorean_rotation(long p, long q);

/// (z^d, z + cos theta, z + sin theta). Throws DomainError for d < 2.
Model31 i_d_loop(int d, double theta);

/// Alternating product over the ascending real roots x_1 <= ... <= x_l of f1
/// (with multiplicity) of (f2 + i f3)(x_j)^((-1)^(j-1)). Defined for odd d.
/// Throws DomainError for even d, MembershipViolation if a factor vanishes.
std::complex<double> r_tilde(const Model31& m);

/// The same product in exact arithmetic when every real root of f1 is rational.
std::optional<GaussianRational> r_tilde_exact(const Model31& m);

/// r_tilde / |r_tilde|.
std::complex<double> r_d(const Model31& m);

using ModelLoop = std::function<Model31(double)>;

/// Winding of theta -> r_tilde(loop(theta)), theta in [0, 2pi].
WindingResult pi1_winding(const ModelLoop& loop, std::size_t refinement_cap = kDefaultRefinementCap);

/// Closed polyline through `samples` (last joined back to first), each edge
/// interpolated linearly in coefficient space.
WindingResult pi1_winding(const std::vector<Model31>& samples, std::size_t refinement_cap = kDefaultRefinementCap);

/// (1 - t) a + t b, coefficient-wise; t is taken exactly.
Model31 interpolate(const Model31& a, const Model31& b, const Rational& t);

}  // namespace polyspace::case31
