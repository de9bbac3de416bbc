#pragma once

// Pairs of real monic polynomials without a common root, (m, n) = (2, 1).
// Components are labelled by the real-axis degree j of x -> [f1(x) : f2(x)].

#include <cstdint>
#include <map>

#include "polyspace/nonres.hpp"
#include "polyspace/random.hpp"

namespace polyspace::case21 {

struct ComponentLabel {
    int j = 0;
    friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

/// true iff |j| <= d and j = d (mod 2).
bool is_legal_label(int d, int j);

/// Label of a real member pair with m = 2, n = 1. Throws DomainError otherwise.
ComponentLabel component_of(const SystemTuple& t);

/// An explicit member with label j:
///   f1 = prod_{i<r} (z - 2i) * (z^2 + 1)^((d - r)/2)
///   f2 = prod_{i<r} (z - 2i - s) * (z^2 + 2)^((d - r)/2)
/// with r = |j| and s = +1 for j > 0, -1 for j < 0. Each real root of f1 is
/// followed (s = +1) or preceded (s = -1) by a root of f2, and each such
/// pair contributes sign(j) to the degree.
/// Throws DomainError on d < 1 or an illegal label.
SystemTuple representative(int d, int j);

/// A random member: coefficients below the monic leading term are uniform
/// rationals p/q with |p| <= 100, 1 <= q <= 10; pairs with a common root are
/// rejected. `rejected` (if given) accumulates the number of rejections.
SystemTuple random_member(int d, Rng& rng, long* rejected = nullptr);

struct CensusResult {
    std::map<int, long> counts;
    long rejected = 0;
};

/// Labels `samples` random members. Throws DomainError on d < 1 or samples < 1.
CensusResult census(int d, long samples, std::uint64_t seed);

}  // namespace polyspace::case21
