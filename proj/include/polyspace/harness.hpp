#pragma once

// Monte Carlo plumbing: random members, sample-based certification of
// straight-line paths, and seeded invariant sweeps.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyspace/json_io.hpp"
#include "polyspace/nonres.hpp"
#include "polyspace/random.hpp"

namespace polyspace::harness {

enum class Case { C21, C31, C12, C13, C22 };

/// (m, n) of a case.
std::pair<int, int> shape(Case c);
std::string to_string(Case c);
/// "21", "31", "12", "13", "22"; throws DomainError otherwise.
Case case_from_string(const std::string& s);

class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejection sampling: coefficients below the monic leading term are p/q with
/// |p| <= 100, 1 <= q <= 10 (real and imaginary parts separately for complex
/// tuples). Throws DomainError on d < 1, SamplingError after max_attempts.
SystemTuple random_member(int m, int n, int d, FieldTag field, Rng& rng, long max_attempts = 1000,
                          long* rejected = nullptr);
SystemTuple random_member(Case c, int d, std::uint64_t seed, long max_attempts = 1000);

/// (1 - t) a + t b, coefficient-wise. Throws DomainError if the shapes differ.
SystemTuple interpolate(const SystemTuple& a, const SystemTuple& b, const Rational& t);

/// Component label where one exists: rp1 degree for real (2, 1) tuples, the
/// number of conjugate pairs for real (1, 2) tuples. Requires membership.
std::optional<int> component_label(const SystemTuple& t);

struct PathSample {
    Rational t;
    bool member = false;
    std::optional<int> label;
};

struct PathInSpace {
    std::vector<SystemTuple> vertices;
    std::vector<PathSample> samples;  // sorted by t, includes 0 and 1
    int refinement_depth = 0;
    bool certified = false;
    /// Bracket [lo, hi] of a boundary crossing; lo == hi for a sample that is
    /// exactly outside the space.
    std::optional<std::pair<Rational, Rational>> violation;
};

/// Straight-line path from a to b; see certify_polyline.
PathInSpace certify_path(const SystemTuple& a, const SystemTuple& b, int depth_cap = 32);

/// Polyline through the vertices, vertex k at parameter k/(N-1).
/// Every vertex and 8 points per edge are checked exactly; where adjacent
/// samples disagree on label or on the sign of the resultant (Res(f1, f2)
/// for (2, 1), Res(f, f') for (1, 2)) the crossing is bisected to width
/// <= 1e-6. Certification is pointwise: nothing is claimed between samples.
PathInSpace certify_polyline(const std::vector<SystemTuple>& vertices, int depth_cap = 32);

struct SweepReport {
    Case c = Case::C21;
    int d = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    long failures = 0;
    long rejected = 0;
    std::map<int, long> support;
    std::map<std::string, long> checks;
    double max_degree_deviation = 0;
    std::vector<std::string> failure_notes;
};

/// Runs the case's invariant suite on `trials` seeded random members.
/// Failures are recorded, never thrown.
SweepReport invariant_sweep(Case c, int d, long trials, std::uint64_t seed);

Json to_json(const SweepReport& r);
Json to_json(const PathInSpace& p);

}  // namespace polyspace::harness
