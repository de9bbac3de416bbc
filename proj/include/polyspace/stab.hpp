#pragma once

// Stabilization: raising the degree by adding roots from infinity. The
// parameter T is chosen per input, so none of these is one global map.

#include <optional>
#include <string>

#include "polyspace/case31.hpp"
#include "polyspace/nonres.hpp"

namespace polyspace {

enum class StabCase { Case31, Case12, Multiplicity };

struct StabLabel {
    StabCase tag = StabCase::Case31;
    std::optional<int> j;  // no component label in the (3,1) case
};

struct StabilizationReport {
    StabLabel input_label;
    StabLabel output_label;
    Rational T_used;
    bool member_in = false;
    bool member_out = false;
    SystemTuple output;
};

/// Cauchy bound over f1, f2, f3, f2 - f1, f3 - f1 (zero or constant entries skipped).
Rational stabilize_31_bound(const SystemTuple& t);

/// ((z - T) f1, (z - T) f1 + (f2 - f1), (z - T) f1 + (f3 - f1)). Requires a
/// real member with m = 3, n = 1 and T > stabilize_31_bound(t).
SystemTuple stabilize_31(const SystemTuple& t, const Rational& T);

/// (f1, u, v) -> ((z - T) f1, u, v). Requires T beyond the roots of f1, u, v.
case31::Model31 stabilize_31_model(const case31::Model31& m, const Rational& T);

/// Every f_k -> (z - T) f_k. Requires a member with n >= 2 and T above the
/// Cauchy bound of all polynomials.
SystemTuple stabilize_multiplicity(const SystemTuple& t, const Rational& T);

/// Runs the stabilization and records labels and membership on both sides.
/// (1, 2) tuples go through case12. Throws MembershipViolation if the output
/// leaves the space.
StabilizationReport stabilize_report(StabCase c, const SystemTuple& t, const Rational& T);

/// The smallest integer strictly above the relevant root bound.
Rational default_T(StabCase c, const SystemTuple& t);

std::string to_string(StabCase c);

}  // namespace polyspace
