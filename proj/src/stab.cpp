#include "polyspace/stab.hpp"

#include "polyspace/case12.hpp"
#include "polyspace/mapdeg.hpp"

namespace polyspace {

namespace {

Rational bound_nonconstant(const std::vector<QPoly>& fs) {
    std::vector<QPoly> kept;
    for (const auto& f : fs)
        if (f.degree() >= 1) kept.push_back(f);
    if (kept.empty()) return 0;
    return cauchy_root_bound(std::span<const QPoly>(kept));
}

Rational bound_nonconstant(const std::vector<GPoly>& fs) {
    std::vector<GPoly> kept;
    for (const auto& f : fs)
        if (f.degree() >= 1) kept.push_back(f);
    if (kept.empty()) return 0;
    return cauchy_root_bound(std::span<const GPoly>(kept));
}

Rational next_integer_above(const Rational& b) {
    mpz_class q = b.get_num() / b.get_den();
    return Rational(q + 1);
}

const SystemTuple& require_12(const SystemTuple& t) {
    if (t.m() != 1 || t.n() != 2 || !t.has_real_coefficients())
        throw DomainError("stabilize: case 12 expects a real tuple with m = 1, n = 2");
    return t;
}

}  // namespace

Rational stabilize_31_bound(const SystemTuple& t) {
    if (t.m() != 3 || t.n() != 1) throw DomainError("stabilize_31: expected m = 3, n = 1");
    const auto f = t.real_polys();
    return bound_nonconstant({f[0], f[1], f[2], f[1] - f[0], f[2] - f[0]});
}

SystemTuple stabilize_31(const SystemTuple& t, const Rational& T) {
    if (t.m() != 3 || t.n() != 1) throw DomainError("stabilize_31: expected m = 3, n = 1");
    if (!t.has_real_coefficients()) throw DomainError("stabilize_31: coefficients must be real");
    if (!t.equal_degrees()) throw DomainError("stabilize_31: degrees must agree");
    if (!is_member(t)) throw DomainError("stabilize_31: input is not a member");
    if (!(T > stabilize_31_bound(t))) throw DomainError("stabilize_31: T must exceed the root bound");
    const auto f = t.real_polys();
    const QPoly g = f[0] * QPoly::linear(T);
    SystemTuple out = SystemTuple::real({g, g + (f[1] - f[0]), g + (f[2] - f[0])}, 1);
    if (!is_member(out)) throw MembershipViolation("stabilize_31: output left the space");
    return out;
}

case31::Model31 stabilize_31_model(const case31::Model31& m, const Rational& T) {
    case31::validate(m);
    if (!(T > bound_nonconstant(std::vector<QPoly>{m.f1, m.f2, m.f3})))
        throw DomainError("stabilize_31_model: T must exceed the root bound");
    case31::Model31 out{m.f1 * QPoly::linear(T), m.f2, m.f3};
    return out;
}

SystemTuple stabilize_multiplicity(const SystemTuple& t, const Rational& T) {
    if (t.n() < 2) throw DomainError("stabilize_multiplicity: n = 1 would create a forbidden common root");
    if (!is_member(t)) throw DomainError("stabilize_multiplicity: input is not a member");
    if (!(T > bound_nonconstant(t.polys()))) throw DomainError("stabilize_multiplicity: T must exceed the root bound");
    const GPoly lin = GPoly::linear(GaussianRational(T));
    std::vector<GPoly> out;
    for (const auto& f : t.polys()) out.push_back(f * lin);
    SystemTuple s(std::move(out), t.n(), t.field());
    if (!is_member(s)) throw MembershipViolation("stabilize_multiplicity: output left the space");
    return s;
}

Rational default_T(StabCase c, const SystemTuple& t) {
    switch (c) {
        case StabCase::Case31: return next_integer_above(stabilize_31_bound(t));
        case StabCase::Case12: return next_integer_above(cauchy_root_bound(require_12(t).real_polys()[0]));
        case StabCase::Multiplicity: return next_integer_above(bound_nonconstant(t.polys()));
    }
    throw DomainError("default_T: unknown case");
}

StabilizationReport stabilize_report(StabCase c, const SystemTuple& t, const Rational& T) {
    StabilizationReport r{{c, std::nullopt}, {c, std::nullopt}, T, is_member(t), false, t};
    switch (c) {
        case StabCase::Case31:
            r.output = stabilize_31(t, T);
            break;
        case StabCase::Case12: {
            const QPoly f = require_12(t).real_polys()[0];
            r.input_label.j = case12::component_of(f).j;
            const QPoly g = case12::stabilize(f, T);
            r.output = SystemTuple::real({g}, 2);
            r.output_label.j = case12::component_of(g).j;
            break;
        }
        case StabCase::Multiplicity:
            r.output = stabilize_multiplicity(t, T);
            break;
    }
    r.member_out = is_member(r.output);
    if (!r.member_out) throw MembershipViolation("stabilize: output left the space");
    return r;
}

std::string to_string(StabCase c) {
    switch (c) {
        case StabCase::Case31: return "31";
        case StabCase::Case12: return "12";
        case StabCase::Multiplicity: return "mult";
    }
    return "?";
}

}  // namespace polyspace
