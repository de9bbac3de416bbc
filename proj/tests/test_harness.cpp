#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polyspace/case21.hpp"
#include "polyspace/harness.hpp"

using namespace polyspace;
using namespace polyspace::harness;
using namespace oracle::ops;

namespace {

std::set<int> keys(const std::map<int, long>& m) {
    std::set<int> out;
    for (const auto& [k, v] : m) out.insert(k);
    return out;
}

}  // namespace

TEST_CASE("case tags") {
    for (const auto c : {Case::C21, Case::C31, Case::C12, Case::C13, Case::C22}) CHECK(case_from_string(to_string(c)) == c);
    CHECK(shape(Case::C31) == std::pair{3, 1});
    CHECK(shape(Case::C12) == std::pair{1, 2});
    CHECK_THROWS_AS(case_from_string("11"), DomainError);
}

TEST_CASE("random members") {
    const auto a = random_member(Case::C12, 4, 7);
    CHECK(is_member(a));
    CHECK(a.degree() == 4);
    CHECK(a == random_member(Case::C12, 4, 7));
    CHECK_FALSE(a == random_member(Case::C12, 4, 8));
    CHECK_THROWS_AS(random_member(Case::C12, 0, 7), DomainError);

    Rng rng(173);
    for (int i = 0; i < 200; ++i) {
        const int d = static_cast<int>(rng.uniform_int(1, 6));
        const auto t = random_member(2, 2, d, FieldTag::GaussianComplex, rng);
        CHECK(is_member(t));
        CHECK(t.degree() == d);
        for (const auto& f : t.polys()) {
            CHECK(f.is_monic());
            for (int k = 0; k < d; ++k) {
                for (const auto& part : {f[k].re, f[k].im}) {
                    CHECK(abs(part.get_num()) <= 100);
                    CHECK(part.get_den() <= 10);
                }
            }
        }
    }
    CHECK(is_member(random_member(Case::C31, 1, 3)));
}

TEST_CASE("constant path") {
    const auto a = case21::representative(3, 1);
    const auto p = certify_path(a, a);
    CHECK(p.certified);
    CHECK_FALSE(p.violation.has_value());
    REQUIRE(p.samples.size() >= 2);
    CHECK(p.samples.front().t == 0);
    CHECK(p.samples.back().t == 1);
    for (const auto& s : p.samples) CHECK(s.label == 1);
    CHECK(std::is_sorted(p.samples.begin(), p.samples.end(), [](const auto& x, const auto& y) { return x.t < y.t; }));
}

TEST_CASE("paths between the d = 2 representatives with labels 0 and 2") {
    const auto a = case21::representative(2, 0), b = case21::representative(2, 2);
    const auto p = certify_path(a, b);
    CHECK_FALSE(p.certified);
    REQUIRE(p.violation.has_value());
    const auto [lo, hi] = *p.violation;
    CHECK(hi - lo <= Rational(1, 1000000));
    // gcd-degree oracle: a common root appears at some parameter in [lo, hi]
    const auto fl = interpolate(a, b, lo).real_polys(), fh = interpolate(a, b, hi).real_polys();
    const int sl = sign(resultant(fl[0], fl[1])), sh = sign(resultant(fh[0], fh[1]));
    CHECK((sl == 0 || sh == 0 || sl != sh));
}

TEST_CASE("an injected bad vertex always flips certification") {
    Rng rng(179);
    for (int i = 0; i < 100; ++i) {
        const int d = static_cast<int>(rng.uniform_int(1, 4));
        const int j = -d + 2 * static_cast<int>(rng.uniform_int(0, d));
        const auto a = case21::representative(d, j);
        REQUIRE(certify_path(a, a).certified);
        // planted common root
        const Rational alpha = oracle::Q(rng.uniform_int(-20, 20), 3);
        QPoly g = QPoly::linear(alpha), h = QPoly::linear(alpha);
        for (int k = 1; k < d; ++k) {
            g = g * QPoly::linear(Rational(k));
            h = h * QPoly::linear(Rational(-k));
        }
        const auto bad = SystemTuple::real({g, h}, 1);
        REQUIRE_FALSE(is_member(bad));
        const auto p = certify_polyline({a, bad, a});
        CHECK_FALSE(p.certified);
        REQUIRE(p.violation.has_value());
        // the path fails at the bad vertex at the latest
        CHECK(p.violation->first <= Rational(1, 2));
        bool vertex_flagged = false;
        for (const auto& smp : p.samples)
            if (smp.t == Rational(1, 2)) vertex_flagged = !smp.member;
        CHECK(vertex_flagged);
    }
}

TEST_CASE("sweeps") {
    const auto r21 = invariant_sweep(Case::C21, 3, 2000, 1);
    CHECK(r21.failures == 0);
    CHECK(keys(r21.support) == std::set<int>{-3, -1, 1, 3});
    long total = 0;
    for (const auto& [j, n] : r21.support) total += n;
    CHECK(total == 2000);

    const auto r12 = invariant_sweep(Case::C12, 6, 2000, 1);
    CHECK(r12.failures == 0);
    CHECK(keys(r12.support) == std::set<int>{0, 1, 2, 3});

    const auto r31 = invariant_sweep(Case::C31, 3, 500, 1);
    CHECK(r31.failures == 0);
    CHECK(r31.checks.at("r_tilde") == 500);

    for (const auto c : {Case::C13, Case::C22}) CHECK(invariant_sweep(c, 4, 100, 2).failures == 0);
    // illegal parameters are recorded, not thrown
    CHECK(invariant_sweep(Case::C21, 0, 10, 1).failures > 0);
}

TEST_CASE("sweep reports are byte-identical under the same seed") {
    for (const auto c : {Case::C21, Case::C31, Case::C12, Case::C13, Case::C22}) {
        const auto a = to_json(invariant_sweep(c, 3, 150, 42)).dump();
        const auto b = to_json(invariant_sweep(c, 3, 150, 42)).dump();
        CHECK(a == b);
        CHECK(a != to_json(invariant_sweep(c, 3, 150, 43)).dump());
    }
}

TEST_CASE("path report serialization") {
    const auto p = certify_path(case21::representative(2, 0), case21::representative(2, 2));
    const Json j = to_json(p);
    CHECK(j["certified"] == false);
    CHECK(j["samples"].size() == p.samples.size());
    CHECK(j.contains("violation"));
}
