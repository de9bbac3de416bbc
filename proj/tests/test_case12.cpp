#include <doctest.h>

#include <numbers>
#include <set>

#include "oracles.hpp"
#include "polyspace/case12.hpp"
#include "polyspace/harness.hpp"

using namespace polyspace;
using namespace polyspace::case12;
using namespace oracle::ops;
using cd = std::complex<double>;

namespace {

QPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

const QPoly z = P({0, 1});
constexpr double pi = std::numbers::pi;

// Random configuration of j points with Im > 0, pairwise at least 0.1 apart.
std::vector<cd> random_config(int j, Rng& rng) {
    std::vector<cd> pts;
    while (static_cast<int>(pts.size()) < j) {
        const cd a(rng.uniform(-3, 3), rng.uniform(0.2, 3));
        bool ok = true;
        for (const auto& b : pts) ok = ok && std::abs(a - b) > 0.1;
        if (ok) pts.push_back(a);
    }
    return pts;
}

// Cayley map of the upper half plane onto the unit disk.
cd cayley(cd a) { return (a - cd(0, 1)) / (a + cd(0, 1)); }

}  // namespace

TEST_CASE("component labels") {
    CHECK(component_of(z * z + 1).j == 1);
    CHECK(component_of((z * z + 1) * (z * z + 4) * (z - 1)).j == 2);
    CHECK(component_of(z * (z - 1) * (z - 2)).j == 0);
    CHECK_THROWS_AS(component_of(z * z), DomainError);
    CHECK_THROWS_AS(component_of(P({1, 2})), DomainError);
    CHECK_THROWS_AS(component_of(P({1})), DomainError);
}

TEST_CASE("configuration examples") {
    const auto a = to_configuration(z * z + 1);
    CHECK(a.real_points.empty());
    REQUIRE(a.points.size() == 1);
    CHECK(std::abs(a.points[0] - cd(0, 1)) < 1e-12);

    const auto b = to_configuration(z * z - 1);
    CHECK(b.points.empty());
    CHECK(b.real_points == std::vector<double>{-1, 1});

    const auto c = to_configuration((z * z + 1) * (z * z + 4) * (z - 1));
    CHECK(c.real_points == std::vector<double>{1});
    REQUIRE(c.points.size() == 2);
    for (const auto& p : c.points) CHECK(p.imag() > 0);
}

TEST_CASE("configuration round trip") {
    Rng rng(131);
    for (int i = 0; i < 500; ++i) {
        const int d = static_cast<int>(rng.uniform_int(1, 10));
        const QPoly f = random_member(d, rng);
        const auto cfg = to_configuration(f);
        CHECK(static_cast<int>(cfg.points.size()) == component_of(f).j);
        CHECK(std::is_sorted(cfg.real_points.begin(), cfg.real_points.end()));
        const auto g = reconstruct(cfg);
        REQUIRE(static_cast<int>(g.size()) == d + 1);
        double scale = 0, err = 0;
        for (int k = 0; k <= d; ++k) {
            scale = std::max(scale, std::abs(f[k].get_d()));
            err = std::max(err, std::abs(g[k] - f[k].get_d()));
        }
        CHECK(err <= 1e-8 * scale);
    }
}

TEST_CASE("electric field") {
    CHECK(electric_field({}, cd(0.3, 7)) == cd(1));
    CHECK(electric_field({cd(0)}, cd(1)) == cd(2));
    CHECK_FALSE(electric_field({cd(0, 1), cd(2, 1)}, cd(2, 1)).has_value());

    Rng rng(137);
    for (int i = 0; i < 100; ++i) {
        const auto pts = random_config(static_cast<int>(rng.uniform_int(0, 6)), rng);
        for (int k = 0; k < 100; ++k) {
            const cd alpha(rng.uniform(-4, 4), rng.uniform(-4, 4));
            // f and f' from the factored form, in extended precision
            std::complex<long double> fa = 1, dfa = 0;
            for (const auto& a : pts) {
                const std::complex<long double> x = std::complex<long double>(alpha) - std::complex<long double>(a);
                dfa = dfa * x + fa;
                fa *= x;
            }
            const cd expected(std::complex<long double>(1) + dfa / fa);
            const auto got = electric_field(pts, alpha);
            REQUIRE(got.has_value());
            CHECK(std::abs(*got - expected) <= 1e-12 * std::abs(expected));
        }
    }
}

TEST_CASE("electric degree") {
    CHECK(electric_degree({}).degree == 0);
    CHECK(electric_degree({cd(0, 1), cd(-1, 1)}).degree == 2);
    CHECK(electric_degree({cd(0, 3)}).degree == 1);

    Rng rng(139);
    for (int i = 0; i < 300; ++i) {
        const int j = static_cast<int>(rng.uniform_int(0, 6));
        const auto r = electric_degree(random_config(j, rng));
        CHECK(r.degree == j);
        CHECK(std::abs(r.raw_turns - j) < 0.1);
    }
}

TEST_CASE("abelian braid invariant") {
    const std::vector<cd> base{cd(0, 1), cd(2, 1)};
    const auto twist = half_twist(base, 0, 1);
    CHECK(std::abs(twist(0) [0] - base[0]) < 1e-15);
    CHECK(abelian_braid_invariant(twist).winding == 1);
    CHECK(abelian_braid_invariant([&](double th) { return twist(2 * pi - th); }).winding == -1);
    CHECK(abelian_braid_invariant([&](double) { return base; }).winding == 0);
    // twice around is a full twist, exponent 2
    CHECK(abelian_braid_invariant([&](double th) { return th < pi ? twist(2 * th) : twist(2 * th - 2 * pi); }).winding == 2);
    CHECK_THROWS_AS(abelian_braid_invariant([&](double th) { return std::vector<cd>{cd(0, 1), cd(0, 1) + std::polar(1.0, th / 2)}; }),
                    DomainError);
    CHECK_THROWS(abelian_braid_invariant([](double) { return std::vector<cd>{cd(0, 1), cd(0, 1)}; }));

    Rng rng(149);
    int charted = 0;
    for (int i = 0; i < 100; ++i) {
        const int j = static_cast<int>(rng.uniform_int(2, 5));
        const auto pts = random_config(j, rng);
        const std::size_t p = static_cast<std::size_t>(rng.uniform_int(0, j - 1));
        std::size_t q = static_cast<std::size_t>(rng.uniform_int(0, j - 2));
        if (q >= p) ++q;
        const cd mid = 0.5 * (pts[p] + pts[q]);
        const double radius = 0.5 * std::abs(pts[p] - pts[q]);
        int enclosed = 0;
        bool near = false;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k == p || k == q) continue;
            const double r = std::abs(pts[k] - mid);
            near = near || std::abs(r - radius) < 0.05;
            enclosed += r < radius ? 1 : 0;
        }
        if (near) continue;
        const auto a = half_twist(pts, p, q);
        const auto b = half_twist(pts, q, p);
        const int wa = abelian_braid_invariant(a).winding;
        const int wb = abelian_braid_invariant(b).winding;
        // concatenation of the two loops based at the same configuration
        const int cat = abelian_braid_invariant([&](double th) { return th < pi ? a(2 * th) : b(2 * th - 2 * pi); }).winding;
        CHECK(cat == wa + wb);
        // each fixed point inside the swap circle is encircled once by the pair
        CHECK(wa == 1 + 2 * enclosed);
        CHECK(wb == wa);
        if (radius >= mid.imag()) continue;  // the loop leaves the half plane
        ++charted;
        // the exponent sum does not depend on the chosen chart of the half plane
        const int w_disk = abelian_braid_invariant([&](double th) {
                               auto v = a(th);
                               for (auto& x : v) x = cayley(x);
                               return v;
                           }).winding;
        CHECK(w_disk == wa);
    }
    CHECK(charted >= 20);
}

TEST_CASE("generator loop survives stabilization") {
    const std::vector<cd> base{cd(0, 1), cd(1, 1)};
    for (long T : {5L, 10L}) {
        std::vector<cd> stabilized = base;
        stabilized.emplace_back(0, static_cast<double>(T));
        CHECK(abelian_braid_invariant(half_twist(stabilized, 0, 1)).winding == 1);
    }
}

TEST_CASE("stabilization") {
    const Rational T10(10), T5(5);
    CHECK(stabilize(z * z + 1, T10) == (z * z + 1) * (z * z + 100));
    CHECK(component_of(stabilize(z * z + 1, T10)).j == 2);
    CHECK(stabilize(z - 1, T5) == (z - 1) * (z * z + 25));
    CHECK(component_of(stabilize(z - 1, T5)).j == 1);
    CHECK_THROWS_AS(stabilize(z * z + 1, Rational(1)), DomainError);
    CHECK_THROWS_AS(stabilize(z * z, T10), DomainError);

    Rng rng(151);
    for (int i = 0; i < 1000; ++i) {
        const int d = static_cast<int>(rng.uniform_int(1, 8));
        const QPoly f = random_member(d, rng);
        const QPoly g = stabilize(f, default_stabilization_parameter(f));
        CHECK(g.degree() == d + 2);
        CHECK(component_of(g).j == component_of(f).j + 1);
    }
}

TEST_CASE("representatives and census") {
    for (int d = 1; d <= 8; ++d) {
        for (int j = 0; j <= d / 2; ++j) {
            const QPoly f = representative(d, j);
            CHECK(f.degree() == d);
            CHECK(component_of(f).j == j);
        }
        CHECK_THROWS_AS(representative(d, d / 2 + 1), DomainError);
        const auto r = census(d, 2000, static_cast<std::uint64_t>(d));
        std::set<int> support;
        long total = 0;
        for (const auto& [j, count] : r.counts) {
            support.insert(j);
            total += count;
        }
        CHECK(total == 2000);
        CHECK(*support.rbegin() <= d / 2);
        CHECK(*support.begin() >= 0);
    }
    CHECK(census(5, 300, 4).counts == census(5, 300, 4).counts);
}

TEST_CASE("label is constant along certified paths") {
    Rng rng(157);
    int same = 0, cross = 0;
    for (int i = 0; i < 400 && (same < 100 || cross < 100); ++i) {
        const int d = static_cast<int>(rng.uniform_int(2, 5));
        const auto a = SystemTuple::real({random_member(d, rng)}, 2);
        const auto b = SystemTuple::real({random_member(d, rng)}, 2);
        const int ja = component_of(a.real_polys()[0]).j, jb = component_of(b.real_polys()[0]).j;
        const auto path = harness::certify_path(a, b);
        if (ja == jb && path.certified) {
            ++same;
            for (const auto& s : path.samples) CHECK(s.label == ja);
        } else if (ja != jb) {
            ++cross;
            CHECK_FALSE(path.certified);
            REQUIRE(path.violation.has_value());
            const auto [lo, hi] = *path.violation;
            CHECK(hi - lo <= Rational(1, 1000000));
            const QPoly fl = harness::interpolate(a, b, lo).real_polys()[0];
            const QPoly fh = harness::interpolate(a, b, hi).real_polys()[0];
            const int sl = sign(resultant(fl, derivative(fl))), sh = sign(resultant(fh, derivative(fh)));
            CHECK((sl == 0 || sh == 0 || sl != sh));
        }
    }
    CHECK(same >= 50);
    CHECK(cross >= 100);
}
