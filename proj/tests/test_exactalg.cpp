#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "polyspace/exactalg.hpp"
#include "polyspace/numeric_roots.hpp"
#include "polyspace/random.hpp"

using namespace polyspace;
using oracle::Q;

namespace {

QPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

QPoly random_poly(Rng& rng, int max_deg) {
    const int d = static_cast<int>(rng.uniform_int(0, max_deg));
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(rng.rational(20, 6));
    if (c.back() == 0) c.back() = 1;
    return QPoly(std::move(c));
}

std::vector<Rational> random_rational_roots(Rng& rng, int k) {
    std::vector<Rational> r;
    for (int i = 0; i < k; ++i) r.push_back(Q(rng.uniform_int(-12, 12), 4));
    return r;
}

std::vector<Rational> multiset_intersection(std::vector<Rational> a, std::vector<Rational> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Rational> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("rationals are kept canonical") {
    const Rational q = parse_rational("-6/4");
    CHECK(q == Rational(-3, 2));
    CHECK(q.get_den() == 2);
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("derivative") {
    CHECK(derivative(P({0, 0, 1})) == P({0, 2}));
    CHECK(derivative(P({0, 0, 0, 1}), 2) == P({0, 6}));
    CHECK(derivative(P({5})).is_zero());
    CHECK_THROWS_AS(derivative(P({1, 1}), 0), DomainError);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const QPoly f = random_poly(rng, 8), g = random_poly(rng, 8);
        CHECK(derivative(f + g) == derivative(f) + derivative(g));
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd_exact(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(gcd_exact(P({0, 1}), P({1, 1})) == P({1}));
    const QPoly a = P({-1, 1}) * P({-1, 1}) * P({2, 1});
    const QPoly b = P({-1, 1}) * P({3, 1});
    CHECK(gcd_exact(a, b) == P({-1, 1}));
    CHECK(gcd_exact(QPoly(), P({2, 4})) == QPoly({Rational(1, 2), Rational(1)}));
}

TEST_CASE("gcd of factored products matches the root intersection") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const auto ra = random_rational_roots(rng, static_cast<int>(rng.uniform_int(1, 8)));
        const auto rb = random_rational_roots(rng, static_cast<int>(rng.uniform_int(1, 8)));
        const QPoly expected = oracle::from_roots(multiset_intersection(ra, rb));
        CHECK(gcd_exact(oracle::from_roots(ra), oracle::from_roots(rb)) == expected);
    }
}

TEST_CASE("gcd(f h, g h) = h gcd(f, g)") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const QPoly f = random_poly(rng, 5), g = random_poly(rng, 5);
        QPoly h = random_poly(rng, 3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        h = h.monic();
        CHECK(gcd_exact(f * h, g * h) == (h * gcd_exact(f, g)).monic());
    }
}

TEST_CASE("gcd over Gaussian rationals") {
    const GaussianRational i(Rational(0), Rational(1));
    const GPoly a = GPoly::linear(i) * GPoly::linear(GaussianRational(2));
    const GPoly b = GPoly::linear(i) * GPoly::linear(-i);
    CHECK(gcd_exact(a, b) == GPoly::linear(i));
}

TEST_CASE("resultant equals the product of g over the roots of f") {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto ra = random_rational_roots(rng, static_cast<int>(rng.uniform_int(1, 5)));
        const QPoly f = oracle::from_roots(ra);
        const QPoly g = random_poly(rng, 5);
        if (g.is_zero()) continue;
        Rational expected = 1;
        for (const auto& r : ra) expected *= g(r);
        CHECK(resultant(f, g) == expected);
    }
    CHECK(resultant(P({0, 1}), P({1, 1})) == 1);
    CHECK(resultant(P({-1, 0, 1}), P({-1, 1})) == 0);
}

TEST_CASE("squarefree decomposition") {
    const QPoly z = P({0, 1});
    auto sf = squarefree_decomposition(z * z * P({-1, 1}));
    REQUIRE(sf.size() == 2);
    std::map<int, QPoly> by_mult;
    for (const auto& f : sf) by_mult.emplace(f.multiplicity, f.factor);
    CHECK(by_mult.at(2) == z);
    CHECK(by_mult.at(1) == P({-1, 1}));

    sf = squarefree_decomposition(P({1, 0, 1}));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == P({1, 0, 1}));
    CHECK(sf[0].multiplicity == 1);

    sf = squarefree_decomposition(P({-2, 1}) * P({-2, 1}) * P({-2, 1}));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == P({-2, 1}));
    CHECK(sf[0].multiplicity == 3);
}

TEST_CASE("squarefree decomposition reconstructs its input") {
    Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        const auto roots = random_rational_roots(rng, static_cast<int>(rng.uniform_int(1, 9)));
        QPoly f = oracle::from_roots(roots) * Q(rng.uniform_int(1, 9), 7);
        if (rng.coin()) f = f * P({2, 0, 1});
        const auto sf = squarefree_decomposition(f);
        QPoly prod = QPoly::constant(f.leading());
        for (const auto& [g, k] : sf) {
            for (int e = 0; e < k; ++e) prod = prod * g;
            CHECK(gcd_exact(g, derivative(g)).degree() == 0);
        }
        CHECK(prod == f);
        for (std::size_t a = 0; a < sf.size(); ++a)
            for (std::size_t b = a + 1; b < sf.size(); ++b) CHECK(gcd_exact(sf[a].factor, sf[b].factor).degree() == 0);
    }
}

TEST_CASE("real roots of factored inputs") {
    auto rr = real_roots_exact(P({0, 1}) * P({-1, 1}) * P({-2, 1}));
    REQUIRE(rr.size() == 3);
    for (int k = 0; k < 3; ++k) {
        refine(rr[k], Rational(1, 1000));
        CHECK(rr[k].lo <= k);
        CHECK(rr[k].hi >= k);
        CHECK(rr[k].multiplicity == 1);
    }
    CHECK(real_roots_exact(P({1, 0, 1})).empty());
    rr = real_roots_exact(P({0, 0, -1, 1}));
    REQUIRE(rr.size() == 2);
    CHECK(rr[0].multiplicity == 2);
    CHECK(rr[1].multiplicity == 1);
    CHECK_THROWS_AS(real_roots_exact(QPoly()), DomainError);
}

TEST_CASE("real root isolation against planted roots") {
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        auto roots = random_rational_roots(rng, static_cast<int>(rng.uniform_int(1, 7)));
        // an irrational pair sqrt(c) and -sqrt(c)
        const long c = rng.uniform_int(2, 7);
        const bool irrational = rng.coin() && c != 4;
        QPoly f = oracle::from_roots(roots);
        if (irrational) f = f * P({-c, 0, 1});
        if (rng.coin()) f = f * P({3, 0, 1});

        std::map<Rational, int> planted;
        for (const auto& r : roots) ++planted[r];
        std::vector<std::pair<double, int>> expected;
        for (const auto& [r, k] : planted) expected.emplace_back(r.get_d(), k);
        if (irrational) {
            expected.emplace_back(std::sqrt(static_cast<double>(c)), 1);
            expected.emplace_back(-std::sqrt(static_cast<double>(c)), 1);
        }
        std::sort(expected.begin(), expected.end());

        auto got = real_roots_exact(f);
        REQUIRE(got.size() == expected.size());
        int total = 0;
        for (std::size_t k = 0; k < got.size(); ++k) {
            refine(got[k], Rational(1, 1 << 30));
            CHECK(got[k].approx() == doctest::Approx(expected[k].first).epsilon(1e-8));
            CHECK(got[k].multiplicity == expected[k].second);
            total += got[k].multiplicity;
            if (k > 0) CHECK(got[k - 1].hi < got[k].lo);
        }
        (void)total;
    }
}

TEST_CASE("Sturm count and sign change in each interval") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const QPoly f = random_poly(rng, 8);
        if (f.degree() < 1) continue;
        const auto seq = sturm_sequence(squarefree_part(f));
        const int predicted = sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
        const auto roots = real_roots_exact(f);
        CHECK(static_cast<int>(roots.size()) == predicted);
        for (const auto& r : roots) {
            if (r.is_exact()) {
                CHECK(r.factor(r.lo) == 0);
            } else {
                CHECK(sign(r.factor(r.lo)) * sign(r.factor(r.hi)) < 0);
            }
        }
    }
}

TEST_CASE("numeric roots of known polynomials") {
    auto c = complex_roots_numeric(P({1, 0, 1}), 1e-10);
    REQUIRE(c.size() == 2);
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.center.imag() < b.center.imag(); });
    CHECK(std::abs(c[0].center - std::complex<double>(0, -1)) < 1e-10);
    CHECK(std::abs(c[1].center - std::complex<double>(0, 1)) < 1e-10);

    c = complex_roots_numeric(P({1, -2, 1}), 1e-6);
    REQUIRE(c.size() == 1);
    CHECK(c[0].multiplicity == 2);
    CHECK(std::abs(c[0].center - 1.0) < 1e-6);

    c = complex_roots_numeric(P({-1, 0, 0, 1}));
    REQUIRE(c.size() == 3);
    for (const auto& r : c) CHECK(std::abs(std::pow(r.center, 3) - 1.0) < 1e-12);
}

TEST_CASE("numeric roots recover planted roots") {
    Rng rng(17);
    int agree = 0;
    const int trials = 1000;
    for (int i = 0; i < trials; ++i) {
        const int d = static_cast<int>(rng.uniform_int(1, 10));
        std::vector<GaussianRational> roots;
        while (static_cast<int>(roots.size()) < d) {
            GaussianRational r(Q(rng.uniform_int(-50, 50), 10), Q(rng.uniform_int(-50, 50), 10));
            bool close = false;
            for (const auto& s : roots) close = close || std::abs(to_complex(s - r)) < 0.1;
            if (!close) roots.push_back(r);
        }
        const double tol = 1e-8 * cauchy_root_bound(oracle::from_roots(roots)).get_d();
        const auto got = complex_roots_numeric(oracle::from_roots(roots));
        bool ok = static_cast<int>(got.size()) == d;
        for (const auto& r : roots) {
            bool hit = false;
            for (const auto& g : got) hit = hit || std::abs(g.center - to_complex(r)) < tol;
            ok = ok && hit;
        }
        agree += ok ? 1 : 0;
    }
    CHECK(agree >= 990);
}

TEST_CASE("cluster multiplicities sum to the degree") {
    Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        const QPoly f = random_poly(rng, 9);
        if (f.degree() < 1) continue;
        int total = 0;
        for (const auto& c : complex_roots_numeric(f)) total += c.multiplicity;
        CHECK(total == f.degree());
    }
}

TEST_CASE("Cauchy root bound") {
    CHECK(cauchy_root_bound(P({-3, 1})) == 4);
    CHECK(cauchy_root_bound(P({0, 0, 1})) == 1);
    CHECK(cauchy_root_bound(P({1, -2, 1})) == 3);
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const QPoly f = random_poly(rng, 8);
        if (f.degree() < 1) continue;
        const double R = cauchy_root_bound(f).get_d();
        for (const auto& c : complex_roots_numeric(f)) CHECK(std::abs(c.center) < R);
    }
}
