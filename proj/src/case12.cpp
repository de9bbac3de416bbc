#include "polyspace/case12.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyspace/numeric_roots.hpp"

namespace polyspace::case12 {

namespace {

void require_squarefree_monic(const QPoly& f) {
    if (f.degree() < 1 || !f.is_monic()) throw DomainError("case12: f must be monic of degree >= 1");
    if (gcd_exact(f, derivative(f)).degree() > 0) throw DomainError("case12: f must be squarefree");
}

std::vector<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& r : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return c;
}

}  // namespace

ComponentLabel component_of(const QPoly& f) {
    require_squarefree_monic(f);
    return {(f.degree() - count_real_roots(f)) / 2};
}

HalfPlaneConfig to_configuration(const QPoly& f) {
    const int j = component_of(f).j;
    HalfPlaneConfig out;
    for (auto& r : real_roots_exact(f)) {
        refine(r, Rational(1, 1ul << 60));
        out.real_points.push_back(r.approx());
    }
    if (j == 0) return out;
    const auto clusters = complex_roots_numeric(f, 1e-10 * cauchy_root_bound(f).get_d());
    std::vector<RootCluster> upper;
    for (const auto& c : clusters)
        if (c.center.imag() > 0) upper.push_back(c);
    // the j non-real roots with Im > 0 are the j clusters of largest imaginary part
    std::sort(upper.begin(), upper.end(), [](const RootCluster& a, const RootCluster& b) { return a.center.imag() > b.center.imag(); });
    if (static_cast<int>(upper.size()) < j) throw ConvergenceError("to_configuration: lost non-real roots");
    for (int k = 0; k < j; ++k) out.points.push_back(upper[k].center);
    return out;
}

std::vector<double> reconstruct(const HalfPlaneConfig& config) {
    std::vector<std::complex<double>> roots;
    for (double x : config.real_points) roots.emplace_back(x, 0.0);
    for (const auto& a : config.points) {
        roots.push_back(a);
        roots.push_back(std::conj(a));
    }
    std::vector<double> out;
    for (const auto& c : poly_from_roots(roots)) out.push_back(c.real());
    return out;
}

std::optional<std::complex<double>> electric_field(const std::vector<std::complex<double>>& points,
                                                   std::complex<double> alpha) {
    std::complex<double> acc = 1.0;
    for (const auto& a : points) {
        if (alpha == a) return std::nullopt;
        acc += 1.0 / (alpha - a);
    }
    return acc;
}

MapDegreeResult electric_degree(const std::vector<std::complex<double>>& points) {
    // f and f + f' as coefficient vectors; lambda_1 f + lambda_2 (f + f')
    const auto f = poly_from_roots(points);
    std::vector<std::complex<double>> g = f;
    for (std::size_t k = 1; k < f.size(); ++k) g[k - 1] += static_cast<double>(k) * f[k];
    const std::complex<double> l1(0.6180339887, -0.2718281828);
    const std::complex<double> l2(0.3141592653, 0.5772156649);
    std::vector<std::complex<double>> p(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) p[k] = l1 * f[k] + l2 * g[k];
    if (p.size() == 1) return {0, 0.0, 0, 0.0};

    double bound = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) bound = std::max(bound, std::abs(p[k] / p.back()));
    double radius = 2 * (bound + 1);
    for (int attempt = 0;; ++attempt) {
        try {
            const auto w = winding_detailed([&](double th) { return horner(p, std::polar(radius, th)); },
                                            kDefaultRefinementCap, 256);
            return {w.winding, w.raw_turns, w.samples, radius};
        } catch (const WindingError&) {
            if (attempt >= 5) throw;
            radius *= 2;
        }
    }
}

WindingResult abelian_braid_invariant(const ConfigLoop& loop, std::size_t refinement_cap) {
    constexpr double two_pi = 2 * std::numbers::pi;
    auto start = loop(0.0);
    auto end = loop(two_pi);
    if (start.size() != end.size()) throw DomainError("abelian_braid_invariant: point count changes along the loop");
    // closed as an unordered set
    std::vector<bool> used(end.size(), false);
    for (const auto& a : start) {
        std::size_t best = end.size();
        double dist = 0;
        for (std::size_t i = 0; i < end.size(); ++i) {
            if (used[i]) continue;
            const double dd = std::abs(a - end[i]);
            if (best == end.size() || dd < dist) {
                best = i;
                dist = dd;
            }
        }
        if (best == end.size() || dist > 1e-9 * (1 + std::abs(a)))
            throw DomainError("abelian_braid_invariant: loop does not close up as a configuration");
        used[best] = true;
    }
    // at theta = 2pi evaluate the start configuration so the discriminant closes exactly
    return winding_detailed(
        [&](double theta) {
            const auto pts = theta >= two_pi ? start : loop(theta);
            std::complex<double> disc = 1.0;
            for (std::size_t k = 0; k < pts.size(); ++k)
                for (std::size_t l = k + 1; l < pts.size(); ++l) {
                    const auto diff = pts[k] - pts[l];
                    disc *= diff * diff;
                }
            return disc;
        },
        refinement_cap, 256);
}

ConfigLoop half_twist(std::vector<std::complex<double>> base, std::size_t p, std::size_t q) {
    if (p >= base.size() || q >= base.size() || p == q) throw DomainError("half_twist: bad point indices");
    return [base = std::move(base), p, q](double theta) {
        auto pts = base;
        const auto mid = 0.5 * (base[p] + base[q]);
        const auto rot = std::polar(1.0, theta / 2);  // half turn over the loop
        pts[p] = mid + rot * (base[p] - mid);
        pts[q] = mid + rot * (base[q] - mid);
        return pts;
    };
}

QPoly stabilize(const QPoly& f, const Rational& T) {
    require_squarefree_monic(f);
    if (!(T > cauchy_root_bound(f))) throw DomainError("stabilize: T must exceed the Cauchy root bound of f");
    return f * QPoly({T * T, Rational(0), Rational(1)});
}

Rational default_stabilization_parameter(const QPoly& f) { return cauchy_root_bound(f) + 1; }

QPoly random_member(int d, Rng& rng, long* rejected) {
    if (d < 1) throw DomainError("case12::random_member: d must be >= 1");
    while (true) {
        std::vector<Rational> c;
        for (int i = 0; i < d; ++i) c.push_back(rng.rational(100, 10));
        c.push_back(Rational(1));
        QPoly f(std::move(c));
        if (gcd_exact(f, derivative(f)).degree() == 0) return f;
        if (rejected) ++*rejected;
    }
}

QPoly representative(int d, int j) {
    if (d < 1 || j < 0 || 2 * j > d) throw DomainError("case12::representative: need 0 <= j <= d/2");
    QPoly f = QPoly::constant(1);
    for (int i = 0; i < d - 2 * j; ++i) f *= QPoly::linear(Rational(i));
    for (int k = 0; k < j; ++k) f *= QPoly({Rational(k * k + 1), Rational(-2 * k), Rational(1)});
    return f;
}

CensusResult census(int d, long samples, std::uint64_t seed) {
    if (d < 1) throw DomainError("case12::census: d must be >= 1");
    if (samples < 1) throw DomainError("case12::census: samples must be >= 1");
    CensusResult out;
    for (long i = 0; i < samples; ++i) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        ++out.counts[component_of(random_member(d, rng, &out.rejected)).j];
    }
    return out;
}

}  // namespace polyspace::case12
