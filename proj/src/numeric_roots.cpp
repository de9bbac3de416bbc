#include "polyspace/numeric_roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "polyspace/exactalg.hpp"

namespace polyspace {

namespace {

using cld = std::complex<long double>;

long double rational_to_ld(const Rational& q) {
    const double hi = q.get_d();
    Rational rest = q - Rational(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

cld scalar_to_ld(const Rational& q) { return {rational_to_ld(q), 0.0L}; }
cld scalar_to_ld(const GaussianRational& z) { return {rational_to_ld(z.re), rational_to_ld(z.im)}; }

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
}

}  // namespace

template <class C>
std::vector<std::complex<long double>> to_long_double_coefficients(const Polynomial<C>& f) {
    std::vector<cld> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) out.push_back(scalar_to_ld(c));
    return out;
}

std::vector<std::complex<long double>> aberth_roots(const std::vector<std::complex<long double>>& ascending,
                                                    std::uint64_t restart_seed, int max_iterations) {
    const int d = static_cast<int>(ascending.size()) - 1;
    if (d < 1) throw DomainError("aberth_roots: polynomial must have degree >= 1");
    const cld lead = ascending.back();
    std::vector<cld> a(ascending.size());
    for (std::size_t k = 0; k < ascending.size(); ++k) a[k] = ascending[k] / lead;
    std::vector<long double> abs_a(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) abs_a[k] = std::abs(a[k]);

    // derivative coefficients
    std::vector<cld> da(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) da[k - 1] = a[k] * static_cast<long double>(k);

    // Fujiwara-type radius around the centroid for the starting circle
    const cld centroid = -a[d - 1] / static_cast<long double>(d);
    long double radius = 0;
    for (int k = 1; k <= d; ++k) radius = std::max(radius, std::pow(abs_a[d - k], 1.0L / k));
    radius = std::max(radius, 1e-3L);

    const long double offset =
        0.4L + static_cast<long double>(splitmix(restart_seed) % 1000003ULL) / 1000003.0L * 2.0L * std::numbers::pi_v<long double>;
    std::vector<cld> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const long double ang = offset + 2.0L * std::numbers::pi_v<long double> * k / d;
        z[k] = centroid + std::polar(radius, ang);
    }

    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<bool> done(static_cast<std::size_t>(d), false);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool all_done = true;
        for (int k = 0; k < d; ++k) {
            if (done[k]) continue;
            const cld p = horner(a, z[k]);
            long double scale = 0;
            const long double r = std::abs(z[k]);
            for (int i = d; i >= 0; --i) scale = scale * r + abs_a[i];
            if (std::abs(p) <= 16.0L * d * eps * scale) {
                done[k] = true;
                continue;
            }
            all_done = false;
            const cld dp = horner(da, z[k]);
            if (dp == cld(0)) {
                z[k] += cld(radius * 1e-6L, radius * 1e-6L);
                continue;
            }
            const cld w = p / dp;
            cld s = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            const cld step = w / (1.0L - w * s);
            z[k] -= step;
            if (std::abs(step) <= 2.0L * eps * (std::abs(z[k]) + radius)) done[k] = true;
        }
        if (all_done) return z;
    }
    throw ConvergenceError("aberth_roots: no convergence within iteration cap");
}

std::vector<RootCluster> cluster_roots(const std::vector<std::complex<long double>>& roots, double tol) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](std::size_t i, std::size_t j) { parent[find_root(parent, i)] = find_root(parent, j); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= 2.0L * tol) unite(i, j);

    while (true) {
        std::vector<RootCluster> out;
        std::vector<std::size_t> rep;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t r = find_root(parent, i);
            if (std::find(rep.begin(), rep.end(), r) == rep.end()) rep.push_back(r);
        }
        for (std::size_t r : rep) {
            cld sum = 0;
            int count = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (find_root(parent, i) == r) {
                    sum += roots[i];
                    ++count;
                }
            const cld c = sum / static_cast<long double>(count);
            long double rad = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (find_root(parent, i) == r) rad = std::max(rad, std::abs(roots[i] - c));
            out.push_back({{static_cast<double>(c.real()), static_cast<double>(c.imag())}, static_cast<double>(rad), count});
        }
        // merge any clusters whose disks still touch
        bool merged = false;
        for (std::size_t i = 0; i < out.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < out.size() && !merged; ++j)
                if (std::abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius) {
                    unite(rep[i], rep[j]);
                    merged = true;
                }
        if (!merged) return out;
    }
}

template <class C>
std::vector<RootCluster> complex_roots_numeric(const Polynomial<C>& f, double tol, std::uint64_t restart_seed) {
    if (f.degree() < 1) throw DomainError("complex_roots_numeric: polynomial must have degree >= 1");
    if (!(tol > 0)) throw DomainError("complex_roots_numeric: tol must be positive");
    const auto coeffs = to_long_double_coefficients(f);
    return cluster_roots(aberth_roots(coeffs, restart_seed), tol);
}

template <class C>
std::vector<RootCluster> complex_roots_numeric(const Polynomial<C>& f) {
    if (f.degree() < 1) throw DomainError("complex_roots_numeric: polynomial must have degree >= 1");
    return complex_roots_numeric(f, 1e-8 * cauchy_root_bound(f).get_d());
}

template std::vector<std::complex<long double>> to_long_double_coefficients(const QPoly&);
template std::vector<std::complex<long double>> to_long_double_coefficients(const GPoly&);
template std::vector<RootCluster> complex_roots_numeric(const QPoly&, double, std::uint64_t);
template std::vector<RootCluster> complex_roots_numeric(const GPoly&, double, std::uint64_t);
template std::vector<RootCluster> complex_roots_numeric(const QPoly&);
template std::vector<RootCluster> complex_roots_numeric(const GPoly&);

}  // namespace polyspace
