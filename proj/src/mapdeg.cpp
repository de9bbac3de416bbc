#include "polyspace/mapdeg.hpp"

#include <cmath>
#include <numbers>

#include "polyspace/random.hpp"

namespace polyspace {

namespace {

constexpr double kPi = std::numbers::pi;

bool usable(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()) && v != 0.0; }

}  // namespace

ArgumentChange argument_change(const PathFn& path, double a, double b, std::size_t refinement_cap, int initial_steps) {
    if (initial_steps < 1) initial_steps = 1;
    struct Node {
        double s;
        std::complex<double> v;
    };
    auto sample = [&](double s) {
        const auto v = path(s);
        if (!usable(v)) throw WindingError("argument_change: path vanishes (or is not finite) at parameter " + std::to_string(s));
        return v;
    };

    ArgumentChange out;
    std::vector<Node> stack;
    Node left{a, sample(a)};
    out.samples = 1;
    for (int k = 1; k <= initial_steps; ++k) {
        const double s = k == initial_steps ? b : a + (b - a) * k / initial_steps;
        stack.push_back({s, sample(s)});
        ++out.samples;
        // process [left, stack.back()] depth-first so the sum runs left to right
        while (!stack.empty()) {
            const Node right = stack.back();
            const double jump = std::arg(right.v / left.v);
            const double mid = 0.5 * (left.s + right.s);
            const bool splittable = mid != left.s && mid != right.s;
            if (std::abs(jump) < kPi / 2 && !splittable) {
                out.radians += jump;
                left = right;
                stack.pop_back();
                continue;
            }
            if (out.samples >= refinement_cap)
                throw WindingError("argument_change: refinement cap exceeded near parameter " + std::to_string(left.s));
            if (!splittable)
                throw WindingError("argument_change: step cannot be refined near parameter " + std::to_string(left.s));
            const Node m{mid, sample(mid)};
            ++out.samples;
            if (std::abs(jump) < kPi / 2) {
                // a small jump is only trusted if the midpoint confirms it; a
                // near-full turn between samples would otherwise alias
                const double j1 = std::arg(m.v / left.v), j2 = std::arg(right.v / m.v);
                if (std::abs(j1) < kPi / 2 && std::abs(j2) < kPi / 2 && std::abs(j1 + j2 - jump) < 1e-9) {
                    out.radians += jump;
                    left = right;
                    stack.pop_back();
                    continue;
                }
            }
            stack.push_back(m);
        }
    }
    return out;
}

WindingResult winding_detailed(const PathFn& loop, std::size_t refinement_cap, int initial_steps) {
    const auto change = argument_change(loop, 0.0, 2 * kPi, refinement_cap, initial_steps);
    WindingResult r;
    r.raw_turns = change.radians / (2 * kPi);
    r.winding = static_cast<int>(std::lround(r.raw_turns));
    r.samples = change.samples;
    return r;
}

bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b, double rel_tol) {
    if (a.coords.size() != b.coords.size()) return false;
    // best scalar c with b ~ c a, then compare the residual to |b|
    std::complex<double> num = 0;
    double aa = 0;
    double bb = 0;
    for (std::size_t k = 0; k < a.coords.size(); ++k) {
        num += std::conj(a.coords[k]) * b.coords[k];
        aa += std::norm(a.coords[k]);
        bb += std::norm(b.coords[k]);
    }
    if (aa == 0 || bb == 0) return aa == bb;
    const std::complex<double> c = num / aa;
    double res = 0;
    for (std::size_t k = 0; k < a.coords.size(); ++k) res += std::norm(b.coords[k] - c * a.coords[k]);
    return std::sqrt(res) <= rel_tol * std::sqrt(bb);
}

ProjectivePoint conjugate(const ProjectivePoint& p) {
    ProjectivePoint q = p;
    for (auto& c : q.coords) c = std::conj(c);
    return q;
}

NaturalMap::NaturalMap(const SystemTuple& t) {
    (void)t.degree();  // equal degrees required
    for (const auto& f : t.polys())
        for (const auto& component : jet(f, t.n())) jets_.push_back(to_complex_coefficients(component));
}

ProjectivePoint NaturalMap::operator()(std::optional<std::complex<double>> alpha) const {
    ProjectivePoint p;
    p.coords.reserve(jets_.size());
    if (!alpha) {
        p.coords.assign(jets_.size(), {1.0, 0.0});
        return p;
    }
    bool all_small = true;
    for (const auto& c : jets_) {
        p.coords.push_back(horner(c, *alpha));
        if (std::abs(p.coords.back()) >= 1e-13) all_small = false;
    }
    if (all_small) throw MembershipViolation("natural map: zero vector (tuple is not a member)");
    return p;
}

MapDegreeResult map_degree(const SystemTuple& t, const std::vector<std::complex<double>>& lambda) {
    const NaturalMap map(t);
    const auto& jets = map.jet_coefficients();
    if (lambda.size() != jets.size()) throw DomainError("map_degree: covector must have m*n entries");

    // P(z) = sum_i lambda_i J_i(z)
    std::vector<std::complex<double>> p(jets.front().size(), 0.0);
    double lambda_scale = 0;
    for (std::size_t i = 0; i < jets.size(); ++i) {
        lambda_scale = std::max(lambda_scale, std::abs(lambda[i]));
        for (std::size_t k = 0; k < jets[i].size(); ++k) p[k] += lambda[i] * jets[i][k];
    }
    const std::complex<double> lead = p.back();
    if (std::abs(lead) <= 1e-8 * lambda_scale) throw DomainError("map_degree: degenerate covector (sum of entries ~ 0)");
    double p_bound = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) p_bound = std::max(p_bound, std::abs(p[k] / lead));
    p_bound += 1;

    const double tuple_bound = cauchy_root_bound(std::span<const GPoly>(t.polys())).get_d();
    double radius = 2 * std::max(tuple_bound, p_bound);
    for (int attempt = 0;; ++attempt) {
        try {
            const auto w = winding_detailed(
                [&](double theta) { return horner(p, std::polar(radius, theta)); }, kDefaultRefinementCap, 256);
            return {w.winding, w.raw_turns, w.samples, radius};
        } catch (const WindingError&) {
            if (attempt >= 5) throw;
            radius *= 2;
        }
    }
}

MapDegreeResult map_degree(const SystemTuple& t, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t dim = static_cast<std::size_t>(t.m() * t.n());
    for (int attempt = 0;; ++attempt) {
        std::vector<std::complex<double>> lambda;
        for (std::size_t i = 0; i < dim; ++i) lambda.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        try {
            return map_degree(t, lambda);
        } catch (const DomainError&) {
            if (attempt >= 10) throw;
        }
    }
}

Rp1DegreeResult rp1_degree_detailed(const QPoly& f1, const QPoly& f2, std::size_t refinement_cap) {
    const int d = f1.degree();
    if (d < 1 || f2.degree() != d || !f1.is_monic() || !f2.is_monic())
        throw DomainError("rp1_degree: f1, f2 must be monic of the same degree >= 1");
    if (gcd_exact(f1, f2).degree() > 0) throw DomainError("rp1_degree: f1 and f2 share a root");

    std::vector<double> a1;
    std::vector<double> a2;
    for (int k = 0; k <= d; ++k) {
        a1.push_back(f1[k].get_d());
        a2.push_back(f2[k].get_d());
    }
    // sum_k a_k sin^k cos^(d-k), by homogeneous Horner
    auto homog = [d](const std::vector<double>& a, double x, double y) {
        double acc = a[d];
        double ypow = 1;
        for (int k = d - 1; k >= 0; --k) {
            ypow *= y;
            acc = acc * x + a[k] * ypow;
        }
        return acc;
    };
    const PathFn path = [&](double s) {
        const double x = std::sin(s);
        const double y = std::cos(s);
        return std::complex<double>(homog(a1, x, y), homog(a2, x, y));
    };
    // cos(+-pi/2) is not exactly 0 in floating point; pin the ends exactly
    const PathFn pinned = [&](double s) {
        if (s <= -kPi / 2) return std::complex<double>(homog(a1, -1, 0), homog(a2, -1, 0));
        if (s >= kPi / 2) return std::complex<double>(homog(a1, 1, 0), homog(a2, 1, 0));
        return path(s);
    };
    const auto change = argument_change(pinned, -kPi / 2, kPi / 2, refinement_cap, 128);
    Rp1DegreeResult r;
    r.raw = change.radians / kPi;
    r.j = static_cast<int>(std::lround(r.raw));
    r.samples = change.samples;
    return r;
}

}  // namespace polyspace
