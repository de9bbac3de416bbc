#include "polyspace/case31.hpp"

#include <cmath>
#include <numbers>

namespace polyspace::case31 {

namespace {

struct RootWithExponent {
    RealRoot root;
    int exponent;  // net of the alternating signs over its multiplicity
};

// Real roots of f1 in ascending order; a root of multiplicity k starting at
// (1-based) position p carries exponent sum_{i=p}^{p+k-1} (-1)^(i-1).
std::vector<RootWithExponent> signed_roots(const QPoly& f1) {
    std::vector<RootWithExponent> out;
    int position = 1;
    for (auto& r : real_roots_exact(f1)) {
        int e = 0;
        for (int i = 0; i < r.multiplicity; ++i) e += ((position + i) % 2 == 1) ? 1 : -1;
        position += r.multiplicity;
        out.push_back({std::move(r), e});
    }
    return out;
}

Rational abs_bound_of_derivative(const QPoly& f, const Rational& b) {
    // sum_k k |a_k| b^(k-1)
    Rational acc = 0;
    Rational pw = 1;
    for (int k = 1; k <= f.degree(); ++k) {
        acc += k * abs(f[k]) * pw;
        pw *= b;
    }
    return acc;
}

// (f2 + i f3) at the isolated root, to relative accuracy 1e-12.
std::complex<double> eval_at_root(const Model31& m, RealRoot& r) {
    if (r.is_exact()) {
        return {m.f2(r.lo).get_d(), m.f3(r.lo).get_d()};
    }
    while (true) {
        const Rational mid = (r.lo + r.hi) / 2;
        const Rational v2 = m.f2(mid);
        const Rational v3 = m.f3(mid);
        const std::complex<double> v(v2.get_d(), v3.get_d());
        Rational b = abs(r.lo);
        if (abs(r.hi) > b) b = abs(r.hi);
        const Rational err = (r.hi - r.lo) / 2 * (abs_bound_of_derivative(m.f2, b) + abs_bound_of_derivative(m.f3, b));
        if (err.get_d() <= 1e-12 * std::abs(v)) return v;
        if (r.width().get_d() < 1e-60) {
            if (v == 0.0) throw MembershipViolation("r_tilde: f2 + i f3 vanishes at a real root of f1");
            return v;
        }
        refine(r, r.width() / 1024);
    }
}

std::complex<double> r_tilde_from_roots(const Model31& m, std::vector<RootWithExponent> roots) {
    if (roots.empty()) throw DomainError("r_tilde: f1 has no real root");
    std::complex<double> prod = 1.0;
    for (auto& [root, e] : roots) {
        if (e == 0) continue;
        const auto v = eval_at_root(m, root);
        if (v == 0.0) throw MembershipViolation("r_tilde: f2 + i f3 vanishes at a real root of f1");
        prod *= e > 0 ? v : 1.0 / v;
    }
    return prod;
}

// The root itself when it is rational. With D the lcm of the denominators of
// f, D f has integer coefficients, so D x is an integer for any rational root x.
std::optional<Rational> rational_root(const QPoly& f, RealRoot r) {
    if (r.is_exact()) return r.lo;
    mpz_class D = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
    refine(r, Rational(1) / Rational(2 * D));
    if (r.is_exact()) return r.lo;
    const Rational lo = r.lo * D, hi = r.hi * D;
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    for (; Rational(k) <= hi; ++k) {
        const Rational x = Rational(k) / D;
        if (x >= r.lo && x <= r.hi && f(x) == 0) return x;
    }
    return std::nullopt;
}

void require_odd(const Model31& m) {
    validate(m);
    if (m.degree() % 2 == 0) throw DomainError("r_tilde: defined only for odd d");
}

}  // namespace

void validate(const Model31& m) {
    if (m.f1.degree() < 1 || !m.f1.is_monic()) throw DomainError("Model31: f1 must be monic of degree >= 1");
    if (m.f2.degree() >= m.f1.degree() || m.f3.degree() >= m.f1.degree())
        throw DomainError("Model31: deg f2 and deg f3 must be < deg f1");
}

bool is_member(const Model31& m) {
    validate(m);
    const QPoly fs[] = {m.f1, m.f2, m.f3};
    return gcd_exact(std::span<const QPoly>(fs)).degree() == 0;
}

Model31 phi(const SystemTuple& t) {
    if (t.m() != 3 || t.n() != 1) throw DomainError("phi: expected m = 3, n = 1");
    if (!t.has_real_coefficients()) throw DomainError("phi: coefficients must be real");
    if (t.degree() < 2) throw DomainError("phi: requires d >= 2");
    if (!polyspace::is_member(t)) throw DomainError("phi: tuple is not a member");
    const auto f = t.real_polys();
    return {f[0], f[1] - f[0], f[2] - f[0]};
}

SystemTuple phi_inverse(const Model31& m) {
    validate(m);
    return SystemTuple::real({m.f1, m.f1 + m.f2, m.f1 + m.f3}, 1);
}

Model31 s1_act_exact(const Rational& c, const Rational& s, const Model31& m) {
    if (c * c + s * s != 1) throw DomainError("s1_act_exact: need c^2 + s^2 = 1");
    return {m.f1, m.f2 * c - m.f3 * s, m.f2 * s + m.f3 * c};
}

Model31 s1_act(double theta, const Model31& m) {
    const Rational c = exact_from_double(std::cos(theta));
    const Rational s = exact_from_double(std::sin(theta));
    return {m.f1, m.f2 * c - m.f3 * s, m.f2 * s + m.f3 * c};
}

std::pair<Rational, Rational> pythagorean_rotation(long p, long q) {
    if (p == 0 && q == 0) throw DomainError("pythagorean_rotation: p and q cannot both be zero");
    const Rational n = Rational(p * p + q * q);
    return {Rational(p * p - q * q) / n, Rational(2 * p * q) / n};
}

Model31 i_d_loop(int d, double theta) {
    if (d < 2) throw DomainError("i_d_loop: requires d >= 2");
    return {QPoly::monomial(d), QPoly({exact_from_double(std::cos(theta)), Rational(1)}),
            QPoly({exact_from_double(std::sin(theta)), Rational(1)})};
}

std::complex<double> r_tilde(const Model31& m) {
    require_odd(m);
    return r_tilde_from_roots(m, signed_roots(m.f1));
}

std::optional<GaussianRational> r_tilde_exact(const Model31& m) {
    require_odd(m);
    GaussianRational prod(1);
    for (auto& [root, e] : signed_roots(m.f1)) {
        if (e == 0) continue;
        const auto x = rational_root(m.f1, root);
        if (!x) return std::nullopt;
        const GaussianRational v(m.f2(*x), m.f3(*x));
        if (v.is_zero()) throw MembershipViolation("r_tilde: f2 + i f3 vanishes at a real root of f1");
        prod = e > 0 ? prod * v : prod / v;
    }
    return prod;
}

std::complex<double> r_d(const Model31& m) {
    const auto v = r_tilde(m);
    return v / std::abs(v);
}

namespace {

// r_tilde along a path, reusing the root isolation while f1 stays fixed.
class CachedRTilde {
public:
    std::complex<double> operator()(const Model31& m) {
        require_odd(m);
        if (!cached_ || !(cached_->first == m.f1)) cached_.emplace(m.f1, signed_roots(m.f1));
        return r_tilde_from_roots(m, cached_->second);
    }

private:
    std::optional<std::pair<QPoly, std::vector<RootWithExponent>>> cached_;
};

}  // namespace

WindingResult pi1_winding(const ModelLoop& loop, std::size_t refinement_cap) {
    CachedRTilde rt;
    return winding_detailed([&](double theta) { return rt(loop(theta)); }, refinement_cap);
}

Model31 interpolate(const Model31& a, const Model31& b, const Rational& t) {
    const Rational s = 1 - t;
    return {a.f1 * s + b.f1 * t, a.f2 * s + b.f2 * t, a.f3 * s + b.f3 * t};
}

WindingResult pi1_winding(const std::vector<Model31>& samples, std::size_t refinement_cap) {
    if (samples.empty()) throw DomainError("pi1_winding: empty loop");
    CachedRTilde rt;
    const std::size_t n = samples.size();
    double radians = 0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Model31& a = samples[k];
        const Model31& b = samples[(k + 1) % n];
        const auto change = argument_change(
            [&](double t) { return rt(interpolate(a, b, exact_from_double(t))); }, 0.0, 1.0,
            refinement_cap > count ? refinement_cap - count : 1, 8);
        radians += change.radians;
        count += change.samples;
    }
    WindingResult r;
    r.raw_turns = radians / (2 * std::numbers::pi);
    r.winding = static_cast<int>(std::lround(r.raw_turns));
    r.samples = count;
    return r;
}

}  // namespace polyspace::case31
