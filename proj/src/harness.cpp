#include "polyspace/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyspace/case12.hpp"
#include "polyspace/case31.hpp"
#include "polyspace/mapdeg.hpp"

namespace polyspace::harness {

std::pair<int, int> shape(Case c) {
    switch (c) {
        case Case::C21: return {2, 1};
        case Case::C31: return {3, 1};
        case Case::C12: return {1, 2};
        case Case::C13: return {1, 3};
        case Case::C22: return {2, 2};
    }
    throw DomainError("shape: unknown case");
}

std::string to_string(Case c) {
    const auto [m, n] = shape(c);
    return std::to_string(m) + std::to_string(n);
}

Case case_from_string(const std::string& s) {
    for (Case c : {Case::C21, Case::C31, Case::C12, Case::C13, Case::C22})
        if (to_string(c) == s) return c;
    throw DomainError("unknown case '" + s + "' (expected 21, 31, 12, 13 or 22)");
}

SystemTuple random_member(int m, int n, int d, FieldTag field, Rng& rng, long max_attempts, long* rejected) {
    if (d < 1) throw DomainError("random_member: d must be >= 1");
    if (max_attempts < 1) throw DomainError("random_member: max_attempts must be >= 1");
    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<GPoly> polys;
        for (int k = 0; k < m; ++k) {
            std::vector<GaussianRational> c;
            for (int i = 0; i < d; ++i) {
                if (field == FieldTag::RationalReal)
                    c.emplace_back(rng.rational(100, 10));
                else
                    c.emplace_back(rng.rational(100, 10), rng.rational(100, 10));
            }
            c.emplace_back(1);
            polys.emplace_back(std::move(c));
        }
        SystemTuple t(std::move(polys), n, field);
        if (is_member(t)) return t;
        if (rejected) ++*rejected;
    }
    throw SamplingError("random_member: no member after " + std::to_string(max_attempts) +
                        " attempts (rejection rate 100%)");
}

SystemTuple random_member(Case c, int d, std::uint64_t seed, long max_attempts) {
    const auto [m, n] = shape(c);
    Rng rng(seed);
    return random_member(m, n, d, FieldTag::RationalReal, rng, max_attempts);
}

SystemTuple interpolate(const SystemTuple& a, const SystemTuple& b, const Rational& t) {
    if (a.m() != b.m() || a.n() != b.n() || a.field() != b.field() || a.degrees() != b.degrees())
        throw DomainError("interpolate: endpoints must have the same shape");
    const GaussianRational s(Rational(1 - t)), u(t);
    std::vector<GPoly> out;
    for (int k = 0; k < a.m(); ++k) out.push_back(a[k] * s + b[k] * u);
    return SystemTuple(std::move(out), a.n(), a.field());
}

std::optional<int> component_label(const SystemTuple& t) {
    if (!t.has_real_coefficients()) return std::nullopt;
    if (t.m() == 2 && t.n() == 1 && t.equal_degrees()) {
        const auto f = t.real_polys();
        return rp1_degree(f[0], f[1]);
    }
    if (t.m() == 1 && t.n() == 2) return case12::component_of(t.real_polys()[0]).j;
    return std::nullopt;
}

namespace {

// Sign of the resultant that vanishes exactly on the boundary, where one is used.
std::optional<int> boundary_sign(const SystemTuple& t) {
    if (!t.has_real_coefficients()) return std::nullopt;
    if (t.m() == 2 && t.n() == 1) {
        const auto f = t.real_polys();
        return sgn(resultant(f[0], f[1]));
    }
    if (t.m() == 1 && t.n() == 2) {
        const auto f = t.real_polys()[0];
        return sgn(resultant(f, derivative(f)));
    }
    return std::nullopt;
}

struct Probe {
    PathSample sample;
    std::optional<int> sign;
};

class PathProbe {
public:
    explicit PathProbe(const std::vector<SystemTuple>& v) : v_(v) {}

    Probe at(const Rational& t) const {
        const SystemTuple x = point(t);
        Probe p;
        p.sample.t = t;
        p.sample.member = is_member(x);
        if (p.sample.member) {
            p.sample.label = component_label(x);
            p.sign = boundary_sign(x);
        }
        return p;
    }

private:
    SystemTuple point(const Rational& t) const {
        const std::size_t edges = v_.size() - 1;
        if (edges == 0) return v_[0];
        Rational scaled = t * static_cast<unsigned long>(edges);
        mpz_class k = scaled.get_num() / scaled.get_den();
        std::size_t i = std::min<std::size_t>(k.get_ui(), edges - 1);
        return interpolate(v_[i], v_[i + 1], scaled - static_cast<unsigned long>(i));
    }

    const std::vector<SystemTuple>& v_;
};

bool disagree(const Probe& a, const Probe& b) { return a.sample.label != b.sample.label || a.sign != b.sign; }

}  // namespace

PathInSpace certify_path(const SystemTuple& a, const SystemTuple& b, int depth_cap) {
    return certify_polyline({a, b}, depth_cap);
}

PathInSpace certify_polyline(const std::vector<SystemTuple>& vertices, int depth_cap) {
    if (vertices.empty()) throw DomainError("certify_polyline: no vertices");
    if (depth_cap < 1) throw DomainError("certify_polyline: depth_cap must be >= 1");
    for (const auto& v : vertices) (void)interpolate(vertices.front(), v, Rational(0));

    PathInSpace out;
    out.vertices = vertices;
    const PathProbe probe(vertices);
    constexpr unsigned long per_edge = 8;
    const unsigned long steps = per_edge * std::max<unsigned long>(vertices.size() - 1, 1);

    std::vector<Probe> grid;
    for (unsigned long k = 0; k <= steps; ++k) {
        Rational t(k, steps);
        t.canonicalize();
        grid.push_back(probe.at(t));
    }
    out.refinement_depth = 3;
    bool ok = true;
    for (const auto& p : grid) {
        out.samples.push_back(p.sample);
        if (!p.sample.member) {
            ok = false;
            if (!out.violation) out.violation.emplace(p.sample.t, p.sample.t);
        }
    }
    const Rational target(1, 1000000);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        Probe lo = grid[k], hi = grid[k + 1];
        if (!lo.sample.member || !hi.sample.member || !disagree(lo, hi)) continue;
        ok = false;
        int depth = 3;
        bool exact_hit = false;
        while (hi.sample.t - lo.sample.t > target && depth < depth_cap) {
            const Probe mid = probe.at((lo.sample.t + hi.sample.t) / 2);
            out.samples.push_back(mid.sample);
            ++depth;
            if (!mid.sample.member) {
                if (!out.violation) out.violation.emplace(mid.sample.t, mid.sample.t);
                exact_hit = true;
                break;
            }
            if (disagree(lo, mid))
                hi = mid;
            else
                lo = mid;
        }
        out.refinement_depth = std::max(out.refinement_depth, depth);
        if (!exact_hit && hi.sample.t - lo.sample.t <= target && !out.violation)
            out.violation.emplace(lo.sample.t, hi.sample.t);
    }
    std::sort(out.samples.begin(), out.samples.end(), [](const PathSample& a, const PathSample& b) { return a.t < b.t; });
    out.certified = ok;
    return out;
}

namespace {

void fail(SweepReport& r, std::string note) {
    ++r.failures;
    if (r.failure_notes.size() < 20) r.failure_notes.push_back(std::move(note));
}

void degree_check(SweepReport& r, const SystemTuple& t, std::uint64_t seed, long trial) {
    ++r.checks["degree"];
    try {
        const auto res = map_degree(t, seed);
        const double dev = std::abs(res.raw_turns - r.d);
        r.max_degree_deviation = std::max(r.max_degree_deviation, dev);
        if (res.degree != r.d || dev >= 0.2) fail(r, "trial " + std::to_string(trial) + ": map degree " + std::to_string(res.degree));
    } catch (const std::exception& e) {
        fail(r, "trial " + std::to_string(trial) + ": " + e.what());
    }
}

void path_check(SweepReport& r, const SystemTuple& a, const SystemTuple& b, long trial) {
    ++r.checks["path"];
    const auto p = certify_path(a, b);
    const auto la = component_label(a), lb = component_label(b);
    bool consistent = true;
    if (la != lb && (p.certified || !p.violation)) consistent = false;
    if (p.certified)
        for (const auto& s : p.samples)
            if (s.label != la) consistent = false;
    if (!consistent) fail(r, "trial " + std::to_string(trial) + ": path labels inconsistent with certification");
}

}  // namespace

SweepReport invariant_sweep(Case c, int d, long trials, std::uint64_t seed) {
    SweepReport r;
    r.c = c;
    r.d = d;
    r.trials = trials;
    r.seed = seed;
    if (d < 1 || trials < 1) {
        fail(r, "illegal parameters: d and trials must be >= 1");
        return r;
    }
    const auto [m, n] = shape(c);
    if (c == Case::C31 && d % 2 == 1 && d >= 3) {
        ++r.checks["generator_loop"];
        try {
            const int w = case31::pi1_winding([d](double th) { return case31::i_d_loop(d, th); }).winding;
            if (w != 1) fail(r, "generator loop winding " + std::to_string(w));
        } catch (const std::exception& e) {
            fail(r, std::string("generator loop: ") + e.what());
        }
    }
    for (long i = 0; i < trials; ++i) {
        const std::uint64_t s = split_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(s);
        try {
            const SystemTuple t = random_member(m, n, d, FieldTag::RationalReal, rng, 1000, &r.rejected);
            ++r.checks["membership"];
            if (!is_member_via_jets(t)) fail(r, "trial " + std::to_string(i) + ": jet route disagrees");
            if (i % 10 == 0) degree_check(r, t, s, i);
            switch (c) {
                case Case::C21: {
                    const int j = *component_label(t);
                    ++r.support[j];
                    if (std::abs(j) > d || (d - j) % 2 != 0) fail(r, "trial " + std::to_string(i) + ": illegal label");
                    if (i % 100 == 0) path_check(r, t, random_member(m, n, d, FieldTag::RationalReal, rng), i);
                    break;
                }
                case Case::C12: {
                    const QPoly f = t.real_polys()[0];
                    const int j = case12::component_of(f).j;
                    ++r.support[j];
                    if (j < 0 || 2 * j > d) fail(r, "trial " + std::to_string(i) + ": illegal label");
                    if (i % 10 == 0) {
                        ++r.checks["electric_degree"];
                        const auto cfg = case12::to_configuration(f);
                        if (case12::electric_degree(cfg.points).degree != j)
                            fail(r, "trial " + std::to_string(i) + ": electric degree differs from j");
                        ++r.checks["stabilize"];
                        const QPoly g = case12::stabilize(f, case12::default_stabilization_parameter(f));
                        if (case12::component_of(g).j != j + 1) fail(r, "trial " + std::to_string(i) + ": stabilization label");
                    }
                    if (i % 100 == 0) path_check(r, t, random_member(m, n, d, FieldTag::RationalReal, rng), i);
                    break;
                }
                case Case::C31: {
                    if (d < 3 || d % 2 == 0) break;
                    const auto model = case31::phi(t);
                    ++r.checks["r_tilde"];
                    if (case31::r_tilde(model) == 0.0) fail(r, "trial " + std::to_string(i) + ": r_tilde vanished");
                    if (i % 25 == 0) {
                        ++r.checks["orbit_winding"];
                        const int w = case31::pi1_winding([&](double th) { return case31::s1_act(th, model); }).winding;
                        if (w != 1) fail(r, "trial " + std::to_string(i) + ": orbit winding " + std::to_string(w));
                    }
                    break;
                }
                case Case::C13:
                case Case::C22:
                    break;
            }
        } catch (const std::exception& e) {
            fail(r, "trial " + std::to_string(i) + ": " + e.what());
        }
    }
    return r;
}

Json to_json(const SweepReport& r) {
    Json support = Json::object();
    for (const auto& [j, count] : r.support) support[std::to_string(j)] = count;
    Json checks = Json::object();
    for (const auto& [k, count] : r.checks) checks[k] = count;
    return Json{{"case", to_string(r.c)},
                {"d", r.d},
                {"trials", r.trials},
                {"seed", r.seed},
                {"failures", r.failures},
                {"rejected", r.rejected},
                {"support", support},
                {"checks", checks},
                {"tolerance", {{"max_degree_deviation", format_double(r.max_degree_deviation)}}},
                {"failure_notes", r.failure_notes}};
}

Json to_json(const PathInSpace& p) {
    Json samples = Json::array();
    for (const auto& s : p.samples) {
        Json e{{"t", polyspace::to_json(s.t)}, {"member", s.member}};
        e["label"] = s.label ? Json(*s.label) : Json(nullptr);
        samples.push_back(e);
    }
    Json out{{"certified", p.certified}, {"refinement_depth", p.refinement_depth}, {"samples", samples}};
    if (p.violation)
        out["violation"] = {polyspace::to_json(p.violation->first), polyspace::to_json(p.violation->second)};
    else
        out["violation"] = nullptr;
    return out;
}

}  // namespace polyspace::harness
