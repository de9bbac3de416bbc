#include "polyspace/nonres.hpp"

#include <algorithm>

namespace polyspace {

SystemTuple::SystemTuple(std::vector<GPoly> polys, int multiplicity_bound, FieldTag field)
    : polys_(std::move(polys)), n_(multiplicity_bound), field_(field) {
    if (polys_.empty()) throw DomainError("SystemTuple: m must be >= 1");
    if (n_ < 1) throw DomainError("SystemTuple: n must be >= 1");
    if (polys_.size() == 1 && n_ == 1) throw DomainError("SystemTuple: (m, n) = (1, 1) is excluded");
    for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (polys_[k].degree() < 1 || !polys_[k].is_monic())
            throw DomainError("SystemTuple: polys[" + std::to_string(k) + "] must be monic of degree >= 1");
        if (field_ == FieldTag::RationalReal &&
            !std::all_of(polys_[k].coefficients().begin(), polys_[k].coefficients().end(),
                         [](const GaussianRational& c) { return c.is_real(); }))
            throw DomainError("SystemTuple: polys[" + std::to_string(k) + "] has a non-real coefficient in a real tuple");
    }
}

SystemTuple SystemTuple::real(const std::vector<QPoly>& polys, int multiplicity_bound) {
    std::vector<GPoly> g;
    g.reserve(polys.size());
    for (const auto& p : polys) g.push_back(to_gaussian(p));
    return SystemTuple(std::move(g), multiplicity_bound, FieldTag::RationalReal);
}

std::vector<int> SystemTuple::degrees() const {
    std::vector<int> out;
    for (const auto& p : polys_) out.push_back(p.degree());
    return out;
}

bool SystemTuple::equal_degrees() const {
    return std::all_of(polys_.begin(), polys_.end(), [&](const GPoly& p) { return p.degree() == polys_[0].degree(); });
}

int SystemTuple::degree() const {
    if (!equal_degrees()) throw DomainError("SystemTuple: degrees are not all equal");
    return polys_[0].degree();
}

bool SystemTuple::has_real_coefficients() const {
    return std::all_of(polys_.begin(), polys_.end(), [](const GPoly& p) {
        return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                           [](const GaussianRational& c) { return c.is_real(); });
    });
}

std::vector<QPoly> SystemTuple::real_polys() const {
    std::vector<QPoly> out;
    out.reserve(polys_.size());
    for (const auto& p : polys_) out.push_back(to_rational(p));
    return out;
}

GPoly common_gcd(const SystemTuple& t) {
    if (t.has_real_coefficients()) {
        const auto q = t.real_polys();
        return to_gaussian(gcd_exact(std::span<const QPoly>(q)));
    }
    return gcd_exact(std::span<const GPoly>(t.polys()));
}

int max_common_multiplicity(const SystemTuple& t) {
    int best = 0;
    if (t.has_real_coefficients()) {
        const auto q = t.real_polys();
        const QPoly g = gcd_exact(std::span<const QPoly>(q));
        for (const auto& sf : squarefree_decomposition(g)) best = std::max(best, sf.multiplicity);
        return best;
    }
    const GPoly g = gcd_exact(std::span<const GPoly>(t.polys()));
    for (const auto& sf : squarefree_decomposition(g)) best = std::max(best, sf.multiplicity);
    return best;
}

bool is_member(const SystemTuple& t) { return max_common_multiplicity(t) < t.n(); }

bool is_member_via_jets(const SystemTuple& t) {
    if (t.has_real_coefficients()) {
        std::vector<QPoly> all;
        for (const auto& f : t.real_polys())
            for (auto& c : jet(f, t.n())) all.push_back(std::move(c));
        return gcd_exact(std::span<const QPoly>(all)).degree() == 0;
    }
    std::vector<GPoly> all;
    for (const auto& f : t.polys())
        for (auto& c : jet(f, t.n())) all.push_back(std::move(c));
    return gcd_exact(std::span<const GPoly>(all)).degree() == 0;
}

SystemTuple conjugate_tuple(const SystemTuple& t) {
    std::vector<GPoly> out;
    out.reserve(t.polys().size());
    for (const auto& p : t.polys()) out.push_back(conj(p));
    return SystemTuple(std::move(out), t.n(), t.field());
}

int stability_dimension(int d, int m, int n) {
    if (d < 1 || m < 1 || n < 1) throw DomainError("stability_dimension: d, m, n must be positive");
    if (m == 1 && n == 1) throw DomainError("stability_dimension: (m, n) = (1, 1) is excluded");
    // mn = 2 would give -1; the formula is only a dimension for mn >= 3
    if (m * n < 3) throw DomainError("stability_dimension: requires mn >= 3");
    return (m * n - 2) * (d / n + 1) - 1;
}

}  // namespace polyspace
