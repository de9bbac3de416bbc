#include "polyspace/case21.hpp"

#include <cstdlib>

#include "polyspace/mapdeg.hpp"

namespace polyspace::case21 {

bool is_legal_label(int d, int j) { return std::abs(j) <= d && (d - j) % 2 == 0; }

ComponentLabel component_of(const SystemTuple& t) {
    if (t.m() != 2 || t.n() != 1) throw DomainError("case21: expected m = 2, n = 1");
    if (!t.has_real_coefficients()) throw DomainError("case21: coefficients must be real");
    const auto f = t.real_polys();
    return {rp1_degree(f[0], f[1])};
}

SystemTuple representative(int d, int j) {
    if (d < 1) throw DomainError("case21::representative: d must be >= 1");
    if (!is_legal_label(d, j)) throw DomainError("case21::representative: need |j| <= d and j = d (mod 2)");
    const int r = std::abs(j);
    const int s = j >= 0 ? 1 : -1;
    QPoly f1 = QPoly::constant(1);
    QPoly f2 = QPoly::constant(1);
    for (int i = 0; i < r; ++i) {
        f1 *= QPoly::linear(Rational(2 * i));
        f2 *= QPoly::linear(Rational(2 * i + s));
    }
    for (int k = 0; k < (d - r) / 2; ++k) {
        f1 *= QPoly({Rational(1), Rational(0), Rational(1)});
        f2 *= QPoly({Rational(2), Rational(0), Rational(1)});
    }
    return SystemTuple::real({f1, f2}, 1);
}

SystemTuple random_member(int d, Rng& rng, long* rejected) {
    if (d < 1) throw DomainError("case21::random_member: d must be >= 1");
    while (true) {
        std::vector<QPoly> fs;
        for (int k = 0; k < 2; ++k) {
            std::vector<Rational> c;
            for (int i = 0; i < d; ++i) c.push_back(rng.rational(100, 10));
            c.push_back(Rational(1));
            fs.emplace_back(std::move(c));
        }
        if (gcd_exact(fs[0], fs[1]).degree() == 0) return SystemTuple::real(fs, 1);
        if (rejected) ++*rejected;
    }
}

CensusResult census(int d, long samples, std::uint64_t seed) {
    if (d < 1) throw DomainError("case21::census: d must be >= 1");
    if (samples < 1) throw DomainError("case21::census: samples must be >= 1");
    CensusResult out;
    for (long i = 0; i < samples; ++i) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        const SystemTuple t = random_member(d, rng, &out.rejected);
        ++out.counts[component_of(t).j];
    }
    return out;
}

}  // namespace polyspace::case21
