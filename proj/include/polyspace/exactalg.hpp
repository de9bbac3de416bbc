#pragma once

// Exact polynomial algorithms: derivatives, subresultant gcd, resultants,
// Yun squarefree decomposition, Sturm real-root isolation and root bounds.

#include <span>
#include <vector>

#include "polyspace/polynomial.hpp"

namespace polyspace {

/// k-th formal derivative. Throws DomainError if order < 1.
template <class C>
Polynomial<C> derivative(const Polynomial<C>& f, int order = 1) {
    if (order < 1) throw DomainError("derivative: order must be >= 1");
    if (f.degree() < order) return {};
    const auto& a = f.coefficients();
    std::vector<C> out(static_cast<std::size_t>(f.degree() - order) + 1, C(0));
    for (int k = order; k <= f.degree(); ++k) {
        // k (k-1) ... (k-order+1)
        mpz_class falling = 1;
        for (int i = 0; i < order; ++i) falling *= (k - i);
        out[k - order] = a[k] * C(Rational(falling));
    }
    return Polynomial<C>(std::move(out));
}

/// Monic gcd via the subresultant polynomial remainder sequence. Inputs are
/// scaled to integral coefficients first so the sequence stays in Z[z] / Z[i][z].
/// Throws DomainError when both inputs are zero.
template <class C>
Polynomial<C> gcd_exact(const Polynomial<C>& f, const Polynomial<C>& g);

/// gcd of a list; zero entries are ignored. Throws if every entry is zero.
template <class C>
Polynomial<C> gcd_exact(std::span<const Polynomial<C>> fs);

/// Resultant Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a). Both must be nonzero.
template <class C>
C resultant(const Polynomial<C>& f, const Polynomial<C>& g);

template <class C>
struct SquarefreeFactor {
    Polynomial<C> factor;  // monic, squarefree
    int multiplicity;
};

/// Yun's algorithm. Factors are monic, pairwise coprime and squarefree, with
/// strictly increasing multiplicities; lc(f) * prod factor^mult = f.
template <class C>
std::vector<SquarefreeFactor<C>> squarefree_decomposition(const Polynomial<C>& f);

/// Monic squarefree part f / gcd(f, f').
template <class C>
Polynomial<C> squarefree_part(const Polynomial<C>& f);

/// 1 + max_k max_i |a_k / a_lead| over all inputs, with |x + iy| bounded by |x| + |y|.
/// Every root of every input lies in the open disk of that radius.
template <class C>
Rational cauchy_root_bound(std::span<const Polynomial<C>> fs);

template <class C>
Rational cauchy_root_bound(const Polynomial<C>& f) {
    return cauchy_root_bound(std::span<const Polynomial<C>>(&f, 1));
}

/// Sturm sequence f, f', -rem(f, f'), ... over Q.
std::vector<QPoly> sturm_sequence(const QPoly& f);

/// Sign variations of a Sturm sequence at a rational point (zeros skipped).
int sign_variations(std::span<const QPoly> seq, const Rational& x);
/// Sign variations at -infinity (at_plus = false) or +infinity.
int sign_variations_at_infinity(std::span<const QPoly> seq, bool at_plus);

/// Number of distinct real roots of f (Sturm count at +-infinity).
int count_real_roots(const QPoly& f);

/// An isolated real root of a squarefree factor. Either lo == hi and the root is
/// that rational exactly, or the root is the unique root of `factor` in the open
/// interval (lo, hi) and factor(lo), factor(hi) are nonzero with opposite signs.
struct RealRoot {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
    QPoly factor;

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    double approx() const { return Rational((lo + hi) / 2).get_d(); }
};

/// Real roots of f in ascending order with multiplicities. Intervals are pairwise
/// disjoint. Throws DomainError on the zero polynomial.
std::vector<RealRoot> real_roots_exact(const QPoly& f);

/// Bisects r until its width is at most `width` (no-op for exact roots).
void refine(RealRoot& r, const Rational& width);

/// Strict ordering of two isolated roots; refines until the intervals separate.
/// Returns true if a < b. Distinct roots are assumed (equal exact roots return false).
bool root_less(RealRoot& a, RealRoot& b);

extern template QPoly gcd_exact(const QPoly&, const QPoly&);
extern template GPoly gcd_exact(const GPoly&, const GPoly&);
extern template QPoly gcd_exact(std::span<const QPoly>);
extern template GPoly gcd_exact(std::span<const GPoly>);
extern template Rational resultant(const QPoly&, const QPoly&);
extern template GaussianRational resultant(const GPoly&, const GPoly&);
extern template std::vector<SquarefreeFactor<Rational>> squarefree_decomposition(const QPoly&);
extern template std::vector<SquarefreeFactor<GaussianRational>> squarefree_decomposition(const GPoly&);
extern template QPoly squarefree_part(const QPoly&);
extern template GPoly squarefree_part(const GPoly&);
extern template Rational cauchy_root_bound(std::span<const QPoly>);
extern template Rational cauchy_root_bound(std::span<const GPoly>);

}  // namespace polyspace
