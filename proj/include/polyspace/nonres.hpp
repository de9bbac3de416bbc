#pragma once

// Tuples of monic polynomials and membership in the space of systems with no
// common root of multiplicity >= n.

#include <vector>

#include "polyspace/exactalg.hpp"

namespace polyspace {

enum class FieldTag { RationalReal, GaussianComplex };

/// An m-tuple of monic polynomials together with the multiplicity bound n.
/// Construction validates the shape only; the no-common-root condition is
/// decided by is_member().
class SystemTuple {
public:
    /// Throws DomainError if a polynomial is not monic of degree >= 1, if
    /// (m, n) = (1, 1), m < 1, n < 1, or a RationalReal tuple has a non-real coefficient.
    SystemTuple(std::vector<GPoly> polys, int multiplicity_bound, FieldTag field);

    static SystemTuple real(const std::vector<QPoly>& polys, int multiplicity_bound);
    static SystemTuple complex(std::vector<GPoly> polys, int multiplicity_bound) {
        return SystemTuple(std::move(polys), multiplicity_bound, FieldTag::GaussianComplex);
    }

    int m() const { return static_cast<int>(polys_.size()); }
    int n() const { return n_; }
    FieldTag field() const { return field_; }
    const std::vector<GPoly>& polys() const { return polys_; }
    const GPoly& operator[](int k) const { return polys_[static_cast<std::size_t>(k)]; }

    std::vector<int> degrees() const;
    bool equal_degrees() const;
    /// The common degree d; throws DomainError for mixed-degree tuples.
    int degree() const;
    bool has_real_coefficients() const;
    /// Coefficients as rationals; throws DomainError if any is non-real.
    std::vector<QPoly> real_polys() const;

    friend bool operator==(const SystemTuple& a, const SystemTuple& b) {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.polys_ == b.polys_;
    }

private:
    std::vector<GPoly> polys_;
    int n_;
    FieldTag field_;
};

/// (f, f + f', f + f'', ..., f + f^(n-1)). Throws DomainError if n < 1.
template <class C>
std::vector<Polynomial<C>> jet(const Polynomial<C>& f, int n) {
    if (n < 1) throw DomainError("jet: n must be >= 1");
    std::vector<Polynomial<C>> out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back(f);
    for (int i = 1; i < n; ++i) out.push_back(f + derivative(f, i));
    return out;
}

/// Monic gcd of all polynomials of the tuple.
GPoly common_gcd(const SystemTuple& t);

/// max over alpha of min_k mult_alpha(f_k): the largest multiplicity in the
/// squarefree decomposition of the common gcd, 0 when the gcd is constant.
int max_common_multiplicity(const SystemTuple& t);

/// true iff max_common_multiplicity(t) < n.
bool is_member(const SystemTuple& t);

/// Second exact route: the m*n jet polynomials have constant gcd.
bool is_member_via_jets(const SystemTuple& t);

/// Coefficient-wise complex conjugation (an involution; real tuples are fixed).
SystemTuple conjugate_tuple(const SystemTuple& t);

/// (mn - 2)(floor(d/n) + 1) - 1. Throws DomainError when mn < 3 or an
/// argument is non-positive.
int stability_dimension(int d, int m, int n);

}  // namespace polyspace
