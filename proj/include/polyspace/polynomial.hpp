#pragma once

// Dense univariate polynomials over Q and Q(i).

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

template <class C>
class Polynomial {
public:
    using Coefficient = C;
    using Traits = ScalarTraits<C>;

    Polynomial() = default;
    explicit Polynomial(std::vector<C> ascending) : coeffs_(std::move(ascending)) { trim(); }
    Polynomial(std::initializer_list<C> ascending) : coeffs_(ascending) { trim(); }

    static Polynomial constant(C c) { return Polynomial(std::vector<C>{std::move(c)}); }
    /// z^k
    static Polynomial monomial(int k, C c = C(1)) {
        std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0));
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }
    /// (z - root)
    static Polynomial linear(const C& root) { return Polynomial({-root, C(1)}); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == C(1); }

    const std::vector<C>& coefficients() const { return coeffs_; }
    /// Coefficient of z^k (zero beyond the degree).
    C operator[](int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : C(0);
    }
    const C& leading() const { return coeffs_.back(); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial r = *this;
        C inv = C(1) / leading();
        for (auto& c : r.coeffs_) c *= inv;
        return r;
    }

    C operator()(const C& x) const {
        C acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    template <class T>
    std::complex<T> eval_complex(std::complex<T> x) const {
        std::complex<T> acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            auto c = Traits::to_complex(*it);
            acc = acc * x + std::complex<T>(static_cast<T>(c.real()), static_cast<T>(c.imag()));
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const C& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
    friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (Traits::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division over the coefficient field. Throws DomainError on b = 0.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial{}, a};
        std::vector<C> rem = a.coeffs_;
        std::vector<C> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, C(0));
        const C inv = C(1) / b.leading();
        const int db = b.degree();
        for (int k = a.degree(); k >= db; --k) {
            if (Traits::is_zero(rem[k])) continue;
            C q = rem[k] * inv;
            for (int i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coeffs_[i];
            quo[k - db] = std::move(q);
        }
        rem.resize(static_cast<std::size_t>(db));
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    template <class F>
    auto map(F&& f) const {
        using R = decltype(f(std::declval<const C&>()));
        std::vector<R> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return Polynomial<R>(std::move(out));
    }

private:
    void trim() {
        while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using QPoly = Polynomial<Rational>;
using GPoly = Polynomial<GaussianRational>;

inline GPoly to_gaussian(const QPoly& p) {
    return p.map([](const Rational& q) { return GaussianRational(q); });
}

/// Real part of a Gaussian polynomial; throws DomainError if any coefficient is non-real.
QPoly to_rational(const GPoly& p);

template <class C>
Polynomial<C> conj(const Polynomial<C>& p) {
    return p.map([](const C& c) { return ScalarTraits<C>::conjugate(c); });
}

/// Coefficients converted to complex<double>, ascending. Used by all numeric
/// evaluation loops so conversion happens once per polynomial.
template <class C>
std::vector<std::complex<double>> to_complex_coefficients(const Polynomial<C>& p) {
    std::vector<std::complex<double>> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(ScalarTraits<C>::to_complex(c));
    return out;
}

template <class T>
std::complex<T> horner(const std::vector<std::complex<T>>& ascending, std::complex<T> x) {
    std::complex<T> acc(0);
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace polyspace
