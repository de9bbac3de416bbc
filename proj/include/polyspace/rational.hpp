#pragma once

// Exact scalars: rationals (GMP-backed) and Gaussian rationals.

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyspace {

/// Arbitrary-precision rational in canonical form (gcd(num, den) = 1, den > 0).
/// GMP canonicalizes the result of every arithmetic operation.
using Rational = mpq_class;

/// Raised when a caller violates a documented precondition or the input lies
/// outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Exact "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

/// Rational from a double, exactly (every finite double is a dyadic rational).
Rational exact_from_double(double x);

inline double to_double(const Rational& q) { return q.get_d(); }

/// -1, 0 or +1.
inline int sign(const Rational& q) { return sgn(q); }

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int r) : re(r), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return sgn(im) == 0; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DomainError("GaussianRational: division by zero");
        Rational n = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

/// |re| + |im|, a rational upper bound for the modulus.
inline Rational l1_norm(const GaussianRational& z) { return abs(z.re) + abs(z.im); }

inline std::complex<double> to_complex(const GaussianRational& z) {
    return {z.re.get_d(), z.im.get_d()};
}

// Scalar traits so polynomial algorithms can be written once for both fields.
template <class C>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static bool is_zero(const Rational& q) { return sgn(q) == 0; }
    static Rational abs_bound(const Rational& q) { return abs(q); }
    static std::complex<double> to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
    static Rational conjugate(const Rational& q) { return q; }
    static bool is_real(const Rational&) { return true; }
    // Least common multiple of the denominators involved.
    static mpz_class denominator_lcm(const Rational& q) { return q.get_den(); }
};

template <>
struct ScalarTraits<GaussianRational> {
    static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
    static Rational abs_bound(const GaussianRational& z) { return l1_norm(z); }
    static std::complex<double> to_complex(const GaussianRational& z) { return polyspace::to_complex(z); }
    static GaussianRational conjugate(const GaussianRational& z) { return conj(z); }
    static bool is_real(const GaussianRational& z) { return z.is_real(); }
    static mpz_class denominator_lcm(const GaussianRational& z) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), z.re.get_den_mpz_t(), z.im.get_den_mpz_t());
        return l;
    }
};

}  // namespace polyspace
