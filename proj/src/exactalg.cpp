#include "polyspace/exactalg.hpp"

#include <algorithm>
#include <cctype>

namespace polyspace {

// ---------------------------------------------------------------------------
// scalars

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || den.empty() || !std::all_of(den.begin(), den.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw DomainError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational exact_from_double(double x) {
    Rational r(x);
    return r;
}

QPoly to_rational(const GPoly& p) {
    std::vector<Rational> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (!c.is_real()) throw DomainError("polynomial has a non-real coefficient");
        out.push_back(c.re);
    }
    return QPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// gcd / resultant

namespace {

template <class C>
Polynomial<C> integral_scaled(const Polynomial<C>& f) {
    mpz_class l = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ScalarTraits<C>::denominator_lcm(c).get_mpz_t());
    return f * C(Rational(l));
}

template <class C>
C power(const C& base, int e) {
    C r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

template <class C>
Polynomial<C> gcd_exact(const Polynomial<C>& f, const Polynomial<C>& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();

    Polynomial<C> a = integral_scaled(f);
    Polynomial<C> b = integral_scaled(g);
    if (a.degree() < b.degree()) std::swap(a, b);

    C gg(1);
    C h(1);
    while (true) {
        const int delta = a.degree() - b.degree();
        Polynomial<C> r = (a % b) * power(b.leading(), delta + 1);
        if (r.is_zero()) return b.monic();
        if (r.degree() == 0) return Polynomial<C>::constant(C(1));
        a = std::move(b);
        b = r * (C(1) / (gg * power(h, delta)));
        gg = a.leading();
        // h <- g^delta / h^(delta-1); unchanged when delta = 0
        if (delta > 0) h = power(gg, delta) / power(h, delta - 1);
    }
}

template <class C>
Polynomial<C> gcd_exact(std::span<const Polynomial<C>> fs) {
    Polynomial<C> acc;
    bool any = false;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        acc = any ? gcd_exact(acc, f) : f.monic();
        any = true;
        if (acc.degree() == 0) break;
    }
    if (!any) throw DomainError("gcd of an all-zero list");
    return acc;
}

template <class C>
C resultant(const Polynomial<C>& f, const Polynomial<C>& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    // Res(A, B) = (-1)^(da db) lc(B)^(da - dr) Res(B, A mod B); Res(A, c) = c^da.
    Polynomial<C> a = f;
    Polynomial<C> b = g;
    C acc(1);
    while (true) {
        const int da = a.degree();
        const int db = b.degree();
        if (db == 0) return acc * power(b.leading(), da);
        if (da == 0) return acc * power(a.leading(), db);
        Polynomial<C> r = a % b;
        if (r.is_zero()) return C(0);
        if ((da * db) % 2 == 1) acc = -acc;
        acc *= power(b.leading(), da - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

// ---------------------------------------------------------------------------
// squarefree

template <class C>
std::vector<SquarefreeFactor<C>> squarefree_decomposition(const Polynomial<C>& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor<C>> out;
    if (f.degree() == 0) return out;

    const Polynomial<C> df = derivative(f);
    const Polynomial<C> a0 = gcd_exact(f, df);
    Polynomial<C> b = f / a0;
    Polynomial<C> c = df / a0;
    if (b.is_constant()) return out;
    Polynomial<C> d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial<C> a = d.is_zero() ? b.monic() : gcd_exact(b, d);
        if (a.degree() > 0) out.push_back({a.monic(), i});
        b = b / a;
        c = d / a;
        d = b.degree() > 0 ? c - derivative(b) : Polynomial<C>{};
    }
    return out;
}

template <class C>
Polynomial<C> squarefree_part(const Polynomial<C>& f) {
    if (f.degree() <= 0) return Polynomial<C>::constant(C(1));
    return (f / gcd_exact(f, derivative(f))).monic();
}

// ---------------------------------------------------------------------------
// root bound

template <class C>
Rational cauchy_root_bound(std::span<const Polynomial<C>> fs) {
    Rational best = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) throw DomainError("cauchy_root_bound: zero polynomial");
        const C& lead = f.leading();
        for (int k = 0; k < f.degree(); ++k) {
            Rational r = ScalarTraits<C>::abs_bound(f[k] / lead);
            if (r > best) best = r;
        }
    }
    return best + 1;
}

template QPoly gcd_exact(const QPoly&, const QPoly&);
template GPoly gcd_exact(const GPoly&, const GPoly&);
template QPoly gcd_exact(std::span<const QPoly>);
template GPoly gcd_exact(std::span<const GPoly>);
template Rational resultant(const QPoly&, const QPoly&);
template GaussianRational resultant(const GPoly&, const GPoly&);
template std::vector<SquarefreeFactor<Rational>> squarefree_decomposition(const QPoly&);
template std::vector<SquarefreeFactor<GaussianRational>> squarefree_decomposition(const GPoly&);
template QPoly squarefree_part(const QPoly&);
template GPoly squarefree_part(const GPoly&);
template Rational cauchy_root_bound(std::span<const QPoly>);
template Rational cauchy_root_bound(std::span<const GPoly>);

// ---------------------------------------------------------------------------
// Sturm sequences and real roots

std::vector<QPoly> sturm_sequence(const QPoly& f) {
    std::vector<QPoly> seq;
    if (f.is_zero()) return seq;
    seq.push_back(f);
    QPoly d = derivative(f);
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        QPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        // positive rescaling keeps every sign and keeps coefficients small
        r *= Rational(1) / abs(r.leading());
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_variations(std::span<const QPoly> seq, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sgn(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int sign_variations_at_infinity(std::span<const QPoly> seq, bool at_plus) {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sgn(p.leading());
        if (!at_plus && p.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int count_real_roots(const QPoly& f) {
    if (f.is_zero()) throw DomainError("count_real_roots: zero polynomial");
    const QPoly g = squarefree_part(f);
    const auto seq = sturm_sequence(g);
    return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
}

namespace {

// Isolates the roots of squarefree g in the open interval (lo, hi), where
// g(lo) and g(hi) are nonzero.
void isolate(const QPoly& g, const std::vector<QPoly>& seq, const Rational& lo, const Rational& hi, int vlo, int vhi,
             int multiplicity, std::vector<RealRoot>& out) {
    const int n = vlo - vhi;
    if (n <= 0) return;
    if (n == 1) {
        out.push_back({lo, hi, multiplicity, g});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(g(mid)) == 0) {
        // Deflate so the split point is no longer a root.
        QPoly h = g / QPoly::linear(mid);
        auto hseq = sturm_sequence(h);
        out.push_back({mid, mid, multiplicity, g});
        isolate(h, hseq, lo, mid, sign_variations(hseq, lo), sign_variations(hseq, mid), multiplicity, out);
        isolate(h, hseq, mid, hi, sign_variations(hseq, mid), sign_variations(hseq, hi), multiplicity, out);
        return;
    }
    const int vmid = sign_variations(seq, mid);
    isolate(g, seq, lo, mid, vlo, vmid, multiplicity, out);
    isolate(g, seq, mid, hi, vmid, vhi, multiplicity, out);
}

}  // namespace

void refine(RealRoot& r, const Rational& width) {
    if (r.is_exact()) return;
    int slo = sgn(r.factor(r.lo));
    while (r.hi - r.lo > width) {
        Rational mid = (r.lo + r.hi) / 2;
        const int s = sgn(r.factor(mid));
        if (s == 0) {
            r.lo = mid;
            r.hi = mid;
            return;
        }
        if (s == slo)
            r.lo = std::move(mid);
        else
            r.hi = std::move(mid);
    }
}

bool root_less(RealRoot& a, RealRoot& b) {
    while (true) {
        if (a.is_exact() && b.is_exact()) return a.lo < b.lo;
        if (a.hi <= b.lo) return true;
        if (b.hi <= a.lo) return false;
        // overlap: halve whichever is wider (exact roots cannot shrink)
        if (!a.is_exact() && (b.is_exact() || a.width() >= b.width()))
            refine(a, a.width() / 2);
        else
            refine(b, b.width() / 2);
    }
}

std::vector<RealRoot> real_roots_exact(const QPoly& f) {
    if (f.is_zero()) throw DomainError("real_roots_exact: zero polynomial");
    std::vector<RealRoot> roots;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        const Rational bound = cauchy_root_bound(factor);
        const auto seq = sturm_sequence(factor);
        const Rational lo = -bound;
        const Rational hi = bound;
        isolate(factor, seq, lo, hi, sign_variations(seq, lo), sign_variations(seq, hi), mult, roots);
    }
    // insertion sort; the comparator refines intervals until they separate
    for (std::size_t i = 1; i < roots.size(); ++i) {
        for (std::size_t j = i; j > 0 && root_less(roots[j], roots[j - 1]); --j) std::swap(roots[j], roots[j - 1]);
    }
    return roots;
}

}  // namespace polyspace
