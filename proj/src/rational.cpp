#include "sosgap/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sosgap {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    Rational r;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            r.q_ = mpq_class(Int(s));
        } else {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("Rational: zero denominator");
            r.q_ = mpq_class(num, den);
            r.q_.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

int Rational::cmp_abs_numerator(const Rational& a, const Rational& b) {
    return mpz_cmpabs(a.q_.get_num().get_mpz_t(), b.q_.get_num().get_mpz_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

Int binomial(long n, long k) { return binomial(Int(n), Int(k)); }

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rationalize(double x, unsigned long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // continued fraction expansion, keeping the last convergent within bounds
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9.2e18) break;
        Int a(static_cast<unsigned long>(fl));
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > Int(max_den)) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? -r : r;
}

}  // namespace sosgap
