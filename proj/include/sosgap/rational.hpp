#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace sosgap {

using Int = mpz_class;

/// Exact rational scalar, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(long num, long den);
    Rational(const Int& num, const Int& den);

    /// Parses "num/den" or a bare integer "num".
    static Rational parse(const std::string& s);

    Int numerator() const { return q_.get_num(); }
    Int denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const;

    /// Canonical text form "num/den" (denominator always present).
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    double to_double() const { return q_.get_d(); }

    /// Compares |numerator| only; pivot-selection heuristic for elimination.
    static int cmp_abs_numerator(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned long e);

Int binomial(const Int& n, const Int& k);
Int binomial(long n, long k);
Int factorial(unsigned long n);

/// Best rational approximation of x with denominator at most max_den
/// (continued-fraction convergents).
Rational rationalize(double x, unsigned long max_den);

}  // namespace sosgap
