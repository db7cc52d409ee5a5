#include "sosgap/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace sosgap {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UnivariatePoly UnivariatePoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UnivariatePoly(std::move(v));
}

Rational UnivariatePoly::evaluate(const Rational& x) const {
    Rational v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return UnivariatePoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& c) const {
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * c;
    return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return UnivariatePoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UnivariatePoly(std::move(v));
}

std::string UnivariatePoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str() + "*x^" + std::to_string(i);
    }
    return s;
}

UnivariatePoly poly_rem(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_rem: division by zero polynomial");
    std::vector<Rational> r = a.coeffs();
    long db = b.degree();
    Rational lead_inv = Rational(1) / b.coeff(static_cast<std::size_t>(db));
    while (static_cast<long>(r.size()) - 1 >= db) {
        Rational f = r.back() * lead_inv;
        std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
        for (long i = 0; i <= db; ++i)
            r[shift + static_cast<std::size_t>(i)] -= f * b.coeff(static_cast<std::size_t>(i));
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        if (r.empty()) break;
    }
    return UnivariatePoly(std::move(r));
}

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        UnivariatePoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.coeff(static_cast<std::size_t>(a.degree())));
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.degree() <= 1) return p;
    UnivariatePoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    // exact division p / g via repeated remainder-free long division
    std::vector<Rational> num = p.coeffs();
    long dg = g.degree();
    Rational lead_inv = Rational(1) / g.coeff(static_cast<std::size_t>(dg));
    std::vector<Rational> q(num.size() - static_cast<std::size_t>(dg));
    for (long i = static_cast<long>(num.size()) - 1; i >= dg; --i) {
        Rational f = num[static_cast<std::size_t>(i)] * lead_inv;
        q[static_cast<std::size_t>(i - dg)] = f;
        if (f.is_zero()) continue;
        for (long j = 0; j <= dg; ++j)
            num[static_cast<std::size_t>(i - dg + j)] -= f * g.coeff(static_cast<std::size_t>(j));
    }
    return UnivariatePoly(std::move(q));
}

namespace {

std::vector<UnivariatePoly> sturm_sequence(const UnivariatePoly& p) {
    std::vector<UnivariatePoly> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UnivariatePoly r = poly_rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(r.scaled(Rational(-1)));
    }
    return seq;
}

int sign_changes_at(const std::vector<UnivariatePoly>& seq, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& q : seq) {
        int s = q.evaluate(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Cauchy root bound: all real roots lie in (-B, B).
Rational cauchy_bound(const UnivariatePoly& p) {
    Rational lead = p.coeff(static_cast<std::size_t>(p.degree())).abs();
    Rational m;
    for (long i = 0; i < p.degree(); ++i) {
        Rational a = p.coeff(static_cast<std::size_t>(i)).abs();
        if (a > m) m = a;
    }
    return Rational(1) + m / lead;
}

void isolate(const std::vector<UnivariatePoly>& seq, const UnivariatePoly& sf, const Rational& lo,
             const Rational& hi, int nroots, std::vector<RealRoot>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        // shrink until the interval is reasonably tight; endpoints are non-roots
        Rational a = lo, b = hi;
        for (int it = 0; it < 4; ++it) {
            Rational mid = (a + b) / Rational(2);
            if (sf.evaluate(mid).is_zero()) {
                out.push_back({true, mid, mid, mid});
                return;
            }
            int left = sign_changes_at(seq, a) - sign_changes_at(seq, mid);
            if (left == 1)
                b = mid;
            else
                a = mid;
        }
        out.push_back({false, Rational(0), a, b});
        return;
    }
    // split point must avoid roots so Sturm counts stay consistent
    Rational mid = (lo + hi) / Rational(2);
    Rational off = (hi - lo) / Rational(2048);
    while (sf.evaluate(mid).is_zero()) mid += off;
    int left = sign_changes_at(seq, lo) - sign_changes_at(seq, mid);
    isolate(seq, sf, lo, mid, left, out);
    isolate(seq, sf, mid, hi, nroots - left, out);
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const UnivariatePoly& p) {
    std::vector<RealRoot> out;
    if (p.is_zero() || p.degree() == 0) return out;
    UnivariatePoly sf = squarefree_part(p);
    if (sf.degree() == 1) {
        out.push_back({true, -sf.coeff(0) / sf.coeff(1), Rational(0), Rational(0)});
        return out;
    }
    auto seq = sturm_sequence(sf);
    Rational b = cauchy_bound(sf);
    int n = sign_changes_at(seq, -b) - sign_changes_at(seq, b);
    isolate(seq, sf, -b, b, n, out);
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) {
        Rational xv = x.exact ? x.value : x.lo;
        Rational yv = y.exact ? y.value : y.lo;
        return xv < yv;
    });
    return out;
}

std::optional<Rational> find_negative_value(const UnivariatePoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.degree() == 0) return p.coeff(0).sign() < 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    Rational b = cauchy_bound(p) + Rational(1);
    Rational lead = p.coeff(static_cast<std::size_t>(p.degree()));
    if (lead.sign() < 0) return b;                        // -> -inf as x -> +inf
    if (p.degree() % 2 == 1) return -b;                   // odd degree, positive lead
    auto roots = isolate_real_roots(p);
    // sign is constant strictly between consecutive roots; sample each gap
    std::vector<Rational> samples;
    samples.push_back(-b);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        Rational r = roots[i].exact ? roots[i].value : roots[i].hi;
        Rational l = roots[i + 1].exact ? roots[i + 1].value : roots[i + 1].lo;
        samples.push_back((r + l) / Rational(2));
    }
    samples.push_back(b);
    for (const auto& x : samples)
        if (p.evaluate(x).sign() < 0) return x;
    return std::nullopt;
}

}  // namespace sosgap
