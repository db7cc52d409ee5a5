#include "sosgap/form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sosgap {

bool GradedLexBefore::operator()(const ExponentVector& a, const ExponentVector& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;  // larger x1-exponent first
}

std::vector<ExponentVector> monomial_basis(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("monomial_basis: n >= 1, d >= 0 required");
    std::vector<ExponentVector> out;
    ExponentVector cur(static_cast<std::size_t>(n), 0);
    // recursive enumeration emits graded-lex order directly
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

Form::Form(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1 || degree < 0) throw std::invalid_argument("Form: n >= 1, degree >= 0 required");
}

Form Form::monomial(int n, const ExponentVector& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("Form: exponent size mismatch");
    int d = 0;
    for (int x : e) {
        if (x < 0) throw std::invalid_argument("Form: negative exponent");
        d += x;
    }
    Form f(n, d);
    if (!c.is_zero()) f.terms_[e] = c;
    return f;
}

Form Form::from_terms(int n, int degree, TermMap terms) {
    Form f(n, degree);
    for (auto it = terms.begin(); it != terms.end();) {
        if (static_cast<int>(it->first.size()) != n)
            throw std::invalid_argument("Form: exponent size mismatch");
        int d = std::accumulate(it->first.begin(), it->first.end(), 0);
        if (d != degree) throw std::invalid_argument("Form: mixed-degree terms");
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    f.terms_ = std::move(terms);
    return f;
}

Form Form::linear(const std::vector<Rational>& w) {
    int n = static_cast<int>(w.size());
    Form f(n, 1);
    for (int i = 0; i < n; ++i) {
        if (w[static_cast<std::size_t>(i)].is_zero()) continue;
        ExponentVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        f.terms_[e] = w[static_cast<std::size_t>(i)];
    }
    return f;
}

Form Form::constant(int n, const Rational& c) {
    Form f(n, 0);
    if (!c.is_zero()) f.terms_[ExponentVector(static_cast<std::size_t>(n), 0)] = c;
    return f;
}

Rational Form::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Form Form::operator+(const Form& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Form: variable count mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw std::invalid_argument("Form: degree mismatch in sum");
    TermMap t = terms_;
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = t.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    Form f(n_, degree_);
    f.terms_ = std::move(t);
    return f;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const { return scaled(Rational(-1)); }

Form Form::operator*(const Form& o) const { return multiply(*this, o); }

Form Form::scaled(const Rational& c) const {
    Form f(n_, degree_);
    if (c.is_zero()) return f;
    for (const auto& [e, v] : terms_) f.terms_[e] = v * c;
    return f;
}

bool Form::operator==(const Form& o) const {
    if (n_ != o.n_) return false;
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

std::vector<Rational> Form::coefficient_vector(const std::vector<ExponentVector>& monomials) const {
    std::vector<Rational> v(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) v[i] = coeff(monomials[i]);
    return v;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " *";
        for (std::size_t i = 0; i < e.size(); ++i) os << " x" << (i + 1) << "^" << e[i];
    }
    return os.str();
}

Rational evaluate(const Form& p, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != p.n())
        throw std::invalid_argument("evaluate: dimension mismatch");
    Rational sum;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term *= pow(v[i], static_cast<unsigned long>(e[i]));
        sum += term;
    }
    return sum;
}

Form partial(const Form& p, int var) {
    if (var < 0 || var >= p.n()) throw std::invalid_argument("partial: variable out of range");
    Form::TermMap t;
    for (const auto& [e, c] : p.terms()) {
        int a = e[static_cast<std::size_t>(var)];
        if (a == 0) continue;
        ExponentVector e2 = e;
        e2[static_cast<std::size_t>(var)] = a - 1;
        t[e2] = c * Rational(a);
    }
    return Form::from_terms(p.n(), p.degree() > 0 ? p.degree() - 1 : 0, std::move(t));
}

std::vector<Rational> gradient_at(const Form& p, const std::vector<Rational>& v) {
    std::vector<Rational> g(static_cast<std::size_t>(p.n()));
    for (int i = 0; i < p.n(); ++i) g[static_cast<std::size_t>(i)] = evaluate(partial(p, i), v);
    return g;
}

Matrix hessian_at(const Form& p, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != p.n())
        throw std::invalid_argument("hessian_at: dimension mismatch");
    int n = p.n();
    Matrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Form pi = partial(p, i);
        for (int j = i; j < n; ++j) {
            Rational val = evaluate(partial(pi, j), v);
            h.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = val;
            h.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = val;
        }
    }
    return h;
}

Form multiply(const Form& p, const Form& q) {
    if (p.n() != q.n()) throw std::invalid_argument("multiply: variable count mismatch");
    Form::TermMap t;
    for (const auto& [ea, ca] : p.terms()) {
        for (const auto& [eb, cb] : q.terms()) {
            ExponentVector e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = t.emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    for (auto it = t.begin(); it != t.end();)
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
    return Form::from_terms(p.n(), p.degree() + q.degree(), std::move(t));
}

Form power(const Form& p, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    Form r = Form::constant(p.n(), Rational(1));
    for (int i = 0; i < k; ++i) r = multiply(r, p);
    return r;
}

UnivariatePoly restrict_to_line(const Form& p, const LineTemplate& line) {
    if (static_cast<int>(line.size()) != p.n())
        throw std::invalid_argument("restrict_to_line: template size mismatch");
    int param = -1;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (!line[i].has_value()) {
            if (param >= 0)
                throw std::invalid_argument("restrict_to_line: multiple parameter slots");
            param = static_cast<int>(i);
        }
    }
    if (param < 0) throw std::invalid_argument("restrict_to_line: no parameter slot");
    std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& [e, c] : p.terms()) {
        Rational val = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == param || e[i] == 0) continue;
            val *= pow(*line[i], static_cast<unsigned long>(e[i]));
        }
        coeffs[static_cast<std::size_t>(e[static_cast<std::size_t>(param)])] += val;
    }
    return UnivariatePoly(std::move(coeffs));
}

Form symmetrize(const Form& p) {
    if (p.n() > 8) throw std::invalid_argument("symmetrize: capped at n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(p.n()));
    std::iota(perm.begin(), perm.end(), 0);
    Form::TermMap t;
    unsigned long count = 0;
    do {
        ++count;
        for (const auto& [e, c] : p.terms()) {
            ExponentVector e2(e.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e2[static_cast<std::size_t>(perm[i])] = e[i];
            auto [it, inserted] = t.emplace(e2, c);
            if (!inserted) it->second += c;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational inv(1, static_cast<long>(count));
    for (auto it = t.begin(); it != t.end();) {
        it->second *= inv;
        it = it->second.is_zero() ? t.erase(it) : std::next(it);
    }
    return Form::from_terms(p.n(), p.degree(), std::move(t));
}

Form form_from_text(int n, int degree, const std::string& text) {
    Form f(n, degree);
    if (text == "0") return f;
    Form::TermMap t;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        Rational c = Rational::parse(tok);
        is >> tok;  // "*"
        if (tok != "*") throw std::invalid_argument("form_from_text: expected '*'");
        ExponentVector e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (!(is >> tok)) throw std::invalid_argument("form_from_text: truncated term");
            auto caret = tok.find('^');
            if (caret == std::string::npos || tok[0] != 'x')
                throw std::invalid_argument("form_from_text: bad variable token");
            int idx = std::stoi(tok.substr(1, caret - 1));
            if (idx != i + 1) throw std::invalid_argument("form_from_text: variables out of order");
            e[static_cast<std::size_t>(i)] = std::stoi(tok.substr(caret + 1));
        }
        t[e] = c;
        if (!(is >> tok)) break;
        if (tok != "+") throw std::invalid_argument("form_from_text: expected '+'");
    }
    return Form::from_terms(n, degree, std::move(t));
}

}  // namespace sosgap
