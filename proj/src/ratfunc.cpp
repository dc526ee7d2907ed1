#include "skewcomm/ratfunc.hpp"

#include "skewcomm/error.hpp"

#include <algorithm>
#include <utility>

namespace skewcomm {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::variable() { return QPoly(std::vector<mpq_class>{0, 1}); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly QPoly::scaled(const mpq_class& s) const {
    if (s == 0) return {};
    QPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw Error(Errc::ZeroNotInvertible, "polynomial division by zero");
    std::vector<mpq_class> rem = a.c_;
    const int db = b.degree();
    const int da = a.degree();
    std::vector<mpq_class> quo(da >= db ? da - db + 1 : 0);
    const mpq_class lead_inv = 1 / b.lead();
    for (int k = da - db; k >= 0; --k) {
        mpq_class coef = rem[k + db] * lead_inv;
        if (coef == 0) continue;
        quo[k] = coef;
        for (int j = 0; j <= db; ++j) rem[k + j] -= coef * b.c_[j];
    }
    q = QPoly(std::move(quo));
    r = QPoly(std::move(rem));
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    return scaled(1 / lead());
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

QPoly QPoly::taylor_shift(const mpq_class& c) const {
    if (c == 0 || is_zero()) return *this;
    // Horner in place: after the pass for k, coefficients hold p(t + c)
    std::vector<mpq_class> a = c_;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;) a[j] += c * a[j + 1];
    return QPoly(std::move(a));
}

QPoly QPoly::dilate(const mpq_class& q) const {
    std::vector<mpq_class> a = c_;
    mpq_class pw = 1;
    for (auto& x : a) {
        x *= pw;
        pw *= q;
    }
    return QPoly(std::move(a));
}

RatFunc::RatFunc(QPoly num, QPoly den) {
    if (den.is_zero()) throw Error(Errc::ZeroNotInvertible, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    if (den.degree() > 0) {
        QPoly g = QPoly::gcd(num, den);
        if (g.degree() > 0) {
            QPoly q, r;
            QPoly::divmod(num, g, q, r);
            num = std::move(q);
            QPoly::divmod(den, g, q, r);
            den = std::move(q);
        }
    }
    const mpq_class lead_inv = 1 / den.lead();
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
}

RatFunc RatFunc::constant(const mpq_class& c) { return RatFunc(QPoly::constant(c), QPoly::constant(1), Canonical{}); }

RatFunc RatFunc::variable() { return RatFunc(QPoly::variable(), QPoly::constant(1), Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.degree() == 0 && b.den_.degree() == 0)
        return RatFunc(a.num_ * b.num_, QPoly::constant(1), RatFunc::Canonical{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(Errc::ZeroNotInvertible, "inverse of zero in Q(t)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::taylor_shift(const mpq_class& c) const {
    // an automorphism keeps numerator and denominator coprime; only the
    // leading coefficient of the denominator needs fixing
    QPoly n = num_.taylor_shift(c);
    QPoly d = den_.taylor_shift(c);
    return RatFunc(std::move(n), std::move(d), Canonical{});
}

RatFunc RatFunc::dilate(const mpq_class& q) const {
    QPoly n = num_.dilate(q);
    QPoly d = den_.dilate(q);
    const mpq_class lead_inv = 1 / d.lead();
    return RatFunc(n.scaled(lead_inv), d.scaled(lead_inv), Canonical{});
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

std::string format_qpoly(const QPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (int k = p.degree(); k >= 0; --k) {
        if (c[k] == 0) continue;
        const bool neg = c[k] < 0;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        mpq_class mag = abs(c[k]);
        if (k == 0) {
            out += format_rational(mag);
            continue;
        }
        if (mag != 1) out += format_rational(mag) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

bool needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == '+' || ch == '*' || ch == '/' || (ch == '-' && i > 0)) return true;
    }
    return false;
}

}  // namespace

std::string format_ratfunc(const RatFunc& f, char var) {
    std::string num = format_qpoly(f.num(), var);
    if (f.den().degree() == 0) return num;
    std::string den = format_qpoly(f.den(), var);
    if (needs_parens(num)) num = "(" + num + ")";
    if (needs_parens(den)) den = "(" + den + ")";
    return num + "/" + den;
}

}  // namespace skewcomm
