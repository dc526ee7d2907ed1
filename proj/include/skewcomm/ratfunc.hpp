#pragma once

// Exact arithmetic in Q[t] and Q(t) on top of GMP rationals.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace skewcomm {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs);
    static QPoly constant(const mpq_class& c);
    static QPoly variable();  // t

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& lead() const { return c_.back(); }

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    QPoly scaled(const mpq_class& s) const;

    // quotient and remainder, b nonzero
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    static QPoly gcd(QPoly a, QPoly b);  // monic, gcd(0,0) = 0

    QPoly monic() const;
    QPoly taylor_shift(const mpq_class& c) const;  // p(t + c)
    QPoly dilate(const mpq_class& q) const;        // p(q t)

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Element of Q(t) in lowest terms with monic denominator; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(QPoly::constant(1)) {}
    RatFunc(QPoly num, QPoly den);  // normalizes, den nonzero
    static RatFunc constant(const mpq_class& c);
    static RatFunc variable();

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inverse() const;  // throws on zero

    RatFunc taylor_shift(const mpq_class& c) const;
    RatFunc dilate(const mpq_class& q) const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    struct Canonical {};
    RatFunc(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    QPoly num_;
    QPoly den_;
};

std::string format_rational(const mpq_class& q);
std::string format_qpoly(const QPoly& p, char var);
std::string format_ratfunc(const RatFunc& f, char var);

}  // namespace skewcomm
