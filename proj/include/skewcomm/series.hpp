#pragma once

// Truncated elements of the skew Laurent series ring D = k((sigma; x)),
// multiplication twisted by x^i a = sigma^i(a) x^i.
//
// A SkewSeries is known modulo O(x^prec). Coefficients are stored for the
// exponents val, ..., prec-1 with a nonzero leading coefficient; a series
// that is zero to precision stores nothing and has val == prec.

#include "skewcomm/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace skewcomm {

class SkewSeries {
public:
    /// coeffs holds the exponents val .. prec-1; leading zeros are stripped.
    SkewSeries(FieldCtx field, int val, std::vector<Elem> coeffs, int prec);

    static SkewSeries zero(FieldCtx field, int prec);
    /// Throws ExponentBeyondPrecision if some exponent is >= prec.
    static SkewSeries from_terms(FieldCtx field, const std::vector<std::pair<int, Elem>>& terms, int prec);
    static SkewSeries monomial(FieldCtx field, Elem a, int exponent, int prec);

    const FieldCtx& field_ctx() const { return field_; }
    const Field& field() const { return *field_; }

    int prec() const { return prec_; }
    /// First stored exponent; equals prec() for the zero series.
    int window_start() const { return val_; }
    /// Valuation, or nullopt (+infinity) when zero to precision.
    std::optional<int> valuation() const;
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Elem>& coeffs() const { return coeffs_; }
    /// Coefficient of x^e; throws PrecisionExceeded for e >= prec.
    Elem coeff(int e) const;
    /// Leading coefficient; throws ZeroNotInvertible on the zero series.
    const Elem& leading() const;

    SkewSeries truncated(int new_prec) const;

private:
    FieldCtx field_;
    int val_;
    int prec_;
    std::vector<Elem> coeffs_;
};

SkewSeries add(const SkewSeries& f, const SkewSeries& g);
SkewSeries neg(const SkewSeries& f);
SkewSeries sub(const SkewSeries& f, const SkewSeries& g);
/// Twisted convolution; prec = min(f.prec + val(g), g.prec + val(f)).
SkewSeries mul(const SkewSeries& f, const SkewSeries& g);
/// Two-sided inverse with val -val(f) and prec f.prec - 2 val(f).
SkewSeries inverse(const SkewSeries& f);
/// fg - gf
SkewSeries commutator(const SkewSeries& f, const SkewSeries& g);
/// u f u^{-1}
SkewSeries conjugate(const SkewSeries& f, const SkewSeries& u);
/// Coefficients agree for every exponent < upto; throws PrecisionExceeded
/// when upto exceeds either precision.
bool eq_to_prec(const SkewSeries& f, const SkewSeries& g, int upto);

inline SkewSeries operator+(const SkewSeries& f, const SkewSeries& g) { return add(f, g); }
inline SkewSeries operator-(const SkewSeries& f, const SkewSeries& g) { return sub(f, g); }
inline SkewSeries operator-(const SkewSeries& f) { return neg(f); }
inline SkewSeries operator*(const SkewSeries& f, const SkewSeries& g) { return mul(f, g); }

}  // namespace skewcomm
