#include "skewcomm/series.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace skewcomm {

namespace {

void require_same_field(const SkewSeries& f, const SkewSeries& g) {
    if (!same_field(f.field(), g.field()))
        throw Error(Errc::FieldMismatch, f.field().spec() + " vs " + g.field().spec());
}

}  // namespace

SkewSeries::SkewSeries(FieldCtx field, int val, std::vector<Elem> coeffs, int prec)
    : field_(std::move(field)), val_(val), prec_(prec), coeffs_(std::move(coeffs)) {
    if (prec_ < val_ || coeffs_.size() != static_cast<std::size_t>(prec_ - val_))
        throw Error(Errc::PrecisionExceeded, "coefficient window does not match [val, prec)");
    std::size_t lead = 0;
    while (lead < coeffs_.size() && field_->is_zero(coeffs_[lead])) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
    }
}

SkewSeries SkewSeries::zero(FieldCtx field, int prec) { return SkewSeries(std::move(field), prec, {}, prec); }

SkewSeries SkewSeries::from_terms(FieldCtx field, const std::vector<std::pair<int, Elem>>& terms, int prec) {
    if (terms.empty()) return zero(std::move(field), prec);
    int lo = prec;
    for (const auto& [e, a] : terms) {
        if (e >= prec)
            throw Error(Errc::ExponentBeyondPrecision,
                        "exponent " + std::to_string(e) + " not below precision " + std::to_string(prec));
        lo = std::min(lo, e);
    }
    std::vector<Elem> coeffs(static_cast<std::size_t>(prec - lo), field->zero());
    for (const auto& [e, a] : terms) {
        auto& slot = coeffs[static_cast<std::size_t>(e - lo)];
        slot = field->add(slot, a);
    }
    return SkewSeries(std::move(field), lo, std::move(coeffs), prec);
}

SkewSeries SkewSeries::monomial(FieldCtx field, Elem a, int exponent, int prec) {
    return from_terms(std::move(field), {{exponent, std::move(a)}}, prec);
}

std::optional<int> SkewSeries::valuation() const {
    if (is_zero()) return std::nullopt;
    return val_;
}

Elem SkewSeries::coeff(int e) const {
    if (e >= prec_)
        throw Error(Errc::PrecisionExceeded,
                    "coefficient of x^" + std::to_string(e) + " unknown below O(x^" + std::to_string(prec_) + ")");
    if (e < val_) return field_->zero();
    return coeffs_[static_cast<std::size_t>(e - val_)];
}

const Elem& SkewSeries::leading() const {
    if (is_zero()) throw Error(Errc::ZeroNotInvertible, "zero series has no leading coefficient");
    return coeffs_.front();
}

SkewSeries SkewSeries::truncated(int new_prec) const {
    if (new_prec >= prec_) return *this;
    if (new_prec <= val_) return zero(field_, new_prec);
    std::vector<Elem> c(coeffs_.begin(), coeffs_.begin() + (new_prec - val_));
    return SkewSeries(field_, val_, std::move(c), new_prec);
}

SkewSeries add(const SkewSeries& f, const SkewSeries& g) {
    require_same_field(f, g);
    const Field& k = f.field();
    const int prec = std::min(f.prec(), g.prec());
    const int val = std::min({f.window_start(), g.window_start(), prec});
    std::vector<Elem> c(static_cast<std::size_t>(prec - val), k.zero());
    for (int e = val; e < prec; ++e) {
        const bool in_f = e >= f.window_start();
        const bool in_g = e >= g.window_start();
        auto& slot = c[static_cast<std::size_t>(e - val)];
        if (in_f && in_g)
            slot = k.add(f.coeffs()[e - f.window_start()], g.coeffs()[e - g.window_start()]);
        else if (in_f)
            slot = f.coeffs()[e - f.window_start()];
        else if (in_g)
            slot = g.coeffs()[e - g.window_start()];
    }
    return SkewSeries(f.field_ctx(), val, std::move(c), prec);
}

SkewSeries neg(const SkewSeries& f) {
    std::vector<Elem> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(f.field().neg(a));
    return SkewSeries(f.field_ctx(), f.window_start(), std::move(c), f.prec());
}

SkewSeries sub(const SkewSeries& f, const SkewSeries& g) { return add(f, neg(g)); }

SkewSeries mul(const SkewSeries& f, const SkewSeries& g) {
    require_same_field(f, g);
    const Field& k = f.field();
    const int fv = f.window_start();
    const int gv = g.window_start();
    const int prec = std::min(f.prec() + gv, g.prec() + fv);
    const int val = fv + gv;
    const int len = prec - val;
    std::vector<Elem> c(static_cast<std::size_t>(len), k.zero());
    const int flen = std::min<int>(static_cast<int>(f.coeffs().size()), len);
    const int glen = std::min<int>(static_cast<int>(g.coeffs().size()), len);

    // sigma^{fv+i}(g_j) depends on (fv+i) mod n only when sigma has finite order
    const auto order = k.sigma_order();
    std::map<std::pair<int, int>, Elem> cache;
    auto twisted = [&](int shift, int j) -> Elem {
        if (!order) return k.apply_sigma(g.coeffs()[j], shift);
        const int r = ((shift % *order) + *order) % *order;
        auto [it, inserted] = cache.try_emplace({r, j});
        if (inserted) it->second = k.apply_sigma(g.coeffs()[j], r);
        return it->second;
    };

    for (int i = 0; i < flen; ++i) {
        const Elem& a = f.coeffs()[i];
        if (k.is_zero(a)) continue;
        for (int j = 0; i + j < len && j < glen; ++j) {
            const Elem& b = g.coeffs()[j];
            if (k.is_zero(b)) continue;
            auto& slot = c[static_cast<std::size_t>(i + j)];
            slot = k.add(slot, k.mul(a, twisted(fv + i, j)));
        }
    }
    return SkewSeries(f.field_ctx(), val, std::move(c), prec);
}

SkewSeries inverse(const SkewSeries& f) {
    if (f.is_zero()) throw Error(Errc::ZeroNotInvertible, "series is zero to precision");
    const Field& k = f.field();
    const int v = f.window_start();
    const int rel = f.prec() - v;
    // g f = 1: sum_{i<=j} g_{-v+i} sigma^{-v+i}(a_{v+j-i}) = delta_{j0}
    const auto& a = f.coeffs();
    const Elem lead_inv = k.inv(k.apply_sigma(a[0], -v));
    std::vector<Elem> g;
    g.reserve(static_cast<std::size_t>(rel));
    g.push_back(lead_inv);
    for (int j = 1; j < rel; ++j) {
        Elem acc = k.zero();
        for (int i = 0; i < j; ++i) {
            const Elem& aj = a[static_cast<std::size_t>(j - i)];
            if (k.is_zero(aj) || k.is_zero(g[i])) continue;
            acc = k.add(acc, k.mul(g[i], k.apply_sigma(aj, -v + i)));
        }
        // g_j sigma^{-v+j}(a_v) = -acc
        g.push_back(k.neg(k.mul(acc, k.inv(k.apply_sigma(a[0], -v + j)))));
    }
    return SkewSeries(f.field_ctx(), -v, std::move(g), -v + rel);
}

SkewSeries commutator(const SkewSeries& f, const SkewSeries& g) { return sub(mul(f, g), mul(g, f)); }

SkewSeries conjugate(const SkewSeries& f, const SkewSeries& u) { return mul(mul(u, f), inverse(u)); }

bool eq_to_prec(const SkewSeries& f, const SkewSeries& g, int upto) {
    require_same_field(f, g);
    if (upto > f.prec() || upto > g.prec())
        throw Error(Errc::PrecisionExceeded, "comparison to O(x^" + std::to_string(upto) + ") exceeds known precision");
    const int lo = std::min(f.window_start(), g.window_start());
    for (int e = lo; e < upto; ++e)
        if (!(f.coeff(e) == g.coeff(e))) return false;
    return true;
}

}  // namespace skewcomm
