#include "skewcomm/trace.hpp"

#include <algorithm>
#include <string>

namespace skewcomm {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int round_up(int a, int n) { return a + mod(-a, n); }

int require_finite_order(const Field& k) {
    const auto order = k.sigma_order();
    if (!order) throw Error(Errc::InfiniteOrder, "sigma has infinite order; no representation over k((x^n))");
    return *order;
}

}  // namespace

KSeries::KSeries(SkewSeries s, int n) : s_(std::move(s)), n_(n) {
    for (std::size_t idx = 0; idx < s_.coeffs().size(); ++idx) {
        const int e = s_.window_start() + static_cast<int>(idx);
        if (mod(e, n_) != 0 && !s_.field().is_zero(s_.coeffs()[idx]))
            throw Error(Errc::Unsupported, "x^" + std::to_string(e) + " is not a power of x^" + std::to_string(n_));
    }
}

KSeries operator+(const KSeries& a, const KSeries& b) { return KSeries(a.series() + b.series(), a.period()); }

KSeries operator*(const KSeries& a, const KSeries& b) { return KSeries(a.series() * b.series(), a.period()); }

bool agree(const KSeries& a, const KSeries& b) {
    return eq_to_prec(a.series(), b.series(), std::min(a.prec(), b.prec()));
}

MatrixRep matrix_rep(const SkewSeries& f) {
    const Field& k = f.field();
    const int n = require_finite_order(k);
    const int s = f.window_start();
    const int P = f.prec();
    MatrixRep rep{n, {}};
    rep.entries.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // f x^j = sum_l x^i sigma^{-i}(a_l) x^{l+j-i} over l = i - j mod n
            const int prec = round_up(P + j - i, n);
            std::vector<std::pair<int, Elem>> terms;
            for (int l = s + mod(i - j - s, n); l < P; l += n) {
                const Elem& a = f.coeffs()[static_cast<std::size_t>(l - s)];
                if (!k.is_zero(a)) terms.emplace_back(l + j - i, k.apply_sigma(a, -i));
            }
            rep.entries.emplace_back(SkewSeries::from_terms(f.field_ctx(), terms, prec), n);
        }
    }
    return rep;
}

MatrixRep operator*(const MatrixRep& a, const MatrixRep& b) {
    const int n = a.n;
    MatrixRep out{n, {}};
    out.entries.reserve(a.entries.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            KSeries acc = a.at(i, 0) * b.at(0, j);
            for (int r = 1; r < n; ++r) acc = acc + a.at(i, r) * b.at(r, j);
            out.entries.push_back(std::move(acc));
        }
    }
    return out;
}

bool agree(const MatrixRep& a, const MatrixRep& b) {
    if (a.n != b.n) return false;
    for (std::size_t idx = 0; idx < a.entries.size(); ++idx)
        if (!agree(a.entries[idx], b.entries[idx])) return false;
    return true;
}

KSeries trace(const MatrixRep& m) {
    KSeries acc = m.at(0, 0);
    for (int i = 1; i < m.n; ++i) acc = acc + m.at(i, i);
    return acc;
}

KSeries reduced_trace(const SkewSeries& f) {
    const Field& k = f.field();
    const int n = require_finite_order(k);
    const int s = f.window_start();
    std::vector<std::pair<int, Elem>> terms;
    for (int l = round_up(s, n); l < f.prec(); l += n) {
        const Elem& a = f.coeffs()[static_cast<std::size_t>(l - s)];
        if (k.is_zero(a)) continue;
        Elem tr = a;
        for (int r = 1; r < n; ++r) tr = k.add(tr, k.apply_sigma(a, r));
        terms.emplace_back(l, tr);
    }
    return KSeries(SkewSeries::from_terms(f.field_ctx(), terms, round_up(f.prec(), n)), n);
}

}  // namespace skewcomm
