#pragma once

// Shared helpers and independent oracles for the test suites.

#include "skewcomm/decompose.hpp"
#include "skewcomm/field.hpp"
#include "skewcomm/series.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace testing {

using namespace skewcomm;

inline Elem random_nonzero(const Field& k, std::mt19937_64& rng) {
    while (true) {
        Elem a = k.random(rng);
        if (!k.is_zero(a)) return a;
    }
}

/// Dense random series with nonzero leading coefficient at x^val.
inline SkewSeries random_series(const FieldCtx& field, std::mt19937_64& rng, int val, int len) {
    std::vector<Elem> c;
    c.push_back(random_nonzero(*field, rng));
    for (int i = 1; i < len; ++i) c.push_back(field->random(rng));
    return SkewSeries(field, val, std::move(c), val + len);
}

/// Random series whose coefficients vanish at exponents divisible by n.
inline SkewSeries random_Dn(const FieldCtx& field, std::mt19937_64& rng, int val, int len, int n) {
    std::vector<Elem> c;
    for (int i = 0; i < len; ++i) {
        const int e = val + i;
        c.push_back(((e % n) + n) % n == 0 ? field->zero() : field->random(rng));
    }
    return SkewSeries(field, val, std::move(c), val + len);
}

inline int nonzero_terms(const SkewSeries& f) {
    int n = 0;
    for (const auto& c : f.coeffs()) n += f.field().is_zero(c) ? 0 : 1;
    return n;
}

/// Equal below the smaller precision.
inline bool agree(const SkewSeries& f, const SkewSeries& g) {
    return eq_to_prec(f, g, std::min(f.prec(), g.prec()));
}

inline bool same(const SkewSeries& f, const SkewSeries& g) {
    return f.prec() == g.prec() && eq_to_prec(f, g, f.prec());
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over F_p modulo a fixed monic modulus, written
// independently of FiniteField.

struct PolyModOracle {
    std::uint32_t p;
    std::vector<std::uint32_t> modulus;  // c0..cm, monic

    int m() const { return static_cast<int>(modulus.size()) - 1; }

    std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
        for (std::size_t d = prod.size(); d-- > static_cast<std::size_t>(m());) {
            const std::uint64_t c = prod[d];
            if (c == 0) continue;
            for (int i = 0; i <= m(); ++i) {
                const std::size_t idx = d - m() + i;
                prod[idx] = (prod[idx] + (p - c) * modulus[i]) % p;
            }
        }
        std::vector<std::uint32_t> out(m(), 0);
        for (int i = 0; i < m(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return out;
    }

    std::vector<std::uint32_t> pow(std::vector<std::uint32_t> a, unsigned long long e) const {
        std::vector<std::uint32_t> r(m(), 0);
        r[0] = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

/// Rank over F_p of the given row vectors, by plain elimination.
inline int rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    auto inv = [p](std::uint64_t a) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const std::uint64_t s = inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * s % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
            const std::uint64_t c = rows[r][col];
            for (std::size_t j = 0; j < cols; ++j)
                rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + (p - c) * rows[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

/// Twisted product computed term by term from a sparse map, truncated to the
/// precision min(f.prec + val g, g.prec + val f).
inline SkewSeries naive_product(const SkewSeries& f, const SkewSeries& g) {
    const Field& k = f.field();
    std::map<int, Elem> acc;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            const int ei = f.window_start() + static_cast<int>(i);
            const int ej = g.window_start() + static_cast<int>(j);
            const Elem term = k.mul(f.coeffs()[i], k.apply_sigma(g.coeffs()[j], ei));
            auto [it, fresh] = acc.try_emplace(ei + ej, term);
            if (!fresh) it->second = k.add(it->second, term);
        }
    const int prec = std::min(f.prec() + g.window_start(), g.prec() + f.window_start());
    std::vector<std::pair<int, Elem>> terms;
    for (auto& [e, a] : acc)
        if (e < prec) terms.emplace_back(e, a);
    return SkewSeries::from_terms(f.field_ctx(), terms, prec);
}

}  // namespace testing
