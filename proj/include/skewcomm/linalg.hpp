#pragma once

// Dense Gaussian elimination over an arbitrary exact field. The scalar
// arithmetic is supplied by an Ops object exposing zero/one/add/sub/mul/inv/
// is_zero, so the same routines run over F_p and over subfields of k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace skewcomm::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;  // row-major

template <class T>
struct Echelon {
    Matrix<T> rows;                  // reduced row-echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

template <class T, class Ops>
Echelon<T> rref(Matrix<T> a, const Ops& ops) {
    Echelon<T> out;
    const std::size_t nrows = a.size();
    const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && ops.is_zero(a[piv][c])) ++piv;
        if (piv == nrows) continue;
        std::swap(a[r], a[piv]);
        const T inv = ops.inv(a[r][c]);
        for (auto& x : a[r]) x = ops.mul(x, inv);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || ops.is_zero(a[i][c])) continue;
            const T factor = a[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                a[i][j] = ops.sub(a[i][j], ops.mul(factor, a[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

template <class T, class Ops>
std::size_t rank(Matrix<T> a, const Ops& ops) {
    return rref(std::move(a), ops).pivots.size();
}

// Columns given as vectors; builds the row-major coefficient matrix.
template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& columns, std::size_t nrows, const T& zero) {
    Matrix<T> a(nrows, std::vector<T>(columns.size(), zero));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < nrows; ++i) a[i][j] = columns[j][i];
    return a;
}

/// Particular solution of sum_j x_j * columns[j] = rhs taken from the reduced
/// row-echelon form with every free variable set to zero, or nullopt when the
/// system is inconsistent.
template <class T, class Ops>
std::optional<std::vector<T>> solve(const std::vector<std::vector<T>>& columns, const std::vector<T>& rhs,
                                    const Ops& ops) {
    const std::size_t nrows = rhs.size();
    const std::size_t nvars = columns.size();
    Matrix<T> aug = from_columns(columns, nrows, ops.zero());
    for (std::size_t i = 0; i < nrows; ++i) aug[i].push_back(rhs[i]);
    auto ech = rref(std::move(aug), ops);
    std::vector<T> x(nvars, ops.zero());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] == nvars) return std::nullopt;
        x[ech.pivots[r]] = ech.rows[r][nvars];
    }
    return x;
}

/// Basis of the kernel of the column map, one vector per free variable in
/// increasing column order (that free variable 1, the others 0).
template <class T, class Ops>
std::vector<std::vector<T>> nullspace(const std::vector<std::vector<T>>& columns, std::size_t nrows,
                                      const Ops& ops) {
    const std::size_t nvars = columns.size();
    auto ech = rref(from_columns(columns, nrows, ops.zero()), ops);
    std::vector<bool> is_pivot(nvars, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < nvars; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(nvars, ops.zero());
        v[f] = ops.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = ops.sub(ops.zero(), ech.rows[r][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Scalar ops for the prime field F_p, p < 2^31.
struct PrimeOps {
    std::uint32_t p;

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const { return pow(a, p - 2); }
    bool is_zero(std::uint32_t a) const { return a == 0; }
};

}  // namespace skewcomm::linalg
