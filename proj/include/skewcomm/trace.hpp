#pragma once

// Left-regular representation of D over K = k((x^n)) for sigma of finite
// order n, and the reduced trace.
//
// D is a right K-space with basis 1, x, ..., x^{n-1}; column j of the matrix
// of f holds the coordinates of f x^j.

#include "skewcomm/series.hpp"

#include <vector>

namespace skewcomm {

/// Laurent series in x^n: a SkewSeries whose stored exponents are all
/// divisible by n.
class KSeries {
public:
    KSeries(SkewSeries s, int n);

    const SkewSeries& series() const { return s_; }
    int period() const { return n_; }
    int prec() const { return s_.prec(); }
    bool is_zero() const { return s_.is_zero(); }

private:
    SkewSeries s_;
    int n_;
};

KSeries operator+(const KSeries& a, const KSeries& b);
KSeries operator*(const KSeries& a, const KSeries& b);
/// Coefficients agree below the smaller of the two precisions.
bool agree(const KSeries& a, const KSeries& b);

struct MatrixRep {
    int n;
    std::vector<KSeries> entries;  // row-major

    const KSeries& at(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
};

/// Throws InfiniteOrder.
MatrixRep matrix_rep(const SkewSeries& f);
MatrixRep operator*(const MatrixRep& a, const MatrixRep& b);
bool agree(const MatrixRep& a, const MatrixRep& b);
KSeries trace(const MatrixRep& m);

/// sum over l = 0 mod n of Tr_{k/k0}(a_l) x^l. Throws InfiniteOrder.
KSeries reduced_trace(const SkewSeries& f);

}  // namespace skewcomm
