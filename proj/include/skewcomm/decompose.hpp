#pragma once

// Writing an element of k((sigma; x)) as a product of two commutators.
//
// Three constructions are used depending on the witness b in k driving the
// decomposition:
//   * deg_sigma(b) infinite: f = x^n * tail with both factors of the form
//     [b, .] (decompose_infinite);
//   * deg_sigma(b) = n >= 5, or n = 4 with val(f) not 2 mod 4: f = g h with
//     g, h supported off nZ, each in [b, D] (decompose_deg_ge5 and the split
//     branch of decompose_order4);
//   * n = 4 and val(f) = 2 mod 4: factors with coefficients in
//     L = Im(sigma - 1), each in [x, D], after conjugating by the normal basis
//     element when the leading coefficient lies in k1.
// Orders 2 and 3 are rejected: no constructive route is available.

#include "skewcomm/field.hpp"
#include "skewcomm/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace skewcomm {

enum class Method { InfiniteWitness, DegreeAtLeast5, Order4Split, Order4L, Order4Conjugated, ZeroInput };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

using SeriesPair = std::pair<SkewSeries, SkewSeries>;

/// Claims input = [p1, q1][p2, q2] to O(x^check_prec).
struct Certificate {
    FieldCtx field;
    SkewSeries input;
    std::array<SeriesPair, 2> pairs;
    int check_prec;
    Method method;
    /// Set for order 4 in characteristic 2, where the order-4 argument is not
    /// known to apply; the certificate is still verified by re-multiplication.
    bool experimental = false;

    std::string field_spec() const { return field->spec(); }
    std::string sigma_spec() const { return field->sigma_spec(); }
};

/// u + v = s with n dividing none of u, v, u - v.
struct SplitPair {
    int u;
    int v;
    int n;
    int s;
};

/// (b - sigma^i(b))^{-1} a x^i, so that [b, result] = a x^i. Throws WitnessFixed.
SkewSeries monomial_bracket_preimage(const FieldCtx& field, const Elem& b, const Elem& a, int i, int prec);

/// Termwise preimage of g under w -> [b, w]: w = sum (b - sigma^i(b))^{-1} g_i x^i.
/// order_n is the sigma-degree of b (nullopt for infinite). Throws WitnessFixed.
SkewSeries bracket_with_b(const Elem& b, const SkewSeries& g, std::optional<int> order_n);

Certificate decompose_infinite(const Elem& b, const SkewSeries& f);

/// Deterministic split for n >= 4; NoSplit for n = 4, s = 2 mod 4.
SplitPair split_exponent(int s, int n);

/// f = g h with g from x^u, h from x^v, both vanishing at exponents in nZ.
SeriesPair factor_in_Dn(const SkewSeries& f, const SplitPair& split, int n);

Certificate decompose_deg_ge5(const Elem& b, int n, const SkewSeries& f);

/// c = a b with a, b in L and {a, sigma^i(b)} k0-independent for every i.
std::pair<Elem, Elem> factor_into_L(const Order4Ctx& ctx, const Elem& c);

/// Checks the factor_into_L postcondition for (a, b) against c.
bool is_L_factorization(const Order4Ctx& ctx, const Elem& c, const Elem& a, const Elem& b);

/// f = f1 f2, f1 from x^s, f2 from x^0, every coefficient in L. Throws K1Leading.
SeriesPair factor_series_into_L(const Order4Ctx& ctx, const SkewSeries& f);

/// Preimage of g under w -> [x, w] for g with coefficients in L. Throws NotInL.
SkewSeries bracket_with_x(const Order4Ctx& ctx, const SkewSeries& g);

Certificate decompose_order4(const Order4Ctx& ctx, const SkewSeries& f);

/// Dispatch on the order of sigma; the result is verified before it is returned.
Certificate decompose(const SkewSeries& f);

bool verify_certificate(const Certificate& cert);

}  // namespace skewcomm
