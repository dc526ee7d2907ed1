#pragma once

// Coefficient fields k with a non-identity automorphism sigma.
//
// Two concrete families are provided:
//   gf(p^m) with sigma = Frobenius^e, finite order m / gcd(m, e), fixed
//     field k0 = F_{p^gcd(m,e)};
//   Q(t) with sigma(t) = t + 1 or sigma(t) = q t (q rational, not 0 or +-1),
//     both of infinite order with fixed field Q.
// Fields are immutable once built and are shared through FieldCtx.

#include "skewcomm/error.hpp"
#include "skewcomm/linalg.hpp"
#include "skewcomm/ratfunc.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace skewcomm {

/// Element of gf(p^m): coordinates over F_p in the power basis 1, g, ..., g^{m-1}.
struct GfElem {
    std::vector<std::uint32_t> c;
    friend bool operator==(const GfElem&, const GfElem&) = default;
};

using Elem = std::variant<GfElem, RatFunc>;

class FiniteField;

/// Result of a capped sigma-degree search.
class SigmaDegree {
public:
    static SigmaDegree finite(int m) { return SigmaDegree(m); }
    static SigmaDegree beyond_cap() { return SigmaDegree(std::nullopt); }

    bool is_finite() const { return value_.has_value(); }
    int value() const { return *value_; }
    friend bool operator==(const SigmaDegree&, const SigmaDegree&) = default;

private:
    explicit SigmaDegree(std::optional<int> v) : value_(v) {}
    std::optional<int> value_;
};

class Field {
public:
    virtual ~Field() = default;

    /// Canonical field description, e.g. "gf(3^4);poly=2,0,0,2,1" or "qt".
    virtual std::string spec() const = 0;
    /// Canonical automorphism description, e.g. "frob^1", "shift", "scale:2".
    virtual std::string sigma_spec() const = 0;
    /// Order of sigma; nullopt when sigma has infinite order.
    virtual std::optional<int> sigma_order() const = 0;
    virtual std::uint32_t characteristic() const = 0;
    /// Symbol used for the field generator in text: 'g' or 't'.
    virtual char generator_symbol() const = 0;

    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;
    virtual Elem generator() const = 0;
    virtual Elem from_rational(const mpq_class& q) const = 0;

    virtual Elem add(const Elem& a, const Elem& b) const = 0;
    virtual Elem sub(const Elem& a, const Elem& b) const = 0;
    virtual Elem neg(const Elem& a) const = 0;
    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    virtual Elem inv(const Elem& a) const = 0;
    virtual bool is_zero(const Elem& a) const = 0;

    /// sigma^i(a); i may be negative.
    virtual Elem apply_sigma(const Elem& a, int i) const = 0;

    /// Canonical text: reduced polynomial in g, or lowest-terms rational
    /// function in t with monic denominator.
    virtual std::string format(const Elem& a) const = 0;

    virtual Elem random(std::mt19937_64& rng) const = 0;

    /// k0-basis of k for finite sigma order (1, g, ..., g^{n-1}); empty otherwise.
    virtual std::vector<Elem> k0_basis() const = 0;

    /// Element used as the sigma-degree witness: t for Q(t), a normal basis
    /// element for gf(p^m).
    virtual Elem designated_witness() const = 0;

    virtual const FiniteField* as_finite() const { return nullptr; }

    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long e) const;
};

using FieldCtx = std::shared_ptr<const Field>;

bool same_field(const Field& a, const Field& b);

class FiniteField final : public Field {
public:
    /// modulus: c0..cm, monic of degree m and irreducible; empty selects the
    /// built-in default.
    FiniteField(std::uint32_t p, int m, int frob_exponent, std::vector<std::uint32_t> modulus = {});

    std::string spec() const override;
    std::string sigma_spec() const override;
    std::optional<int> sigma_order() const override { return order_; }
    std::uint32_t characteristic() const override { return p_; }
    char generator_symbol() const override { return 'g'; }

    Elem zero() const override;
    Elem one() const override;
    Elem generator() const override;
    Elem from_rational(const mpq_class& q) const override;

    Elem add(const Elem& a, const Elem& b) const override;
    Elem sub(const Elem& a, const Elem& b) const override;
    Elem neg(const Elem& a) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem inv(const Elem& a) const override;
    bool is_zero(const Elem& a) const override;
    Elem apply_sigma(const Elem& a, int i) const override;
    std::string format(const Elem& a) const override;
    Elem random(std::mt19937_64& rng) const override;
    std::vector<Elem> k0_basis() const override;
    Elem designated_witness() const override { return normal_; }
    const FiniteField* as_finite() const override { return this; }

    std::uint32_t p() const { return p_; }
    int degree() const { return m_; }
    /// [k0 : F_p]
    int k0_degree() const { return d_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    linalg::PrimeOps prime_ops() const { return {p_}; }

    /// F_p-basis of k0.
    const std::vector<Elem>& k0_prime_basis() const { return k0_prime_basis_; }
    /// Coordinates of a against k0_basis(), as elements of k0.
    std::vector<Elem> k0_coords(const Elem& a) const;

    const std::vector<std::uint32_t>& prime_coords(const Elem& a) const;
    Elem from_prime_coords(std::vector<std::uint32_t> c) const;

    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, int m);
    static bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);

private:
    std::vector<std::uint32_t> mul_raw(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
    std::vector<std::uint32_t> frobenius(const std::vector<std::uint32_t>& a) const;
    Elem find_normal_element() const;

    std::uint32_t p_;
    int m_;
    int e_;      // Frobenius exponent, reduced into [1, m)
    int d_;      // gcd(m, e)
    int order_;  // m / d
    std::vector<std::uint32_t> modulus_;
    // sigma_pow_[j][i] = prime coordinates of sigma^j(g^i), j < order
    std::vector<std::vector<std::vector<std::uint32_t>>> sigma_pow_;
    std::vector<Elem> k0_prime_basis_;
    linalg::Matrix<std::uint32_t> k0_coord_matrix_;  // prime coords -> (i, j) coords
    Elem normal_;
};

enum class QtSigma { Shift, Scale };

class RationalFunctionField final : public Field {
public:
    /// Shift: sigma(t) = t + 1. Scale: sigma(t) = q t, q not in {0, 1, -1}.
    explicit RationalFunctionField(QtSigma kind, mpq_class q = 1);

    std::string spec() const override { return "qt"; }
    std::string sigma_spec() const override;
    std::optional<int> sigma_order() const override { return std::nullopt; }
    std::uint32_t characteristic() const override { return 0; }
    char generator_symbol() const override { return 't'; }

    Elem zero() const override { return RatFunc(); }
    Elem one() const override { return RatFunc::constant(1); }
    Elem generator() const override { return RatFunc::variable(); }
    Elem from_rational(const mpq_class& q) const override { return RatFunc::constant(q); }

    Elem add(const Elem& a, const Elem& b) const override;
    Elem sub(const Elem& a, const Elem& b) const override;
    Elem neg(const Elem& a) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem inv(const Elem& a) const override;
    bool is_zero(const Elem& a) const override;
    Elem apply_sigma(const Elem& a, int i) const override;
    std::string format(const Elem& a) const override;
    Elem random(std::mt19937_64& rng) const override;
    std::vector<Elem> k0_basis() const override { return {}; }
    Elem designated_witness() const override { return RatFunc::variable(); }

    QtSigma kind() const { return kind_; }
    const mpq_class& scale() const { return q_; }

private:
    QtSigma kind_;
    mpq_class q_;
};

/// Builds a field from the text grammar: field "gf(p^m)" optionally followed
/// by ";poly=c0,c1,...,cm", or "qt"; sigma "frob", "frob^e", "shift" or
/// "scale:q". Throws InvalidField or IdentityAutomorphism.
FieldCtx make_field(const std::string& field_spec, const std::string& sigma_spec);

// ---------------------------------------------------------------------------
// Operations on fields

inline Elem apply_sigma(const Field& k, const Elem& a, int i) { return k.apply_sigma(a, i); }

/// Least m in [1, cap] with sigma^m(a) = a, or beyond_cap().
SigmaDegree sigma_degree(const Field& k, const Elem& a, int cap);

/// An element of sigma-degree at least min_degree: t for Q(t), the normal
/// basis element for finite order n >= min_degree. Throws NoWitness otherwise.
Elem find_witness(const Field& k, int min_degree);

/// k0-coordinates of a against a k0-independent list. Throws NotInSpan.
/// Requires finite sigma order.
std::vector<Elem> coords(const Field& k, const Elem& a, std::span<const Elem> basis);

/// Reduced-row-echelon particular solution (free variables zero) of
/// sum_i x_i columns[i] = rhs with entries in k0, or nullopt if inconsistent.
std::optional<std::vector<Elem>> solve_k0_linear(const Field& k, const std::vector<std::vector<Elem>>& columns,
                                                 const std::vector<Elem>& rhs);

/// Dimension over k0 of the k0-span of elems. Requires finite sigma order.
std::size_t k0_rank(const Field& k, std::span<const Elem> elems);

/// Whether {a, b} is k0-linearly independent.
bool k0_independent(const Field& k, const Elem& a, const Elem& b);

/// Precomputed data for sigma of order 4.
struct Order4Ctx {
    FieldCtx field;
    Elem y;                       // normal basis element
    std::array<Elem, 3> L_basis;  // y - s(y), s(y) - s^2(y), s^2(y) - s^3(y)
    Elem e1;                      // spans k1 = {z : s(z) = -z}
    Elem e2;                      // with s(e2) spans k2 = {z : s^2(z) = -z}
    std::array<Elem, 2> k2_basis;
    std::vector<Elem> k0_basis;
};

Order4Ctx build_order4_ctx(FieldCtx field);

/// Whether c lies in L = Im(sigma - 1).
bool in_L(const Order4Ctx& ctx, const Elem& c);

/// z with sigma(z) - z = c, free variables pinned to zero. Throws NotInL.
Elem sigma_minus_one_preimage(const Order4Ctx& ctx, const Elem& c);

/// Scalar ops over elements of k, for the generic linear algebra.
struct ElemOps {
    const Field* k;
    Elem zero() const { return k->zero(); }
    Elem one() const { return k->one(); }
    Elem add(const Elem& a, const Elem& b) const { return k->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return k->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return k->mul(a, b); }
    Elem inv(const Elem& a) const { return k->inv(a); }
    bool is_zero(const Elem& a) const { return k->is_zero(a); }
};

}  // namespace skewcomm
