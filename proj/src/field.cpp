#include "skewcomm/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace skewcomm {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// remainder and quotient of a by b (b nonzero, trimmed)
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r, const linalg::PrimeOps& ops) {
    trim(a);
    const int db = deg(b);
    const std::uint32_t lead_inv = ops.inv(b.back());
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    for (int k = deg(a) - db; k >= 0; --k) {
        const std::uint32_t coef = ops.mul(a[k + db], lead_inv);
        if (coef == 0) continue;
        q[k] = coef;
        for (int j = 0; j <= db; ++j) a[k + j] = ops.sub(a[k + j], ops.mul(coef, b[j]));
    }
    trim(a);
    trim(q);
    r = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b, const linalg::PrimeOps& ops) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b, const linalg::PrimeOps& ops) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ops.sub(a[i], b[i]);
    trim(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const linalg::PrimeOps& ops) {
    Poly q, r;
    poly_divmod(poly_mul(a, b, ops), f, q, r, ops);
    return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, const linalg::PrimeOps& ops) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, ops);
        base = poly_mulmod(base, base, f, ops);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, const linalg::PrimeOps& ops) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r, ops);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

const GfElem& as_gf(const Elem& a) {
    if (const auto* g = std::get_if<GfElem>(&a)) return *g;
    throw Error(Errc::FieldMismatch, "expected a finite field element");
}

const RatFunc& as_rf(const Elem& a) {
    if (const auto* r = std::get_if<RatFunc>(&a)) return *r;
    throw Error(Errc::FieldMismatch, "expected an element of Q(t)");
}

// Conway polynomials, c0..cm
const std::map<std::pair<std::uint32_t, int>, Poly>& conway_table() {
    static const std::map<std::pair<std::uint32_t, int>, Poly> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
    };
    return table;
}

}  // namespace

// ---------------------------------------------------------------------------

Elem Field::pow(Elem a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool same_field(const Field& a, const Field& b) {
    return &a == &b || (a.spec() == b.spec() && a.sigma_spec() == b.sigma_spec());
}

// ---------------------------------------------------------------------------
// gf(p^m)

bool FiniteField::is_irreducible(const std::vector<std::uint32_t>& f_in, std::uint32_t p) {
    const linalg::PrimeOps ops{p};
    Poly f = f_in;
    trim(f);
    const int m = deg(f);
    if (m < 1) return false;
    if (m == 1) return true;
    const Poly x{0, 1};
    Poly h = x;
    for (int i = 1; i <= m / 2; ++i) {
        h = poly_powmod(h, p, f, ops);
        if (deg(poly_gcd(f, poly_sub(h, x, ops), ops)) > 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> FiniteField::default_modulus(std::uint32_t p, int m) {
    const auto& table = conway_table();
    if (auto it = table.find({p, m}); it != table.end() && is_irreducible(it->second, p)) return it->second;
    // first monic irreducible in lexicographic order of (c0, ..., c_{m-1})
    Poly f(m + 1, 0);
    f[m] = 1;
    while (true) {
        if (f[0] != 0 && is_irreducible(f, p)) return f;
        int i = 0;
        while (i < m && ++f[i] == p) f[i++] = 0;
        if (i == m) throw Error(Errc::InvalidField, "no irreducible polynomial found");
    }
}

FiniteField::FiniteField(std::uint32_t p, int m, int frob_exponent, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m) {
    if (!is_prime(p) || p >= (1u << 31)) throw Error(Errc::InvalidField, "characteristic must be a prime below 2^31");
    if (m < 1 || m > 64) throw Error(Errc::InvalidField, "extension degree must be in [1, 64]");
    const linalg::PrimeOps ops{p};
    if (modulus.empty()) {
        modulus_ = default_modulus(p, m);
    } else {
        for (auto& c : modulus) c %= p;
        trim(modulus);
        if (deg(modulus) != m) throw Error(Errc::InvalidField, "defining polynomial must have degree m");
        const std::uint32_t lead_inv = ops.inv(modulus.back());
        for (auto& c : modulus) c = ops.mul(c, lead_inv);
        if (!is_irreducible(modulus, p)) throw Error(Errc::InvalidField, "defining polynomial is not irreducible");
        modulus_ = std::move(modulus);
    }
    e_ = ((frob_exponent % m) + m) % m;
    if (e_ == 0) throw Error(Errc::IdentityAutomorphism, "Frobenius power acts as the identity on gf(p^m)");
    d_ = std::gcd(m, e_);
    order_ = m / d_;

    // sigma on the power basis
    std::vector<std::vector<std::uint32_t>> basis(m, std::vector<std::uint32_t>(m, 0));
    for (int i = 0; i < m; ++i) basis[i][i] = 1;
    std::vector<std::vector<std::uint32_t>> sigma_cols(m);
    for (int i = 0; i < m; ++i) {
        auto v = basis[i];
        for (int j = 0; j < e_; ++j) v = frobenius(v);
        sigma_cols[i] = std::move(v);
    }
    sigma_pow_.push_back(basis);
    for (int j = 1; j < order_; ++j) {
        std::vector<std::vector<std::uint32_t>> cols(m);
        for (int i = 0; i < m; ++i) {
            std::vector<std::uint32_t> out(m, 0);
            const auto& prev = sigma_pow_[j - 1][i];
            for (int r = 0; r < m; ++r) {
                if (prev[r] == 0) continue;
                for (int s = 0; s < m; ++s) out[s] = ops.add(out[s], ops.mul(prev[r], sigma_cols[r][s]));
            }
            cols[i] = std::move(out);
        }
        sigma_pow_.push_back(std::move(cols));
    }

    // k0 = ker(sigma - 1)
    std::vector<std::vector<std::uint32_t>> diff(m);
    for (int i = 0; i < m; ++i) {
        diff[i] = sigma_cols[i];
        diff[i][i] = ops.sub(diff[i][i], 1);
    }
    for (auto& v : linalg::nullspace(diff, m, ops)) k0_prime_basis_.push_back(GfElem{std::move(v)});

    // coordinates against {w_j g^i}, column index i * d + j
    std::vector<std::vector<std::uint32_t>> expanded;
    Elem gi = one();
    for (int i = 0; i < order_; ++i) {
        for (const auto& w : k0_prime_basis_) expanded.push_back(as_gf(mul(w, gi)).c);
        gi = mul(gi, generator());
    }
    linalg::Matrix<std::uint32_t> aug = linalg::from_columns(expanded, m, 0u);
    for (int i = 0; i < m; ++i) {
        aug[i].resize(2 * m, 0);
        aug[i][m + i] = 1;
    }
    auto ech = linalg::rref(std::move(aug), ops);
    k0_coord_matrix_.assign(m, std::vector<std::uint32_t>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) k0_coord_matrix_[i][j] = ech.rows[i][m + j];

    normal_ = find_normal_element();
}

std::vector<std::uint32_t> FiniteField::mul_raw(const std::vector<std::uint32_t>& a,
                                                const std::vector<std::uint32_t>& b) const {
    const linalg::PrimeOps ops{p_};
    std::vector<std::uint64_t> acc(2 * m_ - 1, 0);
    const std::uint64_t pp = p_;
    for (int i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m_; ++j) acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % pp;
    }
    for (int k = 2 * m_ - 2; k >= m_; --k) {
        const std::uint64_t coef = acc[k];
        if (coef == 0) continue;
        acc[k] = 0;
        for (int j = 0; j < m_; ++j) acc[k - m_ + j] = (acc[k - m_ + j] + (pp - coef) * modulus_[j]) % pp;
    }
    std::vector<std::uint32_t> out(m_);
    for (int i = 0; i < m_; ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
    (void)ops;
    return out;
}

std::vector<std::uint32_t> FiniteField::frobenius(const std::vector<std::uint32_t>& a) const {
    std::vector<std::uint32_t> r(m_, 0);
    r[0] = 1;
    std::vector<std::uint32_t> base = a;
    std::uint64_t e = p_;
    while (e) {
        if (e & 1) r = mul_raw(r, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return r;
}

Elem FiniteField::find_normal_element() const {
    const linalg::PrimeOps ops{p_};
    std::mt19937_64 rng(0x6e6f726d616cULL);
    for (int attempt = 0; attempt < 256; ++attempt) {
        Elem y = random(rng);
        std::vector<Elem> orbit;
        for (int j = 0; j < order_; ++j) orbit.push_back(apply_sigma(y, j));
        std::vector<std::vector<std::uint32_t>> cols;
        for (const auto& v : orbit)
            for (const auto& w : k0_prime_basis_) cols.push_back(as_gf(mul(w, v)).c);
        if (linalg::rank(linalg::from_columns(cols, m_, 0u), ops) == static_cast<std::size_t>(m_)) return y;
    }
    throw Error(Errc::NoWitness, "normal basis search exhausted its retries");
}

std::string FiniteField::spec() const {
    std::string s = "gf(" + std::to_string(p_) + "^" + std::to_string(m_) + ");poly=";
    for (int i = 0; i <= m_; ++i) {
        if (i) s += ',';
        s += std::to_string(modulus_[i]);
    }
    return s;
}

std::string FiniteField::sigma_spec() const { return "frob^" + std::to_string(e_); }

Elem FiniteField::zero() const { return GfElem{std::vector<std::uint32_t>(m_, 0)}; }

Elem FiniteField::one() const {
    GfElem r{std::vector<std::uint32_t>(m_, 0)};
    r.c[0] = 1;
    return r;
}

Elem FiniteField::generator() const {
    if (m_ == 1) return from_prime_coords({static_cast<std::uint32_t>((p_ - modulus_[0]) % p_)});
    GfElem r{std::vector<std::uint32_t>(m_, 0)};
    r.c[1] = 1;
    return r;
}

Elem FiniteField::from_rational(const mpq_class& q) const {
    const linalg::PrimeOps ops{p_};
    const std::uint32_t den = reduce_mod(q.get_den(), p_);
    if (den == 0) throw Error(Errc::ZeroNotInvertible, "denominator divisible by the characteristic");
    GfElem r{std::vector<std::uint32_t>(m_, 0)};
    r.c[0] = ops.mul(reduce_mod(q.get_num(), p_), ops.inv(den));
    return r;
}

Elem FiniteField::add(const Elem& a, const Elem& b) const {
    const auto& x = as_gf(a).c;
    const auto& y = as_gf(b).c;
    const linalg::PrimeOps ops{p_};
    std::vector<std::uint32_t> r(m_);
    for (int i = 0; i < m_; ++i) r[i] = ops.add(x[i], y[i]);
    return GfElem{std::move(r)};
}

Elem FiniteField::sub(const Elem& a, const Elem& b) const {
    const auto& x = as_gf(a).c;
    const auto& y = as_gf(b).c;
    const linalg::PrimeOps ops{p_};
    std::vector<std::uint32_t> r(m_);
    for (int i = 0; i < m_; ++i) r[i] = ops.sub(x[i], y[i]);
    return GfElem{std::move(r)};
}

Elem FiniteField::neg(const Elem& a) const { return sub(zero(), a); }

Elem FiniteField::mul(const Elem& a, const Elem& b) const { return GfElem{mul_raw(as_gf(a).c, as_gf(b).c)}; }

Elem FiniteField::inv(const Elem& a) const {
    const linalg::PrimeOps ops{p_};
    Poly r1 = as_gf(a).c;
    trim(r1);
    if (r1.empty()) throw Error(Errc::ZeroNotInvertible, "inverse of zero in gf(p^m)");
    // extended Euclid against the modulus
    Poly r0 = modulus_;
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r, ops);
        Poly s = poly_sub(s0, poly_mul(q, s1, ops), ops);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const std::uint32_t c_inv = ops.inv(r0[0]);
    std::vector<std::uint32_t> out(m_, 0);
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = ops.mul(s0[i], c_inv);
    return GfElem{std::move(out)};
}

bool FiniteField::is_zero(const Elem& a) const {
    const auto& x = as_gf(a).c;
    return std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; });
}

Elem FiniteField::apply_sigma(const Elem& a, int i) const {
    const int j = ((i % order_) + order_) % order_;
    if (j == 0) return a;
    const linalg::PrimeOps ops{p_};
    const auto& x = as_gf(a).c;
    const auto& cols = sigma_pow_[j];
    std::vector<std::uint64_t> acc(m_, 0);
    for (int r = 0; r < m_; ++r) {
        if (x[r] == 0) continue;
        for (int s = 0; s < m_; ++s) acc[s] = (acc[s] + static_cast<std::uint64_t>(x[r]) * cols[r][s]) % p_;
    }
    std::vector<std::uint32_t> out(m_);
    for (int s = 0; s < m_; ++s) out[s] = static_cast<std::uint32_t>(acc[s]);
    (void)ops;
    return GfElem{std::move(out)};
}

std::string FiniteField::format(const Elem& a) const {
    const auto& x = as_gf(a).c;
    std::string out;
    for (int k = m_ - 1; k >= 0; --k) {
        if (x[k] == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(x[k]);
            continue;
        }
        if (x[k] != 1) out += std::to_string(x[k]) + "*";
        out += 'g';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

Elem FiniteField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    std::vector<std::uint32_t> c(m_);
    for (auto& v : c) v = dist(rng);
    return GfElem{std::move(c)};
}

std::vector<Elem> FiniteField::k0_basis() const {
    std::vector<Elem> out;
    Elem gi = one();
    for (int i = 0; i < order_; ++i) {
        out.push_back(gi);
        gi = mul(gi, generator());
    }
    return out;
}

std::vector<Elem> FiniteField::k0_coords(const Elem& a) const {
    const linalg::PrimeOps ops{p_};
    const auto& x = as_gf(a).c;
    std::vector<std::uint32_t> c(m_, 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) c[i] = ops.add(c[i], ops.mul(k0_coord_matrix_[i][j], x[j]));
    std::vector<Elem> out;
    for (int i = 0; i < order_; ++i) {
        Elem v = zero();
        for (int j = 0; j < d_; ++j)
            v = add(v, mul(from_rational(c[i * d_ + j]), k0_prime_basis_[j]));
        out.push_back(std::move(v));
    }
    return out;
}

const std::vector<std::uint32_t>& FiniteField::prime_coords(const Elem& a) const { return as_gf(a).c; }

Elem FiniteField::from_prime_coords(std::vector<std::uint32_t> c) const {
    c.resize(m_, 0);
    for (auto& v : c) v %= p_;
    return GfElem{std::move(c)};
}

// ---------------------------------------------------------------------------
// Q(t)

RationalFunctionField::RationalFunctionField(QtSigma kind, mpq_class q) : kind_(kind), q_(std::move(q)) {
    q_.canonicalize();
    if (kind_ == QtSigma::Scale) {
        if (q_ == 1) throw Error(Errc::IdentityAutomorphism, "t -> 1*t is the identity");
        if (q_ == 0 || q_ == -1) throw Error(Errc::InvalidField, "scale factor must not be 0 or -1");
    }
}

std::string RationalFunctionField::sigma_spec() const {
    return kind_ == QtSigma::Shift ? "shift" : "scale:" + q_.get_str();
}

Elem RationalFunctionField::add(const Elem& a, const Elem& b) const { return as_rf(a) + as_rf(b); }
Elem RationalFunctionField::sub(const Elem& a, const Elem& b) const { return as_rf(a) - as_rf(b); }
Elem RationalFunctionField::neg(const Elem& a) const { return -as_rf(a); }
Elem RationalFunctionField::mul(const Elem& a, const Elem& b) const { return as_rf(a) * as_rf(b); }
Elem RationalFunctionField::inv(const Elem& a) const { return as_rf(a).inverse(); }
bool RationalFunctionField::is_zero(const Elem& a) const { return as_rf(a).is_zero(); }

Elem RationalFunctionField::apply_sigma(const Elem& a, int i) const {
    const auto& f = as_rf(a);
    if (i == 0) return f;
    if (kind_ == QtSigma::Shift) return f.taylor_shift(mpq_class(i));
    mpq_class base = i > 0 ? q_ : mpq_class(1 / q_);
    mpz_class num, den;
    const unsigned long e = static_cast<unsigned long>(i > 0 ? i : -static_cast<long>(i));
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class factor(num, den);
    factor.canonicalize();
    return f.dilate(factor);
}

std::string RationalFunctionField::format(const Elem& a) const { return format_ratfunc(as_rf(a), 't'); }

Elem RationalFunctionField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> small(0, 3);
    const int degree = small(rng) % 3;
    std::vector<mpq_class> num(degree + 1);
    for (auto& c : num) {
        c = coef(rng);
        if (small(rng) == 0) c /= (2 + small(rng) % 2);
    }
    QPoly den = QPoly::constant(1);
    if (small(rng) == 0) den = QPoly(std::vector<mpq_class>{coef(rng), 1});
    return RatFunc(QPoly(std::move(num)), std::move(den));
}

// ---------------------------------------------------------------------------
// construction from text

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

long parse_long(std::string_view s, const char* what) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(Errc::InvalidField, std::string("malformed ") + what + " '" + std::string(s) + "'");
    return v;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw Error(Errc::InvalidField, "malformed rational '" + s + "'");
    if (q.get_den() == 0) throw Error(Errc::InvalidField, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

FieldCtx make_field(const std::string& field_text, const std::string& sigma_text) {
    const std::string field = strip(field_text);
    const std::string sigma = strip(sigma_text);
    if (field == "qt") {
        if (sigma == "shift") return std::make_shared<RationalFunctionField>(QtSigma::Shift);
        if (sigma.rfind("scale:", 0) == 0)
            return std::make_shared<RationalFunctionField>(QtSigma::Scale, parse_rational(sigma.substr(6)));
        throw Error(Errc::InvalidField, "sigma for qt must be 'shift' or 'scale:q', got '" + sigma + "'");
    }
    if (field.rfind("gf(", 0) != 0) throw Error(Errc::InvalidField, "unknown field '" + field + "'");
    const auto close = field.find(')');
    if (close == std::string::npos) throw Error(Errc::InvalidField, "missing ')' in '" + field + "'");
    const std::string inner = field.substr(3, close - 3);
    const auto caret = inner.find('^');
    if (caret == std::string::npos) throw Error(Errc::InvalidField, "expected gf(p^m), got '" + field + "'");
    const long p = parse_long(std::string_view(inner).substr(0, caret), "characteristic");
    const long m = parse_long(std::string_view(inner).substr(caret + 1), "extension degree");
    if (p < 2 || p >= (1l << 31) || m < 1 || m > 64) throw Error(Errc::InvalidField, "field size out of range");

    std::vector<std::uint32_t> poly;
    std::string rest = field.substr(close + 1);
    if (!rest.empty()) {
        if (rest.rfind(";poly=", 0) != 0) throw Error(Errc::InvalidField, "unexpected '" + rest + "'");
        std::stringstream ss(rest.substr(6));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const long c = parse_long(tok, "polynomial coefficient");
            poly.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
        }
        if (poly.size() != static_cast<std::size_t>(m + 1))
            throw Error(Errc::InvalidField, "defining polynomial needs m+1 coefficients");
    }

    long e = 0;
    if (sigma == "frob") {
        e = 1;
    } else if (sigma.rfind("frob^", 0) == 0) {
        e = parse_long(std::string_view(sigma).substr(5), "Frobenius exponent");
    } else {
        throw Error(Errc::InvalidField, "sigma for gf must be 'frob' or 'frob^e', got '" + sigma + "'");
    }
    return std::make_shared<FiniteField>(static_cast<std::uint32_t>(p), static_cast<int>(m), static_cast<int>(e % m),
                                         std::move(poly));
}

// ---------------------------------------------------------------------------
// operations

SigmaDegree sigma_degree(const Field& k, const Elem& a, int cap) {
    for (int j = 1; j <= cap; ++j)
        if (k.apply_sigma(a, j) == a) return SigmaDegree::finite(j);
    return SigmaDegree::beyond_cap();
}

Elem find_witness(const Field& k, int min_degree) {
    const auto order = k.sigma_order();
    if (order && *order < min_degree)
        throw Error(Errc::NoWitness, "sigma has order " + std::to_string(*order) + " < " + std::to_string(min_degree));
    return k.designated_witness();
}

namespace {

const FiniteField& require_finite(const Field& k, const char* what) {
    if (const auto* f = k.as_finite()) return *f;
    throw Error(Errc::InfiniteOrder, std::string(what) + " needs a finite-order sigma");
}

std::vector<std::vector<std::uint32_t>> expand_over_prime(const FiniteField& f, std::span<const Elem> elems) {
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& v : elems)
        for (const auto& w : f.k0_prime_basis()) cols.push_back(f.prime_coords(f.mul(w, v)));
    return cols;
}

std::optional<std::vector<Elem>> try_coords(const FiniteField& f, const Elem& a, std::span<const Elem> basis) {
    auto sol = linalg::solve(expand_over_prime(f, basis), f.prime_coords(a), f.prime_ops());
    if (!sol) return std::nullopt;
    const auto d = static_cast<std::size_t>(f.k0_degree());
    std::vector<Elem> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Elem v = f.zero();
        for (std::size_t j = 0; j < d; ++j)
            v = f.add(v, f.mul(f.from_rational((*sol)[i * d + j]), f.k0_prime_basis()[j]));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Elem> coords(const Field& k, const Elem& a, std::span<const Elem> basis) {
    const auto& f = require_finite(k, "k0-coordinates");
    auto c = try_coords(f, a, basis);
    if (!c) throw Error(Errc::NotInSpan, f.format(a) + " is not in the k0-span of the basis");
    return *c;
}

std::optional<std::vector<Elem>> solve_k0_linear(const Field& k, const std::vector<std::vector<Elem>>& columns,
                                                 const std::vector<Elem>& rhs) {
    for (const auto& col : columns)
        if (col.size() != rhs.size()) throw Error(Errc::Unsupported, "column length differs from right-hand side");
    return linalg::solve(columns, rhs, ElemOps{&k});
}

std::size_t k0_rank(const Field& k, std::span<const Elem> elems) {
    const auto& f = require_finite(k, "k0-rank");
    const auto cols = expand_over_prime(f, elems);
    return linalg::rank(linalg::from_columns(cols, f.degree(), 0u), f.prime_ops()) / f.k0_degree();
}

bool k0_independent(const Field& k, const Elem& a, const Elem& b) {
    if (k.is_zero(a) || k.is_zero(b)) return false;
    const Elem ratio = k.div(b, a);
    return !(k.apply_sigma(ratio, 1) == ratio);
}

Order4Ctx build_order4_ctx(FieldCtx field) {
    const auto order = field->sigma_order();
    if (!order || *order != 4) throw Error(Errc::Unsupported, "order-4 context needs sigma of order 4");
    const Field& k = *field;
    Order4Ctx ctx{field, find_witness(k, 4), {}, {}, {}, {}, k.k0_basis()};
    const Elem s0 = ctx.y;
    const Elem s1 = k.apply_sigma(s0, 1);
    const Elem s2 = k.apply_sigma(s0, 2);
    const Elem s3 = k.apply_sigma(s0, 3);
    ctx.L_basis = {k.sub(s0, s1), k.sub(s1, s2), k.sub(s2, s3)};
    ctx.e1 = k.sub(k.add(k.sub(s0, s1), s2), s3);
    ctx.e2 = k.sub(s0, s2);
    ctx.k2_basis = {ctx.e2, k.apply_sigma(ctx.e2, 1)};
    return ctx;
}

bool in_L(const Order4Ctx& ctx, const Elem& c) {
    const auto& f = require_finite(*ctx.field, "membership in L");
    return try_coords(f, c, ctx.L_basis).has_value();
}

Elem sigma_minus_one_preimage(const Order4Ctx& ctx, const Elem& c) {
    const auto& f = require_finite(*ctx.field, "sigma - 1 preimage");
    std::vector<std::vector<Elem>> columns;
    for (const auto& b : ctx.k0_basis) columns.push_back(f.k0_coords(f.sub(f.apply_sigma(b, 1), b)));
    auto sol = solve_k0_linear(f, columns, f.k0_coords(c));
    if (!sol) throw Error(Errc::NotInL, f.format(c) + " is not in Im(sigma - 1)");
    Elem z = f.zero();
    for (std::size_t j = 0; j < ctx.k0_basis.size(); ++j) z = f.add(z, f.mul((*sol)[j], ctx.k0_basis[j]));
    return z;
}

}  // namespace skewcomm
