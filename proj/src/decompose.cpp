#include "skewcomm/decompose.hpp"

#include <cstdlib>
#include <map>
#include <string>

namespace skewcomm {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Exact elements entering a certificate are given the relative precision of
// the input, which is what every product below needs to reach f.prec.
int relative_prec(const SkewSeries& f) { return f.prec() - f.window_start(); }

void require_nonzero(const SkewSeries& f) {
    if (f.is_zero()) throw Error(Errc::ZeroInput, "input is zero to precision");
}

Certificate make_certificate(const SkewSeries& f, SeriesPair first, SeriesPair second, Method method) {
    const Field& k = f.field();
    const bool experimental = k.characteristic() == 2 && k.sigma_order() == 4;
    return Certificate{f.field_ctx(), f, {std::move(first), std::move(second)}, f.prec(), method, experimental};
}

Certificate split_certificate(const Elem& b, int n, const SkewSeries& f, Method method) {
    const SplitPair split = split_exponent(f.window_start(), n);
    auto [g, h] = factor_in_Dn(f, split, n);
    const auto bs = SkewSeries::monomial(f.field_ctx(), b, 0, relative_prec(f));
    auto wg = bracket_with_b(b, g, n);
    auto wh = bracket_with_b(b, h, n);
    return make_certificate(f, {bs, std::move(wg)}, {bs, std::move(wh)}, method);
}

bool in_k1(const Field& k, const Elem& a) { return k.apply_sigma(a, 1) == k.neg(a); }

// f = [x, w1][x, w2] with f1 f2 = f from factor_series_into_L
std::pair<SeriesPair, SeriesPair> order4_L_pairs(const Order4Ctx& ctx, const SkewSeries& f) {
    auto [f1, f2] = factor_series_into_L(ctx, f);
    const auto xs = SkewSeries::monomial(f.field_ctx(), f.field().one(), 1, 1 + relative_prec(f));
    return {{xs, bracket_with_x(ctx, f1)}, {xs, bracket_with_x(ctx, f2)}};
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::InfiniteWitness: return "InfiniteWitness";
        case Method::DegreeAtLeast5: return "DegreeAtLeast5";
        case Method::Order4Split: return "Order4Split";
        case Method::Order4L: return "Order4L";
        case Method::Order4Conjugated: return "Order4Conjugated";
        case Method::ZeroInput: return "ZeroInput";
    }
    return "";
}

std::optional<Method> method_from_name(std::string_view name) {
    for (auto m : {Method::InfiniteWitness, Method::DegreeAtLeast5, Method::Order4Split, Method::Order4L,
                   Method::Order4Conjugated, Method::ZeroInput})
        if (method_name(m) == name) return m;
    return std::nullopt;
}

SkewSeries monomial_bracket_preimage(const FieldCtx& field, const Elem& b, const Elem& a, int i, int prec) {
    const Field& k = *field;
    const Elem diff = k.sub(b, k.apply_sigma(b, i));
    if (k.is_zero(diff)) throw Error(Errc::WitnessFixed, "sigma^" + std::to_string(i) + " fixes the witness");
    if (k.is_zero(a)) return SkewSeries::zero(field, prec);
    return SkewSeries::monomial(field, k.div(a, diff), i, prec);
}

SkewSeries bracket_with_b(const Elem& b, const SkewSeries& g, std::optional<int> order_n) {
    const Field& k = g.field();
    std::vector<Elem> w;
    w.reserve(g.coeffs().size());
    // sigma^i(b) depends on i mod n only
    std::map<int, Elem> inv_diff;
    for (std::size_t idx = 0; idx < g.coeffs().size(); ++idx) {
        const int i = g.window_start() + static_cast<int>(idx);
        const Elem& gi = g.coeffs()[idx];
        if (k.is_zero(gi)) {
            w.push_back(k.zero());
            continue;
        }
        const int key = order_n ? mod(i, *order_n) : i;
        auto it = inv_diff.find(key);
        if (it == inv_diff.end()) {
            const Elem diff = k.sub(b, k.apply_sigma(b, i));
            if ((order_n && key == 0) || k.is_zero(diff))
                throw Error(Errc::WitnessFixed,
                            "coefficient at x^" + std::to_string(i) + " but sigma^" + std::to_string(i) +
                                " fixes the witness");
            it = inv_diff.emplace(key, k.inv(diff)).first;
        }
        w.push_back(k.mul(it->second, gi));
    }
    return SkewSeries(g.field_ctx(), g.window_start(), std::move(w), g.prec());
}

Certificate decompose_infinite(const Elem& b, const SkewSeries& f) {
    require_nonzero(f);
    const Field& k = f.field();
    const int s = f.window_start();
    const int rel = relative_prec(f);
    const int n = -std::abs(s) - 1;
    const int m = s - n;
    // f = x^n * sum_{j>=m} sigma^{-n}(a_{n+j}) x^j
    std::vector<Elem> tail;
    tail.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) tail.push_back(k.apply_sigma(a, -n));
    const SkewSeries tail_series(f.field_ctx(), m, std::move(tail), f.prec() - n);

    const auto bs = SkewSeries::monomial(f.field_ctx(), b, 0, rel);
    auto head = monomial_bracket_preimage(f.field_ctx(), b, k.one(), n, n + rel);
    auto w = bracket_with_b(b, tail_series, std::nullopt);
    return make_certificate(f, {bs, std::move(head)}, {bs, std::move(w)}, Method::InfiniteWitness);
}

SplitPair split_exponent(int s, int n) {
    if (n < 4) throw Error(Errc::Unsupported, "exponent splitting needs n >= 4, got " + std::to_string(n));
    const int r = mod(s, n);
    if (n == 4 && r == 2) throw Error(Errc::NoSplit, "s = 2 mod 4 admits no split");
    if (r == n - 1 || r == n - 2) return {s - 1, 1, n, s};
    return {s + 1, -1, n, s};
}

SeriesPair factor_in_Dn(const SkewSeries& f, const SplitPair& split, int n) {
    require_nonzero(f);
    if (f.window_start() != split.s || split.u + split.v != split.s || mod(split.u, n) == 0 ||
        mod(split.v, n) == 0 || mod(split.u - split.v, n) == 0)
        throw Error(Errc::Unsupported, "split does not satisfy the divisibility conditions");
    const Field& k = f.field();
    const int u = split.u;
    const int s = split.s;
    const int rel = relative_prec(f);
    const auto& a = f.coeffs();
    std::vector<Elem> b(static_cast<std::size_t>(rel), k.zero());
    std::vector<Elem> c(static_cast<std::size_t>(rel), k.zero());
    b[0] = a[0];
    c[0] = k.one();
    const Elem b0_inv = k.inv(b[0]);
    for (int t = 1; t < rel; ++t) {
        // coefficient of x^{s+t}: sum_{i=0}^{t} b_{u+i} sigma^{u+i}(c_{v+t-i})
        Elem residual = a[static_cast<std::size_t>(t)];
        for (int i = 1; i < t; ++i) {
            if (k.is_zero(b[i]) || k.is_zero(c[t - i])) continue;
            residual = k.sub(residual, k.mul(b[i], k.apply_sigma(c[t - i], u + i)));
        }
        if (mod(u + t, n) != 0) {
            b[t] = k.div(residual, k.apply_sigma(c[0], u + t));
        } else {
            c[t] = k.apply_sigma(k.mul(b0_inv, residual), -u);
        }
    }
    (void)s;
    SkewSeries g(f.field_ctx(), u, std::move(b), u + rel);
    SkewSeries h(f.field_ctx(), split.v, std::move(c), split.v + rel);
    return {std::move(g), std::move(h)};
}

Certificate decompose_deg_ge5(const Elem& b, int n, const SkewSeries& f) {
    if (n < 5) throw Error(Errc::Unsupported, "witness degree " + std::to_string(n) + " < 5");
    require_nonzero(f);
    return split_certificate(b, n, f, Method::DegreeAtLeast5);
}

std::pair<Elem, Elem> factor_into_L(const Order4Ctx& ctx, const Elem& c) {
    const auto* ff = ctx.field->as_finite();
    if (!ff) throw Error(Errc::InfiniteOrder, "order-4 factorization needs a finite field");
    const FiniteField& k = *ff;
    if (k.is_zero(c)) throw Error(Errc::ZeroInput, "cannot factor zero");

    if (!(k.apply_sigma(c, 2) == c)) {
        // nonzero z = alpha e2 + beta s(e2) in k2 with c z in L
        std::vector<std::vector<Elem>> columns{k.k0_coords(k.mul(c, ctx.k2_basis[0])),
                                               k.k0_coords(k.mul(c, ctx.k2_basis[1]))};
        for (const auto& l : ctx.L_basis) columns.push_back(k.k0_coords(k.neg(l)));
        const auto kernel = linalg::nullspace(columns, columns[0].size(), ElemOps{&k});
        if (kernel.empty()) throw Error(Errc::Unsupported, "c k2 meets L only in 0");
        const Elem z = k.add(k.mul(kernel[0][0], ctx.k2_basis[0]), k.mul(kernel[0][1], ctx.k2_basis[1]));
        return {k.inv(z), k.mul(c, z)};
    }
    if (in_k1(k, c)) throw Error(Errc::K1Input, k.format(c) + " lies in k1");
    const Elem b = k.div(c, ctx.e2);
    if (k0_independent(k, ctx.e2, b) && k0_independent(k, ctx.e2, k.apply_sigma(b, 1))) return {ctx.e2, b};
    const Elem a = k.apply_sigma(ctx.e2, 1);
    return {a, k.div(c, a)};
}

bool is_L_factorization(const Order4Ctx& ctx, const Elem& c, const Elem& a, const Elem& b) {
    const Field& k = *ctx.field;
    if (!(k.mul(a, b) == c) || !in_L(ctx, a) || !in_L(ctx, b)) return false;
    for (int i = 0; i < 4; ++i)
        if (!k0_independent(k, a, k.apply_sigma(b, i))) return false;
    return true;
}

SeriesPair factor_series_into_L(const Order4Ctx& ctx, const SkewSeries& f) {
    require_nonzero(f);
    const auto* ff = ctx.field->as_finite();
    if (!ff) throw Error(Errc::InfiniteOrder, "order-4 factorization needs a finite field");
    const FiniteField& k = *ff;
    const Elem& lead = f.leading();
    if (in_k1(k, lead)) throw Error(Errc::K1Leading, "leading coefficient lies in k1");

    const int s = f.window_start();
    const int rel = relative_prec(f);
    const auto& a = f.coeffs();
    auto [bs, c0p] = factor_into_L(ctx, lead);
    std::vector<Elem> b(static_cast<std::size_t>(rel), k.zero());
    std::vector<Elem> c(static_cast<std::size_t>(rel), k.zero());
    b[0] = bs;
    c[0] = k.apply_sigma(c0p, -s);

    std::vector<std::vector<Elem>> left_cols;  // b_s * l_i
    for (const auto& l : ctx.L_basis) left_cols.push_back(k.k0_coords(k.mul(bs, l)));
    std::map<int, std::vector<std::vector<Elem>>> right_cols;  // l_i * sigma^e(c_0), keyed by e mod 4

    for (int t = 1; t < rel; ++t) {
        Elem residual = a[static_cast<std::size_t>(t)];
        for (int r = 1; r < t; ++r) {
            if (k.is_zero(b[r]) || k.is_zero(c[t - r])) continue;
            residual = k.sub(residual, k.mul(b[r], k.apply_sigma(c[t - r], s + r)));
        }
        const int key = mod(s + t, 4);
        auto it = right_cols.find(key);
        if (it == right_cols.end()) {
            const Elem shifted = k.apply_sigma(c[0], s + t);
            std::vector<std::vector<Elem>> cols;
            for (const auto& l : ctx.L_basis) cols.push_back(k.k0_coords(k.mul(l, shifted)));
            it = right_cols.emplace(key, std::move(cols)).first;
        }
        auto columns = left_cols;
        columns.insert(columns.end(), it->second.begin(), it->second.end());
        // b_s c' + b' sigma^{s+t}(c_0) = residual, c', b' in L
        const auto sol = solve_k0_linear(k, columns, k.k0_coords(residual));
        if (!sol) throw Error(Errc::Unsupported, "b_s L + sigma^l(c_0) L does not span k at step " + std::to_string(t));
        Elem cp = k.zero();
        Elem bp = k.zero();
        for (int i = 0; i < 3; ++i) {
            cp = k.add(cp, k.mul((*sol)[i], ctx.L_basis[i]));
            bp = k.add(bp, k.mul((*sol)[3 + i], ctx.L_basis[i]));
        }
        c[t] = k.apply_sigma(cp, -s);
        b[t] = bp;
    }
    SkewSeries f1(f.field_ctx(), s, std::move(b), s + rel);
    SkewSeries f2(f.field_ctx(), 0, std::move(c), rel);
    return {std::move(f1), std::move(f2)};
}

SkewSeries bracket_with_x(const Order4Ctx& ctx, const SkewSeries& g) {
    std::vector<Elem> z;
    z.reserve(g.coeffs().size());
    for (std::size_t idx = 0; idx < g.coeffs().size(); ++idx) {
        try {
            z.push_back(sigma_minus_one_preimage(ctx, g.coeffs()[idx]));
        } catch (const Error& e) {
            if (e.code() != Errc::NotInL) throw;
            throw Error(Errc::NotInL, "coefficient at x^" + std::to_string(g.window_start() + static_cast<int>(idx)) +
                                          " is not in Im(sigma - 1)");
        }
    }
    return SkewSeries(g.field_ctx(), g.window_start() - 1, std::move(z), g.prec() - 1);
}

Certificate decompose_order4(const Order4Ctx& ctx, const SkewSeries& f) {
    require_nonzero(f);
    if (ctx.field->sigma_order() != 4) throw Error(Errc::Unsupported, "sigma must have order 4");
    const Field& k = f.field();
    const int s = f.window_start();
    if (mod(s, 4) != 2) return split_certificate(ctx.y, 4, f, Method::Order4Split);

    if (!in_k1(k, f.leading())) {
        auto [p1, p2] = order4_L_pairs(ctx, f);
        return make_certificate(f, std::move(p1), std::move(p2), Method::Order4L);
    }
    // y f y^{-1} has leading coefficient outside k1
    const int rel = relative_prec(f);
    const auto ys = SkewSeries::monomial(f.field_ctx(), ctx.y, 0, rel);
    const auto y_inv = SkewSeries::monomial(f.field_ctx(), k.inv(ctx.y), 0, rel);
    const auto g = conjugate(f, ys).truncated(f.prec());
    auto [p1, p2] = order4_L_pairs(ctx, g);
    const auto x_conj = conjugate(p1.first, y_inv);
    return make_certificate(f, {x_conj, conjugate(p1.second, y_inv)}, {x_conj, conjugate(p2.second, y_inv)},
                            Method::Order4Conjugated);
}

Certificate decompose(const SkewSeries& f) {
    const Field& k = f.field();
    const auto order = k.sigma_order();
    Certificate cert = [&]() -> Certificate {
        if (f.is_zero()) {
            // 0 = [1, 0][1, 0]
            const int p0 = std::max(f.prec(), 0);
            const auto one = SkewSeries::monomial(f.field_ctx(), k.one(), 0, std::max(p0, 1));
            const auto zero = SkewSeries::zero(f.field_ctx(), p0);
            return Certificate{f.field_ctx(), f, {SeriesPair{one, zero}, SeriesPair{one, zero}}, f.prec(),
                               Method::ZeroInput, false};
        }
        if (!order) return decompose_infinite(find_witness(k, 5), f);
        if (*order >= 5) return decompose_deg_ge5(find_witness(k, *order), *order, f);
        if (*order == 4) return decompose_order4(build_order4_ctx(f.field_ctx()), f);
        throw Error(Errc::UnsupportedOrder,
                    "sigma of order " + std::to_string(*order) +
                        ": the known argument for orders 2 and 3 is non-constructive (it relies on reduced-trace "
                        "existence results) and is not implemented");
    }();
    if (!verify_certificate(cert))
        throw Error(Errc::VerificationFailed, "certificate for method " + std::string(method_name(cert.method)) +
                                                  " did not re-multiply to the input");
    return cert;
}

bool verify_certificate(const Certificate& cert) {
    const Field& k = *cert.field;
    auto check = [&](const SkewSeries& s) {
        if (!same_field(s.field(), k)) throw Error(Errc::FieldMismatch, "series over " + s.field().spec());
    };
    check(cert.input);
    for (const auto& [p, q] : cert.pairs) {
        check(p);
        check(q);
    }
    const auto product =
        mul(commutator(cert.pairs[0].first, cert.pairs[0].second), commutator(cert.pairs[1].first, cert.pairs[1].second));
    if (product.prec() < cert.check_prec || cert.input.prec() < cert.check_prec) return false;
    return eq_to_prec(product, cert.input, cert.check_prec);
}

}  // namespace skewcomm
