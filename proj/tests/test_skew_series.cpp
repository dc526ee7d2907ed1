#include "support.hpp"

#include <doctest.h>

using namespace skewcomm;
using namespace testing;

namespace {

std::vector<FieldCtx> all_fields() {
    return {make_field("gf(2^5)", "frob"), make_field("gf(3^4)", "frob"), make_field("gf(3^2)", "frob"),
            make_field("qt", "shift"), make_field("qt", "scale:2")};
}

SkewSeries mono(const FieldCtx& k, const Elem& a, int e, int prec) { return SkewSeries::monomial(k, a, e, prec); }

}  // namespace

TEST_CASE("from_terms layout and normal form") {
    auto field = make_field("gf(3^4)", "frob");
    const Field& k = *field;
    const auto z = SkewSeries::from_terms(field, {}, 5);
    CHECK(z.is_zero());
    CHECK(z.prec() == 5);
    CHECK_FALSE(z.valuation().has_value());

    const auto f = SkewSeries::from_terms(field, {{-3, k.from_rational(2)}, {0, k.generator()}}, 4);
    CHECK(f.valuation() == -3);
    CHECK(f.prec() == 4);
    REQUIRE(f.coeffs().size() == 7);
    CHECK(f.coeffs()[0] == k.from_rational(2));
    CHECK(f.coeffs()[3] == k.generator());
    for (int i : {1, 2, 4, 5, 6}) CHECK(k.is_zero(f.coeffs()[i]));

    try {
        SkewSeries::from_terms(field, {{6, k.one()}}, 5);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ExponentBeyondPrecision);
    }

    // leading zeros are stripped
    const SkewSeries g(field, 0, {k.zero(), k.zero(), k.one()}, 3);
    CHECK(g.valuation() == 2);
    CHECK(g.coeffs().size() == 1);
    CHECK_THROWS_AS(g.coeff(3), Error);
    CHECK(k.is_zero(g.coeff(-10)));
}

TEST_CASE("defining relation") {
    auto qt = make_field("qt", "shift");
    const Elem t = qt->generator();
    const auto x = mono(qt, qt->one(), 1, 20);
    const auto ts = mono(qt, t, 0, 20);
    CHECK(same(x * ts, mono(qt, qt->add(t, qt->one()), 1, 20)));
    CHECK(same(commutator(x, ts), mono(qt, qt->one(), 1, 20)));

    std::mt19937_64 rng(1);
    for (const auto& field : all_fields()) {
        const Field& k = *field;
        for (int i = 0; i < 500; ++i) {
            const Elem a = k.random(rng), b = k.random(rng);
            const auto xs = mono(field, k.one(), 1, 10);
            REQUIRE(agree(xs * mono(field, a, 0, 10), mono(field, k.apply_sigma(a, 1), 1, 10)));
            REQUIRE(agree(mono(field, a, 1, 10) * mono(field, b, 1, 10),
                         mono(field, k.mul(a, k.apply_sigma(b, 1)), 2, 11)));
        }
    }
}

TEST_CASE("multiplication agrees with a sparse term-by-term product") {
    std::mt19937_64 rng(2);
    for (const auto& field : all_fields()) {
        for (int i = 0; i < 60; ++i) {
            const int vf = static_cast<int>(rng() % 13) - 6, vg = static_cast<int>(rng() % 13) - 6;
            const auto f = random_series(field, rng, vf, 1 + static_cast<int>(rng() % 10));
            const auto g = random_series(field, rng, vg, 1 + static_cast<int>(rng() % 10));
            REQUIRE(same(f * g, naive_product(f, g)));
        }
    }
}

TEST_CASE("ring axioms and precision laws") {
    std::mt19937_64 rng(3);
    for (const auto& field : all_fields()) {
        for (int i = 0; i < 100; ++i) {
            auto r = [&] { return random_series(field, rng, static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 8)); };
            const auto f = r(), g = r(), h = r();
            const auto fg_h = (f * g) * h, f_gh = f * (g * h);
            const int p = std::min(fg_h.prec(), f_gh.prec());
            REQUIRE(eq_to_prec(fg_h, f_gh, p));
            const auto l = f * (g + h), rr = f * g + f * h;
            REQUIRE(eq_to_prec(l, rr, std::min(l.prec(), rr.prec())));
            const auto l2 = (g + h) * f, r2 = g * f + h * f;
            REQUIRE(eq_to_prec(l2, r2, std::min(l2.prec(), r2.prec())));
            const auto fg = f * g;
            CHECK(fg.prec() == std::min(f.prec() + g.window_start(), g.prec() + f.window_start()));
            CHECK((f + g).prec() == std::min(f.prec(), g.prec()));
            const auto one = mono(field, field->one(), 0, 64);
            CHECK(same(one * f, f));
            CHECK(same(f * one, f));
            for (const auto& s : {fg, f + g, f - g, fg_h})
                if (!s.is_zero()) REQUIRE_FALSE(field->is_zero(s.coeffs().front()));
        }
    }
}

TEST_CASE("addition and negation") {
    auto field = make_field("qt", "shift");
    const Field& k = *field;
    std::mt19937_64 rng(4);
    const auto f = random_series(field, rng, -2, 6);
    const auto z = f + neg(f);
    CHECK(z.is_zero());
    CHECK(z.prec() == f.prec());
    const auto a = SkewSeries::from_terms(field, {{-1, k.one()}, {1, k.one()}}, 10);
    const auto b = SkewSeries::from_terms(field, {{1, k.from_rational(-1)}}, 10);
    CHECK(same(a + b, mono(field, k.one(), -1, 10)));
}

TEST_CASE("inverse") {
    auto qt = make_field("qt", "shift");
    const auto x = mono(qt, qt->one(), 1, 10);
    const auto xi = inverse(x);
    CHECK(xi.valuation() == -1);
    CHECK(xi.prec() == 8);
    CHECK(eq_to_prec(xi, mono(qt, qt->one(), -1, 8), 8));

    const auto one_minus_x = SkewSeries::from_terms(qt, {{0, qt->one()}, {1, qt->from_rational(-1)}}, 12);
    const auto geo = inverse(one_minus_x);
    for (int e = 0; e < 12; ++e) CHECK(geo.coeff(e) == qt->one());

    std::mt19937_64 rng(5);
    for (const auto& field : all_fields()) {
        for (int i = 0; i < 200; ++i) {
            const auto f = random_series(field, rng, static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 8));
            const auto fi = inverse(f);
            CHECK(fi.prec() == f.prec() - 2 * *f.valuation());
            const auto a = f * fi, b = fi * f;
            const auto one = mono(field, field->one(), 0, a.prec());
            REQUIRE(eq_to_prec(a, one, a.prec()));
            REQUIRE(eq_to_prec(b, mono(field, field->one(), 0, b.prec()), b.prec()));
        }
    }
    CHECK_THROWS_AS(inverse(SkewSeries::zero(qt, 4)), Error);
}

TEST_CASE("commutators and conjugation") {
    auto field = make_field("gf(3^4)", "frob");
    const Field& k = *field;
    std::mt19937_64 rng(6);
    const auto f = random_series(field, rng, 0, 6);
    CHECK(commutator(f, f).is_zero());

    const Elem a = k.random(rng);
    CHECK(agree(commutator(mono(field, k.one(), 1, 10), mono(field, a, 0, 10)),
               mono(field, k.sub(k.apply_sigma(a, 1), a), 1, 10)));

    CHECK(same(conjugate(f, mono(field, k.one(), 0, 20)), f.truncated(f.prec())));

    const Elem y = random_nonzero(k, rng);
    const auto ax3 = mono(field, a, 3, 10);
    CHECK(eq_to_prec(conjugate(ax3, mono(field, y, 0, 10)),
                     mono(field, k.mul(k.mul(y, a), k.apply_sigma(k.inv(y), 3)), 3, 10), 10));

    for (int i = 0; i < 100; ++i) {
        const auto u = mono(field, random_nonzero(k, rng), 0, 20);
        const auto g = random_series(field, rng, -2, 8), h = random_series(field, rng, 1, 8);
        const auto lhs = conjugate(commutator(g, h), u);
        const auto rhs = commutator(conjugate(g, u), conjugate(h, u));
        REQUIRE(eq_to_prec(lhs, rhs, std::min(lhs.prec(), rhs.prec())));
    }
}

TEST_CASE("x^n is central when sigma has order n") {
    std::mt19937_64 rng(7);
    for (auto fs : {"gf(2^5)", "gf(3^4)", "gf(2^8)"}) {
        auto field = make_field(fs, "frob");
        const int n = *field->sigma_order();
        const auto xn = mono(field, field->one(), n, n + 20);
        for (int i = 0; i < 50; ++i) {
            const auto a = mono(field, field->random(rng), 0, 20);
            REQUIRE(same(xn * a, a * xn));
        }
    }
}

TEST_CASE("eq_to_prec") {
    auto field = make_field("qt", "shift");
    const Field& k = *field;
    const auto x = mono(field, k.one(), 1, 10);
    const auto x_x9 = SkewSeries::from_terms(field, {{1, k.one()}, {9, k.one()}}, 10);
    CHECK(eq_to_prec(x, x, 10));
    CHECK(eq_to_prec(x, x_x9, 9));
    CHECK_FALSE(eq_to_prec(x, x_x9, 10));
    CHECK_THROWS_AS(eq_to_prec(x, x_x9, 11), Error);
    CHECK_FALSE(eq_to_prec(x, mono(field, k.from_rational(2), 1, 10), 2));
    CHECK_THROWS_AS(x + mono(make_field("qt", "scale:2"), k.one(), 0, 5), Error);
}
