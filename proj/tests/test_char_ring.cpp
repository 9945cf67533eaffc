#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "sqkit/char_ring.h"
#include "sqkit/error.h"
#include "sqkit/steenrod.h"

using namespace sqkit::char_ring;
using sqkit::Error;
using sqkit::ParseError;

namespace {

/* Random homogeneous polynomial of the requested degree (possibly zero). */
SWPolynomial random_homogeneous(std::mt19937& rng, const RingContext& ctx, int degree, int tries = 12) {
    SWPolynomial p = SWPolynomial::zero(ctx);
    for (int t = 0; t < tries; ++t) {
        SWPolynomial m = SWPolynomial::one(ctx);
        int left = degree;
        while (left >= ctx.min_generator()) {
            const int span = std::min(ctx.rank, left) - ctx.min_generator() + 1;
            if (span <= 0)
                break;
            const int g = ctx.min_generator() + static_cast<int>(rng() % span);
            m = mul(m, SWPolynomial::generator(ctx, g));
            left -= g;
        }
        if (left == 0)
            p = add(p, m);
    }
    return p;
}

}  // namespace

TEST_CASE("ring contexts validate their parameters") {
    const RingContext c(11, true);
    CHECK(c.degree_cap == 24);
    CHECK(c.min_generator() == 2);
    CHECK(RingContext(4, false).min_generator() == 1);
    CHECK(RingContext(4, false, 9).degree_cap == 9);
    CHECK_THROWS_AS(RingContext(0, false), Error);
    CHECK_THROWS_AS(RingContext(1, true), Error);   // oriented needs rank >= 2
    CHECK_THROWS_AS(RingContext(5, false, 3), Error);  // cap below rank
    CHECK(c.valid_generator(11));
    CHECK_FALSE(c.valid_generator(1));
    CHECK_FALSE(c.valid_generator(12));
}

TEST_CASE("canonical monomial order is graded, then top-generator-first") {
    const RingContext ctx(11, true);
    const auto p = parse_poly("w2 + w3 + w2^2 + w4 + w3*w2", ctx);
    CHECK(to_string(p) == "w3*w2 + w4 + w2^2 + w3 + w2");
    // within one degree, higher generator exponents rank first
    const auto q = parse_poly("w4*w3^3 + w4*w3*w2^3", ctx);
    CHECK(to_string(q) == "w4*w3^3 + w4*w3*w2^3");
}

TEST_CASE("arithmetic is an F2 algebra") {
    const RingContext ctx(8, false, 40);
    std::mt19937 rng(901);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_homogeneous(rng, ctx, 2 + static_cast<int>(rng() % 6));
        const auto q = random_homogeneous(rng, ctx, 2 + static_cast<int>(rng() % 6));
        const auto r = random_homogeneous(rng, ctx, 2 + static_cast<int>(rng() % 6));
        CHECK(add(p, p).is_zero());
        CHECK(add(p, q) == add(q, p));
        CHECK(mul(p, q) == mul(q, p));
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
        // Frobenius: squaring is additive in characteristic 2
        const auto s = add(p, q);
        CHECK(mul(s, s) == add(mul(p, p), mul(q, q)));
        CHECK(mul(p, SWPolynomial::one(ctx)) == p);
        CHECK(mul(p, SWPolynomial::zero(ctx)).is_zero());
    }
}

TEST_CASE("multiplication fails loudly past the degree cap") {
    const RingContext ctx(3, false, 5);
    const auto w3 = SWPolynomial::generator(ctx, 3);
    CHECK_THROWS_WITH_AS(mul(w3, w3), doctest::Contains("degree_cap"), Error);
    CHECK(mul(w3, SWPolynomial::generator(ctx, 2)).degree() == 5);
}

TEST_CASE("polynomial text round trips and zero generators") {
    const RingContext ctx(11, true);
    for (const char* s : {"w11*w6*w3", "w11*w4^2 + w11*w2^4", "1", "0", "w9*w2^2 + w7*w3^2"})
        CHECK(to_string(parse_poly(s, ctx)) == s);
    // unavailable generators read as the zero class
    CHECK(parse_poly("w1*w11", ctx).is_zero());
    CHECK(parse_poly("w13", ctx).is_zero());
    CHECK(to_string(parse_poly("w11*w6*w3 + w13*w4 + w1", ctx)) == "w11*w6*w3");
    // integer literals reduce mod 2
    CHECK(parse_poly("2", ctx).is_zero());
    CHECK(to_string(parse_poly("3", ctx)) == "1");
    // parenthesized products expand
    CHECK(parse_poly("(w2 + w3)*(w2 + w3)", ctx) == parse_poly("w2^2 + w3^2", ctx));
    CHECK(parse_poly("w2*(w3 + w2^2) + w2^3", ctx) == parse_poly("w3*w2", ctx));

    CHECK_THROWS_AS(parse_poly("w2 +", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("(w2", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("w2 w3", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("", ctx), ParseError);
}

TEST_CASE("component extraction and truncation") {
    const RingContext big(11, false, 24);
    const auto p = parse_poly("w11*w6*w3 + w4 + w3*w2 + 1", big);
    CHECK(to_string(component(p, 20)) == "w11*w6*w3");
    CHECK(to_string(component(p, 5)) == "w3*w2");
    CHECK(component(p, 7).is_zero());
    CHECK(to_string(component(p, 0)) == "1");

    const RingContext small(4, true, 24);
    CHECK(to_string(truncate_to(p, small)) == "w3*w2 + w4 + 1");

    CHECK(divisible_by_generator(parse_poly("w11*w6 + w11*w3^2", big), 11));
    CHECK_FALSE(divisible_by_generator(p, 11));
    CHECK(to_string(divide_by_generator(parse_poly("w11*w6 + w11*w3^2", big), 11)) ==
          "w6 + w3^2");
    CHECK_THROWS_AS(divide_by_generator(p, 11), Error);
}

TEST_CASE("squares on generators follow the classical formula") {
    const RingContext bo(8, false, 30);
    // Sq1 w_j = w1 w_j + (j - 1) w_{j+1}
    CHECK(to_string(sq_generator(1, 2, bo)) == "w3 + w2*w1");
    CHECK(to_string(sq_generator(1, 3, bo)) == "w3*w1");
    CHECK(to_string(sq_generator(1, 4, bo)) == "w5 + w4*w1");
    CHECK(to_string(sq_generator(2, 3, bo)) == "w5 + w4*w1 + w3*w2");
    // unstable boundaries
    CHECK(to_string(sq_generator(0, 5, bo)) == "w5");
    CHECK(to_string(sq_generator(5, 5, bo)) == "w5^2");
    CHECK(sq_generator(6, 5, bo).is_zero());

    // the oriented rank-11 values used by the Thom-space identity
    const RingContext mso(11, true, 24);
    CHECK(to_string(sq_generator(1, 11, mso)) == "0");
    CHECK(to_string(sq_generator(2, 11, mso)) == "w11*w2");
    CHECK(to_string(sq_generator(5, 11, mso)) == "w11*w5");
    CHECK(to_string(sq_generator(9, 11, mso)) == "w11*w9");
    CHECK(to_string(sq_generator(3, 11, mso)) == "w11*w3");
}

TEST_CASE("squares on polynomials: axioms and the Cartan formula") {
    std::mt19937 rng(77);
    int cartan_cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int rank = 3 + static_cast<int>(rng() % 5);
        const bool oriented = rank >= 2 && (rng() % 2 == 0);
        const RingContext ctx(rank, oriented, 26);
        const int dp = 2 + static_cast<int>(rng() % 5);
        const int dq = 2 + static_cast<int>(rng() % 5);
        const auto p = random_homogeneous(rng, ctx, dp);
        const auto q = random_homogeneous(rng, ctx, dq);

        CHECK(sq_poly(0, p) == p);
        if (!p.is_zero()) {
            CHECK(sq_poly(p.degree(), p) == mul(p, p));
            CHECK(sq_poly(p.degree() + 3, p).is_zero());
        }
        const auto p2 = random_homogeneous(rng, ctx, dp);  // same degree: sums stay homogeneous
        CHECK(sq_poly(2, add(p, p2)) == add(sq_poly(2, p), sq_poly(2, p2)));

        const auto pq = mul(p, q);
        for (int n = 1; n <= 4; ++n) {
            if (pq.is_zero() || dp + dq + n > ctx.degree_cap)
                continue;
            auto rhs = SWPolynomial::zero(ctx);
            for (int i = 0; i <= n; ++i)
                rhs = add(rhs, mul(sq_poly(i, p), sq_poly(n - i, q)));
            CHECK(sq_poly(n, pq) == rhs);
            ++cartan_cases;
        }
    }
    CHECK(cartan_cases > 150);

    const RingContext ctx(5, false, 9);
    const auto p = parse_poly("w3 + w2*w1", ctx);
    CHECK_THROWS_AS(sq_poly(-1, p), Error);
    CHECK_THROWS_AS(sq_poly(1, parse_poly("w2 + w3", ctx)), Error);  // inhomogeneous
    // degree-cap complaints only when the target degree is trackable
    const auto w4 = parse_poly("w4*w3", ctx);  // degree 7
    CHECK_THROWS_AS(sq_poly(3, w4), Error);    // 7 + 3 > 9
    CHECK(sq_poly(8, w4).is_zero());           // above the degree: zero, no complaint
}

TEST_CASE("steenrod elements act by right-to-left composition") {
    const RingContext ctx(11, true, 24);
    const auto alpha = parse_poly("w11*w6*w3", ctx);
    using sqkit::steenrod::parse_element;

    CHECK(apply_steenrod(parse_element("Sq3.Sq1"), alpha) ==
          sq_poly(3, sq_poly(1, alpha)));
    CHECK(to_string(apply_steenrod(parse_element("Sq3.Sq1"), alpha)) == "w11*w7*w3^2");
    CHECK(apply_steenrod(parse_element("1"), alpha) == alpha);
    CHECK(apply_steenrod(parse_element("0"), alpha).is_zero());

    // the Adem relation holds for the action
    std::mt19937 rng(4242);
    const RingContext bo(6, false, 22);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_homogeneous(rng, bo, 2 + static_cast<int>(rng() % 8));
        CHECK(apply_steenrod(parse_element("Sq2.Sq2"), p) ==
              apply_steenrod(parse_element("Sq3.Sq1"), p));
        CHECK(apply_steenrod(parse_element("Sq1.Sq2"), p) ==
              apply_steenrod(parse_element("Sq3"), p));
    }
}

TEST_CASE("Pontryagin expressions reduce mod 2") {
    const RingContext mso(11, true, 24);
    CHECK(to_string(reduce_pontryagin(parse_pontryagin("t*(p1^2 - 2*p2)"), mso)) == "w11*w2^4");
    CHECK(to_string(reduce_pontryagin(parse_pontryagin("t*p2"), mso)) == "w11*w4^2");
    CHECK(to_string(reduce_pontryagin(parse_pontryagin("t*p1"), mso)) == "w11*w2^2");
    CHECK(to_string(reduce_pontryagin(parse_pontryagin("3*p1 + 2*p2"), mso)) == "w2^2");
    CHECK(reduce_pontryagin(parse_pontryagin("2*t"), mso).is_zero());
    CHECK(to_string(reduce_pontryagin(parse_pontryagin("7"), mso)) == "1");

    CHECK_THROWS_AS(reduce_pontryagin(parse_pontryagin("p6"), mso), Error);  // 2*6 > 11
    const RingContext bo(11, false, 24);
    CHECK_THROWS_AS(reduce_pontryagin(parse_pontryagin("p1"), bo), Error);  // unoriented

    CHECK(to_string(parse_pontryagin("t*(p1^2 - 2*p2)")) == "t*p1^2 - 2*t*p2");
    CHECK(to_string(parse_pontryagin("p1*p1 - p2 + p2")) == "p1^2");
    CHECK_THROWS_AS(parse_pontryagin("t^2"), ParseError);
    CHECK_THROWS_AS(parse_pontryagin("t*t"), ParseError);
    CHECK_THROWS_AS(parse_pontryagin("q3"), ParseError);
    CHECK_THROWS_AS(parse_pontryagin("p1 +"), ParseError);
}
