#include "sqkit/thom.h"

#include "sqkit/error.h"

namespace sqkit::thom {

using char_ring::RingContext;
using char_ring::SWPolynomial;

ThomModel ThomModel::mso(int k, int degree_cap) {
    RingContext ctx(k, /*oriented*/ true, degree_cap);
    return {ctx, SWPolynomial::generator(ctx, k)};
}

bool ThomModel::contains(const SWPolynomial& p) const {
    return char_ring::divisible_by_generator(p, ctx.rank);
}

std::string factored_str(const SWPolynomial& p, int k) {
    if (p.is_zero())
        return "0";
    if (!char_ring::divisible_by_generator(p, k))
        throw Error("factored_str: element does not lie in the w" + std::to_string(k) + " ideal");
    return "w" + std::to_string(k) + "*(" +
           char_ring::to_string(char_ring::divide_by_generator(p, k)) + ")";
}

IdentityReport verify_codim11_identity(bool omit_sq9_delta) {
    const RingContext ctx(11, /*oriented*/ true);  // cap 24: the identity's degree
    const SWPolynomial t = SWPolynomial::generator(ctx, 11);

    auto reduce = [&](const std::string& s) {
        return char_ring::reduce_pontryagin(char_ring::parse_pontryagin(s), ctx);
    };
    const SWPolynomial alpha = char_ring::parse_poly("w11*w6*w3", ctx);
    const SWPolynomial beta = reduce("t*(p1^2 - 2*p2)");
    const SWPolynomial beta_prime = reduce("t*p2");
    const SWPolynomial gamma = char_ring::parse_poly("w11*w3*w2", ctx);
    const SWPolynomial delta = reduce("t*p1");

    IdentityReport rep;
    rep.sq9_delta_omitted = omit_sq9_delta;
    rep.classes = {
        {"alpha", "alpha", alpha, ""},
        {"beta", "beta", beta, "rho2 of t*(p1^2 - 2*p2)"},
        {"beta_prime", "beta'", beta_prime, "rho2 of t*p2; side condition only, not a term"},
        {"gamma", "gamma", gamma, ""},
        {"delta", "delta", delta, "rho2 of t*p1"},
    };

    auto act = [&](const char* word, const SWPolynomial& p) {
        return char_ring::apply_steenrod(steenrod::parse_element(word), p);
    };
    rep.lhs_terms = {
        {"sq4_alpha", "Sq4 alpha", act("Sq4", alpha), ""},
        {"sq3sq1_alpha", "Sq3.Sq1 alpha", act("Sq3.Sq1", alpha), ""},
        {"sq5_beta", "Sq5 beta", act("Sq5", beta), ""},
        {"sq8_gamma", "Sq8 gamma", act("Sq8", gamma), ""},
        {"sq7sq1_gamma", "Sq7.Sq1 gamma", act("Sq7.Sq1", gamma), ""},
        {"sq6sq2_gamma", "Sq6.Sq2 gamma", act("Sq6.Sq2", gamma), ""},
        {"sq9_delta", "Sq9 delta", act("Sq9", delta), ""},
    };
    rep.rhs_terms = {
        {"t_sq2_t", "t Sq2 t", char_ring::mul(t, char_ring::sq_poly(2, t)), ""},
        {"sq11sq2_t", "Sq11.Sq2 t", act("Sq11.Sq2", t), ""},
    };

    SWPolynomial lhs = SWPolynomial::zero(ctx);
    for (const auto& e : rep.lhs_terms) {
        if (omit_sq9_delta && e.key == "sq9_delta")
            continue;
        lhs = char_ring::add(lhs, e.value);
    }
    SWPolynomial rhs = SWPolynomial::zero(ctx);
    for (const auto& e : rep.rhs_terms)
        rhs = char_ring::add(rhs, e.value);

    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.difference = char_ring::add(lhs, rhs);
    rep.equal = rep.difference.is_zero();
    return rep;
}

std::vector<std::pair<int, int>> mso3_mod3_degree_dims(int d_max) {
    if (d_max < 3)
        throw Error("mso3_mod3_degree_dims: d_max must be at least 3");
    std::vector<std::pair<int, int>> out;
    out.reserve(d_max + 1);
    for (int d = 0; d <= d_max; ++d)
        out.emplace_back(d, (d >= 3 && d % 4 == 3) ? 1 : 0);
    return out;
}

}  // namespace sqkit::thom
