#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqkit/steenrod.h"

/* Polynomial rings F2[w_1..w_k] (or F2[w_2..w_k] in the oriented case) with the
 * Steenrod action given by the Wu formula, extended multiplicatively via the
 * total square. Monomials mentioning a generator outside the context are the
 * zero class; degrees above the tracked cap fail loudly. */

namespace sqkit::char_ring {

struct RingContext {
    int rank = 1;         // top generator index k
    bool oriented = false;  // oriented: w_1 = 0
    int degree_cap = 4;   // maximum tracked degree

    RingContext() = default;
    RingContext(int k, bool oriented_flag, int cap = -1);

    int min_generator() const { return oriented ? 2 : 1; }
    bool valid_generator(int j) const { return j >= min_generator() && j <= rank; }
    bool operator==(const RingContext&) const = default;
};

struct GenPow {
    int gen;
    int exp;
    auto operator<=>(const GenPow&) const = default;
};

/* Product of generator powers; factors kept in descending generator order. */
struct SWMonomial {
    std::vector<GenPow> powers;

    int degree() const;
    int exponent(int gen) const;
    bool is_one() const { return powers.empty(); }
    bool operator==(const SWMonomial&) const = default;
};

/* Strict "ranks above": higher total degree first, then exponents compared from
 * the highest generator downward. This is the canonical term order. */
bool mono_ranks_above(const SWMonomial& a, const SWMonomial& b);

/* F2 combination of monomials; terms sorted descending in the canonical order
 * with set semantics. Every polynomial carries its ring context. */
struct SWPolynomial {
    RingContext ctx;
    std::vector<SWMonomial> terms;

    static SWPolynomial zero(const RingContext& c) { return {c, {}}; }
    static SWPolynomial one(const RingContext& c) { return {c, {SWMonomial{}}}; }
    static SWPolynomial generator(const RingContext& c, int j);

    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // throws on zero or non-homogeneous polynomials
    bool operator==(const SWPolynomial&) const = default;
};

SWPolynomial add(const SWPolynomial& p, const SWPolynomial& q);
/* Throws when a product monomial exceeds the degree cap. */
SWPolynomial mul(const SWPolynomial& p, const SWPolynomial& q);
/* Extract the homogeneous component of the given degree. */
SWPolynomial component(const SWPolynomial& p, int degree);
/* Image under the inclusion into ctx (same generators) or a truncation onto a
 * context with fewer generators / orientation: unavailable generators are 0. */
SWPolynomial truncate_to(const SWPolynomial& p, const RingContext& ctx);
bool divisible_by_generator(const SWPolynomial& p, int gen);
SWPolynomial divide_by_generator(const SWPolynomial& p, int gen);

/* Wu formula, with the unstable axioms taking precedence:
 * Sq^0 = id, Sq^j(w_j) = w_j^2, Sq^i(w_j) = 0 for i > j, and otherwise
 * Sq^i(w_j) = sum_t C(j-i+t-1, t) w_{i-t} w_{j+t} with w_0 = 1. */
SWPolynomial sq_generator(int i, int j, const RingContext& ctx);

/* Sq^n on a homogeneous polynomial, computed by extracting the degree component
 * of the multiplicative total square. */
SWPolynomial sq_poly(int n, const SWPolynomial& p);

/* Action of a sum of words; each word is applied right to left. */
SWPolynomial apply_steenrod(const steenrod::SteenrodElement& e, const SWPolynomial& p);

/* Integer polynomial in Pontryagin classes p_1, p_2, ..., optionally multiplied
 * by a formal Thom class symbol t. */
struct PontryaginTerm {
    long long coeff;
    int t_exp;                 // 0 or 1
    std::vector<int> p_exps;   // exponent of p_{i+1} at position i
    bool operator==(const PontryaginTerm&) const = default;
};

struct PontryaginExpression {
    std::vector<PontryaginTerm> terms;
    bool operator==(const PontryaginExpression&) const = default;
};

/* Mod-2 reduction into an oriented context: p_i -> w_{2i}^2 and t -> w_k.
 * Requires 2 * (largest Pontryagin index) <= rank. */
SWPolynomial reduce_pontryagin(const PontryaginExpression& expr, const RingContext& ctx);

/* Text forms. Polynomials: "w11*w6*w3 + w11*w2^4" (the parser also accepts
 * parenthesized products of sums); Pontryagin expressions: "t*(p1^2 - 2*p2)". */
std::string to_string(const SWMonomial& m);
std::string to_string(const SWPolynomial& p);
std::string to_string(const PontryaginExpression& e);
SWPolynomial parse_poly(const std::string& text, const RingContext& ctx);
PontryaginExpression parse_pontryagin(const std::string& text);

}  // namespace sqkit::char_ring
