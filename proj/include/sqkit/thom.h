#pragma once
#include <string>
#include <utility>
#include <vector>

#include "sqkit/char_ring.h"

/* Thom-space models: the reduced cohomology of the rank-k oriented Thom space is
 * the ideal generated by w_k inside F2[w_2..w_k], with the Thom class going to
 * w_k and Pontryagin classes of the universal bundle to squares w_{2i}^2. */

namespace sqkit::thom {

struct ThomModel {
    char_ring::RingContext ctx;
    char_ring::SWPolynomial thom_class;

    static ThomModel mso(int k, int degree_cap = -1);

    /* Membership in the model: every term divisible by w_k. */
    bool contains(const char_ring::SWPolynomial& p) const;
};

/* Prints an element of the rank-k model with the Thom class factored out:
 * "w11*(w10*w3 + w9*w2^2)"; the zero class prints as "0". */
std::string factored_str(const char_ring::SWPolynomial& p, int k);

struct TranscriptEntry {
    std::string key;    // stable machine key
    std::string label;  // human label
    char_ring::SWPolynomial value;
    std::string note;   // optional provenance, e.g. the integral class reduced
};

struct IdentityReport {
    std::vector<TranscriptEntry> classes;    // the five input classes (one unused by the sum)
    std::vector<TranscriptEntry> lhs_terms;  // seven operator expansions
    std::vector<TranscriptEntry> rhs_terms;  // the two Thom-class terms
    char_ring::SWPolynomial lhs, rhs, difference;
    bool equal = false;
    bool sq9_delta_omitted = false;
};

/* Evaluates, inside the rank-11 oriented model in degree 24, the identity
 *   (Sq^4 + Sq^3 Sq^1) alpha + Sq^5 beta + (Sq^8 + Sq^7 Sq^1 + Sq^6 Sq^2) gamma
 *     + Sq^9 delta = t Sq^2 t + Sq^11 Sq^2 t
 * for alpha = w11 w6 w3, beta = rho2(t(p1^2 - 2 p2)), gamma = w11 w3 w2,
 * delta = rho2(t p1). beta' = rho2(t p2) is constructed and reported but is not
 * a term of the sum. The debug flag drops the Sq^9 delta term to show the
 * resulting defect. */
IdentityReport verify_codim11_identity(bool omit_sq9_delta = false);

/* Dimensions of the degree-d part of the mod-3 reduced cohomology of the rank-3
 * oriented Thom space, t * Z3[p1]: dimension 1 iff d % 4 == 3, else 0.
 * Returns (degree, dimension) pairs for 0 <= d <= d_max; requires d_max >= 3. */
std::vector<std::pair<int, int>> mso3_mod3_degree_dims(int d_max);

}  // namespace sqkit::thom
