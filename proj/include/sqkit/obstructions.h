#pragma once
#include <map>
#include <string>
#include <vector>

#include "sqkit/presentation.h"
#include "sqkit/steenrod.h"

/* Embedding and immersion obstruction checkers over algebra presentations.
 * Each verdict is either a definite topological conclusion backed by the
 * stored data, or Inconclusive: the criterion does not decide (the obstruction
 * vanishes, a correction tuple exists, or a needed table row is missing).
 * Checkers never guess; unknown data degrades to Inconclusive, and violated
 * preconditions throw. */

namespace sqkit::obstructions {

enum class Outcome { NotEmbedded, NotImmersed, Immersed, Inconclusive };
std::string to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::string witness;                         // correction tuple / pairing value, when relevant
    std::vector<std::string> trail;              // human-readable reasoning, one step per line
    std::map<std::string, std::string> details;  // porcelain key=value payload

    /* 0 for a definite conclusion, 1 for Inconclusive. */
    int exit_code() const { return outcome == Outcome::Inconclusive ? 1 : 0; }
};

struct TheoremCOptions {
    long long cap = 1 << 20;  // refusal threshold for the correction-tuple search
};

/* Codimension-11 embedding criterion for a degree-11 class x in a closed
 * 24-manifold (prime 2). NotEmbedded when no correction tuple
 * (alpha, beta, gamma, delta) in H^20 x rho(19) x H^16 x rho(15) satisfies
 *   x Sq2 x + Sq11 Sq2 x = (Sq4 + Sq3 Sq1) alpha + Sq5 beta
 *                          + (Sq8 + Sq7 Sq1 + Sq6 Sq2) gamma + Sq9 delta;
 * Inconclusive with the first matching tuple (deterministic Gray order)
 * otherwise. Throws when the search space exceeds opt.cap. */
Verdict check_theorem_c(const presentation::AlgebraPresentation& a, const std::string& class_name,
                        const TheoremCOptions& opt = {});

/* Codimension-3 criterion at the prime 3 for a degree-3 class x in a closed
 * 10-manifold: < x P1 x, [X] > != 0 forces NotEmbedded, with no correction
 * terms because the relevant Thom-space group vanishes in degree 10. */
Verdict check_bhk_codim3(const presentation::AlgebraPresentation& a, const std::string& class_name);

/* Immersion obstruction: for admissible I with excess(I) = deg x = k > 1,
 * Sq^I x must be the reduction of an integral class whenever x is represented
 * by an immersed submanifold of codimension k. */
Verdict check_gsz_immersion(const presentation::AlgebraPresentation& a,
                            const std::string& class_name, const steenrod::SqWord& word);

/* Positive immersion criterion for a degree-11 class in a 24-manifold: the
 * three recorded odd-primary obstructions (facts betaP1_3_x_vanishes,
 * betaP2_3_x_vanishes, betaP1_5_x_vanishes) are the complete list, so all
 * true yields Immersed. */
Verdict check_prop_kq(const presentation::AlgebraPresentation& a, const std::string& class_name);

/* Mod 2 double-point class of an immersion f with normal bundle nu:
 * m2 = f^* x + w_k(nu). Nonzero m2 certifies that the immersion is not an
 * embedding. */
struct WhitneyResult {
    presentation::Combination m2;
    std::vector<std::string> trail;
};
WhitneyResult whitney_m2_mod2(const presentation::AlgebraPresentation& a,
                              const presentation::Combination& fx,
                              const presentation::Combination& wknu);

}  // namespace sqkit::obstructions
