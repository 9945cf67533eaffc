#pragma once
#include <compare>
#include <string>
#include <vector>

/* Mod-2 Steenrod algebra in the Serre-Cartan (admissible word) presentation. */

namespace sqkit::steenrod {

/* C(m, n) mod 2 by the digit rule: odd iff the bits of n are a subset of the bits of m. */
bool binom_mod2(long long m, long long n);

/* A composition Sq^{i1}...Sq^{ir} of squares; the empty word is the identity.
 * All indices are strictly positive. */
struct SqWord {
    std::vector<int> indices;

    SqWord() = default;
    explicit SqWord(std::vector<int> idx);

    int degree() const;
    bool empty() const { return indices.empty(); }
    auto operator<=>(const SqWord&) const = default;
};

bool is_admissible(const SqWord& w);

/* Sum of i_j - 2 i_{j+1}; equals 2 i_1 - degree for nonempty words, 0 for the empty word. */
int excess(const SqWord& w);

/* F2-linear combination of words. Terms are kept sorted (lexicographic on index
 * sequences) with set semantics: a word appears at most once. */
struct SteenrodElement {
    std::vector<SqWord> terms;

    static SteenrodElement zero() { return {}; }
    static SteenrodElement word(SqWord w);

    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // throws on zero or non-homogeneous elements
    auto operator<=>(const SteenrodElement&) const = default;
};

/* Sum in the algebra: symmetric difference of term sets. */
SteenrodElement add(const SteenrodElement& a, const SteenrodElement& b);

/* Right-hand side of the relation Sq^a Sq^b = sum_j C(b-1-j, a-2j) Sq^{a+b-j} Sq^j
 * for an inadmissible pair a < 2b (j = 0 contributes the single square Sq^{a+b}). */
SteenrodElement adem_expand_pair(int a, int b);

/* Rewrites the leftmost inadmissible pair of each word until every term is
 * admissible. Requires a homogeneous input; degree is preserved. A degree-indexed
 * rewrite budget guards termination and is reported loudly when exceeded. */
SteenrodElement adem_normalize(const SteenrodElement& e);

/* Admissible words I with excess(I) < k and k + degree(I) <= d_max, i.e. the
 * index set of Serre's polynomial generators for K(Z/2, k) through degree d_max.
 * Sorted by degree, then lexicographically. Requires k >= 2; d_max < k gives {}. */
std::vector<SqWord> serre_generators(int k, int d_max);

/* Nonempty admissible J with excess(J) < k, first index != 1 and degree(J) + k
 * even, through k + degree(J) <= d_max: the words whose squares obstruct
 * immersions in the codimension-k skeleton argument. Requires k > 1. */
std::vector<SqWord> gsz_candidates(int k, int d_max);

/* Text form: "Sq4.Sq2.Sq1"; "1" is the empty word; elements join terms with " + "
 * and the zero element prints as "0". */
std::string to_string(const SqWord& w);
std::string to_string(const SteenrodElement& e);
SqWord parse_word(const std::string& text);
SteenrodElement parse_element(const std::string& text);

}  // namespace sqkit::steenrod
