#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

/* Finite graded F_p algebra presentations: per-degree bases, sparse cup and
 * operation tables, integral-reduction subspaces, named boolean facts and an
 * optional fundamental class. Unspecified cup products are zero; unspecified
 * operation rows and rho_image degrees are unknown, and explicit "= 0" /
 * "= none" lines assert vanishing. Degree 0 always holds the implicit unit
 * basis element "one". */

namespace sqkit::presentation {

/* A homogeneous class: coefficients in [0, p) over the basis of its degree. */
struct Combination {
    int degree = 0;
    std::vector<int> coeffs;

    bool is_zero() const;
    bool operator==(const Combination&) const = default;
};

struct RhoImage {
    enum class Kind { None, All, Span };
    Kind kind = Kind::None;
    std::vector<std::vector<int>> span;  // coefficient rows, only for Kind::Span
    bool operator==(const RhoImage&) const = default;
};

struct AlgebraPresentation {
    std::string space_name;
    int prime = 2;
    int dim = 0;  // top (manifold) dimension n

    std::vector<std::vector<std::string>> basis;            // names per degree, 0..dim
    std::map<std::string, std::pair<int, int>> gen_lookup;  // name -> (degree, index)

    /* Explicit cup lines, keyed ((d1,i1),(d2,i2)) with the pair canonically
     * ordered; the value lives in degree d1+d2 (empty above dim). */
    std::map<std::array<int, 4>, Combination> cup_entries;
    /* label -> (degree, index) -> image of that basis element. */
    std::map<std::string, std::map<std::pair<int, int>, Combination>> op_entries;
    std::map<int, RhoImage> rho_images;
    std::map<std::string, bool> facts;
    std::string fundamental;  // basis name in degree dim; empty when absent

    int dim_at(int degree) const;
    std::pair<int, int> find(const std::string& name) const;  // throws on unknown names
    Combination zero_class(int degree) const;
    Combination basis_class(int degree, int index) const;
    bool operator==(const AlgebraPresentation&) const = default;
};

/* Degree shift of an operation label: "SqI" shifts by i (p = 2 only), "PI" by
 * 2i(p-1) (odd p only). Throws on malformed or prime-incompatible labels. */
int op_degree_shift(const std::string& label, int prime);

/* Line-oriented text format; '#' starts a comment. Throws ParseError with
 * line/column on malformed input. */
AlgebraPresentation parse_presentation(const std::string& text);
std::string print_presentation(const AlgebraPresentation& a);

/* Parse "2*x + y" (or "0") as a class of the given degree. */
Combination parse_combination(const AlgebraPresentation& a, const std::string& text, int degree);
std::string combination_str(const AlgebraPresentation& a, const Combination& c);

/* Linear extension of the stored operation rows. Axioms that hold with no data:
 * index-0 labels are the identity, Sq^i = 0 above the degree (p = 2), and any
 * value in a degree beyond dim is zero. Returns nullopt when a needed row is
 * absent: missing data, distinct from zero. */
std::optional<Combination> sq_apply(const AlgebraPresentation& a, const std::string& label,
                                    const Combination& c);

/* Bilinear extension of the cup table; unspecified basis products are zero and
 * the swapped orientation carries the graded-commutativity sign. */
Combination cup(const AlgebraPresentation& a, const Combination& c1, const Combination& c2);

/* Is c the reduction of an integral class, per the stored rho_image data?
 * nullopt when the degree's subspace is unrecorded (and the degree is nonzero-
 * dimensional; zero spaces are determined). */
std::optional<bool> rho_contains(const AlgebraPresentation& a, const Combination& c);

struct Finding {
    std::string check;
    std::string witness;
    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> violations;
    std::vector<std::string> confirmations;
    bool valid() const { return violations.empty(); }
};

/* Degree rules, identity rows, mod-2 unstable axioms, Cartan on stored
 * products, Adem composites within range, and Poincare pairing nondegeneracy
 * when a fundamental class is present. Checks run wherever the stored data
 * determines both sides. */
ValidationReport validate(const AlgebraPresentation& a);

}  // namespace sqkit::presentation
