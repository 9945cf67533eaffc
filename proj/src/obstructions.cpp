#include "sqkit/obstructions.h"

#include <bit>
#include <cstdint>

#include "sqkit/error.h"
#include "sqkit/fp_linalg.h"
#include "sqkit/thom.h"

namespace sqkit::obstructions {

using presentation::AlgebraPresentation;
using presentation::Combination;
using presentation::RhoImage;

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::NotEmbedded:
            return "NotEmbedded";
        case Outcome::NotImmersed:
            return "NotImmersed";
        case Outcome::Immersed:
            return "Immersed";
        case Outcome::Inconclusive:
            return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

void acc_add(Combination& acc, const Combination& v, int p) {
    for (size_t i = 0; i < acc.coeffs.size(); ++i)
        acc.coeffs[i] = fp::normalize(acc.coeffs[i] + v.coeffs[i], p);
}

/* Apply Sq^{i1}...Sq^{ir} (left to right composition, so right factor first). */
std::optional<Combination> apply_sq_word(const AlgebraPresentation& a,
                                         const std::vector<int>& indices, Combination c,
                                         std::string* missing) {
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
        auto next = presentation::sq_apply(a, "Sq" + std::to_string(*it), c);
        if (!next) {
            if (missing)
                *missing = "Sq" + std::to_string(*it) + " on degree " + std::to_string(c.degree);
            return std::nullopt;
        }
        c = std::move(*next);
    }
    return c;
}

Verdict inconclusive(std::string reason) {
    Verdict v;
    v.outcome = Outcome::Inconclusive;
    v.details["outcome"] = to_string(v.outcome);
    v.details["reason"] = reason;
    v.trail.push_back(std::move(reason));
    return v;
}

}  // namespace

Verdict check_theorem_c(const AlgebraPresentation& a, const std::string& class_name,
                        const TheoremCOptions& opt) {
    if (a.prime != 2)
        throw Error("the codimension-11 criterion is a mod 2 statement; presentation has prime " +
                    std::to_string(a.prime));
    const auto [dx, ix] = a.find(class_name);
    if (dx != 11)
        throw Error("class '" + class_name + "' has degree " + std::to_string(dx) +
                    ", the codimension-11 criterion needs degree 11");
    if (a.dim < 24)
        throw Error("the criterion compares classes in degree 24; presentation has dim " +
                    std::to_string(a.dim));

    const Combination x = a.basis_class(11, ix);
    std::string missing;

    auto sq2x = apply_sq_word(a, {2}, x, &missing);
    if (!sq2x)
        return inconclusive(missing + " is not determined by the stored data");
    auto sq11sq2x = apply_sq_word(a, {11}, *sq2x, &missing);
    if (!sq11sq2x)
        return inconclusive(missing + " is not determined by the stored data");
    Combination rhs = presentation::cup(a, x, *sq2x);
    acc_add(rhs, *sq11sq2x, 2);

    Verdict v;
    v.trail.push_back("target: " + class_name + " Sq2 " + class_name + " + Sq11 Sq2 " + class_name +
                      " = " + combination_str(a, rhs));
    v.details["rhs"] = combination_str(a, rhs);

    if (auto fact = a.facts.find("P2_3_x_nonzero"); fact != a.facts.end()) {
        if (fact->second)
            v.trail.push_back(
                "fact P2_3_x_nonzero = true: an odd-primary condition excludes the reduction of "
                "t p2 as a beta correction (side note; the mod 2 search is unchanged)");
        else
            v.trail.push_back("fact P2_3_x_nonzero = false: no odd-primary restriction on beta");
    }

    /* Correction tuple spaces: alpha in H^20, beta in rho(19), gamma in H^16,
     * delta in rho(15). */
    struct Component {
        const char* name;
        int degree;
        bool rho_restricted;
        std::vector<std::vector<int>> ops;  // summands, as index sequences
    };
    const Component comps[4] = {
        {"alpha", 20, false, {{4}, {3, 1}}},
        {"beta", 19, true, {{5}}},
        {"gamma", 16, false, {{8}, {7, 1}, {6, 2}}},
        {"delta", 15, true, {{9}}},
    };

    std::vector<Combination> source;  // generator of each search bit
    std::vector<int> comp_of;         // which component the bit belongs to
    for (int ci = 0; ci < 4; ++ci) {
        const Component& comp = comps[ci];
        std::vector<Combination> gens;
        if (!comp.rho_restricted) {
            for (int i = 0; i < a.dim_at(comp.degree); ++i)
                gens.push_back(a.basis_class(comp.degree, i));
        } else if (a.dim_at(comp.degree) > 0) {
            auto it = a.rho_images.find(comp.degree);
            if (it == a.rho_images.end())
                return inconclusive("rho image in degree " + std::to_string(comp.degree) +
                                    " is not recorded, so the " + comp.name +
                                    " corrections cannot be enumerated");
            if (it->second.kind == RhoImage::Kind::All) {
                for (int i = 0; i < a.dim_at(comp.degree); ++i)
                    gens.push_back(a.basis_class(comp.degree, i));
            } else if (it->second.kind == RhoImage::Kind::Span) {
                for (const auto& row : fp::echelon_basis(it->second.span, 2))
                    gens.push_back({comp.degree, row});
            }
        }
        v.trail.push_back(std::string(comp.name) + " ranges over a space of dimension " +
                          std::to_string(gens.size()));
        for (auto& g : gens) {
            source.push_back(std::move(g));
            comp_of.push_back(ci);
        }
    }

    /* Refuse oversized searches before computing any operator images. */
    const int bits = static_cast<int>(source.size());
    if (bits >= 62 || (1LL << bits) > opt.cap)
        throw Error("correction search space has 2^" + std::to_string(bits) +
                    " tuples, above the cap of " + std::to_string(opt.cap) +
                    "; raise the cap to proceed");
    const std::uint64_t total = 1ULL << bits;

    std::vector<Combination> contrib;  // image of each search bit in degree 24
    for (int b = 0; b < bits; ++b) {
        const Component& comp = comps[comp_of[b]];
        Combination image = a.zero_class(24);
        for (const auto& word : comp.ops) {
            auto part = apply_sq_word(a, word, source[b], &missing);
            if (!part)
                return inconclusive(missing + " is not determined by the stored data (needed for " +
                                    comp.name + " corrections)");
            acc_add(image, *part, 2);
        }
        contrib.push_back(std::move(image));
    }
    v.details["search_bits"] = std::to_string(bits);
    v.details["tuples"] = std::to_string(total);

    /* Gray-code walk: one generator toggles per step, alpha bits vary fastest.
     * The zero tuple comes first, so a vanishing target is matched immediately. */
    Combination sum = a.zero_class(24);
    std::vector<char> chosen(bits, 0);
    std::uint64_t step = 0;
    bool found = (sum == rhs);
    while (!found && step + 1 < total) {
        ++step;
        const int bit = std::countr_zero(step);
        chosen[bit] ^= 1;
        acc_add(sum, contrib[bit], 2);
        found = (sum == rhs);
    }

    if (!found) {
        v.outcome = Outcome::NotEmbedded;
        v.trail.push_back("searched all " + std::to_string(total) +
                          " correction tuple(s): none matches the target");
        v.trail.push_back(class_name +
                          " is not represented by an embedded submanifold of codimension 11");
    } else {
        v.outcome = Outcome::Inconclusive;
        std::string witness;
        for (int ci = 0; ci < 4; ++ci) {
            Combination part = a.zero_class(comps[ci].degree);
            for (int b = 0; b < bits; ++b)
                if (chosen[b] && comp_of[b] == ci)
                    acc_add(part, source[b], 2);
            const std::string s = combination_str(a, part);
            v.details[comps[ci].name] = s;
            if (!witness.empty())
                witness += ", ";
            witness += std::string(comps[ci].name) + " = " + s;
        }
        v.witness = witness;
        v.trail.push_back("correction tuple found after " + std::to_string(step + 1) +
                          " candidate(s): " + witness);
        v.trail.push_back("the criterion does not obstruct an embedded representative");
    }
    v.details["outcome"] = to_string(v.outcome);
    return v;
}

Verdict check_bhk_codim3(const AlgebraPresentation& a, const std::string& class_name) {
    if (a.prime != 3)
        throw Error("the codimension-3 criterion works at the prime 3; presentation has prime " +
                    std::to_string(a.prime));
    const auto [dx, ix] = a.find(class_name);
    if (dx != 3)
        throw Error("class '" + class_name + "' has degree " + std::to_string(dx) +
                    ", the codimension-3 criterion needs degree 3");
    if (a.dim != 10)
        throw Error("the codimension-3 criterion applies to 10-manifolds; presentation has dim " +
                    std::to_string(a.dim));

    // Recompute the correction group rather than trusting a constant.
    for (const auto& [d, dim] : thom::mso3_mod3_degree_dims(10))
        if (d == 10 && dim != 0)
            throw Error("internal inconsistency: expected a trivial degree-10 correction group");

    Verdict v;
    v.trail.push_back("the mod 3 Thom-space group in degree 10 vanishes: no correction terms");

    auto p1x = presentation::sq_apply(a, "P1", a.basis_class(3, ix));
    if (!p1x)
        return inconclusive("P1 " + class_name + " is not determined by the stored data");
    const Combination prod = presentation::cup(a, a.basis_class(3, ix), *p1x);
    if (a.fundamental.empty())
        return inconclusive("no fundamental class is recorded, so the pairing cannot be evaluated");
    const auto [fd, fidx] = a.find(a.fundamental);
    (void)fd;
    const int pairing = prod.coeffs.empty() ? 0 : prod.coeffs[fidx];

    v.details["p1x"] = combination_str(a, *p1x);
    v.details["pairing"] = std::to_string(pairing);
    v.trail.push_back("< " + class_name + " P1 " + class_name + ", [X] > = " +
                      std::to_string(pairing));
    if (pairing != 0) {
        v.outcome = Outcome::NotEmbedded;
        v.witness = "pairing = " + std::to_string(pairing);
        v.trail.push_back(class_name +
                          " is not represented by an embedded submanifold of codimension 3");
    } else {
        v.outcome = Outcome::Inconclusive;
        v.trail.push_back("the pairing vanishes: the criterion gives no obstruction");
    }
    v.details["outcome"] = to_string(v.outcome);
    return v;
}

Verdict check_gsz_immersion(const AlgebraPresentation& a, const std::string& class_name,
                            const steenrod::SqWord& word) {
    if (a.prime != 2)
        throw Error("the skeleton immersion criterion is a mod 2 statement; presentation has prime " +
                    std::to_string(a.prime));
    const auto [k, ix] = a.find(class_name);
    if (k <= 1)
        throw Error("the skeleton immersion criterion needs a class of degree at least 2");
    if (!steenrod::is_admissible(word))
        throw Error("operation word " + steenrod::to_string(word) + " is not admissible");
    if (steenrod::excess(word) != k)
        throw Error("operation word " + steenrod::to_string(word) + " has excess " +
                    std::to_string(steenrod::excess(word)) + ", the criterion needs excess " +
                    std::to_string(k) + " = deg " + class_name);

    std::string missing;
    auto image = apply_sq_word(a, word.indices, a.basis_class(k, ix), &missing);
    if (!image)
        return inconclusive(missing + " is not determined by the stored data");

    Verdict v;
    const std::string word_str = steenrod::to_string(word);
    v.details["image"] = combination_str(a, *image);
    v.trail.push_back(word_str + " " + class_name + " = " + combination_str(a, *image) +
                      " in degree " + std::to_string(image->degree));
    if (image->is_zero()) {
        v.outcome = Outcome::Inconclusive;
        v.trail.push_back("the image vanishes, so it lifts trivially: no obstruction");
        v.details["outcome"] = to_string(v.outcome);
        return v;
    }
    auto lifts = presentation::rho_contains(a, *image);
    if (!lifts)
        return inconclusive("rho image in degree " + std::to_string(image->degree) +
                            " is not recorded");
    if (*lifts) {
        v.outcome = Outcome::Inconclusive;
        v.trail.push_back("the image is the reduction of an integral class: no obstruction");
    } else {
        v.outcome = Outcome::NotImmersed;
        v.witness = word_str + " " + class_name + " = " + combination_str(a, *image);
        v.trail.push_back("the image is not the reduction of any integral class");
        v.trail.push_back(class_name + " is not represented by an immersed submanifold of codimension " +
                          std::to_string(k));
    }
    v.details["outcome"] = to_string(v.outcome);
    return v;
}

Verdict check_prop_kq(const AlgebraPresentation& a, const std::string& class_name) {
    const auto [dx, ix] = a.find(class_name);
    (void)ix;
    if (a.dim != 24 || dx != 11)
        throw Error("the positive immersion criterion covers degree-11 classes in 24-manifolds; got "
                    "degree " +
                    std::to_string(dx) + " in dim " + std::to_string(a.dim));

    static const char* const kFacts[] = {"betaP1_3_x_vanishes", "betaP2_3_x_vanishes",
                                         "betaP1_5_x_vanishes"};
    Verdict v;
    for (const char* f : kFacts) {
        auto it = a.facts.find(f);
        if (it == a.facts.end())
            return inconclusive(std::string("fact ") + f + " is not recorded");
        if (!it->second)
            return inconclusive(std::string("fact ") + f +
                                " = false: an odd-primary obstruction does not vanish");
        v.trail.push_back(std::string("fact ") + f + " = true");
    }
    v.outcome = Outcome::Immersed;
    v.trail.push_back("all recorded odd-primary obstructions vanish: " + class_name +
                      " is represented by an immersed submanifold of codimension 11");
    v.details["outcome"] = to_string(v.outcome);
    return v;
}

WhitneyResult whitney_m2_mod2(const AlgebraPresentation& a, const Combination& fx,
                              const Combination& wknu) {
    if (a.prime != 2)
        throw Error("the double-point class is computed mod 2; presentation has prime " +
                    std::to_string(a.prime));
    if (fx.degree != wknu.degree)
        throw Error("f^* x has degree " + std::to_string(fx.degree) + " but w_k(nu) has degree " +
                    std::to_string(wknu.degree) + "; the summands must share a degree");

    WhitneyResult r;
    r.m2 = fx;
    acc_add(r.m2, wknu, 2);
    r.trail.push_back("m2 = f^* x + w_k(nu) = " + combination_str(a, r.m2) + " in degree " +
                      std::to_string(r.m2.degree));
    if (r.m2.degree % 2 == 1)
        r.trail.push_back(
            "odd corank: the normal Euler class is 2-torsion, so m2 carries the full "
            "double-point obstruction");
    if (r.m2.is_zero())
        r.trail.push_back("m2 = 0: no conclusion");
    else
        r.trail.push_back("m2 != 0: the immersion is not an embedding");
    return r;
}

}  // namespace sqkit::obstructions
