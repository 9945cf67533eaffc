#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "sqkit/error.h"
#include "sqkit/obstructions.h"
#include "sqkit/presentation.h"
#include "sqkit/steenrod.h"

using namespace sqkit::obstructions;
using namespace sqkit::presentation;
using sqkit::steenrod::parse_word;
using sqkit::Error;

namespace {

AlgebraPresentation fixture(const std::string& name) {
    std::ifstream in(std::string(SQKIT_FIXTURES_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "cannot open fixture ", name);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_presentation(os.str());
}

bool trail_mentions(const Verdict& v, const std::string& needle) {
    for (const auto& line : v.trail)
        if (line.find(needle) != std::string::npos)
            return true;
    return false;
}

/* The N24 skeleton without its op/fact lines, for targeted variations. */
const char* kBare24 =
    "space M\nprime 2\ndim 24\n"
    "gen 11 x\ngen 13 y\ngen 24 top\n"
    "cup x y = top\n";

}  // namespace

TEST_CASE("verdict plumbing") {
    CHECK(to_string(Outcome::NotEmbedded) == "NotEmbedded");
    CHECK(to_string(Outcome::NotImmersed) == "NotImmersed");
    CHECK(to_string(Outcome::Immersed) == "Immersed");
    CHECK(to_string(Outcome::Inconclusive) == "Inconclusive");
    Verdict v;
    CHECK(v.exit_code() == 1);
    v.outcome = Outcome::NotEmbedded;
    CHECK(v.exit_code() == 0);
}

TEST_CASE("codimension-11 embedding criterion") {
    SUBCASE("the recorded 24-manifold has an unembeddable class") {
        const auto v = check_theorem_c(fixture("N24.pres"), "x");
        CHECK(v.outcome == Outcome::NotEmbedded);
        CHECK(v.exit_code() == 0);
        CHECK(v.details.at("rhs") == "top");
        CHECK(v.details.at("search_bits") == "0");
        CHECK(v.details.at("tuples") == "1");
        CHECK(trail_mentions(v, "P2_3_x_nonzero = true"));
        CHECK(trail_mentions(v, "none matches"));
    }

    SUBCASE("preconditions throw") {
        CHECK_THROWS_AS(check_theorem_c(fixture("Sp2_mod3.pres"), "x"), Error);  // prime 3
        CHECK_THROWS_AS(check_theorem_c(fixture("N24.pres"), "y"), Error);       // degree 13
        CHECK_THROWS_AS(check_theorem_c(fixture("N24.pres"), "nope"), Error);
        const auto small = parse_presentation("dim 12\ngen 11 x\n");
        CHECK_THROWS_AS(check_theorem_c(small, "x"), Error);
    }

    SUBCASE("missing operator rows degrade to inconclusive") {
        const auto no_sq2 = parse_presentation(std::string(kBare24) + "op Sq11 y = 0\n");
        const auto v1 = check_theorem_c(no_sq2, "x");
        CHECK(v1.outcome == Outcome::Inconclusive);
        CHECK(v1.exit_code() == 1);
        CHECK(trail_mentions(v1, "Sq2 on degree 11"));

        const auto no_sq11 = parse_presentation(std::string(kBare24) + "op Sq2 x = y\n");
        const auto v2 = check_theorem_c(no_sq11, "x");
        CHECK(v2.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(v2, "Sq11 on degree 13"));
    }

    SUBCASE("a vanishing target is matched by the zero tuple") {
        // no cup line: x Sq2 x reads as zero, and Sq11 y = 0
        const auto a = parse_presentation(
            "prime 2\ndim 24\ngen 11 x\ngen 13 y\ngen 24 top\n"
            "op Sq2 x = y\nop Sq11 y = 0\n");
        const auto v = check_theorem_c(a, "x");
        CHECK(v.outcome == Outcome::Inconclusive);
        CHECK(v.details.at("rhs") == "0");
        CHECK(v.details.at("alpha") == "0");
        CHECK(v.details.at("beta") == "0");
        CHECK(v.details.at("gamma") == "0");
        CHECK(v.details.at("delta") == "0");
        CHECK(trail_mentions(v, "found after 1 candidate(s)"));
    }

    SUBCASE("a correction class flips the verdict to inconclusive") {
        const auto a = parse_presentation(std::string(kBare24) +
                                          "gen 20 al\n"
                                          "op Sq2 x = y\nop Sq11 y = 0\n"
                                          "op Sq4 al = top\nop Sq1 al = 0\n");
        const auto v = check_theorem_c(a, "x");
        CHECK(v.outcome == Outcome::Inconclusive);
        CHECK(v.details.at("search_bits") == "1");
        CHECK(v.details.at("alpha") == "al");
        CHECK(v.details.at("beta") == "0");
        CHECK(v.witness == "alpha = al, beta = 0, gamma = 0, delta = 0");

        // with Sq4 al = 0 instead, the tuple no longer helps
        const auto b = parse_presentation(std::string(kBare24) +
                                          "gen 20 al\n"
                                          "op Sq2 x = y\nop Sq11 y = 0\n"
                                          "op Sq4 al = 0\nop Sq1 al = 0\n");
        const auto w = check_theorem_c(b, "x");
        CHECK(w.outcome == Outcome::NotEmbedded);
        CHECK(w.details.at("tuples") == "2");
    }

    SUBCASE("beta corrections respect the recorded integral image") {
        // one degree-19 class whose Sq5 hits the target, but rho says it does
        // not lift, so the beta space is zero and the obstruction stands
        const std::string base = std::string(kBare24) +
                                 "gen 19 b\n"
                                 "op Sq2 x = y\nop Sq11 y = 0\n";
        const auto none = parse_presentation(base + "op Sq5 b = top\nrho_image 19 = none\n");
        CHECK(check_theorem_c(none, "x").outcome == Outcome::NotEmbedded);

        const auto span = parse_presentation(base + "op Sq5 b = top\nrho_image 19 = b\n");
        const auto v = check_theorem_c(span, "x");
        CHECK(v.outcome == Outcome::Inconclusive);
        CHECK(v.details.at("beta") == "b");

        const auto unknown = parse_presentation(base + "op Sq5 b = top\n");
        const auto w = check_theorem_c(unknown, "x");
        CHECK(w.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(w, "rho image in degree 19 is not recorded"));
    }

    SUBCASE("oversized searches are refused before any operator work") {
        std::string text = "prime 2\ndim 24\ngen 11 x\ngen 13 y\ngen 24 top\n"
                           "cup x y = top\nop Sq2 x = y\nop Sq11 y = 0\n";
        for (int i = 0; i < 5; ++i)
            text += "gen 20 a" + std::to_string(i) + "\n";
        // deliberately no op rows for the a_i: the refusal must come first
        TheoremCOptions opt;
        opt.cap = 16;  // 2^5 = 32 > 16
        CHECK_THROWS_WITH_AS(check_theorem_c(parse_presentation(text), "x", opt),
                             doctest::Contains("raise the cap"), Error);
        opt.cap = 32;  // exactly at the cap: runs, then hits the missing rows
        const auto v = check_theorem_c(parse_presentation(text), "x", opt);
        CHECK(v.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(v, "not determined"));
    }
}

TEST_CASE("codimension-3 embedding criterion at the prime 3") {
    SUBCASE("Sp(2) carries the obstruction") {
        const auto v = check_bhk_codim3(fixture("Sp2_mod3.pres"), "x");
        CHECK(v.outcome == Outcome::NotEmbedded);
        CHECK(v.exit_code() == 0);
        CHECK(v.details.at("pairing") == "1");
        CHECK(v.details.at("p1x") == "p1x");
        CHECK(trail_mentions(v, "no correction terms"));
    }

    SUBCASE("preconditions throw") {
        CHECK_THROWS_AS(check_bhk_codim3(fixture("N24.pres"), "x"), Error);  // prime 2
        CHECK_THROWS_AS(check_bhk_codim3(fixture("Sp2_mod3.pres"), "p1x"), Error);
        const auto wrong_dim =
            parse_presentation("prime 3\ndim 8\ngen 3 x\n");
        CHECK_THROWS_AS(check_bhk_codim3(wrong_dim, "x"), Error);
    }

    SUBCASE("missing or vanishing data is inconclusive") {
        const auto no_op = parse_presentation(
            "prime 3\ndim 10\ngen 3 x\ngen 7 p1x\ngen 10 top\ncup x p1x = top\nfundamental top\n");
        CHECK(check_bhk_codim3(no_op, "x").outcome == Outcome::Inconclusive);

        const auto zero_op = parse_presentation(
            "prime 3\ndim 10\ngen 3 x\ngen 7 p1x\ngen 10 top\n"
            "cup x p1x = top\nop P1 x = 0\nfundamental top\n");
        const auto v = check_bhk_codim3(zero_op, "x");
        CHECK(v.outcome == Outcome::Inconclusive);
        CHECK(v.details.at("pairing") == "0");

        const auto no_fund = parse_presentation(
            "prime 3\ndim 10\ngen 3 x\ngen 7 p1x\ngen 10 top\n"
            "cup x p1x = top\nop P1 x = p1x\n");
        CHECK(check_bhk_codim3(no_fund, "x").outcome == Outcome::Inconclusive);

        // a doubled coefficient still pairs nontrivially: 2 != 0 mod 3
        const auto doubled = parse_presentation(
            "prime 3\ndim 10\ngen 3 x\ngen 7 p1x\ngen 10 top\n"
            "cup x p1x = top\nop P1 x = 2*p1x\nfundamental top\n");
        const auto w = check_bhk_codim3(doubled, "x");
        CHECK(w.outcome == Outcome::NotEmbedded);
        CHECK(w.details.at("pairing") == "2");
    }
}

TEST_CASE("skeleton immersion obstruction") {
    SUBCASE("the thickening fixture is obstructed") {
        const auto v = check_gsz_immersion(fixture("K23_thickening.pres"), "x", parse_word("Sq6.Sq2"));
        CHECK(v.outcome == Outcome::NotImmersed);
        CHECK(v.exit_code() == 0);
        CHECK(v.details.at("image") == "ysq");
        CHECK(trail_mentions(v, "codimension 4"));
    }

    SUBCASE("preconditions throw") {
        const auto k23 = fixture("K23_thickening.pres");
        CHECK_THROWS_AS(check_gsz_immersion(k23, "x", parse_word("Sq2.Sq6")), Error);   // inadmissible
        CHECK_THROWS_AS(check_gsz_immersion(k23, "x", parse_word("Sq4.Sq2")), Error);   // excess 2
        CHECK_THROWS_AS(check_gsz_immersion(k23, "x", parse_word("1")), Error);         // excess 0
        CHECK_THROWS_AS(check_gsz_immersion(fixture("Sp2_mod3.pres"), "x", parse_word("Sq3")), Error);
        const auto deg1 = parse_presentation("dim 4\ngen 1 u\n");
        CHECK_THROWS_AS(check_gsz_immersion(deg1, "u", parse_word("Sq1")), Error);      // k <= 1
    }

    SUBCASE("vanishing images and lifting images give no obstruction") {
        const auto zero_img = parse_presentation(
            "dim 27\ngen 4 x\ngen 6 y\nop Sq2 x = 0\n");
        const auto v = check_gsz_immersion(zero_img, "x", parse_word("Sq6.Sq2"));
        CHECK(v.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(v, "lifts trivially"));

        const auto lifts = parse_presentation(
            "dim 27\ngen 4 x\ngen 6 y\ngen 12 ysq\n"
            "op Sq2 x = y\nop Sq6 y = ysq\nrho_image 12 = all\n");
        const auto w = check_gsz_immersion(lifts, "x", parse_word("Sq6.Sq2"));
        CHECK(w.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(w, "reduction of an integral class"));

        const auto unknown = parse_presentation(
            "dim 27\ngen 4 x\ngen 6 y\ngen 12 ysq\n"
            "op Sq2 x = y\nop Sq6 y = ysq\n");
        const auto u = check_gsz_immersion(unknown, "x", parse_word("Sq6.Sq2"));
        CHECK(u.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(u, "not recorded"));
    }
}

TEST_CASE("positive immersion criterion") {
    SUBCASE("all three facts true yields a certificate") {
        const auto v = check_prop_kq(fixture("N24.pres"), "x");
        CHECK(v.outcome == Outcome::Immersed);
        CHECK(v.exit_code() == 0);
        CHECK(trail_mentions(v, "betaP1_5_x_vanishes = true"));
    }

    SUBCASE("a missing or false fact is inconclusive") {
        const std::string base = std::string(kBare24) + "op Sq2 x = y\n";
        const auto missing = parse_presentation(
            base + "fact betaP1_3_x_vanishes = true\nfact betaP2_3_x_vanishes = true\n");
        const auto v = check_prop_kq(missing, "x");
        CHECK(v.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(v, "betaP1_5_x_vanishes is not recorded"));

        const auto off = parse_presentation(base +
                                            "fact betaP1_3_x_vanishes = true\n"
                                            "fact betaP2_3_x_vanishes = false\n"
                                            "fact betaP1_5_x_vanishes = true\n");
        const auto w = check_prop_kq(off, "x");
        CHECK(w.outcome == Outcome::Inconclusive);
        CHECK(trail_mentions(w, "does not vanish"));
    }

    SUBCASE("preconditions throw") {
        CHECK_THROWS_AS(check_prop_kq(fixture("N24.pres"), "y"), Error);
        CHECK_THROWS_AS(check_prop_kq(fixture("K23_thickening.pres"), "x"), Error);
    }
}

TEST_CASE("mod 2 double-point class") {
    const auto a = fixture("K23_thickening.pres");
    const auto y = a.basis_class(6, 0);
    const auto zero6 = a.zero_class(6);

    const auto same = whitney_m2_mod2(a, y, y);
    CHECK(same.m2.is_zero());
    CHECK_FALSE(same.trail.empty());

    const auto diff = whitney_m2_mod2(a, y, zero6);
    CHECK(diff.m2 == y);

    // odd-degree classes pick up the torsion note
    const auto i3 = a.basis_class(3, 0);
    const auto odd = whitney_m2_mod2(a, i3, a.zero_class(3));
    CHECK(trail_mentions(Verdict{Outcome::Inconclusive, "", odd.trail, {}}, "2-torsion"));
    const auto even = whitney_m2_mod2(a, y, zero6);
    CHECK_FALSE(trail_mentions(Verdict{Outcome::Inconclusive, "", even.trail, {}}, "2-torsion"));

    CHECK_THROWS_AS(whitney_m2_mod2(a, i3, y), Error);  // degree mismatch
    CHECK_THROWS_AS(whitney_m2_mod2(fixture("Sp2_mod3.pres"), i3, i3), Error);  // prime 3
}
