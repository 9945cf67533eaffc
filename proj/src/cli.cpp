#include "sqkit/cli.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqkit/char_ring.h"
#include "sqkit/error.h"
#include "sqkit/obstructions.h"
#include "sqkit/presentation.h"
#include "sqkit/steenrod.h"
#include "sqkit/thom.h"

namespace sqkit::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

presentation::AlgebraPresentation load_presentation(const std::string& path) {
    try {
        return presentation::parse_presentation(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

/* Infer the degree of a class expression from its first named class; "0" alone
 * carries no degree. */
std::optional<int> infer_degree(const presentation::AlgebraPresentation& a,
                                const std::string& text) {
    size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            return a.find(text.substr(i, j - i)).first;
        }
        ++i;
    }
    return std::nullopt;
}

void print_verdict(const obstructions::Verdict& v, bool porcelain, std::ostream& out) {
    if (porcelain) {
        for (const auto& [k, val] : v.details)
            out << k << "=" << val << "\n";
        return;
    }
    for (const auto& line : v.trail)
        out << line << "\n";
    out << "outcome: " << obstructions::to_string(v.outcome) << "\n";
    if (!v.witness.empty())
        out << "witness: " << v.witness << "\n";
}

struct TheoremCArgs {
    bool quiet = false;
    bool omit_sq9_delta = false;
};

void print_identity_report(const thom::IdentityReport& rep, bool quiet, bool porcelain,
                           std::ostream& out) {
    if (quiet) {
        out << (rep.equal ? "equal=true" : "equal=false") << "\n";
        return;
    }
    if (porcelain) {
        for (const auto& e : rep.classes)
            out << "class." << e.key << "=" << char_ring::to_string(e.value) << "\n";
        for (const auto& e : rep.lhs_terms)
            out << "lhs." << e.key << "=" << thom::factored_str(e.value, 11) << "\n";
        for (const auto& e : rep.rhs_terms)
            out << "rhs." << e.key << "=" << thom::factored_str(e.value, 11) << "\n";
        out << "lhs=" << thom::factored_str(rep.lhs, 11) << "\n";
        out << "rhs=" << thom::factored_str(rep.rhs, 11) << "\n";
        out << "difference=" << thom::factored_str(rep.difference, 11) << "\n";
        out << (rep.equal ? "equal=true" : "equal=false") << "\n";
        return;
    }
    for (const auto& e : rep.classes) {
        out << "class " << e.label << " = " << char_ring::to_string(e.value);
        if (!e.note.empty())
            out << "   (" << e.note << ")";
        out << "\n";
    }
    if (rep.sq9_delta_omitted)
        out << "note: the Sq9 delta term is omitted on request\n";
    for (const auto& e : rep.lhs_terms)
        out << "lhs " << e.label << " = " << thom::factored_str(e.value, 11) << "\n";
    for (const auto& e : rep.rhs_terms)
        out << "rhs " << e.label << " = " << thom::factored_str(e.value, 11) << "\n";
    out << "lhs total = " << thom::factored_str(rep.lhs, 11) << "\n";
    out << "rhs total = " << thom::factored_str(rep.rhs, 11) << "\n";
    out << "difference = " << thom::factored_str(rep.difference, 11) << "\n";
    out << (rep.equal ? "equal=true" : "equal=false") << "\n";
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steenrod squares on Stiefel-Whitney class rings, Thom-space identities, and "
                 "embedding / immersion obstruction checks"};
    app.name("sqkit");
    app.fallthrough();
    app.require_subcommand(1);

    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "stable key=value output");

    auto* adem = app.add_subcommand("adem", "rewrite a Steenrod element in admissible form");
    std::string adem_text;
    adem->add_option("element", adem_text, "e.g. 'Sq2.Sq2' or 'Sq1.Sq10 + Sq4.Sq4'")->required();

    auto* sq = app.add_subcommand("sq", "apply a Steenrod element to a Stiefel-Whitney polynomial");
    std::string sq_elem, sq_poly;
    int sq_k = 0, sq_dmax = -1;
    bool sq_oriented = false;
    sq->add_option("element", sq_elem, "Steenrod element, e.g. 'Sq2'")->required();
    sq->add_option("poly", sq_poly, "polynomial in w1..wk, e.g. 'w11*w6*w3'")->required();
    sq->add_option("--k", sq_k, "bundle rank k")->required();
    sq->add_flag("--oriented", sq_oriented, "oriented ring: w1 = 0");
    sq->add_option("--dmax", sq_dmax, "tracked degree cap (default 2k+2)");

    auto* serre = app.add_subcommand("serre", "admissible generators for K(Z/2, k) through a degree");
    int serre_k = 0, serre_dmax = 0;
    serre->add_option("--k", serre_k, "base degree k >= 2")->required();
    serre->add_option("--dmax", serre_dmax, "largest total degree")->required();

    auto* gsz = app.add_subcommand("gsz-candidates",
                                   "admissible words whose squares obstruct codimension-k immersions");
    int gsz_k = 0, gsz_dmax = 0;
    gsz->add_option("--k", gsz_k, "codimension k > 1")->required();
    gsz->add_option("--dmax", gsz_dmax, "largest total degree")->required();

    auto* verify = app.add_subcommand("verify", "recheck stored identities from first principles");
    verify->require_subcommand(1);
    auto* vtc = verify->add_subcommand("theorem-c", "the codimension-11 Thom-space identity");
    TheoremCArgs tc;
    vtc->add_flag("--quiet", tc.quiet, "print only equal=true|false");
    vtc->add_flag("--omit-sq9-delta", tc.omit_sq9_delta, "drop the Sq9 delta term to show the defect");

    auto* mso3 = app.add_subcommand("mso3-dims", "mod 3 degreewise dimensions of the rank-3 model");
    int mso3_dmax = 0;
    mso3->add_option("--dmax", mso3_dmax, "largest degree (at least 3)")->required();

    auto* validate_cmd = app.add_subcommand("validate", "check a presentation file for inconsistencies");
    std::string validate_input;
    validate_cmd->add_option("--input", validate_input, "presentation file")->required();

    auto* check = app.add_subcommand("check", "run an obstruction criterion on a presentation");
    check->require_subcommand(1);
    std::string chk_input, chk_class, chk_seq;
    long long chk_cap = 1LL << 20;
    auto* embed_c = check->add_subcommand("embed-c", "codimension-11 embedding criterion (prime 2)");
    auto* embed_bhk = check->add_subcommand("embed-bhk3", "codimension-3 embedding criterion (prime 3)");
    auto* imm_gsz = check->add_subcommand("immerse-gsz", "codimension-k immersion obstruction");
    auto* imm_kq = check->add_subcommand("immerse-kq", "positive immersion criterion (dim 24)");
    for (auto* c : {embed_c, embed_bhk, imm_gsz, imm_kq}) {
        c->add_option("--input", chk_input, "presentation file")->required();
        c->add_option("--class", chk_class, "name of the class to test")->required();
    }
    imm_gsz->add_option("--seq", chk_seq, "admissible word, e.g. Sq6.Sq2")->required();
    embed_c->add_option("--cap", chk_cap, "refuse correction searches above this many tuples");

    auto* whitney = app.add_subcommand("whitney", "mod 2 double-point class of an immersion");
    std::string wh_input, wh_fx, wh_wknu;
    whitney->add_option("--input", wh_input, "presentation file")->required();
    whitney->add_option("--fx", wh_fx, "pullback f^* x as a class expression")->required();
    whitney->add_option("--wknu", wh_wknu, "top normal Stiefel-Whitney class w_k(nu)")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(adem)) {
            out << steenrod::to_string(steenrod::adem_normalize(steenrod::parse_element(adem_text)))
                << "\n";
            return 0;
        }
        if (app.got_subcommand(sq)) {
            const char_ring::RingContext ctx(sq_k, sq_oriented, sq_dmax);
            const auto result = char_ring::apply_steenrod(steenrod::parse_element(sq_elem),
                                                          char_ring::parse_poly(sq_poly, ctx));
            out << char_ring::to_string(result) << "\n";
            return 0;
        }
        if (app.got_subcommand(serre)) {
            for (const auto& w : steenrod::serre_generators(serre_k, serre_dmax))
                out << steenrod::to_string(w) << "\n";
            return 0;
        }
        if (app.got_subcommand(gsz)) {
            const auto words = steenrod::gsz_candidates(gsz_k, gsz_dmax);
            if (porcelain)
                out << "count=" << words.size() << "\n";
            for (const auto& w : words)
                out << steenrod::to_string(w) << "\n";
            return 0;
        }
        if (verify->got_subcommand(vtc)) {
            const auto rep = thom::verify_codim11_identity(tc.omit_sq9_delta);
            print_identity_report(rep, tc.quiet, porcelain, out);
            return rep.equal ? 0 : 1;
        }
        if (app.got_subcommand(mso3)) {
            for (const auto& [d, dim] : thom::mso3_mod3_degree_dims(mso3_dmax)) {
                if (porcelain)
                    out << "dim" << d << "=" << dim << "\n";
                else
                    out << "degree " << d << ": " << dim << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(validate_cmd)) {
            const auto a = load_presentation(validate_input);
            const auto rep = presentation::validate(a);
            if (porcelain) {
                out << "violations=" << rep.violations.size() << "\n";
                for (const auto& f : rep.violations)
                    out << "violation." << f.check << "=" << f.witness << "\n";
            } else {
                for (const auto& c : rep.confirmations)
                    out << "ok: " << c << "\n";
                for (const auto& f : rep.violations)
                    out << "violation [" << f.check << "]: " << f.witness << "\n";
                out << rep.violations.size() << " violation(s), " << rep.confirmations.size()
                    << " confirmation(s)\n";
            }
            return rep.valid() ? 0 : 1;
        }
        if (app.got_subcommand(check)) {
            const auto a = load_presentation(chk_input);
            obstructions::Verdict v;
            if (check->got_subcommand(embed_c)) {
                obstructions::TheoremCOptions opt;
                opt.cap = chk_cap;
                v = obstructions::check_theorem_c(a, chk_class, opt);
            } else if (check->got_subcommand(embed_bhk)) {
                v = obstructions::check_bhk_codim3(a, chk_class);
            } else if (check->got_subcommand(imm_gsz)) {
                v = obstructions::check_gsz_immersion(a, chk_class, steenrod::parse_word(chk_seq));
            } else {
                v = obstructions::check_prop_kq(a, chk_class);
            }
            print_verdict(v, porcelain, out);
            return v.exit_code();
        }
        if (app.got_subcommand(whitney)) {
            const auto a = load_presentation(wh_input);
            auto deg = infer_degree(a, wh_fx);
            if (!deg)
                deg = infer_degree(a, wh_wknu);
            if (!deg)
                throw Error("cannot infer a degree from '" + wh_fx + "' and '" + wh_wknu +
                            "'; name at least one class");
            const auto fx = presentation::parse_combination(a, wh_fx, *deg);
            const auto wknu = presentation::parse_combination(a, wh_wknu, *deg);
            const auto r = obstructions::whitney_m2_mod2(a, fx, wknu);
            if (porcelain) {
                out << "m2=" << presentation::combination_str(a, r.m2) << "\n";
                out << "nonzero=" << (r.m2.is_zero() ? "false" : "true") << "\n";
            } else {
                for (const auto& line : r.trail)
                    out << line << "\n";
            }
            return r.m2.is_zero() ? 1 : 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace sqkit::cli
