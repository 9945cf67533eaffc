#include "sqkit/presentation.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sqkit/error.h"
#include "sqkit/fp_linalg.h"
#include "sqkit/steenrod.h"

namespace sqkit::presentation {

bool Combination::is_zero() const {
    for (int c : coeffs)
        if (c)
            return false;
    return true;
}

int AlgebraPresentation::dim_at(int degree) const {
    if (degree < 0 || degree > dim)
        return 0;
    return static_cast<int>(basis[degree].size());
}

std::pair<int, int> AlgebraPresentation::find(const std::string& name) const {
    auto it = gen_lookup.find(name);
    if (it == gen_lookup.end())
        throw Error("unknown class '" + name + "'");
    return it->second;
}

Combination AlgebraPresentation::zero_class(int degree) const {
    return {degree, std::vector<int>(dim_at(degree), 0)};
}

Combination AlgebraPresentation::basis_class(int degree, int index) const {
    Combination c = zero_class(degree);
    c.coeffs.at(index) = 1;
    return c;
}

namespace {

struct OpLabel {
    char kind;  // 'S' or 'P'
    int index;
    int shift;
};

OpLabel parse_op_label(const std::string& label, int prime) {
    size_t digits = 0;
    char kind = 0;
    if (label.rfind("Sq", 0) == 0 && label.size() > 2) {
        kind = 'S';
        digits = 2;
    } else if (label.size() > 1 && label[0] == 'P') {
        kind = 'P';
        digits = 1;
    } else {
        throw Error("malformed operation label '" + label + "' (expected SqN or PN)");
    }
    size_t used = 0;
    int idx;
    try {
        idx = std::stoi(label.substr(digits), &used);
    } catch (const std::exception&) {
        throw Error("malformed operation label '" + label + "'");
    }
    if (used != label.size() - digits || idx < 0)
        throw Error("malformed operation label '" + label + "'");
    if (kind == 'S' && prime != 2)
        throw Error("label '" + label + "' needs prime 2, presentation has prime " + std::to_string(prime));
    if (kind == 'P' && prime == 2)
        throw Error("label '" + label + "' needs an odd prime");
    return {kind, idx, kind == 'S' ? idx : 2 * idx * (prime - 1)};
}

void add_scaled(Combination& acc, const Combination& v, int scale, int p) {
    for (size_t i = 0; i < acc.coeffs.size(); ++i)
        acc.coeffs[i] = fp::normalize(acc.coeffs[i] + static_cast<long long>(scale) * v.coeffs[i], p);
}

bool is_identifier(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int_token(const Token& tok, int line) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(tok.text, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok.text + "'", line, tok.column);
    }
    if (used != tok.text.size())
        throw ParseError("expected an integer, got '" + tok.text + "'", line, tok.column);
    return v;
}

bool is_prime_number(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace

int op_degree_shift(const std::string& label, int prime) {
    return parse_op_label(label, prime).shift;
}

Combination parse_combination(const AlgebraPresentation& a, const std::string& text, int degree) {
    Combination out = a.zero_class(degree);
    std::string t = text;
    // strip
    size_t b = t.find_first_not_of(" \t");
    if (b == std::string::npos)
        throw ParseError("empty class expression");
    size_t e = t.find_last_not_of(" \t");
    t = t.substr(b, e - b + 1);
    if (t == "0")
        return out;

    size_t pos = 0;
    int sign = 1;
    auto skip_ws = [&] {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
            ++pos;
    };
    skip_ws();
    if (pos < t.size() && t[pos] == '-') {
        sign = -1;
        ++pos;
    }
    while (true) {
        skip_ws();
        long long coeff = 1;
        if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            size_t start = pos;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                ++pos;
            coeff = std::stoll(t.substr(start, pos - start));
            skip_ws();
            if (pos < t.size() && t[pos] == '*')
                ++pos;
            skip_ws();
        }
        size_t start = pos;
        while (pos < t.size() &&
               (std::isalnum(static_cast<unsigned char>(t[pos])) || t[pos] == '_'))
            ++pos;
        std::string name = t.substr(start, pos - start);
        if (!is_identifier(name))
            throw ParseError("expected a class name in '" + text + "'", 0, static_cast<int>(start) + 1);
        auto it = a.gen_lookup.find(name);
        if (it == a.gen_lookup.end())
            throw ParseError("unknown class '" + name + "'", 0, static_cast<int>(start) + 1);
        auto [d, idx] = it->second;
        if (d != degree)
            throw ParseError("class '" + name + "' has degree " + std::to_string(d) + ", expected " +
                             std::to_string(degree));
        out.coeffs[idx] = fp::normalize(out.coeffs[idx] + sign * coeff, a.prime);
        skip_ws();
        if (pos >= t.size())
            break;
        if (t[pos] == '+')
            sign = 1;
        else if (t[pos] == '-')
            sign = -1;
        else
            throw ParseError("unexpected '" + t.substr(pos, 1) + "' in class expression", 0,
                             static_cast<int>(pos) + 1);
        ++pos;
    }
    return out;
}

std::string combination_str(const AlgebraPresentation& a, const Combination& c) {
    if (c.degree < 0 || c.degree > a.dim || c.is_zero())
        return "0";
    std::string s;
    for (size_t i = 0; i < c.coeffs.size(); ++i) {
        if (!c.coeffs[i])
            continue;
        if (!s.empty())
            s += " + ";
        if (c.coeffs[i] != 1)
            s += std::to_string(c.coeffs[i]) + "*";
        s += a.basis[c.degree][i];
    }
    return s;
}

AlgebraPresentation parse_presentation(const std::string& text) {
    AlgebraPresentation a;
    bool seen_dim = false;
    bool structure_frozen = false;  // set once the first gen or data line appears

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.resize(hash);
        std::vector<Token> toks = tokenize_line(raw);
        if (toks.empty())
            continue;
        const std::string& head = toks[0].text;

        auto want = [&](size_t n, const char* usage) {
            if (toks.size() != n)
                throw ParseError(std::string("expected '") + usage + "'", lineno, toks[0].column);
        };
        auto split_eq = [&](size_t eq_pos, const char* usage) -> std::string {
            if (toks.size() <= eq_pos || toks[eq_pos].text != "=")
                throw ParseError(std::string("expected '") + usage + "'", lineno, toks[0].column);
            size_t from = raw.find('=');
            return raw.substr(from + 1);
        };
        auto need_dim = [&] {
            if (!seen_dim)
                throw ParseError("'" + head + "' before 'dim'", lineno, toks[0].column);
        };

        if (head == "space") {
            want(2, "space <name>");
            a.space_name = toks[1].text;
        } else if (head == "prime") {
            want(2, "prime <p>");
            if (structure_frozen || seen_dim)
                throw ParseError("'prime' must precede 'dim' and all generator and data lines",
                                 lineno, toks[0].column);
            int p = parse_int_token(toks[1], lineno);
            if (!is_prime_number(p))
                throw ParseError(std::to_string(p) + " is not prime", lineno, toks[1].column);
            a.prime = p;
        } else if (head == "dim") {
            want(2, "dim <n>");
            if (structure_frozen)
                throw ParseError("'dim' must precede generator and data lines", lineno, toks[0].column);
            int n = parse_int_token(toks[1], lineno);
            if (n < 0)
                throw ParseError("dimension must be nonnegative", lineno, toks[1].column);
            a.dim = n;
            seen_dim = true;
            a.basis.assign(n + 1, {});
            a.basis[0].push_back("one");
            a.gen_lookup["one"] = {0, 0};
        } else if (head == "gen") {
            want(3, "gen <degree> <name>");
            need_dim();
            structure_frozen = true;
            int d = parse_int_token(toks[1], lineno);
            if (d == 0)
                throw ParseError("degree 0 is reserved for the unit 'one'", lineno, toks[1].column);
            if (d < 0 || d > a.dim)
                throw ParseError("degree out of range [0, " + std::to_string(a.dim) + "]", lineno,
                                 toks[1].column);
            const std::string& name = toks[2].text;
            if (!is_identifier(name))
                throw ParseError("bad class name '" + name + "'", lineno, toks[2].column);
            if (a.gen_lookup.count(name))
                throw ParseError("duplicate class name '" + name + "'", lineno, toks[2].column);
            a.gen_lookup[name] = {d, static_cast<int>(a.basis[d].size())};
            a.basis[d].push_back(name);
        } else if (head == "cup") {
            need_dim();
            structure_frozen = true;
            std::string rhs = split_eq(3, "cup <a> <b> = <class>");
            auto [d1, i1] = [&] {
                try {
                    return a.find(toks[1].text);
                } catch (const Error& err) {
                    throw ParseError(err.what(), lineno, toks[1].column);
                }
            }();
            auto [d2, i2] = [&] {
                try {
                    return a.find(toks[2].text);
                } catch (const Error& err) {
                    throw ParseError(err.what(), lineno, toks[2].column);
                }
            }();
            Combination v;
            try {
                v = parse_combination(a, rhs, d1 + d2);
            } catch (const ParseError& err) {
                throw ParseError(err.what(), lineno, 0);
            }
            bool swap = std::pair{d1, i1} > std::pair{d2, i2};
            if (swap) {
                std::swap(d1, d2);
                std::swap(i1, i2);
                if (a.prime != 2 && (d1 % 2) && (d2 % 2)) {
                    Combination neg = a.zero_class(v.degree);
                    add_scaled(neg, v, a.prime - 1, a.prime);
                    v = neg;
                }
            }
            std::array<int, 4> key{d1, i1, d2, i2};
            if (a.cup_entries.count(key))
                throw ParseError("duplicate cup entry", lineno, toks[0].column);
            a.cup_entries[key] = std::move(v);
        } else if (head == "op") {
            need_dim();
            structure_frozen = true;
            std::string rhs = split_eq(3, "op <label> <name> = <class>");
            OpLabel label = [&] {
                try {
                    return parse_op_label(toks[1].text, a.prime);
                } catch (const Error& err) {
                    throw ParseError(err.what(), lineno, toks[1].column);
                }
            }();
            auto [d, idx] = [&] {
                try {
                    return a.find(toks[2].text);
                } catch (const Error& err) {
                    throw ParseError(err.what(), lineno, toks[2].column);
                }
            }();
            Combination v;
            try {
                v = parse_combination(a, rhs, d + label.shift);
            } catch (const ParseError& err) {
                throw ParseError(err.what(), lineno, 0);
            }
            auto key = std::pair{d, idx};
            if (a.op_entries[toks[1].text].count(key))
                throw ParseError("duplicate op entry", lineno, toks[0].column);
            a.op_entries[toks[1].text][key] = std::move(v);
        } else if (head == "rho_image") {
            need_dim();
            structure_frozen = true;
            if (toks.size() < 4 || toks[2].text != "=")
                throw ParseError("expected 'rho_image <degree> = none|all|<names>'", lineno,
                                 toks[0].column);
            int d = parse_int_token(toks[1], lineno);
            if (d < 0 || d > a.dim)
                throw ParseError("degree out of range [0, " + std::to_string(a.dim) + "]", lineno,
                                 toks[1].column);
            if (a.rho_images.count(d))
                throw ParseError("duplicate rho_image entry for degree " + std::to_string(d), lineno,
                                 toks[0].column);
            RhoImage img;
            if (toks.size() == 4 && toks[3].text == "none") {
                img.kind = RhoImage::Kind::None;
            } else if (toks.size() == 4 && toks[3].text == "all") {
                img.kind = RhoImage::Kind::All;
            } else {
                img.kind = RhoImage::Kind::Span;
                for (size_t j = 3; j < toks.size(); ++j) {
                    auto [gd, gi] = [&] {
                        try {
                            return a.find(toks[j].text);
                        } catch (const Error& err) {
                            throw ParseError(err.what(), lineno, toks[j].column);
                        }
                    }();
                    if (gd != d)
                        throw ParseError("class '" + toks[j].text + "' has degree " +
                                             std::to_string(gd) + ", expected " + std::to_string(d),
                                         lineno, toks[j].column);
                    std::vector<int> row(a.dim_at(d), 0);
                    row[gi] = 1;
                    img.span.push_back(std::move(row));
                }
            }
            a.rho_images[d] = std::move(img);
        } else if (head == "fact") {
            need_dim();
            structure_frozen = true;
            want(4, "fact <id> = true|false");
            if (toks[2].text != "=")
                throw ParseError("expected 'fact <id> = true|false'", lineno, toks[0].column);
            if (!is_identifier(toks[1].text))
                throw ParseError("bad fact identifier '" + toks[1].text + "'", lineno, toks[1].column);
            if (a.facts.count(toks[1].text))
                throw ParseError("duplicate fact '" + toks[1].text + "'", lineno, toks[1].column);
            if (toks[3].text == "true")
                a.facts[toks[1].text] = true;
            else if (toks[3].text == "false")
                a.facts[toks[1].text] = false;
            else
                throw ParseError("fact value must be true or false", lineno, toks[3].column);
        } else if (head == "fundamental") {
            need_dim();
            structure_frozen = true;
            want(2, "fundamental <name>");
            auto [d, idx] = [&] {
                try {
                    return a.find(toks[1].text);
                } catch (const Error& err) {
                    throw ParseError(err.what(), lineno, toks[1].column);
                }
            }();
            (void)idx;
            if (d != a.dim)
                throw ParseError("fundamental class must live in degree " + std::to_string(a.dim),
                                 lineno, toks[1].column);
            if (!a.fundamental.empty())
                throw ParseError("duplicate fundamental line", lineno, toks[0].column);
            a.fundamental = toks[1].text;
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno, toks[0].column);
        }
    }
    if (!seen_dim)
        throw ParseError("presentation is missing a 'dim' line", lineno ? lineno : 1, 1);
    return a;
}

std::string print_presentation(const AlgebraPresentation& a) {
    std::ostringstream os;
    if (!a.space_name.empty())
        os << "space " << a.space_name << "\n";
    os << "prime " << a.prime << "\n";
    os << "dim " << a.dim << "\n";
    for (int d = 1; d <= a.dim; ++d)
        for (const auto& name : a.basis[d])
            os << "gen " << d << " " << name << "\n";
    for (const auto& [key, v] : a.cup_entries)
        os << "cup " << a.basis[key[0]][key[1]] << " " << a.basis[key[2]][key[3]] << " = "
           << combination_str(a, v) << "\n";
    for (const auto& [label, rows] : a.op_entries)
        for (const auto& [src, v] : rows)
            os << "op " << label << " " << a.basis[src.first][src.second] << " = "
               << combination_str(a, v) << "\n";
    for (const auto& [d, img] : a.rho_images) {
        os << "rho_image " << d << " =";
        if (img.kind == RhoImage::Kind::None)
            os << " none";
        else if (img.kind == RhoImage::Kind::All)
            os << " all";
        else
            for (const auto& row : img.span) {
                int nonzero = -1;
                for (size_t i = 0; i < row.size(); ++i)
                    if (row[i]) {
                        if (nonzero >= 0 || row[i] != 1)
                            throw Error("rho_image spans only basis subsets in the text format");
                        nonzero = static_cast<int>(i);
                    }
                if (nonzero < 0)
                    throw Error("rho_image spans only basis subsets in the text format");
                os << " " << a.basis[d][nonzero];
            }
        os << "\n";
    }
    for (const auto& [id, v] : a.facts)
        os << "fact " << id << " = " << (v ? "true" : "false") << "\n";
    if (!a.fundamental.empty())
        os << "fundamental " << a.fundamental << "\n";
    return os.str();
}

std::optional<Combination> sq_apply(const AlgebraPresentation& a, const std::string& label,
                                    const Combination& c) {
    const OpLabel op = parse_op_label(label, a.prime);
    if (op.index == 0)
        return c;
    const int target = c.degree + op.shift;
    Combination out = a.zero_class(target);
    if (c.is_zero() || target > a.dim)
        return out;
    const auto label_it = a.op_entries.find(label);
    for (size_t idx = 0; idx < c.coeffs.size(); ++idx) {
        const int coef = c.coeffs[idx];
        if (!coef)
            continue;
        if (c.degree == 0)
            continue;  // positive-index operations kill the unit
        if (op.kind == 'S' && op.index > c.degree)
            continue;  // unstable vanishing
        if (label_it == a.op_entries.end())
            return std::nullopt;
        auto row = label_it->second.find({c.degree, static_cast<int>(idx)});
        if (row == label_it->second.end())
            return std::nullopt;
        add_scaled(out, row->second, coef, a.prime);
    }
    return out;
}

namespace {

Combination cup_basis(const AlgebraPresentation& a, int d1, int i1, int d2, int i2) {
    if (d1 == 0)
        return a.basis_class(d2, i2);
    if (d2 == 0)
        return a.basis_class(d1, i1);
    const int target = d1 + d2;
    if (target > a.dim)
        return a.zero_class(target);
    const bool swapped = std::pair{d1, i1} > std::pair{d2, i2};
    const std::array<int, 4> key = swapped ? std::array<int, 4>{d2, i2, d1, i1}
                                           : std::array<int, 4>{d1, i1, d2, i2};
    auto it = a.cup_entries.find(key);
    if (it == a.cup_entries.end())
        return a.zero_class(target);
    Combination v = it->second;
    if (swapped && a.prime != 2 && (d1 % 2) && (d2 % 2)) {
        Combination neg = a.zero_class(target);
        add_scaled(neg, v, a.prime - 1, a.prime);
        return neg;
    }
    return v;
}

}  // namespace

Combination cup(const AlgebraPresentation& a, const Combination& c1, const Combination& c2) {
    Combination out = a.zero_class(c1.degree + c2.degree);
    for (size_t i = 0; i < c1.coeffs.size(); ++i) {
        if (!c1.coeffs[i])
            continue;
        for (size_t j = 0; j < c2.coeffs.size(); ++j) {
            if (!c2.coeffs[j])
                continue;
            const int scale = fp::normalize(static_cast<long long>(c1.coeffs[i]) * c2.coeffs[j], a.prime);
            add_scaled(out, cup_basis(a, c1.degree, static_cast<int>(i), c2.degree, static_cast<int>(j)),
                       scale, a.prime);
        }
    }
    return out;
}

std::optional<bool> rho_contains(const AlgebraPresentation& a, const Combination& c) {
    if (a.dim_at(c.degree) == 0)
        return true;  // the zero space: c is zero, which always lifts
    auto it = a.rho_images.find(c.degree);
    if (it == a.rho_images.end())
        return std::nullopt;
    switch (it->second.kind) {
        case RhoImage::Kind::None:
            return c.is_zero();
        case RhoImage::Kind::All:
            return true;
        case RhoImage::Kind::Span:
            return fp::in_span(fp::echelon_basis(it->second.span, a.prime), c.coeffs, a.prime);
    }
    return std::nullopt;
}

/* ---- validation ---------------------------------------------------------- */

namespace {

/* Apply a label basis-element-wise with unknown tracking; zero shortcut first. */
std::optional<Combination> apply_opt(const AlgebraPresentation& a, const std::string& label,
                                     const std::optional<Combination>& c) {
    if (!c)
        return std::nullopt;
    return sq_apply(a, label, *c);
}

std::string basis_name(const AlgebraPresentation& a, int d, int i) {
    return a.basis[d][i];
}

}  // namespace

ValidationReport validate(const AlgebraPresentation& a) {
    ValidationReport rep;
    auto violation = [&](const std::string& check, const std::string& witness) {
        rep.violations.push_back({check, witness});
    };

    // Structural degree rules for every stored operation row.
    for (const auto& [label, rows] : a.op_entries) {
        OpLabel op{};
        try {
            op = parse_op_label(label, a.prime);
        } catch (const Error& err) {
            violation("op-label", err.what());
            continue;
        }
        for (const auto& [src, v] : rows) {
            const auto [d, idx] = src;
            if (v.degree != d + op.shift) {
                violation("degree-rule", label + " on " + basis_name(a, d, idx) + " lands in degree " +
                                              std::to_string(v.degree) + ", expected " +
                                              std::to_string(d + op.shift));
                continue;
            }
            if (op.index == 0 && !(v == a.basis_class(d, idx)))
                violation("identity-row", label + " on " + basis_name(a, d, idx) + " is not the identity");
            if (a.prime == 2 && op.kind == 'S') {
                if (op.index > d && !v.is_zero())
                    violation("unstable-vanishing", label + " on " + basis_name(a, d, idx) +
                                                        " must vanish above the degree");
                if (op.index == d) {
                    auto key = std::array<int, 4>{d, idx, d, idx};
                    auto sq = a.cup_entries.find(key);
                    if (sq != a.cup_entries.end()) {
                        if (v == sq->second)
                            rep.confirmations.push_back(label + " on " + basis_name(a, d, idx) +
                                                        " equals its cup square");
                        else
                            violation("unstable-square", label + " on " + basis_name(a, d, idx) +
                                                             " differs from its cup square");
                    }
                }
            }
        }
    }

    // Adem composites on basis classes, wherever the data determines both sides.
    int adem_checked = 0;
    if (a.prime == 2) {
        for (int d = 1; d <= a.dim; ++d)
            for (int idx = 0; idx < a.dim_at(d); ++idx) {
                const Combination e = a.basis_class(d, idx);
                for (int b = 1; b <= a.dim; ++b)
                    for (int aa = 1; aa < 2 * b; ++aa) {
                        if (d + aa + b > a.dim)
                            continue;
                        auto lhs = apply_opt(a, "Sq" + std::to_string(aa),
                                             sq_apply(a, "Sq" + std::to_string(b), e));
                        if (!lhs)
                            continue;
                        Combination rhs = a.zero_class(d + aa + b);
                        bool known = true;
                        for (const auto& w : steenrod::adem_expand_pair(aa, b).terms) {
                            std::optional<Combination> cur = e;
                            for (auto it = w.indices.rbegin(); it != w.indices.rend() && cur; ++it)
                                cur = sq_apply(a, "Sq" + std::to_string(*it), *cur);
                            if (!cur) {
                                known = false;
                                break;
                            }
                            add_scaled(rhs, *cur, 1, a.prime);
                        }
                        if (!known)
                            continue;
                        ++adem_checked;
                        if (!(*lhs == rhs))
                            violation("adem", "Sq" + std::to_string(aa) + ".Sq" + std::to_string(b) +
                                                  " on " + basis_name(a, d, idx) + ": got " +
                                                  combination_str(a, *lhs) + ", relation gives " +
                                                  combination_str(a, rhs));
                    }
            }
        if (adem_checked)
            rep.confirmations.push_back(std::to_string(adem_checked) + " Adem composite(s) checked");
    }

    // Cartan on stored products.
    int cartan_checked = 0;
    if (a.prime == 2) {
        for (const auto& [key, v] : a.cup_entries) {
            const auto [d1, i1, d2, i2] = key;
            const Combination e1 = a.basis_class(d1, i1), e2 = a.basis_class(d2, i2);
            for (int n = 1; n <= a.dim - d1 - d2; ++n) {
                auto lhs = sq_apply(a, "Sq" + std::to_string(n), v);
                if (!lhs)
                    continue;
                Combination rhs = a.zero_class(d1 + d2 + n);
                bool known = true;
                for (int i = 0; i <= n && known; ++i) {
                    auto f1 = sq_apply(a, "Sq" + std::to_string(i), e1);
                    auto f2 = sq_apply(a, "Sq" + std::to_string(n - i), e2);
                    if (f1 && f1->is_zero())
                        continue;
                    if (f2 && f2->is_zero())
                        continue;
                    if (!f1 || !f2) {
                        known = false;
                        break;
                    }
                    add_scaled(rhs, cup(a, *f1, *f2), 1, a.prime);
                }
                if (!known)
                    continue;
                ++cartan_checked;
                if (!(*lhs == rhs))
                    violation("cartan", "Sq" + std::to_string(n) + " on " + basis_name(a, d1, i1) + "*" +
                                            basis_name(a, d2, i2) + ": got " + combination_str(a, *lhs) +
                                            ", Cartan gives " + combination_str(a, rhs));
            }
        }
        if (cartan_checked)
            rep.confirmations.push_back(std::to_string(cartan_checked) +
                                        " Cartan product check(s) evaluated");
    }

    // Poincare pairing, when a fundamental class designates one.
    if (!a.fundamental.empty()) {
        const auto [fd, fidx] = a.find(a.fundamental);
        (void)fd;
        if (a.dim_at(a.dim) != 1)
            violation("pairing", "top degree is not one-dimensional");
        else {
            for (int d = 0; 2 * d <= a.dim; ++d) {
                const int m1 = a.dim_at(d), m2 = a.dim_at(a.dim - d);
                if (m1 == 0 && m2 == 0)
                    continue;
                if (m1 != m2) {
                    violation("pairing", "degrees " + std::to_string(d) + " and " +
                                             std::to_string(a.dim - d) + " have different dimensions");
                    continue;
                }
                std::vector<std::vector<int>> mat(m1, std::vector<int>(m2, 0));
                for (int i = 0; i < m1; ++i)
                    for (int j = 0; j < m2; ++j)
                        mat[i][j] =
                            cup(a, a.basis_class(d, i), a.basis_class(a.dim - d, j)).coeffs[fidx];
                if (fp::echelonize(mat, a.prime) != m1)
                    violation("pairing", "pairing of degrees " + std::to_string(d) + " and " +
                                             std::to_string(a.dim - d) + " is degenerate");
                else
                    rep.confirmations.push_back("pairing(" + std::to_string(d) + "," +
                                                std::to_string(a.dim - d) + "): nondegenerate");
            }
        }
    }

    return rep;
}

}  // namespace sqkit::presentation
