#include "sqkit/char_ring.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "sqkit/error.h"

namespace sqkit::char_ring {

RingContext::RingContext(int k, bool oriented_flag, int cap)
    : rank(k), oriented(oriented_flag), degree_cap(cap < 0 ? 2 * k + 2 : cap) {
    if (rank < 1)
        throw Error("RingContext: rank must be >= 1");
    if (oriented && rank < 2)
        throw Error("RingContext: an oriented context needs rank >= 2");
    if (degree_cap < rank)
        throw Error("RingContext: degree_cap must be at least the rank");
}

int SWMonomial::degree() const {
    int d = 0;
    for (const auto& f : powers)
        d += f.gen * f.exp;
    return d;
}

int SWMonomial::exponent(int gen) const {
    for (const auto& f : powers)
        if (f.gen == gen)
            return f.exp;
    return 0;
}

bool mono_ranks_above(const SWMonomial& a, const SWMonomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    auto ia = a.powers.begin(), ib = b.powers.begin();
    for (; ia != a.powers.end() && ib != b.powers.end(); ++ia, ++ib) {
        if (ia->gen != ib->gen)
            return ia->gen > ib->gen;
        if (ia->exp != ib->exp)
            return ia->exp > ib->exp;
    }
    return ia != a.powers.end();
}

/* Sort in canonical (descending) order and cancel equal pairs mod 2. */
static void sort_mod2(std::vector<SWMonomial>& v) {
    std::sort(v.begin(), v.end(), mono_ranks_above);
    std::vector<SWMonomial> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size();) {
        if (i + 1 < v.size() && v[i] == v[i + 1])
            i += 2;
        else
            out.push_back(std::move(v[i++]));
    }
    v = std::move(out);
}

SWPolynomial SWPolynomial::generator(const RingContext& c, int j) {
    if (!c.valid_generator(j))
        throw Error("generator w" + std::to_string(j) + " is not present in this context");
    return {c, {SWMonomial{{{j, 1}}}}};
}

bool SWPolynomial::is_homogeneous() const {
    for (const auto& m : terms)
        if (m.degree() != terms.front().degree())
            return false;
    return true;
}

int SWPolynomial::degree() const {
    if (is_zero())
        throw Error("degree of the zero polynomial is undefined");
    if (!is_homogeneous())
        throw Error("degree of a non-homogeneous polynomial is undefined");
    return terms.front().degree();
}

static void require_same_ctx(const SWPolynomial& p, const SWPolynomial& q) {
    if (!(p.ctx == q.ctx))
        throw Error("operands live in different ring contexts");
}

SWPolynomial add(const SWPolynomial& p, const SWPolynomial& q) {
    require_same_ctx(p, q);
    SWPolynomial r{p.ctx, {}};
    std::set_symmetric_difference(p.terms.begin(), p.terms.end(), q.terms.begin(), q.terms.end(),
                                  std::back_inserter(r.terms), mono_ranks_above);
    return r;
}

static SWMonomial mono_mul(const SWMonomial& a, const SWMonomial& b) {
    SWMonomial r;
    auto ia = a.powers.begin(), ib = b.powers.begin();
    while (ia != a.powers.end() || ib != b.powers.end()) {
        if (ib == b.powers.end() || (ia != a.powers.end() && ia->gen > ib->gen))
            r.powers.push_back(*ia++);
        else if (ia == a.powers.end() || ib->gen > ia->gen)
            r.powers.push_back(*ib++);
        else {
            r.powers.push_back({ia->gen, ia->exp + ib->exp});
            ++ia, ++ib;
        }
    }
    return r;
}

enum class CapPolicy { Throw, Drop };

static SWPolynomial mul_impl(const SWPolynomial& p, const SWPolynomial& q, CapPolicy policy) {
    require_same_ctx(p, q);
    std::vector<SWMonomial> acc;
    for (const auto& a : p.terms)
        for (const auto& b : q.terms) {
            SWMonomial m = mono_mul(a, b);
            if (m.degree() > p.ctx.degree_cap) {
                if (policy == CapPolicy::Drop)
                    continue;
                throw Error("product degree " + std::to_string(m.degree()) +
                            " exceeds the tracked cap " + std::to_string(p.ctx.degree_cap) +
                            "; raise degree_cap");
            }
            acc.push_back(std::move(m));
        }
    sort_mod2(acc);
    return {p.ctx, std::move(acc)};
}

SWPolynomial mul(const SWPolynomial& p, const SWPolynomial& q) {
    return mul_impl(p, q, CapPolicy::Throw);
}

SWPolynomial component(const SWPolynomial& p, int degree) {
    SWPolynomial r = SWPolynomial::zero(p.ctx);
    for (const auto& m : p.terms)
        if (m.degree() == degree)
            r.terms.push_back(m);
    return r;
}

SWPolynomial truncate_to(const SWPolynomial& p, const RingContext& ctx) {
    std::vector<SWMonomial> acc;
    for (const auto& m : p.terms) {
        bool keep = true;
        for (const auto& f : m.powers)
            if (!ctx.valid_generator(f.gen)) {
                keep = false;
                break;
            }
        if (!keep)
            continue;
        if (m.degree() > ctx.degree_cap)
            throw Error("truncate_to: monomial degree " + std::to_string(m.degree()) +
                        " exceeds the target cap");
        acc.push_back(m);
    }
    sort_mod2(acc);
    return {ctx, std::move(acc)};
}

bool divisible_by_generator(const SWPolynomial& p, int gen) {
    for (const auto& m : p.terms)
        if (m.exponent(gen) == 0)
            return false;
    return true;
}

SWPolynomial divide_by_generator(const SWPolynomial& p, int gen) {
    SWPolynomial r = SWPolynomial::zero(p.ctx);
    for (const auto& m : p.terms) {
        if (m.exponent(gen) == 0)
            throw Error("divide_by_generator: term not divisible by w" + std::to_string(gen));
        SWMonomial q;
        for (const auto& f : m.powers) {
            if (f.gen == gen) {
                if (f.exp > 1)
                    q.powers.push_back({f.gen, f.exp - 1});
            } else {
                q.powers.push_back(f);
            }
        }
        r.terms.push_back(std::move(q));
    }
    return r;
}

/* Monomial w_{g1} w_{g2} with g1 < g2 allowed to be 0 (absent) or outside the
 * context (zero class). */
static void push_wu_term(std::vector<SWMonomial>& acc, int g1, int g2, const RingContext& ctx) {
    if (g2 > ctx.rank)
        return;
    SWMonomial m;
    m.powers.push_back({g2, 1});
    if (g1 >= 1) {
        if (!ctx.valid_generator(g1))
            return;
        m.powers.push_back({g1, 1});
    }
    acc.push_back(std::move(m));
}

static SWPolynomial sq_generator_impl(int i, int j, const RingContext& ctx, CapPolicy policy) {
    if (i < 0)
        throw Error("sq_generator: negative square index");
    if (!ctx.valid_generator(j))
        throw Error("sq_generator: w" + std::to_string(j) + " is not a generator of this context");
    if (i == 0)
        return SWPolynomial::generator(ctx, j);
    if (i > j)
        return SWPolynomial::zero(ctx);
    const int out_deg = i + j;
    if (out_deg > ctx.degree_cap) {
        if (policy == CapPolicy::Drop)
            return SWPolynomial::zero(ctx);
        throw Error("sq_generator: result degree " + std::to_string(out_deg) +
                    " exceeds the tracked cap " + std::to_string(ctx.degree_cap));
    }
    if (i == j)
        return {ctx, {SWMonomial{{{j, 2}}}}};
    std::vector<SWMonomial> acc;
    for (int t = 0; t <= i; ++t) {
        if (!steenrod::binom_mod2(j - i + t - 1, t))
            continue;
        push_wu_term(acc, i - t, j + t, ctx);
    }
    sort_mod2(acc);
    return {ctx, std::move(acc)};
}

SWPolynomial sq_generator(int i, int j, const RingContext& ctx) {
    return sq_generator_impl(i, j, ctx, CapPolicy::Throw);
}

/* Sum of Sq^i(w_j) over all i, keeping only components within the cap. */
static SWPolynomial total_square_generator(int j, const RingContext& ctx) {
    SWPolynomial acc = SWPolynomial::zero(ctx);
    for (int i = 0; i <= j; ++i)
        acc = add(acc, sq_generator_impl(i, j, ctx, CapPolicy::Drop));
    return acc;
}

static SWPolynomial frobenius_square_truncating(const SWPolynomial& p) {
    std::vector<SWMonomial> acc;
    for (const auto& m : p.terms) {
        if (2 * m.degree() > p.ctx.degree_cap)
            continue;
        SWMonomial sq = m;
        for (auto& f : sq.powers)
            f.exp *= 2;
        acc.push_back(std::move(sq));
    }
    sort_mod2(acc);
    return {p.ctx, std::move(acc)};
}

static SWPolynomial pow_truncating(SWPolynomial base, int e) {
    SWPolynomial result = SWPolynomial::one(base.ctx);
    while (e > 0) {
        if (e & 1)
            result = mul_impl(result, base, CapPolicy::Drop);
        e >>= 1;
        if (e)
            base = frobenius_square_truncating(base);
    }
    return result;
}

SWPolynomial sq_poly(int n, const SWPolynomial& p) {
    if (n < 0)
        throw Error("sq_poly: negative square index");
    if (!p.is_homogeneous()) {
        std::ostringstream os;
        os << "sq_poly: polynomial is not homogeneous; term degrees:";
        for (const auto& m : p.terms)
            os << ' ' << m.degree();
        throw Error(os.str());
    }
    if (p.is_zero() || n == 0)
        return p;
    const int d = p.degree();
    if (n > d)
        return SWPolynomial::zero(p.ctx);
    if (d + n > p.ctx.degree_cap)
        throw Error("sq_poly: result degree " + std::to_string(d + n) +
                    " exceeds the tracked cap " + std::to_string(p.ctx.degree_cap) +
                    "; raise degree_cap");
    std::map<int, SWPolynomial> totals;
    std::vector<SWMonomial> acc;
    for (const auto& m : p.terms) {
        SWPolynomial t = SWPolynomial::one(p.ctx);
        for (const auto& f : m.powers) {
            auto it = totals.find(f.gen);
            if (it == totals.end())
                it = totals.emplace(f.gen, total_square_generator(f.gen, p.ctx)).first;
            t = mul_impl(t, pow_truncating(it->second, f.exp), CapPolicy::Drop);
        }
        for (auto& tm : component(t, d + n).terms)
            acc.push_back(std::move(tm));
    }
    sort_mod2(acc);
    return {p.ctx, std::move(acc)};
}

SWPolynomial apply_steenrod(const steenrod::SteenrodElement& e, const SWPolynomial& p) {
    SWPolynomial acc = SWPolynomial::zero(p.ctx);
    for (const auto& w : e.terms) {
        SWPolynomial cur = p;
        for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it)
            cur = sq_poly(*it, cur);
        acc = add(acc, cur);
    }
    return acc;
}

SWPolynomial reduce_pontryagin(const PontryaginExpression& expr, const RingContext& ctx) {
    if (!ctx.oriented)
        throw Error("reduce_pontryagin: requires an oriented context");
    std::vector<SWMonomial> acc;
    for (const auto& term : expr.terms) {
        if (((term.coeff % 2) + 2) % 2 == 0)
            continue;
        if (term.t_exp < 0 || term.t_exp > 1)
            throw Error("reduce_pontryagin: the Thom symbol t may appear at most once per term");
        std::map<int, int> exps;  // generator -> exponent
        if (term.t_exp == 1)
            exps[ctx.rank] += 1;
        for (size_t i = 0; i < term.p_exps.size(); ++i) {
            if (term.p_exps[i] == 0)
                continue;
            const int gen = 2 * static_cast<int>(i + 1);
            if (gen > ctx.rank)
                throw Error("reduce_pontryagin: p" + std::to_string(i + 1) + " needs w" +
                            std::to_string(gen) + ", beyond rank " + std::to_string(ctx.rank));
            exps[gen] += 2 * term.p_exps[i];
        }
        SWMonomial m;
        for (auto it = exps.rbegin(); it != exps.rend(); ++it)
            m.powers.push_back({it->first, it->second});
        if (m.degree() > ctx.degree_cap)
            throw Error("reduce_pontryagin: term degree " + std::to_string(m.degree()) +
                        " exceeds the tracked cap " + std::to_string(ctx.degree_cap));
        acc.push_back(std::move(m));
    }
    sort_mod2(acc);
    return {ctx, std::move(acc)};
}

std::string to_string(const SWMonomial& m) {
    if (m.is_one())
        return "1";
    std::string s;
    for (size_t j = 0; j < m.powers.size(); ++j) {
        if (j)
            s += '*';
        s += "w" + std::to_string(m.powers[j].gen);
        if (m.powers[j].exp > 1)
            s += "^" + std::to_string(m.powers[j].exp);
    }
    return s;
}

std::string to_string(const SWPolynomial& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    for (size_t j = 0; j < p.terms.size(); ++j) {
        if (j)
            s += " + ";
        s += to_string(p.terms[j]);
    }
    return s;
}

/* ---- parsers ------------------------------------------------------------ */

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    int column() const { return static_cast<int>(pos) + 1; }
    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected an integer", 0, column());
        return std::stoll(s.substr(start, pos - start));
    }
};

struct SWParser {
    Cursor cur;
    const RingContext& ctx;

    SWPolynomial expr() {
        SWPolynomial p = term();
        while (cur.eat('+'))
            p = add(p, term());
        return p;
    }
    SWPolynomial term() {
        SWPolynomial p = factor();
        while (cur.eat('*'))
            p = mul(p, factor());
        return p;
    }
    SWPolynomial factor() {
        SWPolynomial p = atom();
        if (cur.eat('^')) {
            long long e = cur.integer();
            SWPolynomial r = SWPolynomial::one(ctx);
            for (long long i = 0; i < e; ++i)
                r = mul(r, p);
            return r;
        }
        return p;
    }
    SWPolynomial atom() {
        char c = cur.peek();
        if (c == 'w') {
            ++cur.pos;
            int j = static_cast<int>(cur.integer());
            if (!ctx.valid_generator(j))
                return SWPolynomial::zero(ctx);  // truncated generator: the zero class
            return SWPolynomial::generator(ctx, j);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = cur.integer();
            return (v % 2) ? SWPolynomial::one(ctx) : SWPolynomial::zero(ctx);
        }
        if (c == '(') {
            ++cur.pos;
            SWPolynomial p = expr();
            if (!cur.eat(')'))
                throw ParseError("expected ')'", 0, cur.column());
            return p;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in polynomial", 0, cur.column());
    }
};

using PKey = std::pair<int, std::vector<int>>;  // (t exponent, Pontryagin exponents)
using PMap = std::map<PKey, long long>;

PMap pmap_add(const PMap& a, const PMap& b) {
    PMap r = a;
    for (const auto& [k, v] : b)
        r[k] += v;
    return r;
}

PMap pmap_scale(const PMap& a, long long c) {
    PMap r;
    for (const auto& [k, v] : a)
        r[k] = v * c;
    return r;
}

PMap pmap_mul(const PMap& a, const PMap& b) {
    PMap r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            PKey k;
            k.first = ka.first + kb.first;
            k.second = ka.second;
            if (k.second.size() < kb.second.size())
                k.second.resize(kb.second.size(), 0);
            for (size_t i = 0; i < kb.second.size(); ++i)
                k.second[i] += kb.second[i];
            r[k] += va * vb;
        }
    return r;
}

struct PontryaginParser {
    Cursor cur;

    PMap expr() {
        bool neg = cur.eat('-');
        PMap p = term();
        if (neg)
            p = pmap_scale(p, -1);
        while (true) {
            if (cur.eat('+'))
                p = pmap_add(p, term());
            else if (cur.eat('-'))
                p = pmap_add(p, pmap_scale(term(), -1));
            else
                return p;
        }
    }
    PMap term() {
        PMap p = factor();
        while (cur.eat('*'))
            p = pmap_mul(p, factor());
        return p;
    }
    PMap factor() {
        PMap p = atom();
        if (cur.eat('^')) {
            long long e = cur.integer();
            PMap r{{{0, {}}, 1}};
            for (long long i = 0; i < e; ++i)
                r = pmap_mul(r, p);
            return r;
        }
        return p;
    }
    PMap atom() {
        char c = cur.peek();
        if (c == 't') {
            ++cur.pos;
            return {{{1, {}}, 1}};
        }
        if (c == 'p') {
            ++cur.pos;
            int i = static_cast<int>(cur.integer());
            if (i < 1)
                throw ParseError("Pontryagin indices start at 1", 0, cur.column());
            std::vector<int> exps(i, 0);
            exps[i - 1] = 1;
            return {{{0, std::move(exps)}, 1}};
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return {{{0, {}}, cur.integer()}};
        if (c == '(') {
            ++cur.pos;
            PMap p = expr();
            if (!cur.eat(')'))
                throw ParseError("expected ')'", 0, cur.column());
            return p;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in Pontryagin expression", 0,
                         cur.column());
    }
};

}  // namespace

SWPolynomial parse_poly(const std::string& text, const RingContext& ctx) {
    SWParser parser{{text}, ctx};
    parser.cur.skip_ws();
    if (parser.cur.pos >= text.size())
        throw ParseError("empty polynomial");
    SWPolynomial p = parser.expr();
    parser.cur.skip_ws();
    if (parser.cur.pos != text.size())
        throw ParseError("trailing input in polynomial", 0, parser.cur.column());
    return p;
}

PontryaginExpression parse_pontryagin(const std::string& text) {
    PontryaginParser parser{{text}};
    parser.cur.skip_ws();
    if (parser.cur.pos >= text.size())
        throw ParseError("empty Pontryagin expression");
    PMap m = parser.expr();
    parser.cur.skip_ws();
    if (parser.cur.pos != text.size())
        throw ParseError("trailing input in Pontryagin expression", 0, parser.cur.column());
    PontryaginExpression e;
    for (auto& [k, v] : m) {
        if (v == 0)
            continue;
        if (k.first > 1)
            throw ParseError("the Thom symbol t may appear at most once per term");
        PontryaginTerm term{v, k.first, k.second};
        while (!term.p_exps.empty() && term.p_exps.back() == 0)
            term.p_exps.pop_back();
        e.terms.push_back(std::move(term));
    }
    // canonical display order: t-terms first, then descending lex on exponents
    std::sort(e.terms.begin(), e.terms.end(), [](const PontryaginTerm& x, const PontryaginTerm& y) {
        if (x.t_exp != y.t_exp)
            return x.t_exp > y.t_exp;
        return x.p_exps > y.p_exps;
    });
    return e;
}

std::string to_string(const PontryaginExpression& e) {
    if (e.terms.empty())
        return "0";
    std::string s;
    for (size_t j = 0; j < e.terms.size(); ++j) {
        const auto& t = e.terms[j];
        const long long c = t.coeff;
        if (j == 0)
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        std::vector<std::string> factors;
        if (std::llabs(c) != 1 || (t.t_exp == 0 && t.p_exps.empty()))
            factors.push_back(std::to_string(std::llabs(c)));
        if (t.t_exp == 1)
            factors.push_back("t");
        for (size_t i = 0; i < t.p_exps.size(); ++i) {
            if (t.p_exps[i] == 0)
                continue;
            std::string f = "p" + std::to_string(i + 1);
            if (t.p_exps[i] > 1)
                f += "^" + std::to_string(t.p_exps[i]);
            factors.push_back(std::move(f));
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i)
                s += '*';
            s += factors[i];
        }
    }
    return s;
}

}  // namespace sqkit::char_ring
