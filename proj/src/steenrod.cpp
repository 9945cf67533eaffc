#include "sqkit/steenrod.h"

#include <algorithm>
#include <sstream>

#include "sqkit/error.h"

namespace sqkit::steenrod {

bool binom_mod2(long long m, long long n) {
    if (n < 0 || m < 0)
        return false;
    return (m & n) == n;
}

SqWord::SqWord(std::vector<int> idx) : indices(std::move(idx)) {
    for (int i : indices)
        if (i <= 0)
            throw Error("SqWord: indices must be strictly positive (got " + std::to_string(i) + ")");
}

int SqWord::degree() const {
    int d = 0;
    for (int i : indices)
        d += i;
    return d;
}

bool is_admissible(const SqWord& w) {
    for (size_t j = 0; j + 1 < w.indices.size(); ++j)
        if (w.indices[j] < 2 * w.indices[j + 1])
            return false;
    return true;
}

int excess(const SqWord& w) {
    if (w.empty())
        return 0;
    return 2 * w.indices.front() - w.degree();
}

SteenrodElement SteenrodElement::word(SqWord w) {
    SteenrodElement e;
    e.terms.push_back(std::move(w));
    return e;
}

bool SteenrodElement::is_homogeneous() const {
    for (const auto& t : terms)
        if (t.degree() != terms.front().degree())
            return false;
    return true;
}

int SteenrodElement::degree() const {
    if (is_zero())
        throw Error("degree of the zero element is undefined");
    if (!is_homogeneous())
        throw Error("degree of a non-homogeneous element is undefined");
    return terms.front().degree();
}

SteenrodElement add(const SteenrodElement& a, const SteenrodElement& b) {
    SteenrodElement r;
    std::set_symmetric_difference(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
                                  std::back_inserter(r.terms));
    return r;
}

/* Flip membership of w in the sorted term set. */
static void xor_term(std::vector<SqWord>& terms, const SqWord& w) {
    auto it = std::lower_bound(terms.begin(), terms.end(), w);
    if (it != terms.end() && *it == w)
        terms.erase(it);
    else
        terms.insert(it, w);
}

SteenrodElement adem_expand_pair(int a, int b) {
    if (a <= 0 || b <= 0 || a >= 2 * b)
        throw Error("adem_expand_pair: need an inadmissible pair 0 < a < 2b");
    SteenrodElement r;
    for (int j = 0; 2 * j <= a; ++j) {
        if (!binom_mod2(b - 1 - j, a - 2 * j))
            continue;
        SqWord w;
        w.indices.push_back(a + b - j);
        if (j > 0)
            w.indices.push_back(j);
        xor_term(r.terms, w);
    }
    return r;
}

SteenrodElement adem_normalize(const SteenrodElement& e) {
    std::vector<SqWord> work = e.terms;
    int deg = 0;  // rewriting is linear, so mixed degrees are fine; budget by the largest
    for (const auto& t : e.terms)
        deg = std::max(deg, t.degree());
    long long budget = 1'000'000 + 100'000LL * deg;
    while (true) {
        auto it = std::find_if(work.begin(), work.end(), [](const SqWord& w) { return !is_admissible(w); });
        if (it == work.end())
            break;
        if (--budget < 0)
            throw Error("adem_normalize: rewrite budget exceeded in degree " + std::to_string(deg) +
                        "; normalization did not terminate within the indexed bound");
        SqWord w = *it;
        work.erase(it);
        size_t pos = 0;
        while (w.indices[pos] >= 2 * w.indices[pos + 1])
            ++pos;
        const int a = w.indices[pos], b = w.indices[pos + 1];
        for (const auto& rel : adem_expand_pair(a, b).terms) {
            SqWord nw;
            nw.indices.assign(w.indices.begin(), w.indices.begin() + pos);
            nw.indices.insert(nw.indices.end(), rel.indices.begin(), rel.indices.end());
            nw.indices.insert(nw.indices.end(), w.indices.begin() + pos + 2, w.indices.end());
            xor_term(work, nw);
        }
    }
    SteenrodElement r;
    r.terms = std::move(work);
    return r;
}

/* Left-to-right generation: each next index is at most half its predecessor. */
static void collect_admissible(int head_max, int budget, std::vector<int>& cur,
                               std::vector<SqWord>& out) {
    for (int i = 1; i <= std::min(head_max, budget); ++i) {
        cur.push_back(i);
        out.emplace_back(std::vector<int>(cur));
        collect_admissible(i / 2, budget - i, cur, out);
        cur.pop_back();
    }
}

static void sort_by_degree_then_lex(std::vector<SqWord>& words) {
    std::sort(words.begin(), words.end(), [](const SqWord& a, const SqWord& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.indices < b.indices;
    });
}

std::vector<SqWord> serre_generators(int k, int d_max) {
    if (k < 2)
        throw Error("serre_generators: k must be >= 2");
    std::vector<SqWord> out;
    if (d_max < k)
        return out;
    out.emplace_back();  // the fundamental class itself
    std::vector<int> cur;
    std::vector<SqWord> all;
    collect_admissible(d_max - k, d_max - k, cur, all);
    for (auto& w : all)
        if (excess(w) < k)
            out.push_back(std::move(w));
    sort_by_degree_then_lex(out);
    return out;
}

std::vector<SqWord> gsz_candidates(int k, int d_max) {
    if (k < 2)
        throw Error("gsz_candidates: k must be > 1");
    std::vector<SqWord> out;
    if (d_max < k)
        return out;
    std::vector<int> cur;
    std::vector<SqWord> all;
    collect_admissible(d_max - k, d_max - k, cur, all);
    for (auto& w : all) {
        if (excess(w) >= k || w.indices.front() == 1)
            continue;
        if ((w.degree() + k) % 2 != 0)
            continue;
        out.push_back(std::move(w));
    }
    sort_by_degree_then_lex(out);
    return out;
}

std::string to_string(const SqWord& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (size_t j = 0; j < w.indices.size(); ++j) {
        if (j)
            s += '.';
        s += "Sq" + std::to_string(w.indices[j]);
    }
    return s;
}

std::string to_string(const SteenrodElement& e) {
    if (e.is_zero())
        return "0";
    std::string s;
    // terms are stored ascending; display descending, the usual order in Adem tables
    for (size_t j = e.terms.size(); j-- > 0;) {
        if (j + 1 < e.terms.size())
            s += " + ";
        s += to_string(e.terms[j]);
    }
    return s;
}

static std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

SqWord parse_word(const std::string& text) {
    std::string t = strip(text);
    if (t.empty())
        throw ParseError("empty Steenrod word");
    if (t == "1")
        return SqWord{};
    SqWord w;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t dot = t.find('.', pos);
        std::string tok = strip(t.substr(pos, dot == std::string::npos ? dot : dot - pos));
        if (tok.rfind("Sq", 0) != 0 || tok.size() < 3)
            throw ParseError("expected SqN, got '" + tok + "'");
        size_t used = 0;
        int idx;
        try {
            idx = std::stoi(tok.substr(2), &used);
        } catch (const std::exception&) {
            throw ParseError("bad square index in '" + tok + "'");
        }
        if (used != tok.size() - 2)
            throw ParseError("bad square index in '" + tok + "'");
        if (idx <= 0)
            throw ParseError("square indices must be positive; the identity is written 1");
        w.indices.push_back(idx);
        if (dot == std::string::npos)
            break;
        pos = dot + 1;
    }
    return w;
}

SteenrodElement parse_element(const std::string& text) {
    std::string t = strip(text);
    if (t == "0")
        return SteenrodElement::zero();
    SteenrodElement e;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t plus = t.find('+', pos);
        std::string tok = strip(t.substr(pos, plus == std::string::npos ? plus : plus - pos));
        xor_term(e.terms, parse_word(tok));
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
    }
    return e;
}

}  // namespace sqkit::steenrod
