#pragma once
#include <vector>

/* Small dense linear algebra over F_p; entries are kept in [0, p). */

namespace sqkit::fp {

inline int normalize(long long v, int p) {
    return static_cast<int>(((v % p) + p) % p);
}

inline int inverse(int a, int p) {
    int r = 1, b = a % p, e = p - 2;  // Fermat; p prime, a nonzero
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/* Row-reduce in place; returns the rank. Zero rows sink to the bottom. */
inline int echelonize(std::vector<std::vector<int>>& rows, int p) {
    if (rows.empty())
        return 0;
    const size_t n = rows[0].size();
    size_t rr = 0;
    for (size_t col = 0; col < n && rr < rows.size(); ++col) {
        size_t piv = rr;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rr], rows[piv]);
        const int inv = inverse(rows[rr][col], p);
        for (auto& x : rows[rr])
            x = x * inv % p;
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rr || rows[r2][col] == 0)
                continue;
            const int f = rows[r2][col];
            for (size_t c2 = 0; c2 < n; ++c2)
                rows[r2][c2] = normalize(rows[r2][c2] - static_cast<long long>(f) * rows[rr][c2], p);
        }
        ++rr;
    }
    return static_cast<int>(rr);
}

/* Echelon basis of the span (zero rows removed). */
inline std::vector<std::vector<int>> echelon_basis(std::vector<std::vector<int>> rows, int p) {
    const int rank = echelonize(rows, p);
    rows.resize(rank);
    return rows;
}

inline bool in_span(const std::vector<std::vector<int>>& echelon_rows, std::vector<int> v, int p) {
    for (const auto& row : echelon_rows) {
        size_t piv = 0;
        while (piv < row.size() && row[piv] == 0)
            ++piv;
        if (piv == row.size() || v[piv] == 0)
            continue;
        const int f = v[piv];
        for (size_t c = 0; c < v.size(); ++c)
            v[c] = normalize(v[c] - static_cast<long long>(f) * row[c], p);
    }
    for (int x : v)
        if (x)
            return false;
    return true;
}

}  // namespace sqkit::fp
