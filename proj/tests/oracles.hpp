#pragma once

// Independent brute-force reference implementations for the tests. Nothing
// here calls into the library's elimination, closure or forcing code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

/// Rank by textbook Gauss-Jordan elimination over Q with division.
inline std::size_t rank(Mat m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

inline Mat mul(const Mat& a, const Mat& b) {
    Mat c(a.size(), std::vector<Q>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Mat bracket(const Mat& x, const Mat& y) {
    Mat a = mul(x, y);
    const Mat b = mul(y, x);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
    return a;
}

inline std::vector<Q> flatten(const Mat& m) {
    std::vector<Q> v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
}

/// Dimension of the span of a list of square matrices.
inline std::size_t span_dim(const std::vector<Mat>& ms) {
    Mat rows;
    for (const auto& m : ms) rows.push_back(flatten(m));
    return rows.empty() ? 0 : rank(rows);
}

/// Lie closure by rounds: add every bracket of the current spanning list
/// that raises the dimension, until a full round adds nothing.
inline std::size_t lie_dim(std::vector<Mat> span) {
    const std::size_t full = span[0].size() * span[0].size();
    std::vector<Mat> basis;
    for (auto& m : span) {
        basis.push_back(m);
        if (span_dim(basis) < basis.size()) basis.pop_back();
    }
    bool grew = true;
    while (grew && basis.size() < full) {
        grew = false;
        const auto round = basis;
        for (std::size_t i = 0; i < round.size(); ++i) {
            for (std::size_t j = i + 1; j < round.size(); ++j) {
                basis.push_back(bracket(round[i], round[j]));
                if (span_dim(basis) < basis.size()) {
                    basis.pop_back();
                } else {
                    grew = true;
                }
            }
        }
    }
    return basis.size();
}

inline Mat from_ints(const std::vector<std::vector<long>>& rows) {
    Mat m;
    for (const auto& r : rows) {
        std::vector<Q> row;
        for (long x : r) row.emplace_back(x);
        m.push_back(row);
    }
    return m;
}

inline Mat unit(std::size_t n, std::size_t i, std::size_t j) {
    Mat m(n, std::vector<Q>(n));
    m[i - 1][j - 1] = 1;
    return m;
}

/// Closure by synchronous rounds on bitmasks; adjacency[v] is the 0-based
/// neighbor mask of vertex v.
inline std::uint32_t forcing_closure(const std::vector<std::uint32_t>& adjacency, std::uint32_t black) {
    while (true) {
        std::uint32_t next = black;
        for (std::size_t v = 0; v < adjacency.size(); ++v) {
            if (!(black >> v & 1U)) continue;
            const std::uint32_t white = adjacency[v] & ~black;
            if (white && !(white & (white - 1))) next |= white;
        }
        if (next == black) return black;
        black = next;
    }
}

/// (Z(G), lexicographically least witness as 1-based labels) by trying every
/// subset of every size.
inline std::pair<std::size_t, std::vector<std::size_t>> min_zfs(std::size_t n,
                                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::uint32_t> adjacency(n, 0);
    for (auto [u, v] : edges) {
        adjacency[u - 1] |= 1U << (v - 1);
        adjacency[v - 1] |= 1U << (u - 1);
    }
    const std::uint32_t all = (1U << n) - 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> hits;
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            if (forcing_closure(adjacency, mask) != all) continue;
            std::vector<std::size_t> labels;
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1U) labels.push_back(v + 1);
            hits.push_back(labels);
        }
        if (!hits.empty()) return {k, *std::min_element(hits.begin(), hits.end())};
    }
    return {n, {}};
}

}  // namespace oracle
