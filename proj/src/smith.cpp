#include "facetideal/smith.hpp"

#include <cstddef>

namespace facetideal {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

bool find_pivot(const Matrix& m, std::size_t start, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = start; i < m.size(); ++i)
        for (std::size_t j = start; j < m[i].size(); ++j) {
            if (m[i][j].is_zero())
                continue;
            if (!found || BigInt::compare_abs(m[i][j], m[pi][pj]) < 0) {
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a != b)
        std::swap(m[a], m[b]);
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

void add_row_multiple(Matrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] += factor * m[src][j];
}

void add_col_multiple(Matrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
    for (auto& row : m)
        row[dst] += factor * row[src];
}

} // namespace

SmithResult smith_normal_form(Matrix m) {
    SmithResult result;
    if (m.empty() || m[0].empty())
        return result;
    std::size_t rows = m.size();
    std::size_t cols = m[0].size();

    std::size_t k = 0;
    while (k < rows && k < cols) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(m, k, pi, pj))
            break;
        swap_rows(m, k, pi);
        swap_cols(m, k, pj);

        // Euclid on row/column k until the pivot divides everything it faces.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (m[i][k].is_zero())
                    continue;
                BigInt q = m[i][k] / m[k][k];
                if (!q.is_zero())
                    add_row_multiple(m, i, k, -q);
                if (!m[i][k].is_zero()) {
                    swap_rows(m, k, i); // strictly smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (m[k][j].is_zero())
                    continue;
                BigInt q = m[k][j] / m[k][k];
                if (!q.is_zero())
                    add_col_multiple(m, j, k, -q);
                if (!m[k][j].is_zero()) {
                    swap_cols(m, k, j);
                    clean = false;
                }
            }
        }

        // Divisibility chain: fold a bad row in and redo the elimination.
        bool restart = false;
        for (std::size_t i = k + 1; i < rows && !restart; ++i)
            for (std::size_t j = k + 1; j < cols && !restart; ++j)
                if (!(m[i][j] % m[k][k]).is_zero()) {
                    add_row_multiple(m, k, i, BigInt(1));
                    restart = true;
                }
        if (restart)
            continue;

        if (m[k][k].is_negative())
            for (std::size_t j = 0; j < cols; ++j)
                m[k][j] = -m[k][j];
        ++k;
    }

    result.rank = static_cast<int>(k);
    for (std::size_t i = 0; i < k; ++i)
        result.invariant_factors.push_back(m[i][i]);
    return result;
}

} // namespace facetideal
