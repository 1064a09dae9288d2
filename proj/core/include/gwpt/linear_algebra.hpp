#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gwpt::linalg {

template <typename Field>
using Matrix = std::vector<std::vector<Field>>;

// Gauss-Jordan elimination over an exact field. Returns one solution of A x = b
// (free variables set to zero), or nullopt when the system is inconsistent.
template <typename Field>
std::optional<std::vector<Field>> solve(Matrix<Field> a, std::vector<Field> b, std::size_t columns)
{
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c])) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Field inv = Field(1) / a[r][c];
        for (std::size_t j = c; j < columns; ++j) {
            a[r][j] = a[r][j] * inv;
        }
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) {
                continue;
            }
            const Field f = a[i][c];
            for (std::size_t j = c; j < columns; ++j) {
                a[i][j] = a[i][j] - f * a[r][j];
            }
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!is_zero(b[i])) {
            return std::nullopt;
        }
    }
    std::vector<Field> x(columns, Field(0));
    for (std::size_t i = 0; i < r; ++i) {
        x[pivot_col[i]] = b[i];
    }
    return x;
}

template <typename Field>
std::size_t rank(Matrix<Field> a, std::size_t columns)
{
    std::vector<Field> zeros(a.size(), Field(0));
    std::size_t r = 0;
    const std::size_t rows = a.size();
    for (std::size_t c = 0; c < columns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c])) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(a[i][c])) {
                continue;
            }
            const Field f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < columns; ++j) {
                a[i][j] = a[i][j] - f * a[r][j];
            }
        }
        ++r;
    }
    return r;
}

} // namespace gwpt::linalg
