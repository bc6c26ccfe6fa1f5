#ifndef PMP_LINALG_HPP
#define PMP_LINALG_HPP

#include <cstddef>
#include <vector>

namespace pmp {

// Reduced row echelon form in place over an exact field scalar.
// Returns the pivot column of each pivot row, in order.
template <class T>
std::vector<std::size_t> rref(std::vector<std::vector<T>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!(m[i][c] == ring_zero(m[i][c]))) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        T inv = ring_from_int(m[r][c], 1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            T f = m[i][c];
            if (f == ring_zero(f)) continue;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Canonical kernel basis of the linear map given by the rows: one vector
/// per free column, with 1 in the free slot and the pivot solves above it.
template <class T>
std::vector<std::vector<T>> kernel_basis(std::vector<std::vector<T>> m, const T& one) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    const T zero = ring_zero(one);

    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, zero);
        v[f] = one;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m[pr][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pmp

#endif
