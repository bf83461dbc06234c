#pragma once

#include <stdexcept>
#include <vector>

namespace gorbetti {

// Dense row-major matrix over a field K. Sized for degreewise graded
// pieces: a few hundred rows and columns at most.
template <class K>
struct Mat {
    using Elem = typename K::Elem;
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int r, int c, const K& field) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
        for (auto& e : a)
            e = field.zero();
    }
    Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// In-place reduced row echelon form with deterministic pivoting: for each
// column in order, the first remaining row with a nonzero entry becomes the
// pivot. Returns the pivot columns; the rank is their count and the pivot
// rows end up on top in column order.
template <class K>
std::vector<int> rref(Mat<K>& m, const K& field) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r)
            if (!field.is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(pivot, c), m.at(row, c));
        const auto inv = field.inv(m.at(row, col));
        for (int c = col; c < m.cols; ++c)
            m.at(row, c) = field.mul(m.at(row, c), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || field.is_zero(m.at(r, col)))
                continue;
            const auto factor = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(row, c)));
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

template <class K>
int rank(Mat<K> m, const K& field) {
    return static_cast<int>(rref(m, field).size());
}

// Canonical basis of the right nullspace {v : m v = 0}, returned as the
// reduced row echelon form of the standard free-column vectors.
template <class K>
Mat<K> nullspace(Mat<K> m, const K& field) {
    const auto pivot_cols = rref(m, field);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivot_cols)
        is_pivot[static_cast<std::size_t>(c)] = true;

    const int nfree = m.cols - static_cast<int>(pivot_cols.size());
    Mat<K> basis(nfree, m.cols, field);
    int out_row = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        basis.at(out_row, f) = field.one();
        for (std::size_t pr = 0; pr < pivot_cols.size(); ++pr)
            basis.at(out_row, pivot_cols[pr]) = field.neg(m.at(static_cast<int>(pr), f));
        ++out_row;
    }
    rref(basis, field);
    return basis;
}

} // namespace gorbetti
