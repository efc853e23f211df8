#include "f0/qmatrix.hpp"

namespace f0::qlinalg {

std::vector<Rational> QMatrix::mul_vec(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mul_vec: size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !v[c].is_zero()) acc += at(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

RrefResult rref(const QMatrix& m) {
    QMatrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // First nonzero entry at or below `row` in this column.
        std::size_t sel = nr;
        for (std::size_t r = row; r < nr; ++r) {
            if (!a.at(r, col).is_zero()) { sel = r; break; }
        }
        if (sel == nr) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < nc; ++c) std::swap(a.at(sel, c), a.at(row, c));
        }
        const Rational inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < nc; ++c) a.at(row, c) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            const Rational f = a.at(r, col);
            for (std::size_t c = col; c < nc; ++c) {
                if (!a.at(row, c).is_zero()) a.at(r, c) -= f * a.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    const RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(nc);
        v[free_col] = Rational(1);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            // Row i of the rref reads: x_{pivot_i} + sum over free cols = 0.
            v[r.pivot_cols[i]] = -r.matrix.at(i, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace f0::qlinalg
