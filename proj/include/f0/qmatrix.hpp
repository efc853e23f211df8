#pragma once
// Dense exact matrices over Q with reduced row echelon form and kernel bases.
// Pivoting is first-nonzero (left-to-right, top-to-bottom) so results are
// deterministic across platforms and thread counts.

#include "f0/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace f0::qlinalg {

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("QMatrix: entry count != rows*cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::vector<Rational> mul_vec(const std::vector<Rational>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    QMatrix matrix;
    std::vector<std::size_t> pivot_cols; // strictly increasing
};

// Reduced row echelon form; preserves the row space.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Basis of {v : m v = 0}; size = cols - rank. Each vector has the free
// (non-pivot) coordinate set to 1, in increasing free-column order.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

} // namespace f0::qlinalg
