#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tricolor/cyclotomic.hpp"

namespace tricolor {

// Dense square matrix over Q(a).
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t size) : size_(size), entries_(size * size) {}

    static ExactMatrix identity(std::size_t size) {
        ExactMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m.at(i, i) = CycScalar(1);
        return m;
    }

    std::size_t size() const { return size_; }

    CycScalar& at(std::size_t row, std::size_t col) {
        check(row, col);
        return entries_[row * size_ + col];
    }
    const CycScalar& at(std::size_t row, std::size_t col) const {
        check(row, col);
        return entries_[row * size_ + col];
    }

private:
    void check(std::size_t row, std::size_t col) const {
        if (row >= size_ || col >= size_) throw std::out_of_range("ExactMatrix: index");
    }

    std::size_t size_;
    std::vector<CycScalar> entries_;
};

// Exact determinant by Gaussian elimination over the field Q(a), pivoting on
// the first nonzero entry of each column. Fraction-full: entries stay exact
// rationals throughout, and the result does not depend on pivot choices.
// Singular matrices return 0.
CycScalar det_exact(ExactMatrix m);

} // namespace tricolor
