#include "tricolor/matrix.hpp"

namespace tricolor {

CycScalar det_exact(ExactMatrix m) {
    const std::size_t n = m.size();
    CycScalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return CycScalar(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        const CycScalar inv = m.at(col, col).inverse();
        det *= m.at(col, col);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m.at(row, col).is_zero()) continue;
            const CycScalar factor = m.at(row, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m.at(row, j) -= factor * m.at(col, j);
        }
    }
    return det;
}

} // namespace tricolor
