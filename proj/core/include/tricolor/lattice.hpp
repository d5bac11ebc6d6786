#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "tricolor/errors.hpp"

namespace tricolor {

// Face color, an element of Z_3. Two edge-adjacent faces are compatible iff
// their colors differ (equivalently, differ by +-1 mod 3).
class Color {
public:
    Color() = default;
    explicit Color(int value) : v_(normalize(value)) {}

    int value() const { return v_; }

    Color operator+(int d) const { return Color(v_ + d); }
    Color operator-(int d) const { return Color(v_ - d); }

    friend bool operator==(Color a, Color b) { return a.v_ == b.v_; }
    friend bool operator!=(Color a, Color b) { return a.v_ != b.v_; }
    friend bool operator<(Color a, Color b) { return a.v_ < b.v_; }

    static std::array<Color, 3> all() { return {Color(0), Color(1), Color(2)}; }

private:
    static int normalize(int value) {
        int m = value % 3;
        return m < 0 ? m + 3 : m;
    }
    int v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Color c) { return os << c.value(); }

enum class VertexKind { Alpha, AlphaPrime, Beta, BetaPrime, Gamma, GammaPrime };

const char* vertex_kind_name(VertexKind kind);

// One of the six admissible vertex configurations, determined by the four
// surrounding face colors: a kind plus its color parameter r.
struct VertexClass {
    VertexKind kind;
    Color r;

    bool is_gamma() const { return kind == VertexKind::Gamma; }
    bool is_gamma_prime() const { return kind == VertexKind::GammaPrime; }
    bool is_beta_family() const { return kind == VertexKind::Beta || kind == VertexKind::BetaPrime; }

    friend bool operator==(const VertexClass& a, const VertexClass& b) {
        return a.kind == b.kind && a.r == b.r;
    }
};

// Boundary face colors of the (n+1)x(n+1) grid for corner color r, produced
// by the domain-wall walk: +1 per step along vertical boundaries, -1 along
// horizontal ones, anticlockwise. Vectors are 0-based copies of the 1-based
// rows/columns (top[j-1] = face (1,j), left[i-1] = face (i,1), ...).
struct BoundaryColors {
    std::vector<Color> top, left, bottom, right;
};

BoundaryColors boundary_colors(int n, Color r);

// A full face coloring of the (n+1)x(n+1) grid: adjacency-valid everywhere,
// boundary equal to boundary_colors(n, corner). Faces are indexed 1-based,
// (row i from top, column j from left).
class ColorGrid {
public:
    ColorGrid(int n, std::vector<Color> faces); // validates; throws std::invalid_argument

    int n() const { return n_; }
    Color at(int i, int j) const { return faces_[index(i, j)]; }
    Color corner() const { return at(1, 1); }
    const std::vector<Color>& faces() const { return faces_; }

    friend bool operator==(const ColorGrid& a, const ColorGrid& b) {
        return a.n_ == b.n_ && a.faces_ == b.faces_;
    }

private:
    std::size_t index(int i, int j) const;

    int n_;
    std::vector<Color> faces_; // row-major, (i-1)*(n+1)+(j-1)
};

// All states with corner color r: depth-first over interior faces in
// row-major order, candidate colors tried in ascending order, so the output
// order is deterministic.
std::vector<ColorGrid> enumerate_states(int n, Color r);

// Classify a vertex from the four surrounding face colors, in the order
// top-left, top-right, bottom-right, bottom-left. Throws ClassificationError
// for inadmissible patterns.
VertexClass classify_vertex(Color tl, Color tr, Color br, Color bl);

// Vertex (i, j) = intersection of the i-th internal horizontal line (top to
// bottom) with the j-th internal vertical line (left to right); its faces are
// (i,j), (i,j+1), (i+1,j+1), (i+1,j) as TL/TR/BR/BL.
VertexClass classify_vertex(const ColorGrid& grid, int i, int j);

// Per-column gamma bookkeeping: in every column of vertices the number of
// gamma vertices must exceed the number of gamma-prime vertices by exactly
// one.
struct GammaBalance {
    std::vector<std::pair<int, int>> per_column; // (#gamma, #gamma')
    bool pass = false;
};

GammaBalance gamma_balance(const ColorGrid& grid);

// Predicted s-monomial of a state's weight: component c of the mask is the
// parity of the number of beta-family vertices whose color differs from c.
unsigned state_s_mask(const ColorGrid& grid);

} // namespace tricolor
