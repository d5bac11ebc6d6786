#include "tricolor/lattice.hpp"

#include <stdexcept>
#include <string>

namespace tricolor {

const char* vertex_kind_name(VertexKind kind) {
    switch (kind) {
        case VertexKind::Alpha: return "alpha";
        case VertexKind::AlphaPrime: return "alpha'";
        case VertexKind::Beta: return "beta";
        case VertexKind::BetaPrime: return "beta'";
        case VertexKind::Gamma: return "gamma";
        case VertexKind::GammaPrime: return "gamma'";
    }
    return "?";
}

BoundaryColors boundary_colors(int n, Color r) {
    if (n < 1) throw std::invalid_argument("boundary_colors: n must be >= 1");
    BoundaryColors b;
    b.top.reserve(n + 1);
    b.left.reserve(n + 1);
    b.bottom.reserve(n + 1);
    b.right.reserve(n + 1);
    for (int j = 1; j <= n + 1; ++j) b.top.push_back(r + (j - 1));
    for (int i = 1; i <= n + 1; ++i) b.left.push_back(r + (i - 1));
    for (int j = 1; j <= n + 1; ++j) b.bottom.push_back(r + n - (j - 1));
    for (int i = 1; i <= n + 1; ++i) b.right.push_back(r + n - (i - 1));
    return b;
}

std::size_t ColorGrid::index(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ + 1 || j > n_ + 1)
        throw std::out_of_range("ColorGrid: face index (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    return static_cast<std::size_t>(i - 1) * (n_ + 1) + (j - 1);
}

ColorGrid::ColorGrid(int n, std::vector<Color> faces) : n_(n), faces_(std::move(faces)) {
    if (n < 1) throw std::invalid_argument("ColorGrid: n must be >= 1");
    const std::size_t side = static_cast<std::size_t>(n) + 1;
    if (faces_.size() != side * side)
        throw std::invalid_argument("ColorGrid: wrong number of faces");

    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (j <= n && at(i, j) == at(i, j + 1))
                throw std::invalid_argument("ColorGrid: equal adjacent faces in row " + std::to_string(i));
            if (i <= n && at(i, j) == at(i + 1, j))
                throw std::invalid_argument("ColorGrid: equal adjacent faces in column " + std::to_string(j));
        }

    const BoundaryColors b = boundary_colors(n, corner());
    for (int j = 1; j <= n + 1; ++j) {
        if (at(1, j) != b.top[j - 1] || at(n + 1, j) != b.bottom[j - 1])
            throw std::invalid_argument("ColorGrid: boundary violates the domain-wall rule");
    }
    for (int i = 1; i <= n + 1; ++i) {
        if (at(i, 1) != b.left[i - 1] || at(i, n + 1) != b.right[i - 1])
            throw std::invalid_argument("ColorGrid: boundary violates the domain-wall rule");
    }
}

namespace {

struct Enumerator {
    int n;
    int side;
    std::vector<Color> faces;
    std::vector<ColorGrid>* out;

    Color& at(int i, int j) { return faces[static_cast<std::size_t>(i - 1) * side + (j - 1)]; }

    // Fill interior faces row-major; each candidate must differ from all
    // already-known neighbors (up and left always; right/down when they lie on
    // the boundary).
    void fill(int i, int j) {
        if (i > n) {
            out->emplace_back(n, faces);
            return;
        }
        const int ni = (j == n) ? i + 1 : i;
        const int nj = (j == n) ? 2 : j + 1;
        for (int c = 0; c < 3; ++c) {
            const Color cand(c);
            if (cand == at(i - 1, j) || cand == at(i, j - 1)) continue;
            if (j + 1 == n + 1 && cand == at(i, j + 1)) continue;
            if (i + 1 == n + 1 && cand == at(i + 1, j)) continue;
            at(i, j) = cand;
            fill(ni, nj);
        }
    }
};

} // namespace

std::vector<ColorGrid> enumerate_states(int n, Color r) {
    const BoundaryColors b = boundary_colors(n, r);
    const int side = n + 1;
    std::vector<Color> faces(static_cast<std::size_t>(side) * side);
    auto set = [&](int i, int j, Color c) { faces[static_cast<std::size_t>(i - 1) * side + (j - 1)] = c; };
    for (int j = 1; j <= side; ++j) {
        set(1, j, b.top[j - 1]);
        set(side, j, b.bottom[j - 1]);
    }
    for (int i = 1; i <= side; ++i) {
        set(i, 1, b.left[i - 1]);
        set(i, side, b.right[i - 1]);
    }

    std::vector<ColorGrid> out;
    if (n == 1) {
        out.emplace_back(n, std::move(faces));
        return out;
    }
    Enumerator e{n, side, std::move(faces), &out};
    e.fill(2, 2);
    return out;
}

VertexClass classify_vertex(Color tl, Color tr, Color br, Color bl) {
    auto bad = [&]() {
        throw ClassificationError("classify_vertex: inadmissible pattern (" +
                                  std::to_string(tl.value()) + ", " + std::to_string(tr.value()) + ", " +
                                  std::to_string(br.value()) + ", " + std::to_string(bl.value()) + ")");
    };
    if (tl == tr || tr == br || br == bl || bl == tl) bad();

    if (tl == br && tr == bl) {
        // gamma family: r on the main diagonal.
        if (tr == tl + 1) return {VertexKind::Gamma, tl};
        return {VertexKind::GammaPrime, tl};
    }
    if (tl == br) {
        // beta family: r = tl, off-diagonal pair distinct.
        if (tr == tl - 1 && bl == tl + 1) return {VertexKind::Beta, tl};
        if (tr == tl + 1 && bl == tl - 1) return {VertexKind::BetaPrime, tl};
        bad();
    }
    if (tr == bl) {
        // alpha family: r = tr.
        if (tl == tr - 1 && br == tr + 1) return {VertexKind::Alpha, tr};
        if (tl == tr + 1 && br == tr - 1) return {VertexKind::AlphaPrime, tr};
        bad();
    }
    bad();
    return {}; // unreachable
}

VertexClass classify_vertex(const ColorGrid& grid, int i, int j) {
    return classify_vertex(grid.at(i, j), grid.at(i, j + 1), grid.at(i + 1, j + 1), grid.at(i + 1, j));
}

GammaBalance gamma_balance(const ColorGrid& grid) {
    const int n = grid.n();
    GammaBalance report;
    report.per_column.reserve(n);
    report.pass = true;
    for (int j = 1; j <= n; ++j) {
        int gamma = 0, gamma_prime = 0;
        for (int i = 1; i <= n; ++i) {
            const VertexClass vc = classify_vertex(grid, i, j);
            if (vc.is_gamma()) ++gamma;
            if (vc.is_gamma_prime()) ++gamma_prime;
        }
        report.per_column.emplace_back(gamma, gamma_prime);
        if (gamma != gamma_prime + 1 || gamma < 1) report.pass = false;
    }
    return report;
}

unsigned state_s_mask(const ColorGrid& grid) {
    std::array<int, 3> beta_by_color{};
    const int n = grid.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const VertexClass vc = classify_vertex(grid, i, j);
            if (vc.is_beta_family()) ++beta_by_color[vc.r.value()];
        }
    unsigned mask = 0;
    for (int c = 0; c < 3; ++c) {
        int differing = 0;
        for (int r = 0; r < 3; ++r)
            if (r != c) differing += beta_by_color[r];
        if (differing % 2 != 0) mask |= 1u << c;
    }
    return mask;
}

} // namespace tricolor
