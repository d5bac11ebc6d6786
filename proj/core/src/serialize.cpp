#include "tricolor/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace tricolor {

using detail::ojson;

std::string cyc_to_json(const CycScalar& value) {
    return detail::cyc_json(value).dump();
}

CycScalar cyc_from_json(const std::string& text) {
    return detail::cyc_from(ojson::parse(text));
}

std::string algebra_to_json(const AlgebraElement& value) {
    return detail::algebra_json(value).dump();
}

AlgebraElement algebra_from_json(const std::string& text) {
    return detail::algebra_from(ojson::parse(text));
}

std::string grid_to_json_line(const ColorGrid& grid) {
    ojson faces = ojson::array();
    for (int i = 1; i <= grid.n() + 1; ++i) {
        ojson row = ojson::array();
        for (int j = 1; j <= grid.n() + 1; ++j) row.push_back(grid.at(i, j).value());
        faces.push_back(std::move(row));
    }
    ojson out = ojson::object();
    out["n"] = grid.n();
    out["r"] = grid.corner().value();
    out["faces"] = std::move(faces);
    return out.dump();
}

ColorGrid grid_from_json_line(const std::string& line) {
    const ojson j = ojson::parse(line);
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    const ojson& rows = j.at("faces");
    std::vector<Color> faces;
    faces.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
    if (static_cast<int>(rows.size()) != n + 1)
        throw std::invalid_argument("state cache: wrong row count");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n + 1)
            throw std::invalid_argument("state cache: wrong column count");
        for (const auto& cell : row) faces.emplace_back(cell.get<int>());
    }
    ColorGrid grid(n, std::move(faces));
    if (grid.corner().value() != ((r % 3) + 3) % 3)
        throw std::invalid_argument("state cache: corner color disagrees with faces");
    return grid;
}

void write_state_cache(std::ostream& os, std::span<const ColorGrid> grids) {
    for (const ColorGrid& g : grids) os << grid_to_json_line(g) << '\n';
}

std::vector<ColorGrid> read_state_cache(std::istream& is) {
    std::vector<ColorGrid> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(grid_from_json_line(line));
    }
    return out;
}

std::string point_to_json(const EvaluationPoint& pt) {
    ojson out = ojson::object();
    out["b"] = detail::cyc_json(pt.b());
    ojson xs = ojson::array(), ys = ojson::array();
    for (int i = 1; i <= pt.n(); ++i) xs.push_back(detail::cyc_json(pt.x(i)));
    for (int j = 1; j <= pt.n(); ++j) ys.push_back(detail::cyc_json(pt.y(j)));
    out["x"] = std::move(xs);
    out["y"] = std::move(ys);
    return out.dump();
}

EvaluationPoint point_from_json(const std::string& text) {
    const ojson j = ojson::parse(text);
    std::vector<CycScalar> x, y;
    for (const auto& v : j.at("x")) x.push_back(detail::cyc_from(v));
    for (const auto& v : j.at("y")) y.push_back(detail::cyc_from(v));
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("point file: x and y must be nonempty and equally long");
    const int n = static_cast<int>(x.size());
    return EvaluationPoint(n, detail::cyc_from(j.at("b")), std::move(x), std::move(y));
}

EvaluationPoint load_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open point file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return point_from_json(buffer.str());
}

} // namespace tricolor
