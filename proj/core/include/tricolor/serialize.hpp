#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tricolor/algebra.hpp"
#include "tricolor/lattice.hpp"
#include "tricolor/point.hpp"

namespace tricolor {

// CycScalar <-> JSON pair ["p/q", "r/s"] (components c0, c1 as reduced
// rationals with the denominator always printed).
std::string cyc_to_json(const CycScalar& value);
CycScalar cyc_from_json(const std::string& text);

// AlgebraElement <-> JSON object mapping eps-strings "000".."111" to CycScalar
// pairs (character k of the key is the exponent of s_k; zero components are
// omitted), plus the context's b value under the key "b".
std::string algebra_to_json(const AlgebraElement& value);
AlgebraElement algebra_from_json(const std::string& text);

// One state per line: {"n": int, "r": int, "faces": [[int, ...], ...]}.
std::string grid_to_json_line(const ColorGrid& grid);
ColorGrid grid_from_json_line(const std::string& line);
void write_state_cache(std::ostream& os, std::span<const ColorGrid> grids);
std::vector<ColorGrid> read_state_cache(std::istream& is);

// Point file: {"b": ["p/q", "r/s"], "x": [pair, ...], "y": [pair, ...]}.
std::string point_to_json(const EvaluationPoint& pt);
EvaluationPoint point_from_json(const std::string& text);
EvaluationPoint load_point_file(const std::string& path);

} // namespace tricolor
