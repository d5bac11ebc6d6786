#pragma once

namespace tricolor {

inline constexpr const char* kVersion = "0.1.0";

} // namespace tricolor
