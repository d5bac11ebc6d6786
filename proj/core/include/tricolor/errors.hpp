#pragma once

#include <stdexcept>
#include <string>

namespace tricolor {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An evaluation point (or a point derived from one by shifting/specializing a
// coordinate) violates a non-degeneracy requirement.
class DegeneratePointError : public Error {
public:
    explicit DegeneratePointError(const std::string& what) : Error(what) {}
};

// The point sampler exhausted its retry budget for one coordinate.
class SamplingError : public Error {
public:
    explicit SamplingError(const std::string& what) : Error(what) {}
};

// Four face colors around a vertex do not form one of the six admissible patterns.
class ClassificationError : public Error {
public:
    explicit ClassificationError(const std::string& what) : Error(what) {}
};

} // namespace tricolor
