#pragma once

#include <stdexcept>
#include <string>

namespace stokes3d {

// Orbit degenerate to a line or a point: the angular momentum vanishes and
// no orbital plane (hence no Euler angles or principal axes) is defined.
class DegenerateOrbitError : public std::runtime_error {
 public:
  explicit DegenerateOrbitError(const std::string& what) : std::runtime_error(what) {}
};

// Third field component is not negligible, so the 3x3 polarization matrix
// does not reduce to the standard 2x2 transverse block.
class NotZPropagatingError : public std::runtime_error {
 public:
  explicit NotZPropagatingError(const std::string& what) : std::runtime_error(what) {}
};

// Sampled time series does not determine the cosine/sine amplitudes
// (too few samples, or all samples at equivalent phases).
class IdentifiabilityError : public std::runtime_error {
 public:
  explicit IdentifiabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A value that must reach an output report is non-finite.
class SerializationError : public std::runtime_error {
 public:
  explicit SerializationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stokes3d
