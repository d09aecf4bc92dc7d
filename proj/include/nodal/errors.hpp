#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

// Base class for all domain errors raised by the toolkit.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// rootlat
struct NotSimplyLaced : Error { using Error::Error; };
struct NotADE : Error { using Error::Error; };
struct NotEmbeddable : Error { using Error::Error; };
struct UnsupportedType : Error { using Error::Error; };
struct MalformedConfig : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// atlas / flow
struct NoAtlas : Error { using Error::Error; };
struct PunctureHit : Error { using Error::Error; };
struct NotAdjacent : Error { using Error::Error; };
struct OutsideOverlap : Error { using Error::Error; };
struct NoChartAvailable : Error { using Error::Error; };

// riccati
struct DegenerateQuadratic : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };

}  // namespace nodal
