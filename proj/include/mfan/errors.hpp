#pragma once

#include <stdexcept>
#include <string>

namespace mfan {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input handling.
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct UnknownExample : Error { using Error::Error; };

// Fan and cone geometry.
struct RaysDegenerate : Error { using Error::Error; };
struct NonPrimitiveRay : Error { using Error::Error; };
struct ProbeTie : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Class membership preconditions.
struct NotValidated : Error { using Error::Error; };
struct NotInClass : Error { using Error::Error; };

// Polytope calculus.
struct FanMismatch : Error { using Error::Error; };
struct SingularVertexSystem : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct SlackViolated : Error { using Error::Error; };
struct NotPolytopal : Error { using Error::Error; };
struct DegenerateFunctional : Error { using Error::Error; };

}  // namespace mfan
