#pragma once

#include <stdexcept>
#include <string>

namespace spanvk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// domain/codomain mismatch when composing or pairing morphisms
struct BoundaryMismatch : Error {
  using Error::Error;
};

// structure fails its own invariants (non-functorial diagram, non-natural
// transformation, malformed coherence data, ...)
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace spanvk
