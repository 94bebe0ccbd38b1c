#pragma once

#include <optional>

#include "ncqh/element.hpp"

namespace ncqh {

struct NotARecognizedUnit : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Syntactic unit recognition: vertex-wise sums of ordered products of
/// factors (e_p + c c*)^{+-1} (scaled by a nonzero rational). Anything else
/// is rejected; general unit testing in A is out of reach.
std::optional<Element> tryInvert(const Element& x);
Element invert(const Element& x);  // throws NotARecognizedUnit

}  // namespace ncqh
