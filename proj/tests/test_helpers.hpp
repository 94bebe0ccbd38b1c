#pragma once

#include <memory>

#include "ncqh/element.hpp"
#include "ncqh/quiver.hpp"

namespace ncqh::testutil {

/// One arrow 1 -> 2 (the basic quiver of the structure layer).
inline std::shared_ptr<Algebra> basicAlgebra() {
  QuiverPresentation q;
  q.vertices = {1, 2};
  q.arrows = {{"a", 1, 2}};
  return std::make_shared<Algebra>(makeDouble(q));
}

/// One loop at vertex 1.
inline std::shared_ptr<Algebra> loopAlgebra() {
  QuiverPresentation q;
  q.vertices = {1};
  q.arrows = {{"a", 1, 1}};
  return std::make_shared<Algebra>(makeDouble(q));
}

/// Two arrows a: 1 -> 2, b: 2 -> 3.
inline std::shared_ptr<Algebra> pathAlgebra2() {
  QuiverPresentation q;
  q.vertices = {1, 2, 3};
  q.arrows = {{"a", 1, 2}, {"b", 2, 3}};
  return std::make_shared<Algebra>(makeDouble(q));
}

}  // namespace ncqh::testutil
