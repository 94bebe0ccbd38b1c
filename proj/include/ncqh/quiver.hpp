#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncqh {

struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int tail = 0;
  int head = 0;
};

/// A finite quiver: vertex labels (positive integers) and an ordered list of
/// arrows. The list position is the total order used by the structure layer.
struct QuiverPresentation {
  std::vector<int> vertices;  // sorted, unique
  std::vector<Arrow> arrows;  // order matters

  bool hasVertex(int v) const;
  void validate() const;  // throws QuiverError
};

/// Double quiver: every arrow a of the base contributes a (sign +1) and its
/// reverse a* (sign -1). Arrow ids interleave: 2i is base arrow i, 2i+1 its
/// star; reversal is id^1.
struct DoubleQuiver {
  QuiverPresentation base;

  int arrowCount() const { return static_cast<int>(base.arrows.size()) * 2; }
  static int reverse(int id) { return id ^ 1; }
  static bool isStar(int id) { return (id & 1) != 0; }
  static int sign(int id) { return isStar(id) ? -1 : +1; }  // epsilon
  int tail(int id) const;
  int head(int id) const;
  std::string name(int id) const;
};

struct VertexGluing {
  QuiverPresentation source;
  QuiverPresentation glued;
  std::map<int, int> vertex_map;
};

DoubleQuiver makeDouble(const QuiverPresentation& q);

/// Glues vertices v and w; the smaller label survives. Arrow order is
/// inherited from the source.
VertexGluing fuseVertices(const QuiverPresentation& q, int v, int w);

/// Parses the JSON quiver description (keys: vertices, arrows, optional
/// order). Throws QuiverError with position information on bad input.
QuiverPresentation parseQuiver(const std::string& text);
std::string serializeQuiver(const QuiverPresentation& q);

}  // namespace ncqh
