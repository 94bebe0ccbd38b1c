#include "ncqh/quiver.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ncqh {

bool QuiverPresentation::hasVertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

void QuiverPresentation::validate() const {
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw QuiverError("duplicate vertex label");
  for (int v : vertices)
    if (v <= 0) throw QuiverError("vertex labels must be positive integers");
  std::set<std::string> names;
  for (const Arrow& a : arrows) {
    if (a.name.empty()) throw QuiverError("empty arrow name");
    if (a.name.back() == '*')
      throw QuiverError("arrow name '" + a.name + "' may not end in '*' (reserved for reverses)");
    if (a.name.rfind("e_", 0) == 0 || a.name.rfind("g_", 0) == 0)
      throw QuiverError("arrow name '" + a.name + "' collides with reserved symbols");
    if (!names.insert(a.name).second)
      throw QuiverError("duplicate arrow name '" + a.name + "'");
    if (!hasVertex(a.tail))
      throw QuiverError("arrow '" + a.name + "' references missing tail vertex " + std::to_string(a.tail));
    if (!hasVertex(a.head))
      throw QuiverError("arrow '" + a.name + "' references missing head vertex " + std::to_string(a.head));
  }
}

int DoubleQuiver::tail(int id) const {
  const Arrow& a = base.arrows[id / 2];
  return isStar(id) ? a.head : a.tail;
}

int DoubleQuiver::head(int id) const {
  const Arrow& a = base.arrows[id / 2];
  return isStar(id) ? a.tail : a.head;
}

std::string DoubleQuiver::name(int id) const {
  const Arrow& a = base.arrows[id / 2];
  return isStar(id) ? a.name + "*" : a.name;
}

DoubleQuiver makeDouble(const QuiverPresentation& q) {
  q.validate();
  return DoubleQuiver{q};
}

VertexGluing fuseVertices(const QuiverPresentation& q, int v, int w) {
  q.validate();
  if (v == w) throw QuiverError("cannot glue a vertex to itself");
  if (!q.hasVertex(v)) throw QuiverError("missing vertex " + std::to_string(v));
  if (!q.hasVertex(w)) throw QuiverError("missing vertex " + std::to_string(w));
  int keep = std::min(v, w), drop = std::max(v, w);
  VertexGluing g;
  g.source = q;
  for (int u : q.vertices) {
    g.vertex_map[u] = (u == drop) ? keep : u;
    if (u != drop) g.glued.vertices.push_back(u);
  }
  for (const Arrow& a : q.arrows)
    g.glued.arrows.push_back({a.name, g.vertex_map[a.tail], g.vertex_map[a.head]});
  g.glued.validate();
  return g;
}

QuiverPresentation parseQuiver(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw QuiverError(std::string("syntax error: ") + e.what());
  }
  QuiverPresentation q;
  try {
    if (!j.is_object()) throw QuiverError("top-level value must be an object");
    q.vertices = j.at("vertices").get<std::vector<int>>();
    std::sort(q.vertices.begin(), q.vertices.end());
    for (const auto& ja : j.at("arrows")) {
      Arrow a;
      a.name = ja.at("name").get<std::string>();
      a.tail = ja.at("tail").get<int>();
      a.head = ja.at("head").get<int>();
      q.arrows.push_back(a);
    }
    if (j.contains("order")) {
      auto order = j.at("order").get<std::vector<std::string>>();
      if (order.size() != q.arrows.size())
        throw QuiverError("'order' must list every arrow exactly once");
      std::vector<Arrow> reordered;
      for (const std::string& n : order) {
        auto it = std::find_if(q.arrows.begin(), q.arrows.end(),
                               [&](const Arrow& a) { return a.name == n; });
        if (it == q.arrows.end()) throw QuiverError("'order' names unknown arrow '" + n + "'");
        reordered.push_back(*it);
      }
      q.arrows = reordered;
    }
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("malformed quiver document: ") + e.what());
  }
  q.validate();
  return q;
}

std::string serializeQuiver(const QuiverPresentation& q) {
  nlohmann::ordered_json j;
  j["vertices"] = q.vertices;
  j["arrows"] = nlohmann::ordered_json::array();
  for (const Arrow& a : q.arrows)
    j["arrows"].push_back({{"name", a.name}, {"tail", a.tail}, {"head", a.head}});
  return j.dump(2) + "\n";
}

}  // namespace ncqh
