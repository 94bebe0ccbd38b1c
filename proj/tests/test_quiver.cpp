#include "doctest.h"

#include "ncqh/quiver.hpp"
#include "ncqh/rng.hpp"

using namespace ncqh;

namespace {

QuiverPresentation randomQuiver(Rng& rng) {
  QuiverPresentation q;
  int nv = static_cast<int>(rng.range(1, 5));
  for (int v = 1; v <= nv; ++v) q.vertices.push_back(v);
  int na = static_cast<int>(rng.range(0, 6));
  for (int i = 0; i < na; ++i)
    q.arrows.push_back({"x" + std::to_string(i), static_cast<int>(rng.range(1, nv)),
                        static_cast<int>(rng.range(1, nv))});
  return q;
}

}  // namespace

TEST_CASE("double quiver: one arrow") {
  QuiverPresentation q;
  q.vertices = {1, 2};
  q.arrows = {{"a", 1, 2}};
  DoubleQuiver d = makeDouble(q);
  CHECK(d.arrowCount() == 2);
  CHECK(d.name(0) == "a");
  CHECK(d.name(1) == "a*");
  CHECK(d.tail(1) == 2);
  CHECK(d.head(1) == 1);
  CHECK(DoubleQuiver::sign(0) == 1);
  CHECK(DoubleQuiver::sign(1) == -1);
}

TEST_CASE("double quiver: empty and loop") {
  QuiverPresentation e;
  e.vertices = {1};
  CHECK(makeDouble(e).arrowCount() == 0);

  QuiverPresentation l;
  l.vertices = {1};
  l.arrows = {{"b", 1, 1}};
  DoubleQuiver d = makeDouble(l);
  CHECK(d.tail(1) == 1);
  CHECK(d.head(1) == 1);
}

TEST_CASE("double involution and sign law") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    QuiverPresentation q = randomQuiver(rng);
    DoubleQuiver d = makeDouble(q);
    for (int c = 0; c < d.arrowCount(); ++c) {
      CHECK(DoubleQuiver::reverse(DoubleQuiver::reverse(c)) == c);
      CHECK(DoubleQuiver::sign(DoubleQuiver::reverse(c)) == -DoubleQuiver::sign(c));
      CHECK(d.head(DoubleQuiver::reverse(c)) == d.tail(c));
      CHECK(d.tail(DoubleQuiver::reverse(c)) == d.head(c));
    }
  }
}

TEST_CASE("fusion relabels and counts") {
  QuiverPresentation q;
  q.vertices = {1, 2};
  q.arrows = {{"a", 1, 2}};
  VertexGluing g = fuseVertices(q, 1, 2);
  CHECK(g.glued.vertices == std::vector<int>{1});
  CHECK(g.glued.arrows.size() == 1);
  CHECK(g.glued.arrows[0].tail == 1);
  CHECK(g.glued.arrows[0].head == 1);

  QuiverPresentation q3;
  q3.vertices = {1, 2, 3};
  q3.arrows = {{"a", 1, 2}, {"b", 2, 3}};
  VertexGluing g3 = fuseVertices(q3, 2, 3);
  CHECK(g3.glued.vertices == std::vector<int>{1, 2});
  CHECK(g3.glued.arrows[1].tail == 2);
  CHECK(g3.glued.arrows[1].head == 2);

  CHECK_THROWS_AS(fuseVertices(q, 1, 1), QuiverError);
  CHECK_THROWS_AS(fuseVertices(q, 1, 9), QuiverError);
}

TEST_CASE("fusion invariants on random quivers") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    QuiverPresentation q = randomQuiver(rng);
    if (q.vertices.size() < 2) continue;
    int v = q.vertices[rng.below(q.vertices.size())];
    int w = v;
    while (w == v) w = q.vertices[rng.below(q.vertices.size())];
    VertexGluing g = fuseVertices(q, v, w);
    CHECK(g.glued.vertices.size() == q.vertices.size() - 1);
    CHECK(g.glued.arrows.size() == q.arrows.size());
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
      CHECK(g.glued.arrows[i].name == q.arrows[i].name);  // order preserved
  }
}

TEST_CASE("parse and serialize round-trip") {
  std::string text = R"({"vertices":[1,2],"arrows":[{"name":"a","tail":1,"head":2}]})";
  QuiverPresentation q = parseQuiver(text);
  CHECK(q.vertices == std::vector<int>{1, 2});
  REQUIRE(q.arrows.size() == 1);
  CHECK(q.arrows[0].name == "a");
  CHECK(parseQuiver(serializeQuiver(q)).arrows[0].head == 2);

  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    QuiverPresentation r = randomQuiver(rng);
    QuiverPresentation back = parseQuiver(serializeQuiver(r));
    CHECK(back.vertices == r.vertices);
    REQUIRE(back.arrows.size() == r.arrows.size());
    for (std::size_t i = 0; i < r.arrows.size(); ++i) {
      CHECK(back.arrows[i].name == r.arrows[i].name);
      CHECK(back.arrows[i].tail == r.arrows[i].tail);
      CHECK(back.arrows[i].head == r.arrows[i].head);
    }
  }
}

TEST_CASE("parse errors are positioned and validated") {
  CHECK_THROWS_WITH_AS(parseQuiver("{\"vertices\":[1,"), doctest::Contains("syntax error"),
                       QuiverError);
  CHECK_THROWS_WITH_AS(
      parseQuiver(R"({"vertices":[1],"arrows":[{"name":"a","tail":1,"head":1},{"name":"a","tail":1,"head":1}]})"),
      doctest::Contains("duplicate arrow name 'a'"), QuiverError);
  CHECK_THROWS_WITH_AS(
      parseQuiver(R"({"vertices":[1],"arrows":[{"name":"a","tail":1,"head":7}]})"),
      doctest::Contains("missing head vertex"), QuiverError);
  CHECK_THROWS_AS(parseQuiver(R"({"vertices":[1],"arrows":[{"name":"b*","tail":1,"head":1}]})"),
                  QuiverError);
}

TEST_CASE("explicit order key reorders arrows") {
  std::string text =
      R"({"vertices":[1],"arrows":[{"name":"a","tail":1,"head":1},{"name":"b","tail":1,"head":1}],"order":["b","a"]})";
  QuiverPresentation q = parseQuiver(text);
  CHECK(q.arrows[0].name == "b");
  CHECK(q.arrows[1].name == "a");
}
