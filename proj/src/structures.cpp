#include "ncqh/structures.hpp"

#include "ncqh/derivation.hpp"
#include "ncqh/forms.hpp"

namespace ncqh {

PhiComponent phiComponentFor(const Algebra& alg, int vertex,
                             const std::vector<std::pair<int, int>>& factors) {
  PhiComponent c;
  c.vertex = vertex;
  c.factors = factors;
  c.elem = alg.idem(vertex);
  c.inv = alg.idem(vertex);
  for (const auto& [arrow, exp] : factors)
    c.elem = c.elem * (exp > 0 ? alg.onePlus(arrow) : alg.inv(arrow));
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    c.inv = c.inv * (it->second > 0 ? alg.inv(it->first) : alg.onePlus(it->first));
  return c;
}

const PBracket& QPStructure::bracket() const {
  if (!bracket_) bracket_ = std::make_shared<PBracket>(P);
  return *bracket_;
}

Element QPStructure::phiElem() const {
  Element out(alg);
  for (const auto& [p, c] : phi) out += c.elem;
  return out;
}

Element QPStructure::phiInvElem() const {
  Element out(alg);
  for (const auto& [p, c] : phi) out += c.inv;
  return out;
}

QPStructure quiverQP(const Algebra& alg) {
  QPStructure s;
  s.alg = &alg;
  Element P(&alg);
  // First sum: eps(c) (1 + c* c) D(c) D(c*) over the double quiver.
  for (int c = 0; c < alg.arrowCount(); ++c) {
    int cs = DoubleQuiver::reverse(c);
    Element term = alg.onePlus(cs) * alg.partial(c) * alg.partial(cs);
    P += Rat(DoubleQuiver::sign(c)) * term;
  }
  // Second sum: e(c) e(b) over ordered pairs c < b, where
  // e(c) = D(c*) c* - c D(c) is the E-contribution of c at its tail.
  std::vector<Element> eArr;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    int cs = DoubleQuiver::reverse(c);
    eArr.push_back(alg.partial(cs) * alg.arrow(cs) - alg.arrow(c) * alg.partial(c));
  }
  for (int c = 0; c < alg.arrowCount(); ++c)
    for (int b = c + 1; b < alg.arrowCount(); ++b) P -= eArr[c] * eArr[b];
  s.P = Rat(1, 2) * P;
  // Phi_p: ordered product of (1 + c c*)^{eps(c)} over arrows with tail p.
  for (int p : alg.vertices()) {
    std::vector<std::pair<int, int>> factors;
    for (int c = 0; c < alg.arrowCount(); ++c)
      if (alg.dquiver().tail(c) == p) factors.push_back({c, DoubleQuiver::sign(c)});
    s.phi[p] = phiComponentFor(alg, p, factors);
  }
  return s;
}

FusedQP fuseStructure(const QPStructure& s, int v, int w) {
  const Algebra& oldAlg = *s.alg;
  VertexGluing gluing = fuseVertices(oldAlg.dquiver().base, v, w);
  FusedQP out;
  out.gluing = gluing;
  out.kept = std::min(v, w);
  out.alg = std::make_shared<Algebra>(makeDouble(gluing.glued));
  const Algebra& alg = *out.alg;
  out.Ev = relabel(eWordAt(oldAlg, v), alg, gluing.vertex_map);
  out.Ew = relabel(eWordAt(oldAlg, w), alg, gluing.vertex_map);
  out.s.alg = &alg;
  out.s.P = relabel(s.P, alg, gluing.vertex_map) - Rat(1, 2) * (out.Ev * out.Ew);
  for (const auto& [p, comp] : s.phi) {
    if (p == v || p == w) continue;
    out.s.phi[p] = phiComponentFor(alg, p, comp.factors);
  }
  // glued vertex: v's factors then w's
  std::vector<std::pair<int, int>> factors = s.phi.at(v).factors;
  const auto& wf = s.phi.at(w).factors;
  factors.insert(factors.end(), wf.begin(), wf.end());
  out.s.phi[out.kept] = phiComponentFor(alg, out.kept, factors);
  return out;
}

CheckResult CheckResult::ok(std::string n, std::string m) {
  CheckResult r;
  r.name = std::move(n);
  r.pass = true;
  r.mode = std::move(m);
  return r;
}

CheckResult CheckResult::fail(std::string n, std::string res, std::string m) {
  CheckResult r;
  r.name = std::move(n);
  r.pass = false;
  r.mode = std::move(m);
  r.residual = std::move(res);
  return r;
}

// {P,P} in the squared convention: the self-bracket of an element along the
// odd quotient Lie bracket is half its bilinear value. This is the reading
// under which the quiver structures satisfy {P,P} = 1/12 E^3; the bilinear
// value equals 1/6 E^3, and the triple-bracket form of the axiom
// (Jacobiator = 1/12 of the E^3 triple bracket) holds either way.
Element selfBracketClass(const Element& P) {
  return Rat(1, 2) * modBracket(P, P);
}

CheckResult checkP1(const QPStructure& s) {
  const Algebra& alg = *s.alg;
  Element pp = selfBracketClass(s.P);
  Element e3 = eWordTotal(alg);
  e3 = e3 * e3 * e3;
  Element residual = pp - Rat(1, 12) * alg.cyclicReduce(e3);
  residual = alg.cyclicReduce(residual);
  if (residual.isZero()) return CheckResult::ok("p1");
  return CheckResult::fail("p1", residual.str());
}

CheckResult checkP2(const QPStructure& s) {
  const Algebra& alg = *s.alg;
  for (const auto& [p, comp] : s.phi) {
    DDeriv h = hamiltonian(s.bracket(), comp.elem);
    Element target = Rat(1, 2) * (comp.elem * eWordAt(alg, p) + eWordAt(alg, p) * comp.elem);
    DDeriv want = derivFromElement(target);
    for (int c = 0; c < alg.arrowCount(); ++c) {
      Tensor diff = h.coord(c) - want.coord(c);
      if (!diff.isZero())
        return CheckResult::fail(
            "p2", "vertex " + std::to_string(p) + ", arrow " + alg.dquiver().name(c) + ": " + diff.str());
    }
  }
  return CheckResult::ok("p2");
}

Element iotaP(const QPStructure& s, const Element& eta) { return iotaPoly(eta, s.P); }

Element dPhi(const QPStructure& s, int vertex) { return d(s.phi.at(vertex).elem); }

}  // namespace ncqh
