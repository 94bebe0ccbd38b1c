#include "ncqh/diagram.hpp"

#include "ncqh/derivation.hpp"
#include "ncqh/forms.hpp"

namespace ncqh {

Element DiagramMaps::S(const Element& delta) const { return cE.apply(S0.apply(eD.apply(delta))); }

Element DiagramMaps::T(const Element& eta) const { return cdPhi.apply(T0.apply(eOmega.apply(eta))); }

namespace {

DiagramMaps buildCommon(const QPStructure& s) {
  const Algebra& alg = *s.alg;
  DiagramMaps d;
  d.alg = &alg;
  auto init = [&](BimodMap& m, FreeMod src, FreeMod dst) {
    m.alg = &alg;
    m.src = src;
    m.dst = dst;
  };
  init(d.cE, FreeMod::AEA, FreeMod::DA);
  init(d.cdPhi, FreeMod::AdPhiA, FreeMod::OmegaA);
  init(d.eOmega, FreeMod::OmegaA, FreeMod::AEStarA);
  init(d.eD, FreeMod::DA, FreeMod::AdPhiStarA);
  init(d.iotaDPhi, FreeMod::AdPhiA, FreeMod::AEA);
  init(d.iotaEA, FreeMod::AEA, FreeMod::AdPhiA);
  init(d.jDPhiS, FreeMod::AdPhiStarA, FreeMod::AEStarA);
  init(d.jES, FreeMod::AEStarA, FreeMod::AdPhiStarA);
  init(d.S0, FreeMod::AdPhiStarA, FreeMod::AEA);
  init(d.T0, FreeMod::AEStarA, FreeMod::AdPhiA);
  init(d.iP, FreeMod::OmegaA, FreeMod::DA);
  init(d.iOmega, FreeMod::DA, FreeMod::OmegaA);

  for (int p : alg.vertices()) {
    const PhiComponent& phi = s.phi.at(p);
    d.cE.img[p] = eWordAt(alg, p);
    d.cdPhi.img[p] = dPhi(s, p);
    d.iotaDPhi.img[p] = Rat(1, 2) * (alg.genE(p) * phi.elem + phi.elem * alg.genE(p));
    d.iotaEA.img[p] = Rat(1, 2) * (phi.inv * alg.genDPhi(p) + alg.genDPhi(p) * phi.inv);
    d.jDPhiS.img[p] = Rat(-1, 2) * (phi.inv * alg.genEStar(p) + alg.genEStar(p) * phi.inv);
    d.jES.img[p] = Rat(-1, 2) * (phi.elem * alg.genDPhiStar(p) + alg.genDPhiStar(p) * phi.elem);
    d.S0.img[p] = alg.genE(p) * phi.inv - phi.inv * alg.genE(p);
    d.T0.img[p] = phi.inv * alg.genDPhi(p) - alg.genDPhi(p) * phi.inv;
  }
  for (int c = 0; c < alg.arrowCount(); ++c) {
    int t = alg.dquiver().tail(c), h = alg.dquiver().head(c);
    d.eOmega.img[c] = alg.arrow(c) * alg.genEStar(h) - alg.genEStar(t) * alg.arrow(c);
    // e(delta) = delta(Phi)'' dPhi* delta(Phi)'
    Element img(&alg);
    DDeriv pc = partialD(alg, c);
    for (int p : alg.vertices()) {
      Tensor v = applyD(pc, s.phi.at(p).elem);
      for (const auto& [legs, coef] : v.terms()) {
        Element l(&alg), r(&alg);
        l.addTerm(legs[0], Rat(1));
        r.addTerm(legs[1], Rat(1));
        img += coef * (r * alg.genDPhiStar(p) * l);
      }
    }
    d.eD.img[c] = img;
    d.iP.img[c] = iotaP(s, alg.diff(c));
  }
  return d;
}

}  // namespace

DiagramMaps buildDiagram(const QPStructure& s) { return buildCommon(s); }

DiagramMaps buildDiagram(const QPStructure& s, const Element& omega) {
  DiagramMaps d = buildCommon(s);
  d.hasOmega = true;
  for (int c = 0; c < s.alg->arrowCount(); ++c)
    d.iOmega.img[c] = iotaForm(partialD(*s.alg, c), omega);
  return d;
}

namespace {

bool mapsAgree(const Algebra& alg, FreeMod basisOf, const std::string& label,
               const std::function<Element(const Element&)>& top,
               const std::function<Element(const Element&)>& bottom, std::string* residual) {
  for (int idx : basisIndices(alg, basisOf)) {
    Element b = basisElement(alg, basisOf, idx);
    Element diff = top(b) - bottom(b);
    if (!diff.isZero()) {
      *residual = label + " fails on basis " + std::to_string(idx) + ": " + diff.str();
      return false;
    }
  }
  return true;
}

}  // namespace

CheckResult checkLemma72(const DiagramMaps& d) {
  const Algebra& alg = *d.alg;
  std::string res;
  std::vector<std::string> details;

  // Commutation of the six squares of one period (the rows repeat with the
  // two vertical families alternating).
  struct Square {
    std::string name;
    FreeMod basis;
    std::function<Element(const Element&)> top, bottom;
  };
  std::vector<Square> squares;
  squares.push_back({"j e = e iota(P) on Omega_A", FreeMod::OmegaA,
                     [&](const Element& x) { return d.jES.apply(d.eOmega.apply(x)); },
                     [&](const Element& x) { return d.eD.apply(d.iP.apply(x)); }});
  squares.push_back({"iota T0 = S0 j on AE*A", FreeMod::AEStarA,
                     [&](const Element& x) { return d.iotaDPhi.apply(d.T0.apply(x)); },
                     [&](const Element& x) { return d.S0.apply(d.jES.apply(x)); }});
  squares.push_back({"iota(P) c = c iota on AdPhiA", FreeMod::AdPhiA,
                     [&](const Element& x) { return d.iP.apply(d.cdPhi.apply(x)); },
                     [&](const Element& x) { return d.cE.apply(d.iotaDPhi.apply(x)); }});
  if (d.hasOmega) {
    squares.push_back({"j e = e iota(omega) on D_A", FreeMod::DA,
                       [&](const Element& x) { return d.jDPhiS.apply(d.eD.apply(x)); },
                       [&](const Element& x) { return d.eOmega.apply(d.iOmega.apply(x)); }});
    squares.push_back({"iota S0 = T0 j on AdPhi*A", FreeMod::AdPhiStarA,
                       [&](const Element& x) { return d.iotaEA.apply(d.S0.apply(x)); },
                       [&](const Element& x) { return d.T0.apply(d.jDPhiS.apply(x)); }});
    squares.push_back({"iota(omega) c = c iota on AEA", FreeMod::AEA,
                       [&](const Element& x) { return d.iOmega.apply(d.cE.apply(x)); },
                       [&](const Element& x) { return d.cdPhi.apply(d.iotaEA.apply(x)); }});
  }
  for (const auto& sq : squares) {
    if (!mapsAgree(alg, sq.basis, sq.name, sq.top, sq.bottom, &res))
      return CheckResult::fail("lemma72", res);
    details.push_back("square: " + sq.name);
  }

  // (7.2-38): 1/4 gamma beta alpha + epsilon delta = 1 for the four starts
  // whose verticals avoid iota(P), iota(omega).
  struct Config {
    std::string name;
    FreeMod basis;
    std::function<Element(const Element&)> horiz3, vert2;
  };
  std::vector<Config> configs;
  configs.push_back({"start AE*A", FreeMod::AEStarA,
                     [&](const Element& x) { return d.eOmega.apply(d.cdPhi.apply(d.T0.apply(x))); },
                     [&](const Element& x) { return d.jDPhiS.apply(d.jES.apply(x)); }});
  configs.push_back({"start AdPhiA", FreeMod::AdPhiA,
                     [&](const Element& x) { return d.T0.apply(d.eOmega.apply(d.cdPhi.apply(x))); },
                     [&](const Element& x) { return d.iotaEA.apply(d.iotaDPhi.apply(x)); }});
  configs.push_back({"start AdPhi*A", FreeMod::AdPhiStarA,
                     [&](const Element& x) { return d.eD.apply(d.cE.apply(d.S0.apply(x))); },
                     [&](const Element& x) { return d.jES.apply(d.jDPhiS.apply(x)); }});
  configs.push_back({"start AEA", FreeMod::AEA,
                     [&](const Element& x) { return d.S0.apply(d.eD.apply(d.cE.apply(x))); },
                     [&](const Element& x) { return d.iotaDPhi.apply(d.iotaEA.apply(x)); }});
  for (const auto& cfg : configs) {
    for (int idx : basisIndices(alg, cfg.basis)) {
      Element b = basisElement(alg, cfg.basis, idx);
      Element lhs = Rat(1, 4) * cfg.horiz3(b) + cfg.vert2(b);
      if (!(lhs == b))
        return CheckResult::fail("lemma72",
                                 cfg.name + " identity fails on basis " + std::to_string(idx) +
                                     ": " + (lhs - b).str());
    }
    details.push_back("quarter-identity: " + cfg.name);
  }
  CheckResult r = CheckResult::ok("lemma72");
  r.details = details;
  return r;
}

CheckResult checkProp74(const DiagramMaps& d) {
  const Algebra& alg = *d.alg;
  if (!d.hasOmega) return CheckResult::fail("prop74", "omega required");
  auto iP = [&](const Element& x) { return d.iP.apply(x); };
  auto iW = [&](const Element& x) { return d.iOmega.apply(x); };

  // (7.5-42) iota(P) iota(omega) = 1 - 1/4 S on the D_A basis
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element b = alg.partial(c);
    Element lhs = iP(iW(b)) + Rat(1, 4) * d.S(b);
    if (!(lhs == b))
      return CheckResult::fail("prop74", "(7.5-42) fails on D(" + alg.dquiver().name(c) +
                                             "): " + (lhs - b).str());
  }
  // (7.6-43) iota(omega) iota(P) = 1 - 1/4 T on the Omega_A basis
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element b = alg.diff(c);
    Element lhs = iW(iP(b)) + Rat(1, 4) * d.T(b);
    if (!(lhs == b))
      return CheckResult::fail("prop74", "(7.6-43) fails on d(" + alg.dquiver().name(c) +
                                             "): " + (lhs - b).str());
  }
  // (7.7-44) P-bar omega-bar = id on D_A + AdPhiA
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element b = alg.partial(c);
    Element x = d.iOmega.apply(b);
    Element y = Rat(1, 4) * d.S0.apply(d.eD.apply(b));
    Element first = d.iP.apply(x) + d.cE.apply(y);
    Element second = Rat(1, 4) * d.T0.apply(d.eOmega.apply(x)) - d.iotaEA.apply(y);
    if (!(first == b) || !second.isZero())
      return CheckResult::fail("prop74", "(7.7-44) fails on D(" + alg.dquiver().name(c) + ")");
  }
  for (int p : alg.vertices()) {
    Element b = alg.genDPhi(p);
    Element x = d.cdPhi.apply(b);
    Element y = Rat(-1) * d.iotaDPhi.apply(b);
    Element first = d.iP.apply(x) + d.cE.apply(y);
    Element second = Rat(1, 4) * d.T0.apply(d.eOmega.apply(x)) - d.iotaEA.apply(y);
    if (!first.isZero() || !(second == b))
      return CheckResult::fail("prop74", "(7.7-44) fails on dPhi_" + std::to_string(p));
  }
  // (7.8-45) omega-bar P-bar = id on Omega_A + AEA
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element b = alg.diff(c);
    Element x = d.iP.apply(b);
    Element y = Rat(1, 4) * d.T0.apply(d.eOmega.apply(b));
    Element first = d.iOmega.apply(x) + d.cdPhi.apply(y);
    Element second = Rat(1, 4) * d.S0.apply(d.eD.apply(x)) - d.iotaDPhi.apply(y);
    if (!(first == b) || !second.isZero())
      return CheckResult::fail("prop74", "(7.8-45) fails on d(" + alg.dquiver().name(c) + ")");
  }
  for (int p : alg.vertices()) {
    Element b = alg.genE(p);
    Element x = d.cE.apply(b);
    Element y = Rat(-1) * d.iotaEA.apply(b);
    Element first = d.iOmega.apply(x) + d.cdPhi.apply(y);
    Element second = Rat(1, 4) * d.S0.apply(d.eD.apply(x)) - d.iotaDPhi.apply(y);
    if (!first.isZero() || !(second == b))
      return CheckResult::fail("prop74", "(7.8-45) fails on E_" + std::to_string(p));
  }
  // P-tilde omega-tilde block identity on D_A + Omega_A:
  // omega-tilde (delta, eta) = (iW delta + eta, 1/4 S delta - iP eta)
  // P-tilde (x, y) = (iP x + y, 1/4 T x - iW y)
  for (int c = 0; c < alg.arrowCount(); ++c) {
    // basis (D(c), 0)
    Element x = iW(alg.partial(c));
    Element y = Rat(1, 4) * d.S(alg.partial(c));
    Element first = iP(x) + y;
    Element second = Rat(1, 4) * d.T(x) - iW(y);
    if (!(first == alg.partial(c)) || !second.isZero())
      return CheckResult::fail("prop74", "tilde product fails on (D(" + alg.dquiver().name(c) + "),0)");
    // basis (0, d(c))
    Element x2 = alg.diff(c);
    Element y2 = Rat(-1) * iP(alg.diff(c));
    Element first2 = iP(x2) + y2;
    Element second2 = Rat(1, 4) * d.T(x2) - iW(y2);
    if (!first2.isZero() || !(second2 == alg.diff(c)))
      return CheckResult::fail("prop74", "tilde product fails on (0,d(" + alg.dquiver().name(c) + "))");
  }
  // Remark 7.6 unitarity: <omega-tilde x, y> = <x, P-tilde y> for the
  // symmetric pairing <(delta,eta),(delta',eta')> = <delta,eta'> + <delta',eta>,
  // with the endomorphism forms
  // omega-tilde = [[1/4 S, -iP],[iW, 1]], P-tilde = [[1, iP],[-iW, 1/4 T]].
  auto pairSym = [&](const Element& da, const Element& oa, const Element& db, const Element& ob) {
    Tensor t(&alg, 2);
    if (!da.isZero() && !ob.isZero()) t += pairEval(da, ob);
    if (!db.isZero() && !oa.isZero()) t += pairEval(db, oa);
    return t;
  };
  std::vector<std::pair<Element, Element>> basisDO;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    basisDO.push_back({alg.partial(c), alg.zero()});
    basisDO.push_back({alg.zero(), alg.diff(c)});
  }
  for (const auto& [xd, xo] : basisDO)
    for (const auto& [yd, yo] : basisDO) {
      Element txd = Rat(1, 4) * (xd.isZero() ? alg.zero() : d.S(xd)) - (xo.isZero() ? alg.zero() : iP(xo));
      Element txo = (xd.isZero() ? alg.zero() : iW(xd)) + xo;
      Element tyd = yd + (yo.isZero() ? alg.zero() : iP(yo));
      Element tyo = Rat(-1) * (yd.isZero() ? alg.zero() : iW(yd)) +
                    Rat(1, 4) * (yo.isZero() ? alg.zero() : d.T(yo));
      Tensor lhs = pairSym(txd, txo, yd, yo);
      Tensor rhs = pairSym(xd, xo, tyd, tyo);
      if (!(lhs == rhs)) return CheckResult::fail("prop74", "Remark 7.6 unitarity fails");
    }
  CheckResult r = CheckResult::ok("prop74");
  r.details = {"(7.5-42)", "(7.6-43)", "(7.7-44)", "(7.8-45)", "tilde block identity",
               "Remark 7.6 unitarity"};
  return r;
}

}  // namespace ncqh
