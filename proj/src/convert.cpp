#include "ncqh/convert.hpp"

#include "ncqh/derivation.hpp"
#include "ncqh/forms.hpp"

namespace ncqh {

Element expandAEA(const Algebra& alg, const Element& formal) {
  Element out(&alg);
  for (const auto& [w, c] : formal.terms()) {
    Element acc = alg.unit();
    Element piece(&alg);
    // rebuild the word with E_p words substituted for the formal generators
    std::vector<Element> parts;
    Word cur;
    bool found = false;
    for (Sym s : w.syms) {
      if (s.kind == SymKind::GenE) {
        Element pre(&alg);
        if (cur.syms.empty())
          pre = alg.idem(alg.tailOf(s));
        else
          pre.addTerm(cur, Rat(1));
        parts.push_back(pre);
        parts.push_back(eWordAt(alg, s.idx));
        cur = Word();
        found = true;
      } else {
        cur.syms.push_back(s);
      }
    }
    if (!found) throw AlgebraError("formal AEA word lacks an E generator");
    Element post(&alg);
    if (cur.syms.empty())
      post = alg.idem(alg.headOf(w.syms.back()));
    else
      post.addTerm(cur, Rat(1));
    parts.push_back(post);
    Element prod = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) prod = prod * parts[i];
    out += c * prod;
  }
  return out;
}

bool verifyCerts(const QPStructure& s, const P3Certs& certs, std::string* err) {
  const Algebra& alg = *s.alg;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    auto it = certs.cert.find(c);
    if (it == certs.cert.end()) {
      if (err) *err = "missing certificate for arrow " + alg.dquiver().name(c);
      return false;
    }
    Element got = iotaP(s, it->second.first) + expandAEA(alg, it->second.second);
    if (!(got == alg.partial(c))) {
      if (err)
        *err = "certificate for " + alg.dquiver().name(c) + " fails: " +
               (got - alg.partial(c)).str();
      return false;
    }
  }
  return true;
}

namespace {

// Sandwich u E_vertex v with the coefficient folded into u.
struct Sand {
  Element u;
  int vertex;
  Element v;
};

struct CertData {
  Element eta;
  std::vector<Sand> sands;
};

Element applySands(const Algebra& alg, const std::vector<Sand>& sands) {
  Element out(&alg);
  for (const Sand& s : sands) out += s.u * eWordAt(alg, s.vertex) * s.v;
  return out;
}

bool certHolds(const QPStructure& s, int arrow, const CertData& cd) {
  const Algebra& alg = *s.alg;
  Element got = iotaP(s, cd.eta) + applySands(alg, cd.sands);
  return got == alg.partial(arrow);
}

// i_eta of a degree-1 polyvector: the pairing value in A (x) A.
Tensor pairPoly(const Element& eta, const Element& X) { return iContractPoly(eta, X); }

}  // namespace

std::optional<P3Certs> buildQuiverCerts(const QPStructure& target) {
  const Algebra& talg = *target.alg;
  const QuiverPresentation& tq = talg.dquiver().base;
  const int m = static_cast<int>(tq.arrows.size());

  P3Certs out;
  if (m == 0) {
    std::string err;
    return verifyCerts(target, out, &err) ? std::optional<P3Certs>(out) : std::nullopt;
  }

  // Disjoint basic quivers, one per arrow; isolated fresh vertices stand in
  // for arrowless target vertices.
  QuiverPresentation fresh;
  for (int i = 0; i < m; ++i) {
    fresh.vertices.push_back(2 * i + 1);
    fresh.vertices.push_back(2 * i + 2);
    fresh.arrows.push_back({tq.arrows[i].name, 2 * i + 1, 2 * i + 2});
  }
  std::map<int, std::vector<int>> groups;  // target vertex -> ordered fresh labels
  for (int p : tq.vertices) groups[p] = {};
  for (int c = 0; c < talg.arrowCount(); ++c) {
    int i = c / 2;
    if (!DoubleQuiver::isStar(c))
      groups[tq.arrows[i].tail].push_back(2 * i + 1);
    else
      groups[tq.arrows[i].head].push_back(2 * i + 2);
  }
  int extra = 2 * m + 1;
  for (int p : tq.vertices)
    if (groups[p].empty()) {
      fresh.vertices.push_back(extra);
      groups[p] = {extra};
      ++extra;
    }
  std::sort(fresh.vertices.begin(), fresh.vertices.end());

  std::vector<std::shared_ptr<Algebra>> keepAlive;
  auto alg0 = std::make_shared<Algebra>(makeDouble(fresh));
  keepAlive.push_back(alg0);
  QPStructure cur = quiverQP(*alg0);

  // Base certificates: the explicit unit pivots of the basic quiver.
  std::map<int, CertData> certs;
  for (int i = 0; i < m; ++i) {
    const Algebra& a0 = *alg0;
    int c = 2 * i, cs = 2 * i + 1;
    int t = a0.dquiver().tail(c), h = a0.dquiver().head(c);
    CertData forStar;  // D(c*) = iota(P)(g_c d c) - 1/2 (g_c E_t c + g_c c E_h)
    forStar.eta = a0.inv(c) * a0.diff(c);
    forStar.sands.push_back({Rat(-1, 2) * a0.inv(c), t, a0.arrow(c)});
    forStar.sands.push_back({Rat(-1, 2) * (a0.inv(c) * a0.arrow(c)), h, a0.idem(h)});
    CertData forBase;  // D(c) = iota(P)(-d c* g_c) + 1/2 (c* E_t g_c + E_h c* g_c)
    forBase.eta = Rat(-1) * (a0.diff(cs) * a0.inv(c));
    forBase.sands.push_back({Rat(1, 2) * a0.arrow(cs), t, a0.inv(c)});
    forBase.sands.push_back({Rat(1, 2) * a0.idem(h), h, a0.arrow(cs) * a0.inv(c)});
    if (!certHolds(cur, cs, forStar) || !certHolds(cur, c, forBase)) return std::nullopt;
    certs[cs] = std::move(forStar);
    certs[c] = std::move(forBase);
  }

  // Glue each group down to one vertex, transporting the certificates.
  std::map<int, int> groupLabel;  // target vertex -> current label
  for (const auto& [p, G] : groups) {
    int L = G[0];
    for (std::size_t k = 1; k < G.size(); ++k) {
      int B = G[k];
      PhiComponent phiBold = cur.phi.at(B);
      FusedQP fused = fuseStructure(cur, L, B);
      keepAlive.push_back(fused.alg);
      const Algebra& na = *fused.alg;
      int kept = fused.kept;
      const Element &Ev = fused.Ev, &Ew = fused.Ew;

      // Recover E_L (the first Phi-factor's piece) from iota(P_new)(d Phi_B).
      PhiComponent phiB = phiComponentFor(na, kept, phiBold.factors);
      CertData eaCert;
      eaCert.eta = Rat(-1) * (d(phiB.elem) * phiB.inv);
      eaCert.sands.push_back({Rat(1, 2) * na.idem(kept), kept, na.idem(kept)});
      eaCert.sands.push_back({Rat(1, 2) * phiB.elem, kept, phiB.inv});
      {
        Element got = iotaP(fused.s, eaCert.eta) + applySands(na, eaCert.sands);
        if (!(got == Ev)) return std::nullopt;
      }

      std::map<int, CertData> next;
      for (auto& [arrow, cd] : certs) {
        CertData nc;
        nc.eta = relabel(cd.eta, na, fused.gluing.vertex_map);
        std::vector<Sand> marked;
        // correction from the -1/2 Ev Ew term of the fused P:
        // iota_eta(Ev Ew) = t'' E_B t' - s'' E_L s' over the pairing values.
        Tensor T = pairPoly(nc.eta, Ev);
        Tensor S = pairPoly(nc.eta, Ew);
        for (const auto& [legs, coef] : T.terms()) {
          Element u(&na), v(&na);
          u.addTerm(legs[1], coef * Rat(1, 2));
          v.addTerm(legs[0], Rat(1));
          marked.push_back({u, -2 /*marker B*/, v});
        }
        for (const auto& [legs, coef] : S.terms()) {
          Element u(&na), v(&na);
          u.addTerm(legs[1], coef * Rat(-1, 2));
          v.addTerm(legs[0], Rat(1));
          marked.push_back({u, -1 /*marker A*/, v});
        }
        for (const Sand& sd : cd.sands) {
          Element u = relabel(sd.u, na, fused.gluing.vertex_map);
          Element v = relabel(sd.v, na, fused.gluing.vertex_map);
          int p2 = sd.vertex;
          if (p2 == L) marked.push_back({u, -1, v});
          else if (p2 == B) marked.push_back({u, -2, v});
          else marked.push_back({u, p2, v});
        }
        // substitute the markers: A through the recovered certificate,
        // B through E_B = F - E_A.
        for (const Sand& sd : marked) {
          if (sd.vertex >= 0) {
            nc.sands.push_back(sd);
            continue;
          }
          Rat flip(sd.vertex == -1 ? 1 : -1);
          if (sd.vertex == -2) nc.sands.push_back({sd.u, kept, sd.v});
          nc.eta += flip * (sd.u * eaCert.eta * sd.v);
          for (const Sand& es : eaCert.sands)
            nc.sands.push_back({flip * (sd.u * es.u), es.vertex, es.v * sd.v});
        }
        if (!certHolds(fused.s, arrow, nc)) return std::nullopt;
        next[arrow] = std::move(nc);
      }
      certs = std::move(next);
      cur = fused.s;
      L = kept;
    }
    groupLabel[p] = L;
  }

  // Rename the surviving labels to the target labels and verify against the
  // target structure itself.
  std::map<int, int> rename;
  for (const auto& [p, L] : groupLabel) rename[L] = p;
  Element pRenamed = relabel(cur.P, talg, rename);
  if (!talg.cyclicReduce(pRenamed - target.P).isZero()) return std::nullopt;
  for (const auto& [p, comp] : target.phi) {
    Element other = relabel(cur.phi.at(groupLabel.at(p)).elem, talg, rename);
    if (!(other == comp.elem)) return std::nullopt;
  }
  for (const auto& [arrow, cd] : certs) {
    Element eta = relabel(cd.eta, talg, rename);
    Element delta(&talg);
    for (const Sand& sd : cd.sands) {
      Element u = relabel(sd.u, talg, rename);
      Element v = relabel(sd.v, talg, rename);
      delta += u * talg.genE(rename.at(sd.vertex)) * v;
    }
    out.cert[arrow] = {eta, delta};
  }
  std::string err;
  if (!verifyCerts(target, out, &err)) return std::nullopt;
  return out;
}

CheckResult checkP3(const QPStructure& s) {
  auto certs = buildQuiverCerts(s);
  if (!certs)
    return CheckResult::fail("p3", "no symbolic certificate (structure is not fusion-shaped)",
                             "symbolic-unavailable");
  CheckResult r = CheckResult::ok("p3");
  for (const auto& [c, cd] : certs->cert)
    r.details.push_back("D(" + s.alg->dquiver().name(c) + ") = iota(P)(" + cd.first.str() +
                        ") + c(" + cd.second.str() + ")");
  return r;
}

OmegaDerived omegaFromP(const QPStructure& s) {
  const Algebra& alg = *s.alg;
  if (!checkP2(s).pass) throw NonDegeneracyNotEstablished("moment identity (P2) fails");
  auto certs = buildQuiverCerts(s);
  if (!certs) throw NonDegeneracyNotEstablished("no symbolic non-degeneracy certificate");
  DiagramMaps d = buildDiagram(s);

  BimodMap alpha;
  alpha.alg = &alg;
  alpha.src = FreeMod::DA;
  alpha.dst = FreeMod::OmegaA;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    const auto& [eta, deltaFormal] = certs->cert.at(c);
    Element img = eta - Rat(1, 4) * d.T(eta) + d.cdPhi.apply(d.iotaEA.apply(deltaFormal));
    alpha.img[c] = img;
  }
  // Enforced consistency: the defining identities must hold on the whole
  // basis, not only through the certificate combinations.
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element lhs = alpha.apply(d.iP.img.at(c));
    Element rhs = alg.diff(c) - Rat(1, 4) * d.T(alg.diff(c));
    if (!(lhs == rhs))
      throw NonDegeneracyNotEstablished("solved map violates (7.11-48) on d(" +
                                        alg.dquiver().name(c) + ")");
  }
  for (int p : alg.vertices()) {
    Element lhs = alpha.apply(eWordAt(alg, p));
    Element rhs = d.cdPhi.apply(d.iotaEA.apply(alg.genE(p)));
    if (!(lhs == rhs))
      throw NonDegeneracyNotEstablished("solved map violates (7.12-49) at vertex " +
                                        std::to_string(p));
  }
  if (!isAntisymmetric(alpha))
    throw NonDegeneracyNotEstablished("solved map is not anti-symmetric");

  OmegaDerived out;
  out.alphaMap = alpha;
  out.qb.alg = &alg;
  out.qb.omega = omegaFromMap(alpha);
  out.qb.phi = s.phi;
  // Prop 3.1.4 round trip: contraction of the assembled omega returns alpha.
  for (int c = 0; c < alg.arrowCount(); ++c) {
    if (!(iotaForm(partialD(alg, c), out.qb.omega) == alpha.img.at(c)))
      throw NonDegeneracyNotEstablished("round trip of the dual-basis formula failed");
  }
  return out;
}

B3Certs b3CertsFromDiagram(const DiagramMaps& d) {
  const Algebra& alg = *d.alg;
  if (!d.hasOmega) throw NonDegeneracyNotEstablished("omega required for B3 certificates");
  B3Certs out;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element delta = d.iP.img.at(c);
    Element etaFormal = Rat(1, 4) * d.T0.apply(d.eOmega.apply(alg.diff(c)));
    Element got = d.iOmega.apply(delta) + d.cdPhi.apply(etaFormal);
    if (!(got == alg.diff(c)))
      throw NonDegeneracyNotEstablished("(7.6-43) fails on d(" + alg.dquiver().name(c) + ")");
    out.cert[c] = {delta, etaFormal};
  }
  return out;
}

QPStructure pFromOmega(const QBStructure& qb, const B3Certs& certs) {
  const Algebra& alg = *qb.alg;
  // Maps that only need Phi.
  QPStructure phiOnly;
  phiOnly.alg = &alg;
  phiOnly.P = alg.zero();
  phiOnly.phi = qb.phi;
  DiagramMaps d = buildDiagram(phiOnly, qb.omega);

  BimodMap beta;
  beta.alg = &alg;
  beta.src = FreeMod::OmegaA;
  beta.dst = FreeMod::DA;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    const auto& [delta, etaFormal] = certs.cert.at(c);
    // check the certificate against this omega
    Element got = iotaForm(derivFromElement(delta), qb.omega) + d.cdPhi.apply(etaFormal);
    if (!(got == alg.diff(c)))
      throw NonDegeneracyNotEstablished("B3 certificate fails on d(" + alg.dquiver().name(c) + ")");
    beta.img[c] = (delta - Rat(1, 4) * d.S(delta)) + d.cE.apply(d.iotaDPhi.apply(etaFormal));
  }
  // Dual defining identities on the basis.
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element iw = d.iOmega.img.at(c);
    Element lhs = beta.apply(iw);
    Element rhs = alg.partial(c) - Rat(1, 4) * d.S(alg.partial(c));
    if (!(lhs == rhs))
      throw NonDegeneracyNotEstablished("solved map violates the dual (7.11-48) on D(" +
                                        alg.dquiver().name(c) + ")");
  }
  for (int p : alg.vertices()) {
    Element lhs = beta.apply(dPhi(phiOnly, p));
    Element rhs = d.cE.apply(d.iotaDPhi.apply(alg.genDPhi(p)));
    if (!(lhs == rhs))
      throw NonDegeneracyNotEstablished("solved map violates the dual (7.12-49) at vertex " +
                                        std::to_string(p));
  }
  if (!isAntisymmetric(beta)) throw NonDegeneracyNotEstablished("solved map is not anti-symmetric");

  QPStructure out;
  out.alg = &alg;
  out.phi = qb.phi;
  out.P = omegaFromMap(beta);
  return out;
}

CheckResult checkB3(const QBStructure& qb, const QPStructure* compatibleP) {
  if (compatibleP) {
    try {
      DiagramMaps d = buildDiagram(*compatibleP, qb.omega);
      b3CertsFromDiagram(d);
      CheckResult r = CheckResult::ok("b3");
      r.details.push_back("certified through (7.6-43) with unit pivots");
      return r;
    } catch (const NonDegeneracyNotEstablished& e) {
      return CheckResult::fail("b3", e.what());
    }
  }
  return CheckResult::fail("b3", "no symbolic certificate available", "symbolic-unavailable");
}

}  // namespace ncqh
