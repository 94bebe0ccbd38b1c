#include "ncqh/element.hpp"

#include <algorithm>
#include <sstream>

namespace ncqh {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.impl(); }

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(impl_type(s));
    return Rat(impl_type(boost::multiprecision::cpp_int(s.substr(0, slash)),
                         boost::multiprecision::cpp_int(s.substr(slash + 1))));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

void Element::addTerm(const Word& w, const Rat& coef) {
  if (coef.isZero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coef);
  } else {
    it->second += coef;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [w, c] : o.terms_) addTerm(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [w, c] : o.terms_) addTerm(w, -c);
  return *this;
}

Element operator*(const Rat& c, Element e) {
  if (c.isZero()) return Element(e.alg());
  for (auto& [w, v] : e.terms_) v *= c;
  return e;
}

Element Element::operator-() const { return Rat(-1) * (*this); }

Element operator*(const Element& a, const Element& b) {
  const Algebra* alg = a.alg() ? a.alg() : b.alg();
  Element out(alg);
  if (!alg) return out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Element nf = alg->normalWord(concat(wa, wb));
      for (const auto& [w, c] : nf.terms()) out.addTerm(w, ca * cb * c);
    }
  return out;
}

int Element::degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != d) throw AlgebraError("element is not homogeneous");
  return d;
}

bool Element::isHomogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != d) return false;
  return true;
}

Element Element::component(int p, int q) const {
  Element out(alg_);
  for (const auto& [w, c] : terms_)
    if (alg_->tailOf(w) == p && alg_->headOf(w) == q) out.addTerm(w, c);
  return out;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (c < Rat(0)) os << "-";
      first = false;
    } else {
      os << (c < Rat(0) ? " - " : " + ");
    }
    if (a != Rat(1)) os << a << "·";
    os << alg_->printWord(w);
  }
  return os.str();
}

Algebra::Algebra(DoubleQuiver dq) : dq_(std::move(dq)) { dq_.base.validate(); }

int Algebra::tailOf(Sym s) const {
  switch (s.kind) {
    case SymKind::Idem:
    case SymKind::GenE:
    case SymKind::GenEStar:
    case SymKind::GenDPhi:
    case SymKind::GenDPhiStar:
      return s.idx;
    case SymKind::Arrow:
    case SymKind::Diff:
    case SymKind::Inv:
      return dq_.tail(s.idx);
    case SymKind::Partial:
      return dq_.head(s.idx);
  }
  return -1;
}

int Algebra::headOf(Sym s) const {
  switch (s.kind) {
    case SymKind::Idem:
    case SymKind::GenE:
    case SymKind::GenEStar:
    case SymKind::GenDPhi:
    case SymKind::GenDPhiStar:
      return s.idx;
    case SymKind::Arrow:
    case SymKind::Diff:
      return dq_.head(s.idx);
    case SymKind::Inv:
      return dq_.tail(s.idx);
    case SymKind::Partial:
      return dq_.tail(s.idx);
  }
  return -1;
}

bool Algebra::composable(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.syms.size(); ++i)
    if (headOf(w.syms[i]) != tailOf(w.syms[i + 1])) return false;
  return true;
}

Element Algebra::sym(Sym s) const {
  Element e(this);
  e.addTerm(Word({s}), Rat(1));
  return e;
}

Element Algebra::unit() const {
  Element e(this);
  for (int p : vertices()) e += idem(p);
  return e;
}

Element Algebra::onePlus(int c) const {
  return idem(dq_.tail(c)) + arrow(c) * arrow(DoubleQuiver::reverse(c));
}

int Algebra::arrowIdByName(const std::string& name) const {
  for (int id = 0; id < arrowCount(); ++id)
    if (dq_.name(id) == name) return id;
  return -1;
}

// Rewriting. normalWord handles composability and idempotent absorption,
// then defers to normalizeBranches on the filtered word.
Element Algebra::normalWord(const Word& raw) const {
  Element zeroE(this);
  if (raw.syms.empty()) return zeroE;
  if (!composable(raw)) return zeroE;
  Word filtered;
  for (Sym s : raw.syms)
    if (s.kind != SymKind::Idem) filtered.syms.push_back(s);
  if (filtered.syms.empty())  // pure idempotent path
    return sym({SymKind::Idem, tailOf(raw.syms.front())});
  return normalizeBranches(filtered);
}

Element Algebra::normalizeBranches(const Word& w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = nfCache_.find(w);
    if (it != nfCache_.end()) {
      Element e(this);
      e.terms_ = it->second;
      return e;
    }
  }
  const auto& s = w.syms;
  Element result(this);
  bool reduced = false;
  for (std::size_t i = 0; i < s.size() && !reduced; ++i) {
    // R2: c c* g_c -> e_{t(c)} - g_c
    if (i + 2 < s.size() && s[i].kind == SymKind::Arrow && s[i + 1].kind == SymKind::Arrow &&
        s[i + 1].idx == DoubleQuiver::reverse(s[i].idx) && s[i + 2].kind == SymKind::Inv &&
        s[i + 2].idx == s[i].idx) {
      Word shorter, swapped;
      shorter.syms.assign(s.begin(), s.begin() + i);
      swapped.syms = shorter.syms;
      shorter.syms.insert(shorter.syms.end(), s.begin() + i + 3, s.end());
      swapped.syms.push_back({SymKind::Inv, s[i].idx});
      swapped.syms.insert(swapped.syms.end(), s.begin() + i + 3, s.end());
      if (shorter.syms.empty()) shorter.syms.push_back({SymKind::Idem, dq_.tail(s[i].idx)});
      result += normalizeBranches(shorter);
      result -= normalizeBranches(swapped);
      reduced = true;
      break;
    }
    // R4: g_c c -> c g_{c*}
    if (i + 1 < s.size() && s[i].kind == SymKind::Inv && s[i + 1].kind == SymKind::Arrow &&
        s[i + 1].idx == s[i].idx) {
      Word next;
      next.syms.assign(s.begin(), s.begin() + i);
      next.syms.push_back({SymKind::Arrow, s[i].idx});
      next.syms.push_back({SymKind::Inv, DoubleQuiver::reverse(s[i].idx)});
      next.syms.insert(next.syms.end(), s.begin() + i + 2, s.end());
      result = normalizeBranches(next);
      reduced = true;
      break;
    }
  }
  if (!reduced) {
    result = Element(this);
    result.addTerm(w, Rat(1));
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    nfCache_.emplace(w, result.terms_);
  }
  return result;
}

namespace {
// Rotations of w with Koszul signs: w = sign_k * rot_k(w) mod commutators.
std::vector<std::pair<Word, int>> rotationsOf(const Word& w) {
  std::vector<std::pair<Word, int>> rots;
  Word cur = w;
  int sign = 1;
  int total = w.degree();
  for (std::size_t k = 0; k < w.syms.size(); ++k) {
    rots.emplace_back(cur, sign);
    Sym last = cur.syms.back();
    int dLast = symOdd(last) ? 1 : 0;
    int dRest = total - dLast;
    cur.syms.pop_back();
    cur.syms.insert(cur.syms.begin(), last);
    if (dLast && (dRest & 1)) sign = -sign;
  }
  return rots;
}
}  // namespace

namespace {
// Length-preserving neighbours of a word inside its cyclic class: rotations
// (with Koszul signs) and the star-swap move g_c c <-> c g_{c*} in both
// directions. The closure under these is symmetric, which makes the chosen
// representative independent of which class member we start from.
std::vector<std::pair<Word, int>> cyclicNeighbours(const Word& u) {
  std::vector<std::pair<Word, int>> out = rotationsOf(u);
  const auto& s = u.syms;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].kind == SymKind::Inv && s[i + 1].kind == SymKind::Arrow && s[i + 1].idx == s[i].idx) {
      Word v = u;
      v.syms[i] = {SymKind::Arrow, s[i].idx};
      v.syms[i + 1] = {SymKind::Inv, DoubleQuiver::reverse(s[i].idx)};
      out.emplace_back(v, 1);
    }
    if (s[i].kind == SymKind::Arrow && s[i + 1].kind == SymKind::Inv &&
        s[i + 1].idx == DoubleQuiver::reverse(s[i].idx)) {
      Word v = u;
      v.syms[i] = {SymKind::Inv, s[i].idx};
      v.syms[i + 1] = {SymKind::Arrow, s[i].idx};
      out.emplace_back(v, 1);
    }
  }
  return out;
}

// True when the word contains the shortening redex c c* g_c.
bool hasR2(const Word& u) {
  const auto& s = u.syms;
  for (std::size_t i = 0; i + 2 < s.size(); ++i)
    if (s[i].kind == SymKind::Arrow && s[i + 1].kind == SymKind::Arrow &&
        s[i + 1].idx == DoubleQuiver::reverse(s[i].idx) && s[i + 2].kind == SymKind::Inv &&
        s[i + 2].idx == s[i].idx)
      return true;
  return false;
}

bool hasR4(const Word& u) {
  const auto& s = u.syms;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i].kind == SymKind::Inv && s[i + 1].kind == SymKind::Arrow && s[i + 1].idx == s[i].idx)
      return true;
  return false;
}
}  // namespace

// Cyclic canonicalization of a single normal-form closed word. The cyclic
// class is explored through the symmetric same-length closure (rotations and
// star-swaps). If any state carries the shortening redex, the minimal such
// state exits deterministically through the linear rewriter and the parts
// recurse; otherwise the representative is the minimal redex-free state with
// its accumulated sign. A state reachable with both signs is 2-torsion and
// the class vanishes over the rationals.
Element Algebra::cyclicWord(const Word& w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cycCache_.find(w);
    if (it != cycCache_.end()) {
      Element e(this);
      e.terms_ = it->second;
      return e;
    }
  }
  Element result(this);
  std::map<Word, int> visited;  // state -> sign s with class(w) = s * class(state)
  std::vector<std::pair<Word, int>> queue{{w, 1}};
  bool torsion = false;
  while (!queue.empty() && !torsion) {
    auto [u, s] = queue.back();
    queue.pop_back();
    auto it = visited.find(u);
    if (it != visited.end()) {
      if (it->second != s) torsion = true;
      continue;
    }
    if (visited.size() > 200000) throw AlgebraError("cyclic closure exceeded size bound");
    visited.emplace(u, s);
    for (const auto& [v, sk] : cyclicNeighbours(u)) queue.emplace_back(v, s * sk);
  }
  if (torsion) {
    result = Element(this);
  } else {
    const Word* exit = nullptr;
    for (const auto& [u, s] : visited)
      if (hasR2(u) && (!exit || u < *exit)) exit = &u;
    if (exit) {
      Element nf = normalWord(*exit);
      int s = visited.at(*exit);
      for (const auto& [rw, rc] : nf.terms()) {
        if (rw.size() >= exit->size()) throw AlgebraError("cyclic rewrite did not shorten");
        Element sub = cyclicWord(rw);
        for (const auto& [sw, sc] : sub.terms()) result.addTerm(sw, Rat(s) * rc * sc);
      }
    } else {
      const Word* best = nullptr;
      for (const auto& [u, s] : visited)
        if (!hasR4(u) && (!best || u < *best)) best = &u;
      if (!best) throw AlgebraError("cyclic class has no redex-free representative");
      result.addTerm(*best, Rat(visited.at(*best)));
    }
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    cycCache_.emplace(w, result.terms_);
  }
  return result;
}

Element Algebra::cyclicReduce(const Element& x) const {
  Element out(this);
  for (const auto& [w, c] : x.terms()) {
    if (!closed(w)) continue;
    Element cw = cyclicWord(w);
    for (const auto& [rw, rc] : cw.terms()) out.addTerm(rw, c * rc);
  }
  return out;
}

std::string Algebra::printSym(Sym s) const {
  switch (s.kind) {
    case SymKind::Idem: return "e_" + std::to_string(s.idx);
    case SymKind::Arrow: return dq_.name(s.idx);
    case SymKind::Inv: return "g_{" + dq_.name(s.idx) + "}";
    case SymKind::Diff: return "d(" + dq_.name(s.idx) + ")";
    case SymKind::Partial: return "D(" + dq_.name(s.idx) + ")";
    case SymKind::GenE: return "E_" + std::to_string(s.idx);
    case SymKind::GenEStar: return "E*_" + std::to_string(s.idx);
    case SymKind::GenDPhi: return "dPhi_" + std::to_string(s.idx);
    case SymKind::GenDPhiStar: return "dPhi*_" + std::to_string(s.idx);
  }
  return "?";
}

std::string Algebra::printWord(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.syms.size(); ++i) {
    if (i) out += "·";
    out += printSym(w.syms[i]);
  }
  return out;
}

Element relabel(const Element& x, const Algebra& target, const std::map<int, int>& vertexMap) {
  Element out(&target);
  for (const auto& [w, c] : x.terms()) {
    Word nw = w;
    for (Sym& s : nw.syms) {
      if (s.kind == SymKind::Idem || s.kind >= SymKind::GenE) {
        auto it = vertexMap.find(s.idx);
        if (it != vertexMap.end()) s.idx = it->second;
      }
    }
    Element nf = target.normalWord(nw);
    for (const auto& [rw, rc] : nf.terms()) out.addTerm(rw, c * rc);
  }
  return out;
}

}  // namespace ncqh
