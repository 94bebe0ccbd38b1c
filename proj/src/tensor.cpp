#include "ncqh/tensor.hpp"

#include <sstream>

namespace ncqh {

void Tensor::addTerm(const std::vector<Word>& t, const Rat& c) {
  if (c.isZero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (!alg_) { alg_ = o.alg_; legs_ = o.legs_; }
  for (const auto& [t, c] : o.terms_) addTerm(t, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (!alg_) { alg_ = o.alg_; legs_ = o.legs_; }
  for (const auto& [t, c] : o.terms_) addTerm(t, -c);
  return *this;
}

Tensor operator*(const Rat& c, Tensor t) {
  if (c.isZero()) return Tensor(t.alg_, t.legs_);
  for (auto& [w, v] : t.terms_) v *= c;
  return t;
}

Tensor Tensor::mulLeg(int i, const Element& e, bool onLeft) const {
  Tensor out(alg_, legs_);
  for (const auto& [t, c] : terms_) {
    Element leg(alg_);
    leg.addTerm(t[i], Rat(1));
    Element prod = onLeft ? e * leg : leg * e;
    for (const auto& [w, pc] : prod.terms()) {
      std::vector<Word> nt = t;
      nt[i] = w;
      out.addTerm(nt, c * pc);
    }
  }
  return out;
}

Tensor Tensor::permuted(const std::vector<int>& perm) const {
  Tensor out(alg_, legs_);
  for (const auto& [t, c] : terms_) {
    // Track Koszul sign by bubble-sorting the legs into place.
    std::vector<int> pos(legs_);
    std::vector<int> deg(legs_);
    for (int i = 0; i < legs_; ++i) {
      pos[i] = perm[i];
      deg[i] = t[i].degree();
    }
    std::vector<Word> cur = t;
    std::vector<int> d = deg;
    int sign = 1;
    for (int i = 0; i < legs_; ++i)
      for (int j = 0; j + 1 < legs_; ++j)
        if (pos[j] > pos[j + 1]) {
          if ((d[j] & 1) && (d[j + 1] & 1)) sign = -sign;
          std::swap(pos[j], pos[j + 1]);
          std::swap(cur[j], cur[j + 1]);
          std::swap(d[j], d[j + 1]);
        }
    out.addTerm(cur, Rat(sign) * c);
  }
  return out;
}

Tensor Tensor::flip() const { return permuted({1, 0}); }

Element Tensor::circContract() const {
  Element out(alg_);
  for (const auto& [t, c] : terms_) {
    int degLast = t.back().degree();
    int degRest = 0;
    for (int i = 0; i + 1 < legs_; ++i) degRest += t[i].degree();
    int sign = ((degLast & 1) && (degRest & 1)) ? -1 : 1;
    Word prod = t.back();
    for (int i = 0; i + 1 < legs_; ++i) prod = concat(prod, t[i]);
    Element nf = alg_->normalWord(prod);
    for (const auto& [w, nc] : nf.terms()) out.addTerm(w, Rat(sign) * c * nc);
  }
  return out;
}

Tensor Tensor::filterDegrees(const std::vector<int>& degs) const {
  Tensor out(alg_, legs_);
  for (const auto& [t, c] : terms_) {
    bool ok = true;
    for (int i = 0; i < legs_ && ok; ++i) ok = t[i].degree() == degs[i];
    if (ok) out.addTerm(t, c);
  }
  return out;
}

Tensor Tensor::outer(const Tensor& o) const {
  Tensor out(alg_, legs_ + o.legs_);
  for (const auto& [t, c] : terms_)
    for (const auto& [s, d] : o.terms_) {
      std::vector<Word> nt = t;
      nt.insert(nt.end(), s.begin(), s.end());
      out.addTerm(nt, c * d);
    }
  return out;
}

std::string Tensor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (c < Rat(0)) os << "-";
      first = false;
    } else {
      os << (c < Rat(0) ? " - " : " + ");
    }
    if (a != Rat(1)) os << a << "·";
    for (int i = 0; i < legs_; ++i) {
      if (i) os << " ⊗ ";
      os << alg_->printWord(t[i]);
    }
  }
  return os.str();
}

Tensor tensorOf(const Element& a, const Element& b) {
  Tensor out(a.alg() ? a.alg() : b.alg(), 2);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.addTerm({wa, wb}, ca * cb);
  return out;
}

Tensor tensorOf(const Element& a, const Element& b, const Element& c) {
  Tensor out(a.alg() ? a.alg() : (b.alg() ? b.alg() : c.alg()), 3);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      for (const auto& [wc, cc] : c.terms()) out.addTerm({wa, wb, wc}, ca * cb * cc);
  return out;
}

Tensor tensorFromElement(const Element& a) {
  Tensor out(a.alg(), 1);
  for (const auto& [w, c] : a.terms()) out.addTerm({w}, c);
  return out;
}

}  // namespace ncqh
