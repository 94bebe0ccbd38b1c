#pragma once

#include <functional>

#include "ncqh/derivation.hpp"

namespace ncqh {

/// The double Schouten-Nijenhuys bracket on polyvector fields, of degree -1.
/// Generator values: {{a,b}} = 0, {{D(c), a}} = dc/da, {{D(c), D(c')}} = 0;
/// extended by the graded outer Leibniz rule in the second argument and
/// graded antisymmetry in the first.
Tensor snBracket(const Element& X, const Element& Y);

/// {X, Y} on DA/[DA,DA]: legs multiplied, then cyclically reduced.
Element modBracket(const Element& X, const Element& Y);

using DoubleBracket = std::function<Tensor(const Element&, const Element&)>;

/// The signed cyclic triple bracket. shift is the parity shift of the bracket
/// degree (1 for the Schouten bracket, 0 for double brackets on A).
Tensor tripleBracket(const DoubleBracket& beta, const Element& a, const Element& b,
                     const Element& c, int shift);

/// Double bracket attached to a degree-2 polyvector P: each word of P splits
/// at its two partial symbols into a pair (delta, Delta) and contributes
/// Delta(b)' delta(a)'' (x) delta(a)' Delta(b)'' - delta(b)' Delta(a)'' (x)
/// Delta(a)' delta(b)''.
class PBracket {
 public:
  PBracket() = default;
  explicit PBracket(const Element& P);

  Tensor operator()(const Element& a, const Element& b) const;
  const Algebra* alg() const { return alg_; }

 private:
  struct Summand {
    Rat coef;
    DDeriv delta, Delta;
  };
  const Algebra* alg_ = nullptr;
  std::vector<Summand> summands_;
};

/// Hamiltonian double derivation H_a = beta(a, -), stored by coordinates.
DDeriv hamiltonian(const PBracket& beta, const Element& a);

}  // namespace ncqh
