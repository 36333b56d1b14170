#pragma once

#include <memory>
#include <vector>

#include "serialcob/exactlinalg.hpp"
#include "serialcob/words.hpp"

namespace serialcob {

// Linear representation of a series: alpha(w) = mu . psi(w) . lambda with
// psi(t1...tm) = psi(t1) psi(t2) ... psi(tm) (letters read left to right).
struct LinearRep {
  Alphabet alphabet;
  std::size_t dim = 0;
  Vec lambda;               // dim entries (column)
  Vec mu;                   // dim entries (row)
  std::vector<Matrix> psi;  // one dim x dim matrix per letter

  void validate() const;  // throws ValidationError on shape problems
};

LinearRep zero_rep(const Alphabet& alphabet);            // dim 0
LinearRep const_rep(const Alphabet& alphabet, Scalar c); // c * (characteristic of the empty word)
LinearRep letter_rep(const Alphabet& alphabet, std::size_t letter);

Matrix psi_of_word(const LinearRep& rep, const Word& w);
Scalar eval_rep(const LinearRep& rep, const Word& w);

LinearRep rep_sum(const LinearRep& a, const LinearRep& b);
LinearRep rep_scale(const Scalar& c, const LinearRep& a);
LinearRep rep_product(const LinearRep& a, const LinearRep& b);
LinearRep rep_kleene_plus(const LinearRep& a);  // throws ImproperKleene if a(empty) != 0

struct RationalExpr {
  enum class Kind { Zero, One, Letter, Scale, Sum, Product, KleenePlus };
  Kind kind = Kind::Zero;
  std::size_t letter = 0;                 // Kind::Letter
  Scalar coeff;                           // Kind::Scale
  std::vector<RationalExpr> args;         // children (1 for Scale/KleenePlus, 2 for Sum/Product)

  static RationalExpr zero();
  static RationalExpr one();
  static RationalExpr lit(std::size_t letter);
  static RationalExpr scale(Scalar c, RationalExpr e);
  static RationalExpr sum(RationalExpr a, RationalExpr b);
  static RationalExpr product(RationalExpr a, RationalExpr b);
  static RationalExpr kleene_plus(RationalExpr e);
};

LinearRep expr_to_rep(const RationalExpr& e, const Alphabet& alphabet);

struct SeriesPair {
  LinearRep bullet;  // evaluates floating intervals
  LinearRep circ;    // evaluates circles; must be symmetric

  Scalar eval_bullet(const Word& w) const { return eval_rep(bullet, w); }
  Scalar eval_circ(const CyclicWord& v) const { return eval_rep(circ, v.representative); }
};

}  // namespace serialcob
