#include "serialcob/series.hpp"

#include "serialcob/errors.hpp"

namespace serialcob {

void LinearRep::validate() const {
  if (lambda.size() != dim || mu.size() != dim)
    throw ValidationError("linear rep: lambda/mu size must equal dim");
  if (psi.size() != alphabet.size())
    throw ValidationError("linear rep: one psi matrix per letter required");
  for (const auto& m : psi)
    if (m.rows != dim || m.cols != dim)
      throw ValidationError("linear rep: psi matrices must be dim x dim");
}

LinearRep zero_rep(const Alphabet& alphabet) {
  LinearRep r;
  r.alphabet = alphabet;
  r.dim = 0;
  r.psi.assign(alphabet.size(), Matrix(0, 0));
  return r;
}

LinearRep const_rep(const Alphabet& alphabet, Scalar c) {
  LinearRep r;
  r.alphabet = alphabet;
  r.dim = 1;
  r.lambda = {std::move(c)};
  r.mu = {Scalar(1)};
  r.psi.assign(alphabet.size(), Matrix(1, 1));
  return r;
}

LinearRep letter_rep(const Alphabet& alphabet, std::size_t letter) {
  LinearRep r;
  r.alphabet = alphabet;
  r.dim = 2;
  r.lambda = {Scalar(0), Scalar(1)};
  r.mu = {Scalar(1), Scalar(0)};
  r.psi.assign(alphabet.size(), Matrix(2, 2));
  r.psi[letter].at(0, 1) = 1;
  return r;
}

Matrix psi_of_word(const LinearRep& rep, const Word& w) {
  Matrix m = Matrix::identity(rep.dim);
  for (auto t : w.letters) m = m * rep.psi[t];
  return m;
}

Scalar eval_rep(const LinearRep& rep, const Word& w) {
  // row-state evaluation: mu, then one letter at a time
  Vec x = rep.mu;
  for (auto t : w.letters) {
    const Matrix& m = rep.psi[t];
    Vec y(rep.dim, Scalar(0));
    for (std::size_t i = 0; i < rep.dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rep.dim; ++j) y[j] += x[i] * m.at(i, j);
    }
    x = std::move(y);
  }
  Scalar v(0);
  for (std::size_t i = 0; i < rep.dim; ++i) v += x[i] * rep.lambda[i];
  return v;
}

namespace {

void require_same_alphabet(const LinearRep& a, const LinearRep& b) {
  if (!(a.alphabet == b.alphabet)) throw ValidationError("alphabet mismatch between series");
}

}  // namespace

LinearRep rep_sum(const LinearRep& a, const LinearRep& b) {
  require_same_alphabet(a, b);
  LinearRep r;
  r.alphabet = a.alphabet;
  r.dim = a.dim + b.dim;
  r.lambda.resize(r.dim);
  r.mu.resize(r.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    r.lambda[i] = a.lambda[i];
    r.mu[i] = a.mu[i];
  }
  for (std::size_t i = 0; i < b.dim; ++i) {
    r.lambda[a.dim + i] = b.lambda[i];
    r.mu[a.dim + i] = b.mu[i];
  }
  for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
    Matrix m(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.psi[s].at(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.psi[s].at(i, j);
    r.psi.push_back(std::move(m));
  }
  return r;
}

LinearRep rep_scale(const Scalar& c, const LinearRep& a) {
  LinearRep r = a;
  for (auto& x : r.lambda) x *= c;
  return r;
}

// Product: the state tracks (row of a, accumulated row of b); a split
// happens when a's value so far is fed into b through lambda_a mu_b.
LinearRep rep_product(const LinearRep& a, const LinearRep& b) {
  require_same_alphabet(a, b);
  LinearRep r;
  r.alphabet = a.alphabet;
  r.dim = a.dim + b.dim;
  // mu' = (mu_a, (mu_a lambda_a) mu_b)
  r.mu.resize(r.dim);
  Scalar a_empty(0);
  for (std::size_t i = 0; i < a.dim; ++i) {
    r.mu[i] = a.mu[i];
    a_empty += a.mu[i] * a.lambda[i];
  }
  for (std::size_t i = 0; i < b.dim; ++i) r.mu[a.dim + i] = a_empty * b.mu[i];
  // lambda' = (0, lambda_b)
  r.lambda.assign(r.dim, Scalar(0));
  for (std::size_t i = 0; i < b.dim; ++i) r.lambda[a.dim + i] = b.lambda[i];
  // psi'(t) = [[psi_a(t), psi_a(t) lambda_a mu_b], [0, psi_b(t)]]
  for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
    Matrix m(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.psi[s].at(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.psi[s].at(i, j);
    for (std::size_t i = 0; i < a.dim; ++i) {
      Scalar reach(0);  // (psi_a(t) lambda_a)_i
      for (std::size_t k = 0; k < a.dim; ++k) reach += a.psi[s].at(i, k) * a.lambda[k];
      for (std::size_t j = 0; j < b.dim; ++j) m.at(i, a.dim + j) = reach * b.mu[j];
    }
    r.psi.push_back(std::move(m));
  }
  return r;
}

// Kleene plus of a proper series: psi'(t) = psi(t) (I + lambda mu), same dim.
LinearRep rep_kleene_plus(const LinearRep& a) {
  if (eval_rep(a, Word{}) != 0)
    throw ImproperKleene("kleene plus requires a proper series (zero constant term)");
  LinearRep r = a;
  Matrix restart = Matrix::identity(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) restart.at(i, j) += a.lambda[i] * a.mu[j];
  for (std::size_t s = 0; s < a.alphabet.size(); ++s) r.psi[s] = a.psi[s] * restart;
  return r;
}

RationalExpr RationalExpr::zero() { return {}; }

RationalExpr RationalExpr::one() {
  RationalExpr e;
  e.kind = Kind::One;
  return e;
}

RationalExpr RationalExpr::lit(std::size_t letter) {
  RationalExpr e;
  e.kind = Kind::Letter;
  e.letter = letter;
  return e;
}

RationalExpr RationalExpr::scale(Scalar c, RationalExpr arg) {
  RationalExpr e;
  e.kind = Kind::Scale;
  e.coeff = std::move(c);
  e.args.push_back(std::move(arg));
  return e;
}

RationalExpr RationalExpr::sum(RationalExpr a, RationalExpr b) {
  RationalExpr e;
  e.kind = Kind::Sum;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

RationalExpr RationalExpr::product(RationalExpr a, RationalExpr b) {
  RationalExpr e;
  e.kind = Kind::Product;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

RationalExpr RationalExpr::kleene_plus(RationalExpr arg) {
  RationalExpr e;
  e.kind = Kind::KleenePlus;
  e.args.push_back(std::move(arg));
  return e;
}

LinearRep expr_to_rep(const RationalExpr& e, const Alphabet& alphabet) {
  switch (e.kind) {
    case RationalExpr::Kind::Zero:
      return zero_rep(alphabet);
    case RationalExpr::Kind::One:
      return const_rep(alphabet, 1);
    case RationalExpr::Kind::Letter:
      if (e.letter >= alphabet.size()) throw ValidationError("letter index out of range");
      return letter_rep(alphabet, e.letter);
    case RationalExpr::Kind::Scale:
      return rep_scale(e.coeff, expr_to_rep(e.args[0], alphabet));
    case RationalExpr::Kind::Sum:
      return rep_sum(expr_to_rep(e.args[0], alphabet), expr_to_rep(e.args[1], alphabet));
    case RationalExpr::Kind::Product:
      return rep_product(expr_to_rep(e.args[0], alphabet), expr_to_rep(e.args[1], alphabet));
    case RationalExpr::Kind::KleenePlus:
      return rep_kleene_plus(expr_to_rep(e.args[0], alphabet));
  }
  throw ValidationError("unreachable expression kind");
}

}  // namespace serialcob
