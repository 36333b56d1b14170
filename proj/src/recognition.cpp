#include "serialcob/recognition.hpp"

#include <cassert>

#include "serialcob/errors.hpp"

namespace serialcob {

namespace {

Matrix hankel_block(const EvalFn& eval, const std::vector<Word>& words) {
  Matrix m(words.size(), words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) m.at(i, j) = eval(concat(words[i], words[j]));
  return m;
}

}  // namespace

HankelProbe hankel_rank_probe(const EvalFn& eval, const Alphabet& alphabet, std::size_t cap) {
  HankelProbe probe;
  probe.cap = cap;
  std::size_t prev_rank = 0;
  for (std::size_t level = 0;; ++level) {
    std::vector<Word> words = words_up_to(alphabet.size(), level);
    Matrix m = hankel_block(eval, words);
    // Incremental row rank so a runaway probe can bail as soon as the cap is
    // passed instead of reducing the whole block.
    Echelon ech;
    for (std::size_t i = 0; i < m.rows && ech.rank() <= cap; ++i) ech.insert(m.row(i));
    std::size_t rank = ech.rank();
    probe.prefix_words = words;
    probe.suffix_words = std::move(words);
    probe.matrix = std::move(m);
    probe.rank = rank;
    if (rank > cap) {
      probe.status = ProbeStatus::ExceededCap;
      return probe;
    }
    if (level > 0 && rank == prev_rank) {
      probe.status = ProbeStatus::Stabilized;
      return probe;
    }
    prev_rank = rank;
  }
}

HankelProbe hankel_rank_probe(const LinearRep& rep, std::size_t cap) {
  return hankel_rank_probe([&rep](const Word& w) { return eval_rep(rep, w); }, rep.alphabet, cap);
}

namespace {

// Restrict rep to the invariant span of seed columns; generators act by ops.
// Returns the change-of-basis data needed for the quotient representation.
struct Restriction {
  std::vector<Vec> basis;         // columns spanning the invariant subspace
  std::vector<Matrix> projected;  // one per letter, coords of psi(s)*basis_j
};

Restriction restrict_to_closure(const std::vector<Vec>& seeds, const std::vector<Matrix>& ops) {
  Restriction out;
  out.basis = span_closure(seeds, ops);
  std::size_t k = out.basis.size();
  for (const auto& op : ops) {
    Matrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto coords = solve_in_span(out.basis, op.apply(out.basis[j]));
      assert(coords);
      for (std::size_t i = 0; i < k; ++i) m.at(i, j) = (*coords)[i];
    }
    out.projected.push_back(std::move(m));
  }
  return out;
}

}  // namespace

LinearRep minimize(const LinearRep& rep) {
  // pass 1: reachability (span of psi(w) lambda)
  Restriction reach = restrict_to_closure({rep.lambda}, rep.psi);
  if (reach.basis.empty()) return zero_rep(rep.alphabet);
  std::size_t k = reach.basis.size();
  LinearRep mid;
  mid.alphabet = rep.alphabet;
  mid.dim = k;
  auto lam = solve_in_span(reach.basis, rep.lambda);
  assert(lam);
  mid.lambda = *lam;
  mid.mu.assign(k, Scalar(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < rep.dim; ++i) mid.mu[j] += rep.mu[i] * reach.basis[j][i];
  mid.psi = std::move(reach.projected);

  // pass 2: observability = reachability of the transposed representation
  std::vector<Matrix> trans;
  for (const auto& m : mid.psi) trans.push_back(m.transpose());
  Restriction obs = restrict_to_closure({mid.mu}, trans);
  if (obs.basis.empty()) return zero_rep(rep.alphabet);
  std::size_t l = obs.basis.size();
  LinearRep out;
  out.alphabet = rep.alphabet;
  out.dim = l;
  auto mu = solve_in_span(obs.basis, mid.mu);
  assert(mu);
  out.mu = *mu;
  out.lambda.assign(l, Scalar(0));
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t i = 0; i < k; ++i) out.lambda[j] += obs.basis[j][i] * mid.lambda[i];
  for (const auto& m : obs.projected) out.psi.push_back(m.transpose());
  return out;
}

EquivResult equivalent(const LinearRep& a, const LinearRep& b) {
  if (!(a.alphabet == b.alphabet)) throw ValidationError("alphabet mismatch between series");
  LinearRep diff = minimize(rep_sum(a, rep_scale(Scalar(-1), b)));
  if (diff.dim == 0) return {true, std::nullopt};
  // a shortest witness exists among words of length <= dim(a)+dim(b)
  for (std::size_t len = 0; len <= a.dim + b.dim; ++len) {
    for (const Word& w : words_of_length(a.alphabet.size(), len))
      if (eval_rep(diff, w) != 0) return {false, w};
  }
  assert(false && "nonzero minimized difference admits a short witness");
  return {false, std::nullopt};
}

namespace {

Vec vec_of(const Matrix& m) { return m.a; }

Matrix unvec(Vec v, std::size_t n) {
  Matrix m(n, n);
  m.a = std::move(v);
  return m;
}

}  // namespace

SymmetryResult is_symmetric(const LinearRep& rep) {
  std::size_t n = rep.dim;
  if (n == 0) return {true, std::nullopt};
  // basis of the unital algebra generated by the psi(s), tracked by words;
  // children are psi(s) * M, so tracked op lists spell words right-to-left
  std::vector<LinOp> ops;
  for (std::size_t s = 0; s < rep.alphabet.size(); ++s)
    ops.push_back([&rep, s, n](const Vec& v) {
      Matrix m(n, n);
      m.a = v;
      return vec_of(rep.psi[s] * m);
    });
  SpanBasis span = span_closure_tracked({vec_of(Matrix::identity(n))}, ops);
  std::vector<Matrix> mats;
  std::vector<Word> words;
  for (std::size_t i = 0; i < span.basis.size(); ++i) {
    mats.push_back(unvec(span.basis[i], n));
    Word w;
    for (auto it = span.ops[i].rbegin(); it != span.ops[i].rend(); ++it)
      w.letters.push_back(static_cast<std::uint32_t>(*it));
    words.push_back(std::move(w));
  }
  auto pair_value = [&](const Matrix& x, const Matrix& y) {
    Matrix p = x * y;
    Scalar v(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v += rep.mu[i] * p.at(i, j) * rep.lambda[j];
    return v;
  };
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (pair_value(mats[i], mats[j]) != pair_value(mats[j], mats[i]))
        return {false, std::make_pair(words[i], words[j])};
  return {true, std::nullopt};
}

Scalar aver_eval(const LinearRep& rep, const Word& w) {
  if (w.empty()) return eval_rep(rep, w);
  Scalar total(0);
  for (std::size_t k = 0; k < w.size(); ++k) total += eval_rep(rep, rotate_left(w, k));
  return total;
}

// State (P, T) in M_n + M_n with P tracking psi(prefix) and T the partial
// rotation sum; appending t maps (P, T) to (P psi(t), T psi(t) + P lambda mu psi(t)).
// aver(w) = tr(T(w)) for nonempty w, plus an alpha(empty) spike at the empty word.
LinearRep average(const LinearRep& rep) {
  std::size_t n = rep.dim;
  Alphabet alphabet = rep.alphabet;
  Scalar empty_value = eval_rep(rep, Word{});
  if (n == 0) return zero_rep(alphabet);

  std::size_t N = 2 * n * n;
  auto P = [n](std::size_t i, std::size_t j) { return i * n + j; };
  auto T = [n](std::size_t i, std::size_t j) { return n * n + i * n + j; };

  LinearRep big;
  big.alphabet = alphabet;
  big.dim = N;
  big.mu.assign(N, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) big.mu[P(i, i)] = 1;
  big.lambda.assign(N, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) big.lambda[T(i, i)] = 1;
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    const Matrix& ps = rep.psi[s];
    Vec mu_ps(n, Scalar(0));  // row mu * psi(t)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) mu_ps[j] += rep.mu[i] * ps.at(i, j);
    Matrix m(N, N);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          m.at(P(i, k), P(i, j)) += ps.at(k, j);
          m.at(T(i, k), T(i, j)) += ps.at(k, j);
        }
        // (P lambda mu psi(t))_{ij} pulls P_{ik} with weight lambda_k (mu psi(t))_j
        for (std::size_t j = 0; j < n; ++j) m.at(P(i, k), T(i, j)) += rep.lambda[k] * mu_ps[j];
      }
    big.psi.push_back(std::move(m));
  }
  return minimize(rep_sum(big, const_rep(alphabet, empty_value)));
}

}  // namespace serialcob
