#include "serialcob/gligible.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "serialcob/errors.hpp"

namespace serialcob {

namespace {

std::size_t g_gram_threads = 1;

std::vector<Morphism> lifted_basis(const SignSeq& src, const SignSeq& tgt,
                                   const std::vector<SkeinBasisId>& basis,
                                   const SyntacticData& data, Mode mode) {
  std::vector<Morphism> out;
  out.reserve(basis.size());
  for (const SkeinBasisId& id : basis) {
    SkeinMorphism m = zero_skein(src, tgt, mode);
    m.add(id, Scalar(1));
    out.push_back(lift(m, data));
  }
  return out;
}

}  // namespace

GramReport gram_matrix(const SignSeq& eps, const SignSeq& eps_prime, const SyntacticData& data,
                       const SeriesPair& pair, Mode mode) {
  GramReport report;
  report.eps = eps;
  report.eps_prime = eps_prime;
  report.mode = mode;
  MatchingSet col_ms = enumerate_matchings(eps, eps_prime, mode);
  MatchingSet row_ms = enumerate_matchings(eps_prime, eps, mode);
  report.col_basis = skein_basis(col_ms, data);
  report.row_basis = skein_basis(row_ms, data);
  std::vector<Morphism> ys = lifted_basis(eps, eps_prime, report.col_basis, data, mode);
  std::vector<Morphism> zs = lifted_basis(eps_prime, eps, report.row_basis, data, mode);
  report.gram = Matrix(zs.size(), ys.size());
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < ys.size(); ++j)
      report.gram.at(i, j) = close_trace(compose(zs[i], ys[j], pair), pair);
  };
  std::size_t workers = std::min(g_gram_threads, zs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < zs.size(); ++i) fill_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < zs.size(); i = next++) fill_row(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (std::thread& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  RankKernel rk = rank_and_kernel(report.gram);
  report.rank = rk.rank;
  report.kernel_basis = std::move(rk.kernel_basis);
  return report;
}

std::size_t gligible_hom_dim(const SignSeq& eps, const SignSeq& eps_prime,
                             const SyntacticData& data, const SeriesPair& pair, Mode mode) {
  return gram_matrix(eps, eps_prime, data, pair, mode).rank;
}

void set_gram_parallelism(std::size_t threads) {
  g_gram_threads = std::clamp<std::size_t>(threads, 1, 64);
}

std::size_t gram_parallelism() { return g_gram_threads; }

Vec skein_coords(const SkeinMorphism& m, const std::vector<SkeinBasisId>& basis) {
  Vec c(basis.size(), Scalar(0));
  for (const auto& [id, coeff] : m.coords) {
    auto it = std::lower_bound(basis.begin(), basis.end(), id);
    if (it == basis.end() || !(*it == id)) throw ValidationError("coordinate outside skein basis");
    c[static_cast<std::size_t>(it - basis.begin())] = coeff;
  }
  return c;
}

QuotientBasis quotient_representatives(const GramReport& report) {
  QuotientBasis q;
  Echelon col_ech;
  for (std::size_t j = 0; j < report.gram.cols; ++j)
    if (col_ech.insert(report.gram.col(j))) q.cols.push_back(j);
  Echelon row_ech;
  for (std::size_t i = 0; i < report.gram.rows; ++i) {
    Vec restricted(q.cols.size());
    for (std::size_t k = 0; k < q.cols.size(); ++k) restricted[k] = report.gram.at(i, q.cols[k]);
    if (row_ech.insert(std::move(restricted))) q.rows.push_back(i);
  }
  return q;
}

StateSpace state_space(const SignSeq& eps, const SyntacticData& data, const SeriesPair& pair,
                       Mode mode) {
  StateSpace s;
  s.eps = eps;
  s.mode = mode;
  s.report = gram_matrix(SignSeq{}, eps, data, pair, mode);
  Echelon ech;
  for (std::size_t j = 0; j < s.report.gram.cols; ++j)
    if (ech.insert(s.report.gram.col(j))) {
      s.rep_cols.push_back(j);
      s.representatives.push_back(s.report.col_basis[j]);
    }
  s.dim = s.rep_cols.size();
  return s;
}

Vec state_coords(const SkeinMorphism& m, const StateSpace& space) {
  Vec c = skein_coords(m, space.report.col_basis);
  Vec target(space.report.gram.rows, Scalar(0));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i < space.report.gram.rows; ++i)
      target[i] += space.report.gram.at(i, j) * c[j];
  }
  std::vector<Vec> rep_columns;
  rep_columns.reserve(space.rep_cols.size());
  for (std::size_t j : space.rep_cols) rep_columns.push_back(space.report.gram.col(j));
  auto coords = solve_in_span(rep_columns, target);
  if (!coords) throw ValidationError("state projection failed (rank inconsistency)");
  return *coords;
}

SignSeq balanced_object(std::size_t n) {
  SignSeq eps;
  eps.signs.assign(n, 1);
  eps.signs.insert(eps.signs.end(), n, -1);
  return eps;
}

namespace {

std::size_t half_weight(const SkeinMorphism& x) {
  if (!x.source.signs.empty()) throw ValidationError("tca element must start at the empty object");
  std::size_t n = x.target.size() / 2;
  if (x.target != balanced_object(n)) throw ValidationError("tca element must end at (+^n -^n)");
  return n;
}

}  // namespace

SkeinMorphism tca_raw_product(const SkeinMorphism& x, const SkeinMorphism& y,
                              const SyntacticData& data, const SeriesPair& pair) {
  if (x.mode != y.mode) throw ValidationError("tca factors disagree on mode");
  std::size_t n = half_weight(x), m = half_weight(y);
  Morphism t = tensor(lift(x, data), lift(y, data));
  // interleave (+^n -^n)(+^m -^m) -> (+^{n+m} -^{n+m})
  std::vector<std::size_t> perm(2 * (n + m));
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = 0; i < n; ++i) perm[n + i] = n + m + i;
  for (std::size_t i = 0; i < m; ++i) perm[2 * n + i] = n + i;
  for (std::size_t i = 0; i < m; ++i) perm[2 * n + m + i] = 2 * n + m + i;
  Morphism shuffle = zero_morphism(t.target, balanced_object(n + m));
  shuffle.add_term(permutation_diagram(t.target, perm), Scalar(1));
  return skein_normal_form(compose(shuffle, t, pair), data, x.mode);
}

TcaProduct tca_multiply(const SkeinMorphism& x, const SkeinMorphism& y, const SyntacticData& data,
                        const SeriesPair& pair) {
  TcaProduct out;
  out.raw = tca_raw_product(x, y, data, pair);
  out.space = state_space(out.raw.target, data, pair, x.mode);
  out.coords = state_coords(out.raw, out.space);
  return out;
}

}  // namespace serialcob
