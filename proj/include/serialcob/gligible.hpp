#pragma once

#include "serialcob/skein.hpp"

namespace serialcob {

// Exact Gram matrix of the trace pairing. Columns are indexed by the skein
// basis of Hom(eps, eps_prime), rows by the basis of Hom(eps_prime, eps);
// entry (i, j) = close_trace(z_i . y_j). Kernel vectors (in column
// coordinates) are exactly the negligible morphisms eps -> eps_prime.
struct GramReport {
  SignSeq eps, eps_prime;
  Mode mode = Mode::WithFloating;
  std::vector<SkeinBasisId> col_basis;  // Hom(eps, eps_prime)
  std::vector<SkeinBasisId> row_basis;  // Hom(eps_prime, eps)
  Matrix gram;
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;
};

GramReport gram_matrix(const SignSeq& eps, const SignSeq& eps_prime, const SyntacticData& data,
                       const SeriesPair& pair, Mode mode);

// Worker count for Gram-entry fills (entries are independent; assembly stays
// deterministic). Default 1; values are clamped to [1, 64].
void set_gram_parallelism(std::size_t threads);
std::size_t gram_parallelism();

// Hom dimension in the gligible quotient = Gram rank.
std::size_t gligible_hom_dim(const SignSeq& eps, const SignSeq& eps_prime,
                             const SyntacticData& data, const SeriesPair& pair, Mode mode);

// Column coordinates of a skein morphism against report.col_basis.
Vec skein_coords(const SkeinMorphism& m, const std::vector<SkeinBasisId>& basis);

// Greedy row/column subsets (basis order) on which the Gram matrix restricts
// to an invertible rank x rank block — quotient bases with perfect pairing.
struct QuotientBasis {
  std::vector<std::size_t> rows, cols;
};
QuotientBasis quotient_representatives(const GramReport& report);

// State space A(eps) = Hom(empty, eps) modulo negligibles; representatives
// are the greedy Gram-independent columns.
struct StateSpace {
  SignSeq eps;
  Mode mode = Mode::WithFloating;
  std::size_t dim = 0;
  std::vector<std::size_t> rep_cols;            // indices into report.col_basis
  std::vector<SkeinBasisId> representatives;    // the same elements, by id
  GramReport report;
};

StateSpace state_space(const SignSeq& eps, const SyntacticData& data, const SeriesPair& pair,
                       Mode mode);

// Coordinates of m in the representative basis, modulo negligibles.
Vec state_coords(const SkeinMorphism& m, const StateSpace& space);

// Sign sequence (+^n -^n).
SignSeq balanced_object(std::size_t n);

// The product in A = (+) state spaces: tensor the representatives and
// interleave (+^n -^n)(+^m -^m) into (+^{n+m} -^{n+m}) by the canonical
// permutation, reduced to the skein basis. x must live in Hom(empty, +^n -^n)
// and y in Hom(empty, +^m -^m), with matching modes.
SkeinMorphism tca_raw_product(const SkeinMorphism& x, const SkeinMorphism& y,
                              const SyntacticData& data, const SeriesPair& pair);

struct TcaProduct {
  StateSpace space;  // of (+^{n+m} -^{n+m})
  SkeinMorphism raw;
  Vec coords;
};

TcaProduct tca_multiply(const SkeinMorphism& x, const SkeinMorphism& y, const SyntacticData& data,
                        const SeriesPair& pair);

}  // namespace serialcob
