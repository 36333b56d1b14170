#pragma once

#include "serialcob/recognition.hpp"
#include "serialcob/series.hpp"

namespace serialcob {

enum class Side { TwoSided, Left, Right };

// Formal k-linear combination of words.
struct FormalSum {
  std::vector<std::pair<Word, Scalar>> terms;
};

// Exact data of the syntactic algebra A = k<S>/I of a series pair, together
// with the two one-sided quotients of the interval series. Basis words are
// the length-lex first whose images are independent.
struct SyntacticData {
  Alphabet alphabet;
  LinearRep bullet_min;  // minimized interval series
  LinearRep circ_min;    // minimized circle series

  std::size_t d = 0;    // dim of the syntactic algebra
  std::size_t ell = 0;  // codim of the left syntactic ideal of bullet
  std::size_t r = 0;    // codim of the right syntactic ideal of bullet

  std::vector<Word> algebra_basis_words;  // d words
  std::vector<Word> left_basis_words;     // ell words
  std::vector<Word> right_basis_words;    // r words

  std::vector<Scalar> structure_constants;  // d*d*d; [ (i*d + j)*d + k ]
  Vec unit_coords;                          // coordinates of the empty word
  Vec form_bullet;                          // bullet on the algebra basis
  Vec form_circ;                            // circ on the algebra basis

  // basis images backing the normal-form maps
  std::vector<Vec> algebra_basis_vecs;  // stacked (vec psi_bullet(w), vec psi_circ(w))
  std::vector<Vec> left_basis_vecs;     // psi_bullet(w) lambda
  std::vector<Vec> right_basis_vecs;    // transpose of mu psi_bullet(w)

  const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_constants[(i * d + j) * d + k];
  }
  Vec multiply(const Vec& x, const Vec& y) const;  // product in basis coordinates
};

// Minimizes both members, then extracts bases, structure constants and forms.
SyntacticData syntactic_data(const SeriesPair& pair);

Vec normal_form(const Word& w, Side side, const SyntacticData& data);
Vec normal_form(const FormalSum& x, Side side, const SyntacticData& data);

// True iff the only two-sided ideal inside ker(form) is zero.
bool is_syntactic_pair(std::size_t d, const std::vector<Scalar>& structure_constants,
                       const Vec& form);
bool is_syntactic_pair(const SyntacticData& data, const Vec& form);

// True iff (a, b) -> form(ab) is nondegenerate on the algebra.
bool is_frobenius_form(std::size_t d, const std::vector<Scalar>& structure_constants,
                       const Vec& form);
bool is_frobenius_form(const SyntacticData& data, const Vec& form);

}  // namespace serialcob
