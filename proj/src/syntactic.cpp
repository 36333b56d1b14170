#include "serialcob/syntactic.hpp"

#include <cassert>

#include "serialcob/errors.hpp"

namespace serialcob {

namespace {

// Image of a word in the block representation: (vec psi_b(w), vec psi_c(w)).
Vec block_image(const LinearRep& b, const LinearRep& c, const Word& w) {
  Matrix mb = psi_of_word(b, w);
  Matrix mc = psi_of_word(c, w);
  Vec v;
  v.reserve(mb.a.size() + mc.a.size());
  v.insert(v.end(), mb.a.begin(), mb.a.end());
  v.insert(v.end(), mc.a.begin(), mc.a.end());
  return v;
}

Vec left_image(const LinearRep& b, const Word& w) { return psi_of_word(b, w).apply(b.lambda); }

Vec right_image(const LinearRep& b, const Word& w) {
  Vec x = b.mu;
  for (auto t : w.letters) {
    Vec y(b.dim, Scalar(0));
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) y[j] += x[i] * b.psi[t].at(i, j);
    x = std::move(y);
  }
  return x;
}

// Greedy length-lex basis for word images. Candidates at the next level are
// one-letter extensions of kept words (the kept set is closed under the
// matching sub-word operation), generated in lexicographic order.
struct WordBasis {
  std::vector<Word> words;
  std::vector<Vec> vecs;
};

enum class Extend { AppendRight, PrependLeft };

WordBasis greedy_word_basis(std::size_t r, const std::function<Vec(const Word&)>& image,
                            Extend mode) {
  WordBasis out;
  Echelon ech;
  Vec root = image(Word{});
  if (!ech.insert(root)) return out;
  out.words.push_back({});
  out.vecs.push_back(std::move(root));
  std::size_t level_begin = 0;
  while (level_begin < out.words.size()) {
    std::size_t level_end = out.words.size();
    std::vector<Word> candidates;
    if (mode == Extend::AppendRight) {
      for (std::size_t k = level_begin; k < level_end; ++k)
        for (std::uint32_t s = 0; s < r; ++s) {
          Word w = out.words[k];
          w.letters.push_back(s);
          candidates.push_back(std::move(w));
        }
    } else {
      for (std::uint32_t s = 0; s < r; ++s)
        for (std::size_t k = level_begin; k < level_end; ++k) {
          Word w;
          w.letters.push_back(s);
          w.letters.insert(w.letters.end(), out.words[k].letters.begin(),
                           out.words[k].letters.end());
          candidates.push_back(std::move(w));
        }
    }
    level_begin = level_end;
    for (auto& w : candidates) {
      Vec v = image(w);
      if (ech.insert(v)) {
        out.words.push_back(std::move(w));
        out.vecs.push_back(std::move(v));
      }
    }
  }
  return out;
}

}  // namespace

Vec SyntacticData::multiply(const Vec& x, const Vec& y) const {
  Vec out(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) out[k] += f * sc(i, j, k);
    }
  }
  return out;
}

SyntacticData syntactic_data(const SeriesPair& pair) {
  if (!(pair.bullet.alphabet == pair.circ.alphabet))
    throw ValidationError("series pair: alphabets differ");
  SyntacticData data;
  data.alphabet = pair.bullet.alphabet;
  data.bullet_min = minimize(pair.bullet);
  data.circ_min = minimize(pair.circ);
  const LinearRep& b = data.bullet_min;
  const LinearRep& c = data.circ_min;
  std::size_t r_letters = data.alphabet.size();

  // Two-sided: for minimal representations a word lies in the intersection
  // ideal iff both matrix images vanish, so A embeds as the unital algebra
  // generated by the block images.
  WordBasis alg = greedy_word_basis(
      r_letters, [&](const Word& w) { return block_image(b, c, w); }, Extend::AppendRight);
  data.algebra_basis_words = alg.words;
  data.algebra_basis_vecs = alg.vecs;
  data.d = alg.words.size();

  WordBasis left = greedy_word_basis(
      r_letters, [&](const Word& w) { return left_image(b, w); }, Extend::PrependLeft);
  data.left_basis_words = left.words;
  data.left_basis_vecs = left.vecs;
  data.ell = left.words.size();

  WordBasis right = greedy_word_basis(
      r_letters, [&](const Word& w) { return right_image(b, w); }, Extend::AppendRight);
  data.right_basis_words = right.words;
  data.right_basis_vecs = right.vecs;
  data.r = right.words.size();

  std::size_t d = data.d;
  data.structure_constants.assign(d * d * d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Word prod = concat(data.algebra_basis_words[i], data.algebra_basis_words[j]);
      auto coords = solve_in_span(data.algebra_basis_vecs, block_image(b, c, prod));
      assert(coords);
      for (std::size_t k = 0; k < d; ++k)
        data.structure_constants[(i * d + j) * d + k] = (*coords)[k];
    }
  if (d > 0) {
    auto unit = solve_in_span(data.algebra_basis_vecs, block_image(b, c, Word{}));
    assert(unit);
    data.unit_coords = *unit;
  }
  data.form_bullet.resize(d);
  data.form_circ.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    data.form_bullet[i] = eval_rep(b, data.algebra_basis_words[i]);
    data.form_circ[i] = eval_rep(c, data.algebra_basis_words[i]);
  }
  return data;
}

Vec normal_form(const Word& w, Side side, const SyntacticData& data) {
  FormalSum x;
  x.terms.emplace_back(w, Scalar(1));
  return normal_form(x, side, data);
}

Vec normal_form(const FormalSum& x, Side side, const SyntacticData& data) {
  const LinearRep& b = data.bullet_min;
  const LinearRep& c = data.circ_min;
  std::size_t image_dim;
  const std::vector<Vec>* basis;
  std::function<Vec(const Word&)> image;
  switch (side) {
    case Side::TwoSided:
      image_dim = b.dim * b.dim + c.dim * c.dim;
      basis = &data.algebra_basis_vecs;
      image = [&](const Word& w) { return block_image(b, c, w); };
      break;
    case Side::Left:
      image_dim = b.dim;
      basis = &data.left_basis_vecs;
      image = [&](const Word& w) { return left_image(b, w); };
      break;
    case Side::Right:
      image_dim = b.dim;
      basis = &data.right_basis_vecs;
      image = [&](const Word& w) { return right_image(b, w); };
      break;
  }
  Vec total(image_dim, Scalar(0));
  for (const auto& [w, coeff] : x.terms) {
    Vec v = image(w);
    for (std::size_t i = 0; i < image_dim; ++i) total[i] += coeff * v[i];
  }
  auto coords = solve_in_span(*basis, total);
  assert(coords);  // images always lie in the span of the basis images
  return *coords;
}

namespace {

// Rows of the constraint matrix cut out the candidate subspace; saturating
// with both multiplication actions yields the largest two-sided ideal in
// ker(form).
Matrix left_action(std::size_t d, const std::vector<Scalar>& sc, std::size_t i) {
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) m.at(k, j) = sc[(i * d + j) * d + k];
  return m;
}

Matrix right_action(std::size_t d, const std::vector<Scalar>& sc, std::size_t i) {
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) m.at(k, j) = sc[(j * d + i) * d + k];
  return m;
}

}  // namespace

bool is_syntactic_pair(std::size_t d, const std::vector<Scalar>& structure_constants,
                       const Vec& form) {
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < d; ++i) {
    actions.push_back(left_action(d, structure_constants, i));
    actions.push_back(right_action(d, structure_constants, i));
  }
  std::vector<Vec> rows = {form};
  Echelon ech;
  ech.insert(form);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (const auto& act : actions) {
      // row . act constrains v by (row)(act v) = 0
      Vec nr(d, Scalar(0));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) nr[j] += rows[k][i] * act.at(i, j);
      if (ech.insert(nr)) rows.push_back(std::move(nr));
    }
  }
  return ech.rank() == d;
}

bool is_syntactic_pair(const SyntacticData& data, const Vec& form) {
  return is_syntactic_pair(data.d, data.structure_constants, form);
}

bool is_frobenius_form(std::size_t d, const std::vector<Scalar>& structure_constants,
                       const Vec& form) {
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar v(0);
      for (std::size_t k = 0; k < d; ++k) v += structure_constants[(i * d + j) * d + k] * form[k];
      gram.at(i, j) = v;
    }
  return rank_of(gram) == d;
}

bool is_frobenius_form(const SyntacticData& data, const Vec& form) {
  return is_frobenius_form(data.d, data.structure_constants, form);
}

}  // namespace serialcob
