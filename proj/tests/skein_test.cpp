#include <doctest.h>

#include <random>

#include "serialcob/errors.hpp"
#include "serialcob/gligible.hpp"
#include "serialcob/skein.hpp"
#include "testutil.hpp"

using namespace serialcob;
using testutil::make_rep;
using testutil::qmat;
using testutil::qvec;

namespace {

const Alphabet kTwoLetters{{"a", "b"}};

Word w(std::vector<std::uint32_t> letters) { return Word{std::move(letters)}; }

SeriesPair matrix_unit_pair() {
  LinearRep bullet = make_rep(kTwoLetters, qvec({1, 0}), qvec({1, 0}),
                              {qmat({{0, 1}, {0, 0}}), qmat({{0, 0}, {1, 0}})});
  return SeriesPair{bullet, zero_rep(kTwoLetters)};
}

// S empty, circle value lambda: the one-parameter family of unlabelled arcs.
SeriesPair scalar_pair(long lambda) {
  Alphabet empty{};
  return SeriesPair{zero_rep(empty), const_rep(empty, Scalar(lambda))};
}

Morphism strand_morphism(const Word& label) {
  Diagram d;
  d.source = parse_signseq("+");
  d.target = parse_signseq("+");
  Component c;
  c.kind = ComponentKind::Through;
  c.from = Endpoint{EndSide::Src, 0};
  c.to = Endpoint{EndSide::Tgt, 0};
  c.label = label;
  d.components.push_back(c);
  Morphism m = zero_morphism(d.source, d.target);
  m.add_term(d, Scalar(1));
  return m;
}

std::size_t count_matchings(const std::string& src, const std::string& tgt, Mode mode) {
  return enumerate_matchings(parse_signseq(src), parse_signseq(tgt), mode).matchings.size();
}

}  // namespace

TEST_SUITE("skein") {
  TEST_CASE("matching counts for small interfaces") {
    CHECK(count_matchings("+", "+-", Mode::WithFloating) == 3);
    CHECK(count_matchings("+", "++-", Mode::WithFloating) == 7);
    CHECK(count_matchings("e", "e", Mode::WithFloating) == 1);
    CHECK(count_matchings("e", "e", Mode::NoFloating) == 1);
  }

  TEST_CASE("the three matchings of Hom(+, +-) are the expected ones") {
    MatchingSet ms = enumerate_matchings(parse_signseq("+"), parse_signseq("+-"), Mode::WithFloating);
    REQUIRE(ms.matchings.size() == 3);
    // sigma = (-, +, -): the plus point sits at position 1.
    Matching none{{}, {0, 1, 2}};
    Matching to_source{{{1, 0}}, {2}};
    Matching to_target{{{1, 2}}, {0}};
    CHECK(ms.index_of(none) == 0);
    CHECK(ms.index_of(to_source) == 1);
    CHECK(ms.index_of(to_target) == 2);
  }

  TEST_CASE("no-floating keeps only perfect matchings") {
    CHECK(count_matchings("+", "-", Mode::NoFloating) == 0);
    CHECK(count_matchings("+", "-", Mode::WithFloating) == 1);
    CHECK(count_matchings("+", "+", Mode::NoFloating) == 1);
    CHECK(count_matchings("+-", "+-", Mode::NoFloating) == 2);
    // p = q = 2 interface: sum_j C(2,j)^2 j! = 1 + 4 + 2.
    CHECK(count_matchings("+-", "+-", Mode::WithFloating) == 7);
    // Four outlets against four inlets: 4! perfect matchings.
    CHECK(count_matchings("++--", "++--", Mode::NoFloating) == 24);
  }

  TEST_CASE("closed form dimension matches enumeration") {
    SyntacticData data = syntactic_data(matrix_unit_pair());
    REQUIRE(data.d == 4);
    REQUIRE(data.ell == 2);
    REQUIRE(data.r == 2);
    std::vector<SignSeq> shapes;
    for (std::size_t len = 0; len <= 5; ++len)
      for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
        SignSeq s;
        for (std::size_t i = 0; i < len; ++i) s.signs.push_back((bits >> i) & 1 ? 1 : -1);
        shapes.push_back(s);
      }
    for (const SignSeq& src : shapes)
      for (const SignSeq& tgt : shapes) {
        if (src.size() + tgt.size() > 5) continue;
        for (Mode mode : {Mode::WithFloating, Mode::NoFloating}) {
          std::size_t closed = hom_dim(src, tgt, data, mode);
          CHECK(closed == hom_dim_enumerated(src, tgt, data, mode));
          CHECK(closed == skein_basis(enumerate_matchings(src, tgt, mode), data).size());
        }
      }
  }

  TEST_CASE("with d = ell = r = 1 the dimension is the matching count") {
    SyntacticData unit;
    unit.d = unit.ell = unit.r = 1;
    CHECK(hom_dim(parse_signseq("+"), parse_signseq("+-"), unit, Mode::WithFloating) == 3);
    CHECK(hom_dim(parse_signseq("+"), parse_signseq("++-"), unit, Mode::WithFloating) == 7);
  }

  TEST_CASE("balanced no-floating dimensions follow the factorial formula") {
    SyntacticData data = syntactic_data(matrix_unit_pair());
    // n strands crossing the interface: n! matchings, d^n decorations.
    CHECK(hom_dim(parse_signseq("+"), parse_signseq("+"), data, Mode::NoFloating) == 4);
    CHECK(hom_dim(parse_signseq("++"), parse_signseq("++"), data, Mode::NoFloating) == 32);
    CHECK(hom_dim(parse_signseq("+-"), parse_signseq("+-"), data, Mode::NoFloating) == 32);
    CHECK(hom_dim(parse_signseq("+++"), parse_signseq("+++"), data, Mode::NoFloating) ==
          6 * 4 * 4 * 4);
    // Unbalanced interfaces vanish.
    CHECK(hom_dim(parse_signseq("+"), parse_signseq("-"), data, Mode::NoFloating) == 0);
    CHECK(hom_dim(parse_signseq("e"), parse_signseq("+"), data, Mode::NoFloating) == 0);
  }

  TEST_CASE("endomorphisms of a strand have dimension d plus ell times r") {
    SyntacticData data = syntactic_data(matrix_unit_pair());
    CHECK(hom_dim(parse_signseq("+"), parse_signseq("+"), data, Mode::WithFloating) == 8);
    SeriesPair scalars = scalar_pair(5);
    SyntacticData sdata = syntactic_data(scalars);
    CHECK(sdata.d == 1);
    CHECK(sdata.ell == 0);
    CHECK(hom_dim(parse_signseq("+"), parse_signseq("+"), sdata, Mode::WithFloating) == 1);
    // S empty family on balanced objects: (2n)! strands-only dimensions.
    CHECK(hom_dim(balanced_object(1), balanced_object(1), sdata, Mode::WithFloating) == 2);
    CHECK(hom_dim(balanced_object(2), balanced_object(2), sdata, Mode::WithFloating) == 24);
  }

  TEST_CASE("basis diagrams are valid and carry basis words") {
    SyntacticData data = syntactic_data(matrix_unit_pair());
    MatchingSet ms = enumerate_matchings(parse_signseq("+"), parse_signseq("+"),
                                         Mode::WithFloating);
    std::vector<SkeinBasisId> basis = skein_basis(ms, data);
    REQUIRE(basis.size() == 8);
    for (const SkeinBasisId& id : basis) {
      Diagram d = basis_diagram(ms, id, data);
      CHECK_NOTHROW(validate_diagram(d));
      CHECK(d.source == parse_signseq("+"));
      CHECK(d.target == parse_signseq("+"));
    }
    // First four elements: half-arc pairs (unmatched matching sorts first).
    Diagram first = basis_diagram(ms, basis[0], data);
    bool has_halfout = false, has_halfin = false;
    for (const Component& c : first.components) {
      has_halfout |= c.kind == ComponentKind::HalfOut;
      has_halfin |= c.kind == ComponentKind::HalfIn;
    }
    CHECK(has_halfout);
    CHECK(has_halfin);
  }

  TEST_CASE("normal form on strands") {
    SeriesPair pair = matrix_unit_pair();
    SyntacticData data = syntactic_data(pair);
    for (std::size_t i = 0; i < data.d; ++i) {
      SkeinMorphism nf =
          skein_normal_form(strand_morphism(data.algebra_basis_words[i]), data,
                            Mode::WithFloating);
      REQUIRE(nf.coords.size() == 1);
      CHECK(nf.coords.begin()->second == 1);
      CHECK(nf.coords.begin()->first.decor == std::vector<std::size_t>{i});
    }
    // Congruent words hit the same coordinates.
    SkeinMorphism abab = skein_normal_form(strand_morphism(w({0, 1, 0, 1})), data,
                                           Mode::WithFloating);
    SkeinMorphism ab = skein_normal_form(strand_morphism(w({0, 1})), data, Mode::WithFloating);
    CHECK(abab == ab);
    // Words in the syntactic ideal vanish: psi(aa) = 0 here.
    SkeinMorphism zero = skein_normal_form(strand_morphism(w({0, 0})), data, Mode::WithFloating);
    CHECK(zero.coords.empty());
  }

  TEST_CASE("normal form refuses floating pieces in no-floating mode") {
    SeriesPair pair = matrix_unit_pair();
    SyntacticData data = syntactic_data(pair);
    Diagram d;
    d.source = parse_signseq("e");
    d.target = parse_signseq("+");
    Component c;
    c.kind = ComponentKind::HalfOut;
    c.to = Endpoint{EndSide::Tgt, 0};
    d.components.push_back(c);
    Morphism m = zero_morphism(d.source, d.target);
    m.add_term(d, Scalar(1));
    CHECK_NOTHROW(skein_normal_form(m, data, Mode::WithFloating));
    CHECK_THROWS_AS(skein_normal_form(m, data, Mode::NoFloating), ValidationError);
  }

  TEST_CASE("closing commutes with taking normal forms") {
    SeriesPair pair = matrix_unit_pair();
    SyntacticData data = syntactic_data(pair);
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
      SignSeq eps = trial % 2 ? parse_signseq("+") : parse_signseq("+-");
      Morphism m = testutil::random_morphism(rng, eps, eps, 2, 3);
      SkeinMorphism nf = skein_normal_form(m, data, Mode::WithFloating);
      CHECK(close_trace(lift(nf, data), pair) == close_trace(m, pair));
    }
  }

  TEST_CASE("skein composition is unital and associative") {
    SeriesPair pair = matrix_unit_pair();
    SyntacticData data = syntactic_data(pair);
    SignSeq pm = parse_signseq("+-");
    SkeinMorphism id = skein_identity(pm, data, Mode::WithFloating);
    MatchingSet ms = enumerate_matchings(pm, pm, Mode::WithFloating);
    std::vector<SkeinBasisId> basis = skein_basis(ms, data);
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    auto random_elem = [&]() {
      SkeinMorphism m = zero_skein(pm, pm, Mode::WithFloating);
      m.add(basis[pick(rng)], testutil::random_scalar(rng));
      m.add(basis[pick(rng)], testutil::random_scalar(rng));
      return m;
    };
    for (int trial = 0; trial < 6; ++trial) {
      SkeinMorphism x = random_elem(), y = random_elem(), z = random_elem();
      CHECK(skein_compose(id, x, data, pair) == x);
      CHECK(skein_compose(x, id, data, pair) == x);
      CHECK(skein_compose(skein_compose(x, y, data, pair), z, data, pair) ==
            skein_compose(x, skein_compose(y, z, data, pair), data, pair));
    }
  }

  TEST_CASE("half-arc pairs multiply through the interval series") {
    SeriesPair pair = matrix_unit_pair();
    SyntacticData data = syntactic_data(pair);
    SignSeq plus = parse_signseq("+");
    MatchingSet ms = enumerate_matchings(plus, plus, Mode::WithFloating);
    // Slot order of the unmatched matching: position 0 (half-in, r range)
    // then position 1 (half-out, ell range).
    auto pair_elem = [&](std::size_t x1, std::size_t x2) {
      SkeinMorphism m = zero_skein(plus, plus, Mode::WithFloating);
      m.add(SkeinBasisId{0, {x2, x1}}, Scalar(1));
      return m;
    };
    for (std::size_t x1 = 0; x1 < data.ell; ++x1)
      for (std::size_t x2 = 0; x2 < data.r; ++x2)
        for (std::size_t y1 = 0; y1 < data.ell; ++y1)
          for (std::size_t y2 = 0; y2 < data.r; ++y2) {
            SkeinMorphism prod =
                skein_compose(pair_elem(x1, x2), pair_elem(y1, y2), data, pair);
            Scalar coeff = pair.eval_bullet(
                concat(data.right_basis_words[x2], data.left_basis_words[y1]));
            SkeinMorphism expected = zero_skein(plus, plus, Mode::WithFloating);
            expected.add(SkeinBasisId{0, {y2, x1}}, coeff);
            CHECK(prod == expected);
          }
  }

  TEST_CASE("endomorphism table of the walled interface") {
    SeriesPair pair = scalar_pair(3);
    SyntacticData data = syntactic_data(pair);
    REQUIRE(data.d == 1);
    SignSeq pm = parse_signseq("+-");
    CHECK(hom_dim(pm, pm, data, Mode::NoFloating) == 2);
    std::vector<Scalar> table = endo_algebra_table(pm, data, pair, Mode::NoFloating);
    REQUIRE(table.size() == 8);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return table[(i * 2 + j) * 2 + k]; };
    // Basis order: the cup-cap projector e first, then the identity.
    // e e = lambda e; mixed products give e; id id = id.
    CHECK(at(0, 0, 0) == 3);
    CHECK(at(0, 0, 1) == 0);
    CHECK(at(0, 1, 0) == 1);
    CHECK(at(0, 1, 1) == 0);
    CHECK(at(1, 0, 0) == 1);
    CHECK(at(1, 0, 1) == 0);
    CHECK(at(1, 1, 0) == 0);
    CHECK(at(1, 1, 1) == 1);
  }

  TEST_CASE("endomorphism table of a strand for the matrix-unit pair") {
    SeriesPair pair = matrix_unit_pair();
    SyntacticData data = syntactic_data(pair);
    SignSeq plus = parse_signseq("+");
    std::vector<Scalar> table = endo_algebra_table(plus, data, pair, Mode::WithFloating);
    std::size_t n = hom_dim(plus, plus, data, Mode::WithFloating);
    REQUIRE(n == 8);
    REQUIRE(table.size() == n * n * n);
    // The identity element: coordinates of the unit strand.
    SkeinMorphism id = skein_identity(plus, data, Mode::WithFloating);
    MatchingSet ms = enumerate_matchings(plus, plus, Mode::WithFloating);
    std::vector<SkeinBasisId> basis = skein_basis(ms, data);
    Vec unit(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      auto it = id.coords.find(basis[i]);
      if (it != id.coords.end()) unit[i] = it->second;
    }
    // Unit rows and columns of the table reproduce the basis.
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar via_left(0), via_right(0);
        for (std::size_t i = 0; i < n; ++i) {
          via_left += unit[i] * table[(i * n + j) * n + k];
          via_right += unit[i] * table[(j * n + i) * n + k];
        }
        CHECK(via_left == Scalar(j == k ? 1 : 0));
        CHECK(via_right == Scalar(j == k ? 1 : 0));
      }
  }

  TEST_CASE("specialized pair with zero interval series matches no-floating") {
    Alphabet al = kTwoLetters;
    SeriesPair pair{zero_rep(al),
                    testutil::trace_rep(al, {qmat({{0, 1}, {0, 0}}), qmat({{0, 0}, {1, 0}})})};
    SyntacticData data = syntactic_data(pair);
    CHECK(data.ell == 0);
    CHECK(data.r == 0);
    for (std::size_t len_src = 0; len_src <= 2; ++len_src)
      for (std::size_t len_tgt = 0; len_tgt <= 2; ++len_tgt) {
        SignSeq src, tgt;
        for (std::size_t i = 0; i < len_src; ++i) src.signs.push_back(i % 2 ? -1 : 1);
        for (std::size_t i = 0; i < len_tgt; ++i) tgt.signs.push_back(i % 2 ? -1 : 1);
        CHECK(hom_dim(src, tgt, data, Mode::WithFloating) ==
              hom_dim(src, tgt, data, Mode::NoFloating));
      }
  }
}
