#include <doctest.h>

#include "serialcob/errors.hpp"
#include "serialcob/json_io.hpp"
#include "testutil.hpp"

using namespace serialcob;
using testutil::make_rep;
using testutil::qmat;
using testutil::qvec;

namespace {
Word w(std::vector<std::uint32_t> letters) { return Word{std::move(letters)}; }
}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("scalar round trips and integer acceptance") {
    CHECK(scalar_to_json(Scalar(3, 4)) == json("3/4"));
    CHECK(scalar_from_json(json("3/4")) == Scalar(3, 4));
    CHECK(scalar_from_json(json(-5)) == Scalar(-5));
    CHECK(scalar_from_json(scalar_to_json(Scalar(-22, 7))) == Scalar(-22, 7));
    CHECK_THROWS_AS(scalar_from_json(json("1/0")), ValidationError);
    CHECK_THROWS_AS(scalar_from_json(json(nullptr)), ValidationError);
  }

  TEST_CASE("vectors and matrices") {
    Vec v = qvec({1, -2, 3});
    CHECK(vec_from_json(vec_to_json(v)) == v);
    Matrix m = qmat({{1, 2}, {3, 4}});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1"],["2","3"]])")), ValidationError);
  }

  TEST_CASE("alphabets reject duplicates") {
    Alphabet al{{"a", "b"}};
    CHECK(alphabet_from_json(alphabet_to_json(al)) == al);
    CHECK_THROWS_AS(alphabet_from_json(json::parse(R"(["a","a"])")), ValidationError);
  }

  TEST_CASE("representation round trip and schema") {
    LinearRep rep = make_rep(Alphabet{{"a", "b"}}, qvec({1, 0}), qvec({0, 1}),
                             {qmat({{1, 1}, {0, 0}}), qmat({{0, 0}, {0, 1}})});
    json j = rep_to_json(rep);
    CHECK(j.contains("alphabet"));
    CHECK(j.contains("dim"));
    CHECK(j.contains("lambda"));
    CHECK(j.contains("mu"));
    CHECK(j.contains("psi"));
    LinearRep back = rep_from_json(j);
    CHECK(back.dim == rep.dim);
    CHECK(back.mu == rep.mu);
    CHECK(back.lambda == rep.lambda);
    CHECK(back.psi == rep.psi);
    // Shape problems are validation errors.
    json bad = j;
    bad["lambda"] = json::array({"1"});
    CHECK_THROWS_AS(rep_from_json(bad), ValidationError);
  }

  TEST_CASE("pair round trip") {
    SeriesPair pair = testutil::reversal_symmetric_pair();
    json j = pair_to_json(pair);
    SeriesPair back = pair_from_json(j);
    CHECK(back.bullet.dim == pair.bullet.dim);
    CHECK(back.circ.dim == pair.circ.dim);
    for (const Word& word : words_up_to(2, 3)) {
      CHECK(back.eval_bullet(word) == pair.eval_bullet(word));
      CHECK(back.eval_circ(cyclic_normalize(word)) == pair.eval_circ(cyclic_normalize(word)));
    }
  }

  TEST_CASE("diagram round trip") {
    Alphabet al{{"a", "b"}};
    Diagram d;
    d.source = parse_signseq("+");
    d.target = parse_signseq("++-");
    Component through;
    through.kind = ComponentKind::Through;
    through.from = Endpoint{EndSide::Src, 0};
    through.to = Endpoint{EndSide::Tgt, 0};
    through.label = w({0, 1});
    d.components.push_back(through);
    Component cup;
    cup.kind = ComponentKind::Cup;
    cup.from = Endpoint{EndSide::Tgt, 2};
    cup.to = Endpoint{EndSide::Tgt, 1};
    cup.label = w({1});
    d.components.push_back(cup);
    Component circle;
    circle.kind = ComponentKind::FloatCircle;
    circle.label = cyclic_normalize(w({1, 0})).representative;
    d.components.push_back(circle);
    d.normalize();

    json j = diagram_to_json(d, al);
    Diagram back = diagram_from_json(j, al);
    CHECK(back == d);
    // Circle labels come back cyclically normalized even if written rotated.
    json rotated = j;
    for (auto& comp : rotated["components"])
      if (comp["kind"] == "floatcircle") comp["label"] = "b.a";
    CHECK(diagram_from_json(rotated, al) == d);
  }

  TEST_CASE("diagrams are validated on input") {
    Alphabet al{{"a"}};
    json j = {
        {"source", "+"},
        {"target", "e"},
        {"components", json::array()},
    };
    CHECK_THROWS_AS(diagram_from_json(j, al), ValidationError);
  }

  TEST_CASE("morphism round trip") {
    Alphabet al{{"a", "b"}};
    Morphism m = zero_morphism(parse_signseq("+"), parse_signseq("+"));
    Diagram d = identity_diagram(parse_signseq("+"));
    d.components[0].label = w({0});
    m.add_term(d, Scalar(2, 3));
    Diagram d2 = identity_diagram(parse_signseq("+"));
    d2.components[0].label = w({1, 1});
    m.add_term(d2, Scalar(-1));
    json j = morphism_to_json(m, al);
    Morphism back = morphism_from_json(j, al);
    CHECK(back.source == m.source);
    CHECK(back.target == m.target);
    CHECK(back.terms == m.terms);
  }

  TEST_CASE("mode names") {
    CHECK(mode_to_string(Mode::WithFloating) == "ctilde");
    CHECK(mode_to_string(Mode::NoFloating) == "c");
    CHECK(mode_from_string("ctilde") == Mode::WithFloating);
    CHECK(mode_from_string("c") == Mode::NoFloating);
    CHECK_THROWS_AS(mode_from_string("x"), ValidationError);
  }

  TEST_CASE("matching sets and gram reports serialize") {
    MatchingSet ms = enumerate_matchings(parse_signseq("+"), parse_signseq("+-"),
                                         Mode::WithFloating);
    json mj = matching_set_to_json(ms);
    CHECK(mj["count"] == 3);

    SeriesPair pair{make_rep(Alphabet{{"a", "b"}}, qvec({1, 0}), qvec({1, 0}),
                             {qmat({{0, 1}, {0, 0}}), qmat({{0, 0}, {1, 0}})}),
                    zero_rep(Alphabet{{"a", "b"}})};
    SyntacticData data = syntactic_data(pair);
    GramReport report = gram_matrix(parse_signseq("+"), parse_signseq("+"), data, pair,
                                    Mode::WithFloating);
    json gj = gram_report_to_json(report, data);
    CHECK(gj["rank"] == 8);
    CHECK(gj.contains("gram"));
    CHECK(gj.contains("kernel_basis"));

    StateSpace space = state_space(parse_signseq("+-"), data, pair, Mode::WithFloating);
    json sj = state_space_to_json(space, data);
    CHECK(sj["dim"] == space.dim);
  }

  TEST_CASE("selftest serialization") {
    std::vector<SelftestEntry> entries = {{"fix", "check", true, "ok"}};
    json j = selftest_to_json(entries);
    CHECK(j["ok"] == true);
    CHECK(j["checks"].size() == 1);
  }
}
