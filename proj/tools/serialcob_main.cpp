#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "serialcob/errors.hpp"
#include "serialcob/json_io.hpp"
#include "serialcob/syntactic.hpp"

namespace sc = serialcob;
using sc::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCapExceeded = 3;

// Thrown when a requested computation needs a finite representation but the
// Hankel probe climbed past the cap.
struct CapRefusal {
  sc::HankelProbe probe;
  std::string what;
};

struct Options {
  std::string mode = "ctilde";
  std::size_t cap = 16;
  std::string fixture;
  std::string in_path;
  std::string out_path;
  std::string word = "e";
  std::string source = "e";
  std::string target = "e";
  std::string object = "e";
};

enum class Action {
  None,
  SeriesEval,
  SeriesMinimize,
  SeriesEquiv,
  SeriesHankel,
  SeriesSymmetric,
  SeriesAverage,
  SeriesSyntactic,
  CatMatchings,
  CatDim,
  CatBasis,
  CatCompose,
  CatEndoTable,
  CatGram,
  CatQuotientDim,
  CatStateSpace,
  CatTcaMul,
  FixturesList,
  FixturesSelftest,
};

json load_input(const Options& opts) {
  if (opts.in_path.empty()) throw sc::ValidationError("this subcommand needs --in FILE");
  std::ifstream in(opts.in_path);
  if (!in) throw sc::ValidationError("cannot open input file '" + opts.in_path + "'");
  return json::parse(in);
}

// A fixture whose series is only an oracle is probed; past the cap the
// request is refused rather than guessing a representation.
sc::LinearRep fixture_series(const sc::Fixture& f, std::size_t cap) {
  if (f.series) return *f.series;
  sc::HankelProbe probe = sc::hankel_rank_probe(f.oracle, f.alphabet, cap);
  if (probe.status == sc::ProbeStatus::ExceededCap)
    throw CapRefusal{std::move(probe),
                     "fixture '" + f.name + "' exceeded the Hankel cap; not recognizable here"};
  throw sc::ValidationError("fixture '" + f.name + "' ships no representation");
}

sc::LinearRep resolve_series(const Options& opts) {
  if (!opts.fixture.empty()) return fixture_series(sc::find_fixture(opts.fixture), opts.cap);
  json j = load_input(opts);
  return sc::rep_from_json(j.contains("rep") ? j.at("rep") : j);
}

sc::SeriesPair resolve_pair(const Options& opts, const json* preloaded) {
  sc::SeriesPair pair;
  if (!opts.fixture.empty()) {
    const sc::Fixture& f = sc::find_fixture(opts.fixture);
    if (!f.has_pair()) {
      fixture_series(f, opts.cap);  // throws CapRefusal or ValidationError
      throw sc::ValidationError("fixture '" + f.name + "' has no series pair");
    }
    pair = f.pair();
  } else {
    json j = preloaded ? *preloaded : load_input(opts);
    pair = sc::pair_from_json(j.contains("pair") ? j.at("pair") : j);
  }
  if (!(pair.bullet.alphabet == pair.circ.alphabet))
    throw sc::ValidationError("pair members use different alphabets");
  sc::SymmetryResult sym = sc::is_symmetric(pair.circ);
  if (!sym.symmetric) {
    const auto& [u, v] = *sym.witness;
    throw sc::ValidationError("circ series is not symmetric: value differs on uv vs vu for u=" +
                              sc::word_to_string(u, pair.circ.alphabet) + ", v=" +
                              sc::word_to_string(v, pair.circ.alphabet));
  }
  return pair;
}

// Series referenced inside input files: either a fixture name or a rep object.
sc::LinearRep series_from_entry(const json& j, std::size_t cap) {
  if (j.is_string()) return fixture_series(sc::find_fixture(j.get<std::string>()), cap);
  return sc::rep_from_json(j);
}

void enforce_mode(const sc::Morphism& m, sc::Mode mode) {
  if (mode != sc::Mode::NoFloating) return;
  for (const auto& [d, c] : m.terms) sc::validate_diagram(d, /*no_floating=*/true);
}

json run_action(Action action, const Options& opts) {
  sc::Mode mode = sc::mode_from_string(opts.mode);
  switch (action) {
    case Action::SeriesEval: {
      if (!opts.fixture.empty()) {
        const sc::Fixture& f = sc::find_fixture(opts.fixture);
        sc::Word w = sc::parse_word(opts.word, f.alphabet);
        return json{{"word", sc::word_to_string(w, f.alphabet)},
                    {"value", sc::scalar_to_json(f.oracle(w))}};
      }
      sc::LinearRep rep = resolve_series(opts);
      sc::Word w = sc::parse_word(opts.word, rep.alphabet);
      return json{{"word", sc::word_to_string(w, rep.alphabet)},
                  {"value", sc::scalar_to_json(sc::eval_rep(rep, w))}};
    }
    case Action::SeriesMinimize: {
      sc::LinearRep rep = resolve_series(opts);
      sc::LinearRep min = sc::minimize(rep);
      return json{{"dim", min.dim}, {"rep", sc::rep_to_json(min)}};
    }
    case Action::SeriesEquiv: {
      json j = load_input(opts);
      sc::LinearRep a = !opts.fixture.empty()
                            ? fixture_series(sc::find_fixture(opts.fixture), opts.cap)
                            : series_from_entry(j.at("a"), opts.cap);
      sc::LinearRep b = series_from_entry(j.at("b"), opts.cap);
      if (!(a.alphabet == b.alphabet))
        throw sc::ValidationError("series use different alphabets");
      sc::EquivResult r = sc::equivalent(a, b);
      json out{{"equivalent", r.equivalent}};
      if (r.witness) out["witness"] = sc::word_to_string(*r.witness, a.alphabet);
      return out;
    }
    case Action::SeriesHankel: {
      sc::HankelProbe probe;
      if (!opts.fixture.empty()) {
        const sc::Fixture& f = sc::find_fixture(opts.fixture);
        probe = sc::hankel_rank_probe(f.oracle, f.alphabet, opts.cap);
      } else {
        probe = sc::hankel_rank_probe(resolve_series(opts), opts.cap);
      }
      if (probe.status == sc::ProbeStatus::ExceededCap)
        throw CapRefusal{std::move(probe), "Hankel rank exceeded the cap"};
      return json{{"rank", probe.rank},
                  {"status", "stabilized"},
                  {"cap", probe.cap},
                  {"level", probe.prefix_words.back().size()}};
    }
    case Action::SeriesSymmetric: {
      sc::LinearRep rep = resolve_series(opts);
      sc::SymmetryResult r = sc::is_symmetric(rep);
      json out{{"symmetric", r.symmetric}};
      if (r.witness)
        out["witness"] = json::array({sc::word_to_string(r.witness->first, rep.alphabet),
                                      sc::word_to_string(r.witness->second, rep.alphabet)});
      return out;
    }
    case Action::SeriesAverage: {
      sc::LinearRep rep = resolve_series(opts);
      sc::LinearRep avg = sc::average(rep);
      return json{{"dim", avg.dim}, {"rep", sc::rep_to_json(avg)}};
    }
    case Action::SeriesSyntactic: {
      sc::SeriesPair pair = resolve_pair(opts, nullptr);
      sc::SyntacticData data = sc::syntactic_data(pair);
      json words = json::array(), left = json::array(), right = json::array();
      for (const sc::Word& w : data.algebra_basis_words)
        words.push_back(sc::word_to_string(w, data.alphabet));
      for (const sc::Word& w : data.left_basis_words)
        left.push_back(sc::word_to_string(w, data.alphabet));
      for (const sc::Word& w : data.right_basis_words)
        right.push_back(sc::word_to_string(w, data.alphabet));
      json sc_json = json::array();
      for (const sc::Scalar& c : data.structure_constants) sc_json.push_back(sc::scalar_to_json(c));
      return json{{"d", data.d},
                  {"ell", data.ell},
                  {"r", data.r},
                  {"algebra_basis", words},
                  {"left_basis", left},
                  {"right_basis", right},
                  {"structure_constants", sc_json},
                  {"unit", sc::vec_to_json(data.unit_coords)},
                  {"form_bullet", sc::vec_to_json(data.form_bullet)},
                  {"form_circ", sc::vec_to_json(data.form_circ)},
                  {"is_syntactic_bullet", sc::is_syntactic_pair(data, data.form_bullet)},
                  {"is_syntactic_circ", sc::is_syntactic_pair(data, data.form_circ)},
                  {"frobenius_bullet", sc::is_frobenius_form(data, data.form_bullet)},
                  {"frobenius_circ", sc::is_frobenius_form(data, data.form_circ)}};
    }
    case Action::CatMatchings: {
      sc::MatchingSet ms = sc::enumerate_matchings(sc::parse_signseq(opts.source),
                                                   sc::parse_signseq(opts.target), mode);
      return sc::matching_set_to_json(ms);
    }
    case Action::CatDim: {
      sc::SeriesPair pair = resolve_pair(opts, nullptr);
      sc::SyntacticData data = sc::syntactic_data(pair);
      sc::SignSeq s = sc::parse_signseq(opts.source), t = sc::parse_signseq(opts.target);
      return json{{"source", sc::signseq_to_string(s)},
                  {"target", sc::signseq_to_string(t)},
                  {"mode", opts.mode},
                  {"dim", sc::hom_dim(s, t, data, mode)},
                  {"dim_enumerated", sc::hom_dim_enumerated(s, t, data, mode)}};
    }
    case Action::CatBasis: {
      sc::SeriesPair pair = resolve_pair(opts, nullptr);
      sc::SyntacticData data = sc::syntactic_data(pair);
      sc::MatchingSet ms = sc::enumerate_matchings(sc::parse_signseq(opts.source),
                                                   sc::parse_signseq(opts.target), mode);
      std::vector<sc::SkeinBasisId> basis = sc::skein_basis(ms, data);
      json elements = json::array();
      for (const sc::SkeinBasisId& id : basis)
        elements.push_back(sc::basis_id_to_json(id, ms, data));
      return json{{"count", basis.size()}, {"elements", elements}};
    }
    case Action::CatCompose: {
      json j = load_input(opts);
      sc::SeriesPair pair = resolve_pair(opts, &j);
      sc::SyntacticData data = sc::syntactic_data(pair);
      sc::Morphism a = sc::morphism_from_json(j.at("a"), data.alphabet);
      sc::Morphism b = sc::morphism_from_json(j.at("b"), data.alphabet);
      enforce_mode(a, mode);
      enforce_mode(b, mode);
      sc::SkeinMorphism result = sc::skein_compose(sc::skein_normal_form(a, data, mode),
                                                   sc::skein_normal_form(b, data, mode), data, pair);
      return sc::skein_to_json(result, data);
    }
    case Action::CatEndoTable: {
      sc::SeriesPair pair = resolve_pair(opts, nullptr);
      sc::SyntacticData data = sc::syntactic_data(pair);
      sc::SignSeq eps = sc::parse_signseq(opts.object);
      sc::MatchingSet ms = sc::enumerate_matchings(eps, eps, mode);
      std::vector<sc::SkeinBasisId> basis = sc::skein_basis(ms, data);
      std::vector<sc::Scalar> table = sc::endo_algebra_table(eps, data, pair, mode);
      std::size_t n = basis.size();
      json jbasis = json::array();
      for (const sc::SkeinBasisId& id : basis) jbasis.push_back(sc::basis_id_to_json(id, ms, data));
      json jtable = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) {
          json cell = json::array();
          for (std::size_t l = 0; l < n; ++l)
            cell.push_back(sc::scalar_to_json(table[(i * n + k) * n + l]));
          row.push_back(std::move(cell));
        }
        jtable.push_back(std::move(row));
      }
      return json{{"object", sc::signseq_to_string(eps)},
                  {"mode", opts.mode},
                  {"dim", n},
                  {"basis", jbasis},
                  {"table", jtable}};
    }
    case Action::CatGram:
    case Action::CatQuotientDim: {
      sc::SeriesPair pair = resolve_pair(opts, nullptr);
      sc::SyntacticData data = sc::syntactic_data(pair);
      sc::SignSeq s = sc::parse_signseq(opts.source), t = sc::parse_signseq(opts.target);
      sc::GramReport report = sc::gram_matrix(s, t, data, pair, mode);
      if (action == Action::CatGram) return sc::gram_report_to_json(report, data);
      return json{{"source", sc::signseq_to_string(s)},
                  {"target", sc::signseq_to_string(t)},
                  {"mode", opts.mode},
                  {"dim", report.rank},
                  {"skein_dim", sc::hom_dim(s, t, data, mode)}};
    }
    case Action::CatStateSpace: {
      sc::SeriesPair pair = resolve_pair(opts, nullptr);
      sc::SyntacticData data = sc::syntactic_data(pair);
      sc::StateSpace space = sc::state_space(sc::parse_signseq(opts.object), data, pair, mode);
      return sc::state_space_to_json(space, data);
    }
    case Action::CatTcaMul: {
      json j = load_input(opts);
      sc::SeriesPair pair = resolve_pair(opts, &j);
      sc::SyntacticData data = sc::syntactic_data(pair);
      sc::Morphism x = sc::morphism_from_json(j.at("x"), data.alphabet);
      sc::Morphism y = sc::morphism_from_json(j.at("y"), data.alphabet);
      enforce_mode(x, mode);
      enforce_mode(y, mode);
      sc::TcaProduct prod = sc::tca_multiply(sc::skein_normal_form(x, data, mode),
                                             sc::skein_normal_form(y, data, mode), data, pair);
      return json{{"object", sc::signseq_to_string(prod.space.eps)},
                  {"mode", opts.mode},
                  {"space_dim", prod.space.dim},
                  {"coords", sc::vec_to_json(prod.coords)},
                  {"raw", sc::skein_to_json(prod.raw, data)}};
    }
    case Action::FixturesList: {
      json list = json::array();
      for (const sc::Fixture& f : sc::fixture_library())
        list.push_back(json{{"name", f.name},
                            {"description", f.description},
                            {"alphabet", sc::alphabet_to_json(f.alphabet)},
                            {"has_series", f.series.has_value()},
                            {"has_pair", f.has_pair()}});
      return json{{"fixtures", list}};
    }
    case Action::FixturesSelftest:
      return sc::selftest_to_json(sc::fixtures_selftest());
    case Action::None:
      break;
  }
  throw sc::ValidationError("no subcommand selected");
}

void emit(const json& report, const Options& opts) {
  std::string text = report.dump(2);
  std::cout << text << '\n';
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path);
    if (!out) throw sc::ValidationError("cannot open output file '" + opts.out_path + "'");
    out << text << '\n';
  }
}

json error_report(const std::string& type, const std::string& message) {
  return json{{"error", json{{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  Action action = Action::None;

  CLI::App app{"exact workbench for rational series and decorated one-dimensional cobordisms"};
  app.require_subcommand(1);
  app.add_option("--mode", opts.mode, "category flavor: c (no floating ends) or ctilde")
      ->check(CLI::IsMember({"c", "ctilde"}));
  app.add_option("--cap", opts.cap, "Hankel probe rank cap (default 16)");
  app.add_option("--fixture", opts.fixture, "name of a bundled fixture");
  app.add_option("--in", opts.in_path, "input JSON file");
  app.add_option("--out", opts.out_path, "also write the report to this file");

  auto leaf = [&](CLI::App* parent, const char* name, const char* desc, Action a) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([&action, a] { action = a; });
    return sub;
  };

  CLI::App* series = app.add_subcommand("series", "rational series operations");
  series->fallthrough();
  series->require_subcommand(1);
  CLI::App* s_eval = leaf(series, "eval", "evaluate on a word", Action::SeriesEval);
  s_eval->add_option("--word", opts.word, "word in dotted syntax, e.g. s1.s2 (\"e\" = empty)");
  leaf(series, "minimize", "minimal equivalent representation", Action::SeriesMinimize);
  leaf(series, "equiv", "decide equality of two series (--in {\"a\":...,\"b\":...})",
       Action::SeriesEquiv);
  leaf(series, "hankel", "probe the Hankel rank", Action::SeriesHankel);
  leaf(series, "symmetric", "test invariance under cyclic rotation", Action::SeriesSymmetric);
  leaf(series, "average", "project onto symmetric series", Action::SeriesAverage);
  leaf(series, "syntactic", "syntactic algebra of a pair", Action::SeriesSyntactic);

  CLI::App* cat = app.add_subcommand("cat", "decorated cobordism categories");
  cat->fallthrough();
  cat->require_subcommand(1);
  CLI::App* c_match = leaf(cat, "matchings", "enumerate boundary matchings", Action::CatMatchings);
  CLI::App* c_dim = leaf(cat, "dim", "hom-space dimension", Action::CatDim);
  CLI::App* c_basis = leaf(cat, "basis", "skein basis of a hom space", Action::CatBasis);
  leaf(cat, "compose", "compose two morphisms (--in {\"a\":...,\"b\":...})", Action::CatCompose);
  CLI::App* c_endo = leaf(cat, "endo-table", "endomorphism algebra table", Action::CatEndoTable);
  CLI::App* c_gram = leaf(cat, "gram", "trace-pairing Gram report", Action::CatGram);
  CLI::App* c_qdim = leaf(cat, "quotient-dim", "hom dimension after the negligible quotient",
                          Action::CatQuotientDim);
  CLI::App* c_state = leaf(cat, "statespace", "state space of an object", Action::CatStateSpace);
  leaf(cat, "tca-mul", "state-space product (--in {\"x\":...,\"y\":...})", Action::CatTcaMul);
  for (CLI::App* sub : {c_match, c_dim, c_basis, c_gram, c_qdim}) {
    sub->add_option("--source", opts.source, "source sign sequence, e.g. +-+ (\"e\" = empty)");
    sub->add_option("--target", opts.target, "target sign sequence");
  }
  for (CLI::App* sub : {c_endo, c_state})
    sub->add_option("--object", opts.object, "object sign sequence");

  CLI::App* fixtures = app.add_subcommand("fixtures", "bundled example library");
  fixtures->fallthrough();
  fixtures->require_subcommand(1);
  leaf(fixtures, "list", "list fixtures", Action::FixturesList);
  leaf(fixtures, "selftest", "run the fixtures' embedded expectations", Action::FixturesSelftest);

  CLI11_PARSE(app, argc, argv);

  try {
    if (const char* threads = std::getenv("SERIALCOB_THREADS")) {
      char* end = nullptr;
      long n = std::strtol(threads, &end, 10);
      if (end == threads || *end != '\0' || n < 1)
        throw sc::ValidationError("SERIALCOB_THREADS must be a positive integer");
      sc::set_gram_parallelism(static_cast<std::size_t>(n));
    }
    json report = run_action(action, opts);
    emit(report, opts);
    if (action == Action::FixturesSelftest && !report.at("ok").get<bool>()) return 1;
    return kExitOk;
  } catch (const CapRefusal& refusal) {
    json report = error_report("exceeded-cap", refusal.what);
    report["error"]["cap"] = refusal.probe.cap;
    report["error"]["rank_at_refusal"] = refusal.probe.rank;
    emit(report, opts);
    return kExitCapExceeded;
  } catch (const sc::ValidationError& e) {
    emit(error_report("validation", e.what()), opts);
    return kExitValidation;
  } catch (const json::exception& e) {
    emit(error_report("validation", std::string("JSON: ") + e.what()), opts);
    return kExitValidation;
  } catch (const std::exception& e) {
    emit(error_report("internal", e.what()), opts);
    return kExitValidation;
  }
}
