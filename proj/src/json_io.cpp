#include "serialcob/json_io.hpp"

#include "serialcob/errors.hpp"

namespace serialcob {

json scalar_to_json(const Scalar& x) { return scalar_to_string(x); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  throw ValidationError("scalar must be a string \"p/q\" or an integer");
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const Scalar& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("vector must be a JSON array");
  Vec v;
  v.reserve(j.size());
  for (const json& e : j) v.push_back(scalar_from_json(e));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
  std::vector<Vec> rows;
  rows.reserve(j.size());
  for (const json& r : j) rows.push_back(vec_from_json(r));
  for (const Vec& r : rows)
    if (r.size() != rows[0].size()) throw ValidationError("matrix rows have unequal lengths");
  return Matrix::from_rows(rows);
}

json alphabet_to_json(const Alphabet& a) { return json(a.letters); }

Alphabet alphabet_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("alphabet must be an array of letter names");
  Alphabet a;
  for (const json& e : j) {
    if (!e.is_string()) throw ValidationError("letter names must be strings");
    a.letters.push_back(e.get<std::string>());
  }
  for (std::size_t i = 0; i < a.letters.size(); ++i)
    for (std::size_t k = i + 1; k < a.letters.size(); ++k)
      if (a.letters[i] == a.letters[k])
        throw ValidationError("duplicate letter '" + a.letters[i] + "'");
  return a;
}

json rep_to_json(const LinearRep& rep) {
  json psi = json::object();
  for (std::size_t s = 0; s < rep.alphabet.size(); ++s)
    psi[rep.alphabet.letters[s]] = matrix_to_json(rep.psi[s]);
  return json{{"alphabet", alphabet_to_json(rep.alphabet)},
              {"dim", rep.dim},
              {"lambda", vec_to_json(rep.lambda)},
              {"mu", vec_to_json(rep.mu)},
              {"psi", psi}};
}

LinearRep rep_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("representation must be a JSON object");
  LinearRep rep;
  rep.alphabet = alphabet_from_json(j.at("alphabet"));
  rep.dim = j.at("dim").get<std::size_t>();
  rep.lambda = vec_from_json(j.at("lambda"));
  rep.mu = vec_from_json(j.at("mu"));
  const json& psi = j.at("psi");
  for (const std::string& letter : rep.alphabet.letters) {
    if (!psi.contains(letter)) throw ValidationError("psi is missing letter '" + letter + "'");
    rep.psi.push_back(matrix_from_json(psi.at(letter)));
  }
  rep.validate();
  return rep;
}

json pair_to_json(const SeriesPair& pair) {
  return json{{"bullet", rep_to_json(pair.bullet)}, {"circ", rep_to_json(pair.circ)}};
}

SeriesPair pair_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("pair must be a JSON object");
  return SeriesPair{rep_from_json(j.at("bullet")), rep_from_json(j.at("circ"))};
}

namespace {

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Through: return "through";
    case ComponentKind::Cup: return "cup";
    case ComponentKind::Cap: return "cap";
    case ComponentKind::HalfOut: return "halfout";
    case ComponentKind::HalfIn: return "halfin";
    case ComponentKind::FloatInterval: return "floatinterval";
    case ComponentKind::FloatCircle: return "floatcircle";
  }
  return "?";
}

ComponentKind kind_from_name(const std::string& s) {
  if (s == "through") return ComponentKind::Through;
  if (s == "cup") return ComponentKind::Cup;
  if (s == "cap") return ComponentKind::Cap;
  if (s == "halfout") return ComponentKind::HalfOut;
  if (s == "halfin") return ComponentKind::HalfIn;
  if (s == "floatinterval") return ComponentKind::FloatInterval;
  if (s == "floatcircle") return ComponentKind::FloatCircle;
  throw ValidationError("unknown component kind '" + s + "'");
}

json endpoint_to_json(const Endpoint& e) {
  return json::array({e.side == EndSide::Src ? "src" : "tgt", e.pos});
}

Endpoint endpoint_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string())
    throw ValidationError("endpoint must be [\"src\"|\"tgt\", index]");
  Endpoint e;
  std::string side = j[0].get<std::string>();
  if (side == "src")
    e.side = EndSide::Src;
  else if (side == "tgt")
    e.side = EndSide::Tgt;
  else
    throw ValidationError("endpoint side must be \"src\" or \"tgt\"");
  e.pos = j[1].get<std::size_t>();
  return e;
}

}  // namespace

json diagram_to_json(const Diagram& d, const Alphabet& alphabet) {
  json comps = json::array();
  for (const Component& c : d.components) {
    json jc{{"kind", kind_name(c.kind)}, {"label", word_to_string(c.label, alphabet)}};
    if (c.from) jc["from"] = endpoint_to_json(*c.from);
    if (c.to) jc["to"] = endpoint_to_json(*c.to);
    comps.push_back(std::move(jc));
  }
  return json{{"source", signseq_to_string(d.source)},
              {"target", signseq_to_string(d.target)},
              {"components", comps}};
}

Diagram diagram_from_json(const json& j, const Alphabet& alphabet) {
  if (!j.is_object()) throw ValidationError("diagram must be a JSON object");
  Diagram d;
  d.source = parse_signseq(j.at("source").get<std::string>());
  d.target = parse_signseq(j.at("target").get<std::string>());
  for (const json& jc : j.value("components", json::array())) {
    Component c;
    c.kind = kind_from_name(jc.at("kind").get<std::string>());
    if (jc.contains("from")) c.from = endpoint_from_json(jc.at("from"));
    if (jc.contains("to")) c.to = endpoint_from_json(jc.at("to"));
    c.label = parse_word(jc.value("label", "e"), alphabet);
    if (c.kind == ComponentKind::FloatCircle) c.label = cyclic_normalize(c.label).representative;
    d.components.push_back(std::move(c));
  }
  d.normalize();
  validate_diagram(d);
  return d;
}

json morphism_to_json(const Morphism& m, const Alphabet& alphabet) {
  json terms = json::array();
  for (const auto& [d, c] : m.terms)
    terms.push_back(json{{"coeff", scalar_to_json(c)}, {"diagram", diagram_to_json(d, alphabet)}});
  return json{{"source", signseq_to_string(m.source)},
              {"target", signseq_to_string(m.target)},
              {"terms", terms}};
}

Morphism morphism_from_json(const json& j, const Alphabet& alphabet) {
  if (!j.is_object()) throw ValidationError("morphism must be a JSON object");
  Morphism m = zero_morphism(parse_signseq(j.at("source").get<std::string>()),
                             parse_signseq(j.at("target").get<std::string>()));
  for (const json& jt : j.value("terms", json::array()))
    m.add_term(diagram_from_json(jt.at("diagram"), alphabet), scalar_from_json(jt.at("coeff")));
  return m;
}

namespace {

json matching_to_json(const Matching& m) {
  json pairs = json::array();
  for (const auto& [p, q] : m.pairs) pairs.push_back(json::array({p, q}));
  return json{{"pairs", pairs}, {"unmatched", m.unmatched}};
}

}  // namespace

json basis_id_to_json(const SkeinBasisId& id, const MatchingSet& ms, const SyntacticData& data) {
  json out{{"matching", id.matching}, {"decor", id.decor}};
  out["diagram"] = diagram_to_json(basis_diagram(ms, id, data), data.alphabet);
  return out;
}

json skein_to_json(const SkeinMorphism& m, const SyntacticData& data) {
  MatchingSet ms = enumerate_matchings(m.source, m.target, m.mode);
  json terms = json::array();
  for (const auto& [id, c] : m.coords) {
    json jt = basis_id_to_json(id, ms, data);
    jt["coeff"] = scalar_to_json(c);
    terms.push_back(std::move(jt));
  }
  return json{{"source", signseq_to_string(m.source)},
              {"target", signseq_to_string(m.target)},
              {"mode", mode_to_string(m.mode)},
              {"terms", terms}};
}

json matching_set_to_json(const MatchingSet& ms) {
  json list = json::array();
  for (const Matching& m : ms.matchings) list.push_back(matching_to_json(m));
  return json{{"source", signseq_to_string(ms.source)},
              {"target", signseq_to_string(ms.target)},
              {"mode", mode_to_string(ms.mode)},
              {"count", ms.matchings.size()},
              {"matchings", list}};
}

json gram_report_to_json(const GramReport& report, const SyntacticData& data) {
  MatchingSet col_ms = enumerate_matchings(report.eps, report.eps_prime, report.mode);
  MatchingSet row_ms = enumerate_matchings(report.eps_prime, report.eps, report.mode);
  json rows = json::array(), cols = json::array();
  for (const SkeinBasisId& id : report.row_basis) rows.push_back(basis_id_to_json(id, row_ms, data));
  for (const SkeinBasisId& id : report.col_basis) cols.push_back(basis_id_to_json(id, col_ms, data));
  json kernel = json::array();
  for (const Vec& v : report.kernel_basis) kernel.push_back(vec_to_json(v));
  return json{{"eps", signseq_to_string(report.eps)},
              {"eps_prime", signseq_to_string(report.eps_prime)},
              {"mode", mode_to_string(report.mode)},
              {"row_basis", rows},
              {"col_basis", cols},
              {"gram", matrix_to_json(report.gram)},
              {"rank", report.rank},
              {"kernel_basis", kernel}};
}

json state_space_to_json(const StateSpace& space, const SyntacticData& data) {
  MatchingSet ms = enumerate_matchings(SignSeq{}, space.eps, space.mode);
  json reps = json::array();
  for (const SkeinBasisId& id : space.representatives)
    reps.push_back(basis_id_to_json(id, ms, data));
  return json{{"eps", signseq_to_string(space.eps)},
              {"mode", mode_to_string(space.mode)},
              {"dim", space.dim},
              {"representatives", reps}};
}

json selftest_to_json(const std::vector<SelftestEntry>& entries) {
  json list = json::array();
  bool all_ok = true;
  for (const SelftestEntry& e : entries) {
    all_ok = all_ok && e.ok;
    json je{{"fixture", e.fixture}, {"check", e.check}, {"ok", e.ok}};
    if (!e.detail.empty()) je["detail"] = e.detail;
    list.push_back(std::move(je));
  }
  return json{{"ok", all_ok}, {"checks", list}};
}

std::string mode_to_string(Mode mode) { return mode == Mode::NoFloating ? "c" : "ctilde"; }

Mode mode_from_string(const std::string& s) {
  if (s == "c") return Mode::NoFloating;
  if (s == "ctilde") return Mode::WithFloating;
  throw ValidationError("mode must be \"c\" or \"ctilde\"");
}

}  // namespace serialcob
