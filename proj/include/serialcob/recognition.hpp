#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "serialcob/series.hpp"

namespace serialcob {

enum class ProbeStatus { Stabilized, ExceededCap };

struct HankelProbe {
  std::vector<Word> prefix_words;  // length-lex, the level that settled the probe
  std::vector<Word> suffix_words;
  Matrix matrix;                   // matrix[i][j] = eval(prefix_i . suffix_j)
  std::size_t rank = 0;
  ProbeStatus status = ProbeStatus::Stabilized;
  std::size_t cap = 0;
};

using EvalFn = std::function<Scalar(const Word&)>;

// Grows prefixes/suffixes one whole length-level at a time; stops when the
// rank repeats across a level (Stabilized) or climbs past cap (ExceededCap).
HankelProbe hankel_rank_probe(const EvalFn& eval, const Alphabet& alphabet, std::size_t cap);
HankelProbe hankel_rank_probe(const LinearRep& rep, std::size_t cap);

// Schuetzenberger reduction: restrict to the reachable span of lambda, then
// to the observable span of mu. Output dimension equals the Hankel rank.
LinearRep minimize(const LinearRep& rep);

struct EquivResult {
  bool equivalent = false;
  std::optional<Word> witness;  // shortest length-lex disagreeing word
};
EquivResult equivalent(const LinearRep& a, const LinearRep& b);

struct SymmetryResult {
  bool symmetric = false;
  std::optional<std::pair<Word, Word>> witness;  // (u, v) with alpha(uv) != alpha(vu)
};
SymmetryResult is_symmetric(const LinearRep& rep);

// aver(alpha)(w) = sum over splits w = uv with v nonempty of alpha(vu);
// aver(alpha)(empty) = alpha(empty).
Scalar aver_eval(const LinearRep& rep, const Word& w);
LinearRep average(const LinearRep& rep);

}  // namespace serialcob
