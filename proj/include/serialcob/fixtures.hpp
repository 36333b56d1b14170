#pragma once

#include <optional>
#include <string>

#include "serialcob/recognition.hpp"

namespace serialcob {

// A bundled example: a headline series (with an independent oracle) and,
// when meaningful, an (interval, circle) pair for the diagram categories.
// Expectations are embedded so the library can test itself.
struct Fixture {
  std::string name;
  std::string description;
  Alphabet alphabet;

  std::optional<LinearRep> series;  // headline series; absent iff only an oracle exists
  EvalFn oracle;                    // ground truth for the headline series

  std::optional<LinearRep> bullet;  // interval member of the pair
  std::optional<LinearRep> circ;    // circle member (symmetric)

  // embedded expectations
  std::size_t probe_cap = 16;
  bool expect_exceeds_cap = false;
  std::optional<std::size_t> expect_rank;
  std::optional<std::size_t> expect_d, expect_ell, expect_r;
  std::optional<bool> expect_frobenius_bullet;
  std::optional<bool> expect_frobenius_circ;
  std::optional<bool> expect_syntactic_bullet;

  bool has_pair() const { return bullet.has_value() && circ.has_value(); }
  SeriesPair pair() const;  // throws ValidationError when has_pair() is false
};

const std::vector<Fixture>& fixture_library();
const Fixture& find_fixture(const std::string& name);  // throws ValidationError

struct SelftestEntry {
  std::string fixture;
  std::string check;
  bool ok = false;
  std::string detail;
};

// Runs every embedded expectation; one entry per executed check.
std::vector<SelftestEntry> fixtures_selftest();

}  // namespace serialcob
