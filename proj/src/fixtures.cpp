#include "serialcob/fixtures.hpp"

#include <sstream>

#include "serialcob/errors.hpp"
#include "serialcob/syntactic.hpp"

namespace serialcob {

namespace {

Vec qvec(const std::vector<long>& entries) {
  Vec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Matrix qmat(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = Scalar(rows[i][j]);
  return m;
}

LinearRep make_rep(Alphabet alphabet, Vec mu, Vec lambda, std::vector<Matrix> psi) {
  LinearRep r;
  r.alphabet = std::move(alphabet);
  r.dim = mu.size();
  r.mu = std::move(mu);
  r.lambda = std::move(lambda);
  r.psi = std::move(psi);
  r.validate();
  return r;
}

LinearRep geometric_rep() {
  return make_rep(Alphabet{{"s"}}, qvec({1}), qvec({1}), {qmat({{2}})});
}

LinearRep fibonacci_rep() {
  return make_rep(Alphabet{{"s"}}, qvec({0, 1}), qvec({1, 0}), {qmat({{1, 1}, {1, 0}})});
}

// Same series as fibonacci_rep, hidden in a reducible five-dimensional
// representation: a junk block that is partly reachable but never observed.
LinearRep fibonacci_padded_rep() {
  return make_rep(Alphabet{{"s"}}, qvec({0, 1, 0, 0, 0}), qvec({1, 0, 1, 0, 0}),
                  {qmat({{1, 1, 0, 0, 0},
                         {1, 0, 0, 0, 0},
                         {0, 0, 1, 2, 0},
                         {0, 0, 0, 1, 0},
                         {0, 0, 5, 0, 7}})});
}

LinearRep m2_x11_rep() {
  return make_rep(Alphabet{{"a", "b"}}, qvec({1, 0}), qvec({1, 0}),
                  {qmat({{0, 1}, {0, 0}}), qmat({{0, 0}, {1, 0}})});
}

// w |-> trace of the product of elementary matrices a = E12, b = E21; the
// state is the 2x2 matrix accumulated so far, laid out row-major.
LinearRep m2_trace_rep() {
  return make_rep(Alphabet{{"a", "b"}}, qvec({1, 0, 0, 1}), qvec({1, 0, 0, 1}),
                  {qmat({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}),
                   qmat({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}})});
}

LinearRep path_rep() {
  return make_rep(Alphabet{{"a", "b"}}, qvec({1, 0}), qvec({0, 1}),
                  {qmat({{1, 1}, {0, 0}}), qmat({{0, 0}, {0, 1}})});
}

Scalar geometric_oracle(const Word& w) {
  Scalar v(1);
  for (std::size_t i = 0; i < w.size(); ++i) v *= 2;
  return v;
}

Scalar fibonacci_oracle(const Word& w) {
  mpz_class a = 0, b = 1;  // F(0), F(1)
  for (std::size_t i = 0; i < w.size(); ++i) {
    mpz_class next = a + b;
    a = b;
    b = next;
  }
  return Scalar(a);
}

// Characteristic series of { s^n t s^n : n >= 0 } over {s, t}.
Scalar sntsn_oracle(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w.letters[n] == 0) ++n;
  if (n >= w.size() || w.letters[n] != 1) return Scalar(0);
  if (w.size() != 2 * n + 1) return Scalar(0);
  for (std::size_t i = n + 1; i < w.size(); ++i)
    if (w.letters[i] != 0) return Scalar(0);
  return Scalar(1);
}

// Entry (1,1) of a word in E12, E21: nonzero exactly on (ab)^k.
Scalar m2_x11_oracle(const Word& w) {
  if (w.size() % 2 != 0) return Scalar(0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.letters[i] != (i % 2 == 0 ? 0u : 1u)) return Scalar(0);
  return Scalar(1);
}

// Trace of a word in E12, E21: 2 on the empty word, 1 on nonempty
// alternating words of even length, otherwise 0.
Scalar m2_trace_oracle(const Word& w) {
  if (w.empty()) return Scalar(2);
  if (w.size() % 2 != 0) return Scalar(0);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.letters[i] == w.letters[i - 1]) return Scalar(0);
  return Scalar(1);
}

// Paths in the two-vertex one-arrow quiver: nonzero exactly on a^i b^j, i>=1.
Scalar path_oracle(const Word& w) {
  if (w.empty() || w.letters[0] != 0) return Scalar(0);
  bool seen_b = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.letters[i] == 1)
      seen_b = true;
    else if (seen_b)
      return Scalar(0);
  }
  return Scalar(1);
}

std::vector<Fixture> build_library() {
  std::vector<Fixture> lib;

  {
    Fixture f;
    f.name = "geometric";
    f.description = "one-letter series s^n -> 2^n; the simplest rational generating function";
    f.alphabet = Alphabet{{"s"}};
    f.series = geometric_rep();
    f.oracle = geometric_oracle;
    f.bullet = geometric_rep();
    f.circ = zero_rep(f.alphabet);
    f.expect_rank = 1;
    f.expect_d = 1;
    f.expect_ell = 1;
    f.expect_r = 1;
    f.expect_frobenius_bullet = true;
    f.expect_syntactic_bullet = true;
    lib.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "fib";
    f.description = "one-letter series s^n -> F(n) (Fibonacci), minimal dimension 2";
    f.alphabet = Alphabet{{"s"}};
    f.series = fibonacci_rep();
    f.oracle = fibonacci_oracle;
    f.bullet = fibonacci_rep();
    f.circ = zero_rep(f.alphabet);
    f.expect_rank = 2;
    f.expect_d = 2;
    f.expect_ell = 2;
    f.expect_r = 2;
    f.expect_frobenius_bullet = true;
    f.expect_syntactic_bullet = true;
    lib.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "fib-padded";
    f.description = "the Fibonacci series wrapped in a reducible dimension-5 representation";
    f.alphabet = Alphabet{{"s"}};
    f.series = fibonacci_padded_rep();
    f.oracle = fibonacci_oracle;
    f.bullet = fibonacci_padded_rep();
    f.circ = zero_rep(f.alphabet);
    f.expect_rank = 2;
    f.expect_d = 2;
    f.expect_ell = 2;
    f.expect_r = 2;
    lib.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sntsn";
    f.description = "characteristic series of { s^n t s^n }; not recognizable (unbounded Hankel rank)";
    f.alphabet = Alphabet{{"s", "t"}};
    f.oracle = sntsn_oracle;
    f.probe_cap = 4;
    f.expect_exceeds_cap = true;
    lib.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "m2-x11";
    f.description = "entry (1,1) of words in the elementary matrices a = E12, b = E21; "
                    "syntactic algebra M2, interval quotients of dimension 2";
    f.alphabet = Alphabet{{"a", "b"}};
    f.series = m2_x11_rep();
    f.oracle = m2_x11_oracle;
    f.bullet = m2_x11_rep();
    f.circ = zero_rep(f.alphabet);
    f.expect_rank = 2;
    f.expect_d = 4;
    f.expect_ell = 2;
    f.expect_r = 2;
    f.expect_frobenius_bullet = false;
    f.expect_syntactic_bullet = true;
    lib.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "m2-trace";
    f.description = "trace of words in a = E12, b = E21; a symmetric series whose form is Frobenius";
    f.alphabet = Alphabet{{"a", "b"}};
    f.series = m2_trace_rep();
    f.oracle = m2_trace_oracle;
    f.bullet = zero_rep(f.alphabet);
    f.circ = m2_trace_rep();
    f.expect_rank = 4;
    f.expect_d = 4;
    f.expect_ell = 0;
    f.expect_r = 0;
    f.expect_frobenius_circ = true;
    lib.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "path";
    f.description = "characteristic series of a+b* (paths in the quiver 1 -> 2); "
                    "syntactic algebra = upper-triangular 2x2 matrices, dimension 3";
    f.alphabet = Alphabet{{"a", "b"}};
    f.series = path_rep();
    f.oracle = path_oracle;
    f.bullet = path_rep();
    f.circ = zero_rep(f.alphabet);
    f.expect_rank = 2;
    f.expect_d = 3;
    f.expect_ell = 2;
    f.expect_r = 2;
    f.expect_frobenius_bullet = false;
    f.expect_syntactic_bullet = true;
    lib.push_back(std::move(f));
  }
  for (long lam : {0L, 1L, 3L}) {
    Fixture f;
    f.name = "brauer-" + std::to_string(lam);
    f.description = "undecorated strands (S empty) with circle value " + std::to_string(lam) +
                    "; endomorphism algebras are walled Brauer algebras";
    f.alphabet = Alphabet{};
    f.series = const_rep(f.alphabet, Scalar(lam));
    f.oracle = [lam](const Word&) { return Scalar(lam); };
    f.bullet = zero_rep(f.alphabet);
    f.circ = const_rep(f.alphabet, Scalar(lam));
    f.expect_rank = lam == 0 ? 0 : 1;
    f.expect_d = lam == 0 ? 0 : 1;
    f.expect_ell = 0;
    f.expect_r = 0;
    if (lam != 0) f.expect_frobenius_circ = true;
    lib.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "geo-fib";
    f.description = "one-letter pair: intervals evaluate geometrically (2^n), circles by Fibonacci";
    f.alphabet = Alphabet{{"s"}};
    f.series = geometric_rep();
    f.oracle = geometric_oracle;
    f.bullet = geometric_rep();
    f.circ = fibonacci_rep();
    f.expect_rank = 1;
    f.expect_d = 3;
    f.expect_ell = 1;
    f.expect_r = 1;
    lib.push_back(std::move(f));
  }
  return lib;
}

}  // namespace

SeriesPair Fixture::pair() const {
  if (!has_pair()) throw ValidationError("fixture '" + name + "' has no series pair");
  return SeriesPair{*bullet, *circ};
}

const std::vector<Fixture>& fixture_library() {
  static const std::vector<Fixture> lib = build_library();
  return lib;
}

const Fixture& find_fixture(const std::string& name) {
  for (const Fixture& f : fixture_library())
    if (f.name == name) return f;
  throw ValidationError("unknown fixture '" + name + "'");
}

std::vector<SelftestEntry> fixtures_selftest() {
  std::vector<SelftestEntry> out;
  auto push = [&out](const std::string& fixture, const std::string& check, bool ok,
                     std::string detail = "") {
    out.push_back({fixture, check, ok, std::move(detail)});
  };
  auto num = [](std::size_t expected, std::size_t got) {
    std::ostringstream os;
    os << "expected " << expected << ", got " << got;
    return os.str();
  };
  for (const Fixture& f : fixture_library()) {
    HankelProbe probe = hankel_rank_probe(f.oracle, f.alphabet, f.probe_cap);
    bool exceeded = probe.status == ProbeStatus::ExceededCap;
    push(f.name, "probe-status", exceeded == f.expect_exceeds_cap,
         exceeded ? "exceeded cap" : "stabilized");
    if (f.expect_rank)
      push(f.name, "hankel-rank", !exceeded && probe.rank == *f.expect_rank,
           num(*f.expect_rank, probe.rank));
    if (f.series) {
      bool ok = true;
      std::string detail;
      std::size_t max_len = f.alphabet.size() > 1 ? 7 : 12;
      for (const Word& w : words_up_to(f.alphabet.size(), max_len))
        if (eval_rep(*f.series, w) != f.oracle(w)) {
          ok = false;
          detail = "disagrees at " + word_to_string(w, f.alphabet);
          break;
        }
      push(f.name, "series-matches-oracle", ok, detail);
    }
    if (f.has_pair()) {
      SeriesPair p = f.pair();
      push(f.name, "circ-symmetric", is_symmetric(p.circ).symmetric);
      SyntacticData data = syntactic_data(p);
      if (f.expect_d) push(f.name, "algebra-dim", data.d == *f.expect_d, num(*f.expect_d, data.d));
      if (f.expect_ell)
        push(f.name, "left-codim", data.ell == *f.expect_ell, num(*f.expect_ell, data.ell));
      if (f.expect_r) push(f.name, "right-codim", data.r == *f.expect_r, num(*f.expect_r, data.r));
      if (f.expect_frobenius_bullet)
        push(f.name, "frobenius-bullet",
             is_frobenius_form(data, data.form_bullet) == *f.expect_frobenius_bullet);
      if (f.expect_frobenius_circ)
        push(f.name, "frobenius-circ",
             is_frobenius_form(data, data.form_circ) == *f.expect_frobenius_circ);
      if (f.expect_syntactic_bullet)
        push(f.name, "syntactic-bullet",
             is_syntactic_pair(data, data.form_bullet) == *f.expect_syntactic_bullet);
    }
  }
  return out;
}

}  // namespace serialcob
