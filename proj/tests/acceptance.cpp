// Acceptance suite: one line of output per criterion, nonzero exit on any
// failure. Each criterion re-derives its expected values from first
// principles (closed forms, splitting sums, brute-force enumerations) rather
// than trusting the library's own intermediate results.

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "serialcob/fixtures.hpp"
#include "serialcob/gligible.hpp"
#include "serialcob/json_io.hpp"
#include "testutil.hpp"

using namespace serialcob;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail = "") {
  if (ok) {
    std::printf("[PASS] criterion %d: %s\n", number, title.c_str());
  } else {
    ++failures;
    std::printf("[FAIL] criterion %d: %s%s%s\n", number, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
  }
  std::fflush(stdout);
}

void run(int number, const std::string& title, const std::function<void(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = true;
  try {
    body(detail);
    ok = detail.str().empty();
  } catch (const std::exception& e) {
    ok = false;
    detail << "exception: " << e.what();
  }
  report(number, title, ok, detail.str());
}

std::vector<SignSeq> all_signseqs_up_to(std::size_t max_len) {
  std::vector<SignSeq> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      SignSeq s;
      for (std::size_t i = 0; i < len; ++i) s.signs.push_back((bits >> i) & 1 ? 1 : -1);
      out.push_back(std::move(s));
    }
  return out;
}

unsigned long long factorial(unsigned long long n) {
  unsigned long long f = 1;
  for (unsigned long long i = 2; i <= n; ++i) f *= i;
  return f;
}

unsigned long long ipow(unsigned long long b, unsigned long long e) {
  unsigned long long p = 1;
  while (e--) p *= b;
  return p;
}

}  // namespace

int main() {
  const Fixture& m2 = find_fixture("m2-x11");
  SeriesPair m2_pair = m2.pair();
  SyntacticData m2_data = syntactic_data(m2_pair);

  run(1, "matching counts of the two reference interfaces", [&](std::ostringstream& out) {
    std::size_t three = enumerate_matchings(parse_signseq("+"), parse_signseq("+-"),
                                            Mode::WithFloating).matchings.size();
    std::size_t seven = enumerate_matchings(parse_signseq("+"), parse_signseq("++-"),
                                            Mode::WithFloating).matchings.size();
    if (three != 3) out << "I((+),(+-)) gave " << three << " ";
    if (seven != 7) out << "I((+),(++-)) gave " << seven;
  });

  run(2, "no-floating hom dimensions follow n! 4^n for the 2x2 matrix pair",
      [&](std::ostringstream& out) {
        std::vector<SignSeq> shapes = all_signseqs_up_to(3);
        std::size_t checked = 0;
        for (const SignSeq& src : shapes)
          for (const SignSeq& tgt : shapes) {
            if ((src.size() + tgt.size()) % 2 != 0) continue;
            if (weight(src) != weight(tgt)) continue;
            std::size_t n = (src.size() + tgt.size()) / 2;
            if (n > 3) continue;
            unsigned long long expected = factorial(n) * ipow(4, n);
            std::size_t closed = hom_dim(src, tgt, m2_data, Mode::NoFloating);
            std::size_t enumerated = hom_dim_enumerated(src, tgt, m2_data, Mode::NoFloating);
            if (closed != expected || enumerated != expected) {
              out << "Hom(" << signseq_to_string(src) << ", " << signseq_to_string(tgt)
                  << ") closed " << closed << " enumerated " << enumerated << " expected "
                  << expected;
              return;
            }
            ++checked;
          }
        if (checked < 20) out << "only " << checked << " balanced pairs checked";
      });

  run(3, "strand endomorphism dimension d + ell*r and the half-arc ideal law",
      [&](std::ostringstream& out) {
        SignSeq plus = parse_signseq("+");
        for (const Fixture& f : fixture_library()) {
          if (!f.has_pair()) continue;
          SeriesPair pair = f.pair();
          SyntacticData data = syntactic_data(pair);
          std::size_t expected = data.d + data.ell * data.r;
          std::size_t dim = hom_dim(plus, plus, data, Mode::WithFloating);
          std::size_t count = skein_basis(enumerate_matchings(plus, plus, Mode::WithFloating),
                                          data).size();
          if (dim != expected || count != expected) {
            out << f.name << ": dim " << dim << " basis " << count << " expected " << expected;
            return;
          }
          if (f.name == "m2-x11" && dim != 8) {
            out << "m2-x11 endomorphisms expected 8, got " << dim;
            return;
          }
          if (data.ell == 0 || data.r == 0) continue;
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
                  Scalar coeff = pair.eval_bullet(concat(data.right_basis_words[x2],
                                                         data.left_basis_words[y1]));
                  SkeinMorphism expect = zero_skein(plus, plus, Mode::WithFloating);
                  expect.add(SkeinBasisId{0, {y2, x1}}, coeff);
                  if (!(prod == expect)) {
                    out << f.name << ": ideal law fails at (" << x1 << "," << x2 << ","
                        << y1 << "," << y2 << ")";
                    return;
                  }
                }
        }
      });

  run(4, "syntactic dimensions, syntacticity and Frobenius verdicts",
      [&](std::ostringstream& out) {
        SyntacticData path_data = syntactic_data(find_fixture("path").pair());
        if (path_data.d != 3) { out << "path d = " << path_data.d; return; }
        if (m2_data.d != 4) { out << "m2-x11 d = " << m2_data.d; return; }
        if (!is_syntactic_pair(m2_data, m2_data.form_bullet)) {
          out << "m2-x11 corner form not syntactic";
          return;
        }
        if (is_frobenius_form(m2_data, m2_data.form_bullet)) {
          out << "m2-x11 corner form wrongly Frobenius";
          return;
        }
        SyntacticData trace_data = syntactic_data(find_fixture("m2-trace").pair());
        if (!is_frobenius_form(trace_data, trace_data.form_circ))
          out << "m2-trace circle form not Frobenius";
      });

  run(5, "rank probes and minimization on the numeric fixtures",
      [&](std::ostringstream& out) {
        const Fixture& fib = find_fixture("fib");
        HankelProbe fp = hankel_rank_probe(*fib.series, 8);
        if (fp.rank != 2 || fp.status != ProbeStatus::Stabilized) {
          out << "fib rank " << fp.rank;
          return;
        }
        const Fixture& padded = find_fixture("fib-padded");
        LinearRep small = minimize(*padded.series);
        if (small.dim != 2) { out << "padded minimized to " << small.dim; return; }
        for (const Word& w : words_up_to(1, 8))
          if (eval_rep(small, w) != eval_rep(*padded.series, w)) {
            out << "padded disagrees after minimization on length " << w.size();
            return;
          }
        const Fixture& geo = find_fixture("geometric");
        HankelProbe gp = hankel_rank_probe(*geo.series, 8);
        if (gp.rank != 1) { out << "geometric rank " << gp.rank; return; }
        const Fixture& nested = find_fixture("sntsn");
        HankelProbe np = hankel_rank_probe(nested.oracle, nested.alphabet, 4);
        if (np.status != ProbeStatus::ExceededCap)
          out << "nested indicator did not exceed cap 4";
      });

  run(6, "averaging 20 random representations", [&](std::ostringstream& out) {
    std::mt19937 rng(2026);
    Alphabet two{{"a", "b"}};
    for (int trial = 0; trial < 20; ++trial) {
      LinearRep r = testutil::random_rep(rng, two, 3);
      LinearRep avg = average(r);
      for (const Word& w : words_up_to(2, 4)) {
        Scalar expected = testutil::aver_split_oracle(r, w);
        if (aver_eval(r, w) != expected) {
          out << "trial " << trial << ": aver_eval mismatch";
          return;
        }
        if (eval_rep(avg, w) != expected) {
          out << "trial " << trial << ": average() mismatch";
          return;
        }
      }
      if (!is_symmetric(avg).symmetric) {
        out << "trial " << trial << ": average not symmetric";
        return;
      }
    }
  });

  run(7, "category laws on random diagrams", [&](std::ostringstream& out) {
    SeriesPair pair = testutil::reversal_symmetric_pair();
    std::mt19937 rng(777);
    auto same = [](const Morphism& a, const Morphism& b) {
      return a.source == b.source && a.target == b.target && a.terms == b.terms;
    };
    int cases = 0;
    for (int trial = 0; trial < 45; ++trial) {
      SignSeq e0 = testutil::random_signseq(rng, 4);
      SignSeq e1 = testutil::random_signseq(rng, 4);
      SignSeq e2 = testutil::random_signseq(rng, 4);
      SignSeq e3 = testutil::random_signseq(rng, 4);
      Morphism f = testutil::random_morphism(rng, e2, e3, 2, 2);
      Morphism g = testutil::random_morphism(rng, e1, e2, 2, 2);
      Morphism h = testutil::random_morphism(rng, e0, e1, 2, 2);
      if (!same(compose(compose(f, g, pair), h, pair), compose(f, compose(g, h, pair), pair))) {
        out << "associativity fails";
        return;
      }
      ++cases;
      if (!same(compose(f, identity_morphism(e2), pair), f) ||
          !same(compose(identity_morphism(e3), f, pair), f)) {
        out << "identity fails";
        return;
      }
      ++cases;
      Morphism p = testutil::random_morphism(rng, e0, e1, 2, 2);
      Morphism q = testutil::random_morphism(rng, e1, e2, 2, 2);
      if (!same(compose(tensor(f, q), tensor(g, p), pair),
                tensor(compose(f, g, pair), compose(q, p, pair)))) {
        out << "tensor interchange fails";
        return;
      }
      ++cases;
      if (!same(involution(compose(f, g, pair)),
                compose(involution(g), involution(f), pair))) {
        out << "involution contravariance fails";
        return;
      }
      ++cases;
      Morphism x = testutil::random_morphism(rng, e0, e1, 2, 2);
      Morphism y = testutil::random_morphism(rng, e1, e0, 2, 2);
      if (close_trace(compose(x, y, pair), pair) != close_trace(compose(y, x, pair), pair)) {
        out << "trace symmetry fails";
        return;
      }
      ++cases;
    }
    if (cases < 200) out << "only " << cases << " cases executed";
  });

  run(8, "negligible kernels form ideals with perfect quotient pairings",
      [&](std::ostringstream& out) {
        Alphabet empty{};
        SeriesPair walled{zero_rep(empty), const_rep(empty, Scalar(1))};
        SyntacticData wdata = syntactic_data(walled);
        SignSeq pm = balanced_object(1);
        GramReport g = gram_matrix(pm, pm, wdata, walled, Mode::NoFloating);
        if (g.rank != 1 || g.kernel_basis.size() != 1) {
          out << "walled parameter 1 kernel unexpected (rank " << g.rank << ")";
          return;
        }
        SkeinMorphism z = zero_skein(pm, pm, Mode::NoFloating);
        for (std::size_t i = 0; i < g.col_basis.size(); ++i)
          z.add(g.col_basis[i], g.kernel_basis[0][i]);

        std::mt19937 rng(4321);
        std::vector<SignSeq> shapes = {SignSeq{}, pm, parse_signseq("-+"), balanced_object(2)};
        std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
        int checked = 0;
        while (checked < 50) {
          const SignSeq& outshape = shapes[pick(rng)];
          const SignSeq& inshape = shapes[pick(rng)];
          auto post_basis =
              skein_basis(enumerate_matchings(pm, outshape, Mode::NoFloating), wdata);
          auto pre_basis =
              skein_basis(enumerate_matchings(inshape, pm, Mode::NoFloating), wdata);
          if (post_basis.empty() || pre_basis.empty()) continue;
          std::uniform_int_distribution<std::size_t> pj(0, post_basis.size() - 1);
          std::uniform_int_distribution<std::size_t> pk(0, pre_basis.size() - 1);
          SkeinMorphism f = zero_skein(pm, outshape, Mode::NoFloating);
          f.add(post_basis[pj(rng)], testutil::random_scalar(rng));
          SkeinMorphism h = zero_skein(inshape, pm, Mode::NoFloating);
          h.add(pre_basis[pk(rng)], testutil::random_scalar(rng));
          SkeinMorphism prod =
              skein_compose(skein_compose(f, z, wdata, walled), h, wdata, walled);
          GramReport g2 = gram_matrix(inshape, outshape, wdata, walled, Mode::NoFloating);
          Vec traces = g2.gram.apply(skein_coords(prod, g2.col_basis));
          for (const Scalar& t : traces)
            if (t != 0) {
              out << "kernel composition escaped the kernel";
              return;
            }
          ++checked;
        }

        // Quotient Gram blocks are invertible on the representatives.
        std::vector<GramReport> reports;
        reports.push_back(g);
        reports.push_back(gram_matrix(parse_signseq("+"), parse_signseq("+"), m2_data,
                                      m2_pair, Mode::WithFloating));
        SeriesPair walled3{zero_rep(empty), const_rep(empty, Scalar(3))};
        SyntacticData wdata3 = syntactic_data(walled3);
        reports.push_back(gram_matrix(pm, pm, wdata3, walled3, Mode::NoFloating));
        for (const GramReport& rep : reports) {
          QuotientBasis q = quotient_representatives(rep);
          if (q.rows.size() != rep.rank || q.cols.size() != rep.rank) {
            out << "representative count mismatch";
            return;
          }
          Matrix sub(rep.rank, rep.rank);
          for (std::size_t i = 0; i < rep.rank; ++i)
            for (std::size_t j = 0; j < rep.rank; ++j)
              sub.at(i, j) = rep.gram.at(q.rows[i], q.cols[j]);
          if (rank_of(sub) != rep.rank) {
            out << "quotient pairing degenerate";
            return;
          }
        }

        // S empty: circle value 0 kills the strand, value 3 keeps one state.
        SeriesPair dead{zero_rep(empty), const_rep(empty, Scalar(0))};
        SyntacticData ddata = syntactic_data(dead);
        if (gligible_hom_dim(parse_signseq("+"), parse_signseq("+"), ddata, dead,
                             Mode::NoFloating) != 0) {
          out << "lambda 0 strand endomorphisms should vanish";
          return;
        }
        if (gligible_hom_dim(parse_signseq("+"), parse_signseq("+"), wdata3, walled3,
                             Mode::NoFloating) != 1)
          out << "lambda 3 strand endomorphisms should be one dimensional";
      });

  run(9, "zero interval series: floating and strict pipelines coincide",
      [&](std::ostringstream& out) {
        SeriesPair pair = find_fixture("m2-trace").pair();
        SyntacticData data = syntactic_data(pair);
        if (data.ell != 0 || data.r != 0) {
          out << "expected vanishing half-arc ranges";
          return;
        }
        std::vector<SignSeq> shapes = all_signseqs_up_to(4);
        for (const SignSeq& src : shapes)
          for (const SignSeq& tgt : shapes) {
            if (src.size() + tgt.size() > 4) continue;
            std::size_t with = hom_dim(src, tgt, data, Mode::WithFloating);
            std::size_t strict = hom_dim(src, tgt, data, Mode::NoFloating);
            if (with != strict) {
              out << "skein dims differ on (" << signseq_to_string(src) << ", "
                  << signseq_to_string(tgt) << ")";
              return;
            }
            if (with == 0) continue;
            std::size_t qwith = gligible_hom_dim(src, tgt, data, pair, Mode::WithFloating);
            std::size_t qstrict = gligible_hom_dim(src, tgt, data, pair, Mode::NoFloating);
            if (qwith != qstrict) {
              out << "quotient dims differ on (" << signseq_to_string(src) << ", "
                  << signseq_to_string(tgt) << ")";
              return;
            }
          }
      });

  run(10, "half-arc ranges equal the minimized interval dimension",
      [&](std::ostringstream& out) {
        for (const Fixture& f : fixture_library()) {
          if (!f.has_pair()) continue;
          SeriesPair pair = f.pair();
          SyntacticData data = syntactic_data(pair);
          std::size_t min_dim = minimize(pair.bullet).dim;
          if (data.ell != min_dim || data.r != min_dim) {
            out << f.name << ": ell " << data.ell << " r " << data.r << " expected "
                << min_dim;
            return;
          }
          // Brute force: the Hankel block on all words up to ell + 1.
          std::vector<Word> words = words_up_to(f.alphabet.size(), data.ell + 1);
          Matrix h(words.size(), words.size());
          for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = 0; j < words.size(); ++j)
              h.at(i, j) = pair.eval_bullet(concat(words[i], words[j]));
          if (rank_of(h) != data.ell) {
            out << f.name << ": brute-force codimension " << rank_of(h) << " vs " << data.ell;
            return;
          }
        }
      });

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
