#include "serialcob/skein.hpp"

#include <algorithm>
#include <cassert>

#include "serialcob/errors.hpp"

namespace serialcob {

namespace {

std::vector<int> sigma_of(const SignSeq& source, const SignSeq& target) {
  std::vector<int> sigma;
  sigma.reserve(source.size() + target.size());
  for (int s : source.signs) sigma.push_back(-s);
  for (int s : target.signs) sigma.push_back(s);
  return sigma;
}

void collect_matchings(const std::vector<std::size_t>& plus, const std::vector<std::size_t>& minus,
                       std::size_t next_plus, std::vector<bool>& minus_used,
                       std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                       std::vector<Matching>& out) {
  if (next_plus == plus.size()) {
    Matching m;
    m.pairs = pairs;
    std::sort(m.pairs.begin(), m.pairs.end());
    std::vector<std::size_t> matched;
    for (const auto& [p, q] : m.pairs) {
      matched.push_back(p);
      matched.push_back(q);
    }
    std::sort(matched.begin(), matched.end());
    for (std::size_t pos : plus)
      if (!std::binary_search(matched.begin(), matched.end(), pos)) m.unmatched.push_back(pos);
    for (std::size_t pos : minus)
      if (!std::binary_search(matched.begin(), matched.end(), pos)) m.unmatched.push_back(pos);
    std::sort(m.unmatched.begin(), m.unmatched.end());
    out.push_back(std::move(m));
    return;
  }
  // leave plus[next_plus] unmatched
  collect_matchings(plus, minus, next_plus + 1, minus_used, pairs, out);
  for (std::size_t j = 0; j < minus.size(); ++j) {
    if (minus_used[j]) continue;
    minus_used[j] = true;
    pairs.emplace_back(plus[next_plus], minus[j]);
    collect_matchings(plus, minus, next_plus + 1, minus_used, pairs, out);
    pairs.pop_back();
    minus_used[j] = false;
  }
}

}  // namespace

std::size_t MatchingSet::index_of(const Matching& m) const {
  auto it = std::lower_bound(matchings.begin(), matchings.end(), m);
  if (it == matchings.end() || !(*it == m)) throw ValidationError("matching not in set");
  return static_cast<std::size_t>(it - matchings.begin());
}

MatchingSet enumerate_matchings(const SignSeq& source, const SignSeq& target, Mode mode) {
  MatchingSet ms;
  ms.source = source;
  ms.target = target;
  ms.mode = mode;
  ms.sigma = sigma_of(source, target);
  std::vector<std::size_t> plus, minus;
  for (std::size_t i = 0; i < ms.sigma.size(); ++i)
    (ms.sigma[i] > 0 ? plus : minus).push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> minus_used(minus.size(), false);
  collect_matchings(plus, minus, 0, minus_used, pairs, ms.matchings);
  if (mode == Mode::NoFloating) {
    std::erase_if(ms.matchings, [](const Matching& m) { return !m.unmatched.empty(); });
  }
  std::sort(ms.matchings.begin(), ms.matchings.end());
  return ms;
}

namespace {

unsigned long long binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  unsigned long long b = 1;
  for (std::size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

unsigned long long factorial(std::size_t n) {
  unsigned long long f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

unsigned long long ipow(std::size_t base, std::size_t e) {
  unsigned long long p = 1;
  while (e--) p *= base;
  return p;
}

}  // namespace

std::size_t hom_dim(const SignSeq& source, const SignSeq& target, const SyntacticData& data,
                    Mode mode) {
  std::vector<int> sigma = sigma_of(source, target);
  std::size_t p = 0, q = 0;
  for (int s : sigma) (s > 0 ? p : q)++;
  if (mode == Mode::NoFloating) {
    if (p != q) return 0;
    return static_cast<std::size_t>(factorial(p) * ipow(data.d, p));
  }
  unsigned long long total = 0;
  for (std::size_t j = 0; j <= std::min(p, q); ++j)
    total += binom(p, j) * binom(q, j) * factorial(j) * ipow(data.d, j) *
             ipow(data.ell, p - j) * ipow(data.r, q - j);
  return static_cast<std::size_t>(total);
}

std::size_t hom_dim_enumerated(const SignSeq& source, const SignSeq& target,
                               const SyntacticData& data, Mode mode) {
  MatchingSet ms = enumerate_matchings(source, target, mode);
  std::size_t total = 0;
  for (const auto& m : ms.matchings) {
    std::size_t ways = 1;
    for (std::size_t i = 0; i < m.pairs.size(); ++i) ways *= data.d;
    for (std::size_t u : m.unmatched) ways *= (ms.sigma[u] > 0) ? data.ell : data.r;
    total += ways;
  }
  return total;
}

std::vector<SkeinBasisId> skein_basis(const MatchingSet& ms, const SyntacticData& data) {
  std::vector<SkeinBasisId> out;
  for (std::size_t mi = 0; mi < ms.matchings.size(); ++mi) {
    const Matching& m = ms.matchings[mi];
    std::vector<std::size_t> ranges;
    for (std::size_t i = 0; i < m.pairs.size(); ++i) ranges.push_back(data.d);
    for (std::size_t u : m.unmatched) ranges.push_back(ms.sigma[u] > 0 ? data.ell : data.r);
    if (std::find(ranges.begin(), ranges.end(), std::size_t{0}) != ranges.end()) continue;
    std::vector<std::size_t> decor(ranges.size(), 0);
    while (true) {
      out.push_back({mi, decor});
      std::size_t i = ranges.size();
      while (i > 0 && decor[i - 1] + 1 == ranges[i - 1]) decor[--i] = 0;
      if (i == 0) break;
      ++decor[i - 1];
    }
  }
  return out;
}

SkeinMorphism& SkeinMorphism::add(const SkeinBasisId& id, const Scalar& c) {
  if (c == 0) return *this;
  auto [it, fresh] = coords.emplace(id, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coords.erase(it);
  }
  return *this;
}

SkeinMorphism zero_skein(const SignSeq& source, const SignSeq& target, Mode mode) {
  SkeinMorphism m;
  m.source = source;
  m.target = target;
  m.mode = mode;
  return m;
}

namespace {

Endpoint endpoint_of_sigma_pos(const SignSeq& source, std::size_t pos) {
  if (pos < source.size()) return {EndSide::Src, pos};
  return {EndSide::Tgt, pos - source.size()};
}

}  // namespace

Diagram basis_diagram(const MatchingSet& ms, const SkeinBasisId& id, const SyntacticData& data) {
  const Matching& m = ms.matchings[id.matching];
  Diagram d;
  d.source = ms.source;
  d.target = ms.target;
  std::size_t slot = 0;
  for (const auto& [p, q] : m.pairs) {
    Component c;
    Endpoint to = endpoint_of_sigma_pos(ms.source, p);    // sigma + : outgoing
    Endpoint from = endpoint_of_sigma_pos(ms.source, q);  // sigma - : incoming
    c.from = from;
    c.to = to;
    if (from.side != to.side)
      c.kind = ComponentKind::Through;
    else
      c.kind = (from.side == EndSide::Tgt) ? ComponentKind::Cup : ComponentKind::Cap;
    c.label = data.algebra_basis_words[id.decor[slot++]];
    d.components.push_back(std::move(c));
  }
  for (std::size_t u : m.unmatched) {
    Component c;
    if (ms.sigma[u] > 0) {
      c.kind = ComponentKind::HalfOut;
      c.to = endpoint_of_sigma_pos(ms.source, u);
      c.label = data.left_basis_words[id.decor[slot++]];
    } else {
      c.kind = ComponentKind::HalfIn;
      c.from = endpoint_of_sigma_pos(ms.source, u);
      c.label = data.right_basis_words[id.decor[slot++]];
    }
    d.components.push_back(std::move(c));
  }
  d.normalize();
  return d;
}

Morphism lift(const SkeinMorphism& m, const SyntacticData& data) {
  MatchingSet ms = enumerate_matchings(m.source, m.target, m.mode);
  Morphism out = zero_morphism(m.source, m.target);
  for (const auto& [id, c] : m.coords) out.add_term(basis_diagram(ms, id, data), c);
  return out;
}

SkeinMorphism skein_normal_form(const Morphism& m, const SyntacticData& data, Mode mode) {
  MatchingSet ms = enumerate_matchings(m.source, m.target, mode);
  SkeinMorphism out = zero_skein(m.source, m.target, mode);
  SeriesPair minimized{data.bullet_min, data.circ_min};
  for (const auto& [raw, coeff] : m.terms) {
    auto [d, factor] = evaluate_floats(raw, minimized);
    if (factor == 0) continue;
    // recover the matching and the slot words
    Matching match;
    std::vector<std::pair<std::size_t, Word>> pair_words;    // keyed by plus position
    std::vector<std::pair<std::size_t, Word>> single_words;  // keyed by unmatched position
    auto sigma_pos = [&](const Endpoint& e) {
      return e.side == EndSide::Src ? e.pos : m.source.size() + e.pos;
    };
    for (const auto& c : d.components) {
      switch (c.kind) {
        case ComponentKind::Through:
        case ComponentKind::Cup:
        case ComponentKind::Cap: {
          std::size_t p = sigma_pos(*c.to), q = sigma_pos(*c.from);
          match.pairs.emplace_back(p, q);
          pair_words.emplace_back(p, c.label);
          break;
        }
        case ComponentKind::HalfOut: {
          if (mode == Mode::NoFloating)
            throw ValidationError("floating endpoints not available in this mode");
          std::size_t u = sigma_pos(*c.to);
          match.unmatched.push_back(u);
          single_words.emplace_back(u, c.label);
          break;
        }
        case ComponentKind::HalfIn: {
          if (mode == Mode::NoFloating)
            throw ValidationError("floating endpoints not available in this mode");
          std::size_t u = sigma_pos(*c.from);
          match.unmatched.push_back(u);
          single_words.emplace_back(u, c.label);
          break;
        }
        default:
          assert(false);
      }
    }
    std::sort(match.pairs.begin(), match.pairs.end());
    std::sort(match.unmatched.begin(), match.unmatched.end());
    std::sort(pair_words.begin(), pair_words.end());
    std::sort(single_words.begin(), single_words.end());
    std::size_t mi = ms.index_of(match);
    // coordinates of each slot label, in slot order
    std::vector<Vec> slot_coords;
    for (const auto& [p, w] : pair_words) slot_coords.push_back(normal_form(w, Side::TwoSided, data));
    for (const auto& [u, w] : single_words) {
      bool half_out = ms.sigma[u] > 0;
      slot_coords.push_back(normal_form(w, half_out ? Side::Left : Side::Right, data));
    }
    // multilinear expansion over the slots
    std::vector<std::pair<SkeinBasisId, Scalar>> expansion;
    expansion.push_back({{mi, {}}, coeff * factor});
    for (const Vec& coords : slot_coords) {
      std::vector<std::pair<SkeinBasisId, Scalar>> next;
      for (const auto& [id, c] : expansion)
        for (std::size_t k = 0; k < coords.size(); ++k) {
          if (coords[k] == 0) continue;
          SkeinBasisId nid = id;
          nid.decor.push_back(k);
          next.emplace_back(std::move(nid), c * coords[k]);
        }
      expansion = std::move(next);
    }
    for (auto& [id, c] : expansion) out.add(id, c);
  }
  return out;
}

SkeinMorphism skein_compose(const SkeinMorphism& a, const SkeinMorphism& b,
                            const SyntacticData& data, const SeriesPair& pair) {
  if (a.source != b.target) throw BoundaryMismatch("skein compose: boundary mismatch");
  Morphism composed = compose(lift(a, data), lift(b, data), pair);
  return skein_normal_form(composed, data, a.mode);
}

SkeinMorphism skein_identity(const SignSeq& eps, const SyntacticData& data, Mode mode) {
  return skein_normal_form(identity_morphism(eps), data, mode);
}

std::vector<Scalar> endo_algebra_table(const SignSeq& eps, const SyntacticData& data,
                                       const SeriesPair& pair, Mode mode) {
  MatchingSet ms = enumerate_matchings(eps, eps, mode);
  std::vector<SkeinBasisId> basis = skein_basis(ms, data);
  std::size_t n = basis.size();
  std::map<SkeinBasisId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[basis[i]] = i;
  std::vector<Scalar> table(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SkeinMorphism x = zero_skein(eps, eps, mode), y = x;
      x.add(basis[i], Scalar(1));
      y.add(basis[j], Scalar(1));
      SkeinMorphism prod = skein_compose(x, y, data, pair);
      for (const auto& [id, c] : prod.coords) table[(i * n + j) * n + index.at(id)] = c;
    }
  return table;
}

}  // namespace serialcob
