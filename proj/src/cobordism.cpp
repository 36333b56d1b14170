#include "serialcob/cobordism.hpp"

#include <algorithm>
#include <cassert>

#include "serialcob/errors.hpp"

namespace serialcob {

SignSeq parse_signseq(const std::string& text) {
  SignSeq s;
  if (text == "e") return s;
  for (char c : text) {
    if (c == '+')
      s.signs.push_back(1);
    else if (c == '-')
      s.signs.push_back(-1);
    else
      throw ValidationError(std::string("bad sign character '") + c + "'");
  }
  return s;
}

std::string signseq_to_string(const SignSeq& s) {
  if (s.signs.empty()) return "e";
  std::string out;
  for (int x : s.signs) out += (x > 0 ? '+' : '-');
  return out;
}

int weight(const SignSeq& s) {
  int w = 0;
  for (int x : s.signs) w += x;
  return w;
}

SignSeq concat(const SignSeq& a, const SignSeq& b) {
  SignSeq s = a;
  s.signs.insert(s.signs.end(), b.signs.begin(), b.signs.end());
  return s;
}

void Diagram::normalize() { std::sort(components.begin(), components.end()); }

namespace {

int sign_at(const Diagram& d, const Endpoint& e) {
  const SignSeq& seq = (e.side == EndSide::Src) ? d.source : d.target;
  if (e.pos >= seq.size()) throw ValidationError("endpoint position out of range");
  return seq.signs[e.pos];
}

// incoming: flow enters the diagram here (source +, target -)
bool is_incoming(const Diagram& d, const Endpoint& e) {
  return (e.side == EndSide::Src) ? sign_at(d, e) > 0 : sign_at(d, e) < 0;
}

}  // namespace

void validate_diagram(const Diagram& d, bool no_floating) {
  std::vector<int> used_src(d.source.size(), 0), used_tgt(d.target.size(), 0);
  auto use = [&](const Endpoint& e) {
    auto& used = (e.side == EndSide::Src) ? used_src : used_tgt;
    if (e.pos >= used.size()) throw ValidationError("endpoint position out of range");
    ++used[e.pos];
  };
  for (const auto& c : d.components) {
    switch (c.kind) {
      case ComponentKind::Through:
      case ComponentKind::Cup:
      case ComponentKind::Cap: {
        if (!c.from || !c.to) throw ValidationError("strand component needs both endpoints");
        use(*c.from);
        use(*c.to);
        if (!is_incoming(d, *c.from) || is_incoming(d, *c.to))
          throw ValidationError("component orientation disagrees with boundary signs");
        bool same_side = c.from->side == c.to->side;
        if (c.kind == ComponentKind::Through && same_side)
          throw ValidationError("through strand must join source to target");
        if (c.kind == ComponentKind::Cup && !(same_side && c.from->side == EndSide::Tgt))
          throw ValidationError("cup endpoints must both lie in the target");
        if (c.kind == ComponentKind::Cap && !(same_side && c.from->side == EndSide::Src))
          throw ValidationError("cap endpoints must both lie in the source");
        break;
      }
      case ComponentKind::HalfOut:
        if (!c.to || c.from) throw ValidationError("half-out carries exactly a 'to' endpoint");
        use(*c.to);
        if (is_incoming(d, *c.to))
          throw ValidationError("half-out endpoint must be outgoing");
        break;
      case ComponentKind::HalfIn:
        if (!c.from || c.to) throw ValidationError("half-in carries exactly a 'from' endpoint");
        use(*c.from);
        if (!is_incoming(d, *c.from))
          throw ValidationError("half-in endpoint must be incoming");
        break;
      case ComponentKind::FloatInterval:
      case ComponentKind::FloatCircle:
        if (c.from || c.to) throw ValidationError("floating component has no boundary endpoints");
        break;
    }
    if (no_floating && (c.kind == ComponentKind::HalfOut || c.kind == ComponentKind::HalfIn ||
                        c.kind == ComponentKind::FloatInterval))
      throw ValidationError("component kind not available without floating endpoints");
  }
  for (std::size_t i = 0; i < used_src.size(); ++i)
    if (used_src[i] != 1) throw ValidationError("source position used " +
                                                std::to_string(used_src[i]) + " times");
  for (std::size_t i = 0; i < used_tgt.size(); ++i)
    if (used_tgt[i] != 1) throw ValidationError("target position used " +
                                                std::to_string(used_tgt[i]) + " times");
}

Morphism& Morphism::add_term(Diagram d, Scalar c) {
  if (d.source != source || d.target != target)
    throw BoundaryMismatch("term boundary differs from morphism boundary");
  if (c == 0) return *this;
  d.normalize();
  auto [it, fresh] = terms.emplace(std::move(d), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

Morphism zero_morphism(const SignSeq& source, const SignSeq& target) {
  Morphism m;
  m.source = source;
  m.target = target;
  return m;
}

Diagram identity_diagram(const SignSeq& eps) {
  std::vector<std::size_t> perm(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) perm[i] = i;
  return permutation_diagram(eps, perm);
}

Morphism identity_morphism(const SignSeq& eps) {
  Morphism m = zero_morphism(eps, eps);
  m.add_term(identity_diagram(eps), Scalar(1));
  return m;
}

Diagram permutation_diagram(const SignSeq& src, const std::vector<std::size_t>& perm) {
  if (perm.size() != src.size())
    throw ValidationError("permutation length differs from object length");
  std::vector<bool> hit(src.size(), false);
  for (std::size_t p : perm) {
    if (p >= src.size() || hit[p]) throw ValidationError("permutation is not a bijection");
    hit[p] = true;
  }
  Diagram d;
  d.source = src;
  d.target.signs.assign(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) d.target.signs[perm[i]] = src.signs[i];
  for (std::size_t i = 0; i < src.size(); ++i) {
    Component c;
    c.kind = ComponentKind::Through;
    Endpoint bottom{EndSide::Src, i}, top{EndSide::Tgt, perm[i]};
    if (src.signs[i] > 0) {
      c.from = bottom;
      c.to = top;
    } else {
      c.from = top;
      c.to = bottom;
    }
    d.components.push_back(std::move(c));
  }
  d.normalize();
  return d;
}

Morphism msum(const Morphism& a, const Morphism& b) {
  if (a.source != b.source || a.target != b.target)
    throw BoundaryMismatch("sum of morphisms with different boundaries");
  Morphism out = a;
  for (const auto& [d, c] : b.terms) out.add_term(d, c);
  return out;
}

Morphism mscale(const Scalar& c, const Morphism& a) {
  Morphism out = zero_morphism(a.source, a.target);
  if (c == 0) return out;
  for (const auto& [d, x] : a.terms) out.terms.emplace(d, c * x);
  return out;
}

std::pair<Diagram, Scalar> evaluate_floats(const Diagram& d, const SeriesPair& pair) {
  Diagram out;
  out.source = d.source;
  out.target = d.target;
  Scalar factor(1);
  for (const auto& c : d.components) {
    if (c.kind == ComponentKind::FloatInterval)
      factor *= eval_rep(pair.bullet, c.label);
    else if (c.kind == ComponentKind::FloatCircle)
      factor *= eval_rep(pair.circ, cyclic_normalize(c.label).representative);
    else
      out.components.push_back(c);
  }
  return {std::move(out), std::move(factor)};
}

// ---------------------------------------------------------------------------
// Gluing. Segments are oriented edges between nodes; node -1 marks a floating
// end. Chains are traversed from their upstream terminus, and segment labels
// are concatenated downstream-first.

namespace {

constexpr int kFloating = -1;

struct Seg {
  int from = kFloating;
  int to = kFloating;
  Word word;
};

struct GlueResult {
  std::vector<Component> viewable;  // components with at least one boundary end
  Scalar factor{1};                 // evaluation of closed pieces
};

// boundary_of maps a node id to the endpoint it represents in the result
// diagram (or nullopt for interior nodes, which must be used exactly twice).
GlueResult glue(std::vector<Seg> segs, std::size_t node_count,
                const std::function<std::optional<Endpoint>(int)>& boundary_of,
                const SeriesPair& pair) {
  GlueResult out;
  // incidences: for every node the segments touching it
  std::vector<std::vector<std::pair<std::size_t, bool>>> inc(node_count);  // (seg, enters_node)
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].from != kFloating) inc[segs[i].from].emplace_back(i, false);
    if (segs[i].to != kFloating) inc[segs[i].to].emplace_back(i, true);
  }
  std::vector<bool> visited(segs.size(), false);

  // follow the chain starting at segment s, walking along orientation
  auto walk_forward = [&](std::size_t s) {
    Word word;
    std::size_t cur = s;
    while (true) {
      visited[cur] = true;
      word = concat(segs[cur].word, word);  // downstream labels on the left
      int node = segs[cur].to;
      if (node == kFloating) return std::make_pair(word, std::optional<int>{});
      if (boundary_of(node)) return std::make_pair(word, std::optional<int>{node});
      // interior node: hop to the other incident segment
      assert(inc[node].size() == 2);
      std::size_t next = (inc[node][0].first == cur) ? inc[node][1].first : inc[node][0].first;
      assert(segs[next].from == node);
      cur = next;
    }
  };

  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (visited[s]) continue;
    bool starts_chain = segs[s].from == kFloating || boundary_of(segs[s].from).has_value();
    if (!starts_chain) continue;
    auto [word, end_node] = walk_forward(s);
    Component c;
    c.label = std::move(word);
    std::optional<Endpoint> from_ep =
        segs[s].from == kFloating ? std::nullopt : boundary_of(segs[s].from);
    std::optional<Endpoint> to_ep = end_node ? boundary_of(*end_node) : std::nullopt;
    if (!from_ep && !to_ep) {
      out.factor *= eval_rep(pair.bullet, c.label);
      continue;
    }
    if (from_ep && to_ep) {
      c.from = from_ep;
      c.to = to_ep;
      if (from_ep->side != to_ep->side)
        c.kind = ComponentKind::Through;
      else
        c.kind = (from_ep->side == EndSide::Tgt) ? ComponentKind::Cup : ComponentKind::Cap;
    } else if (to_ep) {
      c.kind = ComponentKind::HalfOut;
      c.to = to_ep;
    } else {
      c.kind = ComponentKind::HalfIn;
      c.from = from_ep;
    }
    out.viewable.push_back(std::move(c));
  }
  // remaining segments sit on closed cycles
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (visited[s]) continue;
    Word word;
    std::size_t cur = s;
    do {
      visited[cur] = true;
      word = concat(segs[cur].word, word);
      int node = segs[cur].to;
      assert(node != kFloating && !boundary_of(node));
      cur = (inc[node][0].first == cur) ? inc[node][1].first : inc[node][0].first;
    } while (cur != s);
    out.factor *= eval_rep(pair.circ, cyclic_normalize(word).representative);
  }
  return out;
}

std::pair<Diagram, Scalar> compose_diagrams(const Diagram& f, const Diagram& g,
                                            const SeriesPair& pair) {
  // nodes: final source 0..|g.src|-1, interface, final target
  std::size_t ns = g.source.size(), ni = g.target.size(), nt = f.target.size();
  auto g_node = [&](const Endpoint& e) {
    return static_cast<int>(e.side == EndSide::Src ? e.pos : ns + e.pos);
  };
  auto f_node = [&](const Endpoint& e) {
    return static_cast<int>(e.side == EndSide::Src ? ns + e.pos : ns + ni + e.pos);
  };
  Scalar factor(1);
  std::vector<Seg> segs;
  auto add_component = [&](const Component& c, const std::function<int(const Endpoint&)>& node) {
    switch (c.kind) {
      case ComponentKind::FloatInterval:
        factor *= eval_rep(pair.bullet, c.label);
        return;
      case ComponentKind::FloatCircle:
        factor *= eval_rep(pair.circ, cyclic_normalize(c.label).representative);
        return;
      default: {
        Seg s;
        if (c.from) s.from = node(*c.from);
        if (c.to) s.to = node(*c.to);
        s.word = c.label;
        segs.push_back(std::move(s));
      }
    }
  };
  for (const auto& c : g.components) add_component(c, g_node);
  for (const auto& c : f.components) add_component(c, f_node);

  Diagram result;
  result.source = g.source;
  result.target = f.target;
  auto boundary_of = [&](int node) -> std::optional<Endpoint> {
    if (node < static_cast<int>(ns)) return Endpoint{EndSide::Src, static_cast<std::size_t>(node)};
    if (node >= static_cast<int>(ns + ni))
      return Endpoint{EndSide::Tgt, static_cast<std::size_t>(node) - ns - ni};
    return std::nullopt;
  };
  GlueResult glued = glue(std::move(segs), ns + ni + nt, boundary_of, pair);
  result.components = std::move(glued.viewable);
  result.normalize();
  return {std::move(result), factor * glued.factor};
}

}  // namespace

Morphism compose(const Morphism& f, const Morphism& g, const SeriesPair& pair) {
  if (f.source != g.target)
    throw BoundaryMismatch("compose: source of f (" + signseq_to_string(f.source) +
                           ") differs from target of g (" + signseq_to_string(g.target) + ")");
  Morphism out = zero_morphism(g.source, f.target);
  for (const auto& [df, cf] : f.terms)
    for (const auto& [dg, cg] : g.terms) {
      auto [d, factor] = compose_diagrams(df, dg, pair);
      out.add_term(std::move(d), cf * cg * factor);
    }
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Morphism out = zero_morphism(concat(f.source, g.source), concat(f.target, g.target));
  for (const auto& [df, cf] : f.terms)
    for (const auto& [dg, cg] : g.terms) {
      Diagram d;
      d.source = out.source;
      d.target = out.target;
      d.components = df.components;
      for (Component c : dg.components) {
        if (c.from) c.from->pos += (c.from->side == EndSide::Src) ? df.source.size()
                                                                  : df.target.size();
        if (c.to) c.to->pos += (c.to->side == EndSide::Src) ? df.source.size()
                                                            : df.target.size();
        d.components.push_back(std::move(c));
      }
      out.add_term(std::move(d), cf * cg);
    }
  return out;
}

Morphism involution(const Morphism& f) {
  Morphism out = zero_morphism(f.target, f.source);
  auto flip = [](std::optional<Endpoint> e) -> std::optional<Endpoint> {
    if (!e) return e;
    e->side = (e->side == EndSide::Src) ? EndSide::Tgt : EndSide::Src;
    return e;
  };
  for (const auto& [d, coeff] : f.terms) {
    Diagram r;
    r.source = d.target;
    r.target = d.source;
    for (const auto& c : d.components) {
      Component n;
      n.label = reverse(c.label);
      n.from = flip(c.to);
      n.to = flip(c.from);
      switch (c.kind) {
        case ComponentKind::Through: n.kind = ComponentKind::Through; break;
        case ComponentKind::Cup: n.kind = ComponentKind::Cap; break;
        case ComponentKind::Cap: n.kind = ComponentKind::Cup; break;
        case ComponentKind::HalfOut: n.kind = ComponentKind::HalfIn; break;
        case ComponentKind::HalfIn: n.kind = ComponentKind::HalfOut; break;
        case ComponentKind::FloatInterval: n.kind = ComponentKind::FloatInterval; break;
        case ComponentKind::FloatCircle:
          n.kind = ComponentKind::FloatCircle;
          n.label = cyclic_normalize(n.label).representative;
          break;
      }
      r.components.push_back(std::move(n));
    }
    r.normalize();
    out.add_term(std::move(r), coeff);
  }
  return out;
}

Scalar close_trace(const Morphism& x, const SeriesPair& pair) {
  if (x.source != x.target) throw BoundaryMismatch("close_trace requires an endomorphism");
  std::size_t n = x.source.size();
  Scalar total(0);
  for (const auto& [d, coeff] : x.terms) {
    // nodes: source 0..n-1, target n..2n-1
    Scalar factor(1);
    std::vector<Seg> segs;
    for (const auto& c : d.components) {
      if (c.kind == ComponentKind::FloatInterval) {
        factor *= eval_rep(pair.bullet, c.label);
        continue;
      }
      if (c.kind == ComponentKind::FloatCircle) {
        factor *= eval_rep(pair.circ, cyclic_normalize(c.label).representative);
        continue;
      }
      Seg s;
      auto node = [&](const Endpoint& e) {
        return static_cast<int>(e.side == EndSide::Src ? e.pos : n + e.pos);
      };
      if (c.from) s.from = node(*c.from);
      if (c.to) s.to = node(*c.to);
      s.word = c.label;
      segs.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Seg arc;  // undecorated closure arc joining top i to bottom i
      if (x.source.signs[i] > 0) {
        arc.from = static_cast<int>(n + i);
        arc.to = static_cast<int>(i);
      } else {
        arc.from = static_cast<int>(i);
        arc.to = static_cast<int>(n + i);
      }
      segs.push_back(std::move(arc));
    }
    GlueResult glued =
        glue(std::move(segs), 2 * n, [](int) { return std::optional<Endpoint>{}; }, pair);
    assert(glued.viewable.empty());
    total += coeff * factor * glued.factor;
  }
  return total;
}

}  // namespace serialcob
