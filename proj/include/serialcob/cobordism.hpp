#pragma once

#include <map>
#include <optional>

#include "serialcob/series.hpp"

namespace serialcob {

struct SignSeq {
  std::vector<int> signs;  // entries +1 / -1

  std::size_t size() const { return signs.size(); }
  auto operator<=>(const SignSeq&) const = default;
};

SignSeq parse_signseq(const std::string& text);  // "+-+", empty object: "" or "e"
std::string signseq_to_string(const SignSeq& s);
int weight(const SignSeq& s);  // (#+) - (#-)
SignSeq concat(const SignSeq& a, const SignSeq& b);

enum class ComponentKind { Through, Cup, Cap, HalfOut, HalfIn, FloatInterval, FloatCircle };
enum class EndSide { Src, Tgt };

struct Endpoint {
  EndSide side = EndSide::Src;
  std::size_t pos = 0;
  auto operator<=>(const Endpoint&) const = default;
};

// One connected piece of a diagram. "from" is where the orientation starts
// (an incoming boundary point), "to" where it ends (an outgoing one); half
// arcs have a single boundary endpoint and a floating end on the other side.
// Labels are stored with the letter nearest the "to" end first, so stacking
// f over g concatenates as label(f) . label(g).
struct Component {
  ComponentKind kind = ComponentKind::Through;
  std::optional<Endpoint> from;
  std::optional<Endpoint> to;
  Word label;  // for FloatCircle: canonical cyclic representative

  auto operator<=>(const Component&) const = default;
};

struct Diagram {
  SignSeq source, target;
  std::vector<Component> components;

  void normalize();  // canonical component order
  auto operator<=>(const Diagram&) const = default;
};

// Throws ValidationError unless every boundary point is used exactly once
// and endpoint signs agree with orientations. no_floating additionally
// forbids HalfOut/HalfIn/FloatInterval.
void validate_diagram(const Diagram& d, bool no_floating = false);

struct Morphism {
  SignSeq source, target;
  std::map<Diagram, Scalar> terms;  // zero coefficients pruned

  Morphism& add_term(Diagram d, Scalar c);
};

Morphism zero_morphism(const SignSeq& source, const SignSeq& target);
Diagram identity_diagram(const SignSeq& eps);
Morphism identity_morphism(const SignSeq& eps);
// Through strands src i -> tgt perm[i]; the target carries the permuted signs.
// Throws ValidationError unless perm is a bijection on 0..|src|-1.
Diagram permutation_diagram(const SignSeq& src, const std::vector<std::size_t>& perm);

Morphism msum(const Morphism& a, const Morphism& b);
Morphism mscale(const Scalar& c, const Morphism& a);

// Evaluates away FloatInterval (bullet) and FloatCircle (circ) components.
std::pair<Diagram, Scalar> evaluate_floats(const Diagram& d, const SeriesPair& pair);

// f after g. Closed components produced by gluing are evaluated with pair.
Morphism compose(const Morphism& f, const Morphism& g, const SeriesPair& pair);
Morphism tensor(const Morphism& f, const Morphism& g);

// Contravariant adjoint: reflect and reverse orientations. Source and target
// swap (signs kept), labels reverse, Cup <-> Cap, HalfOut <-> HalfIn.
Morphism involution(const Morphism& f);

// Joins target point i to source point i and evaluates the closed diagram.
Scalar close_trace(const Morphism& x, const SeriesPair& pair);

}  // namespace serialcob
