#pragma once

#include "serialcob/cobordism.hpp"
#include "serialcob/syntactic.hpp"

namespace serialcob {

enum class Mode { WithFloating, NoFloating };

// A matching pairs plus points of sigma = (-source) . target with minus
// points; the rest carry floating endpoints. Pairs are kept sorted by plus
// position, unmatched positions ascending.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (plus pos, minus pos)
  std::vector<std::size_t> unmatched;

  auto operator<=>(const Matching&) const = default;
};

struct MatchingSet {
  SignSeq source, target;
  Mode mode = Mode::WithFloating;
  std::vector<int> sigma;            // concatenated signs
  std::vector<Matching> matchings;   // deterministic order

  std::size_t index_of(const Matching& m) const;  // throws if absent
};

MatchingSet enumerate_matchings(const SignSeq& source, const SignSeq& target, Mode mode);

// Hom dimension by the closed form; hom_dim_enumerated is the oracle that
// walks the matchings and multiplies decoration ranges.
std::size_t hom_dim(const SignSeq& source, const SignSeq& target, const SyntacticData& data,
                    Mode mode);
std::size_t hom_dim_enumerated(const SignSeq& source, const SignSeq& target,
                               const SyntacticData& data, Mode mode);

// One basis element: a matching plus decoration indices per component slot.
// Slot order: matched pairs in matching order, then unmatched positions.
// Index ranges: d for strands, ell for half-out (sigma +), r for half-in.
struct SkeinBasisId {
  std::size_t matching = 0;
  std::vector<std::size_t> decor;

  auto operator<=>(const SkeinBasisId&) const = default;
};

std::vector<SkeinBasisId> skein_basis(const MatchingSet& ms, const SyntacticData& data);

struct SkeinMorphism {
  SignSeq source, target;
  Mode mode = Mode::WithFloating;
  std::map<SkeinBasisId, Scalar> coords;

  SkeinMorphism& add(const SkeinBasisId& id, const Scalar& c);
  bool operator==(const SkeinMorphism&) const = default;
};

SkeinMorphism zero_skein(const SignSeq& source, const SignSeq& target, Mode mode);

// Representative diagram of a basis element (labels = basis words).
Diagram basis_diagram(const MatchingSet& ms, const SkeinBasisId& id, const SyntacticData& data);
Morphism lift(const SkeinMorphism& m, const SyntacticData& data);

// Reduces each component label by the normal form of its side; floating
// components are evaluated away first (using the minimized reps in data).
SkeinMorphism skein_normal_form(const Morphism& m, const SyntacticData& data, Mode mode);

SkeinMorphism skein_compose(const SkeinMorphism& a, const SkeinMorphism& b,
                            const SyntacticData& data, const SeriesPair& pair);
SkeinMorphism skein_identity(const SignSeq& eps, const SyntacticData& data, Mode mode);

// Multiplication table of End(eps): c[(i*n + j)*n + k] with n = basis size.
std::vector<Scalar> endo_algebra_table(const SignSeq& eps, const SyntacticData& data,
                                       const SeriesPair& pair, Mode mode);

}  // namespace serialcob
