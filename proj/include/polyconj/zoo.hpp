// Example monoids with specialised conjugacy deciders, used for the
// separation and independence experiments.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyconj/rewrite.hpp"

namespace polyconj::zoo {

/// A named monoid presentation bundled with whatever exact deciders exist
/// for it. Deciders operate on raw input words (they normalise internally
/// where they need to).
struct ZooMonoid {
  using Decider = std::function<bool(const rewrite::SymWord&, const rewrite::SymWord&)>;

  std::string name;
  rewrite::RewriteSystem system;
  std::string notes;
  std::optional<Decider> decide_p;
  std::optional<Decider> decide_c;
  std::optional<Decider> decide_o;
};

/// The monadic confluent presentation ({a,b,c}; ab = b, cb = b). Normal
/// forms are b^k followed by a word over {a,c}. With `with_zero` the zero
/// symbol and its absorption rules are adjoined.
ZooMonoid make_example22(bool with_zero = false);

/// The one-relator monoid ({a}; a^{k+1} = a^k), k >= 1. Its elements are
/// 1, a, ..., a^k with a^k the zero; the p- and c-relations are equality
/// and the o-relation is universal.
ZooMonoid make_one_relator_power(int k);

/// The commutation/absorption extension of a zero-free base presentation
/// over an alphabet disjoint from {a, b}: base rules plus xa = ax, bx = b
/// (x in base or x = a), xb = b (x in base) and aa = a. The c-relation is
/// decided by comparing the number of occurrences of b, which every rule
/// preserves.
ZooMonoid make_tin1(const rewrite::RewriteSystem& base);

/// make_tin1 over the trivial (empty) base: rules ba = b and aa = a, with
/// normal forms 1, a, b^p and ab^p.
ZooMonoid make_tin1_trivial();

/// Look up a preset by CLI name: "example22", "example22-zero",
/// "onerel-<k>" or "tin1-trivial".
ZooMonoid preset(const std::string& name);

/// One experimental observation in the separation report.
struct SeparationEvidence {
  std::string monoid;
  std::string relation;
  std::string left, right;
  std::string verdict;  // "related", "not-related" or "no-witness-at-bound"
  std::string method;
  std::string witness;
  int bound = 0;  // 0 when the verdict is exact
};

/// A claim that two relations differ, with the pair witnessing it.
struct SeparationClaim {
  std::string relation_a, relation_b;
  std::string left, right;
  std::string kind;  // "exact" or "bounded"
};

struct SeparationReport {
  std::vector<SeparationEvidence> evidence;
  std::vector<SeparationClaim> separated;

  std::string to_text() const;
  std::string to_json_string() const;
};

/// Runs the separation experiment on the {a,b,c} monoid and its
/// zero-adjoined variant: the pair (bac, ba) is p-related but resists the
/// bounded conjugator searches, and the zero element separates the o- and
/// c-relations exactly.
SeparationReport separation_report();

}  // namespace polyconj::zoo
