// Canonical arithmetic of the polycyclic monoid P_n: reduced elements,
// multiplication, cyclic reduction and the restricted conjugator set.

#pragma once

#include <optional>
#include <string>

#include "polyconj/rewrite.hpp"
#include "polyconj/words.hpp"

namespace polyconj::pn {

/// A reduced element of P_n: either the zero element or a pair of positive
/// words (range, domain) standing for the irreducible word
/// range . domain^{-1}. As a partial map on the infinite n-ary tree the
/// element sends domain.w to range.w, hence the field names.
class PnElement {
 public:
  static PnElement zero(int rank);
  static PnElement make(int rank, PositiveWord range, PositiveWord domain);
  /// The identity element (both components empty).
  static PnElement one(int rank) { return make(rank, {}, {}); }

  int rank() const { return rank_; }
  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && range_.empty() && domain_.empty(); }
  /// Throws std::domain_error when called on the zero element.
  const PositiveWord& range() const;
  const PositiveWord& domain() const;

  /// The irreducible word range . domain^{-1}, or the one-letter word 0.
  Word to_word() const;
  std::string str() const { return to_word().str(); }

  /// Total length of the reduced word (1 for the zero element).
  std::size_t word_length() const;

  friend bool operator==(const PnElement&, const PnElement&) = default;

 private:
  PnElement(int rank, bool zero, PositiveWord range, PositiveWord domain);

  int rank_;
  bool zero_;
  PositiveWord range_, domain_;
};

/// The shared rewriting system for P_n (built once per rank).
const rewrite::RewriteSystem& pn_system(int rank);

/// The unique irreducible representative of w, computed in time linear in
/// the length of w through the rewriting-engine preset.
PnElement reduce(const Word& w);

/// Product in P_n. Nonzero exactly when the left factor's domain word and
/// the right factor's range word are prefix-comparable; the surviving
/// components follow by cancellation. Throws std::domain_error on rank
/// mismatch.
PnElement multiply(const PnElement& a, const PnElement& b);

/// a = conjugator . core . conjugator^{-1} with a cyclically reduced core:
/// the core is zero, empty, or its first and last letters are not mutually
/// inverse.
struct CyclicDecomposition {
  PositiveWord conjugator;
  PnElement core;
};

CyclicDecomposition cyclic_reduce(const PnElement& a);

/// The reduced product of a's factors in the opposite order: for
/// a = y x^{-1} this is x^{-1} y reduced, i.e. z when y = xz, z^{-1} when
/// x = yz, and zero when x and y are not prefix-comparable. Maps zero to
/// zero.
PnElement reverse_product(const PnElement& a);

/// The cyclically reduced core of the product (p q^{-1})(r s^{-1}), computed
/// by direct case analysis on the prefix relations between q, r and between
/// p, s — a cross-check for multiply followed by cyclic_reduce. Throws
/// std::invalid_argument when q and r are not prefix-comparable (the product
/// is zero).
PnElement product_core(const PositiveWord& p, const PositiveWord& q, const PositiveWord& r,
                       const PositiveWord& s, int rank);

/// Membership of g in the restricted conjugator set of a: for nonzero
/// a = y x^{-1} the set consists of the nonzero r s^{-1} with r a prefix of
/// x; the conjugator set of zero is {zero}.
bool in_conjugator_set(const PnElement& g, const PnElement& a);

/// Outcome of the definitional membership probe.
struct ConjugatorSetProbe {
  bool holds_at_bound = false;
  std::optional<PnElement> violator;  // an m with m.a.g = 0 but m.a != 0
};

/// Tests the defining condition of the conjugator set — for every m,
/// m.a.g = 0 implies m.a = 0 — over all elements m of reduced word length
/// at most probe_bound. Independent oracle for in_conjugator_set.
ConjugatorSetProbe in_conjugator_set_by_definition(const PnElement& g, const PnElement& a,
                                                   int probe_bound);

/// All positive words of length <= max_len over 1..rank, ordered by length
/// then lexicographically.
std::vector<PositiveWord> all_positive_words(int rank, int max_len);

/// Zero followed by all nonzero elements with component lengths <= max_comp,
/// in deterministic order.
std::vector<PnElement> all_elements(int rank, int max_comp);

}  // namespace polyconj::pn
