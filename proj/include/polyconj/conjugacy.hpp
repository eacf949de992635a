// Conjugacy deciders for the polycyclic monoid (the p-, p*-, c- and
// o-relations), the free-monoid rotation check they rest on, and bounded
// brute-force search oracles used to validate the deciders.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyconj/polycyclic.hpp"
#include "polyconj/rewrite.hpp"
#include "polyconj/words.hpp"

namespace polyconj::conj {

using pn::PnElement;

/// Decision outcome. For the p-relation the witness (u, v) satisfies
/// a = uv and b = vu; for the c-relation the witness (g, h) satisfies
/// ag = gb and bh = ha with g, h in the restricted conjugator sets.
struct Verdict {
  bool related = false;
  std::optional<std::pair<PnElement, PnElement>> witness;
};

/// Least k such that v equals u rotated left by k, if any.
std::optional<std::size_t> rotation_offset(const PositiveWord& u, const PositiveWord& v);

/// Conjugacy in the free monoid: u and v are related iff they are cyclic
/// rotations of each other. Linear time (|u| = |v| plus a substring search
/// of v in u.u).
bool free_conj_p(const PositiveWord& u, const PositiveWord& v);

/// a and b split as a = uv, b = vu. Decided through the cyclically reduced
/// cores: related iff the cores are equal mixed words, or rotations of each
/// other as pure positive (or pure negative) words, or one side is zero and
/// the other collapses to zero under factor reversal.
Verdict conj_p(const PnElement& a, const PnElement& b);

/// Transitive closure of the p-relation; in P_n this is reachability in at
/// most two p-steps, which reduces to conj_p(a,b) or both factor reversals
/// being zero.
bool conj_p_star(const PnElement& a, const PnElement& b);

/// Conjugacy with conjugators restricted to the conjugator sets: related
/// iff both are zero, the cores are equal, or the cores are pure negative
/// rotations of each other.
Verdict conj_c(const PnElement& a, const PnElement& b);

/// Unrestricted two-sided conjugacy; universal here because P_n has a zero.
bool conj_o(const PnElement& a, const PnElement& b);

bool verify_p_witness(const PnElement& a, const PnElement& b,
                      const std::pair<PnElement, PnElement>& w);
bool verify_c_witness(const PnElement& a, const PnElement& b,
                      const std::pair<PnElement, PnElement>& w);

/// Word-level convenience wrappers: reduce, then decide.
Verdict conj_p_words(const Word& a, const Word& b);
bool conj_p_star_words(const Word& a, const Word& b);
Verdict conj_c_words(const Word& a, const Word& b);
bool conj_o_words(const Word& a, const Word& b);

struct ElementOracleResult {
  bool found = false;
  std::optional<std::pair<PnElement, PnElement>> witness;
};

struct WordOracleResult {
  bool found = false;
  std::optional<std::pair<rewrite::SymWord, rewrite::SymWord>> witness;
};

/// Exhaustive search for u, v with uv = a and vu = b over all element pairs
/// of reduced word length <= bound. Equivalent to searching all word pairs
/// of length <= bound, since every word has a no-longer normal form; the
/// candidates are enumerated directly from the factorisations of a (or of b
/// when a is zero).
ElementOracleResult oracle_p_elements(const PnElement& a, const PnElement& b, int bound);

/// Word-level p-oracle for a complete rewriting system: searches pairs of
/// irreducible words u, v of length <= bound with uv and vu congruent to a
/// and b. Dispatches to the factorisation search for the polycyclic preset.
/// Throws std::domain_error when the system is not complete.
WordOracleResult oracle_p(const rewrite::RewriteSystem& sys, const rewrite::SymWord& a,
                          const rewrite::SymWord& b, int bound);

/// Search for conjugators g, h in the restricted conjugator sets of a and b
/// with ag = gb and bh = ha, over component lengths <= bound.
ElementOracleResult oracle_c_pn(const PnElement& a, const PnElement& b, int bound);

/// Bounded search for unrestricted conjugators g, h with ug = gv and
/// vh = hu over irreducible words of length <= bound. Requires a complete
/// system.
WordOracleResult oracle_o(const rewrite::RewriteSystem& sys, const rewrite::SymWord& u,
                          const rewrite::SymWord& v, int bound);

/// Partition of the sample into p*-classes: transitive closure of pairwise
/// conj_p. Returns one class index per element, numbered by first
/// occurrence.
std::vector<std::size_t> pstar_closure(const std::vector<PnElement>& sample);

}  // namespace polyconj::conj
