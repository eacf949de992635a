// Finite string-rewriting systems over small alphabets: classification,
// single-step and full reduction, critical pairs, local confluence, zero
// adjunction and bounded search of the Thue congruence.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyconj/words.hpp"

namespace polyconj::rewrite {

/// A symbol is an index into an Alphabet.
using Sym = std::int32_t;
using SymWord = std::vector<Sym>;

/// A finite alphabet with printable symbol names. The name "0" is reserved
/// for the zero symbol of monoid-with-zero presentations.
class Alphabet {
 public:
  /// p_1..p_n, q_1..q_n, 0 — the polycyclic generating alphabet.
  static Alphabet polycyclic(int rank);
  /// Arbitrary named symbols ("a", "b", ...). A symbol named "0" is
  /// designated as the zero symbol.
  static Alphabet from_names(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Sym s) const { return names_[static_cast<std::size_t>(s)]; }
  std::optional<Sym> find(std::string_view name) const;
  std::optional<Sym> zero() const { return zero_; }
  bool all_single_char() const;

  /// Returns a copy with "0" appended. Throws std::domain_error if the
  /// alphabet already contains a zero symbol.
  Alphabet with_zero() const;

  /// Parses "e", whitespace-separated tokens, or (for single-character
  /// alphabets) contiguous letters such as "bac".
  SymWord parse(std::string_view text) const;
  std::string format(const SymWord& w) const;

 private:
  std::vector<std::string> names_;
  std::optional<Sym> zero_;
};

/// An oriented rule lhs -> rhs with non-empty lhs.
struct Rule {
  SymWord lhs;
  SymWord rhs;
};

/// Classification flags per the standard definitions: special (every rhs
/// empty), monadic (every rhs a single symbol or empty and strictly shorter
/// than its lhs), length-reducing (every rhs strictly shorter than its lhs).
struct SystemClass {
  bool special = false;
  bool monadic = false;
  bool length_reducing = false;
};

/// An overlap of two rule left-hand sides together with its two one-step
/// descendants.
struct CriticalPair {
  SymWord overlap;
  SymWord left;
  SymWord right;
};

enum class Equivalence { equal, distinct, unknown };

class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules);

  /// The polycyclic presentation of rank n >= 2, zero rules included:
  /// q_i p_i -> e, q_i p_j -> 0 (i != j), x0 -> 0, 0x -> 0, 00 -> 0.
  static RewriteSystem polycyclic(int rank);

  /// Rule-file format: one rule per line, "LHS -> RHS", "#" comments, "e"
  /// for an empty side, optional "alphabet: ..." directive. Tokens are
  /// either all in p/q/0 syntax or bare ASCII letters.
  static RewriteSystem parse_rules(std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Set for systems built by the polycyclic() preset; enables the
  /// element-level fast paths in the conjugacy oracles.
  std::optional<int> polycyclic_rank() const { return pn_rank_; }

  SystemClass classify() const;
  bool length_reducing() const { return class_.length_reducing; }

  /// Rewrites the leftmost redex, ties broken by longest lhs then rule
  /// order. Empty result when w is irreducible.
  std::optional<SymWord> reduce_step(const SymWord& w) const;

  /// Full reduction by a single left-to-right pass over w with a buffer of
  /// the irreducible prefix; linear time for monadic systems. Throws
  /// std::domain_error if the system is not length reducing (use
  /// bounded_equal for such systems).
  SymWord normalize(const SymWord& w) const;

  std::vector<CriticalPair> critical_pairs() const;

  /// True iff both descendants of every critical pair have equal normal
  /// forms. Requires a length-reducing system; by Newman's lemma this is
  /// equivalent to confluence here.
  bool locally_confluent() const;

  /// Length-reducing and locally confluent, hence complete.
  bool complete() const;

  /// Adds a zero symbol and the rules x0 -> 0, 0x -> 0, 00 -> 0.
  RewriteSystem adjoin_zero() const;

  /// Bounded bidirectional search of the Thue congruence. `equal` when a
  /// chain of at most `depth` rule applications (either direction) connects
  /// u and v, or when the system is complete and the normal forms agree;
  /// `distinct` only with a completeness certificate; `unknown` otherwise.
  Equivalence bounded_equal(const SymWord& u, const SymWord& v, int depth) const;

  SymWord parse(std::string_view text) const { return alphabet_.parse(text); }
  std::string format(const SymWord& w) const { return alphabet_.format(w); }

 private:
  friend class SystemBuilder;

  std::optional<std::size_t> match_suffix(const SymWord& buf) const;

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::optional<int> pn_rank_;
  SystemClass class_;
  std::vector<std::size_t> rules_by_len_;  // rule indices, lhs length descending
  // Dense lookup for systems whose lhs all have length 2: pair_rhs_[a*n+b]
  // is -2 (no rule), -1 (empty rhs) or the single rhs symbol.
  std::vector<std::int32_t> pair_rhs_;
};

std::size_t count_symbol(const SymWord& w, Sym s);

}  // namespace polyconj::rewrite
