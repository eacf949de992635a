// Core symbol and word types for the polycyclic generating alphabet
// {p_1..p_n, q_1..q_n, 0}, where q_i denotes the inverse of p_i.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyconj {

inline constexpr int kMaxRank = 99;

/// One alphabet symbol: a generator p_i, an inverse generator q_i, or the
/// zero symbol. The zero symbol is an ordinary letter at the word level;
/// only reduction gives it absorbing semantics.
class Letter {
 public:
  enum class Kind : std::uint8_t { positive, negative, zero };

  static Letter positive(int index);
  static Letter negative(int index);
  static Letter zero() { return Letter(0); }

  Kind kind() const {
    return code_ == 0 ? Kind::zero : (code_ > 0 ? Kind::positive : Kind::negative);
  }
  bool is_zero() const { return code_ == 0; }
  /// 1-based generator index; throws std::domain_error for the zero letter.
  int index() const;
  /// p_i <-> q_i. Throws std::domain_error for the zero letter.
  Letter inverse() const;

  std::string str() const;  // "p3", "q1" or "0"

  friend bool operator==(Letter, Letter) = default;
  friend std::strong_ordering operator<=>(Letter, Letter) = default;

 private:
  explicit Letter(std::int16_t code) : code_(code) {}
  std::int16_t code_;  // +i = p_i, -i = q_i, 0 = zero
};

/// A word over the rank-n alphabet {p_1..p_n, q_1..q_n, 0}. The empty word
/// represents the monoid identity. The rank travels with the word so that
/// mixed-rank inputs are caught early.
class Word {
 public:
  explicit Word(int rank);
  Word(int rank, std::vector<Letter> letters);

  /// Token syntax: "e" for the empty word, otherwise whitespace-separated
  /// tokens "p<i>", "q<i>" or "0". Throws std::invalid_argument on unknown
  /// tokens or indices outside 1..rank.
  static Word parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l);
  void append(const Word& other);

  bool contains_zero() const;

  /// Reversal with each letter inverted. Throws std::domain_error if the
  /// word contains the zero letter.
  Word inverted() const;

  std::size_t count(Letter l) const;

  /// Canonical token form; "e" for the empty word.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

/// A word over the positive generators only, stored as 1-based generator
/// indices. This is the component type of reduced polycyclic elements.
class PositiveWord {
 public:
  PositiveWord() = default;
  explicit PositiveWord(std::initializer_list<int> indices);

  static PositiveWord single(int index);

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(idx_[i]); }

  void push_back(int index);
  PositiveWord operator+(const PositiveWord& rhs) const;

  bool is_prefix_of(const PositiveWord& other) const;
  std::size_t common_prefix_len(const PositiveWord& other) const;
  PositiveWord prefix(std::size_t len) const;
  PositiveWord suffix_from(std::size_t pos) const;

  /// The underlying index bytes; lexicographic order on these matches
  /// index-wise lexicographic order on the word.
  const std::string& bytes() const { return idx_; }
  static PositiveWord from_bytes(std::string bytes);

  int max_index() const;

  Word to_word(int rank) const;          // p_{i1} ... p_{ik}
  Word to_inverse_word(int rank) const;  // q_{ik} ... q_{i1}

  std::string str() const;  // "p1 p2" or "e"

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
  friend std::strong_ordering operator<=>(const PositiveWord& a, const PositiveWord& b) {
    return a.idx_ <=> b.idx_;
  }

 private:
  std::string idx_;  // one byte per letter, value = generator index
};

/// True iff u is a prefix of v or v is a prefix of u.
bool prefix_comparable(const PositiveWord& u, const PositiveWord& v);

}  // namespace polyconj
