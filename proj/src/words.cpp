#include "polyconj/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace polyconj {

namespace {

void check_index(int index) {
  if (index < 1 || index > kMaxRank) {
    throw std::invalid_argument("generator index out of range: " + std::to_string(index));
  }
}

}  // namespace

Letter Letter::positive(int index) {
  check_index(index);
  return Letter(static_cast<std::int16_t>(index));
}

Letter Letter::negative(int index) {
  check_index(index);
  return Letter(static_cast<std::int16_t>(-index));
}

int Letter::index() const {
  if (code_ == 0) throw std::domain_error("the zero letter has no generator index");
  return code_ > 0 ? code_ : -code_;
}

Letter Letter::inverse() const {
  if (code_ == 0) throw std::domain_error("the zero letter has no inverse");
  return Letter(static_cast<std::int16_t>(-code_));
}

std::string Letter::str() const {
  if (code_ == 0) return "0";
  return (code_ > 0 ? "p" : "q") + std::to_string(index());
}

Word::Word(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank must be in 1..99");
}

Word::Word(int rank, std::vector<Letter> letters) : Word(rank) {
  letters_ = std::move(letters);
  for (Letter l : letters_) {
    if (!l.is_zero() && l.index() > rank_) {
      throw std::invalid_argument("letter " + l.str() + " exceeds rank " + std::to_string(rank_));
    }
  }
}

void Word::push_back(Letter l) {
  if (!l.is_zero() && l.index() > rank_) {
    throw std::invalid_argument("letter " + l.str() + " exceeds rank " + std::to_string(rank_));
  }
  letters_.push_back(l);
}

void Word::append(const Word& other) {
  for (Letter l : other.letters_) push_back(l);
}

bool Word::contains_zero() const {
  return std::any_of(letters_.begin(), letters_.end(), [](Letter l) { return l.is_zero(); });
}

Word Word::inverted() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (it->is_zero()) throw std::domain_error("cannot invert a word containing the zero letter");
    out.letters_.push_back(it->inverse());
  }
  return out;
}

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

Word Word::parse(std::string_view text, int rank) {
  Word out(rank);
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "e") return out;
  for (const std::string& tok : tokens) {
    if (tok == "e") {
      throw std::invalid_argument("\"e\" denotes the empty word and must stand alone");
    }
    if (tok == "0") {
      out.push_back(Letter::zero());
      continue;
    }
    if (tok.size() < 2 || (tok[0] != 'p' && tok[0] != 'q') ||
        !std::all_of(tok.begin() + 1, tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("unknown token \"" + tok + "\"");
    }
    int index = std::stoi(tok.substr(1));
    if (index < 1 || index > rank) {
      throw std::invalid_argument("token \"" + tok + "\" out of rank " + std::to_string(rank));
    }
    out.push_back(tok[0] == 'p' ? Letter::positive(index) : Letter::negative(index));
  }
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ' ';
    out += letters_[i].str();
  }
  return out;
}

PositiveWord::PositiveWord(std::initializer_list<int> indices) {
  for (int i : indices) push_back(i);
}

PositiveWord PositiveWord::single(int index) {
  PositiveWord w;
  w.push_back(index);
  return w;
}

void PositiveWord::push_back(int index) {
  check_index(index);
  idx_.push_back(static_cast<char>(index));
}

PositiveWord PositiveWord::operator+(const PositiveWord& rhs) const {
  PositiveWord out;
  out.idx_.reserve(idx_.size() + rhs.idx_.size());
  out.idx_ = idx_;
  out.idx_ += rhs.idx_;
  return out;
}

bool PositiveWord::is_prefix_of(const PositiveWord& other) const {
  return idx_.size() <= other.idx_.size() &&
         other.idx_.compare(0, idx_.size(), idx_) == 0;
}

std::size_t PositiveWord::common_prefix_len(const PositiveWord& other) const {
  std::size_t n = std::min(idx_.size(), other.idx_.size());
  std::size_t i = 0;
  while (i < n && idx_[i] == other.idx_[i]) ++i;
  return i;
}

PositiveWord PositiveWord::prefix(std::size_t len) const {
  PositiveWord out;
  out.idx_ = idx_.substr(0, len);
  return out;
}

PositiveWord PositiveWord::suffix_from(std::size_t pos) const {
  PositiveWord out;
  out.idx_ = pos >= idx_.size() ? std::string() : idx_.substr(pos);
  return out;
}

PositiveWord PositiveWord::from_bytes(std::string bytes) {
  for (char c : bytes) check_index(static_cast<unsigned char>(c));
  PositiveWord out;
  out.idx_ = std::move(bytes);
  return out;
}

int PositiveWord::max_index() const {
  int m = 0;
  for (char c : idx_) m = std::max(m, static_cast<int>(static_cast<unsigned char>(c)));
  return m;
}

Word PositiveWord::to_word(int rank) const {
  Word out(rank);
  for (std::size_t i = 0; i < size(); ++i) out.push_back(Letter::positive((*this)[i]));
  return out;
}

Word PositiveWord::to_inverse_word(int rank) const {
  Word out(rank);
  for (std::size_t i = size(); i > 0; --i) out.push_back(Letter::negative((*this)[i - 1]));
  return out;
}

std::string PositiveWord::str() const {
  if (empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ' ';
    out += "p" + std::to_string((*this)[i]);
  }
  return out;
}

bool prefix_comparable(const PositiveWord& u, const PositiveWord& v) {
  return u.is_prefix_of(v) || v.is_prefix_of(u);
}

}  // namespace polyconj
