#include "polyconj/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyconj::rewrite {

namespace {

bool is_pn_token(const std::string& tok) {
  if (tok == "0" || tok == "e") return true;
  if (tok.size() < 2 || (tok[0] != 'p' && tok[0] != 'q')) return false;
  return std::all_of(tok.begin() + 1, tok.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Alphabet Alphabet::polycyclic(int rank) {
  if (rank < 2 || rank > kMaxRank) {
    throw std::domain_error("polycyclic alphabet requires rank in 2..99");
  }
  Alphabet a;
  for (int i = 1; i <= rank; ++i) a.names_.push_back("p" + std::to_string(i));
  for (int i = 1; i <= rank; ++i) a.names_.push_back("q" + std::to_string(i));
  a.names_.push_back("0");
  a.zero_ = static_cast<Sym>(2 * rank);
  return a;
}

Alphabet Alphabet::from_names(std::vector<std::string> names) {
  Alphabet a;
  a.names_ = std::move(names);
  for (std::size_t i = 0; i < a.names_.size(); ++i) {
    if (a.names_[i].empty()) throw std::invalid_argument("empty symbol name");
    for (std::size_t j = i + 1; j < a.names_.size(); ++j) {
      if (a.names_[i] == a.names_[j]) {
        throw std::invalid_argument("duplicate symbol name \"" + a.names_[i] + "\"");
      }
    }
    if (a.names_[i] == "0") a.zero_ = static_cast<Sym>(i);
  }
  return a;
}

std::optional<Sym> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Sym>(i);
  }
  return std::nullopt;
}

bool Alphabet::all_single_char() const {
  return std::all_of(names_.begin(), names_.end(),
                     [](const std::string& n) { return n.size() == 1; });
}

Alphabet Alphabet::with_zero() const {
  if (zero_) throw std::domain_error("alphabet already contains the zero symbol");
  Alphabet a = *this;
  a.names_.push_back("0");
  a.zero_ = static_cast<Sym>(a.names_.size() - 1);
  return a;
}

SymWord Alphabet::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  SymWord out;
  if (tokens.size() == 1 && tokens[0] == "e") return out;
  for (const std::string& tok : tokens) {
    if (tok == "e") throw std::invalid_argument("\"e\" must stand alone");
    if (auto s = find(tok)) {
      out.push_back(*s);
      continue;
    }
    // Contiguous single-character symbols, e.g. "bac".
    if (all_single_char()) {
      SymWord expanded;
      bool ok = true;
      for (char c : tok) {
        auto s = find(std::string_view(&c, 1));
        if (!s) {
          ok = false;
          break;
        }
        expanded.push_back(*s);
      }
      if (ok) {
        out.insert(out.end(), expanded.begin(), expanded.end());
        continue;
      }
    }
    throw std::invalid_argument("unknown symbol \"" + tok + "\"");
  }
  return out;
}

std::string Alphabet::format(const SymWord& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += name(w[i]);
  }
  return out;
}

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (const Rule& r : rules_) {
    if (r.lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
    for (Sym s : r.lhs) {
      if (s < 0 || s >= alphabet_.size()) throw std::invalid_argument("rule symbol out of alphabet");
    }
    for (Sym s : r.rhs) {
      if (s < 0 || s >= alphabet_.size()) throw std::invalid_argument("rule symbol out of alphabet");
    }
  }

  // Vacuously true for an empty rule set.
  class_.special = true;
  class_.monadic = true;
  class_.length_reducing = true;
  for (const Rule& r : rules_) {
    if (!r.rhs.empty()) class_.special = false;
    if (r.rhs.size() > 1 || r.lhs.size() <= r.rhs.size()) class_.monadic = false;
    if (r.lhs.size() <= r.rhs.size()) class_.length_reducing = false;
  }

  rules_by_len_.resize(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) rules_by_len_[i] = i;
  std::stable_sort(rules_by_len_.begin(), rules_by_len_.end(),
                   [&](std::size_t a, std::size_t b) {
                     return rules_[a].lhs.size() > rules_[b].lhs.size();
                   });

  bool all_len2 = !rules_.empty() &&
                  std::all_of(rules_.begin(), rules_.end(),
                              [](const Rule& r) { return r.lhs.size() == 2 && r.rhs.size() <= 1; });
  if (all_len2) {
    std::size_t n = static_cast<std::size_t>(alphabet_.size());
    pair_rhs_.assign(n * n, -2);
    // Earlier rules win on duplicate lhs, matching reduce_step's tie break.
    for (auto it = rules_.rbegin(); it != rules_.rend(); ++it) {
      std::size_t key = static_cast<std::size_t>(it->lhs[0]) * n +
                        static_cast<std::size_t>(it->lhs[1]);
      pair_rhs_[key] = it->rhs.empty() ? -1 : it->rhs[0];
    }
  }
}

RewriteSystem RewriteSystem::polycyclic(int rank) {
  Alphabet a = Alphabet::polycyclic(rank);
  auto p = [&](int i) { return static_cast<Sym>(i - 1); };
  auto q = [&](int i) { return static_cast<Sym>(rank + i - 1); };
  Sym zero = *a.zero();

  std::vector<Rule> rules;
  for (int i = 1; i <= rank; ++i) rules.push_back({{q(i), p(i)}, {}});
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      if (i != j) rules.push_back({{q(i), p(j)}, {zero}});
    }
  }
  for (Sym s = 0; s < 2 * rank; ++s) {
    rules.push_back({{s, zero}, {zero}});
    rules.push_back({{zero, s}, {zero}});
  }
  rules.push_back({{zero, zero}, {zero}});

  RewriteSystem sys(std::move(a), std::move(rules));
  sys.pn_rank_ = rank;
  return sys;
}

RewriteSystem RewriteSystem::parse_rules(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::vector<std::string> alphabet_names;

  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "alphabet:" || toks[0] == "alphabet") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        for (char c : toks[i]) alphabet_names.push_back(std::string(1, c));
      }
      continue;
    }
    auto arrow = std::find(toks.begin(), toks.end(), "->");
    if (arrow == toks.end()) throw std::invalid_argument("rule line without \"->\": " + line);
    std::string lhs, rhs;
    for (auto it = toks.begin(); it != arrow; ++it) lhs += (lhs.empty() ? "" : " ") + *it;
    for (auto it = arrow + 1; it != toks.end(); ++it) rhs += (rhs.empty() ? "" : " ") + *it;
    if (lhs.empty()) throw std::invalid_argument("rule with empty left-hand side: " + line);
    if (rhs.empty()) rhs = "e";
    raw.emplace_back(lhs, rhs);
  }
  if (raw.empty()) throw std::invalid_argument("no rules found");

  bool pn_style = alphabet_names.empty();
  if (pn_style) {
    for (const auto& [lhs, rhs] : raw) {
      std::istringstream ws(lhs + " " + rhs);
      for (std::string t; ws >> t;) {
        if (!is_pn_token(t)) pn_style = false;
      }
    }
  }

  Alphabet alpha;
  if (pn_style) {
    int rank = 2;
    for (const auto& [lhs, rhs] : raw) {
      std::istringstream ws(lhs + " " + rhs);
      for (std::string t; ws >> t;) {
        if (t.size() >= 2 && (t[0] == 'p' || t[0] == 'q')) {
          rank = std::max(rank, std::stoi(t.substr(1)));
        }
      }
    }
    alpha = Alphabet::polycyclic(rank);
  } else if (!alphabet_names.empty()) {
    std::sort(alphabet_names.begin(), alphabet_names.end());
    alphabet_names.erase(std::unique(alphabet_names.begin(), alphabet_names.end()),
                         alphabet_names.end());
    alpha = Alphabet::from_names(alphabet_names);
  } else {
    std::set<char> chars;
    for (const auto& [lhs, rhs] : raw) {
      for (char c : lhs + rhs) {
        if (!std::isspace(static_cast<unsigned char>(c))) chars.insert(c);
      }
    }
    chars.erase('e');
    std::vector<std::string> names;
    for (char c : chars) names.emplace_back(1, c);
    alpha = Alphabet::from_names(names);
  }

  std::vector<Rule> rules;
  for (const auto& [lhs, rhs] : raw) {
    rules.push_back({alpha.parse(lhs), alpha.parse(rhs)});
  }
  return RewriteSystem(std::move(alpha), std::move(rules));
}

SystemClass RewriteSystem::classify() const { return class_; }

std::optional<SymWord> RewriteSystem::reduce_step(const SymWord& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t ri : rules_by_len_) {
      const Rule& r = rules_[ri];
      if (pos + r.lhs.size() > w.size()) continue;
      if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
        SymWord out;
        out.reserve(w.size() - r.lhs.size() + r.rhs.size());
        out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        out.insert(out.end(), r.rhs.begin(), r.rhs.end());
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
        return out;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> RewriteSystem::match_suffix(const SymWord& buf) const {
  for (std::size_t ri : rules_by_len_) {
    const Rule& r = rules_[ri];
    std::size_t L = r.lhs.size();
    if (L > buf.size()) continue;
    if (std::equal(r.lhs.begin(), r.lhs.end(), buf.end() - static_cast<std::ptrdiff_t>(L))) {
      return ri;
    }
  }
  return std::nullopt;
}

SymWord RewriteSystem::normalize(const SymWord& w) const {
  if (!class_.length_reducing) {
    throw std::domain_error(
        "normalize requires a length-reducing system; use bounded_equal instead");
  }

  SymWord buf;
  buf.reserve(w.size());

  if (!pair_rhs_.empty()) {
    // All left-hand sides have length 2: one table probe per appended symbol.
    std::size_t n = static_cast<std::size_t>(alphabet_.size());
    for (Sym c : w) {
      Sym cur = c;
      while (true) {
        if (buf.empty()) {
          buf.push_back(cur);
          break;
        }
        std::int32_t rhs = pair_rhs_[static_cast<std::size_t>(buf.back()) * n +
                                     static_cast<std::size_t>(cur)];
        if (rhs == -2) {
          buf.push_back(cur);
          break;
        }
        buf.pop_back();
        // Empty rhs: both symbols are gone and the remaining prefix is
        // already irreducible. Single-symbol rhs: re-check it against the
        // new buffer top.
        if (rhs == -1) break;
        cur = rhs;
      }
    }
    return buf;
  }

  // Generic path: pending holds symbols still to be appended, last first.
  SymWord pending(w.rbegin(), w.rend());
  while (!pending.empty()) {
    buf.push_back(pending.back());
    pending.pop_back();
    if (auto ri = match_suffix(buf)) {
      const Rule& r = rules_[*ri];
      buf.resize(buf.size() - r.lhs.size());
      pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
    }
  }
  return buf;
}

std::vector<CriticalPair> RewriteSystem::critical_pairs() const {
  std::vector<CriticalPair> out;
  auto concat = [](const SymWord& a, const SymWord& b, const SymWord& c) {
    SymWord w;
    w.reserve(a.size() + b.size() + c.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    w.insert(w.end(), c.begin(), c.end());
    return w;
  };

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const SymWord& l1 = rules_[i].lhs;
    const SymWord& r1 = rules_[i].rhs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const SymWord& l2 = rules_[j].lhs;
      const SymWord& r2 = rules_[j].rhs;

      // Proper overlaps: l2 starts at offset s inside l1 and sticks out.
      for (std::size_t s = 1; s < l1.size(); ++s) {
        std::size_t k = l1.size() - s;  // overlapped length
        if (k >= l2.size()) continue;
        if (!std::equal(l1.begin() + static_cast<std::ptrdiff_t>(s), l1.end(), l2.begin())) {
          continue;
        }
        SymWord tail(l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
        SymWord head(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(s));
        out.push_back({concat(l1, tail, {}), concat(r1, tail, {}), concat(head, r2, {})});
      }

      // Containments: l2 occurs inside l1.
      if (l2.size() <= l1.size()) {
        for (std::size_t s = 0; s + l2.size() <= l1.size(); ++s) {
          if (i == j && s == 0 && l1.size() == l2.size()) continue;  // trivial self
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(s))) {
            continue;
          }
          SymWord mid(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(s));
          SymWord tail(l1.begin() + static_cast<std::ptrdiff_t>(s + l2.size()), l1.end());
          out.push_back({l1, r1, concat(mid, r2, tail)});
        }
      }
    }
  }
  return out;
}

bool RewriteSystem::locally_confluent() const {
  for (const CriticalPair& cp : critical_pairs()) {
    if (normalize(cp.left) != normalize(cp.right)) return false;
  }
  return true;
}

bool RewriteSystem::complete() const {
  return class_.length_reducing && locally_confluent();
}

RewriteSystem RewriteSystem::adjoin_zero() const {
  Alphabet a = alphabet_.with_zero();
  Sym zero = *a.zero();
  std::vector<Rule> rules = rules_;
  for (Sym s = 0; s < zero; ++s) {
    rules.push_back({{s, zero}, {zero}});
    rules.push_back({{zero, s}, {zero}});
  }
  rules.push_back({{zero, zero}, {zero}});
  return RewriteSystem(std::move(a), std::move(rules));
}

Equivalence RewriteSystem::bounded_equal(const SymWord& u, const SymWord& v, int depth) const {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");

  if (complete()) {
    return normalize(u) == normalize(v) ? Equivalence::equal : Equivalence::distinct;
  }

  if (u == v) return Equivalence::equal;

  auto neighbours = [&](const SymWord& w, std::vector<SymWord>& out) {
    out.clear();
    for (const Rule& r : rules_) {
      // Forward: replace an occurrence of lhs by rhs.
      for (std::size_t pos = 0; pos + r.lhs.size() <= w.size(); ++pos) {
        if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
          SymWord nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          nw.insert(nw.end(), r.rhs.begin(), r.rhs.end());
          nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
          out.push_back(std::move(nw));
        }
      }
      // Backward: replace an occurrence of rhs by lhs.
      for (std::size_t pos = 0; pos + r.rhs.size() <= w.size(); ++pos) {
        if (std::equal(r.rhs.begin(), r.rhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
          SymWord nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          nw.insert(nw.end(), r.lhs.begin(), r.lhs.end());
          nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.rhs.size()), w.end());
          out.push_back(std::move(nw));
        }
      }
    }
  };

  std::set<SymWord> seen{u};
  std::vector<SymWord> frontier{u};
  std::vector<SymWord> next, buf;
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    next.clear();
    for (const SymWord& w : frontier) {
      neighbours(w, buf);
      for (SymWord& nw : buf) {
        if (nw == v) return Equivalence::equal;
        if (seen.insert(nw).second) next.push_back(std::move(nw));
      }
    }
    frontier.swap(next);
  }
  return Equivalence::unknown;
}

std::size_t count_symbol(const SymWord& w, Sym s) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

}  // namespace polyconj::rewrite
