#include "polyconj/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polyconj::conj {

using pn::cyclic_reduce;
using pn::in_conjugator_set;
using pn::multiply;
using pn::PnElement;
using pn::reverse_product;
using rewrite::RewriteSystem;
using rewrite::Sym;
using rewrite::SymWord;

namespace {

void require_same_rank(const PnElement& a, const PnElement& b) {
  if (a.rank() != b.rank()) throw std::domain_error("rank mismatch");
}

// Positive words of length <= len over 1..rank, ordered by length then
// lexicographically; grown on demand and kept per thread.
const std::vector<PositiveWord>& cached_words(int rank, int len) {
  thread_local std::map<int, std::pair<int, std::vector<PositiveWord>>> cache;
  auto& entry = cache[rank];
  if (entry.second.empty() || entry.first < len) {
    entry.second = pn::all_positive_words(rank, len);
    entry.first = len;
  }
  return entry.second;
}

}  // namespace

std::optional<std::size_t> rotation_offset(const PositiveWord& u, const PositiveWord& v) {
  if (u.size() != v.size()) return std::nullopt;
  std::size_t n = u.size();
  if (n == 0) return 0;

  const std::string& pat = v.bytes();
  std::string text = u.bytes() + u.bytes();

  // Knuth-Morris-Pratt; worst-case linear comparisons.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && pat[i] != pat[k]) k = fail[k - 1];
    if (pat[i] == pat[k]) ++k;
    fail[i] = k;
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pat[k]) k = fail[k - 1];
    if (text[i] == pat[k]) ++k;
    if (k == n) {
      std::size_t pos = i + 1 - n;
      return pos % n;
    }
  }
  return std::nullopt;
}

bool free_conj_p(const PositiveWord& u, const PositiveWord& v) {
  return rotation_offset(u, v).has_value();
}

Verdict conj_p(const PnElement& a, const PnElement& b) {
  require_same_rank(a, b);
  const int rank = a.rank();

  if (a.is_zero() && b.is_zero()) {
    return {true, std::make_pair(PnElement::zero(rank), PnElement::zero(rank))};
  }
  if (a.is_zero()) {
    if (!reverse_product(b).is_zero()) return {};
    // b = uv with u v = 0 in the other order: u = domain(b)^{-1}, v = range(b).
    return {true, std::make_pair(PnElement::make(rank, {}, b.domain()),
                                 PnElement::make(rank, b.range(), {}))};
  }
  if (b.is_zero()) {
    if (!reverse_product(a).is_zero()) return {};
    return {true, std::make_pair(PnElement::make(rank, a.range(), {}),
                                 PnElement::make(rank, {}, a.domain()))};
  }

  const auto da = cyclic_reduce(a);
  const auto db = cyclic_reduce(b);
  const PnElement& ca = da.core;
  const PnElement& cb = db.core;
  const bool a_pos = ca.domain().empty();
  const bool b_pos = cb.domain().empty();
  const bool a_neg = ca.range().empty();
  const bool b_neg = cb.range().empty();

  if (a_pos && b_pos) {
    auto k = rotation_offset(ca.range(), cb.range());
    if (!k) return {};
    // core(a) = u'v', core(b) = v'u': a = (p u') (q)^{-1} . (q v') (p)^{-1}.
    PositiveWord up = ca.range().prefix(*k);
    PositiveWord vp = ca.range().suffix_from(*k);
    return {true, std::make_pair(PnElement::make(rank, da.conjugator + up, db.conjugator),
                                 PnElement::make(rank, db.conjugator + vp, da.conjugator))};
  }
  if (a_neg && b_neg) {
    auto k = rotation_offset(ca.domain(), cb.domain());
    if (!k) return {};
    PositiveWord u1 = ca.domain().prefix(*k);
    PositiveWord v1 = ca.domain().suffix_from(*k);
    return {true, std::make_pair(PnElement::make(rank, da.conjugator, db.conjugator + v1),
                                 PnElement::make(rank, db.conjugator, da.conjugator + u1))};
  }
  // Both cores mixed (factor reversal is zero on both sides): related iff
  // the cores agree, with witness a = (p ya') (q xa')^{-1} . q p^{-1}.
  if (!a_pos && !a_neg && !b_pos && !b_neg && ca == cb) {
    return {true,
            std::make_pair(PnElement::make(rank, da.conjugator + ca.range(),
                                           db.conjugator + ca.domain()),
                           PnElement::make(rank, db.conjugator, da.conjugator))};
  }
  return {};
}

bool conj_p_star(const PnElement& a, const PnElement& b) {
  require_same_rank(a, b);
  if (conj_p(a, b).related) return true;
  return reverse_product(a).is_zero() && reverse_product(b).is_zero();
}

Verdict conj_c(const PnElement& a, const PnElement& b) {
  require_same_rank(a, b);
  const int rank = a.rank();

  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) {
      return {true, std::make_pair(PnElement::zero(rank), PnElement::zero(rank))};
    }
    return {};
  }

  const auto da = cyclic_reduce(a);
  const auto db = cyclic_reduce(b);

  if (da.core == db.core) {
    return {true, std::make_pair(PnElement::make(rank, da.conjugator, db.conjugator),
                                 PnElement::make(rank, db.conjugator, da.conjugator))};
  }
  if (da.core.range().empty() && db.core.range().empty()) {
    // Pure negative cores t^{-1}, z^{-1}: related iff t and z are rotations;
    // conjugators are built from a rotation split t = alpha beta,
    // z = beta alpha.
    auto k = rotation_offset(da.core.domain(), db.core.domain());
    if (k) {
      PositiveWord alpha = da.core.domain().prefix(*k);
      PositiveWord beta = da.core.domain().suffix_from(*k);
      return {true,
              std::make_pair(PnElement::make(rank, da.conjugator, db.conjugator + beta),
                             PnElement::make(rank, db.conjugator, da.conjugator + alpha))};
    }
  }
  return {};
}

bool conj_o(const PnElement& a, const PnElement& b) {
  require_same_rank(a, b);
  return true;  // P_n has a zero, so the unrestricted relation is universal
}

bool verify_p_witness(const PnElement& a, const PnElement& b,
                      const std::pair<PnElement, PnElement>& w) {
  return multiply(w.first, w.second) == a && multiply(w.second, w.first) == b;
}

bool verify_c_witness(const PnElement& a, const PnElement& b,
                      const std::pair<PnElement, PnElement>& w) {
  return in_conjugator_set(w.first, a) && in_conjugator_set(w.second, b) &&
         multiply(a, w.first) == multiply(w.first, b) &&
         multiply(b, w.second) == multiply(w.second, a);
}

Verdict conj_p_words(const Word& a, const Word& b) { return conj_p(pn::reduce(a), pn::reduce(b)); }

bool conj_p_star_words(const Word& a, const Word& b) {
  return conj_p_star(pn::reduce(a), pn::reduce(b));
}

Verdict conj_c_words(const Word& a, const Word& b) { return conj_c(pn::reduce(a), pn::reduce(b)); }

bool conj_o_words(const Word& a, const Word& b) { return conj_o(pn::reduce(a), pn::reduce(b)); }

namespace {

// Enumerates all pairs (f, g) of nonzero elements with f.g = target and
// reduced word lengths <= bound. Coverage: any such pair arises either with
// range(g) = domain(f).z (split of target's range word) or with
// domain(f) = range(g).z for a non-empty suffix z of target's domain word.
// Stops early when visit returns true.
template <typename Visit>
void for_each_factorisation(const PnElement& target, int bound, Visit visit) {
  const int rank = target.rank();
  const PositiveWord& ty = target.range();
  const PositiveWord& tx = target.domain();
  const auto& words = cached_words(rank, bound);
  const int tx_len = static_cast<int>(tx.size());
  const int ty_len = static_cast<int>(ty.size());

  // f = (ty[:i], d), g = (d . ty[i:], tx)
  for (int i = 0; i <= ty_len && i <= bound; ++i) {
    PositiveWord c = ty.prefix(static_cast<std::size_t>(i));
    PositiveWord z = ty.suffix_from(static_cast<std::size_t>(i));
    int max_d = std::min(bound - i, bound - static_cast<int>(z.size()) - tx_len);
    if (max_d < 0) continue;
    for (const PositiveWord& d : words) {
      if (static_cast<int>(d.size()) > max_d) break;
      PnElement f = PnElement::make(rank, c, d);
      PnElement g = PnElement::make(rank, d + z, tx);
      if (visit(std::move(f), std::move(g))) return;
    }
  }
  // f = (ty, w . z), g = (w, tx[:j]) with z = tx[j:] non-empty
  for (int j = 0; j < tx_len; ++j) {
    PositiveWord gx = tx.prefix(static_cast<std::size_t>(j));
    PositiveWord z = tx.suffix_from(static_cast<std::size_t>(j));
    int max_w = std::min(bound - j, bound - ty_len - static_cast<int>(z.size()));
    if (max_w < 0) continue;
    for (const PositiveWord& w : words) {
      if (static_cast<int>(w.size()) > max_w) break;
      PnElement f = PnElement::make(rank, ty, w + z);
      PnElement g = PnElement::make(rank, w, gx);
      if (visit(std::move(f), std::move(g))) return;
    }
  }
}

}  // namespace

ElementOracleResult oracle_p_elements(const PnElement& a, const PnElement& b, int bound) {
  require_same_rank(a, b);
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const int rank = a.rank();

  if (a.is_zero() && b.is_zero()) {
    if (bound < 1) return {};
    return {true, std::make_pair(PnElement::one(rank), PnElement::zero(rank))};
  }

  ElementOracleResult result;
  if (a.is_zero()) {
    // v u = b with u v = 0.
    for_each_factorisation(b, bound, [&](PnElement v, PnElement u) {
      if (multiply(u, v).is_zero()) {
        result = {true, std::make_pair(std::move(u), std::move(v))};
        return true;
      }
      return false;
    });
    return result;
  }
  // u v = a with v u = b (covers nonzero b and zero b alike).
  for_each_factorisation(a, bound, [&](PnElement u, PnElement v) {
    if (multiply(v, u) == b) {
      result = {true, std::make_pair(std::move(u), std::move(v))};
      return true;
    }
    return false;
  });
  return result;
}

namespace {

bool has_lhs_suffix(const RewriteSystem& sys, const SymWord& w) {
  for (const rewrite::Rule& r : sys.rules()) {
    if (r.lhs.size() > w.size()) continue;
    if (std::equal(r.lhs.begin(), r.lhs.end(), w.end() - static_cast<std::ptrdiff_t>(r.lhs.size()))) {
      return true;
    }
  }
  return false;
}

// Irreducible words of each length 0..max_len, lexicographic by symbol id
// within a length block.
std::vector<std::vector<SymWord>> irreducible_by_length(const RewriteSystem& sys, int max_len) {
  std::vector<std::vector<SymWord>> blocks(static_cast<std::size_t>(max_len) + 1);
  blocks[0].push_back({});
  for (int len = 1; len <= max_len; ++len) {
    for (const SymWord& w : blocks[static_cast<std::size_t>(len - 1)]) {
      SymWord ext = w;
      ext.push_back(0);
      for (Sym s = 0; s < sys.alphabet().size(); ++s) {
        ext.back() = s;
        if (!has_lhs_suffix(sys, ext)) blocks[static_cast<std::size_t>(len)].push_back(ext);
      }
    }
  }
  return blocks;
}

SymWord concat(const SymWord& u, const SymWord& v) {
  SymWord out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

void require_complete(const RewriteSystem& sys) {
  if (!sys.complete()) {
    throw std::domain_error("oracle search requires a complete rewriting system");
  }
}

}  // namespace

WordOracleResult oracle_p(const RewriteSystem& sys, const SymWord& a, const SymWord& b,
                          int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");

  if (auto rank = sys.polycyclic_rank()) {
    PnElement ea = pn::reduce(pn::from_symbols(a, *rank));
    PnElement eb = pn::reduce(pn::from_symbols(b, *rank));
    ElementOracleResult r = oracle_p_elements(ea, eb, bound);
    if (!r.found) return {};
    return {true, std::make_pair(pn::to_symbols(r.witness->first.to_word()),
                                 pn::to_symbols(r.witness->second.to_word()))};
  }

  require_complete(sys);
  SymWord na = sys.normalize(a);
  SymWord nb = sys.normalize(b);
  auto blocks = irreducible_by_length(sys, bound);

  // Pairs by total length, then u, then v.
  for (int total = 0; total <= 2 * bound; ++total) {
    for (int lu = std::max(0, total - bound); lu <= std::min(bound, total); ++lu) {
      for (const SymWord& u : blocks[static_cast<std::size_t>(lu)]) {
        for (const SymWord& v : blocks[static_cast<std::size_t>(total - lu)]) {
          if (sys.normalize(concat(u, v)) == na && sys.normalize(concat(v, u)) == nb) {
            return {true, std::make_pair(u, v)};
          }
        }
      }
    }
  }
  return {};
}

ElementOracleResult oracle_c_pn(const PnElement& a, const PnElement& b, int bound) {
  require_same_rank(a, b);
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const int rank = a.rank();

  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) {
      return {true, std::make_pair(PnElement::zero(rank), PnElement::zero(rank))};
    }
    return {};  // the conjugator set of zero is {zero}; no h can close the loop
  }

  const auto& words = cached_words(rank, bound);

  auto search = [&](const PnElement& lhs, const PnElement& rhs) -> std::optional<PnElement> {
    // Candidates g in the conjugator set of lhs: range a prefix of lhs's
    // domain word, domain free, both components bounded.
    const PositiveWord& dom = lhs.domain();
    for (std::size_t rl = 0; rl <= dom.size() && rl <= static_cast<std::size_t>(bound); ++rl) {
      PositiveWord r = dom.prefix(rl);
      for (const PositiveWord& s : words) {
        if (static_cast<int>(s.size()) > bound) break;
        PnElement g = PnElement::make(rank, r, s);
        if (multiply(lhs, g) == multiply(g, rhs)) return g;
      }
    }
    return std::nullopt;
  };

  auto g = search(a, b);
  if (!g) return {};
  auto h = search(b, a);
  if (!h) return {};
  return {true, std::make_pair(*g, *h)};
}

WordOracleResult oracle_o(const RewriteSystem& sys, const SymWord& u, const SymWord& v,
                          int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  require_complete(sys);

  SymWord nu = sys.normalize(u);
  SymWord nv = sys.normalize(v);
  auto blocks = irreducible_by_length(sys, bound);

  auto search = [&](const SymWord& lhs, const SymWord& rhs) -> std::optional<SymWord> {
    for (const auto& block : blocks) {
      for (const SymWord& g : block) {
        if (sys.normalize(concat(lhs, g)) == sys.normalize(concat(g, rhs))) return g;
      }
    }
    return std::nullopt;
  };

  auto g = search(nu, nv);
  if (!g) return {};
  auto h = search(nv, nu);
  if (!h) return {};
  return {true, std::make_pair(*g, *h)};
}

std::vector<std::size_t> pstar_closure(const std::vector<PnElement>& sample) {
  std::vector<std::size_t> parent(sample.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      if (conj_p(sample[i], sample[j]).related) {
        std::size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::vector<std::size_t> labels(sample.size());
  std::map<std::size_t, std::size_t> relabel;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    std::size_t root = find(i);
    labels[i] = relabel.emplace(root, relabel.size()).first->second;
  }
  return labels;
}

}  // namespace polyconj::conj
