#include "polyconj/polycyclic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace polyconj::pn {

PnElement::PnElement(int rank, bool zero, PositiveWord range, PositiveWord domain)
    : rank_(rank), zero_(zero), range_(std::move(range)), domain_(std::move(domain)) {
  if (rank < 2 || rank > kMaxRank) {
    throw std::domain_error("polycyclic elements require rank in 2..99");
  }
  if (range_.max_index() > rank_ || domain_.max_index() > rank_) {
    throw std::invalid_argument("component index exceeds rank");
  }
}

PnElement PnElement::zero(int rank) { return PnElement(rank, true, {}, {}); }

PnElement PnElement::make(int rank, PositiveWord range, PositiveWord domain) {
  return PnElement(rank, false, std::move(range), std::move(domain));
}

const PositiveWord& PnElement::range() const {
  if (zero_) throw std::domain_error("the zero element has no range word");
  return range_;
}

const PositiveWord& PnElement::domain() const {
  if (zero_) throw std::domain_error("the zero element has no domain word");
  return domain_;
}

Word PnElement::to_word() const {
  Word out(rank_);
  if (zero_) {
    out.push_back(Letter::zero());
    return out;
  }
  for (std::size_t i = 0; i < range_.size(); ++i) out.push_back(Letter::positive(range_[i]));
  for (std::size_t i = domain_.size(); i > 0; --i) {
    out.push_back(Letter::negative(domain_[i - 1]));
  }
  return out;
}

std::size_t PnElement::word_length() const {
  return zero_ ? 1 : range_.size() + domain_.size();
}

const rewrite::RewriteSystem& pn_system(int rank) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<rewrite::RewriteSystem>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[rank];
  if (!slot) {
    slot = std::make_unique<rewrite::RewriteSystem>(rewrite::RewriteSystem::polycyclic(rank));
  }
  return *slot;
}

rewrite::SymWord to_symbols(const Word& w) {
  int rank = w.rank();
  rewrite::SymWord out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    switch (l.kind()) {
      case Letter::Kind::positive: out.push_back(l.index() - 1); break;
      case Letter::Kind::negative: out.push_back(rank + l.index() - 1); break;
      case Letter::Kind::zero: out.push_back(2 * rank); break;
    }
  }
  return out;
}

Word from_symbols(const rewrite::SymWord& sw, int rank) {
  Word out(rank);
  for (rewrite::Sym s : sw) {
    if (s < rank) {
      out.push_back(Letter::positive(s + 1));
    } else if (s < 2 * rank) {
      out.push_back(Letter::negative(s - rank + 1));
    } else {
      out.push_back(Letter::zero());
    }
  }
  return out;
}

PnElement reduce(const Word& w) {
  int rank = w.rank();
  const rewrite::RewriteSystem& sys = pn_system(rank);
  rewrite::SymWord nf = sys.normalize(to_symbols(w));

  if (nf.size() == 1 && nf[0] == 2 * rank) return PnElement::zero(rank);

  PositiveWord range, domain;
  std::size_t i = 0;
  while (i < nf.size() && nf[i] < rank) {
    range.push_back(nf[i] + 1);
    ++i;
  }
  std::string rev;
  while (i < nf.size() && nf[i] >= rank && nf[i] < 2 * rank) {
    rev.push_back(static_cast<char>(nf[i] - rank + 1));
    ++i;
  }
  if (i != nf.size()) {
    throw std::logic_error("polycyclic normal form is not of shape p* q* or 0");
  }
  std::string dom(rev.rbegin(), rev.rend());
  return PnElement::make(rank, std::move(range), PositiveWord::from_bytes(std::move(dom)));
}

PnElement multiply(const PnElement& a, const PnElement& b) {
  if (a.rank() != b.rank()) throw std::domain_error("rank mismatch");
  if (a.is_zero() || b.is_zero()) return PnElement::zero(a.rank());
  const PositiveWord& x = a.domain();
  const PositiveWord& v = b.range();
  if (x.is_prefix_of(v)) {
    // v = x z : (y x^{-1})(v u^{-1}) = (y z) u^{-1}
    return PnElement::make(a.rank(), a.range() + v.suffix_from(x.size()), b.domain());
  }
  if (v.is_prefix_of(x)) {
    // x = v z : (y x^{-1})(v u^{-1}) = y (u z)^{-1}
    return PnElement::make(a.rank(), a.range(), b.domain() + x.suffix_from(v.size()));
  }
  return PnElement::zero(a.rank());
}

CyclicDecomposition cyclic_reduce(const PnElement& a) {
  if (a.is_zero()) return {PositiveWord{}, a};
  std::size_t k = a.range().common_prefix_len(a.domain());
  return {a.range().prefix(k),
          PnElement::make(a.rank(), a.range().suffix_from(k), a.domain().suffix_from(k))};
}

PnElement reverse_product(const PnElement& a) {
  if (a.is_zero()) return a;
  const PositiveWord& y = a.range();
  const PositiveWord& x = a.domain();
  if (x.is_prefix_of(y)) return PnElement::make(a.rank(), y.suffix_from(x.size()), {});
  if (y.is_prefix_of(x)) return PnElement::make(a.rank(), {}, x.suffix_from(y.size()));
  return PnElement::zero(a.rank());
}

PnElement product_core(const PositiveWord& p, const PositiveWord& q, const PositiveWord& r,
                       const PositiveWord& s, int rank) {
  if (!prefix_comparable(q, r)) {
    throw std::invalid_argument("product is zero: q and r are not prefix-comparable");
  }

  if (q.is_prefix_of(r)) {
    PositiveWord t = r.suffix_from(q.size());
    if (s.is_prefix_of(p)) {
      // p = s l : core is the positive word l t.
      return PnElement::make(rank, p.suffix_from(s.size()) + t, {});
    }
    if (p.is_prefix_of(s)) {
      // s = p l : core of t l^{-1}.
      return cyclic_reduce(PnElement::make(rank, t, s.suffix_from(p.size()))).core;
    }
    // p and s diverge: strip their common prefix from the assembled
    // element (p t, s) directly.
    std::size_t d = p.common_prefix_len(s);
    return PnElement::make(rank, (p + t).suffix_from(d), s.suffix_from(d));
  }

  // r is a proper prefix of q here: q = r t.
  PositiveWord t = q.suffix_from(r.size());
  if (s.is_prefix_of(p)) {
    // p = s l : core of l t^{-1}.
    return cyclic_reduce(PnElement::make(rank, p.suffix_from(s.size()), t)).core;
  }
  if (p.is_prefix_of(s)) {
    // s = p l : core is (l t)^{-1}.
    return PnElement::make(rank, {}, s.suffix_from(p.size()) + t);
  }
  std::size_t d = p.common_prefix_len(s);
  return PnElement::make(rank, p.suffix_from(d), (s + t).suffix_from(d));
}

bool in_conjugator_set(const PnElement& g, const PnElement& a) {
  if (g.rank() != a.rank()) throw std::domain_error("rank mismatch");
  if (a.is_zero()) return g.is_zero();
  if (g.is_zero()) return false;
  return g.range().is_prefix_of(a.domain());
}

namespace {

// Positive words of each length 0..max_len over 1..rank, lexicographically
// ordered within a length block.
const std::vector<std::vector<PositiveWord>>& words_by_length(int rank, int max_len) {
  thread_local std::map<int, std::vector<std::vector<PositiveWord>>> cache;
  auto& blocks = cache[rank];
  if (static_cast<int>(blocks.size()) > max_len) return blocks;
  blocks.clear();
  blocks.resize(static_cast<std::size_t>(max_len) + 1);
  blocks[0].push_back({});
  for (int len = 1; len <= max_len; ++len) {
    std::string cur(static_cast<std::size_t>(len), static_cast<char>(1));
    while (true) {
      blocks[static_cast<std::size_t>(len)].push_back(PositiveWord::from_bytes(cur));
      int pos = len - 1;
      while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == static_cast<char>(rank)) {
        cur[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++cur[static_cast<std::size_t>(pos)];
    }
  }
  return blocks;
}

}  // namespace

ConjugatorSetProbe in_conjugator_set_by_definition(const PnElement& g, const PnElement& a,
                                                   int probe_bound) {
  if (probe_bound < 0) throw std::invalid_argument("probe bound must be non-negative");
  if (g.rank() != a.rank()) throw std::domain_error("rank mismatch");

  // The conjugator set of zero is {zero} by definition; the universally
  // quantified condition is vacuous at a = 0, so mirror the convention.
  if (a.is_zero()) return {g.is_zero(), std::nullopt};

  int rank = a.rank();
  const auto& blocks = words_by_length(rank, probe_bound);
  // m = zero never violates (m.a = 0 as well), so enumerate nonzero m by
  // total reduced length, then by components.
  for (int total = 0; total <= probe_bound; ++total) {
    for (int rlen = 0; rlen <= total; ++rlen) {
      for (const PositiveWord& v : blocks[static_cast<std::size_t>(rlen)]) {
        for (const PositiveWord& u : blocks[static_cast<std::size_t>(total - rlen)]) {
          PnElement m = PnElement::make(rank, v, u);
          PnElement ma = multiply(m, a);
          if (ma.is_zero()) continue;
          if (multiply(ma, g).is_zero()) return {false, m};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<PositiveWord> all_positive_words(int rank, int max_len) {
  const auto& blocks = words_by_length(rank, max_len);
  std::vector<PositiveWord> out;
  for (int len = 0; len <= max_len; ++len) {
    const auto& block = blocks[static_cast<std::size_t>(len)];
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<PnElement> all_elements(int rank, int max_comp) {
  std::vector<PnElement> out;
  out.push_back(PnElement::zero(rank));
  std::vector<PositiveWord> words = all_positive_words(rank, max_comp);
  for (const PositiveWord& y : words) {
    for (const PositiveWord& x : words) {
      out.push_back(PnElement::make(rank, y, x));
    }
  }
  return out;
}

}  // namespace polyconj::pn
