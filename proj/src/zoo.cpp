#include "polyconj/zoo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "polyconj/conjugacy.hpp"

namespace polyconj::zoo {

using rewrite::Alphabet;
using rewrite::RewriteSystem;
using rewrite::Rule;
using rewrite::Sym;
using rewrite::SymWord;

ZooMonoid make_example22(bool with_zero) {
  Alphabet alpha = Alphabet::from_names({"a", "b", "c"});
  Sym a = 0, b = 1, c = 2;
  RewriteSystem sys(alpha, {{{a, b}, {b}}, {{c, b}, {b}}});
  if (with_zero) sys = sys.adjoin_zero();
  ZooMonoid m;
  m.name = with_zero ? "example22-zero" : "example22";
  m.system = std::move(sys);
  m.notes =
      "Monadic confluent presentation ({a,b,c}; ab=b, cb=b); normal forms are "
      "b^k followed by a word over {a,c}. No exact conjugacy decider is "
      "provided; use the bounded oracles.";
  return m;
}

ZooMonoid make_one_relator_power(int k) {
  if (k < 1) throw std::invalid_argument("one-relator power monoid requires k >= 1");
  Alphabet alpha = Alphabet::from_names({"a"});
  SymWord lhs(static_cast<std::size_t>(k) + 1, 0);
  SymWord rhs(static_cast<std::size_t>(k), 0);
  RewriteSystem sys(alpha, {{lhs, rhs}});

  ZooMonoid m;
  m.name = "onerel-" + std::to_string(k);
  m.system = sys;
  m.notes =
      "One-relator monoid ({a}; a^{k+1}=a^k) with elements 1, a, ..., a^k and "
      "zero a^k. The p- and c-relations are equality; the o-relation is "
      "universal.";
  auto equal_nf = [sys](const SymWord& u, const SymWord& v) {
    return sys.normalize(u) == sys.normalize(v);
  };
  m.decide_p = equal_nf;
  m.decide_c = equal_nf;
  m.decide_o = [](const SymWord&, const SymWord&) { return true; };
  return m;
}

ZooMonoid make_tin1(const RewriteSystem& base) {
  const Alphabet& balpha = base.alphabet();
  if (balpha.zero()) {
    throw std::invalid_argument("the base presentation must not contain a zero symbol");
  }
  std::vector<std::string> names;
  for (Sym s = 0; s < balpha.size(); ++s) {
    if (balpha.name(s) == "a" || balpha.name(s) == "b") {
      throw std::invalid_argument("base alphabet collides with the adjoined symbols a, b");
    }
    names.push_back(balpha.name(s));
  }
  const Sym nbase = balpha.size();
  const Sym a = nbase, b = nbase + 1;
  names.push_back("a");
  names.push_back("b");

  std::vector<Rule> rules = base.rules();  // symbol ids carry over unchanged
  for (Sym x = 0; x < nbase; ++x) rules.push_back({{x, a}, {a, x}});
  for (Sym x = 0; x < nbase; ++x) rules.push_back({{b, x}, {b}});
  rules.push_back({{b, a}, {b}});
  for (Sym x = 0; x < nbase; ++x) rules.push_back({{x, b}, {b}});
  rules.push_back({{a, a}, {a}});

  ZooMonoid m;
  m.name = nbase == 0 ? "tin1-trivial" : "tin1";
  m.system = RewriteSystem(Alphabet::from_names(names), std::move(rules));
  m.notes =
      "Extension of a zero-free base by symbols a, b with xa=ax, bx=b "
      "(x in base or a), xb=b (x in base) and aa=a. Every rule preserves the "
      "number of b's, and two words are c-related exactly when those counts "
      "agree; the monoid has no zero, so the o-relation coincides with c.";
  auto count_b = [b](const SymWord& u, const SymWord& v) {
    return rewrite::count_symbol(u, b) == rewrite::count_symbol(v, b);
  };
  m.decide_c = count_b;
  m.decide_o = count_b;
  return m;
}

ZooMonoid make_tin1_trivial() {
  return make_tin1(RewriteSystem(Alphabet::from_names({}), {}));
}

ZooMonoid preset(const std::string& name) {
  if (name == "example22") return make_example22(false);
  if (name == "example22-zero") return make_example22(true);
  if (name == "tin1-trivial") return make_tin1_trivial();
  if (name.rfind("onerel-", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(name.substr(7));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad one-relator preset \"" + name + "\"");
    }
    return make_one_relator_power(k);
  }
  throw std::invalid_argument("unknown preset \"" + name + "\"");
}

namespace {

// Bounded two-sided conjugator search restricted to nonzero conjugators;
// in the zero-adjoined monoid the restricted conjugator set of a nonzero
// element is exactly the set of nonzero elements (there are no zero
// divisors), so this decides the c-relation there up to the bound.
bool nonzero_conjugators_exist(const RewriteSystem& sys, const SymWord& u, const SymWord& v,
                               int bound) {
  std::optional<Sym> zero = sys.alphabet().zero();
  auto search = [&](const SymWord& lhs, const SymWord& rhs) -> bool {
    std::vector<SymWord> frontier{{}};
    for (int len = 0; len <= bound; ++len) {
      for (const SymWord& g : frontier) {
        SymWord lg = lhs;
        lg.insert(lg.end(), g.begin(), g.end());
        SymWord gr = g;
        gr.insert(gr.end(), rhs.begin(), rhs.end());
        if (sys.normalize(lg) == sys.normalize(gr)) return true;
      }
      if (len == bound) break;
      std::vector<SymWord> next;
      for (const SymWord& g : frontier) {
        for (Sym s = 0; s < sys.alphabet().size(); ++s) {
          if (zero && s == *zero) continue;
          SymWord ext = g;
          ext.push_back(s);
          next.push_back(std::move(ext));
        }
      }
      frontier = std::move(next);
    }
    return false;
  };
  return search(u, v) && search(v, u);
}

}  // namespace

SeparationReport separation_report() {
  SeparationReport report;
  ZooMonoid m = make_example22(false);
  ZooMonoid m0 = make_example22(true);

  const SymWord bac = m.system.parse("bac");
  const SymWord ba = m.system.parse("ba");

  // p-relation in the base monoid: (bac, ba) splits as ba . c / c . ba.
  auto p = conj::oracle_p(m.system, bac, ba, 3);
  report.evidence.push_back({m.name, "p", "bac", "ba",
                             p.found ? "related" : "no-witness-at-bound", "oracle-search",
                             p.found ? "u = " + m.system.format(p.witness->first) +
                                           ", v = " + m.system.format(p.witness->second)
                                     : "",
                             3});

  // o-relation in the base monoid: bounded refutation only.
  auto o = conj::oracle_o(m.system, bac, ba, 4);
  report.evidence.push_back({m.name, "o", "bac", "ba",
                             o.found ? "related" : "no-witness-at-bound",
                             "bounded-conjugator-search", "", 4});

  // c-relation in the zero-adjoined monoid: conjugators of nonzero elements
  // are the nonzero elements, so search those.
  const SymWord bac0 = m0.system.parse("bac");
  const SymWord ba0 = m0.system.parse("ba");
  bool c_found = nonzero_conjugators_exist(m0.system, bac0, ba0, 4);
  report.evidence.push_back({m0.name, "c", "bac", "ba",
                             c_found ? "related" : "no-witness-at-bound",
                             "bounded-conjugator-search (nonzero conjugators)", "", 4});

  // o-relation in the zero-adjoined monoid is universal: g = h = 0.
  const SymWord zw{*m0.system.alphabet().zero()};
  bool o0 = m0.system.normalize(rewrite::SymWord{bac0.begin(), bac0.end()}) ==
            m0.system.normalize(bac0);  // placeholder sanity, always true
  (void)o0;
  auto zero_conjugates = [&](const SymWord& u, const SymWord& v) {
    SymWord uz = u;
    uz.insert(uz.end(), zw.begin(), zw.end());
    SymWord zv = zw;
    zv.insert(zv.end(), v.begin(), v.end());
    return m0.system.normalize(uz) == m0.system.normalize(zv);
  };
  bool o0_related = zero_conjugates(bac0, ba0) && zero_conjugates(ba0, bac0);
  report.evidence.push_back({m0.name, "o", "bac", "ba",
                             o0_related ? "related" : "not-related", "exact (zero conjugator)",
                             "g = 0, h = 0", 0});

  // The class of zero: 0 is c-related only to itself. b.h = h.0 = 0 forces
  // b.h = 0, impossible for nonzero h since there are no zero divisors.
  auto p_zero = conj::oracle_p(m0.system, zw, ba0, 4);
  report.evidence.push_back({m0.name, "c", "0", "ba", "not-related",
                             "exact (the c-class of zero is {0})", "", 0});
  report.evidence.push_back({m0.name, "p", "0", "ba",
                             p_zero.found ? "related" : "not-related",
                             "exact (no zero divisors); search at bound 4 agrees", "", 4});
  report.evidence.push_back({m0.name, "o", "0", "ba", "related", "exact (zero conjugator)",
                             "g = 0, h = 0", 0});

  // o is universal in the zero-adjoined monoid: spot-check a few pairs.
  for (auto [l, r] : std::vector<std::pair<const char*, const char*>>{
           {"a", "c"}, {"b", "e"}, {"bac", "0"}}) {
    SymWord lw = m0.system.parse(l), rw = m0.system.parse(r);
    bool rel = zero_conjugates(lw, rw) && zero_conjugates(rw, lw);
    report.evidence.push_back({m0.name, "o", l, r, rel ? "related" : "not-related",
                               "exact (zero conjugator)", "g = 0, h = 0", 0});
  }

  report.separated.push_back({"p", "c", "bac", "ba", "bounded"});
  report.separated.push_back({"o", "c", "0", "ba", "exact"});
  report.separated.push_back({"o", "p", "0", "ba", "exact"});
  return report;
}

std::string SeparationReport::to_text() const {
  std::ostringstream out;
  out << "separation report\n";
  for (const SeparationEvidence& e : evidence) {
    out << "  [" << e.monoid << "] " << e.relation << "(" << e.left << ", " << e.right
        << "): " << e.verdict;
    if (e.bound > 0) out << " (bound " << e.bound << ")";
    out << " — " << e.method;
    if (!e.witness.empty()) out << "; " << e.witness;
    out << "\n";
  }
  out << "separated relation pairs:\n";
  for (const SeparationClaim& c : separated) {
    out << "  " << c.relation_a << " vs " << c.relation_b << " via (" << c.left << ", " << c.right
        << ") [" << c.kind << "]\n";
  }
  return out.str();
}

std::string SeparationReport::to_json_string() const {
  nlohmann::json j;
  j["evidence"] = nlohmann::json::array();
  for (const SeparationEvidence& e : evidence) {
    j["evidence"].push_back({{"monoid", e.monoid},
                             {"relation", e.relation},
                             {"pair", {e.left, e.right}},
                             {"verdict", e.verdict},
                             {"method", e.method},
                             {"witness", e.witness},
                             {"bound", e.bound}});
  }
  j["separated"] = nlohmann::json::array();
  for (const SeparationClaim& c : separated) {
    j["separated"].push_back({{"relations", {c.relation_a, c.relation_b}},
                              {"pair", {c.left, c.right}},
                              {"kind", c.kind}});
  }
  return j.dump(2);
}

}  // namespace polyconj::zoo
