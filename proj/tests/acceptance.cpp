// Acceptance run. `acceptance [N ...]` checks the listed criteria (all by
// default) and prints one PASS/FAIL line each. Exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "specmon/decision.hpp"
#include "specmon/errors.hpp"
#include "specmon/overlap.hpp"
#include "specmon/small_cancellation.hpp"
#include "support/brute_force.hpp"

using namespace specmon;
namespace bf = specmon::testing;

namespace {

  // Wall-clock limits in seconds; 0 means none.
  constexpr double limit_delta       = 5.0;
  constexpr double limit_bicyclic    = 10.0;
  constexpr double limit_distinguish = 0.0;
  constexpr double limit_maxgroup    = 5.0;
  constexpr double limit_kalpha      = 1.0;
  constexpr double limit_dehn        = 30.0;

  constexpr std::size_t bicyclic_cap   = 12;
  constexpr std::size_t dehn_bfs_cap   = 16;
  constexpr std::size_t dehn_bfs_state = 3000;

  struct Outcome {
    bool        passed = true;
    std::string detail;
  };

  void fail(Outcome& o, std::string const& why) {
    if (o.passed) {
      o.detail = why;
    }
    o.passed = false;
  }

  SpecialPresentation load(char const* name) {
    std::ifstream      in(std::string(SPECMON_DATA_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return parse_presentation(s.str());
  }

  SpecialPresentation pres(int n, std::initializer_list<char const*> rels) {
    WordList ws;
    for (auto const* r : rels) {
      ws.push_back(Word::parse(r));
    }
    return SpecialPresentation(Alphabet(n), ws);
  }

  GroupWord gw(char const* text) {
    return GroupWord::parse(text);
  }

  // Split check independent of the library's overlap finder.
  bool brute_overlap(Word const& x, Word const& y) {
    for (std::size_t n = 1; n <= std::min(x.size(), y.size()); ++n) {
      if (x.subword(x.size() - n) == y.subword(0, n)
          && x.size() + y.size() > 2 * n) {
        return true;
      }
    }
    return false;
  }

  // Every factorization of w over `parts`, by dynamic programming.
  void factorizations(Word const& w, WordList const& parts, std::size_t pos,
                      std::vector<std::size_t>&              prefix,
                      std::vector<std::vector<std::size_t>>& out) {
    if (pos == w.size()) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto const& p = parts[i];
      if (pos + p.size() <= w.size() && w.subword(pos, p.size()) == p) {
        prefix.push_back(i);
        factorizations(w, parts, pos + p.size(), prefix, out);
        prefix.pop_back();
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 1
  ////////////////////////////////////////////////////////////////////////

  Outcome delta_suite() {
    Outcome                            o;
    std::mt19937                       rng(20240101);
    std::uniform_int_distribution<int> alpha(1, 4), count(1, 6);
    int                                lists = 0;
    std::size_t cross_steps = 0, self_steps = 0, cross_flat = 0, self_flat = 0;
    while (lists < 1000) {
      int      n = alpha(rng);
      WordList raw;
      for (int k = count(rng); k > 0; --k) {
        raw.push_back(bf::random_word(rng, n, 1, 6));
      }
      auto xs = reduce_list(raw);
      ++lists;

      DeltaTrace trace;
      auto       ys = delta(xs, &trace);
      if (!is_reduced_list(ys)) {
        fail(o, "output not reduced");
      }
      for (auto const& x : ys) {
        for (auto const& y : ys) {
          if (brute_overlap(x, y)) {
            fail(o, "output words " + x.text() + ", " + y.text() + " overlap");
          }
        }
      }
      std::vector<bool> used(ys.size(), false);
      for (auto const& x : xs) {
        std::vector<std::vector<std::size_t>> fs;
        std::vector<std::size_t>              prefix;
        factorizations(x, ys, 0, prefix, fs);
        if (fs.empty()) {
          fail(o, x.text() + " does not factor");
        }
        for (auto const& f : fs) {
          for (auto i : f) {
            used[i] = true;
          }
        }
      }
      for (std::size_t i = 0; i < ys.size(); ++i) {
        if (!used[i]) {
          fail(o, ys[i].text() + " is unused");
        }
      }
      auto prev = trace.omega_before;
      if (prev != omega(xs)) {
        fail(o, "trace starts at the wrong omega");
      }
      for (auto const& step : trace.steps) {
        bool self = step.first == step.second;
        (self ? self_steps : cross_steps) += 1;
        if (step.omega_after >= prev) {
          (self ? self_flat : cross_flat) += 1;
        }
        prev = step.omega_after;
      }
    }
    std::ostringstream s;
    s << lists << " lists, factorization properties "
      << (o.passed ? "hold" : "fail: " + o.detail) << "; omega failed to drop on "
      << cross_flat << "/" << cross_steps << " cross-pair steps and "
      << self_flat << "/" << self_steps << " self-overlap steps";
    if (cross_flat + self_flat > 0) {
      fail(o, "");
    }
    o.detail = s.str();
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2
  ////////////////////////////////////////////////////////////////////////

  Outcome bicyclic_suite() {
    Outcome o;
    auto    p = pres(2, {"ab"});
    auto    r = distinguish(make_tuple(p, {}), {});
    if (r.tuple.cwords != WordList{Word::parse("ab")}) {
      fail(o, "C-words differ from [ab]");
    }
    if (r.tuple.oracle->decide_equal(Word{1}, Word()) != Verdict::yes) {
      fail(o, "group is not trivial");
    }
    if (!check_properties(r.tuple, r.cwords).all()) {
      fail(o, "properties fail");
    }
    Decider d(std::move(r));

    // Equality uses the length cap directly. Divisibility asks for a
    // cofactor of at most that length, so its classes run |y| letters longer.
    auto words = bf::all_words(2, 5);
    std::unordered_map<Word, bf::MonoidClass> classes, wide;
    for (auto const& x : words) {
      classes.emplace(x, bf::MonoidClass(p, x, bicyclic_cap));
      wide.emplace(x, bf::MonoidClass(p, x, bicyclic_cap + 5));
    }
    bf::MonoidClass one(p, Word(), bicyclic_cap);

    std::size_t checks = 0, agree = 0;
    for (auto const& x : words) {
      auto const& cls = wide.at(x);
      for (auto const& y : words) {
        auto fits = [&](Word const& v) {
          return v.size() <= y.size() + bicyclic_cap;
        };
        bool bl = cls.any([&](Word const& v) { return fits(v) && v.starts_with(y); });
        bool br = cls.any([&](Word const& v) { return fits(v) && v.ends_with(y); });
        bool eq = classes.at(x).contains(y);
        checks += 3;
        agree += (d.words_equal(x, y) == eq) + (d.divides_left(x, y) == bl)
                 + (d.divides_right(x, y) == br);
      }
      bool inv = one.any([&](Word const& v) { return v.starts_with(x); })
                 && one.any([&](Word const& v) { return v.ends_with(x); });
      ++checks;
      agree += d.is_invertible(x) == inv;
    }
    if (agree != checks) {
      fail(o, std::to_string(checks - agree) + " disagreements");
    }
    o.detail = std::to_string(agree) + "/" + std::to_string(checks)
               + " verdicts agree" + (o.passed ? "" : "; " + o.detail);
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 3
  ////////////////////////////////////////////////////////////////////////

  // Definite BFS answer or none.
  std::optional<bool> bfs_verdict(SpecialPresentation const& p, Word const& x,
                                  Word const& y) {
    auto            cap = std::max(x.size(), y.size()) + 2 * p.ell();
    bf::MonoidClass cls(p, x, std::min<std::size_t>(cap, 12), 50000);
    if (cls.contains(y)) {
      return true;
    }
    if (!cls.truncated()) {
      return false;
    }
    return std::nullopt;
  }

  void distinguish_one(SpecialPresentation const& p, std::mt19937& rng,
                       Outcome& o, std::size_t& resolved,
                       std::size_t& disagreements) {
    auto r     = distinguish(make_tuple(p, {}), {});
    auto index = tuple_index(make_tuple(p, {}));
    for (auto const& m : r.moves) {
      if (!(m.after < m.before) || m.before != index) {
        fail(o, "index did not strictly decrease on " + p.to_string());
      }
      index = m.after;
    }
    if (!check_properties(r.tuple, r.cwords).all()) {
      fail(o, "result not distinguished for " + p.to_string());
    }
    Decider d(std::move(r));
    int     n = p.alphabet().size();
    for (int k = 0; k < 100; ++k) {
      auto x = bf::random_word(rng, n, 0, 6);
      auto y = bf::random_word(rng, n, 0, 6);
      if (auto v = bfs_verdict(p, x, y)) {
        ++resolved;
        if (*v != d.words_equal(x, y)) {
          ++disagreements;
          fail(o, p.to_string() + ": " + x.text() + " vs " + y.text());
        }
      }
    }
  }

  Outcome distinguish_suite() {
    Outcome      o;
    std::mt19937 rng(77);
    std::size_t  resolved = 0, disagreements = 0, skipped = 0;
    distinguish_one(pres(2, {"ab", "aabb"}), rng, o, resolved, disagreements);

    std::uniform_int_distribution<int> alpha(1, 3), count(1, 3);
    int                                done = 0;
    while (done < 50) {
      int      n = alpha(rng);
      WordList rels;
      for (int k = count(rng); k > 0; --k) {
        rels.push_back(bf::random_word(rng, n, 1, 4));
      }
      SpecialPresentation p(Alphabet(n), rels);
      try {
        distinguish_one(p, rng, o, resolved, disagreements);
        ++done;
      } catch (OracleInconclusive const&) {
        ++skipped;
      }
    }
    std::ostringstream s;
    s << "51 presentations (" << skipped << " skipped as undecided), "
      << resolved << " resolved pairs, " << disagreements << " disagreements";
    o.detail = s.str() + (o.passed ? "" : "; first: " + o.detail);
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 4
  ////////////////////////////////////////////////////////////////////////

  void mu_consistency(Decider& d, Outcome& o, std::size_t& pairs) {
    std::vector<Word> units;
    for (auto const& x : bf::all_words(static_cast<int>(d.alphabet_size()), 4)) {
      if (d.is_invertible(x)) {
        units.push_back(x);
      }
    }
    auto const& oracle = *d.tuple().oracle;
    for (auto const& x : units) {
      for (auto const& y : units) {
        ++pairs;
        auto same = oracle.decide_equal(d.mu(x), d.mu(y));
        if (same == Verdict::unknown
            || d.words_equal(x, y) != (same == Verdict::yes)) {
          fail(o, "mu inconsistent on " + x.text() + ", " + y.text());
        }
      }
    }
  }

  Outcome maxgroup_suite() {
    Outcome     o;
    std::size_t pairs = 0;

    auto bi = decide_presentation(load("bicyclic.txt"), {});
    auto const& g1 = bi.maximal_subgroup();
    if (g1.rank != 1
        || bi.tuple().oracle->decide_equal(Word{1}, Word()) != Verdict::yes) {
      fail(o, "bicyclic group is not trivial");
    }
    mu_consistency(bi, o, pairs);

    auto cy = decide_presentation(load("cyclic.txt"), {});
    auto const& s  = cy.tuple().oracle->simplified();
    auto const& oc = *cy.tuple().oracle;
    if (cy.maximal_subgroup().rank != 2 || s.rank != 1 || !s.relators.empty()) {
      fail(o, "<a,b | ab, ba> group is not free of rank one");
    }
    if (oc.decide_equal(Word{1, 2}, Word()) != Verdict::yes
        || oc.decide_equal(Word{2, 1}, Word()) != Verdict::yes) {
      fail(o, "d1 d2 = 1 not certified");
    }
    for (int k = 1; k <= 6; ++k) {
      std::vector<int> letters(k, 1);
      if (oc.decide_equal(Word(letters), Word()) != Verdict::no) {
        fail(o, "generator has finite order");
      }
    }
    mu_consistency(cy, o, pairs);
    if (o.passed) {
      o.detail = "trivial and infinite cyclic; " + std::to_string(pairs)
                 + " unit pairs consistent";
    }
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 5
  ////////////////////////////////////////////////////////////////////////

  Outcome kalpha_suite() {
    Outcome        o;
    Rational const a{2, 11};
    auto sym = [](char const* r) {
      std::vector<GroupWord> rs{GroupWord::parse(r)};
      return symmetrize(rs);
    };
    std::ostringstream s;

    auto surface = k_alpha_check(sym("abABcdCD"), a);
    s << "surface " << (surface.passed ? "passed" : "failed");
    if (!surface.passed || !surface.worst || surface.worst->cancelled != 1) {
      fail(o, "surface check");
    }

    auto cube = k_alpha_check(sym("aaa"), a);
    s << ", aaa " << (cube.passed ? "passed" : "failed");
    if (!cube.passed || !cube.worst || cube.worst->cancelled != 0) {
      fail(o, "aaa check");
    }

    auto square = k_alpha_check(sym("abab"), a);
    auto c      = cancellation(gw("abab"), gw("ABAB"));
    s << ", abab " << (square.passed ? "passed" : "failed")
      << " (expected failed; abab*ABAB cancels " << c
      << ", expected 4; only the inverse BABA cancels 4)";
    if (square.passed) {
      fail(o, "abab");
    }
    if (c != 4) {
      fail(o, "abab");
    }
    o.detail = s.str();
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 6
  ////////////////////////////////////////////////////////////////////////

  Outcome dehn_suite() {
    Outcome                o;
    std::vector<GroupWord> base{gw("abABcdCD")};
    auto                   m = symmetrize(base);
    DehnRewriter           rw(m);
    IdentityOptions        plain, gate;
    gate.greendlinger = true;
    std::mt19937 rng(606);

    if (!rw.reduce(base[0]).word.empty()
        || decide_identity(base[0], m, plain) != Verdict::yes) {
      fail(o, "surface relator not reduced to 1");
    }

    std::uniform_int_distribution<int>         factors(1, 3), conj_len(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
    int                                        products = 0;
    while (products < 50) {
      GroupWord w;
      for (int k = factors(rng); k > 0; --k) {
        auto c = bf::random_group_word(rng, 4, conj_len(rng));
        w += c + m.relators()[pick(rng)] + inverse(c);
      }
      w = free_reduce(w);
      if (w.empty()) {
        continue;
      }
      ++products;
      if (!rw.reduce(w).word.empty()
          || decide_identity_unchecked(w, rw, plain) != Verdict::yes) {
        fail(o, "product " + w.text() + " not reduced to 1");
      }
    }

    int nontrivial = 0, contradictions = 0, connected = 0;
    std::uniform_int_distribution<std::size_t> len(1, 6);
    while (nontrivial < 50) {
      auto w   = bf::random_group_word(rng, 4, len(rng));
      auto bfs = bf::bfs_group_identity(base, w, dehn_bfs_cap, dehn_bfs_state);
      auto v   = decide_identity_unchecked(w, rw, gate);
      if (bfs.reached) {
        ++connected;
        contradictions += v == Verdict::no;
        continue;
      }
      ++nontrivial;
      contradictions += v == Verdict::yes;
      if (rw.reduce(w).word.empty()) {
        fail(o, "Dehn fixpoint of " + w.text() + " is empty");
      }
      if (v != Verdict::no) {
        fail(o, "gate did not answer No for " + w.text());
      }
    }
    if (contradictions) {
      fail(o, std::to_string(contradictions) + " contradictions");
    }
    std::ostringstream s;
    s << products << " products reduce to 1; " << nontrivial
      << " unconnected words answered No; " << connected
      << " connected words skipped; " << contradictions << " contradictions";
    o.detail = s.str() + (o.passed ? "" : "; " + o.detail);
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 7
  ////////////////////////////////////////////////////////////////////////

  Outcome bound_suite() {
    Outcome o;
    struct Case {
      std::size_t e, d;
      char const* value;
    };
    std::ostringstream s;
    for (auto const& c : {Case{1, 3, "110592"}, Case{1, 8, "14348907"},
                          Case{2, 3, "3623878656"}}) {
      auto got = certificate_bound(c.e, c.d);
      s << "(" << c.e << "," << c.d << ")=" << got << " ";
      if (got != BigInt(c.value)) {
        fail(o, "bound mismatch");
      }
    }
    o.detail = s.str();
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // 8
  ////////////////////////////////////////////////////////////////////////

  Outcome cardinality_suite() {
    Outcome     o;
    std::size_t tsets = 0, families = 0, violations = 0;
    for (auto const* name : {"bicyclic.txt", "two_relations.txt", "cyclic.txt",
                             "order_two.txt", "chain.txt"}) {
      auto   p = load(name);
      double n = p.alphabet().size();
      auto   d = decide_presentation(p, {});
      auto const& cs = d.cwords();
      for (std::size_t i = 0; i < cs.families.size(); ++i) {
        ++families;
        auto bound = std::pow(n, double(d.tuple().cwords[i].size()));
        if (double(cs.families[i].size()) > bound) {
          ++violations;
          fail(o, std::string(name) + ": family too large");
        }
      }
      for (auto const& x : bf::all_words(p.alphabet().size(), 5)) {
        ++tsets;
        if (double(d.t_set(x).size()) > std::pow(n, double(x.size()))) {
          ++violations;
          fail(o, std::string(name) + ": t-set of " + x.text() + " too large");
        }
      }
    }
    std::ostringstream s;
    s << tsets << " t-sets, " << families << " families, " << violations
      << " violations";
    o.detail = s.str() + (o.passed ? "" : "; " + o.detail);
    return o;
  }

  struct Criterion {
    char const*              name;
    double                   limit;
    std::function<Outcome()> run;
  };

}  // namespace

int main(int argc, char** argv) {
  std::map<int, Criterion> const criteria{
      {1, {"delta on random lists", limit_delta, delta_suite}},
      {2, {"bicyclic monoid against search", limit_bicyclic, bicyclic_suite}},
      {3, {"distinguishing", limit_distinguish, distinguish_suite}},
      {4, {"maximal subgroup", limit_maxgroup, maxgroup_suite}},
      {5, {"small-cancellation class check", limit_kalpha, kalpha_suite}},
      {6, {"Dehn engine", limit_dehn, dehn_suite}},
      {7, {"certificate bound", 0.0, bound_suite}},
      {8, {"cardinality bounds", 0.0, cardinality_suite}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    int k = std::atoi(argv[i]);
    if (!criteria.contains(k)) {
      std::cerr << "unknown criterion " << argv[i] << "\n";
      return 64;
    }
    selected.push_back(k);
  }
  if (selected.empty()) {
    for (auto const& [k, c] : criteria) {
      selected.push_back(k);
    }
  }

  bool all = true;
  for (int k : selected) {
    auto const& c     = criteria.at(k);
    auto        start = std::chrono::steady_clock::now();
    Outcome     o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (c.limit > 0 && secs >= c.limit) {
      fail(o, "time limit exceeded");
    }
    all = all && o.passed;
    std::printf("criterion %d %s: %s (%.2fs%s) %s\n", k, c.name,
                o.passed ? "PASS" : "FAIL", secs,
                c.limit > 0 ? (" < " + std::to_string(int(c.limit)) + "s").c_str()
                            : "",
                o.detail.c_str());
  }
  return all ? 0 : 1;
}
