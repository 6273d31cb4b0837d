#include "specmon/cwords.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "specmon/errors.hpp"

namespace specmon {

  std::size_t CWordSets::total() const noexcept {
    std::size_t n = 0;
    for (auto const& f : families) {
      n += f.size();
    }
    return n;
  }

  std::string_view to_string(MoveKind k) noexcept {
    switch (k) {
      case MoveKind::shorter_cword: return "shorter-cword";
      case MoveKind::shared_cword: return "shared-cword";
      case MoveKind::cross_overlap: return "cross-overlap";
      default: return "self-overlap";
    }
  }

  namespace {
    Tuple assemble(SpecialPresentation p,
                   WordList            cwords,
                   OracleBudget const& budget) {
      Tuple t;
      t.gamma = derived_group(p, cwords);
      for (auto const& a : p.relations()) {
        t.factorizations.push_back(*factor_over(a, std::span<Word const>(cwords)));
      }
      if (!certify_generators_invertible(t.gamma)) {
        throw OracleInconclusive("cannot certify that the derived group "
                                 + t.gamma.to_string() + " is a group");
      }
      t.oracle       = select_oracle(t.gamma, budget);
      t.presentation = std::move(p);
      t.cwords       = std::move(cwords);
      return t;
    }

    std::uint64_t power_bound(std::size_t n, std::size_t k) {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t(1) << 62) / std::max<std::size_t>(n, 1)) {
          return ~std::uint64_t(0);
        }
        r *= n;
      }
      return r;
    }
  }  // namespace

  Tuple make_tuple(SpecialPresentation p, OracleBudget const& budget) {
    auto bs = b_words(p);
    return assemble(std::move(p), std::move(bs.words), budget);
  }

  Tuple make_tuple(SpecialPresentation p,
                   WordList            cwords,
                   OracleBudget const& budget) {
    if (!is_reduced_list(cwords) || has_overlap(cwords)) {
      throw Error("C-word list must be reduced and non-overlapping");
    }
    for (auto const& a : p.relations()) {
      if (!factor_over(a, std::span<Word const>(cwords))) {
        throw Error("relation " + a.text() + " does not factor over C-words");
      }
    }
    return assemble(std::move(p), std::move(cwords), budget);
  }

  TupleIndex tuple_index(Tuple const& t) {
    return {t.presentation.total_length(), omega(t.cwords)};
  }

  ////////////////////////////////////////////////////////////////////////
  // c-word generation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Index sequences over `cwords` whose total length is at most `budget`.
    void sequences_within(WordList const&                        cwords,
                          std::size_t                            budget,
                          std::vector<std::size_t>&              prefix,
                          std::vector<std::vector<std::size_t>>& out) {
      out.push_back(prefix);
      for (std::size_t i = 0; i < cwords.size(); ++i) {
        if (cwords[i].size() <= budget) {
          prefix.push_back(i);
          sequences_within(cwords, budget - cwords[i].size(), prefix, out);
          prefix.pop_back();
        }
      }
    }

    class MiddleReplacer {
     public:
      explicit MiddleReplacer(Tuple const& t) : t_(t) {}

      // Products of C-words equal in the group to `indices`, no longer
      // than `length`.
      std::vector<Word> const& replacements(
          std::vector<std::size_t> const& indices, std::size_t length) {
        auto key = std::make_pair(index_word(indices), length);
        if (auto it = memo_.find(key); it != memo_.end()) {
          return it->second;
        }
        std::vector<std::vector<std::size_t>> candidates;
        std::vector<std::size_t>              prefix;
        sequences_within(t_.cwords, length, prefix, candidates);
        std::vector<Word> out;
        for (auto const& seq : candidates) {
          auto v = t_.oracle->decide_equal(key.first, index_word(seq));
          if (v == Verdict::unknown) {
            throw OracleInconclusive("group equality undecided for "
                                     + key.first.text() + " and "
                                     + index_word(seq).text());
          }
          if (v == Verdict::yes) {
            Word w;
            for (auto i : seq) {
              w += t_.cwords[i];
            }
            out.push_back(std::move(w));
          }
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
      }

     private:
      Tuple const&                                         t_;
      std::map<std::pair<Word, std::size_t>, std::vector<Word>> memo_;
    };
  }  // namespace

  CWordSets generate_c_words(Tuple const& t) {
    CWordSets      out;
    MiddleReplacer replacer(t);
    auto const     n = static_cast<std::size_t>(t.presentation.alphabet().size());
    for (auto const& ci : t.cwords) {
      std::unordered_set<Word> family{ci};
      std::deque<Word>         queue{ci};
      while (!queue.empty()) {
        auto u = std::move(queue.front());
        queue.pop_front();
        for (std::size_t a = 1; a < u.size(); ++a) {
          for (std::size_t b = a; b < u.size(); ++b) {
            // u = g1 mid g2 with g1 = u[0, a), g2 = u[b, end).
            auto mid     = u.subword(a, b - a);
            auto indices = factor_over(mid, std::span<Word const>(t.cwords));
            if (!indices) {
              continue;
            }
            auto const g1 = u.subword(0, a);
            auto const g2 = u.subword(b);
            for (auto const& r : replacer.replacements(*indices, mid.size())) {
              auto v = g1 + r + g2;
              if (family.insert(v).second) {
                queue.push_back(std::move(v));
              }
            }
          }
        }
      }
      if (family.size() > power_bound(n, ci.size())) {
        throw std::logic_error("c-word family of " + ci.text()
                               + " exceeds n^|C|");
      }
      std::vector<Word> sorted(family.begin(), family.end());
      std::sort(sorted.begin(), sorted.end(), shortlex_less);
      out.families.push_back(std::move(sorted));
    }
    return out;
  }

  PropertyFlags check_properties(Tuple const& t, CWordSets const& cs) {
    PropertyFlags flags;
    std::unordered_map<Word, std::size_t> owner;
    std::vector<Word const*>              all;
    for (std::size_t i = 0; i < cs.families.size(); ++i) {
      for (auto const& w : cs.families[i]) {
        if (w.size() != t.cwords[i].size()) {
          flags.lengths_preserved = false;
        }
        auto [it, fresh] = owner.emplace(w, i);
        if (!fresh && it->second != i) {
          flags.families_disjoint = false;
        }
        all.push_back(&w);
      }
    }
    for (auto const* x : all) {
      for (auto const* y : all) {
        if (overlaps(*x, *y)) {
          flags.no_overlaps = false;
          return flags;
        }
      }
    }
    return flags;
  }

  ////////////////////////////////////////////////////////////////////////
  // Distinguishing moves
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Relations rebuilt from the factorizations with generator `g` sent to
    // `replacement`, then reduced as a list.
    WordList substituted_relations(Tuple const&  t,
                                   std::size_t   g,
                                   Word const&   replacement) {
      WordList rels;
      for (auto const& f : t.factorizations) {
        Word w;
        for (auto i : f) {
          w += i == g ? replacement : t.cwords[i];
        }
        rels.push_back(std::move(w));
      }
      return reduce_list(rels);
    }

    SpecialPresentation with_relations(Tuple const& t, WordList rels) {
      return SpecialPresentation(t.presentation.alphabet(), std::move(rels),
                                 t.presentation.ell());
    }

    // Lowest family, then shortest, then least word shorter than its C-word.
    std::optional<std::pair<std::size_t, Word>> find_short(
        Tuple const& t, CWordSets const& cs) {
      for (std::size_t i = 0; i < cs.families.size(); ++i) {
        for (auto const& w : cs.families[i]) {
          if (w.size() < t.cwords[i].size()) {
            return std::make_pair(i, w);
          }
        }
      }
      return std::nullopt;
    }

    std::optional<std::pair<std::size_t, std::size_t>> find_shared(
        CWordSets const& cs) {
      for (std::size_t i = 0; i < cs.families.size(); ++i) {
        std::unordered_set<Word> mine(cs.families[i].begin(),
                                      cs.families[i].end());
        for (std::size_t mu = 0; mu < cs.families.size(); ++mu) {
          if (mu == i) {
            continue;
          }
          for (auto const& w : cs.families[mu]) {
            if (mine.contains(w)) {
              return std::make_pair(i, mu);
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  DistinguishResult distinguish(Tuple t, OracleBudget const& budget) {
    std::vector<DistinguishMove> moves;
    for (;;) {
      auto cs    = generate_c_words(t);
      auto flags = check_properties(t, cs);
      if (flags.all()) {
        return {std::move(t), std::move(cs), std::move(moves)};
      }
      auto const      before = tuple_index(t);
      DistinguishMove move{};
      move.before = before;
      Tuple next;
      if (!flags.lengths_preserved) {
        auto [i, f]      = *find_short(t, cs);
        move.kind        = MoveKind::shorter_cword;
        move.family      = i;
        move.replacement = f;
        next = make_tuple(with_relations(t, substituted_relations(t, i, f)),
                          budget);
      } else if (!flags.families_disjoint) {
        auto [i, mu] = *find_shared(cs);
        if (cs.families[i] != cs.families[mu]) {
          throw std::logic_error("families sharing a word do not coincide");
        }
        move.kind        = MoveKind::shared_cword;
        move.family      = i;
        move.replacement = t.cwords[mu];
        WordList rest;
        for (std::size_t k = 0; k < t.cwords.size(); ++k) {
          if (k != i) {
            rest.push_back(t.cwords[k]);
          }
        }
        next = make_tuple(
            with_relations(t, substituted_relations(t, i, t.cwords[mu])),
            std::move(rest), budget);
      } else {
        std::optional<std::pair<std::size_t, Word>> pick;
        for (std::size_t p = 0; p < t.cwords.size() && !pick; ++p) {
          for (std::size_t mu = 0; mu < cs.families.size() && !pick; ++mu) {
            if (mu == p) {
              continue;
            }
            for (auto const& c : cs.families[mu]) {
              if (overlaps(t.cwords[p], c) || overlaps(c, t.cwords[p])) {
                pick = std::make_pair(mu, c);
                break;
              }
            }
          }
        }
        move.kind = MoveKind::cross_overlap;
        if (!pick) {
          move.kind = MoveKind::self_overlap;
          for (std::size_t p = 0; p < cs.families.size() && !pick; ++p) {
            for (auto const& c : cs.families[p]) {
              if (overlaps(c, c)) {
                pick = std::make_pair(p, c);
                break;
              }
            }
          }
        }
        if (!pick) {
          throw std::logic_error("property III fails but no overlapping "
                                 "C-word or self-overlapping c-word found");
        }
        auto const& [mu, c] = *pick;
        move.family         = mu;
        move.replacement    = c;
        WordList modified   = t.cwords;
        modified[mu]        = c;
        next                = make_tuple(
            with_relations(t, substituted_relations(t, mu, c)),
            delta(reduce_list(modified)), budget);
      }
      move.after = tuple_index(next);
      if (!(move.after < before)) {
        throw std::logic_error("distinguishing move did not decrease the index");
      }
      moves.push_back(std::move(move));
      t = std::move(next);
    }
  }

}  // namespace specmon
