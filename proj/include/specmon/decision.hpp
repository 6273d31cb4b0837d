#ifndef SPECMON_DECISION_HPP_
#define SPECMON_DECISION_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specmon/cwords.hpp"

namespace specmon {

  struct CWordRef {
    std::size_t family;
    std::size_t member;

    friend bool operator==(CWordRef const&, CWordRef const&) = default;
  };

  struct IntegralWord {
    Word                  word;
    std::vector<CWordRef> factors;
  };

  // Ordered shortlex so that begin() is a shortest member.
  struct ShortlexLess {
    bool operator()(Word const& x, Word const& y) const noexcept {
      return shortlex_less(x, y);
    }
  };

  using TSet = std::set<Word, ShortlexLess>;

  // A final word split as Z_0 y_1 Z_1 ... y_s Z_s with stable letters y_i
  // and main integral words Z_i (possibly empty).
  struct Representation {
    Word              stable;
    std::vector<Word> integral;
  };

  // Decision procedures over a distinguished tuple. Closures are cached, so
  // a Decider is not safe for concurrent use.
  class Decider {
   public:
    // Throws NotDistinguished if properties I, II, III do not all hold.
    explicit Decider(DistinguishResult result);

    Tuple const& tuple() const noexcept {
      return tuple_;
    }
    CWordSets const& cwords() const noexcept {
      return cwords_;
    }

    std::optional<IntegralWord> integral_decompose(Word const& w) const;
    bool                        is_integral(Word const& w) const;

    // Index word over the group generators; w must be integral.
    Word f_map(IntegralWord const& a) const;
    Word f_map(Word const& w) const;

    // Words reachable from w by relation deletions and replacements of an
    // integral subword by a group-equal integral word of no greater length.
    TSet const& t_set(Word const& w);

    bool           is_final(Word const& w);
    Representation representation(Word const& w);  // throws NotFinal

    bool words_equal(Word const& x, Word const& y);
    // x = y Z for some Z.
    bool divides_left(Word const& x, Word const& y);
    // x = Z y for some Z.
    bool divides_right(Word const& x, Word const& y);
    bool is_invertible(Word const& x);

    GroupPresentation const& maximal_subgroup() const noexcept {
      return tuple_.gamma;
    }
    // f(Z) for an integral Z in T(x); throws NotInvertible.
    Word mu(Word const& x);

    std::size_t alphabet_size() const noexcept {
      return static_cast<std::size_t>(tuple_.presentation.alphabet().size());
    }

   private:
    std::vector<Word> const& equivalents(Word const& f, std::size_t length);
    Word                     stripped(Word y, bool from_end) const;

    Tuple                                   tuple_;
    CWordSets                               cwords_;
    std::unordered_map<Word, CWordRef>      lookup_;
    std::vector<std::size_t>                lengths_;  // distinct c-word lengths
    std::set<Word>                          prefixes_;  // non-empty c-word beginnings
    std::set<Word>                          suffixes_;  // non-empty c-word endings
    std::unordered_map<Word, TSet>          t_sets_;
    std::map<std::pair<Word, std::size_t>, std::vector<Word>> equivalents_;
  };

  // make_tuple + distinguish + Decider.
  Decider decide_presentation(SpecialPresentation const& p,
                              OracleBudget const&        budget);

}  // namespace specmon

#endif  // SPECMON_DECISION_HPP_
