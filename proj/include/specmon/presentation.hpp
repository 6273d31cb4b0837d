#ifndef SPECMON_PRESENTATION_HPP_
#define SPECMON_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specmon/overlap.hpp"
#include "specmon/word.hpp"

namespace specmon {

  // A monoid given by relations A_i = 1, each |A_i| <= ell.
  class SpecialPresentation {
   public:
    SpecialPresentation() = default;
    // Throws UnknownGenerator for letters outside the alphabet,
    // RelationTooLong if an explicit `ell` is exceeded and Error for an
    // empty relation. `ell` defaults to the longest relation.
    SpecialPresentation(Alphabet                   alphabet,
                        WordList                   relations,
                        std::optional<std::size_t> ell = std::nullopt);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    WordList const& relations() const noexcept {
      return relations_;
    }
    std::size_t ell() const noexcept {
      return ell_;
    }
    // Sum of relation lengths.
    std::size_t total_length() const noexcept;

    std::string to_string() const;

    friend bool operator==(SpecialPresentation const&,
                           SpecialPresentation const&)
        = default;

   private:
    Alphabet    alphabet_;
    WordList    relations_;
    std::size_t ell_ = 0;
  };

  // Group generated by `rank` letters with positive relators M_i = 1.
  struct GroupPresentation {
    int      rank = 0;
    WordList relations;

    std::string to_string(char letter = 'g') const;

    friend bool operator==(GroupPresentation const&, GroupPresentation const&)
        = default;
  };

  struct BWordList {
    WordList words;
    // factorizations[i] lists 0-based indices into `words` for relation i.
    std::vector<std::vector<std::size_t>> factorizations;
  };

  // Parses the text format:
  //   generators: a b c
  //   relation: abc
  //   ell: 4            (optional)
  // Generators must be the first n lowercase letters in order.
  SpecialPresentation parse_presentation(std::string_view text);

  struct GroupRelators {
    Alphabet               alphabet;
    std::vector<GroupWord> relators;
  };

  // Same format; relations may use uppercase letters for inverses.
  GroupRelators parse_group_relators(std::string_view text);

  // Parses a single word against `alphabet`, mapping bad letters to
  // UnknownGenerator. "-" is the empty word.
  Word      parse_word(std::string_view text, Alphabet const& alphabet);
  GroupWord parse_group_word(std::string_view text, Alphabet const& alphabet);

  BWordList b_words(SpecialPresentation const& p);

  // Factorization of `w` as a product of members of `bs`, as indices.
  std::optional<std::vector<std::size_t>> factor_over(Word const&      w,
                                                      BWordList const& bs);

  // One generator per B-word; relation i is the index word of A_i.
  GroupPresentation derived_group(SpecialPresentation const& p,
                                  BWordList const&           bs);

  // Same, for an arbitrary word list the relations factor over. Throws Error
  // if some relation does not factor.
  GroupPresentation derived_group(SpecialPresentation const& p,
                                  WordList const&            factors);

  // Index word for a list of 0-based factor indices (letter = index + 1).
  Word index_word(std::vector<std::size_t> const& indices);

  // True if every generator is shown two-sided invertible in the monoid
  // <g | M_i = 1> by closing the relators under the rules
  //   XY, YZ invertible, Y != 1  =>  X, Y, Z invertible
  //   X, XY invertible           =>  Y invertible   (and mirrored)
  // restricted to subwords of relators.
  bool certify_generators_invertible(GroupPresentation const& g);

}  // namespace specmon

#endif  // SPECMON_PRESENTATION_HPP_
