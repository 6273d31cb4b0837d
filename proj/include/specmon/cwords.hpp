#ifndef SPECMON_CWORDS_HPP_
#define SPECMON_CWORDS_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "specmon/oracle.hpp"
#include "specmon/overlap.hpp"
#include "specmon/presentation.hpp"

namespace specmon {

  struct Tuple {
    SpecialPresentation presentation;
    WordList            cwords;
    // factorizations[i]: relation i as 0-based indices into cwords.
    std::vector<std::vector<std::size_t>> factorizations;
    GroupPresentation                     gamma;
    OracleHandle                          oracle;
  };

  // Lexicographic: alpha first.
  struct TupleIndex {
    std::size_t alpha = 0;
    std::size_t beta  = 0;

    friend auto operator<=>(TupleIndex const&, TupleIndex const&) = default;
  };

  // families[i] holds the c-words generated from cwords[i], shortlex sorted.
  struct CWordSets {
    std::vector<std::vector<Word>> families;

    std::size_t total() const noexcept;
  };

  struct PropertyFlags {
    bool lengths_preserved = true;   // I
    bool families_disjoint = true;   // II
    bool no_overlaps       = true;   // III

    bool all() const noexcept {
      return lengths_preserved && families_disjoint && no_overlaps;
    }
  };

  // C-words from the splitting algorithm on the relations. Throws
  // OracleInconclusive if the derived group's generators cannot be certified
  // invertible.
  Tuple make_tuple(SpecialPresentation p, OracleBudget const& budget);

  // Same with an explicit C-word list; throws Error if the list is not a
  // reduced non-overlapping list every relation factors over.
  Tuple make_tuple(SpecialPresentation p,
                   WordList            cwords,
                   OracleBudget const& budget);

  TupleIndex tuple_index(Tuple const& t);

  // Throws OracleInconclusive if a required group equality is undecided.
  CWordSets generate_c_words(Tuple const& t);

  PropertyFlags check_properties(Tuple const& t, CWordSets const& cs);

  enum class MoveKind { shorter_cword, shared_cword, cross_overlap, self_overlap };

  std::string_view to_string(MoveKind k) noexcept;

  struct DistinguishMove {
    MoveKind    kind;
    std::size_t family;       // C-word index replaced or removed
    Word        replacement;  // word substituted for that generator
    TupleIndex  before;
    TupleIndex  after;
  };

  struct DistinguishResult {
    Tuple                        tuple;
    CWordSets                    cwords;
    std::vector<DistinguishMove> moves;
  };

  // Applies index-decreasing moves until properties I, II and III hold.
  DistinguishResult distinguish(Tuple t, OracleBudget const& budget);

}  // namespace specmon

#endif  // SPECMON_CWORDS_HPP_
