#ifndef SPECMON_ORACLE_HPP_
#define SPECMON_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "specmon/presentation.hpp"
#include "specmon/small_cancellation.hpp"
#include "specmon/verdict.hpp"
#include "specmon/word.hpp"

namespace specmon {

  struct OracleBudget {
    std::size_t max_length   = 16;
    std::size_t max_states   = 100000;
    BigInt      budget       = 1000000;
    // Accept a nonempty Dehn fixpoint as "not equal" when the relators
    // satisfy C'(1/6).
    bool greendlinger = true;
  };

  enum class Backend { free_group, dehn, bounded_bfs };

  std::string_view to_string(Backend b) noexcept;

  // The target group after eliminating generators that occur exactly once in
  // some relator. image[g - 1] is the rewritten form of original generator g.
  struct SimplifiedGroup {
    int                    rank = 0;
    std::vector<GroupWord> relators;
    std::vector<GroupWord> image;

    GroupWord rewrite(GroupWord const& w) const;
  };

  SimplifiedGroup simplify(GroupPresentation const& g);

  // Multiplication table of a finite group found by coset enumeration over
  // the trivial subgroup. Coset 0 is the identity.
  class FiniteGroup {
   public:
    // nullopt if more than `max_cosets` cosets are needed.
    static std::optional<FiniteGroup> enumerate(
        int rank, std::vector<GroupWord> const& relators,
        std::size_t max_cosets);

    std::size_t order() const noexcept {
      return table_.size();
    }
    bool is_identity(GroupWord const& w) const;

   private:
    int                           rank_ = 0;
    std::vector<std::vector<int>> table_;
  };

  // Lattice spanned by the relators' exponent-sum vectors, in echelon form.
  // A word whose vector lies outside it is nontrivial in the group.
  class AbelianLattice {
   public:
    AbelianLattice() = default;
    AbelianLattice(int rank, std::vector<GroupWord> const& relators);
    bool contains(GroupWord const& w) const;

   private:
    struct Row {
      std::size_t               pivot;
      std::vector<std::int64_t> entries;
    };
    int              rank_ = 0;
    std::vector<Row> rows_;
  };

  class GroupOracle {
   public:
    GroupOracle(GroupPresentation target, OracleBudget budget);

    GroupOracle(GroupOracle const&)            = delete;
    GroupOracle& operator=(GroupOracle const&) = delete;

    GroupPresentation const& target() const noexcept {
      return target_;
    }
    SimplifiedGroup const& simplified() const noexcept {
      return simplified_;
    }
    Backend backend() const noexcept {
      return backend_;
    }
    OracleBudget const& budget() const noexcept {
      return budget_;
    }

    // Throws AlphabetMismatch for letters outside the target's generators.
    Verdict decide_equal(GroupWord const& u, GroupWord const& v) const;
    Verdict decide_equal(Word const& u, Word const& v) const {
      return decide_equal(GroupWord(u), GroupWord(v));
    }

    // Exact finite group if enumeration succeeds within max_states.
    FiniteGroup const* finite_group() const;

   private:
    Verdict decide_trivial(GroupWord const& w) const;

    GroupPresentation             target_;
    OracleBudget                  budget_;
    SimplifiedGroup               simplified_;
    Backend                       backend_;
    std::optional<SymmetrizedSet> symmetrized_;
    std::optional<DehnRewriter>   rewriter_;
    bool                          small_pieces_ = false;
    AbelianLattice                abelian_;

    mutable std::once_flag                          finite_once_;
    mutable std::optional<FiniteGroup>              finite_;
    mutable std::mutex                              memo_mutex_;
    mutable std::unordered_map<GroupWord, Verdict>  memo_;
  };

  using OracleHandle = std::shared_ptr<GroupOracle const>;

  OracleHandle select_oracle(GroupPresentation const& g, OracleBudget budget);

}  // namespace specmon

#endif  // SPECMON_ORACLE_HPP_
