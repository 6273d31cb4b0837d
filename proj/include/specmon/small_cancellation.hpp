#ifndef SPECMON_SMALL_CANCELLATION_HPP_
#define SPECMON_SMALL_CANCELLATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "specmon/verdict.hpp"
#include "specmon/word.hpp"

namespace specmon {

  struct Rational {
    std::int64_t num = 2;
    std::int64_t den = 11;

    // "P/Q" with Q > 0 and P >= 0. Throws SyntaxError.
    static Rational parse(std::string_view text);
    std::string     to_string() const;

    friend bool operator==(Rational const&, Rational const&) = default;
  };

  struct CancellationWitness {
    GroupWord   first;
    GroupWord   second;
    std::size_t cancelled = 0;
  };

  struct KAlphaReport {
    Rational alpha;
    bool     passed = true;
    // Pair with the largest cancelled / |first|; empty for the empty set.
    std::optional<CancellationWitness> worst;
  };

  // Letters cancelled when freely reducing x * y.
  std::size_t cancellation(GroupWord const& x, GroupWord const& y);

  // Checks cancelled(R_i R_j) < alpha |R_i| over all ordered pairs with
  // R_j different from the inverse of R_i.
  KAlphaReport k_alpha_check(SymmetrizedSet const& m, Rational alpha);

  // Longest common prefix of two distinct members.
  std::size_t max_piece_length(SymmetrizedSet const& m);

  // max piece < min relator / 6.
  bool satisfies_c_prime_sixth(SymmetrizedSet const& m);

  enum class DehnRule { alpha, beta, gamma };

  std::string_view to_string(DehnRule r) noexcept;

  struct DehnStep {
    DehnRule    rule;
    std::size_t position;
    GroupWord   removed;
    GroupWord   inserted;
  };

  struct DehnState {
    GroupWord             word;
    std::vector<DehnStep> log;
  };

  // Precomputed replacement tables for one symmetrized set.
  class DehnRewriter {
   public:
    explicit DehnRewriter(SymmetrizedSet m);

    SymmetrizedSet const& relators() const noexcept {
      return m_;
    }

    DehnState reduce(GroupWord const& w) const;

    // Some alpha, beta or gamma step applies to `w`.
    bool can_step(GroupWord const& w) const;

   private:
    struct Table {
      // lhs -> shortest rhs
      std::unordered_map<GroupWord, GroupWord> rules;
      std::vector<std::size_t>                 lengths;  // descending
    };

    std::optional<DehnStep> find_step(GroupWord const& w,
                                      Table const&     t,
                                      DehnRule         rule) const;
    static void             finish(Table& t);

    SymmetrizedSet m_;
    Table          beta_;
    Table          gamma_;
  };

  DehnState dehn_reduce(GroupWord const& w, SymmetrizedSet const& m);

  using BigInt = boost::multiprecision::cpp_int;

  // 27 e^3 (d + 1)^(6e).
  BigInt certificate_bound(std::size_t e, std::size_t d);

  struct SearchLimits {
    std::size_t max_length = 16;
    std::size_t max_states = 100000;
    // Letters written while building successors; exceeding it is a state cut.
    std::size_t max_work = 50000000;
  };

  struct SearchResult {
    bool        reached_identity = false;
    bool        length_cut       = false;  // a successor exceeded max_length
    bool        state_cut        = false;  // stopped at max_states
    std::size_t states           = 0;
  };

  // Breadth-first search from free_reduce(start) over reduced words, moving by
  // inserting a member of `m` anywhere and freely reducing. Deleting a relator
  // occurrence is an insertion of its inverse.
  SearchResult search_identity(GroupWord const&      start,
                               SymmetrizedSet const& m,
                               SearchLimits          limits);

  struct IdentityOptions {
    BigInt      budget       = 1000000;
    std::size_t max_states   = 100000;
    bool        greendlinger = false;
  };

  // Throws NotK211 unless m is in K(2/11).
  Verdict decide_identity(GroupWord const&       w,
                          SymmetrizedSet const&  m,
                          IdentityOptions const& options);

  // As above without the class check; `rewriter` must be built from `m`.
  Verdict decide_identity_unchecked(GroupWord const&       w,
                                    DehnRewriter const&    rewriter,
                                    IdentityOptions const& options);

}  // namespace specmon

#endif  // SPECMON_SMALL_CANCELLATION_HPP_
