#include "specmon/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "specmon/errors.hpp"

namespace specmon {

  std::string_view to_string(Backend b) noexcept {
    switch (b) {
      case Backend::free_group: return "free-group";
      case Backend::dehn: return "dehn";
      default: return "bounded-bfs";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze elimination
  ////////////////////////////////////////////////////////////////////////

  namespace {
    GroupWord substitute(GroupWord const&              w,
                         std::vector<GroupWord> const& images) {
      GroupWord out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto const& img = images[std::abs(w[i]) - 1];
        out += w[i] > 0 ? img : inverse(img);
      }
      return free_reduce(out);
    }

    std::vector<GroupWord> tidy(std::vector<GroupWord> const& relators) {
      std::vector<GroupWord> out;
      std::set<GroupWord>    seen;
      for (auto const& r : relators) {
        auto c = cyclic_reduce(r);
        if (!c.empty() && seen.insert(c).second) {
          out.push_back(std::move(c));
        }
      }
      return out;
    }
  }  // namespace

  GroupWord SimplifiedGroup::rewrite(GroupWord const& w) const {
    return substitute(w, image);
  }

  SimplifiedGroup simplify(GroupPresentation const& g) {
    std::vector<GroupWord> images;
    for (int x = 1; x <= g.rank; ++x) {
      images.push_back(GroupWord{x});
    }
    std::vector<GroupWord> relators;
    for (auto const& r : g.relations) {
      relators.emplace_back(r);
    }
    relators = tidy(relators);

    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t k = 0; k < relators.size() && !progress; ++k) {
        auto const& r = relators[k];
        std::vector<std::size_t> count(g.rank + 1, 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
          ++count[std::abs(r[i])];
        }
        for (std::size_t pos = 0; pos < r.size(); ++pos) {
          int const x = std::abs(r[pos]);
          if (count[x] != 1) {
            continue;
          }
          // r ~ x^e V, so x = V^-1 when e = 1 and x = V when e = -1.
          auto rotated = rotate(r, pos);
          auto v       = rotated.subword(1);
          auto value   = r[pos] > 0 ? inverse(v) : v;

          std::vector<GroupWord> step(images.size());
          for (int y = 1; y <= g.rank; ++y) {
            step[y - 1] = y == x ? value : GroupWord{y};
          }
          for (auto& img : images) {
            img = substitute(img, step);
          }
          std::vector<GroupWord> rest;
          for (std::size_t j = 0; j < relators.size(); ++j) {
            if (j != k) {
              rest.push_back(substitute(relators[j], step));
            }
          }
          relators = tidy(rest);
          progress = true;
          break;
        }
      }
    }

    // Renumber the surviving generators.
    std::set<int> used;
    for (auto const& img : images) {
      for (std::size_t i = 0; i < img.size(); ++i) {
        used.insert(std::abs(img[i]));
      }
    }
    for (auto const& r : relators) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        used.insert(std::abs(r[i]));
      }
    }
    std::vector<GroupWord> renumber(g.rank);
    int                    next = 0;
    for (int y : used) {
      renumber[y - 1] = GroupWord{++next};
    }
    SimplifiedGroup out;
    out.rank = next;
    for (auto const& img : images) {
      out.image.push_back(substitute(img, renumber));
    }
    for (auto const& r : relators) {
      out.relators.push_back(substitute(r, renumber));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset enumeration (HLT with coincidence processing)
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class CosetTable {
     public:
      CosetTable(int rank, std::size_t limit)
          : columns_(2 * static_cast<std::size_t>(rank)), limit_(limit) {
        add_row();
      }

      static std::size_t column(int letter) {
        return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                          : 2 * static_cast<std::size_t>(-letter - 1) + 1;
      }

      bool run(std::vector<GroupWord> const& relators) {
        for (std::size_t c = 0; c < table_.size(); ++c) {
          for (auto const& r : relators) {
            if (!alive(c)) {
              break;
            }
            if (!scan_and_fill(static_cast<int>(c), r)) {
              return false;
            }
          }
          for (std::size_t x = 0; x < columns_ && alive(c); ++x) {
            if (table_[c][x] < 0 && !define(static_cast<int>(c), x)) {
              return false;
            }
          }
        }
        return true;
      }

      // Renumbers live cosets 0..k-1 in order.
      std::vector<std::vector<int>> compact() const {
        std::vector<int> index(table_.size(), -1);
        int              k = 0;
        for (std::size_t c = 0; c < table_.size(); ++c) {
          if (alive(c)) {
            index[c] = k++;
          }
        }
        std::vector<std::vector<int>> out;
        for (std::size_t c = 0; c < table_.size(); ++c) {
          if (!alive(c)) {
            continue;
          }
          std::vector<int> row(columns_);
          for (std::size_t x = 0; x < columns_; ++x) {
            row[x] = index[rep(table_[c][x])];
          }
          out.push_back(std::move(row));
        }
        return out;
      }

     private:
      bool alive(std::size_t c) const {
        return parent_[c] == static_cast<int>(c);
      }

      void add_row() {
        table_.emplace_back(columns_, -1);
        parent_.push_back(static_cast<int>(parent_.size()));
      }

      bool define(int c, std::size_t x) {
        if (table_.size() >= limit_) {
          return false;
        }
        add_row();
        int d         = static_cast<int>(table_.size()) - 1;
        table_[c][x]  = d;
        table_[d][x ^ 1] = c;
        return true;
      }

      int rep(int c) const {
        int r = c;
        while (parent_[r] != r) {
          r = parent_[r];
        }
        while (parent_[c] != r) {
          int next   = parent_[c];
          parent_[c] = r;
          c          = next;
        }
        return r;
      }

      void merge(int k, int l, std::vector<int>& queue) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        if (k > l) {
          std::swap(k, l);
        }
        parent_[l] = k;
        queue.push_back(l);
      }

      void coincidence(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        for (std::size_t i = 0; i < queue.size(); ++i) {
          int e = queue[i];
          for (std::size_t x = 0; x < columns_; ++x) {
            int f = table_[e][x];
            if (f < 0) {
              continue;
            }
            if (table_[f][x ^ 1] == e) {
              table_[f][x ^ 1] = -1;
            }
            int e1 = rep(e);
            int f1 = rep(f);
            if (table_[e1][x] >= 0) {
              merge(f1, table_[e1][x], queue);
            } else if (table_[f1][x ^ 1] >= 0) {
              merge(e1, table_[f1][x ^ 1], queue);
            } else {
              table_[e1][x]     = f1;
              table_[f1][x ^ 1] = e1;
            }
          }
        }
      }

      bool scan_and_fill(int c, GroupWord const& r) {
        int         f = c;
        int         b = c;
        std::size_t i = 0;
        std::size_t j = r.size();  // exclusive end
        for (;;) {
          while (i < j && table_[f][column(r[i])] >= 0) {
            f = table_[f][column(r[i])];
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j > i && table_[b][column(-r[j - 1])] >= 0) {
            b = table_[b][column(-r[j - 1])];
            --j;
          }
          if (j == i) {
            coincidence(f, b);
            return true;
          }
          if (j == i + 1) {
            auto x          = column(r[i]);
            table_[f][x]     = b;
            table_[b][x ^ 1] = f;
            return true;
          }
          if (!define(f, column(r[i]))) {
            return false;
          }
        }
      }

      std::size_t                   columns_;
      std::size_t                   limit_;
      std::vector<std::vector<int>> table_;
      mutable std::vector<int>      parent_;
    };
  }  // namespace

  std::optional<FiniteGroup> FiniteGroup::enumerate(
      int rank, std::vector<GroupWord> const& relators,
      std::size_t max_cosets) {
    if (rank == 0) {
      FiniteGroup g;
      g.table_.emplace_back();
      return g;
    }
    CosetTable table(rank, max_cosets);
    if (!table.run(relators)) {
      return std::nullopt;
    }
    FiniteGroup g;
    g.rank_  = rank;
    g.table_ = table.compact();
    return g;
  }

  bool FiniteGroup::is_identity(GroupWord const& w) const {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      c = table_[c][CosetTable::column(w[i])];
    }
    return c == 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::int64_t> exponents(GroupWord const& w, int rank) {
      std::vector<std::int64_t> v(rank, 0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        v[std::abs(w[i]) - 1] += w[i] > 0 ? 1 : -1;
      }
      return v;
    }
  }  // namespace

  AbelianLattice::AbelianLattice(int rank,
                                 std::vector<GroupWord> const& relators)
      : rank_(rank) {
    std::vector<std::vector<std::int64_t>> m;
    for (auto const& r : relators) {
      m.push_back(exponents(r, rank));
    }
    std::size_t top = 0;
    for (int col = 0; col < rank && top < m.size(); ++col) {
      // Euclid down the column until one row holds the gcd.
      for (;;) {
        std::size_t best = m.size();
        for (std::size_t i = top; i < m.size(); ++i) {
          if (m[i][col] != 0
              && (best == m.size()
                  || std::abs(m[i][col]) < std::abs(m[best][col]))) {
            best = i;
          }
        }
        if (best == m.size()) {
          break;
        }
        std::swap(m[top], m[best]);
        bool done = true;
        for (std::size_t i = top + 1; i < m.size(); ++i) {
          auto q = m[i][col] / m[top][col];
          for (int c = col; c < rank; ++c) {
            m[i][c] -= q * m[top][c];
          }
          done = done && m[i][col] == 0;
        }
        if (done) {
          rows_.push_back({static_cast<std::size_t>(col), m[top]});
          ++top;
          break;
        }
      }
    }
  }

  bool AbelianLattice::contains(GroupWord const& w) const {
    auto v = exponents(w, rank_);
    for (auto const& row : rows_) {
      auto p = row.entries[row.pivot];
      if (v[row.pivot] % p != 0) {
        return false;
      }
      auto q = v[row.pivot] / p;
      for (int c = static_cast<int>(row.pivot); c < rank_; ++c) {
        v[c] -= q * row.entries[c];
      }
    }
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupOracle
  ////////////////////////////////////////////////////////////////////////

  GroupOracle::GroupOracle(GroupPresentation target, OracleBudget budget)
      : target_(std::move(target)),
        budget_(std::move(budget)),
        simplified_(simplify(target_)),
        backend_(Backend::bounded_bfs) {
    if (simplified_.relators.empty()) {
      backend_ = Backend::free_group;
      return;
    }
    abelian_ = AbelianLattice(simplified_.rank, simplified_.relators);
    auto m   = symmetrize(simplified_.relators);
    if (k_alpha_check(m, Rational{2, 11}).passed) {
      backend_      = Backend::dehn;
      small_pieces_ = satisfies_c_prime_sixth(m);
      rewriter_.emplace(m);
    }
    symmetrized_ = std::move(m);
  }

  FiniteGroup const* GroupOracle::finite_group() const {
    std::call_once(finite_once_, [this] {
      finite_ = FiniteGroup::enumerate(
          simplified_.rank, simplified_.relators, budget_.max_states);
    });
    return finite_ ? &*finite_ : nullptr;
  }

  Verdict GroupOracle::decide_trivial(GroupWord const& w) const {
    if (backend_ != Backend::free_group && !abelian_.contains(w)) {
      return Verdict::no;
    }
    switch (backend_) {
      case Backend::free_group: return Verdict::no;
      case Backend::dehn: {
        if (rewriter_->reduce(w).word.empty()) {
          return Verdict::yes;
        }
        if (budget_.greendlinger && small_pieces_) {
          return Verdict::no;
        }
        if (auto const* fg = finite_group()) {
          return fg->is_identity(w) ? Verdict::yes : Verdict::no;
        }
        IdentityOptions options{budget_.budget, budget_.max_states, false};
        auto v = decide_identity_unchecked(w, *rewriter_, options);
        if (v != Verdict::unknown) {
          return v;
        }
        break;
      }
      case Backend::bounded_bfs: break;
    }
    if (auto const* fg = finite_group()) {
      return fg->is_identity(w) ? Verdict::yes : Verdict::no;
    }
    auto found = search_identity(
        w, *symmetrized_,
        SearchLimits{budget_.max_length, budget_.max_states});
    if (found.reached_identity) {
      return Verdict::yes;
    }
    if (!found.length_cut && !found.state_cut) {
      return Verdict::no;
    }
    return Verdict::unknown;
  }

  Verdict GroupOracle::decide_equal(GroupWord const& u,
                                    GroupWord const& v) const {
    if (u.max_generator() > target_.rank || v.max_generator() > target_.rank) {
      throw AlphabetMismatch("word uses a generator outside the target group");
    }
    auto w = cyclic_reduce(simplified_.rewrite(u + inverse(v)));
    if (w.empty()) {
      return Verdict::yes;
    }
    auto w_inv = inverse(w);
    auto key   = std::min(w, w_inv);
    {
      std::lock_guard lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
      }
    }
    auto verdict = decide_trivial(key);
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(std::move(key), verdict);
    return verdict;
  }

  OracleHandle select_oracle(GroupPresentation const& g, OracleBudget budget) {
    return std::make_shared<GroupOracle const>(g, std::move(budget));
  }

}  // namespace specmon
