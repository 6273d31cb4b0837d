#include "specmon/small_cancellation.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_set>

#include "specmon/errors.hpp"

namespace specmon {

  Rational Rational::parse(std::string_view text) {
    auto read = [&](std::string_view s) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw SyntaxError(0, "bad rational '" + std::string(text) + "'");
      }
      return v;
    };
    Rational r;
    auto     slash = text.find('/');
    if (slash == std::string_view::npos) {
      r.num = read(text);
      r.den = 1;
    } else {
      r.num = read(text.substr(0, slash));
      r.den = read(text.substr(slash + 1));
    }
    if (r.den <= 0 || r.num < 0) {
      throw SyntaxError(0, "rational must be P/Q with P >= 0, Q > 0");
    }
    return r;
  }

  std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  std::size_t cancellation(GroupWord const& x, GroupWord const& y) {
    auto r = free_reduce(x + y);
    return (x.size() + y.size() - r.size()) / 2;
  }

  KAlphaReport k_alpha_check(SymmetrizedSet const& m, Rational alpha) {
    KAlphaReport report;
    report.alpha = alpha;
    for (auto const& ri : m.relators()) {
      auto const ri_inv = inverse(ri);
      for (auto const& rj : m.relators()) {
        if (rj == ri_inv) {
          continue;
        }
        auto c = cancellation(ri, rj);
        // c / |ri| against the current worst, cross-multiplied.
        if (!report.worst
            || c * report.worst->first.size()
                   > report.worst->cancelled * ri.size()) {
          report.worst = CancellationWitness{ri, rj, c};
        }
        auto lhs = static_cast<std::int64_t>(c) * alpha.den;
        auto rhs = alpha.num * static_cast<std::int64_t>(ri.size());
        if (lhs >= rhs) {
          report.passed = false;
        }
      }
    }
    return report;
  }

  std::size_t max_piece_length(SymmetrizedSet const& m) {
    std::size_t best = 0;
    auto        rs   = m.relators();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        auto const a = rs[i].code();
        auto const b = rs[j].code();
        auto mm = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
        best    = std::max(best, static_cast<std::size_t>(mm.first - a.begin()));
      }
    }
    return best;
  }

  bool satisfies_c_prime_sixth(SymmetrizedSet const& m) {
    return !m.empty() && 6 * max_piece_length(m) < m.min_length();
  }

  std::string_view to_string(DehnRule r) noexcept {
    switch (r) {
      case DehnRule::alpha: return "alpha";
      case DehnRule::beta: return "beta";
      default: return "gamma";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // DehnRewriter
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void offer(std::unordered_map<GroupWord, GroupWord>& rules,
               GroupWord                                 lhs,
               GroupWord                                 rhs) {
      auto it = rules.find(lhs);
      if (it == rules.end()) {
        rules.emplace(std::move(lhs), std::move(rhs));
      } else if (rhs.size() < it->second.size()
                 || (rhs.size() == it->second.size() && rhs < it->second)) {
        it->second = std::move(rhs);
      }
    }
  }  // namespace

  void DehnRewriter::finish(Table& t) {
    std::unordered_set<std::size_t> lengths;
    for (auto const& [lhs, rhs] : t.rules) {
      lengths.insert(lhs.size());
    }
    t.lengths.assign(lengths.begin(), lengths.end());
    std::sort(t.lengths.rbegin(), t.lengths.rend());
  }

  DehnRewriter::DehnRewriter(SymmetrizedSet m) : m_(std::move(m)) {
    auto rs = m_.relators();
    // beta: R = S T^-1 with |S| > |T|.
    for (auto const& r : rs) {
      for (std::size_t k = r.size() / 2 + 1; k <= r.size(); ++k) {
        offer(beta_.rules, r.subword(0, k), inverse(r.subword(k)));
      }
    }
    // gamma: R1 = S1 X T1^-1, R2 = X^-1 S2 T2^-1.
    for (auto const& r1 : rs) {
      for (std::size_t a = 1; a < r1.size(); ++a) {
        for (std::size_t x = 1; a + x <= r1.size(); ++x) {
          auto const x_inv  = inverse(r1.subword(a, x));
          auto const t1     = inverse(r1.subword(a + x));
          auto const s1     = r1.subword(0, a);
          for (auto const& r2 : rs) {
            if (r2.size() <= x || !r2.starts_with(x_inv)) {
              continue;
            }
            for (std::size_t b = 1; x + b <= r2.size(); ++b) {
              auto t2_len = r2.size() - x - b;
              if (a + b <= t1.size() + t2_len) {
                continue;
              }
              offer(gamma_.rules, s1 + r2.subword(x, b),
                    t1 + inverse(r2.subword(x + b)));
            }
          }
        }
      }
    }
    finish(beta_);
    finish(gamma_);
  }

  std::optional<DehnStep> DehnRewriter::find_step(GroupWord const& w,
                                                  Table const&     t,
                                                  DehnRule rule) const {
    auto const code = w.code();
    for (std::size_t pos = 0; pos < code.size(); ++pos) {
      for (auto len : t.lengths) {
        if (pos + len > code.size()) {
          continue;
        }
        auto lhs = GroupWord::from_code(std::string(code.substr(pos, len)));
        auto it  = t.rules.find(lhs);
        if (it != t.rules.end()) {
          return DehnStep{rule, pos, std::move(lhs), it->second};
        }
      }
    }
    return std::nullopt;
  }

  namespace {
    std::optional<DehnStep> find_cancellation(GroupWord const& w) {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == -w[i - 1]) {
          return DehnStep{DehnRule::alpha, i - 1, w.subword(i - 1, 2), {}};
        }
      }
      return std::nullopt;
    }
  }  // namespace

  bool DehnRewriter::can_step(GroupWord const& w) const {
    return find_cancellation(w) || find_step(w, beta_, DehnRule::beta)
           || find_step(w, gamma_, DehnRule::gamma);
  }

  DehnState DehnRewriter::reduce(GroupWord const& w) const {
    DehnState state{w, {}};
    for (;;) {
      auto step = find_cancellation(state.word);
      if (!step) {
        step = find_step(state.word, beta_, DehnRule::beta);
      }
      if (!step) {
        step = find_step(state.word, gamma_, DehnRule::gamma);
      }
      if (!step) {
        return state;
      }
      state.word = state.word.subword(0, step->position) + step->inserted
                   + state.word.subword(step->position + step->removed.size());
      state.log.push_back(std::move(*step));
    }
  }

  DehnState dehn_reduce(GroupWord const& w, SymmetrizedSet const& m) {
    return DehnRewriter(m).reduce(w);
  }

  BigInt certificate_bound(std::size_t e, std::size_t d) {
    BigInt const ee = e;
    return 27 * ee * ee * ee
           * boost::multiprecision::pow(BigInt(d + 1),
                                        static_cast<unsigned>(6 * e));
  }

  ////////////////////////////////////////////////////////////////////////
  // Breadth-first identity search
  ////////////////////////////////////////////////////////////////////////

  SearchResult search_identity(GroupWord const&      start,
                               SymmetrizedSet const& m,
                               SearchLimits          limits) {
    SearchResult result;
    auto         first = free_reduce(start);
    if (first.empty()) {
      result.reached_identity = true;
      result.states           = 1;
      return result;
    }
    if (first.size() > limits.max_length) {
      result.length_cut = true;
      return result;
    }
    std::unordered_set<GroupWord> seen{first};
    std::deque<GroupWord>         queue{first};
    std::size_t                   work = 0;
    while (!queue.empty()) {
      auto w = std::move(queue.front());
      queue.pop_front();
      ++result.states;
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        auto const left  = w.subword(0, pos);
        auto const right = w.subword(pos);
        for (auto const& r : m.relators()) {
          work += w.size() + r.size();
          if (work > limits.max_work) {
            result.state_cut = true;
            return result;
          }
          auto next = free_reduce(left + r + right);
          if (next.empty()) {
            result.reached_identity = true;
            return result;
          }
          if (next.size() > limits.max_length) {
            result.length_cut = true;
            continue;
          }
          if (seen.insert(next).second) {
            if (seen.size() > limits.max_states) {
              result.state_cut = true;
              return result;
            }
            queue.push_back(std::move(next));
          }
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity decision
  ////////////////////////////////////////////////////////////////////////

  Verdict decide_identity_unchecked(GroupWord const&       w,
                                    DehnRewriter const&    rewriter,
                                    IdentityOptions const& options) {
    auto const& m     = rewriter.relators();
    auto        state = rewriter.reduce(w);
    if (state.word.empty()) {
      return Verdict::yes;
    }
    if (options.greendlinger && satisfies_c_prime_sixth(m)) {
      return Verdict::no;
    }
    auto bound = certificate_bound(state.word.size(), m.max_length());
    if (bound > options.budget) {
      return Verdict::unknown;
    }
    auto found = search_identity(
        state.word, m,
        SearchLimits{static_cast<std::size_t>(bound), options.max_states});
    if (found.reached_identity) {
      return Verdict::yes;
    }
    return found.state_cut ? Verdict::unknown : Verdict::no;
  }

  Verdict decide_identity(GroupWord const&       w,
                          SymmetrizedSet const&  m,
                          IdentityOptions const& options) {
    auto report = k_alpha_check(m, Rational{2, 11});
    if (!report.passed) {
      throw NotK211("relator set is not in K(2/11)");
    }
    return decide_identity_unchecked(w, DehnRewriter(m), options);
  }

}  // namespace specmon
