#include "specmon/overlap.hpp"

#include <algorithm>
#include <unordered_set>

#include "specmon/errors.hpp"

namespace specmon {

  WordList reduce_list(std::span<Word const> xs) {
    WordList                 out;
    std::unordered_set<Word> seen;
    for (auto const& x : xs) {
      if (!x.empty() && seen.insert(x).second) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_reduced_list(std::span<Word const> xs) {
    std::unordered_set<Word> seen;
    for (auto const& x : xs) {
      if (x.empty() || !seen.insert(x).second) {
        return false;
      }
    }
    return true;
  }

  std::size_t omega(std::span<Word const> xs) {
    std::size_t total = 0;
    for (auto const& x : xs) {
      if (x.empty()) {
        throw EmptyWordInList("omega of a list containing the empty word");
      }
      total += x.size() - 1;
    }
    return total;
  }

  std::optional<OverlapSplit> find_overlap(Word const& x, Word const& y) {
    auto const cx = x.code();
    auto const cy = y.code();
    for (std::size_t n = std::min(cx.size(), cy.size()); n >= 1; --n) {
      if ((cx.size() - n) + (cy.size() - n) == 0) {
        continue;
      }
      if (cx.substr(cx.size() - n) == cy.substr(0, n)) {
        return OverlapSplit{x.subword(0, x.size() - n),
                            y.subword(0, n),
                            y.subword(n)};
      }
    }
    return std::nullopt;
  }

  bool overlaps(Word const& x, Word const& y) {
    return find_overlap(x, y).has_value();
  }

  bool has_overlap(std::span<Word const> xs) {
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        if (overlaps(x, y)) {
          return true;
        }
      }
    }
    return false;
  }

  WordList delta(std::span<Word const> xs, DeltaTrace* trace) {
    if (!is_reduced_list(xs)) {
      throw NotReduced("delta requires a list without empty words or repeats");
    }
    WordList list(xs.begin(), xs.end());
    if (trace != nullptr) {
      trace->omega_before = omega(list);
      trace->steps.clear();
    }
    for (;;) {
      std::optional<DeltaStep> step;
      for (std::size_t i = 0; i < list.size() && !step; ++i) {
        for (std::size_t j = 0; j < list.size() && !step; ++j) {
          if (auto split = find_overlap(list[i], list[j])) {
            step = DeltaStep{i, j, std::move(*split), 0};
          }
        }
      }
      if (!step) {
        return list;
      }
      WordList next;
      next.reserve(list.size() + 3);
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (k != step->first && k != step->second) {
          next.push_back(list[k]);
        }
      }
      next.push_back(step->split.m);
      next.push_back(step->split.n);
      next.push_back(step->split.l);
      list = reduce_list(next);
      if (trace != nullptr) {
        step->omega_after = omega(list);
        trace->steps.push_back(std::move(*step));
      }
    }
  }

  std::optional<std::vector<std::size_t>> factor_over(
      Word const& w, std::span<Word const> factors) {
    std::vector<std::size_t> out;
    auto const               code = w.code();
    std::size_t              pos  = 0;
    while (pos < code.size()) {
      auto rest = code.substr(pos);
      auto it   = std::find_if(factors.begin(), factors.end(), [&](Word const& f) {
        return !f.empty() && rest.starts_with(f.code());
      });
      if (it == factors.end()) {
        return std::nullopt;
      }
      out.push_back(static_cast<std::size_t>(it - factors.begin()));
      pos += it->size();
    }
    return out;
  }

}  // namespace specmon
