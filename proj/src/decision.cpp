#include "specmon/decision.hpp"

#include <algorithm>
#include <deque>

#include "specmon/errors.hpp"

namespace specmon {

  Decider::Decider(DistinguishResult result)
      : tuple_(std::move(result.tuple)), cwords_(std::move(result.cwords)) {
    if (!check_properties(tuple_, cwords_).all()) {
      throw NotDistinguished("tuple lacks property I, II or III");
    }
    std::set<std::size_t> lengths;
    for (std::size_t i = 0; i < cwords_.families.size(); ++i) {
      auto const& fam = cwords_.families[i];
      for (std::size_t j = 0; j < fam.size(); ++j) {
        lookup_.emplace(fam[j], CWordRef{i, j});
        lengths.insert(fam[j].size());
        for (std::size_t k = 1; k <= fam[j].size(); ++k) {
          prefixes_.insert(fam[j].subword(0, k));
          suffixes_.insert(fam[j].subword(fam[j].size() - k));
        }
      }
    }
    lengths_.assign(lengths.begin(), lengths.end());
  }

  std::optional<IntegralWord> Decider::integral_decompose(Word const& w) const {
    IntegralWord out{w, {}};
    std::size_t  pos = 0;
    while (pos < w.size()) {
      // No c-word is a prefix of another, so at most one length matches.
      bool matched = false;
      for (auto len : lengths_) {
        if (pos + len > w.size()) {
          break;
        }
        auto it = lookup_.find(w.subword(pos, len));
        if (it != lookup_.end()) {
          out.factors.push_back(it->second);
          pos += len;
          matched = true;
          break;
        }
      }
      if (!matched) {
        return std::nullopt;
      }
    }
    return out;
  }

  bool Decider::is_integral(Word const& w) const {
    return integral_decompose(w).has_value();
  }

  Word Decider::f_map(IntegralWord const& a) const {
    std::vector<std::size_t> indices;
    for (auto const& f : a.factors) {
      indices.push_back(f.family);
    }
    return index_word(indices);
  }

  Word Decider::f_map(Word const& w) const {
    auto a = integral_decompose(w);
    if (!a) {
      throw Error("word " + w.text() + " is not integral");
    }
    return f_map(*a);
  }

  namespace {
    void family_sequences(std::vector<std::size_t> const&        sizes,
                          std::size_t                            budget,
                          std::vector<std::size_t>&              prefix,
                          std::vector<std::vector<std::size_t>>& out) {
      out.push_back(prefix);
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] <= budget) {
          prefix.push_back(i);
          family_sequences(sizes, budget - sizes[i], prefix, out);
          prefix.pop_back();
        }
      }
    }
  }  // namespace

  std::vector<Word> const& Decider::equivalents(Word const& f,
                                                std::size_t length) {
    auto key = std::make_pair(f, length);
    if (auto it = equivalents_.find(key); it != equivalents_.end()) {
      return it->second;
    }
    std::vector<std::size_t> sizes;
    for (auto const& c : tuple_.cwords) {
      sizes.push_back(c.size());
    }
    std::vector<std::vector<std::size_t>> seqs;
    std::vector<std::size_t>              prefix;
    family_sequences(sizes, length, prefix, seqs);

    std::vector<Word> out;
    for (auto const& seq : seqs) {
      auto g = index_word(seq);
      auto v = tuple_.oracle->decide_equal(f, g);
      if (v == Verdict::unknown) {
        throw OracleInconclusive("group equality undecided for " + f.text()
                                 + " and " + g.text());
      }
      if (v != Verdict::yes) {
        continue;
      }
      // Every choice of family members along the sequence.
      std::vector<Word> products{Word()};
      for (auto i : seq) {
        std::vector<Word> grown;
        for (auto const& p : products) {
          for (auto const& c : cwords_.families[i]) {
            grown.push_back(p + c);
          }
        }
        products = std::move(grown);
      }
      out.insert(out.end(), products.begin(), products.end());
    }
    return equivalents_.emplace(std::move(key), std::move(out)).first->second;
  }

  TSet const& Decider::t_set(Word const& w) {
    if (auto it = t_sets_.find(w); it != t_sets_.end()) {
      return it->second;
    }
    TSet             seen{w};
    std::deque<Word> queue{w};
    auto             visit = [&](Word v) {
      if (seen.insert(v).second) {
        queue.push_back(std::move(v));
      }
    };
    while (!queue.empty()) {
      auto u = std::move(queue.front());
      queue.pop_front();
      for (auto const& a : tuple_.presentation.relations()) {
        for (auto pos = u.find(a); pos != std::string::npos;
             pos      = u.find(a, pos + 1)) {
          visit(u.subword(0, pos) + u.subword(pos + a.size()));
        }
      }
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j <= u.size(); ++j) {
          auto a = integral_decompose(u.subword(i, j - i));
          if (!a) {
            continue;
          }
          auto const left  = u.subword(0, i);
          auto const right = u.subword(j);
          for (auto const& b : equivalents(f_map(*a), j - i)) {
            visit(left + b + right);
          }
        }
      }
    }
    return t_sets_.emplace(w, std::move(seen)).first->second;
  }

  bool Decider::is_final(Word const& w) {
    auto const& t = t_set(w);
    return std::all_of(t.begin(), t.end(),
                       [&](Word const& v) { return v.size() == w.size(); });
  }

  Representation Decider::representation(Word const& w) {
    if (!is_final(w)) {
      throw NotFinal("word " + w.text() + " is not final");
    }
    // All c-word occurrences as [begin, end).
    std::vector<std::pair<std::size_t, std::size_t>> occ;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (auto len : lengths_) {
        if (i + len <= w.size() && lookup_.contains(w.subword(i, len))) {
          occ.emplace_back(i, i + len);
        }
      }
    }
    std::vector<bool> covered(w.size(), false);
    for (auto const& [b, e] : occ) {
      bool inside = std::any_of(occ.begin(), occ.end(), [&](auto const& o) {
        return o != std::make_pair(b, e) && o.first <= b && e <= o.second;
      });
      if (!inside) {
        std::fill(covered.begin() + b, covered.begin() + e, true);
      }
    }
    Representation rep;
    Word           segment;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (covered[i]) {
        segment += w.subword(i, 1);
      } else {
        rep.integral.push_back(std::move(segment));
        segment = Word();
        rep.stable += w.subword(i, 1);
      }
    }
    rep.integral.push_back(std::move(segment));
    return rep;
  }

  bool Decider::words_equal(Word const& x, Word const& y) {
    if (x == y) {
      return true;
    }
    auto const& tx = t_set(x);
    auto const& ty = t_set(y);
    auto const& small = tx.size() <= ty.size() ? tx : ty;
    auto const& large = tx.size() <= ty.size() ? ty : tx;
    return std::any_of(small.begin(), small.end(),
                       [&](Word const& v) { return large.contains(v); });
  }

  Word Decider::stripped(Word y, bool from_end) const {
    auto const& pieces = from_end ? prefixes_ : suffixes_;
    for (;;) {
      std::size_t cut = 0;
      for (std::size_t k = y.size(); k >= 1; --k) {
        auto part = from_end ? y.subword(y.size() - k) : y.subword(0, k);
        if (pieces.contains(part)) {
          cut = k;
          break;
        }
      }
      if (cut == 0) {
        return y;
      }
      y = from_end ? y.subword(0, y.size() - cut) : y.subword(cut);
    }
  }

  bool Decider::divides_left(Word const& x, Word const& y) {
    auto yk = stripped(*t_set(y).begin(), true);
    if (yk.empty()) {
      return true;
    }
    for (std::size_t k = 0; k <= x.size(); ++k) {
      if (words_equal(x.subword(0, k), yk)) {
        return true;
      }
    }
    return false;
  }

  bool Decider::divides_right(Word const& x, Word const& y) {
    auto yk = stripped(*t_set(y).begin(), false);
    if (yk.empty()) {
      return true;
    }
    for (std::size_t k = 0; k <= x.size(); ++k) {
      if (words_equal(x.subword(x.size() - k), yk)) {
        return true;
      }
    }
    return false;
  }

  bool Decider::is_invertible(Word const& x) {
    auto const& t = t_set(x);
    return std::any_of(t.begin(), t.end(),
                       [&](Word const& v) { return is_integral(v); });
  }

  Word Decider::mu(Word const& x) {
    for (auto const& v : t_set(x)) {
      if (auto a = integral_decompose(v)) {
        return f_map(*a);
      }
    }
    throw NotInvertible("word " + x.text() + " is not invertible");
  }

  Decider decide_presentation(SpecialPresentation const& p,
                              OracleBudget const&        budget) {
    return Decider(distinguish(make_tuple(p, budget), budget));
  }

}  // namespace specmon
