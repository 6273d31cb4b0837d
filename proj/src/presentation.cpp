#include "specmon/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

#include "specmon/errors.hpp"

namespace specmon {

  SpecialPresentation::SpecialPresentation(Alphabet                   alphabet,
                                           WordList                   relations,
                                           std::optional<std::size_t> ell)
      : alphabet_(alphabet), relations_(std::move(relations)) {
    std::size_t longest = 0;
    for (auto const& r : relations_) {
      if (r.empty()) {
        throw Error("empty relation");
      }
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (!alphabet_.contains(r[i])) {
          throw UnknownGenerator(static_cast<char>('a' + r[i] - 1));
        }
      }
      longest = std::max(longest, r.size());
    }
    if (ell && longest > *ell) {
      throw RelationTooLong("relation of length " + std::to_string(longest)
                            + " exceeds ell = " + std::to_string(*ell));
    }
    ell_ = ell.value_or(longest);
  }

  std::size_t SpecialPresentation::total_length() const noexcept {
    std::size_t total = 0;
    for (auto const& r : relations_) {
      total += r.size();
    }
    return total;
  }

  std::string SpecialPresentation::to_string() const {
    std::string out = "<";
    for (int g = 1; g <= alphabet_.size(); ++g) {
      if (g > 1) {
        out += ",";
      }
      out += Word{g}.text();
    }
    out += " |";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      out += (i == 0 ? " " : ", ") + relations_[i].text();
    }
    return out + ">";
  }

  std::string GroupPresentation::to_string(char letter) const {
    auto name = [&](std::size_t g) {
      return std::string(1, letter) + std::to_string(g);
    };
    std::string out = "<";
    for (int g = 1; g <= rank; ++g) {
      out += (g > 1 ? "," : "") + name(g);
    }
    out += " |";
    for (std::size_t i = 0; i < relations.size(); ++i) {
      out += i == 0 ? " " : ", ";
      auto const& r = relations[i];
      for (std::size_t k = 0; k < r.size(); ++k) {
        out += (k > 0 ? " " : "") + name(r[k]);
      }
    }
    return out + ">";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string_view trim(std::string_view s) {
      auto const ws    = " \t\r";
      auto       first = s.find_first_not_of(ws);
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(ws);
      return s.substr(first, last - first + 1);
    }

    struct RawFile {
      Alphabet                                          alphabet;
      std::vector<std::pair<std::size_t, std::string>> relations;
      std::optional<std::size_t>                        ell;
    };

    RawFile read_raw(std::string_view text) {
      RawFile                    raw;
      bool                       have_generators = false;
      std::size_t                line_no         = 0;
      std::istringstream         in{std::string(text)};
      std::string                line;
      while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty() || s.front() == '#') {
          continue;
        }
        auto colon = s.find(':');
        if (colon == std::string_view::npos) {
          throw SyntaxError(line_no, "expected 'key: value'");
        }
        auto key   = trim(s.substr(0, colon));
        auto value = trim(s.substr(colon + 1));
        if (key == "generators") {
          if (have_generators) {
            throw SyntaxError(line_no, "duplicate generators line");
          }
          std::istringstream names{std::string(value)};
          std::string        name;
          int                n = 0;
          while (names >> name) {
            if (name.size() != 1 || name[0] < 'a' || name[0] > 'z') {
              throw SyntaxError(line_no, "generator names are single "
                                         "lowercase letters, got '"
                                             + name + "'");
            }
            if (name[0] != 'a' + n) {
              throw SyntaxError(line_no,
                                "generators must be a, b, c, ... in order");
            }
            ++n;
          }
          if (n == 0) {
            throw SyntaxError(line_no, "no generators declared");
          }
          raw.alphabet    = Alphabet(n);
          have_generators = true;
        } else if (key == "relation") {
          if (!have_generators) {
            throw SyntaxError(line_no, "relation before generators line");
          }
          if (value.empty() || value == "-") {
            throw SyntaxError(line_no, "empty relation");
          }
          raw.relations.emplace_back(line_no, std::string(value));
        } else if (key == "ell") {
          std::size_t v     = 0;
          auto [ptr, ec]    = std::from_chars(value.data(),
                                           value.data() + value.size(), v);
          if (ec != std::errc() || ptr != value.data() + value.size()) {
            throw SyntaxError(line_no, "ell must be a non-negative integer");
          }
          raw.ell = v;
        } else {
          throw SyntaxError(line_no,
                            "unknown key '" + std::string(key) + "'");
        }
      }
      if (!have_generators) {
        throw SyntaxError(0, "missing generators line");
      }
      return raw;
    }

    // Calls `f(id, inverted)` per letter; validates against the alphabet.
    template <typename F>
    void scan_letters(std::string_view text,
                      Alphabet const&  alphabet,
                      bool             allow_inverse,
                      std::size_t      line_no,
                      F&&              f) {
      for (char c : text) {
        bool lower = c >= 'a' && c <= 'z';
        bool upper = c >= 'A' && c <= 'Z';
        if (!lower && !(upper && allow_inverse)) {
          throw SyntaxError(line_no,
                            std::string("invalid letter '") + c + "'");
        }
        char base = lower ? c : static_cast<char>(c - 'A' + 'a');
        int  id   = base - 'a' + 1;
        if (!alphabet.contains(id)) {
          throw UnknownGenerator(base);
        }
        f(id, upper);
      }
    }

  }  // namespace

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    text = trim(text);
    if (text == "-") {
      return Word();
    }
    std::vector<generator_type> letters;
    scan_letters(text, alphabet, false, 0, [&](int id, bool) {
      letters.push_back(id);
    });
    return Word(letters);
  }

  GroupWord parse_group_word(std::string_view text, Alphabet const& alphabet) {
    text = trim(text);
    if (text == "-") {
      return GroupWord();
    }
    std::vector<int> letters;
    scan_letters(text, alphabet, true, 0, [&](int id, bool inv) {
      letters.push_back(inv ? -id : id);
    });
    return GroupWord(letters);
  }

  SpecialPresentation parse_presentation(std::string_view text) {
    auto     raw = read_raw(text);
    WordList relations;
    for (auto const& [line_no, value] : raw.relations) {
      std::vector<generator_type> letters;
      scan_letters(value, raw.alphabet, false, line_no, [&](int id, bool) {
        letters.push_back(id);
      });
      relations.emplace_back(letters);
    }
    return SpecialPresentation(raw.alphabet, std::move(relations), raw.ell);
  }

  GroupRelators parse_group_relators(std::string_view text) {
    auto          raw = read_raw(text);
    GroupRelators out{raw.alphabet, {}};
    for (auto const& [line_no, value] : raw.relations) {
      std::vector<int> letters;
      scan_letters(value, raw.alphabet, true, line_no, [&](int id, bool inv) {
        letters.push_back(inv ? -id : id);
      });
      out.relators.emplace_back(letters);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // B-words and the derived group
  ////////////////////////////////////////////////////////////////////////

  BWordList b_words(SpecialPresentation const& p) {
    BWordList out;
    out.words = delta(reduce_list(p.relations()));
    for (auto const& a : p.relations()) {
      auto f = factor_over(a, out.words);
      if (!f) {
        throw Error("relation " + a.text() + " does not factor over B-words");
      }
      out.factorizations.push_back(std::move(*f));
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> factor_over(Word const&      w,
                                                      BWordList const& bs) {
    return factor_over(w, std::span<Word const>(bs.words));
  }

  Word index_word(std::vector<std::size_t> const& indices) {
    std::vector<generator_type> letters;
    letters.reserve(indices.size());
    for (auto i : indices) {
      letters.push_back(static_cast<generator_type>(i + 1));
    }
    return Word(letters);
  }

  GroupPresentation derived_group(SpecialPresentation const&,
                                  BWordList const& bs) {
    GroupPresentation g;
    g.rank = static_cast<int>(bs.words.size());
    for (auto const& f : bs.factorizations) {
      g.relations.push_back(index_word(f));
    }
    return g;
  }

  GroupPresentation derived_group(SpecialPresentation const& p,
                                  WordList const&            factors) {
    GroupPresentation g;
    g.rank = static_cast<int>(factors.size());
    for (auto const& a : p.relations()) {
      auto f = factor_over(a, std::span<Word const>(factors));
      if (!f) {
        throw Error("relation " + a.text() + " does not factor");
      }
      g.relations.push_back(index_word(*f));
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Invertibility certificate
  ////////////////////////////////////////////////////////////////////////

  bool certify_generators_invertible(GroupPresentation const& g) {
    if (g.rank == 0) {
      return true;
    }
    std::unordered_set<Word> universe;
    for (auto const& r : g.relations) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t len = 1; i + len <= r.size(); ++len) {
          universe.insert(r.subword(i, len));
        }
      }
    }
    std::set<Word> known;
    for (auto const& r : g.relations) {
      known.insert(r);
    }
    auto add = [&](Word const& w, bool& changed) {
      if (!w.empty() && universe.contains(w) && known.insert(w).second) {
        changed = true;
      }
    };
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Word> snapshot(known.begin(), known.end());
      for (auto const& u : snapshot) {
        for (auto const& v : snapshot) {
          // u = XY, v = YZ.
          for (std::size_t y = 1; y <= std::min(u.size(), v.size()); ++y) {
            if (u.code().substr(u.size() - y) == v.code().substr(0, y)) {
              add(u.subword(0, u.size() - y), changed);
              add(v.subword(0, y), changed);
              add(v.subword(y), changed);
            }
          }
          // u = X, v = XY and u = Y, v = XY.
          if (v.size() > u.size()) {
            if (v.starts_with(u)) {
              add(v.subword(u.size()), changed);
            }
            if (v.ends_with(u)) {
              add(v.subword(0, v.size() - u.size()), changed);
            }
          }
          add(u + v, changed);
        }
      }
    }
    for (int x = 1; x <= g.rank; ++x) {
      if (!known.contains(Word{x})) {
        return false;
      }
    }
    return true;
  }

}  // namespace specmon
