#include "specmon/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "specmon/errors.hpp"

namespace specmon {

  namespace {
    std::string letter_text(int letter) {
      int g = std::abs(letter);
      if (g <= 26) {
        char base = letter > 0 ? 'a' : 'A';
        return std::string(1, static_cast<char>(base + g - 1));
      }
      return (letter > 0 ? "[" : "[-") + std::to_string(g) + "]";
    }

    void check_generator(int g) {
      if (g < 1 || g > max_generators) {
        throw Error("generator id " + std::to_string(g) + " out of range");
      }
    }
  }  // namespace

  Alphabet::Alphabet(int n) : n_(n) {
    if (n < 1 || n > max_generators) {
      throw Error("alphabet size must be in 1.."
                  + std::to_string(max_generators));
    }
  }

  bool Alphabet::contains(Word const& w) const noexcept {
    return w.max_generator() <= n_;
  }

  bool Alphabet::contains(GroupWord const& w) const noexcept {
    return w.max_generator() <= n_;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::initializer_list<generator_type> letters)
      : Word(std::span<generator_type const>(letters.begin(), letters.size())) {
  }

  Word::Word(std::span<generator_type const> letters) {
    code_.reserve(letters.size());
    for (auto g : letters) {
      check_generator(g);
      code_.push_back(static_cast<char>(g));
    }
  }

  Word Word::from_code(std::string code) {
    Word w;
    w.code_ = std::move(code);
    return w;
  }

  Word Word::parse(std::string_view text) {
    if (text == "-") {
      return Word();
    }
    std::string code;
    code.reserve(text.size());
    for (char c : text) {
      if (c < 'a' || c > 'z') {
        throw SyntaxError(0, std::string("invalid letter '") + c + "' in word");
      }
      code.push_back(static_cast<char>(c - 'a' + 1));
    }
    return from_code(std::move(code));
  }

  std::string Word::text() const {
    if (empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      out += letter_text((*this)[i]);
    }
    return out;
  }

  std::vector<generator_type> Word::letters() const {
    std::vector<generator_type> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out.push_back((*this)[i]);
    }
    return out;
  }

  Word Word::reversed() const {
    return from_code(std::string(code_.rbegin(), code_.rend()));
  }

  generator_type Word::max_generator() const noexcept {
    generator_type m = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      m = std::max(m, (*this)[i]);
    }
    return m;
  }

  bool shortlex_less(Word const& x, Word const& y) noexcept {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    return x < y;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupWord
  ////////////////////////////////////////////////////////////////////////

  GroupWord::GroupWord(std::initializer_list<int> letters)
      : GroupWord(std::span<int const>(letters.begin(), letters.size())) {}

  GroupWord::GroupWord(std::span<int const> letters) {
    code_.reserve(letters.size());
    for (auto x : letters) {
      check_generator(std::abs(x));
      code_.push_back(static_cast<char>(x));
    }
  }

  GroupWord::GroupWord(Word const& positive)
      : code_(positive.code().begin(), positive.code().end()) {}

  GroupWord GroupWord::from_code(std::string code) {
    GroupWord w;
    w.code_ = std::move(code);
    return w;
  }

  GroupWord GroupWord::parse(std::string_view text) {
    if (text == "-") {
      return GroupWord();
    }
    std::string code;
    code.reserve(text.size());
    for (char c : text) {
      if (c >= 'a' && c <= 'z') {
        code.push_back(static_cast<char>(c - 'a' + 1));
      } else if (c >= 'A' && c <= 'Z') {
        code.push_back(static_cast<char>(-(c - 'A' + 1)));
      } else {
        throw SyntaxError(0, std::string("invalid letter '") + c + "' in word");
      }
    }
    return from_code(std::move(code));
  }

  std::string GroupWord::text() const {
    if (empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      out += letter_text((*this)[i]);
    }
    return out;
  }

  std::vector<int> GroupWord::letters() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out.push_back((*this)[i]);
    }
    return out;
  }

  generator_type GroupWord::max_generator() const noexcept {
    generator_type m = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      m = std::max(m, std::abs((*this)[i]));
    }
    return m;
  }

  bool is_reduced(GroupWord const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == -w[i - 1]) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(GroupWord const& w) noexcept {
    return is_reduced(w) && (w.size() < 2 || w[0] != -w[w.size() - 1]);
  }

  GroupWord free_reduce(GroupWord const& w) {
    // Single left-to-right stack pass.
    std::string out;
    out.reserve(w.size());
    for (char c : w.code()) {
      if (!out.empty()
          && static_cast<signed char>(out.back())
                 == -static_cast<signed char>(c)) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    return GroupWord::from_code(std::move(out));
  }

  GroupWord inverse(GroupWord const& w) {
    std::string out(w.code().rbegin(), w.code().rend());
    for (char& c : out) {
      c = static_cast<char>(-static_cast<signed char>(c));
    }
    return GroupWord::from_code(std::move(out));
  }

  GroupWord cyclic_reduce(GroupWord const& w) {
    auto        r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
      ++i;
      --j;
    }
    return r.subword(i, j - i);
  }

  GroupWord rotate(GroupWord const& w, std::size_t k) {
    if (w.empty()) {
      return w;
    }
    k %= w.size();
    return w.subword(k) + w.subword(0, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // SymmetrizedSet
  ////////////////////////////////////////////////////////////////////////

  bool SymmetrizedSet::contains(GroupWord const& w) const {
    return std::binary_search(relators_.begin(), relators_.end(), w);
  }

  std::size_t SymmetrizedSet::max_length() const noexcept {
    std::size_t d = 0;
    for (auto const& r : relators_) {
      d = std::max(d, r.size());
    }
    return d;
  }

  std::size_t SymmetrizedSet::min_length() const noexcept {
    if (relators_.empty()) {
      return 0;
    }
    std::size_t m = relators_.front().size();
    for (auto const& r : relators_) {
      m = std::min(m, r.size());
    }
    return m;
  }

  SymmetrizedSet symmetrize(std::span<GroupWord const> relators) {
    std::set<GroupWord> members;
    for (auto const& input : relators) {
      auto r = cyclic_reduce(input);
      if (r.empty()) {
        throw EmptyRelator("relator " + input.text()
                           + " is freely equal to the empty word");
      }
      auto r_inv = inverse(r);
      for (std::size_t k = 0; k < r.size(); ++k) {
        members.insert(rotate(r, k));
        members.insert(rotate(r_inv, k));
      }
    }
    SymmetrizedSet result;
    result.relators_.assign(members.begin(), members.end());
    return result;
  }

}  // namespace specmon
