#ifndef SPECMON_WORD_HPP_
#define SPECMON_WORD_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specmon {

  // Generators are numbered 1..n. Words store one generator per byte, so the
  // encoding caps an alphabet at 127 letters; text I/O uses a..z.
  using generator_type = int;

  inline constexpr generator_type max_generators = 127;

  class Word;
  class GroupWord;

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(int n);

    int size() const noexcept {
      return n_;
    }

    bool contains(generator_type g) const noexcept {
      return g >= 1 && g <= n_;
    }
    bool contains(Word const& w) const noexcept;
    bool contains(GroupWord const& w) const noexcept;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    int n_ = 0;
  };

  // A word over the positive alphabet. Equality is graphical equality.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<generator_type> letters);
    explicit Word(std::span<generator_type const> letters);

    // Lowercase text, `a` = generator 1. "-" and "" both denote the empty
    // word.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept {
      return code_.size();
    }
    bool empty() const noexcept {
      return code_.empty();
    }
    generator_type operator[](std::size_t i) const noexcept {
      return static_cast<unsigned char>(code_[i]);
    }

    // Raw byte encoding; two words are equal iff their codes are equal.
    std::string_view code() const noexcept {
      return code_;
    }
    static Word from_code(std::string code);

    std::string text() const;
    std::vector<generator_type> letters() const;

    Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
      return from_code(code_.substr(pos, len));
    }
    bool starts_with(Word const& p) const noexcept {
      return code_.starts_with(p.code_);
    }
    bool ends_with(Word const& s) const noexcept {
      return code_.ends_with(s.code_);
    }
    // Position of the first occurrence of `w` at or after `from`, or npos.
    std::size_t find(Word const& w, std::size_t from = 0) const noexcept {
      return code_.find(w.code_, from);
    }
    Word reversed() const;
    generator_type max_generator() const noexcept;

    Word& operator+=(Word const& other) {
      code_ += other.code_;
      return *this;
    }
    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }

    friend bool operator==(Word const&, Word const&)  = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::string code_;
  };

  // Shorter words first, then lexicographic.
  bool shortlex_less(Word const& x, Word const& y) noexcept;

  // A word over a_1^{±1}, ..., a_n^{±1}. Letters are signed generator ids.
  class GroupWord {
   public:
    GroupWord() = default;
    GroupWord(std::initializer_list<int> letters);
    explicit GroupWord(std::span<int const> letters);
    explicit GroupWord(Word const& positive);

    // Lowercase = generator, uppercase = its inverse, "-" = empty word.
    static GroupWord parse(std::string_view text);
    static GroupWord from_code(std::string code);

    std::size_t size() const noexcept {
      return code_.size();
    }
    bool empty() const noexcept {
      return code_.empty();
    }
    int operator[](std::size_t i) const noexcept {
      return static_cast<signed char>(code_[i]);
    }
    std::string_view code() const noexcept {
      return code_;
    }
    std::string text() const;
    std::vector<int> letters() const;

    GroupWord subword(std::size_t pos,
                      std::size_t len = std::string::npos) const {
      return from_code(code_.substr(pos, len));
    }
    bool starts_with(GroupWord const& p) const noexcept {
      return code_.starts_with(p.code_);
    }
    std::size_t find(GroupWord const& w, std::size_t from = 0) const noexcept {
      return code_.find(w.code_, from);
    }
    generator_type max_generator() const noexcept;

    GroupWord& operator+=(GroupWord const& other) {
      code_ += other.code_;
      return *this;
    }
    friend GroupWord operator+(GroupWord lhs, GroupWord const& rhs) {
      lhs += rhs;
      return lhs;
    }

    friend bool operator==(GroupWord const&, GroupWord const&)  = default;
    friend auto operator<=>(GroupWord const&, GroupWord const&) = default;

   private:
    std::string code_;
  };

  bool is_reduced(GroupWord const& w) noexcept;
  bool is_cyclically_reduced(GroupWord const& w) noexcept;

  // The unique reduced word freely equal to `w`.
  GroupWord free_reduce(GroupWord const& w);
  // Letters reversed, signs flipped.
  GroupWord inverse(GroupWord const& w);
  // Free reduction followed by stripping conjugating letters x ... x^-1.
  GroupWord cyclic_reduce(GroupWord const& w);
  // The cyclic permutation starting at position `k`.
  GroupWord rotate(GroupWord const& w, std::size_t k);

  // Cyclically reduced relators closed under inversion and cyclic
  // permutation. Members are stored sorted and without repetition.
  class SymmetrizedSet {
   public:
    SymmetrizedSet() = default;

    std::span<GroupWord const> relators() const noexcept {
      return relators_;
    }
    std::size_t size() const noexcept {
      return relators_.size();
    }
    bool empty() const noexcept {
      return relators_.empty();
    }
    bool contains(GroupWord const& w) const;
    // Maximum relator length (d); 0 for the empty set.
    std::size_t max_length() const noexcept;
    std::size_t min_length() const noexcept;

    friend bool operator==(SymmetrizedSet const&, SymmetrizedSet const&)
        = default;

   private:
    friend SymmetrizedSet symmetrize(std::span<GroupWord const>);
    std::vector<GroupWord> relators_;
  };

  // Throws EmptyRelator if some input is freely trivial.
  SymmetrizedSet symmetrize(std::span<GroupWord const> relators);

}  // namespace specmon

template <>
struct std::hash<specmon::Word> {
  std::size_t operator()(specmon::Word const& w) const noexcept {
    return std::hash<std::string_view>{}(w.code());
  }
};

template <>
struct std::hash<specmon::GroupWord> {
  std::size_t operator()(specmon::GroupWord const& w) const noexcept {
    return std::hash<std::string_view>{}(w.code());
  }
};

#endif  // SPECMON_WORD_HPP_
