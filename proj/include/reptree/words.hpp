// words.hpp
//
// Exact repetition analysis of finite words: smallest periods, factor
// exponents and freeness checks against a rational bound.
//
// A factor's exponent is |factor| / (smallest period of the factor).  A
// repetition pe with a non-minimal period always has the same support as a
// repetition with the minimal period and a larger exponent, so checking the
// minimal period of every factor covers all repetitions.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace reptree {

using Letter = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Positive fraction kept in lowest terms.  Comparison is exact.
class Rational {
 public:
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// "alpha-free" (strict == false) forbids exponents >= bound;
/// "alpha+-free" (strict == true) forbids exponents > bound.
struct FreenessSpec {
  Rational bound;
  bool strict;

  FreenessSpec(Rational bound, bool strict);

  /// True when a factor of the given length and smallest period is forbidden.
  bool forbids(std::size_t length, std::size_t period) const {
    const auto lhs = static_cast<__int128>(length) * bound.den();
    const auto rhs = static_cast<__int128>(bound.num()) * period;
    return strict ? lhs > rhs : lhs >= rhs;
  }

  /// "a/b" or "a/b+".
  std::string str() const;

  friend bool operator==(const FreenessSpec&, const FreenessSpec&) = default;
};

class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, std::uint32_t alphabet_size);

  /// Alphabet size taken as max letter + 1 (1 for the empty word).
  static Word from_letters(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::span<const Letter> view() const { return letters_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  std::uint32_t alphabet_size_ = 1;
};

struct RepetitionWitness {
  std::size_t start;
  std::size_t total_length;
  std::size_t period;
  Rational exponent;

  friend bool operator==(const RepetitionWitness&, const RepetitionWitness&) = default;
};

/// Border table grown one letter at a time.  Popping restores the previous
/// state exactly, which is what a depth-first walk over paths needs.
class IncrementalPeriods {
 public:
  /// Appends a letter and returns the smallest period of the whole buffer.
  std::size_t push(Letter c);
  void pop() {
    letters_.pop_back();
    border_.pop_back();
  }
  void clear() {
    letters_.clear();
    border_.clear();
  }
  std::size_t size() const { return letters_.size(); }
  std::size_t period() const { return letters_.size() - border_.back(); }
  std::span<const Letter> letters() const { return letters_; }

 private:
  std::vector<Letter> letters_;
  std::vector<std::size_t> border_;
};

std::size_t smallest_period(std::span<const Letter> w);
inline std::size_t smallest_period(const Word& w) { return smallest_period(w.view()); }

/// Entry j is the smallest period of the prefix of length j + 1.
std::vector<std::size_t> prefix_smallest_periods(std::span<const Letter> w);
inline std::vector<std::size_t> prefix_smallest_periods(const Word& w) {
  return prefix_smallest_periods(w.view());
}

/// Largest factor exponent with a witness; ties go to the smallest start,
/// then the shortest factor.
RepetitionWitness max_exponent(std::span<const Letter> w);
inline RepetitionWitness max_exponent(const Word& w) { return max_exponent(w.view()); }

/// A forbidden factor with minimal start (then minimal length), if any.
std::optional<RepetitionWitness> violates(std::span<const Letter> w, const FreenessSpec& spec);
inline std::optional<RepetitionWitness> violates(const Word& w, const FreenessSpec& spec) {
  return violates(w.view(), spec);
}

/// Like violates(), restricted to factors that end at the last letter.  The
/// shortest such forbidden factor is returned.
std::optional<RepetitionWitness> suffix_violation(std::span<const Letter> w,
                                                  const FreenessSpec& spec,
                                                  std::optional<std::size_t> max_total_length = {});
inline std::optional<RepetitionWitness> suffix_violation(
    const Word& w, const FreenessSpec& spec, std::optional<std::size_t> max_total_length = {}) {
  return suffix_violation(w.view(), spec, max_total_length);
}

}  // namespace reptree
