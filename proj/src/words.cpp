#include "reptree/words.hpp"

#include <algorithm>
#include <numeric>

namespace reptree {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (numerator <= 0 || denominator <= 0) {
    throw Error("exponent must be a positive fraction, got " + std::to_string(numerator) + "/" +
                std::to_string(denominator));
  }
  const auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

FreenessSpec::FreenessSpec(Rational b, bool s) : bound(b), strict(s) {
  if (bound <= Rational(1, 1)) throw Error("freeness bound must exceed 1, got " + bound.str());
}

std::string FreenessSpec::str() const { return bound.str() + (strict ? "+" : ""); }

Word::Word(std::vector<Letter> letters, std::uint32_t alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0) throw Error("alphabet size must be positive");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= alphabet_size_) {
      throw Error("letter " + std::to_string(letters_[i]) + " at position " + std::to_string(i) +
                  " outside alphabet of size " + std::to_string(alphabet_size_));
    }
  }
}

Word Word::from_letters(std::vector<Letter> letters) {
  Letter top = 0;
  for (auto c : letters) top = std::max(top, c);
  return Word(std::move(letters), top + 1);
}

std::size_t IncrementalPeriods::push(Letter c) {
  std::size_t b = 0;
  if (!letters_.empty()) {
    b = border_.back();
    while (b > 0 && letters_[b] != c) b = border_[b - 1];
    if (letters_[b] == c) ++b;
  }
  letters_.push_back(c);
  border_.push_back(b);
  return letters_.size() - b;
}

std::size_t smallest_period(std::span<const Letter> w) {
  if (w.empty()) throw Error("empty word has no period");
  return prefix_smallest_periods(w).back();
}

std::vector<std::size_t> prefix_smallest_periods(std::span<const Letter> w) {
  if (w.empty()) throw Error("empty word has no period");
  std::vector<std::size_t> border(w.size(), 0);
  std::vector<std::size_t> periods(w.size(), 1);
  for (std::size_t j = 1; j < w.size(); ++j) {
    std::size_t b = border[j - 1];
    while (b > 0 && w[b] != w[j]) b = border[b - 1];
    if (w[b] == w[j]) ++b;
    border[j] = b;
    periods[j] = j + 1 - b;
  }
  return periods;
}

RepetitionWitness max_exponent(std::span<const Letter> w) {
  if (w.empty()) throw Error("empty word has no period");
  RepetitionWitness best{0, 1, 1, Rational(1, 1)};
  IncrementalPeriods scan;
  for (std::size_t s = 0; s < w.size(); ++s) {
    // No factor starting here can beat the current best if even a period-1
    // run to the end would not.
    if (Rational(static_cast<std::int64_t>(w.size() - s), 1) <= best.exponent) break;
    scan.clear();
    for (std::size_t i = s; i < w.size(); ++i) {
      const auto q = scan.push(w[i]);
      const auto len = i - s + 1;
      Rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(q));
      if (e > best.exponent) best = {s, len, q, e};
    }
  }
  return best;
}

std::optional<RepetitionWitness> violates(std::span<const Letter> w, const FreenessSpec& spec) {
  IncrementalPeriods scan;
  for (std::size_t s = 0; s < w.size(); ++s) {
    scan.clear();
    for (std::size_t i = s; i < w.size(); ++i) {
      const auto q = scan.push(w[i]);
      const auto len = i - s + 1;
      if (spec.forbids(len, q)) {
        return RepetitionWitness{s, len, q,
                                 Rational(static_cast<std::int64_t>(len), static_cast<std::int64_t>(q))};
      }
    }
  }
  return std::nullopt;
}

std::optional<RepetitionWitness> suffix_violation(std::span<const Letter> w, const FreenessSpec& spec,
                                                  std::optional<std::size_t> max_total_length) {
  if (w.empty()) return std::nullopt;
  const auto limit = std::min(w.size(), max_total_length.value_or(w.size()));
  // A word and its reversal share the smallest period, so scanning the
  // reversed suffix gives the period of every factor ending at the last letter.
  IncrementalPeriods scan;
  for (std::size_t len = 1; len <= limit; ++len) {
    const auto q = scan.push(w[w.size() - len]);
    if (spec.forbids(len, q)) {
      return RepetitionWitness{w.size() - len, len, q,
                               Rational(static_cast<std::int64_t>(len), static_cast<std::int64_t>(q))};
    }
  }
  return std::nullopt;
}

}  // namespace reptree
