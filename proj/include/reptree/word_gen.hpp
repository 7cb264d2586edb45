// word_gen.hpp
//
// Finite prefixes of the infinite words the colorings are built from:
// Thue-Morse, backtracked alpha+-free words over k letters, and the Pansiot
// code of a 5-letter word.

#pragma once

#include <cstdint>
#include <optional>

#include "reptree/words.hpp"

namespace reptree {

struct GenRequest {
  std::uint32_t alphabet_size;
  std::size_t target_length;
  FreenessSpec spec;
  std::optional<std::uint64_t> node_budget;
};

enum class GenStatus { Found, Impossible, BudgetExhausted };

struct GenResult {
  GenStatus status;
  std::optional<Word> word;  // set iff status == Found
  std::uint64_t nodes = 0;
};

struct GenOptions {
  /// > 1 splits the search on the first letter; the lexicographically least
  /// result is kept, so the answer does not depend on scheduling.
  unsigned threads = 1;
  /// Opt-in randomized letter order with restarts.  The result is then any
  /// spec-free word, not the least one, and exhaustion is never reported as
  /// Impossible.
  std::optional<std::uint64_t> seed;
  std::uint64_t restart_nodes = 1'000'000;
};

inline constexpr std::uint64_t kDefaultGenBudget = 100'000'000;

class GenerationError : public Error {
 public:
  GenerationError(GenStatus status, const std::string& what) : Error(what), status_(status) {}
  GenStatus status() const { return status_; }

 private:
  GenStatus status_;
};

/// Prefix of the fixed point of 0 -> 01, 1 -> 10.
Word thue_morse(std::size_t n);

/// Depth-first search over letters in increasing order, pruning with
/// suffix_violation.  Found words are re-checked with violates() before
/// being returned.
GenResult backtrack_word(const GenRequest& req, const GenOptions& opts = {});

/// RT(2)=2, RT(3)=7/4, RT(4)=7/5, RT(k)=k/(k-1) for k >= 5.
Rational dejean_threshold(std::uint32_t k);

/// An RT(k)+-free word of length n; Thue-Morse for k = 2.  Throws
/// GenerationError when the search fails.
Word dejean_word(std::uint32_t k, std::size_t n,
                 std::optional<std::uint64_t> node_budget = kDefaultGenBudget);

/// Bits p_i, 0 iff w_i == w_{i+4}; requires rainbow windows of length 4.
std::vector<std::uint8_t> pansiot_code(const Word& w);

}  // namespace reptree
