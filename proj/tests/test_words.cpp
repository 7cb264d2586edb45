#include <algorithm>
#include <catch_amalgamated.hpp>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "reptree/word_gen.hpp"
#include "reptree/words.hpp"

using namespace reptree;

namespace {

Word w(std::vector<Letter> letters) { return Word::from_letters(std::move(letters)); }

const FreenessSpec kSquare(Rational(2, 1), false);
const FreenessSpec kOverlap(Rational(2, 1), true);

}  // namespace

TEST_CASE("rational arithmetic is exact", "[rational]") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(7, 1).str() == "7/1");
  CHECK(Rational(7, 4) > Rational(5, 3));
  CHECK(Rational(4, 3) < Rational(7, 5));
  CHECK(Rational(1'000'000'007, 1'000'000'006) > Rational(1'000'000'008, 1'000'000'007));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(0, 3), Error);
  CHECK_THROWS_AS(Rational(-1, 3), Error);
}

TEST_CASE("freeness specs distinguish strict and non-strict bounds", "[spec]") {
  CHECK(kSquare.forbids(4, 2));
  CHECK_FALSE(kOverlap.forbids(4, 2));
  CHECK(kOverlap.forbids(5, 2));
  CHECK(kSquare.str() == "2/1");
  CHECK(kOverlap.str() == "2/1+");
  CHECK_THROWS_AS(FreenessSpec(Rational(1, 1), true), Error);
  CHECK_THROWS_AS(FreenessSpec(Rational(9, 10), false), Error);
}

TEST_CASE("words validate their letters", "[word]") {
  CHECK_THROWS_AS(Word({0, 3}, 3), Error);
  CHECK(w({0, 4, 1}).alphabet_size() == 5);
  CHECK(Word().empty());
}

TEST_CASE("smallest period", "[period]") {
  CHECK(smallest_period(w({0, 0, 0})) == 1);
  CHECK(smallest_period(w({0, 1, 2})) == 3);
  CHECK(smallest_period(w({0, 1, 0, 2, 0, 1, 0})) == 4);
  CHECK_THROWS_WITH(smallest_period(Word()), "empty word has no period");
}

TEST_CASE("prefix smallest periods", "[period]") {
  CHECK(prefix_smallest_periods(w({0, 1, 0, 1})) == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(prefix_smallest_periods(w({0, 1, 2})) == std::vector<std::size_t>{1, 2, 3});
  CHECK(prefix_smallest_periods(w({0, 1, 1, 0, 1, 0, 0, 1})).back() == 6);
  CHECK_THROWS_AS(prefix_smallest_periods(Word()), Error);
}

TEST_CASE("incremental periods follow push and pop", "[period]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto letters = oracle::random_word(rng, 30, 3);
    IncrementalPeriods inc;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      REQUIRE(inc.push(letters[i]) == oracle::period(letters, 0, i + 1));
    }
    while (inc.size() > 1) {
      inc.pop();
      REQUIRE(inc.period() == oracle::period(letters, 0, inc.size()));
    }
  }
}

TEST_CASE("max exponent", "[exponent]") {
  const auto yxyxyx = max_exponent(w({0, 1, 0, 1, 0, 1}));
  CHECK(yxyxyx.exponent == Rational(3, 1));
  CHECK(yxyxyx.period == 2);

  const auto tyzty = max_exponent(w({3, 1, 2, 3, 1}));
  CHECK(tyzty.exponent == Rational(5, 3));
  CHECK(tyzty.period == 3);

  const auto yxzyxz = max_exponent(w({0, 1, 2, 0, 1, 2}));
  CHECK(yxzyxz.exponent == Rational(2, 1));
  CHECK(yxzyxz.period == 3);

  const auto single = max_exponent(w({4}));
  CHECK(single.exponent == Rational(1, 1));
}

TEST_CASE("violates", "[exponent]") {
  const auto sq = violates(w({0, 1, 0, 1}), kSquare);
  REQUIRE(sq);
  CHECK(sq->exponent == Rational(2, 1));
  CHECK_FALSE(violates(w({0, 1, 0, 1}), kOverlap));
  CHECK_FALSE(violates(thue_morse(64), kOverlap));
  CHECK_FALSE(violates(Word(), kSquare));
}

TEST_CASE("suffix violation", "[exponent]") {
  const auto a = suffix_violation(w({0, 1, 0, 1, 0}), kSquare);
  REQUIRE(a);
  CHECK(a->start + a->total_length == 5);
  CHECK(Rational(static_cast<std::int64_t>(a->total_length),
                 static_cast<std::int64_t>(a->period)) >= Rational(2, 1));

  CHECK_FALSE(suffix_violation(w({0, 1, 2, 0}), kSquare));

  const auto c = suffix_violation(w({0, 1, 2, 0, 1, 2}), kSquare);
  REQUIRE(c);
  CHECK(c->total_length == 6);
  CHECK(c->period == 3);

  // The length bound hides long repetitions.
  CHECK_FALSE(suffix_violation(w({0, 1, 2, 0, 1, 2}), kSquare, 5));
}

TEST_CASE("words agree with the brute-force oracle", "[oracle]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto k = static_cast<std::uint32_t>(2 + trial % 5);
    const auto letters = oracle::random_word(rng, 24, k);
    const Word word(letters, k);
    REQUIRE(prefix_smallest_periods(word) == oracle::prefix_periods(letters));
    const auto got = max_exponent(word);
    const auto want = oracle::max_exponent(letters);
    REQUIRE(got.start == want.start);
    REQUIRE(got.total_length == want.length);
    REQUIRE(got.period == want.period);
    const auto runs = oracle::max_exponent_by_runs(letters);
    REQUIRE(runs.start == want.start);
    REQUIRE(runs.length == want.length);
    REQUIRE(runs.period == want.period);
    for (const auto& spec : {kSquare, kOverlap, FreenessSpec(Rational(3, 2), false),
                             FreenessSpec(Rational(7, 4), true)}) {
      const auto v = violates(word, spec);
      const auto o = oracle::violation(letters, spec);
      REQUIRE(v.has_value() == o.has_value());
      if (v) {
        REQUIRE(v->start == o->start);
        REQUIRE(v->total_length == o->length);
      }
    }
  }
}

TEST_CASE("max exponent is invariant under reversal", "[property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    auto letters = oracle::random_word(rng, 40, 2 + trial % 4);
    const auto fwd = max_exponent(w(letters)).exponent;
    std::reverse(letters.begin(), letters.end());
    REQUIRE(max_exponent(w(letters)).exponent == fwd);
  }
}

TEST_CASE("violations are invariant under letter permutations", "[property]") {
  std::mt19937_64 rng(8);
  const FreenessSpec spec(Rational(7, 4), true);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t k = 2 + trial % 4;
    const auto letters = oracle::random_word(rng, 40, k);
    std::vector<Letter> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto mapped = letters;
    for (auto& c : mapped) c = sigma[c];
    const auto a = violates(Word(letters, k), spec);
    const auto b = violates(Word(mapped, k), spec);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      REQUIRE(a->start == b->start);
      REQUIRE(a->total_length == b->total_length);
      REQUIRE(a->period == b->period);
    }
  }
}

TEST_CASE("factors of free words are free", "[property]") {
  std::mt19937_64 rng(9);
  const FreenessSpec spec(Rational(7, 4), true);
  int free_words = 0;
  for (int trial = 0; trial < 3000 && free_words < 200; ++trial) {
    const auto letters = oracle::random_word(rng, 16, 3);
    if (violates(w(letters), spec)) continue;
    ++free_words;
    for (std::size_t s = 0; s < letters.size(); ++s) {
      for (std::size_t e = s + 1; e <= letters.size(); ++e) {
        const std::vector<Letter> x(letters.begin() + s, letters.begin() + e);
        REQUIRE_FALSE(violates(Word(x, 3), spec));
      }
    }
  }
  CHECK(free_words > 50);
}

TEST_CASE("suffix checks on every prefix match a full check", "[property]") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto letters = oracle::random_word(rng, 20, 2 + trial % 3);
    for (const auto& spec : {kSquare, kOverlap, FreenessSpec(Rational(3, 2), true)}) {
      bool suffix_clean = true;
      for (std::size_t n = 1; n <= letters.size() && suffix_clean; ++n) {
        const std::vector<Letter> prefix(letters.begin(), letters.begin() + n);
        suffix_clean = !suffix_violation(w(prefix), spec);
      }
      REQUIRE(suffix_clean == !violates(w(letters), spec));
    }
  }
}
