#include "reptree/word_gen.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <random>
#include <thread>

namespace reptree {

namespace {

struct DfsResult {
  GenStatus status;
  std::vector<Letter> letters;
  std::uint64_t nodes;
};

// Lexicographic DFS with `prefix` fixed.  `order` optionally permutes the
// letters tried at each depth (randomized mode).
DfsResult dfs(const GenRequest& req, std::vector<Letter> prefix, std::uint64_t budget,
              std::mt19937_64* rng) {
  const auto n = req.target_length;
  const auto k = req.alphabet_size;
  std::vector<Letter> word = std::move(prefix);
  const std::size_t base = word.size();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (suffix_violation(std::span<const Letter>(word.data(), i + 1), req.spec)) {
      return {GenStatus::Impossible, {}, 0};
    }
  }
  if (word.size() >= n) {
    word.resize(n);
    return {GenStatus::Found, word, 0};
  }

  std::vector<std::vector<Letter>> order(n, std::vector<Letter>(k));
  for (auto& o : order) std::iota(o.begin(), o.end(), Letter{0});
  std::vector<std::uint32_t> next(n + 1, 0);
  std::uint64_t nodes = 0;
  std::size_t pos = base;
  if (rng) std::shuffle(order[pos].begin(), order[pos].end(), *rng);

  while (true) {
    if (pos == n) return {GenStatus::Found, word, nodes};
    if (next[pos] >= k) {
      if (pos == base) return {GenStatus::Impossible, {}, nodes};
      --pos;
      word.pop_back();
      continue;
    }
    const Letter c = order[pos][next[pos]++];
    if (++nodes > budget) return {GenStatus::BudgetExhausted, {}, nodes - 1};
    word.push_back(c);
    if (suffix_violation(word, req.spec)) {
      word.pop_back();
      continue;
    }
    ++pos;
    if (pos < n) {
      next[pos] = 0;
      if (rng) std::shuffle(order[pos].begin(), order[pos].end(), *rng);
    }
  }
}

GenResult finish(const GenRequest& req, DfsResult r) {
  GenResult out{r.status, std::nullopt, r.nodes};
  if (r.status == GenStatus::Found) {
    Word w(std::move(r.letters), req.alphabet_size);
    if (auto bad = violates(w, req.spec)) {
      throw Error("internal error: generated word violates " + req.spec.str() + " at position " +
                  std::to_string(bad->start));
    }
    out.word = std::move(w);
  }
  return out;
}

}  // namespace

Word thue_morse(std::size_t n) {
  std::vector<Letter> letters(n);
  for (std::size_t i = 0; i < n; ++i) letters[i] = static_cast<Letter>(std::popcount(i) & 1);
  return Word(std::move(letters), 2);
}

GenResult backtrack_word(const GenRequest& req, const GenOptions& opts) {
  if (req.alphabet_size < 2) throw Error("alphabet size must be at least 2");
  if (req.target_length < 1) throw Error("target length must be at least 1");
  const auto budget = req.node_budget.value_or(UINT64_MAX);

  if (opts.seed) {
    std::mt19937_64 rng(*opts.seed);
    std::uint64_t used = 0;
    while (used < budget) {
      const auto slice = std::min(opts.restart_nodes, budget - used);
      auto r = dfs(req, {}, slice, &rng);
      used += r.nodes;
      if (r.status == GenStatus::Found) {
        r.nodes = used;
        return finish(req, std::move(r));
      }
      if (r.status == GenStatus::Impossible) break;
    }
    return {GenStatus::BudgetExhausted, std::nullopt, used};
  }

  if (opts.threads <= 1) return finish(req, dfs(req, {}, budget, nullptr));

  // One task per first letter; each gets the full budget.
  std::vector<DfsResult> results(req.alphabet_size);
  std::vector<std::thread> pool;
  std::atomic<std::uint32_t> next_task{0};
  const auto workers = std::min<unsigned>(opts.threads, req.alphabet_size);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (auto task = next_task++; task < req.alphabet_size; task = next_task++) {
        results[task] = dfs(req, {task}, budget, nullptr);
        results[task].nodes += 1;
      }
    });
  }
  for (auto& th : pool) th.join();

  std::uint64_t total = 0;
  for (auto& r : results) total += r.nodes;
  for (auto& r : results) {
    if (r.status == GenStatus::Impossible) continue;
    // The first task that did not prove impossibility decides: either it
    // holds the least word or the least word is unknown.
    auto out = finish(req, std::move(r));
    out.nodes = total;
    return out;
  }
  return {GenStatus::Impossible, std::nullopt, total};
}

Rational dejean_threshold(std::uint32_t k) {
  switch (k) {
    case 0:
    case 1:
      throw Error("repetition threshold needs at least 2 letters");
    case 2:
      return {2, 1};
    case 3:
      return {7, 4};
    case 4:
      return {7, 5};
    default:
      return {k, k - 1};
  }
}

Word dejean_word(std::uint32_t k, std::size_t n, std::optional<std::uint64_t> node_budget) {
  if (n < 1) throw Error("target length must be at least 1");
  if (k == 2) return thue_morse(n);
  const FreenessSpec spec(dejean_threshold(k), true);
  auto r = backtrack_word({k, n, spec, node_budget});
  switch (r.status) {
    case GenStatus::Found:
      return std::move(*r.word);
    case GenStatus::Impossible:
      throw GenerationError(r.status, "no " + spec.str() + "-free word of length " +
                                          std::to_string(n) + " over " + std::to_string(k) +
                                          " letters");
    case GenStatus::BudgetExhausted:
      break;
  }
  throw GenerationError(r.status, "node budget exhausted generating a " + spec.str() +
                                      "-free word of length " + std::to_string(n));
}

std::vector<std::uint8_t> pansiot_code(const Word& w) {
  if (w.alphabet_size() > 5) throw Error("Pansiot code needs a word over at most 5 letters");
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    for (std::size_t j = i + 1; j < std::min(w.size(), i + 4); ++j) {
      if (w[i] == w[j]) {
        throw Error("window starting at " + std::to_string(j >= 3 ? j - 3 : 0) +
                    " repeats a letter at positions " + std::to_string(i) + " and " +
                    std::to_string(j));
      }
    }
  }
  std::vector<std::uint8_t> bits;
  if (w.size() < 5) return bits;
  bits.reserve(w.size() - 4);
  for (std::size_t i = 0; i + 4 < w.size(); ++i) bits.push_back(w[i] == w[i + 4] ? 0 : 1);
  return bits;
}

}  // namespace reptree
