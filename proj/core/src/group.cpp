#include "gelfand/group.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

#include "gelfand/config.hpp"
#include "gelfand/random.hpp"

namespace gelfand {

namespace {

std::size_t env_cap(const char* var, std::size_t fallback) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed == 0) {
    throw std::invalid_argument(std::string(var) + " must be a positive integer, got '" + raw +
                                "'");
  }
  return static_cast<std::size_t>(parsed);
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

std::size_t order_cap() { return env_cap("GP_MAX_ORDER", kDefaultOrderCap); }
std::size_t psd_cap() { return env_cap("GP_PSD_CAP", kDefaultPsdCap); }

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t order,
                                    std::vector<std::uint32_t> table) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  if (table.size() != order * order) {
    throw std::invalid_argument("table size " + std::to_string(table.size()) +
                                " does not match order " + std::to_string(order));
  }
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(table);
  g.validate();
  g.build_inverses();
  return g;
}

FiniteGroup FiniteGroup::from_generators(
    std::string name, std::size_t degree,
    const std::vector<std::vector<std::uint32_t>>& generators, std::size_t cap) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  if (cap == 0) cap = order_cap();
  for (const auto& gen : generators) {
    if (gen.size() != degree) {
      throw std::invalid_argument("generator degree mismatch: expected " +
                                  std::to_string(degree) + ", got " +
                                  std::to_string(gen.size()));
    }
    std::vector<char> seen(degree, 0);
    for (std::uint32_t image : gen) {
      if (image >= degree || seen[image]) {
        throw std::invalid_argument("generator is not a permutation of 0.." +
                                    std::to_string(degree - 1));
      }
      seen[image] = 1;
    }
  }

  // BFS closure: identity first, then products x*g in discovery order with
  // the generators applied in the order given. This fixes the canonical
  // element indexing.
  std::vector<std::uint32_t> identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<std::uint32_t>(i);

  std::vector<std::vector<std::uint32_t>> elements;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  elements.push_back(identity);
  index.emplace(identity, 0);
  std::queue<std::uint32_t> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::uint32_t at = frontier.front();
    frontier.pop();
    for (const auto& gen : generators) {
      auto product = compose(elements[at], gen);
      if (index.contains(product)) continue;
      if (elements.size() >= cap) {
        throw std::invalid_argument("generator closure exceeds order cap " + std::to_string(cap));
      }
      const auto id = static_cast<std::uint32_t>(elements.size());
      index.emplace(product, id);
      elements.push_back(std::move(product));
      frontier.push(id);
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index.at(compose(elements[i], elements[j]));
    }
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.table_ = std::move(table);
  g.perms_ = std::move(elements);
  g.validate();
  g.build_inverses();
  return g;
}

void FiniteGroup::validate() const {
  const std::size_t n = order_;
  // Identity at index 0.
  for (std::size_t j = 0; j < n; ++j) {
    if (table_[j] != j || table_[j * n] != j) {
      throw std::invalid_argument("element 0 is not a two-sided identity");
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t v = table_[i * n + j];
      if (v >= n || seen[v]) {
        throw std::invalid_argument("not a Latin square: row " + std::to_string(i) +
                                    " repeats entry " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t v = table_[i * n + j];
      if (seen[v]) {
        throw std::invalid_argument("not a Latin square: column " + std::to_string(j) +
                                    " repeats entry " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  // Associativity: exhaustive up to 64, sampled (>= 10 n^2 triples) above.
  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::invalid_argument("table is not associative at (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (n <= 64) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    SplitMix64 rng(0x9E3779B97F4A7C15ULL ^ n);
    const std::size_t samples = 10 * n * n;
    for (std::size_t t = 0; t < samples; ++t) {
      const auto a = static_cast<std::uint32_t>(rng.next() % n);
      const auto b = static_cast<std::uint32_t>(rng.next() % n);
      const auto c = static_cast<std::uint32_t>(rng.next() % n);
      check_triple(a, b, c);
    }
  }
}

void FiniteGroup::build_inverses() {
  const std::size_t n = order_;
  inv_.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (mul(i, j) == 0) {
        if (mul(j, i) != 0) {
          throw std::invalid_argument("element " + std::to_string(i) +
                                      " has no two-sided inverse");
        }
        inv_[i] = j;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("element " + std::to_string(i) + " has no inverse");
    }
  }
}

GroupPtr make_group_from_table(std::string name, std::size_t order,
                               std::vector<std::uint32_t> table) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(name), order, std::move(table)));
}

GroupPtr make_group_from_generators(std::string name, std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& generators,
                                    std::size_t cap) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_generators(std::move(name), degree, generators, cap));
}

Subgroup Subgroup::closure(GroupPtr group, std::span<const std::uint32_t> seed) {
  const std::size_t n = group->order();
  for (std::uint32_t x : seed) {
    if (x >= n) {
      throw std::out_of_range("subgroup element index " + std::to_string(x) +
                              " out of range for group of order " + std::to_string(n));
    }
  }
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> worklist;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      worklist.push_back(x);
    }
  };
  add(0);
  for (std::uint32_t x : seed) add(x);
  for (std::size_t at = 0; at < worklist.size(); ++at) {
    const std::uint32_t x = worklist[at];
    add(group->inv(x));
    for (std::size_t other = 0; other < worklist.size(); ++other) {
      add(group->mul(x, worklist[other]));
      add(group->mul(worklist[other], x));
    }
  }

  Subgroup k;
  k.group_ = std::move(group);
  k.mask_ = std::move(in);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (k.mask_[x]) k.members_.push_back(x);
  }
  return k;
}

}  // namespace gelfand
