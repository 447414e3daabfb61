#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partialcolor/coloring.hpp"
#include "partialcolor/graph.hpp"

namespace partialcolor {

class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(std::uint64_t required)
      : std::runtime_error("enumeration refused: requires cap >= " +
                           std::to_string(required)),
        required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

namespace detail {

// c^n, saturating at uint64 max.
inline std::uint64_t saturating_pow(std::uint64_t c, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (c != 0 && r > std::numeric_limits<std::uint64_t>::max() / c) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= c;
  }
  return r;
}

inline std::vector<int> identity_order(int n) {
  std::vector<int> o(static_cast<std::size_t>(n));
  std::iota(o.begin(), o.end(), 0);
  return o;
}

inline std::vector<int> descending_degree_order(const Graph& g) {
  auto o = identity_order(g.vertex_count());
  std::stable_sort(o.begin(), o.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  return o;
}

}  // namespace detail

// Backtracking enumerator of proper c-colorings. Colors are assigned along
// `order` and a branch is cut as soon as two adjacent assigned vertices share
// a color. With the identity order, colorings come out in lexicographic order
// of the assignment vector.
class ProperColoringEnumerator {
 public:
  ProperColoringEnumerator(const Graph& g, int c,
                           std::vector<int> order = {},
                           std::uint64_t node_budget =
                               std::numeric_limits<std::uint64_t>::max())
      : g_(g), c_(c), budget_(node_budget) {
    if (c < 1) throw std::invalid_argument("palette must be positive");
    order_ = order.empty() ? detail::identity_order(g.vertex_count())
                           : std::move(order);
    const int n = g.vertex_count();
    pos_of_.assign(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) pos_of_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
    colors_.assign(static_cast<std::size_t>(n), 0);
    trial_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<Coloring> next() {
    if (done_ || exhausted_budget_) return std::nullopt;
    const int n = g_.vertex_count();
    if (n == 0) {
      done_ = true;
      return Coloring{c_, {}};
    }
    while (true) {
      const int v = order_[static_cast<std::size_t>(pos_)];
      bool advanced = false;
      for (int x = trial_[static_cast<std::size_t>(pos_)] + 1; x <= c_; ++x) {
        if (++nodes_ > budget_) {
          exhausted_budget_ = true;
          return std::nullopt;
        }
        if (feasible(v, x)) {
          trial_[static_cast<std::size_t>(pos_)] = x;
          colors_[static_cast<std::size_t>(v)] = x;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        trial_[static_cast<std::size_t>(pos_)] = 0;
        colors_[static_cast<std::size_t>(v)] = 0;
        if (pos_ == 0) {
          done_ = true;
          return std::nullopt;
        }
        --pos_;
        continue;
      }
      if (pos_ == n - 1) return Coloring{c_, colors_};
      ++pos_;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_exceeded() const { return exhausted_budget_; }

 private:
  bool feasible(int v, int x) const {
    for (int u : g_.neighbors(v)) {
      if (pos_of_[static_cast<std::size_t>(u)] < pos_ &&
          colors_[static_cast<std::size_t>(u)] == x) {
        return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int c_;
  std::vector<int> order_;
  std::vector<int> pos_of_;
  std::vector<int> colors_;
  std::vector<int> trial_;
  int pos_ = 0;
  bool done_ = false;
  bool exhausted_budget_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
};

// Exhaustive enumerator of valid k-partial c-colorings, yielded in
// lexicographic order of the assignment vector (with the identity order).
// A vertex's constraint depends only on its closed neighborhood, so a branch
// is cut exactly when some fully-assigned closed neighborhood violates it;
// no valid coloring is skipped and none is produced twice.
class ValidColoringEnumerator {
 public:
  static constexpr std::uint64_t kDefaultCap = 200'000'000ULL;

  ValidColoringEnumerator(const Graph& g, const PartialSpec& spec,
                          std::uint64_t cap = kDefaultCap,
                          std::vector<int> order = {},
                          std::uint64_t node_budget =
                              std::numeric_limits<std::uint64_t>::max(),
                          bool enforce_cap = true)
      : g_(g), spec_(spec), budget_(node_budget) {
    if (spec.k < 0 || spec.c < 1) throw std::invalid_argument("need k >= 0, c >= 1");
    if (enforce_cap) {
      const std::uint64_t space = detail::saturating_pow(
          static_cast<std::uint64_t>(spec.c), g.vertex_count());
      if (space > cap) throw EnumerationCapError(space);
    }
    order_ = order.empty() ? detail::identity_order(g.vertex_count())
                           : std::move(order);
    const int n = g.vertex_count();
    pos_of_.assign(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) pos_of_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
    // check_at_[p]: vertices whose closed neighborhood is fully assigned once
    // position p is assigned.
    check_at_.assign(static_cast<std::size_t>(n), {});
    for (int w = 0; w < n; ++w) {
      int last = pos_of_[static_cast<std::size_t>(w)];
      for (int u : g.neighbors(w)) {
        last = std::max(last, pos_of_[static_cast<std::size_t>(u)]);
      }
      check_at_[static_cast<std::size_t>(last)].push_back(w);
    }
    colors_.assign(static_cast<std::size_t>(n), 0);
    trial_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<Coloring> next() {
    if (done_ || exhausted_budget_) return std::nullopt;
    const int n = g_.vertex_count();
    if (n == 0) {
      done_ = true;
      return Coloring{spec_.c, {}};
    }
    while (true) {
      const int v = order_[static_cast<std::size_t>(pos_)];
      bool advanced = false;
      for (int x = trial_[static_cast<std::size_t>(pos_)] + 1; x <= spec_.c; ++x) {
        if (++nodes_ > budget_) {
          exhausted_budget_ = true;
          return std::nullopt;
        }
        colors_[static_cast<std::size_t>(v)] = x;
        if (checks_pass(pos_)) {
          trial_[static_cast<std::size_t>(pos_)] = x;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        trial_[static_cast<std::size_t>(pos_)] = 0;
        colors_[static_cast<std::size_t>(v)] = 0;
        if (pos_ == 0) {
          done_ = true;
          return std::nullopt;
        }
        --pos_;
        continue;
      }
      if (pos_ == n - 1) return Coloring{spec_.c, colors_};
      ++pos_;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_exceeded() const { return exhausted_budget_; }

 private:
  bool checks_pass(int p) const {
    for (int w : check_at_[static_cast<std::size_t>(p)]) {
      const int required = std::min(spec_.k, g_.degree(w));
      int achieved = 0;
      for (int u : g_.neighbors(w)) {
        if (colors_[static_cast<std::size_t>(u)] !=
            colors_[static_cast<std::size_t>(w)]) {
          ++achieved;
        }
      }
      if (achieved < required) return false;
    }
    return true;
  }

  const Graph& g_;
  PartialSpec spec_;
  std::vector<int> order_;
  std::vector<int> pos_of_;
  std::vector<std::vector<int>> check_at_;
  std::vector<int> colors_;
  std::vector<int> trial_;
  int pos_ = 0;
  bool done_ = false;
  bool exhausted_budget_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
};

// Every valid k-partial c-coloring, lexicographic in the assignment vector.
inline std::vector<Coloring> enumerate_valid(
    const Graph& g, const PartialSpec& spec,
    std::uint64_t cap = ValidColoringEnumerator::kDefaultCap) {
  ValidColoringEnumerator e(g, spec, cap);
  std::vector<Coloring> out;
  while (auto col = e.next()) out.push_back(std::move(*col));
  return out;
}

enum class DecideStatus { Satisfiable, Unsatisfiable, BudgetExceeded };

struct DecideResult {
  DecideStatus status = DecideStatus::Unsatisfiable;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultDecideBudget = 50'000'000ULL;

// Exact proper c-colorability by backtracking with conflict-directed
// backjumping: a dead end jumps straight to the deepest assignment in its
// conflict set instead of unwinding unrelated branches (gadget-transformed
// graphs make plain chronological backtracking thrash through interchangeable
// clique colorings).
inline DecideResult decide_proper(const Graph& g, int c,
                                  std::uint64_t budget = kDefaultDecideBudget) {
  DecideResult res;
  if (c < 1) throw std::invalid_argument("palette must be positive");
  const int n = g.vertex_count();
  if (n == 0) {
    res.status = DecideStatus::Satisfiable;
    res.coloring = Coloring{c, {}};
    return res;
  }
  const auto order = detail::descending_degree_order(g);
  std::vector<int> pos_of(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) pos_of[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;

  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::vector<int> trial(static_cast<std::size_t>(n), 0);       // per position
  std::vector<std::vector<bool>> conf(static_cast<std::size_t>(n));
  for (auto& row : conf) row.assign(static_cast<std::size_t>(n), false);

  int pos = 0;
  std::uint64_t nodes = 0;
  while (true) {
    const int v = order[static_cast<std::size_t>(pos)];
    bool advanced = false;
    for (int x = trial[static_cast<std::size_t>(pos)] + 1; x <= c; ++x) {
      if (++nodes > budget) {
        res.status = DecideStatus::BudgetExceeded;
        res.nodes = nodes;
        return res;
      }
      int conflict = -1;
      for (int u : g.neighbors(v)) {
        const int pu = pos_of[static_cast<std::size_t>(u)];
        if (pu < pos && colors[static_cast<std::size_t>(u)] == x) {
          if (conflict < 0 || pu < conflict) conflict = pu;
        }
      }
      if (conflict < 0) {
        trial[static_cast<std::size_t>(pos)] = x;
        colors[static_cast<std::size_t>(v)] = x;
        advanced = true;
        break;
      }
      conf[static_cast<std::size_t>(pos)][static_cast<std::size_t>(conflict)] = true;
    }
    if (advanced) {
      if (pos == n - 1) {
        res.status = DecideStatus::Satisfiable;
        res.coloring = Coloring{c, colors};
        res.nodes = nodes;
        return res;
      }
      ++pos;
      trial[static_cast<std::size_t>(pos)] = 0;
      std::fill(conf[static_cast<std::size_t>(pos)].begin(),
                conf[static_cast<std::size_t>(pos)].end(), false);
      continue;
    }
    // Dead end: jump to the deepest position in the conflict set.
    int jump = -1;
    for (int p = pos - 1; p >= 0; --p) {
      if (conf[static_cast<std::size_t>(pos)][static_cast<std::size_t>(p)]) {
        jump = p;
        break;
      }
    }
    if (jump < 0) {
      res.status = DecideStatus::Unsatisfiable;
      res.nodes = nodes;
      return res;
    }
    for (int p = 0; p < jump; ++p) {
      if (conf[static_cast<std::size_t>(pos)][static_cast<std::size_t>(p)]) {
        conf[static_cast<std::size_t>(jump)][static_cast<std::size_t>(p)] = true;
      }
    }
    for (int p = jump; p <= pos; ++p) {
      colors[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = 0;
      if (p > jump) trial[static_cast<std::size_t>(p)] = 0;
    }
    pos = jump;
  }
}

// Exact k-partial c-colorability. When k >= delta_edge(G) the constraint is
// equivalent to proper c-coloring (valid partial colorings are proper at that
// threshold, and proper colorings satisfy any partial spec), so the search
// runs with per-assignment conflict pruning. Otherwise colors are assigned in
// descending-degree order and a branch dies once some fully-assigned closed
// neighborhood violates its deficiency constraint.
inline DecideResult decide_exact(const Graph& g, const PartialSpec& spec,
                                 std::uint64_t budget = kDefaultDecideBudget) {
  if (spec.k < 0 || spec.c < 1) throw std::invalid_argument("need k >= 0, c >= 1");
  if (spec.k >= delta_edge(g)) return decide_proper(g, spec.c, budget);
  ValidColoringEnumerator e(g, spec, /*cap=*/0,
                            detail::descending_degree_order(g), budget,
                            /*enforce_cap=*/false);
  auto col = e.next();
  DecideResult res;
  res.nodes = e.nodes();
  if (col) {
    res.status = DecideStatus::Satisfiable;
    res.coloring = std::move(*col);
    if (!verify_partial(g, *res.coloring, spec).empty()) {
      throw std::logic_error("internal: search produced an invalid coloring");
    }
  } else {
    res.status = e.budget_exceeded() ? DecideStatus::BudgetExceeded
                                     : DecideStatus::Unsatisfiable;
  }
  return res;
}

}  // namespace partialcolor
