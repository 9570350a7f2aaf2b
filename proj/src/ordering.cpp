#include "qflow/ordering.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "qflow/core.hpp"

namespace qflow {

PrecedenceRelation::PrecedenceRelation(int n, std::set<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (n_ < 0) {
    throw InputError("relation ground set size must be non-negative");
  }
  for (const auto& [a, b] : pairs_) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) {
      throw InputError("pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside Z_" + std::to_string(n_));
    }
  }
}

bool PrecedenceRelation::irreflexive() const {
  return std::none_of(pairs_.begin(), pairs_.end(), [](const Pair& p) { return p.first == p.second; });
}

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const PrecedenceRelation& r) {
  Matrix m(static_cast<std::size_t>(r.n()), std::vector<bool>(static_cast<std::size_t>(r.n()), false));
  for (const auto& [a, b] : r.pairs()) {
    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  return m;
}

Matrix closure_matrix(const PrecedenceRelation& r) {
  Matrix m = to_matrix(r);
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) {
          m[i][j] = true;
        }
      }
    }
  }
  return m;
}

// Shortest cycle through `start` using pairs of `r`.
std::vector<Question> find_cycle(const PrecedenceRelation& r, Question start) {
  const auto n = static_cast<std::size_t>(r.n());
  std::vector<int> parent(n, -1);
  std::deque<Question> queue{start};
  std::vector<bool> seen(n, false);
  while (!queue.empty()) {
    const Question u = queue.front();
    queue.pop_front();
    for (Question v = 0; v < r.n(); ++v) {
      if (!r.contains(u, v)) {
        continue;
      }
      if (v == start) {
        std::vector<Question> cycle{start};
        for (Question x = u; x != start; x = parent[static_cast<std::size_t>(x)]) {
          cycle.push_back(x);
        }
        std::reverse(cycle.begin() + 1, cycle.end());
        cycle.push_back(start);
        return cycle;
      }
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  return {};
}

void total_orders(std::set<Question> remaining, const Matrix& order, Ordering& current, std::vector<Ordering>& out) {
  if (remaining.empty()) {
    out.push_back(current);
    return;
  }
  // minimal elements of the order restricted to `remaining`; std::set keeps them ascending
  for (Question m : remaining) {
    const bool minimal = std::none_of(remaining.begin(), remaining.end(), [&](Question x) {
      return x != m && order[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)];
    });
    if (!minimal) {
      continue;
    }
    std::set<Question> rest = remaining;
    rest.erase(m);
    current.push_back(m);
    total_orders(std::move(rest), order, current, out);
    current.pop_back();
  }
}

}  // namespace

PrecedenceRelation transitive_closure(const PrecedenceRelation& r) {
  const Matrix m = closure_matrix(r);
  std::set<PrecedenceRelation::Pair> pairs;
  for (Question a = 0; a < r.n(); ++a) {
    for (Question b = 0; b < r.n(); ++b) {
      if (m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        pairs.emplace(a, b);
      }
    }
  }
  return PrecedenceRelation(r.n(), std::move(pairs));
}

bool is_admissible(const PrecedenceRelation& r) {
  const Matrix m = closure_matrix(r);
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (m[a][a]) {
      return false;
    }
  }
  return true;
}

std::set<Question> minimal_elements(const std::set<Question>& subset, const PrecedenceRelation& order) {
  std::set<Question> out;
  for (Question m : subset) {
    const bool minimal =
        std::none_of(subset.begin(), subset.end(), [&](Question x) { return x != m && order.contains(x, m); });
    if (minimal) {
      out.insert(m);
    }
  }
  return out;
}

OrderingsResult enumerate_orderings(const PrecedenceRelation& r) {
  const Matrix closure = closure_matrix(r);
  for (Question a = 0; a < r.n(); ++a) {
    if (closure[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)]) {
      return Inadmissible{find_cycle(r, a)};
    }
  }
  std::set<Question> all;
  for (Question a = 0; a < r.n(); ++a) {
    all.insert(a);
  }
  std::vector<Ordering> out;
  Ordering current;
  total_orders(std::move(all), closure, current, out);
  return out;
}

bool extends(const Ordering& order, const PrecedenceRelation& r) {
  if (order.size() != static_cast<std::size_t>(r.n())) {
    return false;
  }
  std::vector<int> position(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Question q = order[i];
    if (q < 0 || q >= r.n() || position[static_cast<std::size_t>(q)] != -1) {
      return false;
    }
    position[static_cast<std::size_t>(q)] = static_cast<int>(i);
  }
  return std::all_of(r.pairs().begin(), r.pairs().end(), [&](const PrecedenceRelation::Pair& p) {
    return position[static_cast<std::size_t>(p.first)] < position[static_cast<std::size_t>(p.second)];
  });
}

}  // namespace qflow
