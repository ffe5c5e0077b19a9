#include "nekrasov/young_diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "nekrasov/errors.hpp"

namespace nekrasov {

YoungDiagram::YoungDiagram(std::vector<int> columns) : columns_(std::move(columns)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] <= 0) throw std::invalid_argument("column heights must be positive");
    if (i > 0 && columns_[i] > columns_[i - 1]) {
      throw std::invalid_argument("column heights must be weakly decreasing");
    }
  }
  size_ = std::accumulate(columns_.begin(), columns_.end(), 0);
}

int YoungDiagram::row(int j) const {
  if (j < 1) return 0;
  int n = 0;
  for (int h : columns_) {
    if (h < j) break;
    ++n;
  }
  return n;
}

YoungDiagram YoungDiagram::transpose() const {
  std::vector<int> rows;
  const int height = empty() ? 0 : columns_.front();
  rows.reserve(height);
  for (int j = 1; j <= height; ++j) rows.push_back(row(j));
  return YoungDiagram(std::move(rows));
}

std::vector<std::pair<int, int>> YoungDiagram::boxes() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size_);
  for (int i = 1; i <= width(); ++i) {
    for (int j = 1; j <= columns_[i - 1]; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::string YoungDiagram::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(columns_[i]);
  }
  return out + "]";
}

std::strong_ordering diagram_order(const YoungDiagram& a, const YoungDiagram& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Larger column sequence first.
  return b.columns() <=> a.columns();
}

ArmLeg arm_leg(const YoungDiagram& y, int i, int j) {
  if (!y.contains(i, j)) {
    throw OutOfDiagram("box (" + std::to_string(i) + "," + std::to_string(j) + ") not in " +
                       y.to_string());
  }
  return {y.relative_arm(i, j), y.relative_leg(i, j)};
}

std::pair<int, int> colored_sizes(const YoungDiagram& y, int color) {
  int even = 0;
  int odd = 0;
  for (auto [i, j] : y.boxes()) {
    if ((color + (i - 1) + (j - 1)) % 2 == 0) {
      ++even;
    } else {
      ++odd;
    }
  }
  return {even, odd};
}

std::vector<YoungDiagram> partitions(int n) {
  std::vector<YoungDiagram> out;
  if (n < 0) return out;
  std::vector<int> current;
  // Descending-lex generation: largest first part first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<YoungDiagram>> diagram_tuples(int r, int n) {
  std::vector<std::vector<YoungDiagram>> out;
  if (r <= 0 || n < 0) {
    if (r == 0 && n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::vector<YoungDiagram>> by_size(n + 1);
  for (int s = 0; s <= n; ++s) by_size[s] = partitions(s);

  std::vector<YoungDiagram> current;
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == r - 1) {
      for (const auto& y : by_size[remaining]) {
        current.push_back(y);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      for (const auto& y : by_size[s]) {
        current.push_back(y);
        rec(slot + 1, remaining - s);
        current.pop_back();
      }
    }
  };
  rec(0, n);
  // Slot-by-slot generation already follows diagram_order lexicographically.
  return out;
}

std::string tuple_to_string(const std::vector<YoungDiagram>& ys) {
  std::string out = "(";
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (i > 0) out += ",";
    out += ys[i].to_string();
  }
  return out + ")";
}

}  // namespace nekrasov
