#pragma once

// Deterministic helpers for fan-out work: a chunked parallel-for whose output
// depends only on the index, and a fixed-shape pairwise reduction so sums are
// bit-identical no matter how many workers ran.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

namespace monogenica {

// Worker cap: MONOGENICA_THREADS when set (>=1), else hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, count), split into contiguous ranges across workers.
// fn must only write state owned by index i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Reduction over a fixed binary tree whose shape depends only on the length;
// the result is independent of thread count and chunking.
template <class T>
T pairwise_sum(std::span<const T> items) {
  if (items.empty()) throw std::invalid_argument("pairwise_sum needs at least one item");
  if (items.size() <= 8) {
    T acc = items[0];
    for (std::size_t i = 1; i < items.size(); ++i) acc = acc + items[i];
    return acc;
  }
  const std::size_t mid = items.size() / 2;
  return pairwise_sum(items.first(mid)) + pairwise_sum(items.subspan(mid));
}

}  // namespace monogenica
