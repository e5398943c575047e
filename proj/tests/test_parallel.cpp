#include "monogenica/parallel.hpp"

#include <atomic>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "monogenica/multivector.hpp"

using namespace monogenica;

TEST_CASE("parallel_for touches each index exactly once") {
  const std::size_t count = 10007;
  std::vector<int> hits(count, 0);
  std::atomic<int> calls{0};
  parallel_for(count, [&](std::size_t i) {
    ++hits[i];
    calls.fetch_add(1, std::memory_order_relaxed);
  });
  CHECK(calls.load() == static_cast<int>(count));
  for (int h : hits) CHECK(h == 1);
  CHECK_NOTHROW(parallel_for(0, [](std::size_t) {}));
}

TEST_CASE("parallel_for propagates worker exceptions") {
  CHECK_THROWS_AS(parallel_for(5000,
                               [](std::size_t i) {
                                 if (i == 1370) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("pairwise_sum fixtures") {
  std::vector<double> ints(1000);
  for (std::size_t i = 0; i < ints.size(); ++i) ints[i] = static_cast<double>(i + 1);
  CHECK(pairwise_sum(std::span<const double>(ints)) == 500500.0);

  const std::vector<double> one{3.25};
  CHECK(pairwise_sum(std::span<const double>(one)) == 3.25);

  const std::vector<double> empty;
  CHECK_THROWS_AS(pairwise_sum(std::span<const double>(empty)), std::invalid_argument);
}

TEST_CASE("pairwise_sum is a fixed-shape reduction") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> values(4097);
  for (double& v : values) v = dist(rng);

  const double total = pairwise_sum(std::span<const double>(values));
  // Same data, same shape, same bits.
  CHECK(pairwise_sum(std::span<const double>(values)) == total);

  // Reference: explicit recursion with the same split and an 8-wide base case.
  struct Ref {
    static double sum(std::span<const double> s) {
      if (s.size() <= 8) {
        double acc = s[0];
        for (std::size_t i = 1; i < s.size(); ++i) acc = acc + s[i];
        return acc;
      }
      return sum(s.first(s.size() / 2)) + sum(s.subspan(s.size() / 2));
    }
  };
  CHECK(Ref::sum(values) == total);
}

TEST_CASE("pairwise_sum works over multivectors") {
  const Signature g3 = euclidean(3);
  std::vector<Multivector> items(37, Multivector::scalar(g3, 1.0));
  const Multivector total = pairwise_sum(std::span<const Multivector>(items));
  CHECK(total[0] == 37.0);
}

TEST_CASE("worker_count is positive and stable") {
  const int w = worker_count();
  CHECK(w >= 1);
  CHECK(worker_count() == w);
}
