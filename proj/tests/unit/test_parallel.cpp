#include "uniqmod/parallel.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

using namespace uniqmod;

TEST_CASE("every index is visited exactly once") {
  for (std::size_t count : {0UL, 1UL, 100UL, 16384UL, 100'003UL}) {
    std::vector<std::atomic<int>> hits(count);
    parallel_for(count, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) hits[i].fetch_add(1);
    });
    for (auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("UNIQMOD_THREADS is honoured") { CHECK(worker_count() == 4); }

TEST_CASE("worker exceptions propagate") {
  CHECK_THROWS_AS(parallel_for(200'000,
                               [](std::size_t begin, std::size_t) {
                                 if (begin > 0) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
