#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <vector>

#include "magma/parallel.hpp"

using namespace magma;

TEST_CASE("every index is visited exactly once") {
  for (int workers : {1, 4}) {
    std::vector<std::atomic<int>> hits(257);
    for (auto& h : hits) h = 0;
    for_each_index(257, workers, [&](int i) { hits[static_cast<std::size_t>(i)]++; });
    for (const auto& h : hits) CHECK(h == 1);
  }
}

TEST_CASE("zero work is fine") {
  int calls = 0;
  for_each_index(0, 4, [&](int) { ++calls; });
  CHECK(calls == 0);
}

TEST_CASE("worker count floor") {
  CHECK(max_workers() >= 1);
}
