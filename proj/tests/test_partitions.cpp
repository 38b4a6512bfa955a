#include <doctest.h>

#include "oracles.hpp"
#include "vsl/partitions.hpp"

using vsl::Partition;

TEST_CASE("partitions_of") {
  CHECK(vsl::partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(vsl::partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(vsl::partitions_of(n).size() == counts[n]);
  CHECK_THROWS_AS(vsl::partitions_of(vsl::limits().partition_n + 1), vsl::Error);
}

TEST_CASE("partition validation and order") {
  CHECK_THROWS_AS(Partition({1, 2}), vsl::Error);
  CHECK(Partition::from_unsorted({0, 1, 3, 0, 2}) == Partition{3, 2, 1});
  CHECK(Partition{3} < Partition{2, 1});
  CHECK(Partition{2, 1} < Partition{1, 1, 1});
  CHECK(Partition{1, 1} < Partition{3});
  CHECK(Partition{2, 1}.to_string() == "[2,1]");
  for (int n = 1; n <= 6; ++n) {
    const auto& ps = vsl::partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(vsl::partition_index(ps[i]) == i);
  }
}

TEST_CASE("conjugate") {
  CHECK(vsl::conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(vsl::conjugate({1, 1, 1}) == Partition{3});
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : vsl::partitions_of(n)) CHECK(vsl::conjugate(vsl::conjugate(p)) == p);
  }
}

TEST_CASE("kostka examples") {
  CHECK(vsl::kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(vsl::kostka({2, 2}, {2, 2}) == 1);
  CHECK(vsl::kostka({1, 1, 1}, {3}) == 0);
}

TEST_CASE("kostka agrees with tableau enumeration") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : vsl::partitions_of(n)) {
      for (const auto& lambda : vsl::partitions_of(n)) {
        CHECK(vsl::kostka(mu, lambda) == oracle::kostka(mu, lambda));
      }
    }
  }
}

TEST_CASE("kostka vanishes outside dominance") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : vsl::partitions_of(n)) {
      for (const auto& lambda : vsl::partitions_of(n)) {
        if (!vsl::dominates(mu, lambda)) CHECK(vsl::kostka(mu, lambda) == 0);
        if (mu == lambda) CHECK(vsl::kostka(mu, lambda) == 1);
      }
    }
  }
}

TEST_CASE("weak compositions") {
  CHECK(vsl::weak_compositions(2, 2) == std::vector<vsl::Composition>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(vsl::weak_compositions(4, 1) == std::vector<vsl::Composition>{{4}});
  CHECK(vsl::weak_compositions(3, 3).size() == 10);
  CHECK(vsl::strict_compositions(3).size() == 4);
}
