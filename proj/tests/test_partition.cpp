#include "deltaq/partition.hpp"

#include "test_support.hpp"

using namespace deltaq;

TEST_CASE("construction and parsing") {
  CHECK_THROWS(Partition{1, 2});
  CHECK_THROWS(Partition{2, 0});
  CHECK(Partition::parse("[3,1,1]") == Partition{3, 1, 1});
  CHECK(Partition::parse(" [ ] ").empty());
  CHECK(Partition{3, 1, 1}.to_string() == "[3,1,1]");
  CHECK(Partition::hook(3, 2) == Partition{3, 1, 1});
  CHECK_THROWS(Partition::parse("[3,1"));
}

TEST_CASE("conjugation") {
  CHECK(Partition{1, 1, 1}.conjugate() == Partition{3});
  CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
  // Column heights of (3,1,1) are 3,1,1.
  CHECK(Partition{3, 1, 1}.conjugate() == Partition{3, 1, 1});
  CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("n statistic") {
  CHECK(Partition{5}.nstat() == 0);
  CHECK(Partition{2, 1}.nstat() == 1);
  for (int m = 2; m <= 8; ++m)
    for (int k = 0; k < m; ++k) CHECK(Partition::hook(m - k, k).nstat() == k * (k + 1) / 2);
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      int legs = 0;
      for (const auto& c : p.cell_stats()) legs += c.leg;
      CHECK(p.nstat() == legs);
    }
}

TEST_CASE("multiplicities and cells") {
  CHECK(Partition{3, 1, 1}.multiplicities() == std::map<int, int>{{3, 1}, {1, 2}});
  CHECK(Partition{2, 2, 2}.multiplicities() == std::map<int, int>{{2, 3}});
  CHECK(Partition{}.multiplicities().empty());
  const auto one = Partition{1}.cell_stats();
  REQUIRE(one.size() == 1);
  CHECK((one[0].arm == 0 && one[0].leg == 0 && one[0].content == 0 && one[0].hook == 1));
  const auto c = Partition{2, 1}.cell_stats()[0];
  CHECK((c.hook == 3 && c.content == 0 && c.arm == 1 && c.leg == 1));
  // Hook (m-k, 1^k): contents 0..m-k-1 along the row, -1..-k down the column.
  const auto cells = Partition::hook(4, 3).cell_stats();
  for (const auto& x : cells) CHECK(x.content == (x.row == 0 ? x.col : -x.row));
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition{4}, Partition{1, 1, 1, 1}));
  CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK(dominates(Partition{2, 2}, Partition{2, 2}));
  CHECK_THROWS(dominates(Partition{2}, Partition{1}));
}

TEST_CASE("generation") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == counts[n]);
  CHECK(partitions_of(4, 2) == std::vector<Partition>{Partition{3, 1}, Partition{2, 2}});
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  const auto p5 = partitions_of(5);
  for (std::size_t i = 1; i < p5.size(); ++i) CHECK(p5[i - 1] > p5[i]);
  CHECK(zee(Partition{2, 1, 1}) == 4);
}
