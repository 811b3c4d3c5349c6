#include "doctest.h"
#include "helpers.hpp"
#include "symfun/errors.hpp"
#include "symfun/partition.hpp"

using namespace symfun;
using testing_helpers::P;
using testing_helpers::R;

TEST_CASE("enumeration") {
  const auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0] == P("4"));
  CHECK(four[1] == P("3,1"));
  CHECK(four[2] == P("2,2"));
  CHECK(four[3] == P("2,1,1"));
  CHECK(four[4] == P("1,1,1,1"));
  PartitionConstraints two;
  two.exact_length = 2;
  const auto three = enumerate_partitions(3, two);
  REQUIRE(three.size() == 1);
  CHECK(three[0] == P("2,1"));
  const auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < 10; ++n) CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(counts[n]));
  PartitionConstraints caps;
  caps.max_part = 2;
  caps.max_length = 3;
  CHECK(enumerate_partitions(5, caps) == std::vector<Partition>{P("2,2,1")});
}

TEST_CASE("canonical order is sorted and extends dominance") {
  const auto all = partitions_up_to(7);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
  for (int n = 1; n <= 7; ++n) {
    const auto ps = enumerate_partitions(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        CHECK(natural_compare(ps[i], ps[j]) != Dominance::Less);
      }
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(P("3,1")) == P("2,1,1"));
  CHECK(conjugate(P("2,2")) == P("2,2"));
  CHECK(conjugate(Partition()).empty());
  for (const auto& la : partitions_up_to(10)) CHECK(conjugate(conjugate(la)) == la);
}

TEST_CASE("natural ordering") {
  CHECK(natural_compare(P("2,2"), P("2,1,1")) == Dominance::Greater);
  CHECK(natural_compare(P("3,1,1,1"), P("2,2,2")) == Dominance::Incomparable);
  CHECK(natural_compare(P("2,1"), P("2,1")) == Dominance::Equal);
  CHECK(natural_compare(P("2,1"), P("2")) == Dominance::DifferentWeight);
  for (int n = 1; n <= 8; ++n) {
    const auto ps = enumerate_partitions(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        const Dominance ab = natural_compare(a, b);
        const Dominance ba = natural_compare(b, a);
        CHECK((ab == Dominance::Less) == (ba == Dominance::Greater));
        CHECK((ab == Dominance::Greater) == (natural_compare(conjugate(b), conjugate(a)) == Dominance::Greater));
        if (ab == Dominance::Greater) CHECK(a.length() <= b.length());
      }
    }
  }
}

TEST_CASE("statistics") {
  const auto s = stats(P("2,1,1"));
  CHECK(s.c == 2);
  CHECK(s.z == 4);
  CHECK(s.n_stat == 3);
  const auto s21 = stats(P("2,1"));
  CHECK(s21.c == 1);
  CHECK(s21.z == 2);
  CHECK(s21.n_stat == 1);
  const auto s0 = stats(Partition());
  CHECK(s0.c == 1);
  CHECK(s0.z == 1);
  CHECK(s0.n_stat == 0);
  for (const auto& la : partitions_up_to(8)) {
    const auto st = stats(la);
    CHECK(st.z % st.c == 0);
    CHECK(st.c > 0);
    CHECK(st.n_stat >= 0);
  }
}

TEST_CASE("t factors") {
  CHECK(RatFun(t_factors(P("2,2,1")).b) == R("(1-t)^2*(1-t^2)"));
  CHECK(*t_factors(Partition(), 2).v == R("1+t"));
  CHECK(t_factors(P("2")).z_t == R("2/(1-t^2)"));
  CHECK_THROWS_AS(t_factors(P("1,1,1"), 2), LengthExceedsN);
  for (const auto& la : partitions_up_to(6)) {
    const IntPoly2 b = t_factors(la).b;
    CHECK(b.coeff(0, 0) == 1);
  }
}

TEST_CASE("append one and box moves") {
  CHECK(append_one(P("3,1")) == P("3,1,1"));
  CHECK(append_one(Partition()) == P("1"));
  CHECK(append_one(P("1,1")) == P("1,1,1"));
  CHECK(add_box(P("2,1")) == std::vector<Partition>{P("3,1"), P("2,2"), P("2,1,1")});
  CHECK(remove_box(P("2,2,1")) == std::vector<Partition>{P("2,2"), P("2,1,1")});
  CHECK(added_box_index(P("2,2"), P("2,1")) == std::optional<std::size_t>(2));
  CHECK_FALSE(added_box_index(P("3"), P("1,1")).has_value());
  CHECK(is_horizontal_strip(P("2"), P("1")));
  CHECK_FALSE(is_horizontal_strip(P("2,2"), P("1")));
}

TEST_CASE("text form") {
  CHECK(P("2,1,1").to_string() == "2,1,1");
  CHECK(P("").empty());
  CHECK(P(" 3 , 1 ") == P("3,1"));
  CHECK_THROWS_AS(P("1,2"), InvalidPartition);
  CHECK_THROWS_AS(P("a"), InvalidPartition);
  CHECK_THROWS_AS(P("1,,2"), InvalidPartition);
}
