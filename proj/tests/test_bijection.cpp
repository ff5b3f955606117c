#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "avoid/bijection.hpp"
#include "avoid/enumeration.hpp"
#include "avoid/errors.hpp"

using namespace avoid;

namespace {

Permutation P(std::string_view text) { return parse_permutation(text); }

}  // namespace

TEST_CASE("crucial_forward: key case example") {
  const auto step = crucial_forward(P("11 2 12 9 7 8 4 5 6 1 10 3"), Checks::on);
  CHECK(step.sigma1 == P("8 1 9 6 4 5 2 3 7"));
  CHECK(step.sigma2 == P("2 1 4 3"));
  CHECK(step.b_value == 6);
  CHECK(step.a_value == 2);
  CHECK(step.c_value == 10);
  CHECK(step.j == 9);
  CHECK(step.key_case);
  CHECK(step.r == 0);
}

TEST_CASE("crucial_forward: non-key case example") {
  const auto step = crucial_forward(P("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4"), Checks::on);
  CHECK(step.sigma1 == P("9 12 8 4 11 5 6 7 10 3 2 1"));
  CHECK(step.sigma2 == P("3 2 1 5 4"));
  CHECK(step.b_value == 5);
  CHECK(step.a_value == 3);
  CHECK(step.c_value == 14);
  CHECK(step.j == 12);
  CHECK_FALSE(step.key_case);
  CHECK(step.r == 3);
}

TEST_CASE("crucial_forward: identity") {
  const auto step = crucial_forward(P("1 2 3 4 5"), Checks::on);
  CHECK(step.sigma1 == P("1 2 3 4"));
  CHECK(step.sigma2 == P("1 2"));
  CHECK(step.b_value == 4);
  CHECK(step.a_value == 1);
  CHECK(step.c_value == 5);
  CHECK(step.key_case);
}

TEST_CASE("crucial_forward rejects inputs outside the domain") {
  CHECK_THROWS_WITH_AS(crucial_forward(P("1 2 4 3")), doctest::Contains("1243"), DomainError);
  CHECK_THROWS_WITH_AS(crucial_forward(P("2 1 3 4")), doctest::Contains("2134"), DomainError);
  CHECK_THROWS_WITH_AS(crucial_forward(P("3 1 2")), doctest::Contains("start-small"), DomainError);
  CHECK_THROWS_WITH_AS(crucial_forward(P("3 4 1 2")), doctest::Contains("mid-123"), DomainError);
}

TEST_CASE("inverse parameters of the non-key example") {
  const auto ip = inverse_params(P("9 12 8 4 11 5 6 7 10 3 2 1"), P("3 2 1 5 4"));
  CHECK(ip.n == 16);
  CHECK(ip.j == 12);
  CHECK(ip.r == 3);
  CHECK(ip.p == 9);
  CHECK(ip.q == 4);
  CHECK(ip.s == 4);
  CHECK(ip.i_pos == 4);
  CHECK(ip.k_pos == 15);
  CHECK(ip.a_value == 3);
  CHECK(ip.c_value == 14);
}

TEST_CASE("crucial_inverse examples") {
  CHECK(crucial_inverse(P("9 12 8 4 11 5 6 7 10 3 2 1"), P("3 2 1 5 4")) ==
        P("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4"));

  const auto ip = inverse_params(P("8 1 9 6 4 5 2 3 7"), P("2 1 4 3"));
  CHECK(ip == InverseParams{12, 9, 0, 9, 3, 2, 11, 2, 10, 3});
  CHECK(crucial_inverse(P("8 1 9 6 4 5 2 3 7"), P("2 1 4 3")) == P("11 2 12 9 7 8 4 5 6 1 10 3"));

  const auto small = inverse_params(P("1 2"), P("1 2"));
  CHECK(small.n == 3);
  CHECK(small.r == 0);
  CHECK(small.s == 1);
  CHECK(small.a_value == 1);
  CHECK(small.c_value == 3);
  CHECK(crucial_inverse(P("1 2"), P("1 2")) == P("1 2 3"));
}

TEST_CASE("crucial_inverse validates its inputs") {
  CHECK_THROWS_WITH_AS(crucial_inverse(P("2 1"), P("1 2")), doctest::Contains("sigma1"), DomainError);
  CHECK_THROWS_WITH_AS(crucial_inverse(P("1"), P("1 2")), doctest::Contains("sigma1"), DomainError);
  CHECK_THROWS_WITH_AS(crucial_inverse(P("1 2 4 3"), P("1 2")), doctest::Contains("1243"), DomainError);
  CHECK_THROWS_WITH_AS(crucial_inverse(P("1 2"), P("1 2 3")), doctest::Contains("sigma2: contains 123"),
                       DomainError);
  CHECK_THROWS_WITH_AS(crucial_inverse(P("1 2"), P("2 1")), doctest::Contains("sigma2"), DomainError);
}

TEST_CASE("phi examples") {
  CHECK(to_string(phi(P("1 2 3 4 5"))) == "1 2 | 1 2 | 1 2 | 1 2");
  CHECK(phi(P("3 4 1 2")) == StartSmallList{P("3 4 1 2")});
  CHECK(phi(P("1 2 3")) == StartSmallList{P("1 2"), P("1 2")});
  const auto list = phi(P("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4"));
  CHECK(list.back() == P("3 2 1 5 4"));
  CHECK_THROWS_AS(phi(P("4 1 2 3")), DomainError);
  CHECK_THROWS_AS(phi(P("1")), DomainError);
}

TEST_CASE("phi_inverse examples") {
  CHECK(phi_inverse(parse_start_small_list("1 2 | 1 2 | 1 2 | 1 2")) == P("1 2 3 4 5"));
  CHECK(phi_inverse({P("3 4 1 2")}) == P("3 4 1 2"));
  CHECK(phi_inverse({P("9 12 8 4 11 5 6 7 10 3 2 1"), P("3 2 1 5 4")}) ==
        P("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4"));
}

TEST_CASE("phi_inverse names the offending element") {
  CHECK_THROWS_WITH_AS(phi_inverse({P("1 2"), P("1 2 3")}), doctest::Contains("list element 2"), DomainError);
  CHECK_THROWS_WITH_AS(phi_inverse({P("2 1"), P("1 2")}), doctest::Contains("list element 1"), DomainError);
  CHECK_THROWS_WITH_AS(phi_inverse({P("1 2"), P("1")}), doctest::Contains("list element 2"), DomainError);
  CHECK_THROWS_AS(phi_inverse({}), DomainError);
}

TEST_CASE("list text format") {
  const auto list = parse_start_small_list("3 2 1 5 4 | 1 2");
  CHECK(list == StartSmallList{P("3 2 1 5 4"), P("1 2")});
  CHECK(to_string(list) == "3 2 1 5 4 | 1 2");
  CHECK_THROWS_AS(parse_start_small_list("1 2 |"), InvalidInput);
}

TEST_CASE("round trips and typing over A(n), n <= 9") {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::set<StartSmallList> images;
    for (const auto& p : enumerate_class(start_small_avoider_class(n))) {
      const auto k = key_mid123_entries(p).size();
      if (k > 0) {
        const auto step = crucial_forward(p, Checks::on);
        REQUIRE(step.j == *last_mid123_position(p));
        REQUIRE(step.sigma1.size() == step.j);
        REQUIRE(key_mid123_entries(step.sigma1).size() == k - 1);
        REQUIRE(step.sigma2.size() == n + 1 - step.j);
        REQUIRE(key_mid123_entries(step.sigma2).empty());
        if (!step.key_case) REQUIRE(step.r >= 1);
        REQUIRE(crucial_inverse(step.sigma1, step.sigma2) == p);
      }
      const auto list = phi(p);
      REQUIRE(list.size() == k + 1);
      std::size_t total = 0;
      for (const auto& e : list) total += e.size();
      REQUIRE(total == n + k);
      REQUIRE(phi_inverse(list) == p);
      REQUIRE(images.insert(list).second);
    }
  }
}

TEST_CASE("forward of inverse over all pairs, combined length <= 9") {
  constexpr std::size_t kMax = 9;
  std::vector<std::vector<Permutation>> avoiders(kMax + 1);
  std::vector<std::vector<Permutation>> small(kMax + 1);
  for (std::size_t n = 2; n <= kMax; ++n) {
    avoiders[n] = enumerate_class(start_small_avoider_class(n));
    small[n] = enumerate_class(start_small_avoider_class(n, 0));
  }
  for (std::size_t len1 = 2; len1 < kMax; ++len1) {
    for (std::size_t len2 = 2; len1 + len2 - 1 <= kMax; ++len2) {
      for (const auto& s1 : avoiders[len1]) {
        for (const auto& s2 : small[len2]) {
          const auto ip = inverse_params(s1, s2);
          REQUIRE(ip.s >= 1);
          REQUIRE(ip.i_pos < ip.p);
          const auto step = crucial_forward(crucial_inverse(s1, s2), Checks::on);
          REQUIRE(step.sigma1 == s1);
          REQUIRE(step.sigma2 == s2);
          REQUIRE(step.r == ip.r);
        }
      }
    }
  }
}

TEST_CASE("phi image count matches weighted compositions, n <= 9") {
  // Lists of start-small 123-avoiders with sizes (length - 1) summing to n - 1.
  std::vector<oracle::Big> weight(10, 0);
  for (std::size_t size = 1; size < weight.size(); ++size) {
    weight[size] = oracle::catalan(size + 1) - oracle::catalan(size);
  }
  for (std::size_t n = 2; n <= 9; ++n) {
    CHECK(count_class(start_small_avoider_class(n)) == oracle::compositions(n - 1, weight));
  }
}

TEST_CASE("phi of phi_inverse over every list of total size <= 7") {
  // Size of an element is its length minus 1.
  constexpr std::size_t kMaxSize = 7;
  std::vector<std::vector<Permutation>> small(kMaxSize + 2);
  for (std::size_t len = 2; len <= kMaxSize + 1; ++len) small[len] = enumerate_class(start_small_avoider_class(len, 0));

  std::size_t lists = 0;
  std::function<void(StartSmallList&, std::size_t)> extend = [&](StartSmallList& list, std::size_t budget) {
    if (!list.empty()) {
      ++lists;
      const auto pi = phi_inverse(list);
      REQUIRE(phi(pi) == list);
    }
    for (std::size_t len = 2; len <= budget + 1; ++len) {
      for (const auto& e : small[len]) {
        list.push_back(e);
        extend(list, budget - (len - 1));
        list.pop_back();
      }
    }
  };
  StartSmallList list;
  extend(list, kMaxSize);
  CHECK(lists > 1000);
}
