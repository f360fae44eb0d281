#include <doctest.h>

#include <algorithm>
#include <map>

#include "dsradar/difference_set.hpp"
#include "dsradar/rng.hpp"

using namespace dsradar;

namespace {

// Independent difference enumeration used as the oracle for the library's
// histogram and verifier.
std::map<int, int> brute_force_differences(const std::vector<int>& elements, int modulus) {
  std::map<int, int> counts;
  for (int a : elements)
    for (int b : elements)
      if (a != b) ++counts[((a - b) % modulus + modulus) % modulus];
  return counts;
}

bool brute_force_is_difference_set(const std::vector<int>& elements, int modulus) {
  const auto counts = brute_force_differences(elements, modulus);
  if (counts.empty() || counts.count(0)) return false;
  if (static_cast<int>(counts.size()) != modulus - 1) return false;
  const int lambda = counts.begin()->second;
  return std::all_of(counts.begin(), counts.end(),
                     [&](const auto& kv) { return kv.second == lambda; });
}

std::vector<int> primes_3_mod_4(int limit) {
  // starts at 7: p = 3 yields the degenerate single-residue set
  std::vector<int> primes;
  for (int p = 7; p <= limit; p += 4) {
    bool prime = p > 1;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) primes.push_back(p);
  }
  return primes;
}

}  // namespace

TEST_CASE("parameter relation") {
  CHECK(parameter_check(91, 10, 1));
  CHECK(parameter_check(2863, 54, 1));  // 54 * 53 == 2862
  CHECK_FALSE(parameter_check(7, 3, 2));
  CHECK_FALSE(parameter_check(0, 1, 1));
}

TEST_CASE("difference histogram matches brute force") {
  SUBCASE("{1,2,4} mod 7 is flat at 1") {
    const auto h = difference_histogram({1, 2, 4}, 7);
    REQUIRE(h.counts.size() == 7);
    CHECK(h.counts[0] == 0);
    for (int d = 1; d < 7; ++d) CHECK(h.counts[static_cast<std::size_t>(d)] == 1);
  }
  SUBCASE("{0,1} mod 4") {
    const auto h = difference_histogram({0, 1}, 4);
    CHECK(h.counts == std::vector<long long>{0, 1, 0, 1});
  }
  SUBCASE("random sets agree with the enumeration oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const int modulus = static_cast<int>(rng.uniform_int(2, 40));
      std::vector<int> elements;
      for (int e = 0; e < modulus; ++e)
        if (rng.uniform() < 0.4) elements.push_back(e);
      if (elements.empty()) elements.push_back(0);
      const auto h = difference_histogram(elements, modulus);
      const auto oracle = brute_force_differences(elements, modulus);
      long long total = 0;
      for (int d = 0; d < modulus; ++d) {
        const auto it = oracle.find(d);
        CHECK(h.counts[static_cast<std::size_t>(d)] == (it == oracle.end() ? 0 : it->second));
        total += h.counts[static_cast<std::size_t>(d)];
      }
      const long long k = static_cast<long long>(elements.size());
      CHECK(total == k * (k - 1));
    }
  }
  SUBCASE("out of range rejected") {
    CHECK_THROWS_AS(difference_histogram({0, 7}, 7), OutOfRange);
    CHECK_THROWS_AS(difference_histogram({-1, 2}, 7), OutOfRange);
  }
}

TEST_CASE("verify_difference_set") {
  SUBCASE("paper sets verify with lambda 1") {
    for (const char* name : {"91-10-1", "993-32-1", "2863-54-1"}) {
      const DifferenceSet ds = catalog(name);
      CHECK(ds.multiplicity == 1);
      CHECK(parameter_check(ds.modulus, ds.size, ds.multiplicity));
      CHECK(brute_force_is_difference_set(ds.elements, ds.modulus));
    }
  }
  SUBCASE("(91,10,1) element list") {
    const DifferenceSet ds = catalog("91-10-1");
    CHECK(ds.elements == std::vector<int>{0, 1, 3, 9, 27, 49, 56, 61, 77, 81});
  }
  SUBCASE("{1,2,4} mod 7 verifies") {
    const DifferenceSet ds = verify_difference_set({1, 2, 4}, 7);
    CHECK(ds.multiplicity == 1);
    CHECK(ds.size == 3);
  }
  SUBCASE("{0,1,2} mod 7 is rejected") {
    CHECK_THROWS_AS(verify_difference_set({0, 1, 2}, 7), NotADifferenceSet);
  }
  SUBCASE("duplicates and range checks") {
    CHECK_THROWS_AS(verify_difference_set({1, 1, 4}, 7), DuplicateElements);
    CHECK_THROWS_AS(verify_difference_set({1, 2, 9}, 7), OutOfRange);
    CHECK_THROWS_AS(verify_difference_set({}, 7), OutOfRange);
  }
}

TEST_CASE("equivalent shift") {
  SUBCASE("(91,10,1) matches the printed indices") {
    CHECK(equivalent_shift(catalog("91-10-1")) ==
          std::vector<int>{-42, -35, -30, -14, -10, 0, 1, 3, 9, 27});
  }
  SUBCASE("(993,32,1) starts -486,-407,-378 and includes -201") {
    const auto shifted = equivalent_shift(catalog("993-32-1"));
    REQUIRE(shifted.size() == 32);
    CHECK(shifted[0] == -486);
    CHECK(shifted[1] == -407);
    CHECK(shifted[2] == -378);
    CHECK(std::count(shifted.begin(), shifted.end(), -201) == 1);
  }
  SUBCASE("(2863,54,1) starts -1405,-1241,-1226") {
    const auto shifted = equivalent_shift(catalog("2863-54-1"));
    REQUIRE(shifted.size() == 54);
    CHECK(shifted[0] == -1405);
    CHECK(shifted[1] == -1241);
    CHECK(shifted[2] == -1226);
  }
  SUBCASE("no element above N/2 stays put") {
    CHECK(shift_to_symmetric({0, 1}, 4) == std::vector<int>{0, 1});
  }
  SUBCASE("shifted sets re-verify after mod-N reduction") {
    for (const char* name : {"91-10-1", "993-32-1"}) {
      const DifferenceSet ds = catalog(name);
      std::vector<int> reduced;
      for (int e : equivalent_shift(ds)) reduced.push_back(((e % ds.modulus) + ds.modulus) % ds.modulus);
      const DifferenceSet again = verify_difference_set(reduced, ds.modulus);
      CHECK(again.size == ds.size);
      CHECK(again.multiplicity == ds.multiplicity);
    }
  }
}

TEST_CASE("quadratic residue difference sets") {
  SUBCASE("p = 7") {
    const DifferenceSet ds = quadratic_residue_ds(7);
    CHECK(ds.elements == std::vector<int>{1, 2, 4});
    CHECK(ds.multiplicity == 1);
  }
  SUBCASE("p = 11") {
    const DifferenceSet ds = quadratic_residue_ds(11);
    CHECK(ds.elements == std::vector<int>{1, 3, 4, 5, 9});
    CHECK(ds.multiplicity == 2);
  }
  SUBCASE("p = 19") {
    const DifferenceSet ds = quadratic_residue_ds(19);
    CHECK(ds.size == 9);
    CHECK(ds.multiplicity == 4);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(quadratic_residue_ds(8), NotPrime);
    CHECK_THROWS_AS(quadratic_residue_ds(13), WrongResidueClass);
  }
  SUBCASE("every prime p = 3 mod 4 up to 1000 verifies") {
    for (int p : primes_3_mod_4(1000)) {
      const DifferenceSet ds = quadratic_residue_ds(p);
      CHECK(ds.size == (p - 1) / 2);
      CHECK(ds.multiplicity == (p - 3) / 4);
      CHECK(parameter_check(ds.modulus, ds.size, ds.multiplicity));
    }
  }
}

TEST_CASE("catalog") {
  CHECK(catalog("2863-54-1").elements.back() == 2609);
  CHECK_THROWS_AS(catalog("5-2-x"), UnknownName);
  CHECK(catalog_names().size() == 3);
}
