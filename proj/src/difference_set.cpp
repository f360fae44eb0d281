#include "dsradar/difference_set.hpp"

#include <algorithm>
#include <unordered_set>

namespace dsradar {

bool parameter_check(long long modulus, long long size, long long multiplicity) {
  if (modulus <= 0 || size <= 0 || multiplicity <= 0) return false;
  return multiplicity * (modulus - 1) == size * (size - 1);
}

DifferenceHistogram difference_histogram(const std::vector<int>& elements, int modulus) {
  if (modulus < 2) throw OutOfRange("difference_histogram: modulus must be >= 2");
  for (int e : elements) {
    if (e < 0 || e >= modulus)
      throw OutOfRange("difference_histogram: element " + std::to_string(e) +
                       " outside [0, " + std::to_string(modulus) + ")");
  }
  DifferenceHistogram h;
  h.counts.assign(static_cast<std::size_t>(modulus), 0);
  const std::size_t k = elements.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      int d = elements[i] - elements[j];
      if (d < 0) d += modulus;
      ++h.counts[static_cast<std::size_t>(d)];
    }
  }
  return h;
}

DifferenceSet verify_difference_set(std::vector<int> elements, int modulus) {
  if (modulus < 2) throw OutOfRange("verify_difference_set: modulus must be >= 2");
  if (elements.empty()) throw OutOfRange("verify_difference_set: empty element set");
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw DuplicateElements("verify_difference_set: repeated element");

  const DifferenceHistogram h = difference_histogram(elements, modulus);
  const long long lambda = h.counts.size() > 1 ? h.counts[1] : 0;
  if (lambda <= 0)
    throw NotADifferenceSet("verify_difference_set: difference multiset is not flat");
  for (std::size_t d = 1; d < h.counts.size(); ++d) {
    if (h.counts[d] != lambda)
      throw NotADifferenceSet("verify_difference_set: difference " + std::to_string(d) +
                              " occurs " + std::to_string(h.counts[d]) + " times, expected " +
                              std::to_string(lambda));
  }

  DifferenceSet ds;
  ds.modulus = modulus;
  ds.size = static_cast<int>(elements.size());
  ds.multiplicity = static_cast<int>(lambda);
  ds.elements = std::move(elements);
  return ds;
}

std::vector<int> shift_to_symmetric(const std::vector<int>& elements, int modulus) {
  std::vector<int> shifted;
  shifted.reserve(elements.size());
  const int half = modulus / 2;
  for (int e : elements) shifted.push_back(e > half ? e - modulus : e);
  std::sort(shifted.begin(), shifted.end());
  return shifted;
}

std::vector<int> equivalent_shift(const DifferenceSet& ds) {
  return shift_to_symmetric(ds.elements, ds.modulus);
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

DifferenceSet quadratic_residue_ds(int p) {
  if (!is_prime(p)) throw NotPrime("quadratic_residue_ds: " + std::to_string(p) + " is not prime");
  if (p % 4 != 3)
    throw WrongResidueClass("quadratic_residue_ds: " + std::to_string(p) + " != 3 (mod 4)");
  std::unordered_set<int> squares;
  for (int x = 1; x < p; ++x)
    squares.insert(static_cast<int>((static_cast<long long>(x) * x) % p));
  std::vector<int> elements(squares.begin(), squares.end());
  return verify_difference_set(std::move(elements), p);
}

namespace {

struct CatalogEntry {
  const char* name;
  int modulus;
  std::vector<int> elements;
};

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"91-10-1", 91, {0, 1, 3, 9, 27, 49, 56, 61, 77, 81}},
      {"993-32-1",
       993,
       {0,   1,   33,  86,  90,  132, 148, 168, 191, 213, 241, 251, 260, 262, 265, 446,
        490, 507, 586, 615, 650, 656, 663, 690, 774, 792, 800, 872, 887, 926, 938, 963}},
      {"2863-54-1",
       2863,
       {0,    1,    18,   90,   101,  354,  429,  490,  514,  612,  620,  622,  671, 731,
        753,  797,  809,  849,  911,  1054, 1074, 1083, 1087, 1171, 1178, 1199, 1236, 1306,
        1387, 1458, 1622, 1637, 1669, 1672, 1714, 1837, 1843, 1868, 1873, 1916, 1942, 1983,
        2010, 2029, 2063, 2086, 2149, 2213, 2347, 2361, 2516, 2555, 2571, 2609}},
  };
  return entries;
}

}  // namespace

DifferenceSet catalog(const std::string& name) {
  for (const auto& entry : catalog_entries()) {
    if (name == entry.name) return verify_difference_set(entry.elements, entry.modulus);
  }
  throw UnknownName("catalog: unknown difference set '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : catalog_entries()) names.emplace_back(entry.name);
  return names;
}

}  // namespace dsradar
