#pragma once

#include <string>
#include <vector>

#include "dsradar/errors.hpp"

namespace dsradar {

// (N,K,lambda) difference set: K distinct residues mod N whose K(K-1)
// pairwise modular differences cover every nonzero residue exactly lambda
// times. Immutable once constructed through verify_difference_set.
struct DifferenceSet {
  int modulus = 0;       // N
  int size = 0;          // K
  int multiplicity = 0;  // lambda
  std::vector<int> elements;  // sorted, distinct, in [0, N)
};

// counts[d] = number of ordered pairs (k,l), k != l, with
// (kappa_k - kappa_l) mod N == d. counts[0] == 0, sum == K(K-1).
struct DifferenceHistogram {
  std::vector<long long> counts;
};

// lambda (N-1) == K (K-1); necessary for any (N,K,lambda) difference set.
bool parameter_check(long long modulus, long long size, long long multiplicity);

DifferenceHistogram difference_histogram(const std::vector<int>& elements, int modulus);

// Accepts exactly when the difference histogram is flat; lambda is inferred.
DifferenceSet verify_difference_set(std::vector<int> elements, int modulus);

// Symmetric representative rule: kappa -> kappa - N iff kappa > floor(N/2).
// Works on raw residue lists; no difference-set property required.
std::vector<int> shift_to_symmetric(const std::vector<int>& elements, int modulus);
std::vector<int> equivalent_shift(const DifferenceSet& ds);

// Quadratic residues mod p form a (p, (p-1)/2, (p-3)/4) difference set for
// prime p = 3 (mod 4). Small-instance generator for tests and demos.
DifferenceSet quadratic_residue_ds(int p);

// Built-in sets; re-verified on every lookup so a data typo fails fast.
DifferenceSet catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace dsradar
