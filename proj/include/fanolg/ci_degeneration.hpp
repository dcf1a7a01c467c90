#pragma once

#include "fanolg/cone.hpp"
#include "fanolg/laurent.hpp"
#include "fanolg/report.hpp"

#include <vector>

namespace fanolg {

struct WeightedCI {
  std::vector<long> weights;  // nondecreasing
  std::vector<long> degrees;  // n_1..n_k
  long index() const;         // n_0
  void validate() const;
};

struct NefPartition {
  // groups[i] lists indices into the weight vector; groups[0] is I_0
  std::vector<std::vector<std::size_t>> groups;
  // weights of group i with the constant slot first: w_i0, w_i1, ..., w_im_i
  std::vector<std::vector<long>> slot_weights;
  std::vector<long> degrees;  // n_0, n_1, ..., n_k

  std::size_t k() const { return groups.size() - 1; }
  std::size_t m(std::size_t i) const { return slot_weights[i].size() - 1; }
  std::size_t lattice_rank() const;
  // Position of variable x_ij (j >= 1) in the lattice N: groups 1..k, then group 0.
  std::size_t variable(std::size_t i, std::size_t j) const;
};

NefPartition find_nef_partition(const WeightedCI& x);
LaurentPolynomial hori_vafa(const NefPartition& p);

struct AltmannEmbedding {
  std::size_t n_rank = 0;  // rank of N; N-hat has rank n_rank + k + 1
  std::vector<IntVector> hat_cone_generators;
  std::vector<IntVector> dual_generators;       // computed, sorted as the family below
  std::vector<IntVector> expected_dual;         // b*_ij + w_ij c0*, c0*, c_i* - sum_j (b*_ij + w_ij c0*)
  IntVector grading;                            // c_0 + sum n_i c_i
  std::vector<long> generator_weights;          // in the order of expected_dual
  Integer dual_determinant;
  // exponent vectors in the basis of dual generators: (n_i c0*, c_i*)
  std::vector<std::pair<IntVector, IntVector>> binomials;
  bool dual_matches_family = false;
};

AltmannEmbedding altmann_embedding(const NefPartition& p);
// The displayed dual family with the sign of w_ij c0* in the third family as printed (minus).
std::vector<IntVector> literal_third_family(const NefPartition& p);
// Lattice automorphism of N + Z sending b_0j to b_0j - c.
std::vector<std::vector<std::int64_t>> sigma_prime_map(const NefPartition& p);

VerificationReport verify_thm_ci(const WeightedCI& x);

std::string partition_summary(const NefPartition& p);

}  // namespace fanolg
