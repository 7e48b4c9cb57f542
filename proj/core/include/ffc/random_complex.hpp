#ifndef FFC_RANDOM_COMPLEX_HPP
#define FFC_RANDOM_COMPLEX_HPP

#include <random>

#include "ffc/complexes.hpp"

namespace ffc {

struct RandomComplexOptions {
  int vars = 3;
  int max_degree = 2;    // cap on differential entry degrees
  int max_rank = 3;      // cap on ranks per degree
  int length = 4;        // cap on b - a
  bool homogeneous_only = false;
};

/// Standard variable names x,y,z,w then x5,x6,...
std::vector<std::string> default_variables(int vars);

/// A random polynomial with 1..3 terms of total degree <= max_degree
/// (at least one nonzero term).
Polynomial random_polynomial(const RingPtr& ring, int max_degree,
                             std::mt19937_64& rng, bool homogeneous = false);

/// A random valid complex: a direct sum of shifted Koszul complexes,
/// free modules and split-exact pieces, scrambled by invertible
/// elementary row/column changes of basis. Always passes validation;
/// entry degrees stay within max_degree.
FiniteFreeComplex random_complex(const RingPtr& ring,
                                 const RandomComplexOptions& opts,
                                 std::mt19937_64& rng);

}  // namespace ffc

#endif
