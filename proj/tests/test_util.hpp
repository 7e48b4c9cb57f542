#ifndef FFC_TEST_UTIL_HPP
#define FFC_TEST_UTIL_HPP

#include <random>

#include "ffc/polynomial.hpp"

namespace ffc::test {

inline RingPtr qq_ring(std::vector<std::string> vars,
                       MonomialOrder order = MonomialOrder::GrevLex) {
  return make_ring(CoefficientField::rationals(), std::move(vars), order);
}

inline RingPtr fp_ring(std::vector<std::string> vars,
                       unsigned long p = 32003,
                       MonomialOrder order = MonomialOrder::GrevLex) {
  return make_ring(CoefficientField::prime_field(p), std::move(vars), order);
}

inline Polynomial pp(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

/// Small random polynomial for property tests: up to `terms` terms of
/// total degree <= maxdeg, possibly zero.
inline Polynomial small_random_poly(const RingPtr& ring, int maxdeg,
                                    std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> nterms(0, terms);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expd(0, maxdeg);
  std::vector<Term> ts;
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<std::int64_t> e(ring->arity(), 0);
    int budget = expd(rng);
    std::uniform_int_distribution<int> var(0, ring->arity() - 1);
    for (int i = 0; i < budget; ++i) ++e[static_cast<std::size_t>(var(rng))];
    ts.push_back(Term{Monomial(std::move(e)), Scalar(coeff(rng))});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

inline Monomial random_mono(const RingPtr& ring, int maxdeg,
                            std::mt19937_64& rng) {
  std::vector<std::int64_t> e(ring->arity(), 0);
  std::uniform_int_distribution<int> expd(0, maxdeg);
  std::uniform_int_distribution<int> var(0, ring->arity() - 1);
  int budget = expd(rng);
  for (int i = 0; i < budget; ++i) ++e[static_cast<std::size_t>(var(rng))];
  return Monomial(std::move(e));
}

}  // namespace ffc::test

#endif
