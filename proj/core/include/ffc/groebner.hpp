#ifndef FFC_GROEBNER_HPP
#define FFC_GROEBNER_HPP

#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ffc/polynomial.hpp"

namespace ffc {

/// A Gröbner basis for some ideal under a fixed order. When `reduced`
/// is set the elements are monic, auto-reduced, and unique for the
/// (ideal, order) pair.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order;
  bool reduced = false;
};

/// An ideal of the polynomial ring, held as its generators plus a
/// lazily computed reduced-basis cache. The cache is single-assignment.
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// The unique reduced Gröbner basis; computed on first use.
  const GroebnerBasis& reduced_basis() const;

  bool is_unit() const;  // 1 ∈ I
  bool is_zero() const;  // I = (0)
  bool contains(const Polynomial& f) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::optional<GroebnerBasis> cache_;
};

/// Multivariate division remainder of f against `basis`: no monomial of
/// the result is divisible by any basis leading monomial, and f minus
/// the result lies in the ideal the basis generates.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Buchberger's algorithm with normal pair selection and the
/// coprimality and chain criteria, followed by auto-reduction.
GroebnerBasis reduced_groebner_basis(const RingPtr& ring,
                                     const std::vector<Polynomial>& gens);

/// Minimal generators of in(I): leading monomials of a reduced basis.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

}  // namespace ffc

#endif
