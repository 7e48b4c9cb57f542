#ifndef FFC_POLYNOMIAL_HPP
#define FFC_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ffc/polyring.hpp"

namespace ffc {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial: a term list strictly descending in
/// the ring's order, with no zero coefficients. The zero polynomial is
/// the empty list.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Builds from an arbitrary term list: sorts, merges duplicates,
  /// drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial_term(RingPtr ring, Monomial m, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const;

  /// All terms share one total degree (or f = 0).
  bool is_homogeneous() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;

  /// Exact quotient this / d; throws if the division leaves a
  /// remainder. Used by the fraction-free elimination path.
  Polynomial exact_div(const Polynomial& d) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;  // strictly descending
};

/// Parses the CLI polynomial syntax, e.g. "x^2*y - 3*z" ('*' and '^1'
/// optional). Throws StructuralError with position info on bad input.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace ffc

#endif
