#ifndef FFC_SCALAR_HPP
#define FFC_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ffc {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ill-formed inputs: arity mismatches, ring mismatches, non-square
/// matrices, broken complexes.
struct StructuralError : Error {
  using Error::Error;
};

/// Raised when a Gröbner computation exceeds the configured budget.
struct TimeoutError : Error {
  using Error::Error;
};

enum class FieldKind { Rationals, PrimeField };

/// Exact scalars. Rationals are always-reduced mpq; prime-field values
/// are canonical representatives in [0, p) with denominator 1.
using Scalar = mpq_class;

/// The coefficient field: Q or F_p for prime p.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(0); }
  static CoefficientField prime_field(unsigned long p);

  FieldKind kind() const {
    return char_ == 0 ? FieldKind::Rationals : FieldKind::PrimeField;
  }
  unsigned long characteristic() const { return char_; }

  /// Canonical form: reduced fraction over Q, representative in [0, p)
  /// over F_p.
  Scalar normalize(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return normalize(a) == 0; }

  bool operator==(const CoefficientField& o) const { return char_ == o.char_; }
  bool operator!=(const CoefficientField& o) const { return char_ != o.char_; }

  std::string to_string() const;

 private:
  explicit CoefficientField(unsigned long c) : char_(c) {}
  unsigned long char_;  // 0 for Q, prime p otherwise
};

std::string scalar_to_string(const Scalar& a);

}  // namespace ffc

#endif
