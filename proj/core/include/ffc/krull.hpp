#ifndef FFC_KRULL_HPP
#define FFC_KRULL_HPP

#include <string>
#include <vector>

#include "ffc/groebner.hpp"

namespace ffc {

/// An integer extended with -inf (dimension of the zero module) and
/// +inf (grade of the unit ideal).
class ExtendedDim {
 public:
  static ExtendedDim minus_infinity() { return ExtendedDim(Kind::NegInf, 0); }
  static ExtendedDim plus_infinity() { return ExtendedDim(Kind::PosInf, 0); }
  static ExtendedDim finite(long long v) { return ExtendedDim(Kind::Finite, v); }

  bool is_minus_infinity() const { return kind_ == Kind::NegInf; }
  bool is_plus_infinity() const { return kind_ == Kind::PosInf; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  long long value() const;

  /// -inf + n = -inf, +inf + n = +inf.
  ExtendedDim operator+(long long n) const;
  ExtendedDim operator-(long long n) const { return *this + (-n); }

  bool operator==(const ExtendedDim& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Finite || v_ == o.v_);
  }
  bool operator!=(const ExtendedDim& o) const { return !(*this == o); }
  bool operator<(const ExtendedDim& o) const;
  bool operator<=(const ExtendedDim& o) const { return *this < o || *this == o; }
  bool operator>(const ExtendedDim& o) const { return o < *this; }
  bool operator>=(const ExtendedDim& o) const { return o <= *this; }

  static ExtendedDim max(const ExtendedDim& a, const ExtendedDim& b) {
    return a < b ? b : a;
  }

  /// "-inf" / "inf" / decimal.
  std::string to_string() const;

 private:
  enum class Kind { NegInf, Finite, PosInf };
  ExtendedDim(Kind k, long long v) : kind_(k), v_(v) {}
  Kind kind_;
  long long v_;
};

/// Krull dimension of R/(monomial ideal): the largest cardinality of a
/// variable subset S such that no generator is supported inside S.
/// A unit generator makes the quotient the zero ring (-inf).
ExtendedDim dim_monomial_quotient(const PolyRing& ring,
                                  const std::vector<Monomial>& monomials);

/// Krull dimension of R/I via the initial ideal of the reduced basis.
ExtendedDim dim_quotient(const IdealHandle& ideal);

/// Height of a proper ideal: arity - dim R/I. For the unit ideal the
/// height is undefined; following the grade convention this returns
/// +inf (used by the acyclicity test, where grade of R is vacuous).
ExtendedDim height_of(const IdealHandle& ideal);

}  // namespace ffc

#endif
