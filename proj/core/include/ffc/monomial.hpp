#ifndef FFC_MONOMIAL_HPP
#define FFC_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "ffc/scalar.hpp"

namespace ffc {

enum class MonomialOrder { Lex, GrevLex };

/// A power product x1^e1 ... xv^ev, stored as the exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> exps) : e_(std::move(exps)) {}
  static Monomial one(int arity) {
    return Monomial(std::vector<std::int64_t>(arity, 0));
  }

  int arity() const { return static_cast<int>(e_.size()); }
  std::int64_t exponent(int i) const { return e_[i]; }
  const std::vector<std::int64_t>& exponents() const { return e_; }

  std::int64_t degree() const;
  bool is_one() const;

  /// Exponent overflow is a checked error.
  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial divided_by(const Monomial& o) const;
  Monomial lcm_with(const Monomial& o) const;

  /// Bitmask of variables appearing with positive exponent.
  std::uint64_t support() const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::int64_t> e_;
};

/// Three-way comparison in the given order: negative, zero, positive
/// for m1 < m2, m1 = m2, m1 > m2. Arity mismatch is a structural error.
int monomial_compare(MonomialOrder order, const Monomial& m1,
                     const Monomial& m2);

const char* order_name(MonomialOrder o);

}  // namespace ffc

#endif
