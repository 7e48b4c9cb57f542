#include "ffc/monomial.hpp"

#include <limits>

namespace ffc {

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : e_)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::times(const Monomial& o) const {
  if (arity() != o.arity()) throw StructuralError("monomial arity mismatch");
  std::vector<std::int64_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > std::numeric_limits<std::int64_t>::max() - o.e_[i])
      throw StructuralError("exponent overflow in monomial product");
    r[i] = e_[i] + o.e_[i];
  }
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  if (arity() != o.arity()) throw StructuralError("monomial arity mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  if (arity() != o.arity()) throw StructuralError("monomial arity mismatch");
  std::vector<std::int64_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < o.e_[i]) throw StructuralError("monomial quotient undefined");
    r[i] = e_[i] - o.e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::lcm_with(const Monomial& o) const {
  if (arity() != o.arity()) throw StructuralError("monomial arity mismatch");
  std::vector<std::int64_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i)
    r[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
  return Monomial(std::move(r));
}

std::uint64_t Monomial::support() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) m |= (std::uint64_t{1} << i);
  return m;
}

int monomial_compare(MonomialOrder order, const Monomial& m1,
                     const Monomial& m2) {
  if (m1.arity() != m2.arity())
    throw StructuralError("monomial arity mismatch in comparison");
  const int v = m1.arity();
  switch (order) {
    case MonomialOrder::Lex:
      for (int i = 0; i < v; ++i) {
        if (m1.exponent(i) != m2.exponent(i))
          return m1.exponent(i) > m2.exponent(i) ? 1 : -1;
      }
      return 0;
    case MonomialOrder::GrevLex: {
      const std::int64_t d1 = m1.degree(), d2 = m2.degree();
      if (d1 != d2) return d1 > d2 ? 1 : -1;
      // equal degree: last nonzero entry of m1 - m2 negative means m1 > m2
      for (int i = v - 1; i >= 0; --i) {
        const std::int64_t diff = m1.exponent(i) - m2.exponent(i);
        if (diff != 0) return diff < 0 ? 1 : -1;
      }
      return 0;
    }
  }
  throw StructuralError("unknown monomial order");
}

const char* order_name(MonomialOrder o) {
  return o == MonomialOrder::Lex ? "lex" : "grevlex";
}

}  // namespace ffc
