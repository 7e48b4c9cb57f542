#include "ffc/krull.hpp"

#include <bit>

namespace ffc {

long long ExtendedDim::value() const {
  if (kind_ != Kind::Finite)
    throw StructuralError("extended dimension is not finite");
  return v_;
}

ExtendedDim ExtendedDim::operator+(long long n) const {
  if (kind_ != Kind::Finite) return *this;
  return finite(v_ + n);
}

bool ExtendedDim::operator<(const ExtendedDim& o) const {
  if (kind_ == o.kind_) return kind_ == Kind::Finite && v_ < o.v_;
  if (kind_ == Kind::NegInf) return true;
  if (kind_ == Kind::PosInf) return false;
  return o.kind_ == Kind::PosInf;
}

std::string ExtendedDim::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    default:
      return std::to_string(v_);
  }
}

ExtendedDim dim_monomial_quotient(const PolyRing& ring,
                                  const std::vector<Monomial>& monomials) {
  const int v = ring.arity();
  std::vector<std::uint64_t> supports;
  supports.reserve(monomials.size());
  for (const auto& m : monomials) {
    if (m.arity() != v)
      throw StructuralError("monomial arity does not match ring");
    if (m.is_one()) return ExtendedDim::minus_infinity();  // zero ring
    supports.push_back(m.support());
  }
  // exhaustive search over variable subsets; v <= 64 and in practice
  // tiny, so 2^v enumeration is instant
  int best = 0;
  const std::uint64_t full =
      v == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << v) - 1);
  for (std::uint64_t s = 0; s <= full; ++s) {
    bool independent = true;
    for (auto sup : supports) {
      if ((sup & ~s) == 0) {  // generator supported entirely inside s
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, std::popcount(s));
    if (s == full) break;
  }
  return ExtendedDim::finite(best);
}

ExtendedDim dim_quotient(const IdealHandle& ideal) {
  const auto& gb = ideal.reduced_basis();
  return dim_monomial_quotient(*ideal.ring(), initial_ideal(gb));
}

ExtendedDim height_of(const IdealHandle& ideal) {
  ExtendedDim d = dim_quotient(ideal);
  if (d.is_minus_infinity()) return ExtendedDim::plus_infinity();
  return ExtendedDim::finite(ideal.ring()->arity() - d.value());
}

}  // namespace ffc
