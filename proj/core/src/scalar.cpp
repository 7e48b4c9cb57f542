#include "ffc/scalar.hpp"

namespace ffc {

CoefficientField CoefficientField::prime_field(unsigned long p) {
  mpz_class pz(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
    throw StructuralError("characteristic " + std::to_string(p) +
                          " is not prime");
  return CoefficientField(p);
}

Scalar CoefficientField::normalize(const Scalar& a) const {
  Scalar r = a;
  r.canonicalize();
  if (char_ == 0) return r;
  mpz_class p(char_);
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  if (den != 1) {
    // invert the denominator mod p
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw StructuralError("denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class m = num % p;
  if (m < 0) m += p;
  return Scalar(m);
}

Scalar CoefficientField::inv(const Scalar& a) const {
  Scalar n = normalize(a);
  if (n == 0) throw StructuralError("division by zero scalar");
  if (char_ == 0) return Scalar(1) / n;
  mpz_class p(char_), num = n.get_num(), r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw StructuralError("scalar not invertible mod p");
  return Scalar(r);
}

std::string CoefficientField::to_string() const {
  if (char_ == 0) return "QQ";
  return "Fp(" + std::to_string(char_) + ")";
}

std::string scalar_to_string(const Scalar& a) { return a.get_str(); }

}  // namespace ffc
