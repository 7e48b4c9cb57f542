#ifndef FFC_POLYRING_HPP
#define FFC_POLYRING_HPP

#include <memory>
#include <string>
#include <vector>

#include "ffc/monomial.hpp"
#include "ffc/scalar.hpp"

namespace ffc {

/// The ambient ring k[x1..xv] with a fixed global monomial order.
/// Immutable; shared by reference between all values built over it.
class PolyRing {
 public:
  PolyRing(CoefficientField field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::GrevLex);

  const CoefficientField& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  MonomialOrder order() const { return order_; }
  int arity() const { return static_cast<int>(vars_.size()); }

  /// Krull dimension of the ring itself.
  int dimension() const { return arity(); }

  /// Index of a variable name, or -1.
  int variable_index(const std::string& name) const;

  int compare(const Monomial& a, const Monomial& b) const {
    return monomial_compare(order_, a, b);
  }

  bool same_as(const PolyRing& o) const;
  std::string to_string() const;

 private:
  CoefficientField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(CoefficientField field, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::GrevLex);

}  // namespace ffc

#endif
