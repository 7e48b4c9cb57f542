#include "ffc/polyring.hpp"

#include <set>

namespace ffc {

PolyRing::PolyRing(CoefficientField field, std::vector<std::string> variables,
                   MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(v).second)
      throw StructuralError("duplicate variable name: " + v);
  }
  if (vars_.size() > 64)
    throw StructuralError("at most 64 variables supported");
}

int PolyRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
}

std::string PolyRing::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  s += "] order ";
  s += order_name(order_);
  return s;
}

RingPtr make_ring(CoefficientField field, std::vector<std::string> variables,
                  MonomialOrder order) {
  return std::make_shared<PolyRing>(field, std::move(variables), order);
}

}  // namespace ffc
