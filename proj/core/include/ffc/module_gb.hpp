#ifndef FFC_MODULE_GB_HPP
#define FFC_MODULE_GB_HPP

#include <optional>
#include <vector>

#include "ffc/matpoly.hpp"

namespace ffc {

/// An element of a free module R^t, stored componentwise.
using ModVec = std::vector<Polynomial>;

ModVec modvec_zero(const RingPtr& ring, int rank);
ModVec modvec_unit(const RingPtr& ring, int rank, int component);
bool modvec_is_zero(const ModVec& v);
ModVec modvec_add(const ModVec& a, const ModVec& b);
ModVec modvec_sub(const ModVec& a, const ModVec& b);
ModVec modvec_scaled(const ModVec& a, const Scalar& c);
ModVec modvec_times_term(const ModVec& a, const Monomial& m, const Scalar& c);

/// Leading module term under the position-over-term order: components
/// are compared by index (lower index wins), monomials within a
/// component by the ring order.
struct ModTerm {
  int component;
  Monomial mono;
  Scalar coeff;
};
ModTerm leading_modterm(const ModVec& v);

/// A module Gröbner basis with full bookkeeping: each basis element
/// carries its representation over the input generators, and every
/// S-pair reduction to zero contributes a syzygy. By Schreyer's
/// argument the collected syzygies generate the kernel of the map whose
/// columns are the generators.
struct ModuleGB {
  RingPtr ring;
  int target_rank = 0;            // ambient free rank t
  std::vector<ModVec> gens;       // input generators, in R^t
  std::vector<ModVec> basis;      // Gröbner basis elements, in R^t
  std::vector<ModVec> basis_rep;  // basis[k] = sum_j basis_rep[k][j] * gens[j]
  std::vector<ModVec> syzygies;   // generators of ker(gens), in R^s
};

ModuleGB module_groebner(const RingPtr& ring, const std::vector<ModVec>& gens,
                         int target_rank);

/// Expresses v over the original generators of `gb`, or nullopt when v
/// is not in the submodule.
std::optional<std::vector<Polynomial>> module_lift(const ModuleGB& gb,
                                                   const ModVec& v);

/// Generators of ker(m) as a submodule of the source free module.
std::vector<ModVec> kernel_gens(const MapOfFree& m);

}  // namespace ffc

#endif
