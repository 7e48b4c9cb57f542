#ifndef FFC_HOMOLOGY_HPP
#define FFC_HOMOLOGY_HPP

#include <map>

#include "ffc/complexes.hpp"
#include "ffc/krull.hpp"
#include "ffc/module_gb.hpp"

namespace ffc {

/// A finitely presented module: coker(relations), with
/// relations.target_rank() = generator_count.
struct Presentation {
  int generator_count = 0;
  MapOfFree relations;
};

/// Homology in every degree of a complex, with per-degree dimensions
/// and the first/last nonvanishing degrees.
struct HomologyTable {
  struct Entry {
    Presentation presentation;
    ExtendedDim dimension = ExtendedDim::minus_infinity();
  };
  std::map<int, Entry> per_degree;      // n in [a, b]
  ExtendedDim inf_h = ExtendedDim::plus_infinity();   // +inf when H = 0
  ExtendedDim sup_h = ExtendedDim::minus_infinity();  // -inf when H = 0
  bool exact() const { return sup_h.is_minus_infinity(); }
};

/// Presents H_n = ker d_n / im d_{n+1}: generators are the kernel
/// generators of d_n, relations are the lifts of the columns of d_{n+1}
/// together with the syzygies among the kernel generators.
Presentation homology_presentation(const FiniteFreeComplex& c, int n);

/// dim of a presented module via its zeroth Fitting ideal (same radical
/// as the annihilator, hence the same Krull dimension).
ExtendedDim dim_module(const Presentation& p);

/// Eq-by-definition dimension sup{dim H_n - n}, with the full table.
struct HomologyDimension {
  ExtendedDim dim = ExtendedDim::minus_infinity();
  HomologyTable table;
};
HomologyDimension dim_via_homology(const FiniteFreeComplex& c);

/// Projective dimension read off the dual: -inf H(Hom(F,R)). The value
/// is the honest projective dimension when the dual is acyclic away
/// from its bottom degree; `caveat` is set otherwise.
struct ProjDim {
  ExtendedDim value = ExtendedDim::minus_infinity();
  bool caveat = false;
};
ProjDim proj_dim(const FiniteFreeComplex& c);

}  // namespace ffc

#endif
