#include "ffc/dimform.hpp"

namespace ffc {

DimReport dim_via_fitting(const FiniteFreeComplex& c) {
  require_valid(c);
  DimReport rep;
  rep.formula = DimFormula::Primal;
  if (c.is_empty()) return rep;
  const RankProfile profile(c);
  const int a = c.low(), b = c.high();
  for (int n = a - 1; n <= b; ++n) {
    // d_{n+1} is the 0 -> F_b map at n = b; beyond that everything is
    // forced to the unit ideal by the empty-matrix convention
    MapOfFree d = c.differential(n + 1);
    IdealHandle ideal = minor_ideal(d, profile.s(n));
    ExtendedDim q = dim_quotient(ideal);
    rep.per_degree.push_back(DimReport::TermRow{
        n, profile.s(n), ideal.generators().size(),
        ideal.reduced_basis().elements.size(), q - n});
    rep.result = ExtendedDim::max(rep.result, q - n);
  }
  return rep;
}

DimReport dim_dual_via_fitting(const FiniteFreeComplex& c) {
  require_valid(c);
  DimReport rep;
  rep.formula = DimFormula::Dual;
  if (c.is_empty()) return rep;
  const RankProfile profile(c);
  const int a = c.low(), b = c.high();
  for (int n = a; n <= b + 1; ++n) {
    // d_a is the F_a -> 0 map; its minor ideals follow the same
    // conventions as above
    MapOfFree d = c.differential(n);
    IdealHandle ideal = minor_ideal(d, profile.r(n));
    ExtendedDim q = dim_quotient(ideal);
    rep.per_degree.push_back(DimReport::TermRow{
        n, profile.r(n), ideal.generators().size(),
        ideal.reduced_basis().elements.size(), q + n});
    rep.result = ExtendedDim::max(rep.result, q + n);
  }
  return rep;
}

ExtendedDim bh_codimension(const FiniteFreeComplex& c) {
  ExtendedDim dual_dim = dim_dual_via_fitting(c).result;
  if (dual_dim.is_minus_infinity())
    return ExtendedDim::plus_infinity();  // exact complex
  return ExtendedDim::finite(c.ring()->arity() - dual_dim.value());
}

BoundReport check_bounds(const FiniteFreeComplex& c,
                         const HomologyTable& homology) {
  BoundReport rep;
  rep.homogeneous = is_homogeneous_complex(c);
  rep.dim_dual = dim_dual_via_fitting(c).result;
  const long long dim_ring = c.ring()->arity();
  if (homology.exact()) {
    rep.exact = true;
    return rep;
  }
  rep.upper = ExtendedDim::finite(dim_ring + homology.sup_h.value());
  rep.lower = ExtendedDim::finite(dim_ring + homology.inf_h.value());
  rep.upper_holds = rep.dim_dual <= rep.upper;
  rep.lower_holds = rep.lower <= rep.dim_dual;
  return rep;
}

AcyclicityReport is_acyclic(const FiniteFreeComplex& c) {
  require_valid(c);
  AcyclicityReport rep;
  if (c.is_empty()) return rep;
  const RankProfile profile(c);
  const int a = c.low(), b = c.high();
  for (int n = a + 1; n <= b; ++n) {
    MapOfFree d = c.differential(n);
    const long long expected = profile.r(n);
    const int rank = generic_rank(d);
    IdealHandle ideal = minor_ideal(d, expected);
    ExtendedDim grade = ideal.is_unit() ? ExtendedDim::plus_infinity()
                                        : height_of(ideal);
    const bool ok =
        rank == expected && grade >= ExtendedDim::finite(n - a);
    rep.rows.push_back(AcyclicityReport::Row{n, rank, expected, grade, ok});
    if (!ok) rep.acyclic = false;
  }
  return rep;
}

}  // namespace ffc
