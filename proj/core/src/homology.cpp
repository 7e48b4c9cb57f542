#include "ffc/homology.hpp"

namespace ffc {

Presentation homology_presentation(const FiniteFreeComplex& c, int n) {
  const RingPtr& ring = c.ring();
  if (c.is_empty() || n < c.low() || n > c.high())
    throw StructuralError("homology degree outside the complex");
  const int fn = c.rank(n);
  if (fn == 0)
    return Presentation{0, MapOfFree::zero(ring, 0, 0)};

  std::vector<ModVec> kernel = kernel_gens(c.differential(n));
  const int k = static_cast<int>(kernel.size());
  if (k == 0) return Presentation{0, MapOfFree::zero(ring, 0, 0)};

  ModuleGB kernel_gb = module_groebner(ring, kernel, fn);

  // relations: lifts of the boundaries through the kernel generators,
  // then the syzygies among the kernel generators
  std::vector<std::vector<Polynomial>> rel_cols;
  MapOfFree boundary = c.differential(n + 1);
  for (int j = 0; j < boundary.source_rank(); ++j) {
    ModVec col;
    for (int i = 0; i < fn; ++i) col.push_back(boundary.entry(i, j));
    auto lift = module_lift(kernel_gb, col);
    if (!lift)
      throw Error("internal: boundary column does not lift through kernel");
    rel_cols.push_back(std::move(*lift));
  }
  for (const auto& syz : kernel_gb.syzygies) rel_cols.push_back(syz);

  const int cols = static_cast<int>(rel_cols.size());
  std::vector<std::vector<Polynomial>> entries(
      static_cast<std::size_t>(k),
      std::vector<Polynomial>(static_cast<std::size_t>(cols),
                              Polynomial::zero(ring)));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < k; ++i)
      entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rel_cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return Presentation{k, MapOfFree(ring, k, cols, std::move(entries))};
}

ExtendedDim dim_module(const Presentation& p) {
  if (p.generator_count == 0) return ExtendedDim::minus_infinity();
  IdealHandle fitting = minor_ideal(p.relations, p.generator_count);
  return dim_quotient(fitting);
}

HomologyDimension dim_via_homology(const FiniteFreeComplex& c) {
  require_valid(c);
  HomologyDimension out;
  if (c.is_empty()) return out;
  for (int n = c.low(); n <= c.high(); ++n) {
    Presentation pres = homology_presentation(c, n);
    ExtendedDim dim = dim_module(pres);
    if (!dim.is_minus_infinity()) {
      ExtendedDim deg = ExtendedDim::finite(n);
      if (deg < out.table.inf_h) out.table.inf_h = deg;
      if (deg > out.table.sup_h) out.table.sup_h = deg;
      out.dim = ExtendedDim::max(out.dim, dim - n);
    }
    out.table.per_degree.emplace(n,
                                 HomologyTable::Entry{std::move(pres), dim});
  }
  return out;
}

ProjDim proj_dim(const FiniteFreeComplex& c) {
  ProjDim out;
  if (c.is_empty()) return out;
  FiniteFreeComplex dual = dual_complex(c);
  HomologyDimension hd = dim_via_homology(dual);
  if (hd.table.exact()) return out;  // -inf, no caveat
  out.value = ExtendedDim::finite(-hd.table.inf_h.value());
  for (const auto& [n, entry] : hd.table.per_degree)
    if (n > dual.low() && !entry.dimension.is_minus_infinity())
      out.caveat = true;
  return out;
}

}  // namespace ffc
