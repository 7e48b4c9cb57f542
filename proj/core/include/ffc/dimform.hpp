#ifndef FFC_DIMFORM_HPP
#define FFC_DIMFORM_HPP

#include "ffc/homology.hpp"

namespace ffc {

enum class DimFormula { Primal, Dual };

/// Per-degree term table for the determinantal dimension formulas and
/// their supremum.
struct DimReport {
  struct TermRow {
    int degree;                // n
    long long expected_rank;   // s_n or r_n
    std::size_t generator_count;
    std::size_t gb_size;
    ExtendedDim term;          // dim(R/I) -/+ n
  };
  DimFormula formula = DimFormula::Primal;
  std::vector<TermRow> per_degree;
  ExtendedDim result = ExtendedDim::minus_infinity();
};

/// dim F = sup over n of dim(R/I_{s_n}(d_{n+1})) - n, evaluated on the
/// effective range [a-1, b]; outside it the minor conventions force the
/// unit ideal.
DimReport dim_via_fitting(const FiniteFreeComplex& c);

/// dim Hom(F, R) = sup over n of dim(R/I_{r_n}(d_n)) + n, evaluated
/// directly from the complex's own differentials on [a, b+1].
DimReport dim_dual_via_fitting(const FiniteFreeComplex& c);

/// dim R - dim Hom(F, R); +inf (reported as "exact complex") when the
/// dual has no homology.
ExtendedDim bh_codimension(const FiniteFreeComplex& c);

/// The two-sided dimension bounds on dim Hom(F, R). The upper bound
/// holds unconditionally; the lower bound is asserted only for
/// homogeneous complexes (graded-local reading) and reported otherwise.
struct BoundReport {
  bool exact = false;            // no homology: both bounds vacuous
  bool homogeneous = false;
  ExtendedDim dim_dual = ExtendedDim::minus_infinity();
  ExtendedDim upper = ExtendedDim::minus_infinity();  // dim R + sup H
  ExtendedDim lower = ExtendedDim::minus_infinity();  // dim R + inf H
  bool upper_holds = true;
  bool lower_holds = true;       // meaningful when homogeneous
};
BoundReport check_bounds(const FiniteFreeComplex& c,
                         const HomologyTable& homology);

/// Buchsbaum-Eisenbud acyclicity: rank d_n equals the expected rank and
/// grade I_{r_n}(d_n) >= n - a for every n in [a+1, b].
struct AcyclicityReport {
  struct Row {
    int degree;
    int rank;
    long long expected_rank;
    ExtendedDim grade;  // +inf for the unit ideal
    bool ok;
  };
  bool acyclic = true;
  std::vector<Row> rows;
};
AcyclicityReport is_acyclic(const FiniteFreeComplex& c);

}  // namespace ffc

#endif
