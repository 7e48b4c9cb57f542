#ifndef FFC_MATPOLY_HPP
#define FFC_MATPOLY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ffc/groebner.hpp"

namespace ffc {

/// A map of free modules R^source -> R^target, stored as the
/// target x source matrix of polynomial entries: column j holds the
/// image of source basis vector j.
class MapOfFree {
 public:
  MapOfFree(RingPtr ring, int target_rank, int source_rank,
            std::vector<std::vector<Polynomial>> entries);

  /// The zero map of the given shape.
  static MapOfFree zero(RingPtr ring, int target_rank, int source_rank);
  static MapOfFree identity(RingPtr ring, int rank);

  const RingPtr& ring() const { return ring_; }
  int target_rank() const { return rows_; }
  int source_rank() const { return cols_; }
  const Polynomial& entry(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<Polynomial>>& rows() const { return entries_; }

  MapOfFree transpose() const;
  MapOfFree compose(const MapOfFree& then) const;  // then ∘ this
  bool is_zero_map() const;
  std::int64_t max_entry_degree() const;  // -1 if all entries are zero

 private:
  RingPtr ring_;
  int rows_, cols_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// Shared sub-minor memo for one matrix; minors of all sizes reuse the
/// same table. Keys are (row bitmask, column bitmask).
class MinorCache {
 public:
  explicit MinorCache(const MapOfFree& m) : m_(m) {}

  /// Determinant of the square submatrix on the given index subsets
  /// (equal cardinality required). Empty subsets give 1.
  const Polynomial& minor(std::uint64_t row_mask, std::uint64_t col_mask);

 private:
  const MapOfFree& m_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> memo_;
};

/// Exact determinant by Laplace expansion with sub-minor memoization.
/// The 0x0 matrix has determinant 1.
Polynomial determinant(const MapOfFree& m);

/// Exact determinant by fraction-free Bareiss elimination; better for a
/// single large matrix, and an independent route for cross-checking.
Polynomial determinant_bareiss(const MapOfFree& m);

/// The determinantal ideal I_s(m), with the boundary conventions:
/// s <= 0 gives (1); the 0x0 matrix gives (1) for every s; otherwise
/// s > min(rows, cols) gives (0).
IdealHandle minor_ideal(const MapOfFree& m, long long s);

/// Rank over the fraction field: the largest s with a nonzero s x s
/// minor.
int generic_rank(const MapOfFree& m);

}  // namespace ffc

#endif
