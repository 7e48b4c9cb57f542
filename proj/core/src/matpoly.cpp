#include "ffc/matpoly.hpp"

#include <algorithm>
#include <bit>

namespace ffc {

MapOfFree::MapOfFree(RingPtr ring, int target_rank, int source_rank,
                     std::vector<std::vector<Polynomial>> entries)
    : ring_(std::move(ring)),
      rows_(target_rank),
      cols_(source_rank),
      entries_(std::move(entries)) {
  if (rows_ < 0 || cols_ < 0) throw StructuralError("negative rank");
  if (static_cast<int>(entries_.size()) != rows_)
    throw StructuralError("matrix row count does not match target rank");
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != cols_)
      throw StructuralError("matrix column count does not match source rank");
    for (const auto& e : row)
      if (!e.ring()->same_as(*ring_))
        throw StructuralError("matrix entry over a different ring");
  }
}

MapOfFree MapOfFree::zero(RingPtr ring, int target_rank, int source_rank) {
  std::vector<std::vector<Polynomial>> e(
      target_rank,
      std::vector<Polynomial>(source_rank, Polynomial::zero(ring)));
  return MapOfFree(std::move(ring), target_rank, source_rank, std::move(e));
}

MapOfFree MapOfFree::identity(RingPtr ring, int rank) {
  std::vector<std::vector<Polynomial>> e(
      rank, std::vector<Polynomial>(rank, Polynomial::zero(ring)));
  for (int i = 0; i < rank; ++i)
    e[i][i] = Polynomial::constant(ring, Scalar(1));
  return MapOfFree(std::move(ring), rank, rank, std::move(e));
}

MapOfFree MapOfFree::transpose() const {
  std::vector<std::vector<Polynomial>> e(
      cols_, std::vector<Polynomial>(rows_, Polynomial::zero(ring_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) e[j][i] = entries_[i][j];
  return MapOfFree(ring_, cols_, rows_, std::move(e));
}

MapOfFree MapOfFree::compose(const MapOfFree& then) const {
  // then : R^target -> R^k applied after this : R^source -> R^target
  if (then.cols_ != rows_)
    throw StructuralError("composition rank mismatch");
  std::vector<std::vector<Polynomial>> e(
      then.rows_, std::vector<Polynomial>(cols_, Polynomial::zero(ring_)));
  for (int i = 0; i < then.rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (int k = 0; k < rows_; ++k)
        e[i][j] = e[i][j] + then.entries_[i][k] * entries_[k][j];
  return MapOfFree(ring_, then.rows_, cols_, std::move(e));
}

bool MapOfFree::is_zero_map() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::int64_t MapOfFree::max_entry_degree() const {
  std::int64_t d = -1;
  for (const auto& row : entries_)
    for (const auto& e : row) d = std::max(d, e.degree());
  return d;
}

namespace {

std::vector<int> mask_to_indices(std::uint64_t mask) {
  std::vector<int> idx;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) idx.push_back(i);
  return idx;
}

// all size-k subsets of {0..n-1} as bitmasks, in increasing mask order
std::vector<std::uint64_t> subsets_of_size(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    out.push_back(mask);
    // Gosper's hack: next mask with the same popcount
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

const Polynomial& MinorCache::minor(std::uint64_t row_mask,
                                    std::uint64_t col_mask) {
  if (std::popcount(row_mask) != std::popcount(col_mask))
    throw StructuralError("minor requires equally sized index subsets");
  auto key = std::make_pair(row_mask, col_mask);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Polynomial det = Polynomial::zero(m_.ring());
  if (row_mask == 0) {
    det = Polynomial::constant(m_.ring(), Scalar(1));  // empty minor is 1
  } else {
    const auto rows = mask_to_indices(row_mask);
    const auto cols = mask_to_indices(col_mask);
    const int r0 = rows[0];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Polynomial& e = m_.entry(r0, cols[j]);
      if (e.is_zero()) continue;
      Polynomial sub = minor(row_mask & ~(std::uint64_t{1} << r0),
                             col_mask & ~(std::uint64_t{1} << cols[j]));
      Polynomial contrib = e * sub;
      det = (j % 2 == 0) ? det + contrib : det - contrib;
    }
  }
  auto [ins, ok] = memo_.emplace(std::move(key), std::move(det));
  return ins->second;
}

Polynomial determinant(const MapOfFree& m) {
  if (m.target_rank() != m.source_rank())
    throw StructuralError("determinant of a non-square matrix");
  const int n = m.target_rank();
  if (n > 60) throw StructuralError("matrix too large for minor expansion");
  MinorCache cache(m);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  return cache.minor(full, full);
}

Polynomial determinant_bareiss(const MapOfFree& m) {
  if (m.target_rank() != m.source_rank())
    throw StructuralError("determinant of a non-square matrix");
  const int n = m.target_rank();
  const RingPtr& ring = m.ring();
  if (n == 0) return Polynomial::constant(ring, Scalar(1));
  std::vector<std::vector<Polynomial>> a = m.rows();
  Polynomial prev = Polynomial::constant(ring, Scalar(1));
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Polynomial::zero(ring);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

IdealHandle minor_ideal(const MapOfFree& m, long long s) {
  const RingPtr& ring = m.ring();
  const Polynomial one = Polynomial::constant(ring, Scalar(1));
  // conventions: minors of the empty (0x0) matrix are 1 for every s,
  // and s <= 0 minors of any matrix are 1
  if (s <= 0 || (m.target_rank() == 0 && m.source_rank() == 0))
    return IdealHandle(ring, {one});
  if (s > std::min(m.target_rank(), m.source_rank()))
    return IdealHandle(ring, {});  // no s x s minors: the zero ideal

  MinorCache cache(m);
  std::vector<Polynomial> gens;
  const auto row_sets = subsets_of_size(m.target_rank(), static_cast<int>(s));
  const auto col_sets = subsets_of_size(m.source_rank(), static_cast<int>(s));
  for (auto rmask : row_sets) {
    for (auto cmask : col_sets) {
      const Polynomial& d = cache.minor(rmask, cmask);
      if (d.is_zero()) continue;
      // prune scalar duplicates
      Polynomial dm = d.monic();
      bool dup = false;
      for (const auto& g : gens)
        if (g == dm) {
          dup = true;
          break;
        }
      if (!dup) gens.push_back(std::move(dm));
    }
  }
  return IdealHandle(ring, std::move(gens));
}

int generic_rank(const MapOfFree& m) {
  const int bound = std::min(m.target_rank(), m.source_rank());
  MinorCache cache(m);
  int rank = 0;
  for (int s = 1; s <= bound; ++s) {
    bool found = false;
    for (auto rmask : subsets_of_size(m.target_rank(), s)) {
      for (auto cmask : subsets_of_size(m.source_rank(), s)) {
        if (!cache.minor(rmask, cmask).is_zero()) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    rank = s;
  }
  return rank;
}

}  // namespace ffc
