#ifndef FFC_COMPLEXES_HPP
#define FFC_COMPLEXES_HPP

#include <map>
#include <string>
#include <vector>

#include "ffc/matpoly.hpp"

namespace ffc {

/// A bounded complex of finite free modules
///   0 -> F_b -> ... -> F_a -> 0
/// with differentials lowering the degree by one. Ranks outside [a,b]
/// are implicitly zero. The complex with no degrees at all is allowed.
class FiniteFreeComplex {
 public:
  /// `ranks[i]` is the rank in degree low+i; `diffs[n]` (for n in
  /// [low+1, high]) maps F_n -> F_{n-1}.
  FiniteFreeComplex(RingPtr ring, int low, std::vector<int> ranks,
                    std::map<int, MapOfFree> diffs);

  static FiniteFreeComplex empty(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  bool is_empty() const { return ranks_.empty(); }
  int low() const;
  int high() const;
  int rank(int n) const;  // 0 outside [low, high]

  /// The differential F_n -> F_{n-1}; for n outside [low+1, high] the
  /// appropriately shaped zero map (possibly 0x0).
  MapOfFree differential(int n) const;

  bool operator==(const FiniteFreeComplex& o) const;

 private:
  RingPtr ring_;
  int low_ = 0;
  std::vector<int> ranks_;
  std::map<int, MapOfFree> diffs_;
};

/// Validation outcome: well-formedness, d∘d = 0, and graded minimality
/// (all differential entries have zero constant term).
struct ValidationReport {
  bool valid = false;
  bool minimal = false;
  std::string message;  // empty when valid
};

ValidationReport validate_complex(const FiniteFreeComplex& c);
void require_valid(const FiniteFreeComplex& c);

/// The alternating rank sums s_n (partial sums from below) and the
/// expected ranks r_n (partial sums from above).
class RankProfile {
 public:
  explicit RankProfile(const FiniteFreeComplex& c);

  long long s(int n) const;  // 0 for n < low
  long long r(int n) const;  // 0 for n > high
  int low() const { return low_; }
  int high() const { return high_; }

 private:
  int low_ = 0, high_ = -1;
  std::map<int, long long> s_, r_;
};

RankProfile alternating_sums(const FiniteFreeComplex& c);

/// Hom(F, R): degrees mirrored to [-b,-a], differential in degree n the
/// transpose of the degree 1-n differential of F, with no extra sign.
FiniteFreeComplex dual_complex(const FiniteFreeComplex& c);

/// Exterior-algebra Koszul complex on a nonempty tuple. Basis elements
/// in homological degree n are the n-subsets of the index set, ordered
/// lexicographically by their sorted index lists.
FiniteFreeComplex koszul_complex(const RingPtr& ring,
                                 const std::vector<Polynomial>& tuple);

/// (Σ^k F)_n = F_{n-k}; differentials scaled by (-1)^k.
FiniteFreeComplex shift_complex(const FiniteFreeComplex& c, int k);

/// Degreewise block-diagonal direct sum.
FiniteFreeComplex direct_sum(const FiniteFreeComplex& c,
                             const FiniteFreeComplex& d);

/// True when the complex admits a grading: every nonzero entry is a
/// homogeneous polynomial and internal degree weights for all basis
/// vectors can be chosen consistently.
bool is_homogeneous_complex(const FiniteFreeComplex& c);

}  // namespace ffc

#endif
