#include "ffc/random_complex.hpp"

#include <algorithm>

namespace ffc {

std::vector<std::string> default_variables(int vars) {
  static const char* base[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < vars; ++i) {
    if (i < 4)
      names.emplace_back(base[i]);
    else
      names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

namespace {

Scalar random_nonzero_scalar(const RingPtr& ring, std::mt19937_64& rng) {
  const auto& field = ring->field();
  if (field.kind() == FieldKind::PrimeField) {
    std::uniform_int_distribution<unsigned long> d(
        1, field.characteristic() - 1);
    return Scalar(static_cast<unsigned long>(d(rng)));
  }
  std::uniform_int_distribution<int> d(-3, 3);
  int v = 0;
  while (v == 0) v = d(rng);
  return Scalar(v);
}

Monomial random_monomial(const RingPtr& ring, int degree,
                         std::mt19937_64& rng) {
  std::vector<std::int64_t> e(ring->arity(), 0);
  std::uniform_int_distribution<int> pick(0, ring->arity() - 1);
  for (int d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(pick(rng))];
  return Monomial(std::move(e));
}

}  // namespace

Polynomial random_polynomial(const RingPtr& ring, int max_degree,
                             std::mt19937_64& rng, bool homogeneous) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> degree_pick(homogeneous ? 1 : 0,
                                                 max_degree);
  for (;;) {
    const int fixed_degree = degree_pick(rng);
    std::vector<Term> terms;
    const int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
      int d = homogeneous ? fixed_degree : degree_pick(rng);
      terms.push_back(
          Term{random_monomial(ring, d, rng), random_nonzero_scalar(ring, rng)});
    }
    Polynomial p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

namespace {

// mutable scratch form of a complex under construction
struct Scratch {
  RingPtr ring;
  int low = 0;
  std::vector<int> ranks;
  std::map<int, std::vector<std::vector<Polynomial>>> mats;

  int high() const { return low + static_cast<int>(ranks.size()) - 1; }
  int rank(int n) const {
    if (ranks.empty() || n < low || n > high()) return 0;
    return ranks[static_cast<std::size_t>(n - low)];
  }

  FiniteFreeComplex build() const {
    std::map<int, MapOfFree> diffs;
    for (const auto& [n, m] : mats)
      diffs.emplace(n, MapOfFree(ring, rank(n - 1), rank(n), m));
    return FiniteFreeComplex(ring, low, ranks, std::move(diffs));
  }

  static Scratch of(const FiniteFreeComplex& c) {
    Scratch s;
    s.ring = c.ring();
    if (c.is_empty()) return s;
    s.low = c.low();
    for (int n = c.low(); n <= c.high(); ++n) s.ranks.push_back(c.rank(n));
    for (int n = c.low() + 1; n <= c.high(); ++n)
      s.mats.emplace(n, c.differential(n).rows());
    return s;
  }

  std::int64_t degree_around(int n) const {
    std::int64_t d = -1;
    for (int m : {n, n + 1}) {
      auto it = mats.find(m);
      if (it == mats.end()) continue;
      for (const auto& row : it->second)
        for (const auto& e : row) d = std::max(d, e.degree());
    }
    return d;
  }
};

}  // namespace

FiniteFreeComplex random_complex(const RingPtr& ring,
                                 const RandomComplexOptions& opts,
                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nblocks_pick(1, 3);
  std::uniform_int_distribution<int> kind_pick(0, 3);
  std::uniform_int_distribution<int> shift_pick(0, std::max(0, opts.length - 1));
  std::uniform_int_distribution<int> ntuple_pick(1, 2);

  FiniteFreeComplex sum = FiniteFreeComplex::empty(ring);
  const int blocks = nblocks_pick(rng);
  for (int bl = 0; bl < blocks; ++bl) {
    FiniteFreeComplex piece = FiniteFreeComplex::empty(ring);
    const int kind = kind_pick(rng);
    const int shift = shift_pick(rng);
    if (kind <= 1) {
      // Koszul block; kind 0 may have length 2, trim shift so it fits
      const int c = ntuple_pick(rng);
      std::vector<Polynomial> tuple;
      for (int i = 0; i < c; ++i)
        tuple.push_back(random_polynomial(ring, opts.max_degree, rng,
                                          opts.homogeneous_only));
      piece = shift_complex(koszul_complex(ring, tuple),
                            std::min(shift, std::max(0, opts.length - c)));
    } else if (kind == 2) {
      // free module of rank 1 in one degree
      piece = shift_complex(
          FiniteFreeComplex(ring, 0, {1}, {}), shift);
    } else {
      // split exact piece 0 -> R -> R -> 0
      std::map<int, MapOfFree> d;
      d.emplace(1, MapOfFree::identity(ring, 1));
      piece = shift_complex(FiniteFreeComplex(ring, 0, {1, 1}, std::move(d)),
                            std::min(shift, std::max(0, opts.length - 1)));
    }
    // respect the per-degree rank cap
    FiniteFreeComplex candidate = direct_sum(sum, piece);
    bool fits = true;
    for (int n = candidate.low(); n <= candidate.high(); ++n)
      if (candidate.rank(n) > opts.max_rank) fits = false;
    if (candidate.high() - candidate.low() > opts.length) fits = false;
    if (fits) sum = std::move(candidate);
  }
  if (sum.is_empty())
    sum = FiniteFreeComplex(ring, 0, {1}, {});

  // scramble by invertible changes of basis; each op keeps dd = 0
  Scratch scr = Scratch::of(sum);
  std::uniform_int_distribution<int> nops_pick(0, 6);
  std::uniform_int_distribution<int> op_pick(0, 2);
  const int nops = nops_pick(rng);
  for (int op = 0; op < nops; ++op) {
    std::uniform_int_distribution<int> deg_pick(scr.low, scr.high());
    const int n = deg_pick(rng);
    const int f = scr.rank(n);
    if (f < 2) continue;
    std::uniform_int_distribution<int> idx(0, f - 1);
    int u = idx(rng), v = idx(rng);
    if (u == v) continue;
    Scratch before = scr;
    const int what = op_pick(rng);
    auto dn = scr.mats.find(n);       // d_n has f columns
    auto dn1 = scr.mats.find(n + 1);  // d_{n+1} has f rows
    if (what == 0) {
      // column/row swap
      if (dn != scr.mats.end())
        for (auto& row : dn->second)
          std::swap(row[static_cast<std::size_t>(u)],
                    row[static_cast<std::size_t>(v)]);
      if (dn1 != scr.mats.end())
        std::swap(dn1->second[static_cast<std::size_t>(u)],
                  dn1->second[static_cast<std::size_t>(v)]);
    } else if (what == 1) {
      // scale basis vector u by a unit
      Scalar c = random_nonzero_scalar(ring, rng);
      Scalar cinv = ring->field().inv(c);
      if (dn != scr.mats.end())
        for (auto& row : dn->second)
          row[static_cast<std::size_t>(u)] =
              row[static_cast<std::size_t>(u)].scaled(c);
      if (dn1 != scr.mats.end())
        for (auto& e : dn1->second[static_cast<std::size_t>(u)])
          e = e.scaled(cinv);
    } else {
      // elementary: basis vector v gains q * basis vector u
      Polynomial q = opts.homogeneous_only
                         ? Polynomial::constant(
                               ring, random_nonzero_scalar(ring, rng))
                         : random_polynomial(ring, 1, rng);
      if (dn != scr.mats.end())
        for (auto& row : dn->second)
          row[static_cast<std::size_t>(v)] =
              row[static_cast<std::size_t>(v)] +
              row[static_cast<std::size_t>(u)] * q;
      if (dn1 != scr.mats.end())
        for (std::size_t j = 0; j < dn1->second[0].size(); ++j)
          dn1->second[static_cast<std::size_t>(u)][j] =
              dn1->second[static_cast<std::size_t>(u)][j] -
              q * dn1->second[static_cast<std::size_t>(v)][j];
    }
    bool keep = scr.degree_around(n) <= opts.max_degree;
    // scalar ops can still break gradedness via earlier mixing; keep
    // only ops that preserve it
    if (keep && opts.homogeneous_only)
      keep = is_homogeneous_complex(scr.build());
    if (!keep) scr = std::move(before);
  }
  FiniteFreeComplex result = scr.build();
  require_valid(result);
  return result;
}

}  // namespace ffc
