#include "ffc/complexes.hpp"

#include <algorithm>
#include <deque>

namespace ffc {

FiniteFreeComplex::FiniteFreeComplex(RingPtr ring, int low,
                                     std::vector<int> ranks,
                                     std::map<int, MapOfFree> diffs)
    : ring_(std::move(ring)),
      low_(low),
      ranks_(std::move(ranks)),
      diffs_(std::move(diffs)) {
  for (int r : ranks_)
    if (r < 0) throw StructuralError("negative rank in complex");
  if (ranks_.empty()) {
    if (!diffs_.empty())
      throw StructuralError("empty complex cannot carry differentials");
    return;
  }
  const int b = low_ + static_cast<int>(ranks_.size()) - 1;
  for (const auto& [n, d] : diffs_) {
    if (n < low_ + 1 || n > b)
      throw StructuralError("differential degree " + std::to_string(n) +
                            " outside [a+1, b]");
    if (!d.ring()->same_as(*ring_))
      throw StructuralError("differential over a different ring");
    if (d.source_rank() != rank(n) || d.target_rank() != rank(n - 1))
      throw StructuralError("differential shape mismatch at degree " +
                            std::to_string(n));
  }
  for (int n = low_ + 1; n <= b; ++n) {
    if (diffs_.find(n) == diffs_.end())
      diffs_.emplace(n, MapOfFree::zero(ring_, rank(n - 1), rank(n)));
  }
}

FiniteFreeComplex FiniteFreeComplex::empty(RingPtr ring) {
  return FiniteFreeComplex(std::move(ring), 0, {}, {});
}

int FiniteFreeComplex::low() const {
  if (is_empty()) throw StructuralError("empty complex has no degrees");
  return low_;
}

int FiniteFreeComplex::high() const {
  if (is_empty()) throw StructuralError("empty complex has no degrees");
  return low_ + static_cast<int>(ranks_.size()) - 1;
}

int FiniteFreeComplex::rank(int n) const {
  if (is_empty() || n < low_ || n > low_ + static_cast<int>(ranks_.size()) - 1)
    return 0;
  return ranks_[static_cast<std::size_t>(n - low_)];
}

MapOfFree FiniteFreeComplex::differential(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return MapOfFree::zero(ring_, rank(n - 1), rank(n));
}

bool FiniteFreeComplex::operator==(const FiniteFreeComplex& o) const {
  if (!ring_->same_as(*o.ring_)) return false;
  if (is_empty() || o.is_empty()) return is_empty() == o.is_empty();
  if (low_ != o.low_ || ranks_ != o.ranks_) return false;
  for (int n = low_ + 1; n <= high(); ++n) {
    MapOfFree a = differential(n), b = o.differential(n);
    for (int i = 0; i < a.target_rank(); ++i)
      for (int j = 0; j < a.source_rank(); ++j)
        if (a.entry(i, j) != b.entry(i, j)) return false;
  }
  return true;
}

ValidationReport validate_complex(const FiniteFreeComplex& c) {
  ValidationReport rep;
  rep.minimal = true;
  if (c.is_empty()) {
    rep.valid = true;
    return rep;
  }
  for (int n = c.low() + 1; n <= c.high(); ++n) {
    MapOfFree d = c.differential(n);
    for (int i = 0; i < d.target_rank(); ++i)
      for (int j = 0; j < d.source_rank(); ++j)
        for (const auto& t : d.entry(i, j).terms())
          if (t.mono.is_one()) rep.minimal = false;
    if (n == c.low() + 1) continue;
    MapOfFree prod = d.compose(c.differential(n - 1));
    for (int i = 0; i < prod.target_rank(); ++i) {
      for (int j = 0; j < prod.source_rank(); ++j) {
        if (!prod.entry(i, j).is_zero()) {
          rep.valid = false;
          rep.message = "dd != 0 at degree " + std::to_string(n) +
                        ", entry (" + std::to_string(i) + "," +
                        std::to_string(j) + "): " +
                        prod.entry(i, j).to_string();
          return rep;
        }
      }
    }
  }
  rep.valid = true;
  return rep;
}

void require_valid(const FiniteFreeComplex& c) {
  ValidationReport rep = validate_complex(c);
  if (!rep.valid) throw StructuralError("invalid complex: " + rep.message);
}

RankProfile::RankProfile(const FiniteFreeComplex& c) {
  if (c.is_empty()) return;
  low_ = c.low();
  high_ = c.high();
  long long s = 0;
  s_[low_ - 1] = 0;
  for (int n = low_; n <= high_ + 1; ++n) {
    s = c.rank(n) - s;
    s_[n] = s;
  }
  long long r = 0;
  r_[high_ + 1] = 0;
  for (int n = high_; n >= low_ - 1; --n) {
    r = c.rank(n) - r;
    r_[n] = r;
  }
}

long long RankProfile::s(int n) const {
  if (high_ < low_) return 0;  // empty complex
  if (n < low_) return 0;
  auto it = s_.find(n);
  if (it != s_.end()) return it->second;
  // above the stored range the ranks vanish, so s alternates in sign
  long long v = s_.rbegin()->second;
  for (int k = s_.rbegin()->first; k < n; ++k) v = -v;
  return v;
}

long long RankProfile::r(int n) const {
  if (high_ < low_) return 0;
  if (n > high_) return 0;
  auto it = r_.find(n);
  if (it != r_.end()) return it->second;
  long long v = r_.begin()->second;
  for (int k = r_.begin()->first; k > n; --k) v = -v;
  return v;
}

RankProfile alternating_sums(const FiniteFreeComplex& c) {
  return RankProfile(c);
}

FiniteFreeComplex dual_complex(const FiniteFreeComplex& c) {
  if (c.is_empty()) return c;
  const int a = c.low(), b = c.high();
  std::vector<int> ranks;
  for (int n = -b; n <= -a; ++n) ranks.push_back(c.rank(-n));
  std::map<int, MapOfFree> diffs;
  for (int n = -b + 1; n <= -a; ++n)
    diffs.emplace(n, c.differential(1 - n).transpose());
  return FiniteFreeComplex(c.ring(), -b, std::move(ranks), std::move(diffs));
}

namespace {

// n-subsets of {0..c-1}, ordered lexicographically by sorted index list
std::vector<std::vector<int>> degree_basis(int c, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // recursive lexicographic enumeration
  struct Rec {
    int c, n;
    std::vector<std::vector<int>>& out;
    void go(std::vector<int>& cur, int next) {
      if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
      }
      for (int i = next; i < c; ++i) {
        cur.push_back(i);
        go(cur, i + 1);
        cur.pop_back();
      }
    }
  } rec{c, n, out};
  rec.go(cur, 0);
  return out;
}

}  // namespace

FiniteFreeComplex koszul_complex(const RingPtr& ring,
                                 const std::vector<Polynomial>& tuple) {
  if (tuple.empty())
    throw StructuralError("Koszul complex needs a nonempty tuple");
  for (const auto& f : tuple)
    if (!f.ring()->same_as(*ring))
      throw StructuralError("Koszul entry over a different ring");
  const int c = static_cast<int>(tuple.size());

  std::vector<int> ranks;
  std::vector<std::vector<std::vector<int>>> bases;  // per degree
  for (int n = 0; n <= c; ++n) {
    bases.push_back(degree_basis(c, n));
    ranks.push_back(static_cast<int>(bases.back().size()));
  }

  std::map<int, MapOfFree> diffs;
  for (int n = 1; n <= c; ++n) {
    const auto& src = bases[static_cast<std::size_t>(n)];
    const auto& tgt = bases[static_cast<std::size_t>(n - 1)];
    auto row_of = [&](const std::vector<int>& subset) {
      auto it = std::find(tgt.begin(), tgt.end(), subset);
      return static_cast<int>(it - tgt.begin());
    };
    std::vector<std::vector<Polynomial>> e(
        tgt.size(),
        std::vector<Polynomial>(src.size(), Polynomial::zero(ring)));
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& subset = src[col];
      for (std::size_t k = 0; k < subset.size(); ++k) {
        std::vector<int> rest = subset;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        Polynomial f = tuple[static_cast<std::size_t>(subset[k])];
        if (k % 2 == 1) f = -f;
        const int row = row_of(rest);
        e[static_cast<std::size_t>(row)][col] =
            e[static_cast<std::size_t>(row)][col] + f;
      }
    }
    diffs.emplace(n, MapOfFree(ring, static_cast<int>(tgt.size()),
                               static_cast<int>(src.size()), std::move(e)));
  }
  return FiniteFreeComplex(ring, 0, std::move(ranks), std::move(diffs));
}

FiniteFreeComplex shift_complex(const FiniteFreeComplex& c, int k) {
  if (c.is_empty()) return c;
  const int a = c.low(), b = c.high();
  std::vector<int> ranks;
  for (int n = a; n <= b; ++n) ranks.push_back(c.rank(n));
  const Scalar sgn(k % 2 == 0 ? 1 : -1);
  std::map<int, MapOfFree> diffs;
  for (int n = a + 1; n <= b; ++n) {
    MapOfFree d = c.differential(n);
    std::vector<std::vector<Polynomial>> e(
        d.target_rank(),
        std::vector<Polynomial>(d.source_rank(), Polynomial::zero(c.ring())));
    for (int i = 0; i < d.target_rank(); ++i)
      for (int j = 0; j < d.source_rank(); ++j)
        e[i][j] = d.entry(i, j).scaled(sgn);
    diffs.emplace(n + k, MapOfFree(c.ring(), d.target_rank(), d.source_rank(),
                                   std::move(e)));
  }
  return FiniteFreeComplex(c.ring(), a + k, std::move(ranks),
                           std::move(diffs));
}

FiniteFreeComplex direct_sum(const FiniteFreeComplex& c,
                             const FiniteFreeComplex& d) {
  if (!c.ring()->same_as(*d.ring()))
    throw StructuralError("direct sum over different rings");
  if (c.is_empty()) return d;
  if (d.is_empty()) return c;
  const int a = std::min(c.low(), d.low());
  const int b = std::max(c.high(), d.high());
  std::vector<int> ranks;
  for (int n = a; n <= b; ++n) ranks.push_back(c.rank(n) + d.rank(n));
  std::map<int, MapOfFree> diffs;
  for (int n = a + 1; n <= b; ++n) {
    MapOfFree dc = c.differential(n), dd = d.differential(n);
    const int rows = dc.target_rank() + dd.target_rank();
    const int cols = dc.source_rank() + dd.source_rank();
    std::vector<std::vector<Polynomial>> e(
        rows, std::vector<Polynomial>(cols, Polynomial::zero(c.ring())));
    for (int i = 0; i < dc.target_rank(); ++i)
      for (int j = 0; j < dc.source_rank(); ++j) e[i][j] = dc.entry(i, j);
    for (int i = 0; i < dd.target_rank(); ++i)
      for (int j = 0; j < dd.source_rank(); ++j)
        e[dc.target_rank() + i][dc.source_rank() + j] = dd.entry(i, j);
    diffs.emplace(n, MapOfFree(c.ring(), rows, cols, std::move(e)));
  }
  return FiniteFreeComplex(c.ring(), a, std::move(ranks), std::move(diffs));
}

bool is_homogeneous_complex(const FiniteFreeComplex& c) {
  if (c.is_empty()) return true;
  // assign an internal degree weight to each basis vector so that every
  // nonzero entry of every differential is homogeneous of the weight
  // difference; BFS over the constraint graph
  struct Node {
    int degree, index;
    bool operator<(const Node& o) const {
      return degree != o.degree ? degree < o.degree : index < o.index;
    }
  };
  std::map<Node, long long> weight;
  // edges: (n, j) -> (n-1, i) with difference deg(entry)
  struct Edge {
    Node from, to;
    long long diff;  // weight(from) - weight(to)
  };
  std::vector<Edge> edges;
  for (int n = c.low() + 1; n <= c.high(); ++n) {
    MapOfFree d = c.differential(n);
    for (int i = 0; i < d.target_rank(); ++i) {
      for (int j = 0; j < d.source_rank(); ++j) {
        const Polynomial& e = d.entry(i, j);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) return false;
        edges.push_back(Edge{Node{n, j}, Node{n - 1, i}, e.degree()});
      }
    }
  }
  std::map<Node, std::vector<std::pair<Node, long long>>> adj;
  for (const auto& e : edges) {
    adj[e.from].push_back({e.to, -e.diff});
    adj[e.to].push_back({e.from, e.diff});
  }
  for (const auto& [start, nbrs] : adj) {
    (void)nbrs;
    if (weight.count(start)) continue;
    std::deque<Node> queue{start};
    weight[start] = 0;
    while (!queue.empty()) {
      Node u = queue.front();
      queue.pop_front();
      for (const auto& [v, delta] : adj[u]) {
        long long w = weight[u] + delta;
        auto it = weight.find(v);
        if (it == weight.end()) {
          weight[v] = w;
          queue.push_back(v);
        } else if (it->second != w) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ffc
