#include "ffc/groebner.hpp"

#include <algorithm>
#include <set>

#include "ffc/budget.hpp"

namespace ffc {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (!g.ring()->same_as(*ring_))
      throw StructuralError("ideal generator over a different ring");
}

const GroebnerBasis& IdealHandle::reduced_basis() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!cache_) cache_ = reduced_groebner_basis(ring_, gens_);
  return *cache_;
}

bool IdealHandle::is_unit() const {
  const auto& gb = reduced_basis();
  return gb.elements.size() == 1 && gb.elements[0].is_constant() &&
         !gb.elements[0].is_zero();
}

bool IdealHandle::is_zero() const { return reduced_basis().elements.empty(); }

bool IdealHandle::contains(const Polynomial& f) const {
  return normal_form(f, reduced_basis().elements).is_zero();
}

Polynomial normal_form(const Polynomial& f,
                       std::span<const Polynomial> basis) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  Polynomial p = f;
  Polynomial r = Polynomial::zero(ring);
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.mono)) {
        Monomial m = lt.mono.divided_by(g.leading_monomial());
        Scalar c = field.div(lt.coeff, g.leading_coeff());
        p = p - g.times_term(m, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + Polynomial::monomial_term(ring, lt.mono, lt.coeff);
      p = p - Polynomial::monomial_term(ring, lt.mono, lt.coeff);
    }
  }
  return r;
}

namespace {

// One interreduction sweep until fixed point; returns monic survivors.
std::vector<Polynomial> interreduce(const RingPtr& ring,
                                    std::vector<Polynomial> polys) {
  std::vector<Polynomial> work;
  for (auto& p : polys)
    if (!p.is_zero()) work.push_back(p.monic());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      budget::check();
      std::vector<Polynomial> others;
      others.reserve(work.size() - 1);
      for (std::size_t j = 0; j < work.size(); ++j)
        if (j != i) others.push_back(work[j]);
      Polynomial h = normal_form(work[i], others);
      if (h != work[i]) {
        changed = true;
        if (h.is_zero()) {
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          work[i] = h.monic();
        }
      }
    }
  }
  return work;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis reduced_groebner_basis(const RingPtr& ring,
                                     const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> basis = interreduce(ring, gens);

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pending.push_back(Pair{
          i, k, basis[i].leading_monomial().lcm_with(basis[k].leading_monomial())});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!pending.empty()) {
    budget::check();
    // normal strategy: minimal lcm degree first, ties by the ring order
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t) {
      const auto &a = pending[t].lcm, &b = pending[best].lcm;
      if (a.degree() < b.degree() ||
          (a.degree() == b.degree() && ring->compare(a, b) < 0))
        best = t;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    done.insert({pr.i, pr.j});

    const Monomial &li = basis[pr.i].leading_monomial(),
                   &lj = basis[pr.j].leading_monomial();
    // coprimality criterion
    if (pr.lcm == li.times(lj)) continue;
    // chain criterion
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) chained = true;
    }
    if (chained) continue;

    const auto& field = ring->field();
    Polynomial spoly =
        basis[pr.i].times_term(pr.lcm.divided_by(li),
                               field.inv(basis[pr.i].leading_coeff())) -
        basis[pr.j].times_term(pr.lcm.divided_by(lj),
                               field.inv(basis[pr.j].leading_coeff()));
    Polynomial h = normal_form(spoly, basis);
    if (!h.is_zero()) {
      basis.push_back(h.monic());
      push_pairs(basis.size() - 1);
    }
  }

  // minimize: drop elements whose leading monomial is divisible by
  // another's
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = basis[i].leading_monomial(),
                     &mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail-reduce for the unique reduced basis
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ring->compare(a.leading_monomial(),
                                   b.leading_monomial()) < 0;
            });
  return GroebnerBasis{std::move(reduced), ring->order(), true};
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  if (!gb.reduced)
    throw StructuralError("initial_ideal requires a reduced basis");
  std::vector<Monomial> lms;
  lms.reserve(gb.elements.size());
  for (const auto& g : gb.elements) lms.push_back(g.leading_monomial());
  return lms;
}

}  // namespace ffc
