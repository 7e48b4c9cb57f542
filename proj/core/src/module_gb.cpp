#include "ffc/module_gb.hpp"

#include <algorithm>

#include "ffc/budget.hpp"

namespace ffc {

ModVec modvec_zero(const RingPtr& ring, int rank) {
  return ModVec(static_cast<std::size_t>(rank), Polynomial::zero(ring));
}

ModVec modvec_unit(const RingPtr& ring, int rank, int component) {
  ModVec v = modvec_zero(ring, rank);
  v[static_cast<std::size_t>(component)] =
      Polynomial::constant(ring, Scalar(1));
  return v;
}

bool modvec_is_zero(const ModVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

ModVec modvec_add(const ModVec& a, const ModVec& b) {
  if (a.size() != b.size()) throw StructuralError("module rank mismatch");
  ModVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

ModVec modvec_sub(const ModVec& a, const ModVec& b) {
  if (a.size() != b.size()) throw StructuralError("module rank mismatch");
  ModVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

ModVec modvec_scaled(const ModVec& a, const Scalar& c) {
  ModVec r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(p.scaled(c));
  return r;
}

ModVec modvec_times_term(const ModVec& a, const Monomial& m, const Scalar& c) {
  ModVec r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(p.times_term(m, c));
  return r;
}

ModTerm leading_modterm(const ModVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      const Term& t = v[i].leading_term();
      return ModTerm{static_cast<int>(i), t.mono, t.coeff};
    }
  }
  throw StructuralError("zero module element has no leading term");
}

namespace {

struct DivisionResult {
  ModVec remainder;
  std::vector<Polynomial> quotients;  // one per basis element
};

// Full division of v against the basis, tracking quotients.
DivisionResult module_divide(const RingPtr& ring, const ModVec& v,
                             const std::vector<ModVec>& basis) {
  const auto& field = ring->field();
  ModVec p = v;
  ModVec r = modvec_zero(ring, static_cast<int>(v.size()));
  std::vector<Polynomial> quot(basis.size(), Polynomial::zero(ring));
  while (!modvec_is_zero(p)) {
    budget::check();
    ModTerm lt = leading_modterm(p);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (modvec_is_zero(basis[k])) continue;
      ModTerm lg = leading_modterm(basis[k]);
      if (lg.component != lt.component || !lg.mono.divides(lt.mono)) continue;
      Monomial m = lt.mono.divided_by(lg.mono);
      Scalar c = field.div(lt.coeff, lg.coeff);
      p = modvec_sub(p, modvec_times_term(basis[k], m, c));
      quot[k] = quot[k] + Polynomial::monomial_term(ring, m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::monomial_term(ring, lt.mono, lt.coeff);
      auto ci = static_cast<std::size_t>(lt.component);
      p[ci] = p[ci] - t;
      r[ci] = r[ci] + t;
    }
  }
  return DivisionResult{std::move(r), std::move(quot)};
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

ModuleGB module_groebner(const RingPtr& ring, const std::vector<ModVec>& gens,
                         int target_rank) {
  const auto& field = ring->field();
  const int s = static_cast<int>(gens.size());
  ModuleGB gb;
  gb.ring = ring;
  gb.target_rank = target_rank;
  gb.gens = gens;

  for (int j = 0; j < s; ++j) {
    if (static_cast<int>(gens[static_cast<std::size_t>(j)].size()) !=
        target_rank)
      throw StructuralError("generator rank mismatch");
    if (modvec_is_zero(gens[static_cast<std::size_t>(j)])) {
      // a zero generator is itself a kernel element
      gb.syzygies.push_back(modvec_unit(ring, s, j));
    } else {
      gb.basis.push_back(gens[static_cast<std::size_t>(j)]);
      gb.basis_rep.push_back(modvec_unit(ring, s, j));
    }
  }

  std::vector<Pair> pending;
  auto push_pairs = [&](std::size_t k) {
    ModTerm lk = leading_modterm(gb.basis[k]);
    for (std::size_t i = 0; i < k; ++i) {
      ModTerm li = leading_modterm(gb.basis[i]);
      if (li.component != lk.component) continue;
      pending.push_back(Pair{i, k, li.mono.lcm_with(lk.mono)});
    }
  };
  for (std::size_t k = 1; k < gb.basis.size(); ++k) push_pairs(k);

  while (!pending.empty()) {
    budget::check();
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t) {
      const auto &a = pending[t].lcm, &b = pending[best].lcm;
      if (a.degree() < b.degree() ||
          (a.degree() == b.degree() && ring->compare(a, b) < 0))
        best = t;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

    ModTerm li = leading_modterm(gb.basis[pr.i]);
    ModTerm lj = leading_modterm(gb.basis[pr.j]);
    Monomial mi = pr.lcm.divided_by(li.mono);
    Monomial mj = pr.lcm.divided_by(lj.mono);
    Scalar ci = field.inv(li.coeff);
    Scalar cj = field.inv(lj.coeff);

    ModVec spoly = modvec_sub(modvec_times_term(gb.basis[pr.i], mi, ci),
                              modvec_times_term(gb.basis[pr.j], mj, cj));
    ModVec rep = modvec_sub(modvec_times_term(gb.basis_rep[pr.i], mi, ci),
                            modvec_times_term(gb.basis_rep[pr.j], mj, cj));

    DivisionResult div = module_divide(ring, spoly, gb.basis);
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
      if (div.quotients[k].is_zero()) continue;
      for (std::size_t comp = 0; comp < rep.size(); ++comp)
        rep[comp] = rep[comp] - div.quotients[k] * gb.basis_rep[k][comp];
    }

    if (modvec_is_zero(div.remainder)) {
      if (!modvec_is_zero(rep)) gb.syzygies.push_back(std::move(rep));
    } else {
      Scalar lead = leading_modterm(div.remainder).coeff;
      Scalar inv = field.inv(lead);
      gb.basis.push_back(modvec_scaled(div.remainder, inv));
      gb.basis_rep.push_back(modvec_scaled(rep, inv));
      push_pairs(gb.basis.size() - 1);
    }
  }
  return gb;
}

std::optional<std::vector<Polynomial>> module_lift(const ModuleGB& gb,
                                                   const ModVec& v) {
  DivisionResult div = module_divide(gb.ring, v, gb.basis);
  if (!modvec_is_zero(div.remainder)) return std::nullopt;
  std::vector<Polynomial> out(gb.gens.size(), Polynomial::zero(gb.ring));
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    if (div.quotients[k].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = out[j] + div.quotients[k] * gb.basis_rep[k][j];
  }
  return out;
}

std::vector<ModVec> kernel_gens(const MapOfFree& m) {
  std::vector<ModVec> cols;
  for (int j = 0; j < m.source_rank(); ++j) {
    ModVec col;
    col.reserve(static_cast<std::size_t>(m.target_rank()));
    for (int i = 0; i < m.target_rank(); ++i) col.push_back(m.entry(i, j));
    cols.push_back(std::move(col));
  }
  ModuleGB gb = module_groebner(m.ring(), cols, m.target_rank());
  return gb.syzygies;
}

}  // namespace ffc
