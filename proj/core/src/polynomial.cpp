#include "ffc/polynomial.hpp"

#include <algorithm>
#include <map>

namespace ffc {

namespace {
struct DescendingCmp {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ring->compare(a, b) > 0;
  }
};
}  // namespace

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_))
    throw StructuralError("polynomial ring mismatch");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Monomial, Scalar, DescendingCmp> acc{DescendingCmp{ring.get()}};
  const auto& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.arity() != ring->arity())
      throw StructuralError("term arity does not match ring");
    auto [it, inserted] = acc.emplace(std::move(t.mono), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  Polynomial p(ring);
  for (auto& [m, c] : acc) {
    Scalar n = field.normalize(c);
    if (n != 0) p.terms_.push_back(Term{m, std::move(n)});
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  int v = ring->arity();
  return from_terms(std::move(ring), {Term{Monomial::one(v), c}});
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->arity())
    throw StructuralError("variable index out of range");
  std::vector<std::int64_t> e(ring->arity(), 0);
  e[index] = 1;
  return from_terms(std::move(ring), {Term{Monomial(std::move(e)), Scalar(1)}});
}

Polynomial Polynomial::monomial_term(RingPtr ring, Monomial m, Scalar c) {
  return from_terms(std::move(ring), {Term{std::move(m), std::move(c)}});
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::int64_t d = terms_[0].mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw StructuralError("zero polynomial has no leading term");
  return terms_[0];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(o);
  // merge of two sorted term lists
  Polynomial r(ring_);
  const auto& field = ring_->field();
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const auto& field = ring_->field();
  Scalar n = field.normalize(c);
  Polynomial r(ring_);
  if (n == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mono, field.mul(t.coeff, n)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  const auto& field = ring_->field();
  Scalar n = field.normalize(c);
  Polynomial r(ring_);
  if (n == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mono.times(m), field.mul(t.coeff, n)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(o);
  std::map<Monomial, Scalar, DescendingCmp> acc{DescendingCmp{ring_.get()}};
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mono.times(b.mono);
      Scalar c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second += c;
    }
  }
  Polynomial r(ring_);
  const auto& field = ring_->field();
  for (auto& [m, c] : acc) {
    Scalar n = field.normalize(c);
    if (n != 0) r.terms_.push_back(Term{m, std::move(n)});
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  require_same_ring(d);
  if (d.is_zero()) throw StructuralError("exact division by zero");
  const auto& field = ring_->field();
  Polynomial r = *this;
  Polynomial q(ring_);
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!d.leading_monomial().divides(lt.mono))
      throw StructuralError("exact division failed: remainder nonzero");
    Monomial m = lt.mono.divided_by(d.leading_monomial());
    Scalar c = field.div(lt.coeff, d.leading_coeff());
    Polynomial t = monomial_term(ring_, m, c);
    q = q + t;
    r = r - d.times_term(m, c);
  }
  return q;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string ms;
    for (int i = 0; i < t.mono.arity(); ++i) {
      auto e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!ms.empty()) ms += "*";
      ms += ring_->variables()[i];
      if (e != 1) ms += "^" + std::to_string(e);
    }
    if (ms.empty()) {
      out += scalar_to_string(c);
    } else {
      if (c != 1) out += scalar_to_string(c) + "*";
      out += ms;
    }
  }
  return out;
}

}  // namespace ffc
