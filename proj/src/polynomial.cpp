#include "srdegen/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace srdegen {

namespace {

Scalar power(Scalar base, std::uint32_t exp) {
  Scalar result = Scalar::one(base.field());
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp) base *= base;
  }
  return result;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
  if (order_.num_vars() != ring_->num_vars()) {
    throw std::invalid_argument("monomial order has " + std::to_string(order_.num_vars()) +
                                " variables, ring has " + std::to_string(ring_->num_vars()));
  }
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(std::move(ring), std::move(order));
  const std::size_t n = p.ring_->num_vars();
  const Field& field = p.ring_->field();
  for (const auto& t : terms) {
    if (t.monomial.size() != n) throw std::invalid_argument("term has wrong number of variables");
    if (t.coefficient.field() != field) throw FieldMismatch("term coefficient outside " + field.to_string());
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return p.order_.greater(a.monomial, b.monomial); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, MonomialOrder order, const Scalar& c) {
  const std::size_t n = ring->num_vars();
  return from_terms(std::move(ring), std::move(order), {Term{Monomial(n), c}});
}

Polynomial Polynomial::monomial(RingPtr ring, MonomialOrder order, Monomial m, Scalar c) {
  return from_terms(std::move(ring), std::move(order), {Term{std::move(m), std::move(c)}});
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("polynomials from different rings");
  if (!(order_ == other.order_)) throw std::invalid_argument("polynomials sorted under different orders");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial Polynomial::minus_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  check_compatible(g);
  Polynomial out(ring_, order_);
  if (c.is_zero()) {
    out.terms_ = terms_;
    return out;
  }
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial shifted = g.terms_[j].monomial * m;
    if (i == terms_.size()) {
      out.terms_.push_back(Term{std::move(shifted), -(c * g.terms_[j].coefficient)});
      ++j;
      continue;
    }
    const auto cmp = order_.compare(terms_[i].monomial, shifted);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(Term{std::move(shifted), -(c * g.terms_[j].coefficient)});
      ++j;
    } else {
      Scalar sum = terms_[i].coefficient - c * g.terms_[j].coefficient;
      if (!sum.is_zero()) out.terms_.push_back(Term{std::move(shifted), std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.minus_multiple(-Scalar::one(a.field()), Monomial(a.ring_->num_vars()), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.minus_multiple(Scalar::one(a.field()), Monomial(a.ring_->num_vars()), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back(Term{s.monomial * t.monomial, s.coefficient * t.coefficient});
  }
  return Polynomial::from_terms(a.ring_, a.order_, std::move(products));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(ring_, order_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial out(ring_, order_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coefficient.is_one()) return *this;
  return scaled(terms_.front().coefficient.inverse());
}

Polynomial Polynomial::tail() const {
  Polynomial out(ring_, order_);
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

Polynomial Polynomial::partial_derivative(std::size_t variable) const {
  if (variable >= ring_->num_vars()) throw std::out_of_range("partial_derivative: variable index");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.monomial[variable];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[variable] = e - 1;
    out.push_back(Term{Monomial(std::move(exps)), t.coefficient * Scalar::from_integer(field(), e)});
  }
  return from_terms(ring_, order_, std::move(out));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->num_vars()) throw std::invalid_argument("evaluate: point has wrong length");
  for (const auto& x : point) {
    if (x.field() != field()) throw FieldMismatch("evaluate: point coordinate outside " + field().to_string());
  }
  Scalar sum = Scalar::zero(field());
  for (const auto& t : terms_) {
    Scalar value = t.coefficient;
    for (std::size_t i = 0; i < point.size() && !value.is_zero(); ++i) {
      if (t.monomial[i] != 0) value *= power(point[i], t.monomial[i]);
    }
    sum += value;
  }
  return sum;
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const { return homogeneous_degree(ring_->grading()); }

std::optional<std::uint64_t> Polynomial::homogeneous_degree(std::span<const std::uint32_t> grading) const {
  if (grading.size() != ring_->num_vars()) throw std::invalid_argument("grading has wrong length");
  if (terms_.empty()) return 0;
  const std::uint64_t d = terms_.front().monomial.degree(grading);
  for (const auto& t : terms_) {
    if (t.monomial.degree(grading) != d) return std::nullopt;
  }
  return d;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  return from_terms(ring_, order, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->names();
  const bool rational = field().is_rational();
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [m, c] = terms_[k];
    bool negative = rational && sgn(c.rational()) < 0;
    const Scalar magnitude = negative ? -c : c;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += m.to_string(names);
    } else {
      out += magnitude.to_string() + "*" + m.to_string(names);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  if (order == f.order()) return f.leading_term();
  const auto terms = f.terms();
  const auto it = std::max_element(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.less(a.monomial, b.monomial);
  });
  return *it;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t variable) { return f.partial_derivative(variable); }

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) { return f.evaluate(point); }

std::optional<std::uint64_t> is_homogeneous(const Polynomial& f, std::span<const std::uint32_t> grading) {
  return f.homogeneous_degree(grading);
}

}  // namespace srdegen
