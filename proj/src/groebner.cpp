#include "srdegen/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace srdegen {

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
  for (const auto& m : generators) {
    if (m.size() != num_vars) throw std::invalid_argument("monomial ideal: generator has wrong length");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      redundant = j != i && generators[j].divides(generators[i]);
    }
    if (!redundant) generators_.push_back(generators[i]);
  }
  std::sort(generators_.begin(), generators_.end(), std::greater<>());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)) {}

bool GroebnerBasis::is_unit_ideal() const {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return same_ring(a.ring_, b.ring_) && a.order_ == b.order_ && a.elements_ == b.elements_;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lead = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      const Scalar c = lead.coefficient / divisor->leading_coefficient();
      const Monomial shift = lead.monomial.quotient(divisor->leading_monomial());
      p = p.minus_multiple(c, shift, *divisor);
    } else {
      remainder.push_back(lead);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), f.order(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of the zero polynomial");
  const Polynomial fm = f.monic();
  const Polynomial gm = g.monic();
  const Monomial l = fm.leading_monomial().lcm(gm.leading_monomial());
  const Scalar one = Scalar::one(f.field());
  return fm.times(l.quotient(fm.leading_monomial()), one)
      .minus_multiple(one, l.quotient(gm.leading_monomial()), gm);
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t degree;
};

class PairQueue {
 public:
  PairQueue(const MonomialOrder& order, PairStrategy strategy) : order_(order), strategy_(strategy) {}

  void grow(std::size_t size) {
    for (auto& row : pending_) row.resize(size, false);
    pending_.resize(size, std::vector<bool>(size, false));
  }

  void push(Pair pair) {
    pending_[pair.i][pair.j] = pending_[pair.j][pair.i] = true;
    pairs_.push_back(std::move(pair));
  }

  bool empty() const { return pairs_.empty(); }
  bool pending(std::size_t a, std::size_t b) const { return pending_[a][b]; }

  Pair pop() {
    std::size_t best = 0;
    if (strategy_ == PairStrategy::normal) {
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.degree != b.degree) {
          if (a.degree < b.degree) best = k;
        } else if (order_.less(a.lcm, b.lcm)) {
          best = k;
        }
      }
    }
    Pair out = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    pending_[out.i][out.j] = pending_[out.j][out.i] = false;
    return out;
  }

 private:
  const MonomialOrder& order_;
  PairStrategy strategy_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<bool>> pending_;
};

// Chain criterion: the pair (i, j) is redundant if some other leading
// monomial divides lcm(i, j) and both connecting pairs are already treated.
bool chain_redundant(const std::vector<Polynomial>& basis, const PairQueue& queue, const Pair& pair) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == pair.i || k == pair.j) continue;
    if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
    if (!queue.pending(pair.i, k) && !queue.pending(pair.j, k)) return true;
  }
  return false;
}

GroebnerBasis unit_basis(const RingPtr& ring, const MonomialOrder& order) {
  return GroebnerBasis(ring, order, {Polynomial::constant(ring, order, Scalar::one(ring->field()))});
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("buchberger: generator from a different ring");
    if (g.is_zero()) continue;
    Polynomial h = g.with_order(order).monic();
    if (h.is_constant()) return unit_basis(ring, order);
    basis.push_back(std::move(h));
  }

  PairQueue queue(order, options.strategy);
  auto add_pairs_for = [&](std::size_t j) {
    queue.grow(basis.size());
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
      const auto d = l.total_degree();
      queue.push(Pair{i, j, std::move(l), d});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    const Pair pair = queue.pop();
    if (basis[pair.i].leading_monomial().coprime(basis[pair.j].leading_monomial())) continue;
    if (chain_redundant(basis, queue, pair)) continue;
    if (pair.degree > options.degree_cap) {
      throw ResourceLimitError("Groebner basis computation exceeded degree cap " +
                               std::to_string(options.degree_cap));
    }
    Polynomial s = normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (s.is_zero()) continue;
    if (s.is_constant()) return unit_basis(ring, order);
    basis.push_back(s.monic());
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then interreduce tails against the remaining leading terms.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& mj = basis[j].leading_monomial();
      const Monomial& mi = basis[i].leading_monomial();
      redundant = mj.divides(mi) && (mj != mi || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], others));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis(ring, order, std::move(reduced));
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (generators.empty()) throw std::invalid_argument("buchberger: cannot infer the ring from no generators");
  return buchberger(generators.front().ring(), generators, order, options);
}

bool is_groebner_basis(std::span<const Polynomial> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i].leading_monomial().coprime(elements[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(elements[i], elements[j]), elements).is_zero()) return false;
    }
  }
  return true;
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  std::vector<Monomial> leads;
  for (const auto& g : basis.elements()) leads.push_back(g.leading_monomial());
  return MonomialIdeal(basis.ring()->num_vars(), std::move(leads));
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f.with_order(basis.order()), basis.elements()).is_zero();
}

bool is_variable_regular(const GroebnerBasis& basis, std::size_t variable, const GroebnerOptions& options) {
  const RingPtr& ring = basis.ring();
  const std::size_t n = ring->num_vars();
  if (variable >= n) throw std::out_of_range("is_variable_regular: variable index");
  if (basis.is_unit_ideal()) throw std::invalid_argument("is_variable_regular: the unit ideal has no regular elements");
  if (basis.elements().empty()) return true;

  std::string tag = "t";
  while (ring->index_of(tag)) tag += "_";
  std::vector<std::string> names{tag};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<std::uint32_t> grading{1};
  grading.insert(grading.end(), ring->grading().begin(), ring->grading().end());
  const RingPtr tagged = RingContext::create(std::move(names), ring->field(), std::move(grading));

  // Block order: t first, then degrevlex on x_1 > ... > x_n.
  std::vector<std::vector<std::int64_t>> rows;
  rows.push_back(std::vector<std::int64_t>(n + 1, 0));
  rows.back()[0] = 1;
  rows.push_back(std::vector<std::int64_t>(n + 1, 1));
  rows.back()[0] = 0;
  for (std::size_t v = n; v >= 2; --v) {
    rows.push_back(std::vector<std::int64_t>(n + 1, 0));
    rows.back()[v] = -1;
  }
  const MonomialOrder elimination = MonomialOrder::matrix(std::move(rows));

  auto lift = [&](const Monomial& m, std::uint32_t t_power) {
    std::vector<std::uint32_t> e{t_power};
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    return Monomial(std::move(e));
  };
  const Field& field = ring->field();
  std::vector<Polynomial> generators;
  for (const auto& g : basis.elements()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back(Term{lift(t.monomial, 1), t.coefficient});
    generators.push_back(Polynomial::from_terms(tagged, elimination, std::move(terms)));
  }
  const Monomial xi = Monomial::variable(n, variable);
  generators.push_back(Polynomial::from_terms(
      tagged, elimination, {Term{lift(xi, 0), Scalar::one(field)}, Term{lift(xi, 1), -Scalar::one(field)}}));

  const GroebnerBasis eliminated = buchberger(tagged, generators, elimination, options);
  for (const auto& h : eliminated.elements()) {
    if (h.leading_monomial()[0] != 0) continue;
    std::vector<Term> terms;
    for (const auto& t : h.terms()) {
      std::vector<std::uint32_t> e(t.monomial.exponents().begin() + 1, t.monomial.exponents().end());
      // Every element of I ∩ (x_i) is divisible by x_i.
      e[variable] -= 1;
      terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
    }
    const Polynomial quotient = Polynomial::from_terms(ring, basis.order(), std::move(terms));
    if (!ideal_membership(quotient, basis)) return false;
  }
  return true;
}

bool cone_point_certificate(const MonomialIdeal& initial, std::size_t variable) {
  if (!is_squarefree(initial)) throw std::invalid_argument("cone_point_certificate: initial ideal is not square-free");
  if (variable >= initial.num_vars() && !initial.empty()) throw std::out_of_range("cone_point_certificate: variable");
  return std::none_of(initial.generators().begin(), initial.generators().end(),
                      [&](const Monomial& m) { return m[variable] != 0; });
}

bool cone_point_certificate(const GroebnerBasis& basis, std::size_t variable) {
  return cone_point_certificate(initial_ideal(basis), variable);
}

Polynomial reduce_polynomial_mod_p(const Polynomial& f, const RingPtr& target) {
  const Field& to = target->field();
  if (to.is_rational()) throw std::invalid_argument("reduce_polynomial_mod_p: target must be a prime field");
  if (f.field() == to) return Polynomial::from_terms(target, f.order(), {f.terms().begin(), f.terms().end()});
  if (!f.field().is_rational()) throw FieldMismatch("reduce_polynomial_mod_p: source must be rational");
  const std::uint32_t p = to.modulus();
  if (f.is_zero()) return Polynomial(target, f.order());

  mpz_class denominators = 1;
  for (const auto& t : f.terms()) {
    const mpz_class& den = t.coefficient.rational().get_den();
    if (den % p == 0) {
      throw BadPrimeError("prime " + std::to_string(p) + " divides a coefficient denominator of " + f.to_string());
    }
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> integers;
  mpz_class content = 0;
  for (const auto& t : f.terms()) {
    const mpq_class& q = t.coefficient.rational();
    integers.push_back(q.get_num() * (denominators / q.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), integers.back().get_mpz_t());
  }
  std::vector<Term> terms;
  for (std::size_t k = 0; k < integers.size(); ++k) {
    const mpz_class primitive = integers[k] / content;
    if (k == 0 && primitive % p == 0) {
      throw BadPrimeError("prime " + std::to_string(p) + " kills the leading coefficient of " + f.to_string());
    }
    terms.push_back(Term{f.terms()[k].monomial, Scalar::from_mpz(to, primitive)});
  }
  return Polynomial::from_terms(target, f.order(), std::move(terms));
}

ModularReduction reduce_mod_p(std::span<const Polynomial> generators, const MonomialOrder& order, std::uint32_t p,
                              const GroebnerOptions& options) {
  if (generators.empty()) throw std::invalid_argument("reduce_mod_p: no generators");
  const RingPtr& ring = generators.front().ring();
  if (!ring->field().is_rational()) throw FieldMismatch("reduce_mod_p: generators must be rational");
  const RingPtr target = ring->with_field(Field::prime(p));
  ModularReduction out;
  out.prime = p;
  for (const auto& g : generators) out.generators.push_back(reduce_polynomial_mod_p(g.with_order(order), target));
  out.rational_initial = initial_ideal(buchberger(ring, generators, order, options));
  out.modular_initial = initial_ideal(buchberger(target, out.generators, order, options));
  out.stable = out.rational_initial == out.modular_initial;
  return out;
}

}  // namespace srdegen
