#include "srdegen/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace srdegen {

namespace {

// Runs fn(0..count-1) on up to `workers` threads. The exception of the
// lowest failing index is rethrown, matching a serial run.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

void check_homogeneous(std::span<const Polynomial> generators) {
  for (const auto& g : generators) {
    if (!g.homogeneous_degree()) throw std::invalid_argument("generator is not homogeneous: " + g.to_string());
  }
}

bool is_irrelevant_ideal(const MonomialIdeal& initial) {
  const std::size_t n = initial.num_vars();
  if (initial.generators().size() != n) return false;
  return std::all_of(initial.generators().begin(), initial.generators().end(),
                     [](const Monomial& m) { return m.total_degree() == 1; });
}

std::vector<ConjectureCheck> conjecture_checks(const DegenerationReport& r) {
  struct Spec {
    int number;
    const char* conclusion;
  };
  const Spec specs[] = {{1, "cohen_macaulay"},
                        {2, "cohen_macaulay and negative a-invariant"},
                        {3, "cohen_macaulay and acyclic"}};
  std::vector<ConjectureCheck> out;

  std::string refutation;
  bool hypothesis_checkable = r.ring->has_standard_grading();
  if (!r.squarefree) {
    refutation = "initial ideal is not square-free, so the hypothesis fails";
  } else if (!r.complex) {
    refutation = "initial ideal defines the empty projective scheme";
  } else {
    std::vector<std::string> reasons;
    for (const auto& p : r.coordinate_points) {
      if (p.verdict == PointVerdict::singular) reasons.push_back("singular at " + p.point.to_string());
    }
    if (!r.necessary->strongly_connected) reasons.push_back("complex is not strongly connected, so I is not prime");
    if (!r.necessary->buchsbaum) reasons.push_back("complex is not Buchsbaum, so Proj S/I is not smooth and equidimensional");
    refutation = join(reasons, "; ");
  }

  for (const auto& spec : specs) {
    ConjectureCheck check;
    check.conjecture = spec.number;
    check.conclusion = spec.conclusion;
    bool conclusion = false;
    if (r.properties) {
      const auto& p = *r.properties;
      conclusion = p.cohen_macaulay;
      if (spec.number == 2) conclusion = conclusion && p.negative_a_invariant.value_or(false);
      if (spec.number == 3) conclusion = conclusion && p.acyclic;
    }
    if (conclusion) {
      check.verdict = ConjectureVerdict::consistent;
      check.reason = std::string("complex is ") + spec.conclusion;
    } else if (!refutation.empty()) {
      check.verdict = ConjectureVerdict::consistent;
      check.reason = refutation;
    } else if (!hypothesis_checkable) {
      check.verdict = ConjectureVerdict::hypothesis_unverified;
      check.reason = "conclusion fails; singularity checks need the standard grading";
    } else {
      check.verdict = ConjectureVerdict::violation_candidate;
      check.reason = "conclusion fails and no check refutes the hypothesis (primality and global smoothness unverified)";
    }
    out.push_back(std::move(check));
  }
  return out;
}

DegenerationReport analyze_basis(std::span<const Polynomial> generators, GroebnerBasis basis,
                                 const AnalyzeOptions& options) {
  const RingPtr ring = basis.ring();
  const std::size_t n = ring->num_vars();
  const MonomialOrder order = basis.order();
  MonomialIdeal initial = initial_ideal(basis);
  DegenerationReport r{
      .digest = ideal_digest(generators),
      .ring = ring,
      .order = order,
      .generators = {generators.begin(), generators.end()},
      .basis = std::move(basis),
      .initial = std::move(initial),
  };
  r.squarefree = is_squarefree(r.initial);
  r.hypotheses = {"I is prime (not verified)",
                  "Proj S/I is equidimensional of codimension n - 1 - dim(complex)",
                  "smoothness is only tested at coordinate points"};

  if (r.squarefree && !r.basis.is_unit_ideal() && !is_irrelevant_ideal(r.initial)) {
    r.complex = complex_from_squarefree_ideal(r.initial, n);
    const SimplicialComplex& complex = *r.complex;
    r.properties = property_report(complex, ring->field());
    r.necessary = NecessaryConditions{r.properties->strongly_connected, r.properties->normal, r.properties->buchsbaum};

    if (ring->has_standard_grading()) {
      const std::size_t codim = n - 1 - static_cast<std::size_t>(complex.dimension());
      for (std::size_t i = 0; i < n; ++i) {
        r.coordinate_points.push_back(jacobian_rank_at(r.basis, ProjPoint::coordinate(n, i, ring->field()), codim));
      }
      r.obstructions.push_back(ci_obstruction(r.basis));
      if (complex.dimension() == 1 && complex.ghost_vertices().empty()) {
        r.obstructions.push_back(leafless_obstruction(r.basis, complex));
        r.support_violations = support_exclusions(r.basis, complex);
      }
    }
    if (order.kind() == MonomialOrder::Kind::lex) r.obstructions.push_back(lex_obstruction(complex, order));

    if (options.degrevlex_check && order.kind() == MonomialOrder::Kind::degrevlex) {
      DegrevlexCheck check;
      check.smallest_variable = order.smallest_variable();
      const Polynomial xs =
          Polynomial::monomial(ring, order, Monomial::variable(n, check.smallest_variable), Scalar::one(ring->field()));
      check.in_ideal = ideal_membership(xs, r.basis);
      check.regular = !check.in_ideal && is_variable_regular(r.basis, check.smallest_variable, options.groebner);
      check.cone_point = cone_point_certificate(r.initial, check.smallest_variable);
      r.degrevlex = check;
    }
  }
  r.conjectures = conjecture_checks(r);
  return r;
}

std::vector<Scalar> default_pool(const Field& field) {
  std::vector<Scalar> out;
  if (field.is_rational()) {
    for (long c : {-2L, -1L, 1L, 2L}) out.push_back(Scalar::from_integer(field, c));
  } else {
    for (std::uint32_t c = 0; c < field.modulus(); ++c) out.push_back(Scalar::from_integer(field, c));
  }
  return out;
}

// Monomials of graded degree `degree` whose support is a face.
void face_monomials(const SimplicialComplex& complex, std::span<const std::uint32_t> grading, std::size_t var,
                    std::uint64_t degree, std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  const std::size_t n = exps.size();
  if (degree == 0) {
    Monomial m(exps);
    if (complex.contains(m.support_mask())) out.push_back(std::move(m));
    return;
  }
  if (var == n) return;
  for (std::uint32_t e = 0; e * grading[var] <= degree; ++e) {
    exps[var] = e;
    const FaceMask mask = Monomial(exps).support_mask();
    if (e > 0 && !complex.contains(mask)) break;
    face_monomials(complex, grading, var + 1, degree - e * grading[var], exps, out);
  }
  exps[var] = 0;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::uint64_t& state, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = splitmix64(state);
    if (x < limit) return x % bound;
  }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

}  // namespace

std::string to_string(ConjectureVerdict verdict) {
  switch (verdict) {
    case ConjectureVerdict::consistent: return "consistent";
    case ConjectureVerdict::violation_candidate: return "violation_candidate";
    case ConjectureVerdict::hypothesis_unverified: return "hypothesis_unverified";
  }
  return "unknown";
}

std::string ideal_digest(std::span<const Polynomial> generators) {
  if (generators.empty()) return "0000000000000000";
  const RingPtr& ring = generators.front().ring();
  const MonomialOrder canonical = MonomialOrder::degrevlex(ring->num_vars());
  std::vector<std::string> gens;
  for (const auto& g : generators) {
    if (!g.is_zero()) gens.push_back(g.with_order(canonical).to_string());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::string> grading;
  for (auto w : ring->grading()) grading.push_back(std::to_string(w));
  const std::string text = ring->field().to_string() + "|" + join(ring->names(), ",") + "|" + join(grading, ",") +
                           "|" + join(gens, ";");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

DegenerationReport analyze(std::span<const Polynomial> generators, const MonomialOrder& order,
                           const AnalyzeOptions& options) {
  if (generators.empty()) throw std::invalid_argument("analyze: no generators");
  check_homogeneous(generators);
  const RingPtr& ring = generators.front().ring();
  return analyze_basis(generators, buchberger(ring, generators, order, options.groebner), options);
}

std::vector<MonomialOrder> permutation_orders(std::size_t n, OrderFamily family) {
  std::vector<MonomialOrder> out;
  for (int pass = 0; pass < 2; ++pass) {
    const bool lex = pass == 0;
    if (lex && family == OrderFamily::degrevlex) continue;
    if (!lex && family == OrderFamily::lex) continue;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      out.push_back(lex ? MonomialOrder::lex(perm) : MonomialOrder::degrevlex(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<ScanEntry> scan_orders(std::span<const Polynomial> generators, const ScanOptions& options) {
  if (generators.empty()) throw std::invalid_argument("scan_orders: no generators");
  check_homogeneous(generators);
  const RingPtr& ring = generators.front().ring();
  const std::size_t n = ring->num_vars();
  if (n > options.max_vars) {
    throw ResourceLimitError("scan_orders: " + std::to_string(n) + " variables exceed the bound of " +
                             std::to_string(options.max_vars));
  }
  const auto orders = permutation_orders(n, options.family);

  std::vector<std::optional<GroebnerBasis>> bases(orders.size());
  parallel_for(orders.size(), options.workers, [&](std::size_t i) {
    bases[i] = buchberger(ring, generators, orders[i], options.analyze.groebner);
  });

  struct Group {
    std::size_t representative;
    MonomialIdeal initial;
    std::vector<MonomialOrder> orders;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    MonomialIdeal initial = initial_ideal(*bases[i]);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.initial == initial; });
    if (it == groups.end()) {
      groups.push_back(Group{i, std::move(initial), {orders[i]}});
    } else {
      it->orders.push_back(orders[i]);
    }
  }
  if (options.squarefree_only) {
    std::erase_if(groups, [](const Group& g) { return !is_squarefree(g.initial); });
  }

  std::vector<std::optional<DegenerationReport>> reports(groups.size());
  parallel_for(groups.size(), options.workers, [&](std::size_t k) {
    reports[k] = analyze_basis(generators, *bases[groups[k].representative], options.analyze);
  });
  std::vector<ScanEntry> out;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    out.push_back(ScanEntry{std::move(*reports[k]), std::move(groups[k].orders)});
  }
  return out;
}

LiftSearchResult lift_search(const SimplicialComplex& complex, const RingPtr& ring, const MonomialOrder& order,
                             const LiftSearchConfig& config) {
  const std::size_t n = ring->num_vars();
  if (complex.num_vertices() != n) throw std::invalid_argument("lift_search: complex and ring sizes differ");
  if (order.num_vars() != n) throw std::invalid_argument("lift_search: order and ring sizes differ");
  if (config.budget == 0) throw std::invalid_argument("lift_search: budget must be at least 1");
  const Field& field = ring->field();

  LiftSearchResult result{.complex = complex, .ring = ring, .order = order};
  result.pool = config.pool.empty() ? default_pool(field) : config.pool;
  for (const auto& c : result.pool) {
    if (c.field() != field) throw FieldMismatch("lift_search: coefficient pool outside " + field.to_string());
  }
  result.budget = config.budget;
  result.seed = config.seed;
  result.p1_vertex = order.largest_variable();

  const MonomialIdeal ideal = to_ideal(complex);
  std::vector<Monomial> leads = ideal.generators();
  for (const auto& lead : leads) {
    std::vector<Monomial> tails;
    std::vector<std::uint32_t> exps(n, 0);
    face_monomials(complex, ring->grading(), 0, lead.degree(ring->grading()), exps, tails);
    std::erase_if(tails, [&](const Monomial& m) { return !order.less(m, lead); });
    std::sort(tails.begin(), tails.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    result.slots += tails.size();
    result.tails.push_back(std::move(tails));
  }
  result.no_tail_monomials = result.slots == 0;

  const std::uint64_t radix = result.pool.size();
  std::uint64_t space = 1;
  bool overflow = false;
  for (std::size_t s = 0; s < result.slots && !overflow; ++s) {
    if (space > config.budget / std::max<std::uint64_t>(radix, 1)) overflow = true;
    space *= radix;
  }
  result.exhaustive = !overflow && space <= config.budget;
  if (radix == 0 && result.slots > 0) throw std::invalid_argument("lift_search: empty coefficient pool");

  // Digit k selects the pool entry for tail slot k; slot 0 varies fastest.
  std::vector<std::vector<std::uint32_t>> candidates;
  std::set<std::vector<std::uint32_t>> seen;
  const std::uint64_t count = result.exhaustive ? space : config.budget;
  std::uint64_t base_state = config.seed;
  const std::uint64_t seed_mix = splitmix64(base_state);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::uint32_t> digits(result.slots);
    if (result.exhaustive) {
      std::uint64_t rest = c;
      for (auto& d : digits) {
        d = static_cast<std::uint32_t>(rest % radix);
        rest /= radix;
      }
    } else {
      std::uint64_t state = seed_mix ^ (c * 0xd1b54a32d192ed03ULL);
      for (auto& d : digits) d = static_cast<std::uint32_t>(uniform_below(state, radix));
    }
    if (seen.insert(digits).second) candidates.push_back(std::move(digits));
  }
  result.tried = candidates.size();

  const int dim = complex.dimension();
  const std::size_t codim = n - 1 - static_cast<std::size_t>(dim);
  const bool graph = dim == 1 && complex.ghost_vertices().empty();
  std::vector<std::optional<LiftRecord>> records(candidates.size());
  parallel_for(candidates.size(), config.workers, [&](std::size_t k) {
    const auto& digits = candidates[k];
    std::vector<Polynomial> gens;
    std::size_t slot = 0;
    for (std::size_t g = 0; g < leads.size(); ++g) {
      std::vector<Term> terms{Term{leads[g], Scalar::one(field)}};
      for (const auto& m : result.tails[g]) terms.push_back(Term{m, result.pool[digits[slot++]]});
      gens.push_back(Polynomial::from_terms(ring, order, std::move(terms)));
    }
    if (!is_groebner_basis(gens)) return;
    LiftRecord record;
    record.candidate = k;
    std::vector<Polynomial> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.greater(a.leading_monomial(), b.leading_monomial());
    });
    const GroebnerBasis basis(ring, order, std::move(sorted));
    record.generators = std::move(gens);
    if (ring->has_standard_grading()) {
      for (std::size_t i = 0; i < n; ++i) {
        record.coordinate_points.push_back(jacobian_rank_at(basis, ProjPoint::coordinate(n, i, field), codim));
      }
      record.singular_at_p1 = record.coordinate_points[result.p1_vertex].verdict == PointVerdict::singular;
      record.ci = ci_obstruction(basis);
      if (graph) {
        record.leafless = leafless_obstruction(basis, complex);
        record.support_violations = support_exclusions(basis, complex);
      }
    }
    records[k] = std::move(record);
  });
  for (auto& r : records) {
    if (r) result.lifts.push_back(std::move(*r));
  }
  return result;
}

PointCountResult count_points(const Polynomial& cubic, std::uint32_t p) {
  const Field target = Field::prime(p);
  if (cubic.ring()->num_vars() != 3) throw std::invalid_argument("count_points: need a plane curve in 3 variables");
  if (cubic.homogeneous_degree(std::vector<std::uint32_t>(3, 1)) != std::optional<std::uint64_t>(3)) {
    throw std::invalid_argument("count_points: need a homogeneous cubic");
  }
  if (p > 50000) throw ResourceLimitError("count_points: prime too large for enumeration");
  Polynomial f = cubic;
  if (cubic.field().is_rational()) {
    f = reduce_polynomial_mod_p(cubic, cubic.ring()->with_field(target));
  } else if (cubic.field() != target) {
    throw FieldMismatch("count_points: cubic is defined over " + cubic.field().to_string());
  }

  struct ModTerm {
    std::uint64_t coefficient;
    std::uint32_t e[3];
  };
  auto compile = [](const Polynomial& g) {
    std::vector<ModTerm> out;
    for (const auto& t : g.terms()) out.push_back(ModTerm{t.coefficient.residue(), {t.monomial[0], t.monomial[1], t.monomial[2]}});
    return out;
  };
  const std::vector<ModTerm> poly = compile(f);
  std::vector<std::vector<ModTerm>> grad;
  for (std::size_t i = 0; i < 3; ++i) grad.push_back(compile(f.partial_derivative(i)));

  auto eval = [p](const std::vector<ModTerm>& g, const std::uint64_t (&powers)[3][4]) {
    std::uint64_t sum = 0;
    for (const auto& t : g) {
      std::uint64_t v = t.coefficient;
      for (int i = 0; i < 3; ++i) v = mul_mod(v, powers[i][t.e[i]], p);
      sum = (sum + v) % p;
    }
    return sum;
  };

  PointCountResult out{.curve = f, .prime = p};
  auto visit = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    std::uint64_t powers[3][4];
    const std::uint64_t coords[3] = {x, y, z};
    for (int i = 0; i < 3; ++i) {
      powers[i][0] = 1;
      for (int k = 1; k < 4; ++k) powers[i][k] = mul_mod(powers[i][k - 1], coords[i], p);
    }
    if (eval(poly, powers) != 0) return;
    ++out.points;
    if (eval(grad[0], powers) == 0 && eval(grad[1], powers) == 0 && eval(grad[2], powers) == 0) {
      std::vector<Scalar> point;
      for (auto c : coords) point.push_back(Scalar::from_integer(target, static_cast<long>(c)));
      out.singular_points.emplace_back(std::move(point));
    }
  };
  for (std::uint64_t y = 0; y < p; ++y) {
    for (std::uint64_t z = 0; z < p; ++z) visit(1, y, z);
  }
  for (std::uint64_t z = 0; z < p; ++z) visit(0, 1, z);
  visit(0, 0, 1);

  out.trace = static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(out.points);
  out.supersingular = out.trace % static_cast<std::int64_t>(p) == 0;
  out.smooth = out.singular_points.empty();
  if (out.smooth) out.hasse_bound = out.trace * out.trace <= 4 * static_cast<std::int64_t>(p);
  return out;
}

}  // namespace srdegen
