#include "srdegen/commands.hpp"

#include <stdexcept>

namespace srdegen {

namespace {

GroebnerOptions groebner_options(const CommandOverrides& o) {
  GroebnerOptions options;
  options.strategy = o.strategy;
  return options;
}

std::size_t workers(const JobSpec& job, const CommandOverrides& o) {
  return o.workers.value_or(job.workers.value_or(1));
}

const std::vector<std::uint32_t>& primes(const JobSpec& job, const CommandOverrides& o) {
  return o.primes.empty() ? job.primes : o.primes;
}

const SimplicialComplex& require_complex(const JobSpec& job) {
  if (!job.complex) throw std::invalid_argument("job has no facets line");
  return *job.complex;
}

void require_ideal(const JobSpec& job) {
  if (job.ideal.empty()) throw std::invalid_argument("job has no ideal line");
}

Json run_analyze(const JobSpec& job, const CommandOverrides& o) {
  require_ideal(job);
  AnalyzeOptions options;
  options.groebner = groebner_options(o);
  const auto order = job.effective_order();
  Json doc = to_json(analyze(job.ideal, order, options));
  if (const auto& ps = primes(job, o); !ps.empty()) {
    Json reductions = Json::array();
    for (std::uint32_t p : ps) {
      try {
        reductions.push_back(to_json(reduce_mod_p(job.ideal, order, p, options.groebner), job.ring->names()));
      } catch (const BadPrimeError& e) {
        reductions.push_back(Json{{"prime", p}, {"error", e.what()}});
      }
    }
    doc["modular_reductions"] = reductions;
  }
  return doc;
}

Json run_scan(const JobSpec& job, const CommandOverrides& o) {
  require_ideal(job);
  ScanOptions options;
  options.analyze.groebner = groebner_options(o);
  options.family = o.family.value_or(job.family.value_or(OrderFamily::both));
  options.workers = workers(job, o);
  options.squarefree_only = o.squarefree_only;
  return to_json(scan_orders(job.ideal, options));
}

Json run_complex(const JobSpec& job) {
  const auto& complex = require_complex(job);
  const auto order = job.effective_order();
  const auto lex = order.kind() == MonomialOrder::Kind::lex ? order : MonomialOrder::lex(complex.num_vertices());
  return complex_report(complex, job.ring->field(), lex);
}

Json run_lift_search(const JobSpec& job, const CommandOverrides& o) {
  const auto& complex = require_complex(job);
  LiftSearchConfig config;
  for (const auto& q : job.pool) config.pool.push_back(Scalar::from_rational(job.ring->field(), q));
  config.budget = o.budget.value_or(job.budget.value_or(config.budget));
  config.seed = o.seed.value_or(job.seed.value_or(0));
  config.workers = workers(job, o);
  config.groebner = groebner_options(o);
  return to_json(lift_search(complex, job.ring, job.effective_order(), config));
}

Json run_point_count(const JobSpec& job, const CommandOverrides& o) {
  if (job.ideal.size() != 1) throw std::invalid_argument("point-count needs exactly one ideal generator");
  auto ps = primes(job, o);
  if (ps.empty()) {
    if (job.ring->field().is_rational()) throw std::invalid_argument("point-count needs a prime");
    ps.push_back(job.ring->field().modulus());
  }
  Json out = Json::array();
  for (std::uint32_t p : ps) {
    try {
      out.push_back(to_json(count_points(job.ideal.front(), p)));
    } catch (const BadPrimeError& e) {
      out.push_back(Json{{"prime", p}, {"error", e.what()}});
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"analyze", "scan-orders", "complex", "lift-search", "point-count"};
  return names;
}

Json run_command(std::string_view command, const JobSpec& job, const CommandOverrides& overrides) {
  if (command == "analyze") return run_analyze(job, overrides);
  if (command == "scan-orders") return run_scan(job, overrides);
  if (command == "complex") return run_complex(job);
  if (command == "lift-search") return run_lift_search(job, overrides);
  if (command == "point-count") return run_point_count(job, overrides);
  throw std::invalid_argument("unknown command '" + std::string(command) + "'");
}

}  // namespace srdegen
