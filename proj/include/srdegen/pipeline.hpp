#ifndef SRDEGEN_PIPELINE_HPP
#define SRDEGEN_PIPELINE_HPP

#include "srdegen/complex.hpp"
#include "srdegen/groebner.hpp"
#include "srdegen/singularity.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srdegen {

struct AnalyzeOptions {
  GroebnerOptions groebner;
  /// Run the regularity test of the smallest variable for degrevlex orders.
  bool degrevlex_check = true;
};

/// Necessary conditions on Δ for in(I) = I_Δ with I prime / normal / smooth.
struct NecessaryConditions {
  bool strongly_connected = false;
  bool normal = false;
  bool buchsbaum = false;
};

struct DegrevlexCheck {
  std::size_t smallest_variable = 0;
  bool in_ideal = false;
  bool regular = false;
  /// Empty when the initial ideal is not square-free.
  std::optional<bool> cone_point;
};

enum class ConjectureVerdict { consistent, violation_candidate, hypothesis_unverified };
std::string to_string(ConjectureVerdict verdict);

struct ConjectureCheck {
  int conjecture = 0;
  /// What the conjecture concludes, e.g. "cohen_macaulay and acyclic".
  std::string conclusion;
  ConjectureVerdict verdict = ConjectureVerdict::hypothesis_unverified;
  std::string reason;
};

struct DegenerationReport {
  std::string digest;
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  GroebnerBasis basis;
  MonomialIdeal initial;
  bool squarefree = false;
  std::optional<SimplicialComplex> complex;
  std::optional<ComplexPropertyReport> properties;
  std::optional<NecessaryConditions> necessary;
  /// Jacobian analysis at every coordinate point (standard grading only).
  std::vector<JacobianAnalysis> coordinate_points;
  std::vector<ObstructionVerdict> obstructions;
  std::vector<SupportViolation> support_violations;
  std::optional<DegrevlexCheck> degrevlex;
  std::vector<ConjectureCheck> conjectures;
  /// Assumptions the verdicts rely on but which are not verified.
  std::vector<std::string> hypotheses;
};

/// FNV-1a (64 bit, hex) of the canonical text of the generating set.
std::string ideal_digest(std::span<const Polynomial> generators);

/// Generators must be nonzero in number and homogeneous for the ring grading.
DegenerationReport analyze(std::span<const Polynomial> generators, const MonomialOrder& order,
                           const AnalyzeOptions& options = {});

enum class OrderFamily { lex, degrevlex, both };

struct ScanOptions {
  AnalyzeOptions analyze;
  OrderFamily family = OrderFamily::both;
  std::size_t workers = 1;
  std::size_t max_vars = 8;
  bool squarefree_only = false;
};

struct ScanEntry {
  DegenerationReport report;
  /// Every scanned order producing this initial ideal, in scan order.
  std::vector<MonomialOrder> orders;
};

/// All permutation orders of the family (lex first, permutations in
/// lexicographic order), deduplicated by initial ideal.
std::vector<ScanEntry> scan_orders(std::span<const Polynomial> generators, const ScanOptions& options = {});

std::vector<MonomialOrder> permutation_orders(std::size_t n, OrderFamily family);

struct LiftSearchConfig {
  /// Empty means {-2,-1,1,2} over QQ and all of GF(p) otherwise.
  std::vector<Scalar> pool;
  std::uint64_t budget = 500;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  GroebnerOptions groebner;
};

struct LiftRecord {
  std::uint64_t candidate = 0;
  /// The lift f_F = x_F + tail, in the order of the minimal non-faces.
  std::vector<Polynomial> generators;
  std::vector<JacobianAnalysis> coordinate_points;
  bool singular_at_p1 = false;
  ObstructionVerdict ci;
  std::optional<ObstructionVerdict> leafless;
  std::vector<SupportViolation> support_violations;
};

struct LiftSearchResult {
  SimplicialComplex complex;
  RingPtr ring;
  MonomialOrder order;
  std::vector<Scalar> pool;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  /// Tail monomials for each minimal non-face, descending.
  std::vector<std::vector<Monomial>> tails;
  std::size_t slots = 0;
  bool exhaustive = false;
  bool no_tail_monomials = false;
  /// Vertex playing the role of P_1 (the largest variable).
  std::size_t p1_vertex = 0;
  std::uint64_t tried = 0;
  std::vector<LiftRecord> lifts;
};

LiftSearchResult lift_search(const SimplicialComplex& complex, const RingPtr& ring, const MonomialOrder& order,
                             const LiftSearchConfig& config = {});

struct PointCountResult {
  Polynomial curve;
  std::uint32_t prime = 0;
  std::uint64_t points = 0;
  std::int64_t trace = 0;
  bool supersingular = false;
  /// No rational point of the reduction is singular.
  bool smooth = false;
  std::vector<ProjPoint> singular_points;
  /// trace^2 <= 4p; only evaluated for smooth reductions.
  std::optional<bool> hasse_bound;
};

/// Points of a plane cubic on P^2(F_p), by enumeration. Rational input is
/// reduced through its primitive integer form.
PointCountResult count_points(const Polynomial& cubic, std::uint32_t p);

}  // namespace srdegen

#endif
