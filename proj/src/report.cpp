#include "srdegen/report.hpp"

#include <stdexcept>

namespace srdegen {

namespace {

Json vertex_list(FaceMask face) {
  Json out = Json::array();
  for (std::size_t v : vertices_of(face)) out.push_back(v + 1);
  return out;
}

Json face_list(const std::vector<FaceMask>& faces) {
  Json out = Json::array();
  for (FaceMask f : faces) out.push_back(vertex_list(f));
  return out;
}

Json one_based(const std::vector<std::size_t>& vertices) {
  Json out = Json::array();
  for (std::size_t v : vertices) out.push_back(v + 1);
  return out;
}

Json names_of(const std::vector<std::size_t>& vars, std::span<const std::string> names) {
  Json out = Json::array();
  for (std::size_t v : vars) out.push_back(names[v]);
  return out;
}

Json polynomials(std::span<const Polynomial> polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json monomials(const std::vector<Monomial>& monos, std::span<const std::string> names) {
  Json out = Json::array();
  for (const auto& m : monos) out.push_back(m.to_string(names));
  return out;
}

Json ring_json(const RingContext& ring) {
  return Json{{"field", ring.field().to_string()}, {"variables", ring.names()}, {"grading", ring.grading()}};
}

Json point_list(std::span<const JacobianAnalysis> points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

Json violation_list(std::span<const SupportViolation> violations, std::span<const std::string> names) {
  Json out = Json::array();
  for (const auto& v : violations) out.push_back(to_json(v, names));
  return out;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return is_scalar(j);
  for (const auto& e : j) {
    if (!is_flat(e)) return false;
  }
  return true;
}

std::string flat_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  std::string out = "[";
  bool first = true;
  for (const auto& e : j) {
    if (!first) out += ", ";
    first = false;
    out += flat_text(e);
  }
  return out + "]";
}

void write_text(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out += pad + key + ": " + flat_text(value) + "\n";
      } else if (value.is_array() && value.empty()) {
        out += pad + key + ": []\n";
      } else {
        out += pad + key + ":\n";
        write_text(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    if (j.empty()) out += pad + "(none)\n";
    for (const auto& e : j) {
      if (is_flat(e)) {
        out += pad + "- " + flat_text(e) + "\n";
      } else {
        out += pad + "-\n";
        write_text(e, indent + 2, out);
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json or text)");
}

Json to_json(const SimplicialComplex& complex) {
  return Json{{"vertices", complex.num_vertices()},
              {"dimension", complex.dimension()},
              {"facets", face_list(complex.facets())},
              {"f_vector", complex.f_vector()},
              {"ghost_vertices", one_based(complex.ghost_vertices())}};
}

Json to_json(const ComplexPropertyReport& report) {
  Json out{{"pure", report.pure},
           {"strongly_connected", report.strongly_connected},
           {"normal", report.normal},
           {"cohen_macaulay", report.cohen_macaulay},
           {"buchsbaum", report.buchsbaum},
           {"acyclic", report.acyclic}};
  out["negative_a_invariant"] = report.negative_a_invariant ? Json(*report.negative_a_invariant) : Json(nullptr);
  out["leaves"] = one_based(report.leaves);
  out["free_faces"] = face_list(report.free_faces);
  out["cone_points"] = one_based(report.cone_points);
  out["cohomology_field"] = report.cohomology.field.to_string();
  out["cohomology"] = report.cohomology.dims;
  out["reduced_euler_characteristic"] = report.cohomology.reduced_euler;
  return out;
}

Json to_json(const JacobianAnalysis& analysis) {
  return Json{{"point", analysis.point.to_string()},
              {"on_scheme", analysis.on_scheme},
              {"rank", analysis.rank},
              {"codimension", analysis.codimension},
              {"verdict", to_string(analysis.verdict)}};
}

Json to_json(const ObstructionVerdict& v, std::span<const std::string> names) {
  Json out{{"theorem", to_string(v.theorem)}, {"applicable", v.applicable}, {"certified", v.certified},
           {"reason", v.reason}};
  out["relabeling"] = names_of(v.relabeling, names);
  if (v.distinguished_vertex) out["distinguished_vertex"] = names[*v.distinguished_vertex];
  if (!v.blocks.empty()) {
    Json blocks = Json::array();
    for (const auto& b : v.blocks) blocks.push_back(names_of(b, names));
    out["blocks"] = blocks;
  }
  if (!v.excluded_monomials.empty()) out["excluded_monomials"] = monomials(v.excluded_monomials, names);
  if (v.at_p1) out["p1"] = to_json(*v.at_p1);
  if (v.rank_bound) out["rank_bound"] = *v.rank_bound;
  if (!v.block_ranks.empty()) out["block_ranks"] = v.block_ranks;
  if (!v.link_sizes.empty()) out["link_sizes"] = v.link_sizes;
  if (v.theorem == Obstruction::lex_free_face) out["free_faces"] = face_list(v.free_faces);
  return out;
}

Json to_json(const SupportViolation& violation, std::span<const std::string> names) {
  return Json{{"nonface", vertex_list(violation.nonface)},
              {"monomial", violation.monomial.to_string(names)},
              {"rule", violation.rule}};
}

Json to_json(const DegenerationReport& r) {
  const auto& names = r.ring->names();
  Json out{{"digest", r.digest},
           {"ring", ring_json(*r.ring)},
           {"order", r.order.describe(names)},
           {"generators", polynomials(r.generators)},
           {"groebner_basis", polynomials(r.basis.elements())},
           {"initial_ideal", monomials(r.initial.generators(), names)},
           {"squarefree", r.squarefree}};
  if (r.complex) out["complex"] = to_json(*r.complex);
  if (r.properties) out["properties"] = to_json(*r.properties);
  if (r.necessary) {
    out["necessary_conditions"] = Json{{"strongly_connected", r.necessary->strongly_connected},
                                       {"normal", r.necessary->normal},
                                       {"buchsbaum", r.necessary->buchsbaum}};
  }
  if (r.complex) {
    out["coordinate_points"] = point_list(r.coordinate_points);
    Json obstructions = Json::array();
    for (const auto& o : r.obstructions) obstructions.push_back(to_json(o, names));
    out["obstructions"] = obstructions;
    out["support_violations"] = violation_list(r.support_violations, names);
  }
  if (r.degrevlex) {
    Json d{{"smallest_variable", names[r.degrevlex->smallest_variable]},
           {"in_ideal", r.degrevlex->in_ideal},
           {"regular", r.degrevlex->regular}};
    d["cone_point"] = r.degrevlex->cone_point ? Json(*r.degrevlex->cone_point) : Json(nullptr);
    out["degrevlex_check"] = d;
  }
  Json conjectures = Json::array();
  for (const auto& c : r.conjectures) {
    conjectures.push_back(Json{{"conjecture", c.conjecture},
                               {"conclusion", c.conclusion},
                               {"verdict", to_string(c.verdict)},
                               {"reason", c.reason}});
  }
  out["conjectures"] = conjectures;
  out["hypotheses"] = r.hypotheses;
  return out;
}

Json to_json(const std::vector<ScanEntry>& scan) {
  Json out = Json::array();
  for (const auto& entry : scan) {
    Json orders = Json::array();
    for (const auto& o : entry.orders) orders.push_back(o.describe(entry.report.ring->names()));
    out.push_back(Json{{"orders", orders}, {"report", to_json(entry.report)}});
  }
  return out;
}

Json to_json(const LiftSearchResult& r) {
  const auto& names = r.ring->names();
  Json pool = Json::array();
  for (const auto& c : r.pool) pool.push_back(c.to_string());
  Json tails = Json::array();
  const MonomialIdeal ideal = to_ideal(r.complex);
  const auto& nonfaces = ideal.generators();
  for (std::size_t k = 0; k < r.tails.size(); ++k) {
    tails.push_back(Json{{"nonface", vertex_list(nonfaces[k].support_mask())},
                         {"monomials", monomials(r.tails[k], names)}});
  }
  std::size_t singular = 0;
  Json lifts = Json::array();
  for (const auto& lift : r.lifts) {
    if (lift.singular_at_p1) ++singular;
    Json l{{"candidate", lift.candidate},
           {"generators", polynomials(lift.generators)},
           {"singular_at_p1", lift.singular_at_p1},
           {"coordinate_points", point_list(lift.coordinate_points)},
           {"ci_obstruction", to_json(lift.ci, names)}};
    if (lift.leafless) l["leafless_obstruction"] = to_json(*lift.leafless, names);
    l["support_violations"] = violation_list(lift.support_violations, names);
    lifts.push_back(std::move(l));
  }
  return Json{{"complex", to_json(r.complex)},
              {"ring", ring_json(*r.ring)},
              {"order", r.order.describe(names)},
              {"pool", pool},
              {"budget", r.budget},
              {"seed", r.seed},
              {"tails", tails},
              {"slots", r.slots},
              {"exhaustive", r.exhaustive},
              {"no_tail_monomials", r.no_tail_monomials},
              {"p1", names[r.p1_vertex]},
              {"tried", r.tried},
              {"valid_lifts", r.lifts.size()},
              {"singular_at_p1", singular},
              {"lifts", lifts}};
}

Json to_json(const PointCountResult& r) {
  Json singular = Json::array();
  for (const auto& p : r.singular_points) singular.push_back(p.to_string());
  Json out{{"curve", r.curve.to_string()}, {"prime", r.prime},          {"points", r.points},
           {"trace", r.trace},             {"supersingular", r.supersingular}, {"smooth", r.smooth},
           {"singular_points", singular}};
  out["hasse_bound"] = r.hasse_bound ? Json(*r.hasse_bound) : Json(nullptr);
  return out;
}

Json to_json(const ModularReduction& reduction, std::span<const std::string> names) {
  return Json{{"prime", reduction.prime},
              {"stable", reduction.stable},
              {"modular_initial_ideal", monomials(reduction.modular_initial.generators(), names)}};
}

Json complex_report(const SimplicialComplex& complex, const Field& field, const MonomialOrder& lex_order) {
  const auto ring = RingContext::standard(complex.num_vertices(), field);
  Json ideal = Json::array();
  const MonomialIdeal nonfaces = to_ideal(complex);
  for (const auto& m : nonfaces.generators()) ideal.push_back(m.to_string(ring->names()));
  return Json{{"complex", to_json(complex)},
              {"stanley_reisner_ideal", ideal},
              {"properties", to_json(property_report(complex, field))},
              {"lex_obstruction", to_json(lex_obstruction(complex, lex_order), ring->names())}};
}

std::string render_report(const Json& document, OutputFormat format) {
  if (format == OutputFormat::json) return document.dump(2) + "\n";
  std::string out;
  write_text(document, 0, out);
  return out;
}

}  // namespace srdegen
