#ifndef SRDEGEN_REPORT_HPP
#define SRDEGEN_REPORT_HPP

#include "srdegen/complex.hpp"
#include "srdegen/pipeline.hpp"
#include "srdegen/singularity.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace srdegen {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, text };
OutputFormat parse_format(std::string_view text);

// JSON keys are snake_case; vertices are 1-based; verdicts are strings.
Json to_json(const SimplicialComplex& complex);
Json to_json(const ComplexPropertyReport& report);
Json to_json(const JacobianAnalysis& analysis);
Json to_json(const ObstructionVerdict& verdict, std::span<const std::string> names);
Json to_json(const SupportViolation& violation, std::span<const std::string> names);
Json to_json(const DegenerationReport& report);
Json to_json(const std::vector<ScanEntry>& scan);
Json to_json(const LiftSearchResult& result);
Json to_json(const PointCountResult& result);
Json to_json(const ModularReduction& reduction, std::span<const std::string> names);

/// Report of the `complex` command: ideal, properties and the lex certificate.
Json complex_report(const SimplicialComplex& complex, const Field& field, const MonomialOrder& lex_order);

/// Deterministic text: JSON is pretty-printed with two-space indents, text is
/// an indented key/value listing of the same document.
std::string render_report(const Json& document, OutputFormat format);

}  // namespace srdegen

#endif
