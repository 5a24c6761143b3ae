#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charvar/dimensions.hpp"
#include "charvar/endoscopy.hpp"
#include "charvar/group_datum.hpp"

namespace charvar {

/// A verdict field together with the result it rests on.
struct Citation {
  std::string rule;   // stable tag, e.g. "terminality-criterion"
  std::string basis;  // the mathematical statement backing the field
};

enum class QFactorial { True, Unknown };

/// Normality / local factoriality of the representation variety of a
/// single almost-simple factor.
struct RepProperties {
  SimpleTypeRank factor_type;
  bool normal = true;
  bool locally_factorial = true;
  std::string note;
};

/// Codimension data backing a verdict, one record per almost-simple factor.
struct FactorSupport {
  SimpleTypeRank type;
  CodimReport reducible;
  std::optional<long> min_endoscopic_codim;
};

/// Singularity verdict for one connected component Ch(Pi, G)_z.
struct ComponentVerdict {
  CenterElement component;
  bool normal = true;
  Citation normal_cite;
  bool symplectic = true;
  Citation symplectic_cite;
  bool terminal = false;
  std::string terminal_reason;
  Citation terminal_cite;
  QFactorial q_factorial = QFactorial::Unknown;
  Citation q_factorial_cite;
  /// Representation-variety properties, one per factor (twist restricted).
  std::vector<RepProperties> rep_properties;
  std::vector<FactorSupport> supporting;
};

struct AnalysisRequest {
  ReductiveGroupDatum datum;
  GenusDatum genus;
  std::optional<CenterElement> twist;  // nullopt = all components
};

ComponentVerdict classify_component(const ReductiveGroupDatum& datum, GenusDatum g,
                                    const CenterElement& z);

RepProperties rep_variety_properties(const ReductiveGroupDatum& datum, GenusDatum g,
                                     const CenterElement& z);

/// Full structured report: dimensions, reducible-locus and endoscopic
/// supporting data per simple factor, and a verdict per requested component.
/// Deterministic: objects have sorted keys and integer values only.
nlohmann::json analyze(const AnalysisRequest& request);

/// Human-readable rendering of an analyze() report.
std::string render_report_text(const nlohmann::json& report);

}  // namespace charvar
