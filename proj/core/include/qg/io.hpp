#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qg/bundle.hpp"
#include "qg/group.hpp"
#include "qg/report.hpp"
#include "qg/tensor.hpp"

namespace qg {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"rows", "cols", "data": [[re, im], ...]} row-major.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

/// {"name", "order", "labels", "table"}
Json group_to_json(const FiniteGroup& g);
/// Rejects invalid tables with GroupError naming the failing axiom and indices.
FiniteGroup group_from_json(const Json& j);
/// Shape-checks the document and returns the raw fields without validating axioms.
struct RawGroup {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;
};
RawGroup raw_group_from_json(const Json& j);

Json bundle_to_json(const QGBundle& b);
/// Reassembles a bundle from stored operators. Shapes are checked, identities
/// are not: run validate_qg on the result.
QGBundle bundle_from_json(const Json& j);

Json report_to_json(const VerifyReport& r);
VerifyReport report_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qg
