#include "qg/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "qg/error.hpp"

namespace qg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

void check_schema(const Json& j) {
  if (j.is_object() && j.contains("schema")) {
    const Json& s = j.at("schema");
    if (!s.is_number_integer() || s.get<int>() > kSchemaVersion)
      throw FormatError("unsupported schema version " + s.dump());
  }
}

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double number_or_inf(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

const char* kind_name(BundleKind k) {
  switch (k) {
    case BundleKind::commutative: return "commutative";
    case BundleKind::dual: return "dual";
    case BundleKind::user: return "user";
  }
  return "user";
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const Json& j) {
  check_schema(j);
  const long long rows = get<long long>(j, "rows");
  const long long cols = get<long long>(j, "cols");
  if (rows < 0 || cols < 0 || rows > kMaxDenseDim || cols > kMaxDenseDim)
    throw FormatError("matrix shape out of range");
  const Json& data = field(j, "data");
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols)
    throw FormatError("matrix data length " + std::to_string(data.size()) + " != rows*cols = " +
                      std::to_string(rows * cols));
  CMatrix m(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    const Json& e = data[static_cast<std::size_t>(k)];
    double re = 0.0, im = 0.0;
    if (e.is_number()) {
      re = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      re = e[0].get<double>();
      im = e[1].get<double>();
    } else {
      throw FormatError("matrix entry " + std::to_string(k) + " is not [re, im]");
    }
    if (!std::isfinite(re) || !std::isfinite(im))
      throw FormatError("matrix entry " + std::to_string(k) + " is not finite");
    m(k / cols, k % cols) = Complex(re, im);
  }
  return m;
}

Json group_to_json(const FiniteGroup& g) {
  return {{"schema", kSchemaVersion}, {"name", g.name()}, {"order", g.order()},
          {"labels", g.labels()}, {"table", g.table()}};
}

RawGroup raw_group_from_json(const Json& j) {
  check_schema(j);
  RawGroup g;
  g.name = get<std::string>(j, "name");
  g.labels = get<std::vector<std::string>>(j, "labels");
  g.table = get<std::vector<std::vector<int>>>(j, "table");
  const int order = get<int>(j, "order");
  if (order != static_cast<int>(g.labels.size()))
    throw FormatError("order " + std::to_string(order) + " does not match " +
                      std::to_string(g.labels.size()) + " labels");
  return g;
}

FiniteGroup group_from_json(const Json& j) {
  RawGroup g = raw_group_from_json(j);
  return FiniteGroup(std::move(g.name), std::move(g.labels), std::move(g.table));
}

Json bundle_to_json(const QGBundle& b) {
  Json prov = {{"type", kind_name(b.kind)}};
  if (b.group) prov["group"] = group_to_json(*b.group);
  return {{"schema", kSchemaVersion},
          {"d", b.d},
          {"id", b.id},
          {"provenance", prov},
          {"W", matrix_to_json(b.w.dense())},
          {"V", matrix_to_json(b.v.dense())},
          {"W_hat", matrix_to_json(b.w_hat.dense())},
          {"V_hat", matrix_to_json(b.v_hat.dense())},
          {"J", matrix_to_json(b.j.m)},
          {"J_hat", matrix_to_json(b.j_hat.m)},
          {"U", matrix_to_json(b.u)},
          {"counit_vector", matrix_to_json(b.counit_vector)},
          {"haar_vector", matrix_to_json(b.haar_vector)}};
}

QGBundle bundle_from_json(const Json& j) {
  check_schema(j);
  QGBundle b;
  b.d = get<int>(j, "d");
  if (b.d < 1) throw FormatError("bundle dimension must be >= 1");
  const Eigen::Index dd = static_cast<Eigen::Index>(b.d) * b.d;
  auto op = [&](const char* key, Eigen::Index n) {
    CMatrix m = matrix_from_json(field(j, key));
    if (m.rows() != n || m.cols() != n)
      throw FormatError(std::string("'") + key + "' must be " + std::to_string(n) + "x" + std::to_string(n));
    return m;
  };
  auto vecf = [&](const char* key) {
    CMatrix m = matrix_from_json(field(j, key));
    if (m.rows() != b.d || m.cols() != 1)
      throw FormatError(std::string("'") + key + "' must be " + std::to_string(b.d) + "x1");
    return CVector(m.col(0));
  };
  b.w = Operator(op("W", dd));
  b.v = Operator(op("V", dd));
  b.w_hat = Operator(op("W_hat", dd));
  b.v_hat = Operator(op("V_hat", dd));
  b.j.m = op("J", b.d);
  b.j_hat.m = op("J_hat", b.d);
  b.u = op("U", b.d);
  b.counit_vector = vecf("counit_vector");
  b.haar_vector = vecf("haar_vector");
  b.id = j.contains("id") ? get<std::string>(j, "id") : std::string("user");
  const Json& prov = field(j, "provenance");
  const std::string type = get<std::string>(prov, "type");
  if (type == "commutative") b.kind = BundleKind::commutative;
  else if (type == "dual") b.kind = BundleKind::dual;
  else if (type == "user") b.kind = BundleKind::user;
  else throw FormatError("unknown provenance type '" + type + "'");
  if (prov.contains("group")) {
    b.group = group_from_json(prov.at("group"));
    if (b.group->order() != b.d) throw FormatError("provenance group order does not match d");
  } else if (b.kind != BundleKind::user) {
    throw FormatError("group provenance requires a 'group' document");
  }
  return b;
}

Json report_to_json(const VerifyReport& r) {
  Json cases = Json::array();
  for (const CheckCase& c : r.cases)
    cases.push_back({{"name", c.name},
                     {"anchor", c.anchor},
                     {"residual", number(c.residual)},
                     {"tolerance", number(c.tolerance)},
                     {"pass", c.pass},
                     {"gating", c.gating},
                     {"note", c.note}});
  return {{"schema", kSchemaVersion}, {"suite", r.suite},        {"group", r.group},
          {"seed", r.seed},           {"timing_ms", r.timing_ms}, {"all_pass", r.all_pass()},
          {"cases", std::move(cases)}};
}

VerifyReport report_from_json(const Json& j) {
  check_schema(j);
  VerifyReport r;
  r.suite = get<std::string>(j, "suite");
  r.group = get<std::string>(j, "group");
  r.seed = get<std::uint64_t>(j, "seed");
  r.timing_ms = get<double>(j, "timing_ms");
  for (const Json& c : field(j, "cases")) {
    CheckCase k;
    k.name = get<std::string>(c, "name");
    k.anchor = get<std::string>(c, "anchor");
    k.residual = number_or_inf(field(c, "residual"));
    k.tolerance = number_or_inf(field(c, "tolerance"));
    k.pass = get<bool>(c, "pass");
    k.gating = get<bool>(c, "gating");
    k.note = c.value("note", "");
    r.cases.push_back(std::move(k));
  }
  return r;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace qg
