#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qg/io.hpp"
#include "qg/report.hpp"

namespace qg {

enum class SuiteKind { pentagon, products, lie, multipliers, lp, all };

SuiteKind parse_suite_kind(const std::string& text);
std::string to_string(SuiteKind k);

struct SuiteConfig {
  Tolerance tol{1e-10, 1e-10};
  /// Tolerance for sampled algebraic identities (associativity and the like).
  double identity_tol = 1e-9;
  int samples = 200;
  std::uint64_t seed = 7;
  std::vector<double> p_values{1.5, 2.0, 3.0};
  /// Exact module-map dimension is attempted up to this order.
  int max_exact_dim_order = 6;
};

VerifyReport run_suite(SuiteKind kind, const FiniteGroup& g, const SuiteConfig& cfg = {});

enum class StructureProduct { star, bullet, ostar, ostar_plus };

StructureProduct parse_structure_product(const std::string& text);
std::string to_string(StructureProduct p);

/// c[i][j][k]: coefficient of basis[k] in basis[i] · basis[j]. star/bullet use
/// the d² matrix units, ostar/ostar_plus the trace-zero basis.
struct StructureTable {
  std::string group;
  StructureProduct product = StructureProduct::star;
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<Complex>>> coefficients;
};

/// Throws DimensionError above `max_order`.
StructureTable emit_structure_constants(const FiniteGroup& g, StructureProduct p,
                                        int max_order = 12);

/// Nonzero entries only (|c| > 1e-14).
Json table_to_json(const StructureTable& t);
std::string table_to_csv(const StructureTable& t);

}  // namespace qg
