#pragma once

#include <string>
#include <vector>

#include "qg/report.hpp"

namespace qg {

/// A finite group given by its Cayley table.
///
/// Element 0 is always the identity: the basis of l2(G) used by every matrix
/// in the library is (δ_{g0}, ..., δ_{g(d-1)}) in label order.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates the table and throws GroupError naming the first failing axiom.
  FiniteGroup(std::string name, std::vector<std::string> labels,
              std::vector<std::vector<int>> table);

  int order() const noexcept { return static_cast<int>(labels_.size()); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  int identity_index() const noexcept { return 0; }
  const std::vector<int>& inverses() const noexcept { return inverse_; }

  int mul(int i, int j) const { return table_[i][j]; }
  int inv(int i) const { return inverse_[i]; }
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

enum class GroupFamily { cyclic, dihedral, symmetric, dicyclic, direct_product };

struct GroupSpec {
  GroupFamily family = GroupFamily::cyclic;
  int n = 1;
  std::vector<GroupSpec> factors;  // direct_product only

  static GroupSpec cyclic(int n) { return {GroupFamily::cyclic, n, {}}; }
  static GroupSpec dihedral(int n) { return {GroupFamily::dihedral, n, {}}; }
  static GroupSpec symmetric(int n) { return {GroupFamily::symmetric, n, {}}; }
  static GroupSpec dicyclic(int n) { return {GroupFamily::dicyclic, n, {}}; }
  static GroupSpec product(std::vector<GroupSpec> f) {
    return {GroupFamily::direct_product, 0, std::move(f)};
  }
};

/// Order cap for constructed groups: QG_MAX_ORDER if set, otherwise 64.
int max_group_order();

FiniteGroup build_standard(const GroupSpec& spec);
FiniteGroup build_standard(const GroupSpec& spec, int max_order);

/// Parses "cyclic:4", "symmetric:3", "Z2xS3", "Q8", "D4" style names.
GroupSpec parse_group_spec(const std::string& text);
GroupFamily parse_family(const std::string& text);

/// Checks every axiom and reports each one; never throws.
VerifyReport validate_group(const std::string& name, const std::vector<std::string>& labels,
                            const std::vector<std::vector<int>>& table);
VerifyReport validate_group(const FiniteGroup& g);

}  // namespace qg
