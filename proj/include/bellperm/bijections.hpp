#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bellperm/partitions.hpp"
#include "bellperm/permutation.hpp"

namespace bellperm {

/// BP2 -> partitions. Weak exceedance letters open blocks 1..k, then the
/// remaining letters, largest first, are pushed to the front of block inom(j).
/// Throws NotBp2.
SetPartition lambda_map(Permutation const& sigma);

/// The same map routed through the inom code and the canonical form.
SetPartition lambda_map_via_code(Permutation const& sigma);

/// Inverse of lambda_map().
Permutation chi_map(SetPartition const& pi);

/// Each block sorted decreasingly and closed into a cycle.
Permutation mu_map(SetPartition const& pi);

/// Every cycle, read from its maximum, is strictly decreasing.
bool is_bp1(Permutation const& sigma);

/// BP1 -> BP2. Throws NotBp1.
Permutation beta_map(Permutation const& sigma1);

/// BP2 -> BP1, inverse of beta_map(). Throws NotBp2.
Permutation theta_map(Permutation const& sigma2);

/// mu_map over enumerate_partitions(n, k).
void for_each_bp1(int n, std::optional<int> k,
                  std::function<void(Permutation const&)> const& visit);

struct DiagramReport {
  /// phi_tilde_inv(beta(s)) == nu(phi_tilde_inv(s))
  bool code_normalizes = false;
  /// zeta(phi_tilde_inv(beta(s))) == phi_tilde_inv(s)
  bool zeta_recovers = false;
  /// from_canonical(nu(phi_tilde_inv(s))) == partition into cycle supports
  bool partition_matches = false;
  /// cycles of s == |w-Exc(beta(s))|
  bool block_count_preserved = false;

  bool ok() const {
    return code_normalizes && zeta_recovers && partition_matches &&
           block_count_preserved;
  }
};

/// Checks the four commutation facts for one BP1 permutation. Throws NotBp1.
DiagramReport verify_diagram(Permutation const& sigma1);

}  // namespace bellperm
