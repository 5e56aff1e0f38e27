#pragma once

#include <vector>

#include "dbh/types.hpp"

namespace dbh {

/// Truncated single-mode Fock space |0>,|1>,...,|n_max>.
struct FockSpace {
  int n_max = 1;
  int dim() const { return n_max + 1; }
};

/// Ordered list of lattice-site ids forming one cluster. The basis of the
/// cluster Hilbert space is the Kronecker product over `sites`, with the
/// first listed site varying slowest.
struct ClusterShape {
  std::vector<int> sites;
  int size() const { return static_cast<int>(sites.size()); }
};

Operator annihilation_matrix(const FockSpace& space);
Operator creation_matrix(const FockSpace& space);
Operator number_matrix(const FockSpace& space);

/// op acting on the site at `position`, identity on every other factor.
/// Throws ConfigError if position is out of range or op has the wrong size.
Operator embed_operator(const Operator& op, int position, const ClusterShape& shape,
                        const FockSpace& space);

int cluster_dim(const ClusterShape& shape, const FockSpace& space);

/// |0,...,0> amplitude vector of the cluster.
StateVec vacuum_state(const ClusterShape& shape, const FockSpace& space);

/// Probability weight of basis states with any site occupying level n_max.
/// Used as the cutoff-adequacy alarm; `psi` need not be normalized.
double top_level_population(const StateVec& psi, const ClusterShape& shape,
                            const FockSpace& space);

/// Index bookkeeping for matrix-free ladder applications on one cluster.
/// Site s in the basis index b occupies level (b / stride[s]) % (n_max+1).
struct ClusterBasis {
  int n_sites = 0;
  int site_dim = 0;
  int dim = 0;
  std::vector<int> stride;
  std::vector<double> sqrt_n;  // sqrt_n[k] = sqrt(k), k = 0..n_max+1

  ClusterBasis() = default;
  ClusterBasis(const ClusterShape& shape, const FockSpace& space);

  int occupation(int basis_index, int site_pos) const {
    return (basis_index / stride[site_pos]) % site_dim;
  }

  // out += scale * a_s |in>
  void add_annihilation(int site_pos, Complex scale, const StateVec& in, StateVec& out) const;
  // out += scale * a_s^dag |in>
  void add_creation(int site_pos, Complex scale, const StateVec& in, StateVec& out) const;
  // out += scale * (a_p^dag a_q) |in>   (p == q reduces to the number operator)
  void add_hop(int p, int q, Complex scale, const StateVec& in, StateVec& out) const;
  // out += scale * (n_total diag) |in>
  void add_number_total(Complex scale, const StateVec& in, StateVec& out) const;

  Complex site_field(const StateVec& psi, int site_pos) const;   // <a_s>, unnormalized
  double site_density(const StateVec& psi, int site_pos) const;  // <n_s>, unnormalized
  double total_density(const StateVec& psi) const;               // <sum_s n_s>, unnormalized
};

}  // namespace dbh
