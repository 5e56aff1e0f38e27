#pragma once

#include <vector>

#include "dbh/fock.hpp"
#include "dbh/lattice.hpp"
#include "dbh/types.hpp"

namespace dbh {

/// Physical constants of the driven-dissipative Bose-Hubbard model.
/// All rates in units of gamma (gamma = 1 internally).
struct ModelParams {
  double delta = 30.0;  // laser detuning
  double u = 20.0;      // Kerr nonlinearity
  double f = 0.0;       // coherent drive amplitude
  double j = 10.0;      // hopping amplitude (the Hamiltonian carries j/z)
  double gamma = 1.0;   // single-photon loss rate
  int z = 4;            // coordination number
};

/// Defaults of the studied regime: U/gamma = 20, 4-photon resonance
/// (Delta = 1.5 U), J/U = 0.5, square-lattice coordination.
ModelParams default_params();

/// Mean fields <a_j> of the outer neighbours, one entry per boundary link,
/// aligned with boundary_links(lattice, cluster). Link multiplicity is
/// applied by the Hamiltonian assembly, not folded into the field values.
using BoundaryField = std::vector<Complex>;

/// Cluster Hamiltonian: on-site detuning/Kerr/drive terms, internal hopping
/// (self-links reduce to number terms), and the mean-field boundary term
/// -(J/z) sum_links mult * (a_i^dag phi + a_i phi*). Hermitian by
/// construction. Throws ConfigError when fields do not match the link list.
Operator cluster_hamiltonian(const ModelParams& params, const Lattice& lattice,
                             int cluster_index, const FockSpace& space,
                             const BoundaryField& fields);

/// H - i (gamma/2) sum_i n_i on the cluster.
Operator effective_hamiltonian(const Operator& h, const ModelParams& params,
                               const ClusterShape& shape, const FockSpace& space);

/// Whole lattice treated as a single cluster (no mean-field boundary).
Operator lattice_hamiltonian(const ModelParams& params, const Lattice& lattice,
                             const FockSpace& space);
ClusterShape whole_lattice_shape(const Lattice& lattice);

/// Single-mode parameters of the k = 0 reduction.
struct EffectiveKerrParams {
  double omega0 = 0.0;
  double f_eff = 0.0;
  double u_eff = 0.0;
  int n_sites = 1;
};

/// Frequency-shift convention for omega0. `hopping_normalized` follows the
/// J/z normalization of the lattice Hamiltonian (omega0 = -Delta - J);
/// `literal_jz` uses omega0 = -Delta - J*z for comparison.
enum class KerrShiftConvention { hopping_normalized, literal_jz };

EffectiveKerrParams kerr_effective_params(
    const ModelParams& params, int n_sites,
    KerrShiftConvention convention = KerrShiftConvention::hopping_normalized);

}  // namespace dbh
