#include "dbh/model.hpp"

#include <cmath>

namespace dbh {

ModelParams default_params() {
  ModelParams p;
  p.gamma = 1.0;
  p.u = 20.0 * p.gamma;
  p.delta = 1.5 * p.u;
  p.j = 0.5 * p.u;
  p.f = 0.0;
  p.z = 4;
  return p;
}

namespace {

int position_of(const ClusterShape& shape, int site) {
  for (int p = 0; p < shape.size(); ++p) {
    if (shape.sites[p] == site) return p;
  }
  return -1;
}

}  // namespace

Operator cluster_hamiltonian(const ModelParams& params, const Lattice& lattice,
                             int cluster_index, const FockSpace& space,
                             const BoundaryField& fields) {
  const ClusterShape& shape = lattice.tiling.at(cluster_index);
  const auto links = boundary_links(lattice, cluster_index);
  if (fields.size() != links.size()) {
    throw ConfigError("cluster_hamiltonian: got " + std::to_string(fields.size()) +
                      " boundary fields for " + std::to_string(links.size()) + " links");
  }

  const Operator a = annihilation_matrix(space);
  const Operator ad = a.adjoint();
  const Operator n = number_matrix(space);
  const Operator kerr = ad * ad * a * a;

  const int dim = cluster_dim(shape, space);
  Operator h = Operator::Zero(dim, dim);

  for (int p = 0; p < shape.size(); ++p) {
    h += embed_operator(-params.delta * n + 0.5 * params.u * kerr + params.f * (a + ad), p,
                        shape, space);
  }

  const double hop = params.j / static_cast<double>(params.z);
  for (const Bond& b : internal_bonds(lattice, cluster_index)) {
    const int pa = position_of(shape, b.a);
    const int pb = position_of(shape, b.b);
    const double w = hop * b.multiplicity;
    if (pa == pb) {
      // self-link: a^dag a + a a^dag restricted to the pair term gives 2n
      h += embed_operator(-w * 2.0 * n, pa, shape, space);
    } else {
      const Operator hop_ab =
          embed_operator(ad, pa, shape, space) * embed_operator(a, pb, shape, space);
      h += -w * (hop_ab + hop_ab.adjoint());
    }
  }

  for (std::size_t k = 0; k < links.size(); ++k) {
    const int p = position_of(shape, links[k].inner);
    const Complex phi = fields[k];
    const double w = hop * links[k].multiplicity;
    h += -w * (phi * embed_operator(ad, p, shape, space) +
               std::conj(phi) * embed_operator(a, p, shape, space));
  }
  return h;
}

Operator effective_hamiltonian(const Operator& h, const ModelParams& params,
                               const ClusterShape& shape, const FockSpace& space) {
  const int dim = cluster_dim(shape, space);
  if (h.rows() != dim || h.cols() != dim) {
    throw ConfigError("effective_hamiltonian: dimension mismatch");
  }
  Operator out = h;
  const Operator n = number_matrix(space);
  for (int p = 0; p < shape.size(); ++p) {
    out += Complex(0.0, -0.5 * params.gamma) * embed_operator(n, p, shape, space);
  }
  return out;
}

ClusterShape whole_lattice_shape(const Lattice& lattice) {
  ClusterShape shape;
  shape.sites.resize(lattice.n_sites);
  for (int s = 0; s < lattice.n_sites; ++s) shape.sites[s] = s;
  return shape;
}

Operator lattice_hamiltonian(const ModelParams& params, const Lattice& lattice,
                             const FockSpace& space) {
  const ClusterShape shape = whole_lattice_shape(lattice);
  const Operator a = annihilation_matrix(space);
  const Operator ad = a.adjoint();
  const Operator n = number_matrix(space);
  const Operator kerr = ad * ad * a * a;

  const int dim = cluster_dim(shape, space);
  Operator h = Operator::Zero(dim, dim);
  for (int p = 0; p < shape.size(); ++p) {
    h += embed_operator(-params.delta * n + 0.5 * params.u * kerr + params.f * (a + ad), p,
                        shape, space);
  }
  const double hop = params.j / static_cast<double>(params.z);
  for (const Bond& b : lattice.bonds) {
    const double w = hop * b.multiplicity;
    if (b.a == b.b) {
      h += embed_operator(-w * 2.0 * n, b.a, shape, space);
    } else {
      const Operator hop_ab =
          embed_operator(ad, b.a, shape, space) * embed_operator(a, b.b, shape, space);
      h += -w * (hop_ab + hop_ab.adjoint());
    }
  }
  return h;
}

EffectiveKerrParams kerr_effective_params(const ModelParams& params, int n_sites,
                                          KerrShiftConvention convention) {
  if (n_sites < 1) throw ConfigError("kerr_effective_params: n_sites must be >= 1");
  EffectiveKerrParams out;
  out.n_sites = n_sites;
  out.f_eff = params.f * std::sqrt(static_cast<double>(n_sites));
  out.u_eff = params.u / static_cast<double>(n_sites);
  out.omega0 = convention == KerrShiftConvention::hopping_normalized
                   ? -params.delta - params.j
                   : -params.delta - params.j * static_cast<double>(params.z);
  return out;
}

}  // namespace dbh
