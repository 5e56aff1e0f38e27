#include "dbh/fock.hpp"

#include <cmath>

namespace dbh {

Operator annihilation_matrix(const FockSpace& space) {
  const int d = space.dim();
  Operator a = Operator::Zero(d, d);
  for (int n = 0; n < space.n_max; ++n) {
    a(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
  }
  return a;
}

Operator creation_matrix(const FockSpace& space) {
  return annihilation_matrix(space).adjoint();
}

Operator number_matrix(const FockSpace& space) {
  const int d = space.dim();
  Operator n = Operator::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

int cluster_dim(const ClusterShape& shape, const FockSpace& space) {
  int d = 1;
  for (int s = 0; s < shape.size(); ++s) d *= space.dim();
  return d;
}

Operator embed_operator(const Operator& op, int position, const ClusterShape& shape,
                        const FockSpace& space) {
  if (position < 0 || position >= shape.size()) {
    throw ConfigError("embed_operator: position " + std::to_string(position) +
                      " out of range for cluster of size " + std::to_string(shape.size()));
  }
  const int d = space.dim();
  if (op.rows() != d || op.cols() != d) {
    throw ConfigError("embed_operator: operator dimension does not match Fock space");
  }
  int left = 1;
  for (int s = 0; s < position; ++s) left *= d;
  int right = 1;
  for (int s = position + 1; s < shape.size(); ++s) right *= d;

  const int dim = left * d * right;
  Operator out = Operator::Zero(dim, dim);
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      const int base = l * d * right + r;
      for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
          if (op(m, n) != Complex(0.0, 0.0)) {
            out(base + m * right, base + n * right) = op(m, n);
          }
        }
      }
    }
  }
  return out;
}

StateVec vacuum_state(const ClusterShape& shape, const FockSpace& space) {
  StateVec psi = StateVec::Zero(cluster_dim(shape, space));
  psi(0) = 1.0;
  return psi;
}

double top_level_population(const StateVec& psi, const ClusterShape& shape,
                            const FockSpace& space) {
  const ClusterBasis basis(shape, space);
  double top = 0.0;
  double total = 0.0;
  for (int b = 0; b < basis.dim; ++b) {
    const double w = std::norm(psi(b));
    total += w;
    for (int s = 0; s < basis.n_sites; ++s) {
      if (basis.occupation(b, s) == space.n_max) {
        top += w;
        break;
      }
    }
  }
  return total > 0.0 ? top / total : 0.0;
}

ClusterBasis::ClusterBasis(const ClusterShape& shape, const FockSpace& space)
    : n_sites(shape.size()), site_dim(space.dim()), dim(cluster_dim(shape, space)) {
  stride.resize(n_sites);
  int s = 1;
  for (int p = n_sites - 1; p >= 0; --p) {
    stride[p] = s;
    s *= site_dim;
  }
  sqrt_n.resize(site_dim + 1);
  for (int k = 0; k <= site_dim; ++k) sqrt_n[k] = std::sqrt(static_cast<double>(k));
}

void ClusterBasis::add_annihilation(int site_pos, Complex scale, const StateVec& in,
                                    StateVec& out) const {
  const int str = stride[site_pos];
  for (int b = 0; b < dim; ++b) {
    const int n = occupation(b, site_pos);
    if (n < site_dim - 1) out(b) += scale * sqrt_n[n + 1] * in(b + str);
  }
}

void ClusterBasis::add_creation(int site_pos, Complex scale, const StateVec& in,
                                StateVec& out) const {
  const int str = stride[site_pos];
  for (int b = 0; b < dim; ++b) {
    const int n = occupation(b, site_pos);
    if (n > 0) out(b) += scale * sqrt_n[n] * in(b - str);
  }
}

void ClusterBasis::add_hop(int p, int q, Complex scale, const StateVec& in,
                           StateVec& out) const {
  if (p == q) {
    for (int b = 0; b < dim; ++b) {
      out(b) += scale * static_cast<double>(occupation(b, p)) * in(b);
    }
    return;
  }
  // <b| a_p^dag a_q |in>: source index has one quantum less at p, one more at q.
  const int sp = stride[p];
  const int sq = stride[q];
  for (int b = 0; b < dim; ++b) {
    const int np = occupation(b, p);
    const int nq = occupation(b, q);
    if (np >= 1 && nq < site_dim - 1) {
      out(b) += scale * sqrt_n[np] * sqrt_n[nq + 1] * in(b - sp + sq);
    }
  }
}

void ClusterBasis::add_number_total(Complex scale, const StateVec& in, StateVec& out) const {
  for (int b = 0; b < dim; ++b) {
    int n_tot = 0;
    for (int s = 0; s < n_sites; ++s) n_tot += occupation(b, s);
    out(b) += scale * static_cast<double>(n_tot) * in(b);
  }
}

Complex ClusterBasis::site_field(const StateVec& psi, int site_pos) const {
  const int str = stride[site_pos];
  Complex acc(0.0, 0.0);
  for (int b = 0; b < dim; ++b) {
    const int n = occupation(b, site_pos);
    if (n < site_dim - 1) acc += std::conj(psi(b)) * sqrt_n[n + 1] * psi(b + str);
  }
  return acc;
}

double ClusterBasis::site_density(const StateVec& psi, int site_pos) const {
  double acc = 0.0;
  for (int b = 0; b < dim; ++b) {
    acc += static_cast<double>(occupation(b, site_pos)) * std::norm(psi(b));
  }
  return acc;
}

double ClusterBasis::total_density(const StateVec& psi) const {
  double acc = 0.0;
  for (int b = 0; b < dim; ++b) {
    int n_tot = 0;
    for (int s = 0; s < n_sites; ++s) n_tot += occupation(b, s);
    acc += static_cast<double>(n_tot) * std::norm(psi(b));
  }
  return acc;
}

}  // namespace dbh
