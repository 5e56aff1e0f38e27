#pragma once

#include <string>
#include <vector>

#include "dbh/fock.hpp"
#include "dbh/types.hpp"

namespace dbh {

/// Undirected nearest-neighbour bond with wrap-around multiplicity.
struct Bond {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
};

/// Bond crossing a cluster boundary, seen from the inner site.
struct BoundaryLink {
  int inner = 0;
  int outer = 0;
  int multiplicity = 1;
};

/// Rectangular cluster template, extents in lattice units.
/// Parsed from "RxC" (rows x columns): "1x2" spans two sites along x.
struct ClusterTemplate {
  int len_x = 1;
  int len_y = 1;
};

ClusterTemplate parse_cluster_template(const std::string& text);
std::string format_cluster_template(const ClusterTemplate& t);

/// 2D square lattice with periodic boundaries, tiled by equal clusters.
///
/// Site i sits at (i % lx, i / lx). Coordination is z = 4 for genuine 2D
/// lattices; a chain (exactly one extent equal to 1) carries z = 2 with the
/// degenerate direction dropped, so the two-site reference system is the
/// plain periodic pair with doubled bonds. The 1x1 lattice keeps both
/// wrap-around self-links (z = 4), which reduce to the -J number shift of
/// the k = 0 mapping.
struct Lattice {
  int lx = 1;
  int ly = 1;
  int n_sites = 1;
  int z = 4;
  std::vector<Bond> bonds;
  std::vector<ClusterShape> tiling;
  std::vector<int> site_cluster;  // site id -> index into tiling

  int x_of(int site) const { return site % lx; }
  int y_of(int site) const { return site / lx; }
  int site_at(int x, int y) const {
    x = ((x % lx) + lx) % lx;
    y = ((y % ly) + ly) % ly;
    return y * lx + x;
  }
};

/// Throws ConfigError if dimensions are nonpositive or the template does not
/// tile the lattice exactly.
Lattice build_lattice(int lx, int ly, const ClusterTemplate& tpl);

/// Minimum-image Euclidean distance in lattice-constant units.
double min_image_distance(const Lattice& lattice, int i, int j);

/// Bonds with exactly one endpoint inside cluster `c`, multiplicities kept.
std::vector<BoundaryLink> boundary_links(const Lattice& lattice, int cluster_index);

/// Bonds with both endpoints inside cluster `c` (self-links included).
std::vector<Bond> internal_bonds(const Lattice& lattice, int cluster_index);

/// Sorted distinct pair distances on the lattice, d = 0 first.
std::vector<double> distance_bins(const Lattice& lattice);

}  // namespace dbh
