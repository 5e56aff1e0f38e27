#include "dbh/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dbh {

ClusterTemplate parse_cluster_template(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos) {
    throw ConfigError("cluster template must look like '1x2', got '" + text + "'");
  }
  ClusterTemplate t;
  try {
    const int rows = std::stoi(text.substr(0, sep));
    const int cols = std::stoi(text.substr(sep + 1));
    t.len_y = rows;
    t.len_x = cols;
  } catch (const std::exception&) {
    throw ConfigError("cluster template must look like '1x2', got '" + text + "'");
  }
  if (t.len_x < 1 || t.len_y < 1) {
    throw ConfigError("cluster template extents must be positive, got '" + text + "'");
  }
  if (t.len_x * t.len_y > 3 || (t.len_x > 1 && t.len_y > 1)) {
    throw ConfigError("only 1x1, 1x2 and 1x3 cluster templates are supported, got '" + text +
                      "'");
  }
  return t;
}

std::string format_cluster_template(const ClusterTemplate& t) {
  return std::to_string(t.len_y) + "x" + std::to_string(t.len_x);
}

Lattice build_lattice(int lx, int ly, const ClusterTemplate& tpl) {
  if (lx < 1 || ly < 1) {
    throw ConfigError("lattice dimensions must be positive, got " + std::to_string(lx) + "x" +
                      std::to_string(ly));
  }
  if (lx % tpl.len_x != 0 || ly % tpl.len_y != 0) {
    throw ConfigError("cluster template " + format_cluster_template(tpl) +
                      " does not tile a " + std::to_string(lx) + "x" + std::to_string(ly) +
                      " lattice");
  }

  Lattice lat;
  lat.lx = lx;
  lat.ly = ly;
  lat.n_sites = lx * ly;

  const bool chain = (lx == 1) != (ly == 1);
  lat.z = chain ? 2 : 4;
  const bool use_x = !chain || lx > 1;
  const bool use_y = !chain || ly > 1;

  std::map<std::pair<int, int>, int> bond_mult;
  for (int s = 0; s < lat.n_sites; ++s) {
    const int x = lat.x_of(s);
    const int y = lat.y_of(s);
    if (use_x) {
      const int nb = lat.site_at(x + 1, y);
      bond_mult[{std::min(s, nb), std::max(s, nb)}] += 1;
    }
    if (use_y) {
      const int nb = lat.site_at(x, y + 1);
      bond_mult[{std::min(s, nb), std::max(s, nb)}] += 1;
    }
  }
  for (const auto& [pair, mult] : bond_mult) {
    lat.bonds.push_back({pair.first, pair.second, mult});
  }

  lat.site_cluster.assign(lat.n_sites, -1);
  for (int by = 0; by < ly / tpl.len_y; ++by) {
    for (int bx = 0; bx < lx / tpl.len_x; ++bx) {
      ClusterShape shape;
      for (int dy = 0; dy < tpl.len_y; ++dy) {
        for (int dx = 0; dx < tpl.len_x; ++dx) {
          const int s = lat.site_at(bx * tpl.len_x + dx, by * tpl.len_y + dy);
          shape.sites.push_back(s);
          lat.site_cluster[s] = static_cast<int>(lat.tiling.size());
        }
      }
      lat.tiling.push_back(std::move(shape));
    }
  }
  return lat;
}

double min_image_distance(const Lattice& lattice, int i, int j) {
  int dx = std::abs(lattice.x_of(i) - lattice.x_of(j));
  int dy = std::abs(lattice.y_of(i) - lattice.y_of(j));
  dx = std::min(dx, lattice.lx - dx);
  dy = std::min(dy, lattice.ly - dy);
  return std::sqrt(static_cast<double>(dx * dx + dy * dy));
}

std::vector<BoundaryLink> boundary_links(const Lattice& lattice, int cluster_index) {
  std::vector<BoundaryLink> links;
  for (const Bond& b : lattice.bonds) {
    const bool a_in = lattice.site_cluster[b.a] == cluster_index;
    const bool b_in = lattice.site_cluster[b.b] == cluster_index;
    if (a_in && !b_in) {
      links.push_back({b.a, b.b, b.multiplicity});
    } else if (b_in && !a_in) {
      links.push_back({b.b, b.a, b.multiplicity});
    }
  }
  return links;
}

std::vector<Bond> internal_bonds(const Lattice& lattice, int cluster_index) {
  std::vector<Bond> out;
  for (const Bond& b : lattice.bonds) {
    if (lattice.site_cluster[b.a] == cluster_index &&
        lattice.site_cluster[b.b] == cluster_index) {
      out.push_back(b);
    }
  }
  return out;
}

std::vector<double> distance_bins(const Lattice& lattice) {
  std::vector<double> ds;
  for (int i = 0; i < lattice.n_sites; ++i) {
    for (int j = i; j < lattice.n_sites; ++j) {
      const double d = min_image_distance(lattice, i, j);
      bool found = false;
      for (double e : ds) {
        if (std::abs(e - d) < 1e-12) {
          found = true;
          break;
        }
      }
      if (!found) ds.push_back(d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace dbh
