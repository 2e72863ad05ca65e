#ifndef EBF_GEOMETRY_HPP
#define EBF_GEOMETRY_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ebf/types.hpp"

namespace ebf {

/// A sample point of the unit sphere, kept in both chart coordinates
/// (theta, phi) and ambient coordinates (x, y, z).
struct SpherePoint {
  double theta = 0.0;  // azimuth in [0, 2*pi)
  double phi = 0.0;    // polar angle in (0, pi)
  double x = 0.0, y = 0.0, z = 0.0;
};

/// Embed (theta, phi) as x = sin(phi)cos(theta), y = sin(phi)sin(theta),
/// z = cos(phi).
SpherePoint sphere_point(double theta, double phi);

/// Closed plaquette cover of a sphere grid, CSR-style.  Each plaquette
/// lists its vertices in the orientation used by all phase sums:
/// counterclockwise as seen from outside the sphere.
struct PlaquetteSet {
  std::vector<int> offsets;  // size count() + 1
  std::vector<int> verts;    // node indices, traversal order
  std::size_t count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

/// Staggered longitude/colatitude mesh of the unit sphere.
///
/// Nodes sit at theta_a = 2*pi*a / n_theta and phi_b = pi*(b + 1/2) / n_phi,
/// so the poles are never sample points.  The plaquette list holds the
/// n_theta*(n_phi-1) quadrilaterals plus one polygonal cap per pole; the caps
/// close the cover so that phase sums over the whole set telescope to an
/// exact multiple of 2*pi.
struct SphereGrid {
  int n_theta = 0;
  int n_phi = 0;
  std::vector<SpherePoint> nodes;         // index b * n_theta + a
  PlaquetteSet plaquettes;                // quads first, then the two caps
  std::vector<std::array<int, 2>> edges;  // unique undirected grid edges

  std::size_t node_count() const { return nodes.size(); }
  int node_index(int a, int b) const;  // wraps a periodically
  const SpherePoint& node(int a, int b) const { return nodes[node_index(a, b)]; }
  int nearest_node(double theta, double phi) const;
};

/// Build the grid.  Throws PreconditionError below the documented minimum
/// resolution (n_theta >= 8, n_phi >= 5).
SphereGrid build_sphere_grid(int n_theta, int n_phi);

/// Signed solid angle of the geodesic polygon through plaquette p's vertices.
/// Positive for the grid's own traversal orientation.
double plaquette_signed_area(const SphereGrid& g, std::size_t p);

/// Sum of signed plaquette areas; 4*pi for a correctly oriented closed cover.
double signed_area_sum(const SphereGrid& g);

/// A point of a sphere or product-of-spheres domain.
struct DomainPoint {
  SpherePoint first;
  SpherePoint second;  // meaningful only when is_product
  bool is_product = false;
};

/// An embedded 2-cycle: a sphere grid together with the map taking its node
/// indices to node indices of the ambient domain.
struct Cycle {
  std::string label;
  SphereGrid grid;
  std::vector<std::size_t> lift;
};

using CycleBasis = std::vector<Cycle>;

enum class DomainKind { Sphere, Product };

/// Immutable parameter domain: S^2 or S^2 x S^2.  Product nodes are indexed
/// i1 * second.node_count() + i2.  Safe for concurrent reads.
class Domain {
 public:
  static std::shared_ptr<const Domain> sphere(SphereGrid g);
  static std::shared_ptr<const Domain> product(SphereGrid g1, SphereGrid g2,
                                               int basepoint_first,
                                               int basepoint_second);

  DomainKind kind() const { return kind_; }
  const SphereGrid& first() const { return first_; }
  const SphereGrid& second() const;
  int basepoint_first() const { return bp1_; }
  int basepoint_second() const { return bp2_; }

  std::size_t node_count() const;
  DomainPoint node_point(std::size_t i) const;

  /// Undirected adjacency used by the eigenvalue-ordering sweep.
  const std::vector<std::array<std::size_t, 2>>& edge_list() const {
    return edges_;
  }

  /// The 2-cycles Chern pairings are taken against: the fundamental cycle
  /// for a sphere, (first x {q0}, {p0} x second) for a product.
  CycleBasis cycle_basis() const;

  /// True when the two domains have identical resolutions and basepoints.
  bool same_layout(const Domain& other) const;

 private:
  Domain() = default;

  DomainKind kind_ = DomainKind::Sphere;
  SphereGrid first_;
  SphereGrid second_;  // empty for spheres
  int bp1_ = -1, bp2_ = -1;
  std::vector<std::array<std::size_t, 2>> edges_;
};

std::shared_ptr<const Domain> build_sphere_domain(int n_theta, int n_phi);
std::shared_ptr<const Domain> build_product_domain(SphereGrid g1, SphereGrid g2,
                                                   int basepoint_first,
                                                   int basepoint_second);

}  // namespace ebf

#endif
