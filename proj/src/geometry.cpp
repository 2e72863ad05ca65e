#include "ebf/geometry.hpp"

#include <cmath>
#include <numbers>

namespace ebf {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

SpherePoint sphere_point(double theta, double phi) {
  SpherePoint p;
  p.theta = theta;
  p.phi = phi;
  const double s = std::sin(phi);
  p.x = s * std::cos(theta);
  p.y = s * std::sin(theta);
  p.z = std::cos(phi);
  return p;
}

int SphereGrid::node_index(int a, int b) const {
  const int aa = ((a % n_theta) + n_theta) % n_theta;
  return b * n_theta + aa;
}

int SphereGrid::nearest_node(double theta, double phi) const {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  int a = static_cast<int>(std::lround(t * n_theta / kTwoPi)) % n_theta;
  int b = static_cast<int>(std::lround(phi * n_phi / kPi - 0.5));
  if (b < 0) b = 0;
  if (b >= n_phi) b = n_phi - 1;
  return node_index(a, b);
}

SphereGrid build_sphere_grid(int n_theta, int n_phi) {
  if (n_theta < 8 || n_phi < 5)
    throw PreconditionError("build_sphere_grid: mesh under-resolved, need n_theta >= 8 and n_phi >= 5 (got " +
                            std::to_string(n_theta) + "x" + std::to_string(n_phi) + ")");

  SphereGrid g;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  g.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int b = 0; b < n_phi; ++b) {
    const double phi = kPi * (b + 0.5) / n_phi;
    for (int a = 0; a < n_theta; ++a)
      g.nodes.push_back(sphere_point(kTwoPi * a / n_theta, phi));
  }

  // Plaquettes, counterclockwise seen from outside: quads walk
  // (a,b) -> (a,b+1) -> (a+1,b+1) -> (a+1,b).
  auto& ps = g.plaquettes;
  ps.offsets.push_back(0);
  auto close = [&ps] { ps.offsets.push_back(static_cast<int>(ps.verts.size())); };
  for (int b = 0; b + 1 < n_phi; ++b) {
    for (int a = 0; a < n_theta; ++a) {
      ps.verts.push_back(g.node_index(a, b));
      ps.verts.push_back(g.node_index(a, b + 1));
      ps.verts.push_back(g.node_index(a + 1, b + 1));
      ps.verts.push_back(g.node_index(a + 1, b));
      close();
    }
  }
  // North cap closes ring 0 over the phi = 0 pole (theta increasing),
  // south cap closes the last ring (theta decreasing); together they cancel
  // every quad edge on the boundary rings.
  for (int a = 0; a < n_theta; ++a) ps.verts.push_back(g.node_index(a, 0));
  close();
  ps.verts.push_back(g.node_index(0, n_phi - 1));
  for (int a = n_theta - 1; a >= 1; --a) ps.verts.push_back(g.node_index(a, n_phi - 1));
  close();

  g.edges.reserve(static_cast<std::size_t>(n_theta) * (2 * n_phi - 1));
  for (int b = 0; b < n_phi; ++b)
    for (int a = 0; a < n_theta; ++a) {
      g.edges.push_back({g.node_index(a, b), g.node_index(a + 1, b)});
      if (b + 1 < n_phi) g.edges.push_back({g.node_index(a, b), g.node_index(a, b + 1)});
    }
  return g;
}

namespace {

// Van Oosterom-Strackee signed solid angle of the triangle (v1, v2, v3).
double triangle_solid_angle(const SpherePoint& p1, const SpherePoint& p2,
                            const SpherePoint& p3) {
  const double det = p1.x * (p2.y * p3.z - p2.z * p3.y) -
                     p1.y * (p2.x * p3.z - p2.z * p3.x) +
                     p1.z * (p2.x * p3.y - p2.y * p3.x);
  const double d12 = p1.x * p2.x + p1.y * p2.y + p1.z * p2.z;
  const double d23 = p2.x * p3.x + p2.y * p3.y + p2.z * p3.z;
  const double d31 = p3.x * p1.x + p3.y * p1.y + p3.z * p1.z;
  return 2.0 * std::atan2(det, 1.0 + d12 + d23 + d31);
}

}  // namespace

double plaquette_signed_area(const SphereGrid& g, std::size_t p) {
  const int begin = g.plaquettes.offsets[p];
  const int end = g.plaquettes.offsets[p + 1];
  double area = 0.0;
  for (int k = begin + 1; k + 1 < end; ++k)
    area += triangle_solid_angle(g.nodes[g.plaquettes.verts[begin]],
                                 g.nodes[g.plaquettes.verts[k]],
                                 g.nodes[g.plaquettes.verts[k + 1]]);
  return area;
}

double signed_area_sum(const SphereGrid& g) {
  double sum = 0.0;
  for (std::size_t p = 0; p < g.plaquettes.count(); ++p)
    sum += plaquette_signed_area(g, p);
  return sum;
}

std::shared_ptr<const Domain> Domain::sphere(SphereGrid g) {
  auto d = std::shared_ptr<Domain>(new Domain);
  d->kind_ = DomainKind::Sphere;
  d->first_ = std::move(g);
  d->edges_.reserve(d->first_.edges.size());
  for (const auto& e : d->first_.edges)
    d->edges_.push_back({static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1])});
  return d;
}

std::shared_ptr<const Domain> Domain::product(SphereGrid g1, SphereGrid g2,
                                              int basepoint_first,
                                              int basepoint_second) {
  if (basepoint_first < 0 ||
      basepoint_first >= static_cast<int>(g1.node_count()) ||
      basepoint_second < 0 ||
      basepoint_second >= static_cast<int>(g2.node_count()))
    throw PreconditionError("build_product_domain: basepoint node index out of range");

  auto d = std::shared_ptr<Domain>(new Domain);
  d->kind_ = DomainKind::Product;
  d->first_ = std::move(g1);
  d->second_ = std::move(g2);
  d->bp1_ = basepoint_first;
  d->bp2_ = basepoint_second;

  const std::size_t n2 = d->second_.node_count();
  d->edges_.reserve(d->first_.edges.size() * n2 +
                    d->second_.edges.size() * d->first_.node_count());
  for (const auto& e : d->first_.edges)
    for (std::size_t j = 0; j < n2; ++j)
      d->edges_.push_back({e[0] * n2 + j, e[1] * n2 + j});
  for (std::size_t i = 0; i < d->first_.node_count(); ++i)
    for (const auto& e : d->second_.edges)
      d->edges_.push_back({i * n2 + e[0], i * n2 + e[1]});
  return d;
}

const SphereGrid& Domain::second() const {
  if (kind_ != DomainKind::Product)
    throw PreconditionError("Domain::second: not a product domain");
  return second_;
}

std::size_t Domain::node_count() const {
  return kind_ == DomainKind::Sphere
             ? first_.node_count()
             : first_.node_count() * second_.node_count();
}

DomainPoint Domain::node_point(std::size_t i) const {
  DomainPoint p;
  if (kind_ == DomainKind::Sphere) {
    p.first = first_.nodes[i];
    return p;
  }
  const std::size_t n2 = second_.node_count();
  p.first = first_.nodes[i / n2];
  p.second = second_.nodes[i % n2];
  p.is_product = true;
  return p;
}

CycleBasis Domain::cycle_basis() const {
  CycleBasis basis;
  if (kind_ == DomainKind::Sphere) {
    Cycle c;
    c.label = "S2";
    c.grid = first_;
    c.lift.resize(first_.node_count());
    for (std::size_t i = 0; i < c.lift.size(); ++i) c.lift[i] = i;
    basis.push_back(std::move(c));
    return basis;
  }
  const std::size_t n2 = second_.node_count();
  Cycle c1;
  c1.label = "C1";
  c1.grid = first_;
  c1.lift.resize(first_.node_count());
  for (std::size_t i = 0; i < c1.lift.size(); ++i)
    c1.lift[i] = i * n2 + static_cast<std::size_t>(bp2_);
  basis.push_back(std::move(c1));

  Cycle c2;
  c2.label = "C2";
  c2.grid = second_;
  c2.lift.resize(n2);
  for (std::size_t j = 0; j < n2; ++j)
    c2.lift[j] = static_cast<std::size_t>(bp1_) * n2 + j;
  basis.push_back(std::move(c2));
  return basis;
}

bool Domain::same_layout(const Domain& other) const {
  if (kind_ != other.kind_) return false;
  if (first_.n_theta != other.first_.n_theta || first_.n_phi != other.first_.n_phi)
    return false;
  if (kind_ == DomainKind::Sphere) return true;
  return second_.n_theta == other.second_.n_theta &&
         second_.n_phi == other.second_.n_phi && bp1_ == other.bp1_ &&
         bp2_ == other.bp2_;
}

std::shared_ptr<const Domain> build_sphere_domain(int n_theta, int n_phi) {
  return Domain::sphere(build_sphere_grid(n_theta, n_phi));
}

std::shared_ptr<const Domain> build_product_domain(SphereGrid g1, SphereGrid g2,
                                                   int basepoint_first,
                                                   int basepoint_second) {
  return Domain::product(std::move(g1), std::move(g2), basepoint_first,
                         basepoint_second);
}

}  // namespace ebf
