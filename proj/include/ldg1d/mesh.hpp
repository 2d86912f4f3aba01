#ifndef LDG1D_MESH_HPP
#define LDG1D_MESH_HPP

#include <vector>

namespace ldg1d {

// Ordered partition a = x_0 < x_1 < ... < x_J = b. Cells are 1-based:
// cell j is the interval (x_{j-1}, x_j). Immutable after construction.
class Mesh {
 public:
  // General mesh from a strictly increasing node list (at least 2 nodes).
  explicit Mesh(std::vector<double> nodes);

  static Mesh uniform(double a, double b, int cells);

  double a() const { return nodes_.front(); }
  double b() const { return nodes_.back(); }
  int cells() const { return static_cast<int>(nodes_.size()) - 1; }

  // x_j for j = 0..J
  double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
  // h_j for j = 1..J
  double width(int j) const { return widths_[static_cast<std::size_t>(j - 1)]; }
  double center(int j) const { return 0.5 * (node(j - 1) + node(j)); }
  double h_max() const { return h_max_; }

  const std::vector<double>& nodes() const { return nodes_; }

  // Cell index j with x in [x_{j-1}, x_j]; ties at interior nodes go to the
  // left cell. Throws std::out_of_range for x outside [a, b].
  int locate(double x) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> widths_;
  double h_max_ = 0.0;
};

}  // namespace ldg1d

#endif
