#include "ldg1d/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ldg1d {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) {
    throw std::invalid_argument("Mesh: need at least one cell (two nodes)");
  }
  widths_.reserve(nodes_.size() - 1);
  for (std::size_t j = 1; j < nodes_.size(); ++j) {
    const double h = nodes_[j] - nodes_[j - 1];
    if (!(h > 0.0)) {
      throw std::invalid_argument("Mesh: nodes must be strictly increasing (cell " +
                                  std::to_string(j) + " has width " + std::to_string(h) + ")");
    }
    widths_.push_back(h);
    h_max_ = std::max(h_max_, h);
  }
}

Mesh Mesh::uniform(double a, double b, int cells) {
  if (!(a < b)) {
    throw std::invalid_argument("Mesh::uniform: requires a < b, got a=" + std::to_string(a) +
                                ", b=" + std::to_string(b));
  }
  if (cells < 1) {
    throw std::invalid_argument("Mesh::uniform: cell count must be positive, got " +
                                std::to_string(cells));
  }
  std::vector<double> nodes(static_cast<std::size_t>(cells) + 1);
  for (int j = 0; j <= cells; ++j) {
    nodes[static_cast<std::size_t>(j)] = a + (b - a) * static_cast<double>(j) / cells;
  }
  nodes.front() = a;
  nodes.back() = b;
  return Mesh(std::move(nodes));
}

int Mesh::locate(double x) const {
  if (x < a() || x > b()) {
    throw std::out_of_range("Mesh::locate: x=" + std::to_string(x) + " outside [" +
                            std::to_string(a()) + ", " + std::to_string(b()) + "]");
  }
  // First node >= x gives the left-tie-breaking cell; clamp x == a to cell 1.
  auto it = std::lower_bound(nodes_.begin() + 1, nodes_.end(), x);
  int j = static_cast<int>(it - nodes_.begin());
  return std::min(j, cells());
}

}  // namespace ldg1d
