#pragma once

#include <string>
#include <vector>

#include "univoque/graph.hpp"

namespace univoque {

using Matrix = std::vector<std::vector<long>>;

Matrix adjacency_matrix(const UnivoqueGraph& g);
// det(tI − A)
IntPoly characteristic_polynomial(const Matrix& a);

struct Radius {
  long double value = 0;
  long double err = 0;       // Collatz–Wielandt bracket half-width
  bool charpoly_checked = false;
};

// Perron root of a square nonnegative matrix.
Radius perron_radius(const Matrix& a);
Radius spectral_radius(const UnivoqueGraph& g);

struct ComponentRadius {
  std::vector<int> vertices;
  long double radius = 0;
};

struct SpectralReport {
  Matrix matrix;
  Radius radius;
  long double entropy = 0;
  long double dimension = 0;
  std::vector<ComponentRadius> per_scc;
};

// log r / log q; zero when the graph has no cycle.
long double dimension_of(const UnivoqueGraph& g, const BaseContext& ctx);
SpectralReport spectral_report(const UnivoqueGraph& g, const BaseContext& ctx);

struct ComponentDimensions {
  SpectralReport report;           // of G̃
  std::vector<bool> meets_tilde1;   // per SCC of G̃: has a vertex of G̃₁
  long double tilde1_radius = 0;
  bool t110_hypothesis = false;
};

ComponentDimensions component_dimensions(const BaseContext& ctx);

std::string to_json(const SpectralReport& r, int places = 12);

}  // namespace univoque
