#pragma once

#include <map>
#include <string>
#include <vector>

#include "freeiso/rational.hpp"

namespace freeiso {

/// Finite metric space: ordered labels plus an exact symmetric distance
/// matrix. Construct through validate_metric so the invariants (symmetry,
/// positivity off the diagonal, triangle inequality) always hold.
struct FiniteMetricSpace {
  std::vector<std::string> points;
  std::vector<std::vector<Rat>> d;

  int size() const { return static_cast<int>(points.size()); }
  const Rat& dist(int i, int j) const { return d[i][j]; }
  int index_of(const std::string& label) const;  // throws UnknownLabel
  int find(const std::string& label) const;      // -1 when absent
};

/// Finitely supported function with coefficient sum zero, kept sparse.
struct Molecule {
  std::map<std::string, Rat> coeffs;

  bool is_zero() const;
  Rat coefficient_sum() const;
  Molecule& add(const std::string& label, const Rat& c);  // drops zeros
  Molecule operator+(const Molecule& other) const;
  Molecule operator*(const Rat& scale) const;
  Molecule operator-() const { return *this * Rat(-1); }
  bool operator==(const Molecule& other) const { return coeffs == other.coeffs; }
};

/// A 1-Lipschitz function given by its values on every point of the space.
struct LipschitzWitness {
  std::map<std::string, Rat> values;

  /// |f(p) - f(q)| <= d(p, q) for all pairs, checked exactly.
  bool is_one_lipschitz(const FiniteMetricSpace& space) const;
  Rat evaluate(const Molecule& x) const;
};

FiniteMetricSpace validate_metric(const std::vector<std::vector<Rat>>& matrix,
                                  const std::vector<std::string>& labels);

/// m_{x,y} = (chi_x - chi_y) / d(x,y).
Molecule elementary_molecule(const FiniteMetricSpace& space, const std::string& x,
                             const std::string& y);

/// Checks supp(x) against the space and that coefficients sum to zero.
void require_molecule(const FiniteMetricSpace& space, const Molecule& x);

}  // namespace freeiso
