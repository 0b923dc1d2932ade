#include "freeiso/metric_space.hpp"

#include <set>
#include <sstream>

namespace freeiso {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw Error("ParseError", "empty number");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw Error("ParseError", "zero denominator in \"" + text + "\"");
      return Rat(num, den);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error("ParseError", "bad rational \"" + text + "\"");
    }
  }
  auto dot = text.find('.');
  try {
    if (dot == std::string::npos) return Rat(BigInt(text), 1);
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
      throw Error("ParseError", "bad decimal \"" + text + "\"");
    bool negative = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = negative ? "-0" : "0";
    BigInt integral(head);
    BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
    BigInt den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    BigInt num = integral * den + (negative ? -frac : frac);
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("ParseError", "bad number \"" + text + "\"");
  }
}

std::string rat_to_string(const Rat& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

double rat_to_double(const Rat& value) { return static_cast<double>(value); }

Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

int FiniteMetricSpace::index_of(const std::string& label) const {
  int i = find(label);
  if (i < 0) throw Error("UnknownLabel", "unknown point \"" + label + "\"");
  return i;
}

int FiniteMetricSpace::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == label) return i;
  return -1;
}

bool Molecule::is_zero() const { return coeffs.empty(); }

Rat Molecule::coefficient_sum() const {
  Rat s = 0;
  for (const auto& [label, c] : coeffs) s += c;
  return s;
}

Molecule& Molecule::add(const std::string& label, const Rat& c) {
  auto it = coeffs.find(label);
  if (it == coeffs.end()) {
    if (c != 0) coeffs.emplace(label, c);
    return *this;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
  return *this;
}

Molecule Molecule::operator+(const Molecule& other) const {
  Molecule out = *this;
  for (const auto& [label, c] : other.coeffs) out.add(label, c);
  return out;
}

Molecule Molecule::operator*(const Rat& scale) const {
  Molecule out;
  if (scale == 0) return out;
  for (const auto& [label, c] : coeffs) out.coeffs.emplace(label, c * scale);
  return out;
}

bool LipschitzWitness::is_one_lipschitz(const FiniteMetricSpace& space) const {
  for (int i = 0; i < space.size(); ++i) {
    auto fi = values.find(space.points[i]);
    if (fi == values.end()) return false;
    for (int j = i + 1; j < space.size(); ++j) {
      auto fj = values.find(space.points[j]);
      if (fj == values.end()) return false;
      if (rat_abs(fi->second - fj->second) > space.dist(i, j)) return false;
    }
  }
  return true;
}

Rat LipschitzWitness::evaluate(const Molecule& x) const {
  Rat total = 0;
  for (const auto& [label, c] : x.coeffs) {
    auto it = values.find(label);
    if (it == values.end()) throw Error("UnknownLabel", "witness misses \"" + label + "\"");
    total += c * it->second;
  }
  return total;
}

FiniteMetricSpace validate_metric(const std::vector<std::vector<Rat>>& matrix,
                                  const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw Error("BadShape", "a metric space needs at least one point");
  if (static_cast<int>(matrix.size()) != n)
    throw Error("BadShape", "matrix row count does not match label count");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n)
      throw Error("BadShape", "matrix is not square");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n)
    throw Error("DuplicateLabel", "labels are not pairwise distinct");

  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 0)
      throw Error("ZeroOffDiagonal", "d(" + labels[i] + "," + labels[i] + ") must be 0");
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] < 0)
        throw Error("NegativeDistance",
                    "d(" + labels[i] + "," + labels[j] + ") is negative");
      if (i != j && matrix[i][j] == 0)
        throw Error("ZeroOffDiagonal",
                    "d(" + labels[i] + "," + labels[j] + ") is zero for distinct points");
      if (matrix[i][j] != matrix[j][i])
        throw Error("AsymmetricMatrix",
                    "d(" + labels[i] + "," + labels[j] + ") != d(" + labels[j] + "," +
                        labels[i] + ")");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (matrix[i][k] > matrix[i][j] + matrix[j][k]) {
          std::ostringstream msg;
          msg << "triangle inequality fails at (" << labels[i] << "," << labels[j] << ","
              << labels[k] << ")";
          throw Error("TriangleViolation", msg.str());
        }

  FiniteMetricSpace space;
  space.points = labels;
  space.d = matrix;
  return space;
}

Molecule elementary_molecule(const FiniteMetricSpace& space, const std::string& x,
                             const std::string& y) {
  if (x == y) throw Error("SamePoint", "elementary molecule needs two distinct points");
  int i = space.index_of(x), j = space.index_of(y);
  Rat inv = Rat(1) / space.dist(i, j);
  Molecule m;
  m.coeffs[x] = inv;
  m.coeffs[y] = -inv;
  return m;
}

void require_molecule(const FiniteMetricSpace& space, const Molecule& x) {
  for (const auto& [label, c] : x.coeffs) {
    (void)c;
    space.index_of(label);
  }
  if (x.coefficient_sum() != 0)
    throw Error("NotAMolecule", "coefficients do not sum to zero");
}

}  // namespace freeiso
