#pragma once

#include <isoparam/exact/rational_matrix.hpp>

#include <vector>

namespace isoparam::kac {

using exact::Rational;
using exact::RationalMatrix;

// One entry coeff * x_node^power of a Vandermonde-type matrix.
struct NodeMonomial {
  long coeff = 0;
  int power = 0;
  friend bool operator==(const NodeMonomial&, const NodeMonomial&) = default;
};

// Symbolic template: entry (i, j) is a monomial in the node of row i.
struct NodeTemplate {
  std::vector<std::vector<NodeMonomial>> rows;
  std::vector<int> row_node;
};

NodeTemplate vandermonde_template(int nodes);
// Rows come in pairs: (x^j) and its derivative (j x^(j-1)).
NodeTemplate vandermonde2_template(int nodes);

// Row 2i+1 is the nodewise derivative of row 2i.
bool derivative_pairs_hold(const NodeTemplate& t);

RationalMatrix instantiate(const NodeTemplate& t, const std::vector<Rational>& nodes);

// prod_{i<j} (x_j - x_i), raised to the 4th power for type 2.
Rational vandermonde_product(const std::vector<Rational>& nodes, bool type2);

// Determinant by elimination, checked against the product formula.
// Throws PreconditionError on repeated nodes, VerificationError on mismatch.
Rational vandermonde_det(const std::vector<Rational>& nodes, bool type2);

}  // namespace isoparam::kac
