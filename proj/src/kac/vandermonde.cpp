#include <isoparam/errors.hpp>
#include <isoparam/kac/vandermonde.hpp>

namespace isoparam::kac {

NodeTemplate vandermonde_template(int nodes) {
  NodeTemplate t;
  for (int i = 0; i < nodes; ++i) {
    std::vector<NodeMonomial> row;
    for (int j = 0; j < nodes; ++j) row.push_back({1, j});
    t.rows.push_back(std::move(row));
    t.row_node.push_back(i);
  }
  return t;
}

NodeTemplate vandermonde2_template(int nodes) {
  NodeTemplate t;
  const int size = 2 * nodes;
  for (int i = 0; i < nodes; ++i) {
    std::vector<NodeMonomial> value, slope;
    for (int j = 0; j < size; ++j) {
      value.push_back({1, j});
      slope.push_back(j == 0 ? NodeMonomial{0, 0} : NodeMonomial{j, j - 1});
    }
    t.rows.push_back(std::move(value));
    t.rows.push_back(std::move(slope));
    t.row_node.push_back(i);
    t.row_node.push_back(i);
  }
  return t;
}

bool derivative_pairs_hold(const NodeTemplate& t) {
  if (t.rows.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < t.rows.size(); i += 2) {
    if (t.row_node[i] != t.row_node[i + 1]) return false;
    const auto& row = t.rows[i];
    const auto& next = t.rows[i + 1];
    if (row.size() != next.size()) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const NodeMonomial d = row[j].power == 0 || row[j].coeff == 0
                                 ? NodeMonomial{0, 0}
                                 : NodeMonomial{row[j].coeff * row[j].power, row[j].power - 1};
      const bool zero_a = d.coeff == 0;
      const bool zero_b = next[j].coeff == 0;
      if (zero_a != zero_b || (!zero_a && !(d == next[j]))) return false;
    }
  }
  return true;
}

RationalMatrix instantiate(const NodeTemplate& t, const std::vector<Rational>& nodes) {
  const std::size_t cols = t.rows.empty() ? 0 : t.rows.front().size();
  RationalMatrix m(t.rows.size(), cols);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational& x = nodes.at(t.row_node[i]);
    for (std::size_t j = 0; j < cols; ++j) {
      const NodeMonomial& e = t.rows[i][j];
      m(i, j) = e.coeff == 0 ? Rational(0) : Rational(e.coeff) * exact::pow(x, static_cast<unsigned>(e.power));
    }
  }
  return m;
}

Rational vandermonde_product(const std::vector<Rational>& nodes, bool type2) {
  Rational prod = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const Rational diff = nodes[j] - nodes[i];
      prod *= type2 ? exact::pow(diff, 4) : diff;
    }
  return prod;
}

Rational vandermonde_det(const std::vector<Rational>& nodes, bool type2) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw PreconditionError("vandermonde_det: repeated node " + exact::to_string(nodes[i]));
  const int count = static_cast<int>(nodes.size());
  const NodeTemplate t = type2 ? vandermonde2_template(count) : vandermonde_template(count);
  const Rational by_elimination = exact::rational_det(instantiate(t, nodes));
  const Rational by_product = vandermonde_product(nodes, type2);
  if (by_elimination != by_product)
    throw VerificationError("vandermonde_det: elimination " + exact::to_string(by_elimination) + " != product " +
                            exact::to_string(by_product));
  return by_elimination;
}

}  // namespace isoparam::kac
