#include <isoparam/coeffs/pq_table.hpp>
#include <isoparam/detsys/system.hpp>
#include <isoparam/errors.hpp>

namespace isoparam::detsys {

namespace {

SystemMP from_z(int n, PolyMatrix z, std::vector<int> levels) {
  SystemMP sys;
  sys.n = n;
  sys.levels = std::move(levels);
  sys.M = z.without_column(0);
  for (std::size_t i = 0; i < z.rows(); ++i) {
    sys.p_tau.push_back(-z.poly(i, 0));
    sys.p_d.push_back(exact::d_symbol(sys.levels[i]));
    sys.p.push_back(DLinear(sys.p_tau.back()) + sys.p_d.back());
  }
  sys.Z = std::move(z);
  for (std::size_t i = 0; i < sys.Z.rows(); ++i) {
    if (!(sys.Z(i, 0) == DLinear(-sys.p_tau[i])))
      throw VerificationError("system: Z != [-P_tau | M] in row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < sys.M.cols(); ++j)
      if (!(sys.Z(i, j + 1) == sys.M(i, j)))
        throw VerificationError("system: Z != [-P_tau | M] in row " + std::to_string(i + 1));
  }
  return sys;
}

}  // namespace

SystemMP assemble_system(int n) {
  std::vector<int> levels;
  for (int k = 1; k <= 2 * n - 1; ++k) levels.push_back(k);
  return from_z(n, coeffs::build_Z(n), std::move(levels));
}

SystemMP replace_last_row(const SystemMP& sys, int level) {
  if (level < 1) throw PreconditionError("replace_last_row: level must be >= 1");
  std::vector<int> levels = sys.levels;
  levels.back() = level;
  const PolyMatrix z = sys.Z.with_row(sys.Z.rows() - 1, [&] {
    std::vector<DLinear> row;
    for (const auto& v : coeffs::z_row(sys.n, level)) row.emplace_back(v);
    return row;
  }());
  return from_z(sys.n, z, std::move(levels));
}

PolyMatrix replaced_matrix(const SystemMP& sys, int j, ColumnSource source) {
  if (j < 1 || static_cast<std::size_t>(j) > sys.M.cols())
    throw PreconditionError("column index " + std::to_string(j) + " out of range");
  std::vector<DLinear> col;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    switch (source) {
      case ColumnSource::full: col.push_back(sys.p[i]); break;
      case ColumnSource::tau: col.emplace_back(sys.p_tau[i]); break;
      case ColumnSource::d: col.push_back(sys.p_d[i]); break;
    }
  }
  return sys.M.with_column(static_cast<std::size_t>(j - 1), col);
}

DLinear det_mj(const SystemMP& sys, int j, ColumnSource source) {
  return exact::matrix_det(replaced_matrix(sys, j, source));
}

DLinear det_m(const SystemMP& sys) { return exact::matrix_det(sys.M); }

SystemMP mbar_system(int n, int s, RowParity parity) {
  return replace_last_row(assemble_system(n), parity == RowParity::even ? 2 * s : 2 * s - 1);
}

DLinear det_mbar(int n, int s, RowParity parity, int j) {
  const SystemMP sys = mbar_system(n, s, parity);
  return j == 0 ? det_m(sys) : det_mj(sys, j);
}

}  // namespace isoparam::detsys
