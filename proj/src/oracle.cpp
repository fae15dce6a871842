#include "xxchain/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "xxchain/error.hpp"

namespace xxchain {

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;

// Real single-site operators. Y_i Y_{i+1} is real because i*i = -1, so it
// is stored as the real matrix iY = [[0,1],[-1,0]] with an overall -1.
constexpr Mat2 kPauliX{{{0.0, 1.0}, {1.0, 0.0}}};
constexpr Mat2 kPauliZ{{{1.0, 0.0}, {0.0, -1.0}}};
constexpr Mat2 kITimesY{{{0.0, 1.0}, {-1.0, 0.0}}};

// Adds coeff * (op_a on site a) (op_b on site b) to h. Sites are zero-based.
void add_two_site(Eigen::MatrixXd& h, int a, const Mat2& op_a, int b, const Mat2& op_b, double coeff) {
  const auto dim = static_cast<std::uint64_t>(h.rows());
  for (std::uint64_t col = 0; col < dim; ++col) {
    const unsigned ca = (col >> a) & 1U;
    const unsigned cb = (col >> b) & 1U;
    for (unsigned ra = 0; ra < 2; ++ra) {
      for (unsigned rb = 0; rb < 2; ++rb) {
        const double v = op_a[ra][ca] * op_b[rb][cb];
        if (v == 0.0) continue;
        std::uint64_t row = col;
        row = (row & ~(std::uint64_t{1} << a)) | (std::uint64_t{ra} << a);
        row = (row & ~(std::uint64_t{1} << b)) | (std::uint64_t{rb} << b);
        h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += coeff * v;
      }
    }
  }
}

void add_one_site(Eigen::MatrixXd& h, int a, const Mat2& op, double coeff) {
  const auto dim = static_cast<std::uint64_t>(h.rows());
  for (std::uint64_t col = 0; col < dim; ++col) {
    const unsigned ca = (col >> a) & 1U;
    for (unsigned ra = 0; ra < 2; ++ra) {
      const double v = op[ra][ca];
      if (v == 0.0) continue;
      const std::uint64_t row = (col & ~(std::uint64_t{1} << a)) | (std::uint64_t{ra} << a);
      h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += coeff * v;
    }
  }
}

} // namespace

DenseHamiltonian build_hamiltonian(const ChainParams& params, int cap) {
  require_within_cap(params.n, cap, "build_hamiltonian");
  const Eigen::Index dim = Eigen::Index{1} << params.n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  // open boundary: no bond between site N and site 1
  for (int i = 0; i + 1 < params.n; ++i) {
    add_two_site(h, i, kPauliX, i + 1, kPauliX, -params.j / 2.0);
    // Y x Y = -(iY) x (iY)
    add_two_site(h, i, kITimesY, i + 1, kITimesY, params.j / 2.0);
  }
  for (int i = 0; i < params.n; ++i) add_one_site(h, i, kPauliZ, -params.b);
  return {params.n, std::move(h)};
}

Eigensystem diagonalize_symmetric(const Eigen::MatrixXd& matrix, double residual_tol) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");
  Eigensystem out{solver.eigenvalues(), solver.eigenvectors()};
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  const Eigen::VectorXd residuals =
      (matrix * out.vectors - out.vectors * out.values.asDiagonal()).colwise().norm();
  for (Eigen::Index i = 0; i < residuals.size(); ++i) {
    const double residual = residuals(i);
    if (residual > residual_tol * scale) {
      throw NumericalError("eigenpair " + std::to_string(i) + " residual " + std::to_string(residual) +
                           " exceeds tolerance");
    }
  }
  return out;
}

Eigensystem diagonalize(const DenseHamiltonian& h) { return diagonalize_symmetric(h.matrix); }

} // namespace xxchain
