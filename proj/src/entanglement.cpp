#include "xxchain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "xxchain/error.hpp"
#include "xxchain/oracle.hpp"

namespace xxchain {

BipartiteSplit BipartiteSplit::from_a(int n, std::vector<int> sites_a) {
  std::sort(sites_a.begin(), sites_a.end());
  BipartiteSplit split{std::move(sites_a), {}};
  for (int s = 1; s <= n; ++s)
    if (!std::binary_search(split.sites_a.begin(), split.sites_a.end(), s)) split.sites_b.push_back(s);
  split.validate(n);
  return split;
}

BipartiteSplit BipartiteSplit::halves(int n) {
  if (n < 2) throw std::invalid_argument("a bipartition needs N >= 2");
  std::vector<int> a;
  for (int s = 1; s <= n / 2; ++s) a.push_back(s);
  return from_a(n, std::move(a));
}

BipartiteSplit BipartiteSplit::parse(int n, const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("split must look like '1,2|3,4'");
  auto parse_side = [](const std::string& side) {
    std::vector<int> out;
    std::stringstream ss(side);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad site in split: " + item);
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  BipartiteSplit split{parse_side(text.substr(0, bar)), parse_side(text.substr(bar + 1))};
  split.validate(n);
  return split;
}

void BipartiteSplit::validate(int n) const {
  if (sites_a.empty() || sites_b.empty()) throw std::invalid_argument("both sides of a split must be non-empty");
  std::vector<int> all(sites_a);
  all.insert(all.end(), sites_b.begin(), sites_b.end());
  std::sort(all.begin(), all.end());
  if (static_cast<int>(all.size()) != n) throw std::invalid_argument("split must cover every site exactly once");
  for (int i = 0; i < n; ++i)
    if (all[i] != i + 1) throw std::invalid_argument("split must cover every site exactly once");
}

std::string BipartiteSplit::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sites_a.size(); ++i) out += (i ? "," : "") + std::to_string(sites_a[i]);
  out += "|";
  for (std::size_t i = 0; i < sites_b.size(); ++i) out += (i ? "," : "") + std::to_string(sites_b[i]);
  return out;
}

Eigen::MatrixXd partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split, int cap) {
  require_within_cap(rho.n(), cap, "partial_transpose");
  split.validate(rho.n());
  std::uint64_t mask_b = 0;
  for (int s : split.sites_b) mask_b |= std::uint64_t{1} << (s - 1);
  const auto dim = static_cast<std::uint64_t>(rho.dim());
  const auto& m = rho.matrix();
  Eigen::MatrixXd out(rho.dim(), rho.dim());
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      const std::uint64_t r = (row & ~mask_b) | (col & mask_b);
      const std::uint64_t c = (col & ~mask_b) | (row & mask_b);
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

Eigen::MatrixXd partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split) {
  return partial_transpose(rho, split, dense_cap());
}

double negativity(const DensityMatrix& rho, const BipartiteSplit& split, int cap) {
  const auto eig = diagonalize_symmetric(partial_transpose(rho, split, cap));
  double neg = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) < -1e-13) neg -= eig.values(i);
  return neg;
}

double negativity(const DensityMatrix& rho, const BipartiteSplit& split) {
  return negativity(rho, split, dense_cap());
}

TwoQubitPopulations two_qubit_populations(const ChainParams& params, double beta) {
  if (params.n != 2) throw std::invalid_argument("two-qubit populations need N=2");
  const auto ensemble = boltzmann_weights(params, beta);
  // label 1 = vacuum (all up), labels 2-3 = one flip, label 4 = both flipped.
  // The one-flip eigenstate with opposite-sign amplitudes is the singlet.
  const auto first = build_eigenstate(2, occupation_for_label(2, 2));
  const bool first_is_singlet = first.amplitudes()[0] * first.amplitudes()[1] < 0.0;
  TwoQubitPopulations p{};
  p.up_up = ensemble.probability(1);
  p.singlet = first_is_singlet ? ensemble.probability(2) : ensemble.probability(3);
  p.triplet = first_is_singlet ? ensemble.probability(3) : ensemble.probability(2);
  p.down_down = ensemble.probability(4);
  return p;
}

bool two_qubit_separable(double p1, double p2, double p3, double p4) {
  for (double p : {p1, p2, p3, p4}) {
    if (!(p >= 0.0) || p > 1.0) throw std::invalid_argument("populations must lie in [0, 1]");
  }
  if (std::abs(p1 + p2 + p3 + p4 - 1.0) > 1e-9) throw std::invalid_argument("populations must sum to 1");
  return 4.0 * p1 * p4 >= (p2 - p3) * (p2 - p3);
}

double critical_temperature_two_qubit(const ChainParams& params) {
  if (params.n != 2) throw std::invalid_argument("critical temperature solver needs N=2");
  // Energies of |up,up>, the two one-flip states and |down,down>; the
  // condition 4 p1 p4 = (p2 - p3)^2 is independent of Z, so compare
  //   log 4 - beta (e1 + e4)  against  2 [-beta e_lo + log(1 - exp(-beta gap))].
  const auto energies = level_energies(params);
  const double e_vac = energies[0b00];
  const double e_full = energies[0b11];
  const double e_lo = std::min(energies[0b01], energies[0b10]);
  const double gap = std::abs(energies[0b01] - energies[0b10]);
  auto margin = [&](double t) {
    const double beta = 1.0 / t;
    const double lhs = std::log(4.0) - beta * (e_vac + e_full);
    const double rhs = 2.0 * (-beta * e_lo + std::log(-std::expm1(-beta * gap)));
    return lhs - rhs;  // > 0: separable
  };
  double lo = 1e-6;
  double hi = 1e3;
  const double f_lo = margin(lo);
  const double f_hi = margin(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) throw NumericalError("critical temperature not bracketed in (1e-6, 1e3)");
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = margin(mid);
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace xxchain
