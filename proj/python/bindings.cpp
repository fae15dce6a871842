#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xxchain/caps.hpp"
#include "xxchain/entanglement.hpp"
#include "xxchain/error.hpp"
#include "xxchain/limits.hpp"
#include "xxchain/oracle.hpp"
#include "xxchain/spectrum.hpp"
#include "xxchain/states.hpp"
#include "xxchain/thermal.hpp"
#include "xxchain/validation.hpp"

namespace py = pybind11;
using namespace xxchain;

namespace {

OccupationState to_occupation(const std::vector<int>& bits) {
  std::vector<std::uint8_t> b;
  b.reserve(bits.size());
  for (int v : bits) {
    if (v != 0 && v != 1) throw std::invalid_argument("occupation entries must be 0 or 1");
    b.push_back(static_cast<std::uint8_t>(v));
  }
  return OccupationState(std::move(b));
}

std::vector<int> to_bits(const OccupationState& occ) { return {occ.bits().begin(), occ.bits().end()}; }

} // namespace

PYBIND11_MODULE(_xxchain, m) {
  m.doc() = "Closed-form spectrum, eigenstates, thermal states and entanglement of the open XX chain";
  m.attr("__version__") = "0.1.0";

  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<ChainParams>(m, "ChainParams")
      .def(py::init<int, double, double>(), py::arg("n"), py::arg("j") = 1.0, py::arg("b") = 0.0)
      .def_readonly("n", &ChainParams::n)
      .def_readonly("j", &ChainParams::j)
      .def_readonly("b", &ChainParams::b)
      .def("__repr__", [](const ChainParams& p) {
        return "ChainParams(n=" + std::to_string(p.n) + ", j=" + std::to_string(p.j) + ", b=" + std::to_string(p.b) + ")";
      });

  py::class_<GroundSector>(m, "GroundSector")
      .def_readonly("k", &GroundSector::k)
      .def_readonly("degenerate", &GroundSector::degenerate)
      .def_property_readonly("upper", &GroundSector::upper);

  // spectrum
  m.def("mode_energies", [](const ChainParams& p) { return mode_energies(p).lambdas; }, py::arg("params"));
  m.def("eigenenergy", [](const ChainParams& p, const std::vector<int>& occ) { return eigenenergy(p, to_occupation(occ)); },
        py::arg("params"), py::arg("occupation"));
  m.def("ground_sector", &ground_sector, py::arg("params"));
  m.def("crossing_fields", [](int n, double j) { return crossing_fields(n, j).fields_b; }, py::arg("n"), py::arg("j") = 1.0);
  m.def("ground_energy", &ground_energy, py::arg("params"), py::arg("k"));
  m.def("level_energies", [](const ChainParams& p) { return level_energies(p); }, py::arg("params"),
        "Energies of all 2^N levels indexed by occupation mask.");
  m.def("log_partition_function", &log_partition_function, py::arg("params"), py::arg("beta"));
  m.def("partition_function", &partition_function, py::arg("params"), py::arg("beta"));

  // states
  m.def("sine_coefficient", &sine_coefficient, py::arg("n"), py::arg("k"), py::arg("l"));
  m.def("slater_amplitude",
        [](int n, const std::vector<int>& modes, const std::vector<int>& positions) {
          return slater_amplitude(n, modes, positions);
        },
        py::arg("n"), py::arg("modes"), py::arg("positions"));
  m.def("build_eigenstate",
        [](int n, const std::vector<int>& occ) {
          const auto psi = build_eigenstate(n, to_occupation(occ));
          py::dict out;
          for (std::size_t i = 0; i < psi.size(); ++i) out[py::tuple(py::cast(psi.positions(i)))] = psi.amplitudes()[i];
          return out;
        },
        py::arg("n"), py::arg("occupation"), "Amplitudes keyed by ascending flipped-position tuples.");
  m.def("ground_state",
        [](int n, int k) {
          const auto psi = ground_state(n, k);
          py::dict out;
          for (std::size_t i = 0; i < psi.size(); ++i) out[py::tuple(py::cast(psi.positions(i)))] = psi.amplitudes()[i];
          return out;
        },
        py::arg("n"), py::arg("k"));
  m.def("ground_state_vector", [](int n, int k) { return ground_state(n, k).to_dense(); }, py::arg("n"), py::arg("k"),
        "Ground state of sector k embedded in the 2^N spin basis.");
  m.def("sector_index_to_label", &sector_index_to_label, py::arg("r"), py::arg("m"), py::arg("n"));
  m.def("label_to_sector_index",
        [](std::uint64_t l, int n) {
          const auto s = label_to_sector_index(l, n);
          return py::make_tuple(s.r, s.m);
        },
        py::arg("l"), py::arg("n"), "Returns (r, m).");
  m.def("occupation_for_label", [](std::uint64_t l, int n) { return to_bits(occupation_for_label(l, n)); },
        py::arg("l"), py::arg("n"));

  // thermal
  m.def("boltzmann_weights", [](const ChainParams& p, double beta) { return boltzmann_weights(p, beta).probabilities; },
        py::arg("params"), py::arg("beta"), "Probabilities in label order.");
  m.def("thermal_density_matrix", [](const ChainParams& p, double beta) { return thermal_density_matrix(p, beta).matrix(); },
        py::arg("params"), py::arg("beta"));
  m.def("purity_analytic", &purity_analytic, py::arg("params"), py::arg("beta"));
  m.def("purity_dense",
        [](const Eigen::MatrixXd& rho) {
          int n = 0;
          while ((Eigen::Index{1} << n) < rho.rows()) ++n;
          return purity_dense(DensityMatrix(n, rho));
        },
        py::arg("rho"));
  m.def("crossing_mixture", [](int n, int k) { return crossing_mixture(n, k).matrix(); }, py::arg("n"), py::arg("k"));

  // entanglement
  m.def("negativity",
        [](const Eigen::MatrixXd& rho, const std::vector<int>& sites_a) {
          int n = 0;
          while ((Eigen::Index{1} << n) < rho.rows()) ++n;
          return negativity(DensityMatrix(n, rho), BipartiteSplit::from_a(n, sites_a));
        },
        py::arg("rho"), py::arg("sites_a"));
  m.def("two_qubit_separable", &two_qubit_separable, py::arg("p1"), py::arg("p2"), py::arg("p3"), py::arg("p4"));
  m.def("two_qubit_populations",
        [](const ChainParams& p, double beta) {
          const auto q = two_qubit_populations(p, beta);
          return py::make_tuple(q.up_up, q.singlet, q.triplet, q.down_down);
        },
        py::arg("params"), py::arg("beta"), "(p_upup, p_singlet, p_triplet, p_downdown)");
  m.def("critical_temperature_two_qubit", &critical_temperature_two_qubit, py::arg("params"));

  // limits
  m.def("thermo_energy_density", &thermo_energy_density, py::arg("b"), py::arg("j") = 1.0);
  m.def("finite_size_energy_density", &finite_size_energy_density, py::arg("n"), py::arg("b"), py::arg("j") = 1.0);
  m.def("crossing_density", &crossing_density, py::arg("omega"));

  // oracle
  m.def("build_hamiltonian", [](const ChainParams& p) { return build_hamiltonian(p).matrix; }, py::arg("params"));
  m.def("diagonalize",
        [](const ChainParams& p) {
          const auto e = diagonalize(build_hamiltonian(p));
          return py::make_tuple(e.values, e.vectors);
        },
        py::arg("params"), "Dense eigensystem (ascending values, column eigenvectors).");
  m.def("validate_chain",
        [](int n, double j) {
          py::list out;
          for (const auto& r : validate_chain(n, j))
            out.append(py::dict(py::arg("name") = r.name, py::arg("passed") = r.passed,
                                py::arg("max_error") = r.max_error, py::arg("tolerance") = r.tolerance));
          return out;
        },
        py::arg("n"), py::arg("j") = 1.0);
}
