#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digigap/cell.hpp"
#include "digigap/curves.hpp"
#include "digigap/errors.hpp"
#include "digigap/gaps.hpp"
#include "digigap/object.hpp"
#include "digigap/verify.hpp"

namespace py = pybind11;
using namespace digigap;

namespace {

std::vector<Coord> coords_of(const Cell& c) { return {c.coords().begin(), c.coords().end()}; }

std::vector<Point> voxels_of(const DigitalObject& d) { return {d.voxels().begin(), d.voxels().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grid cell model: cell census, gap detection and counting identities";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<CoordinateOverflow>(m, "CoordinateOverflow", PyExc_OverflowError);
  py::register_exception<DuplicateVoxel>(m, "DuplicateVoxel", PyExc_ValueError);
  py::register_exception<ClassificationOverlap>(m, "ClassificationOverlap", PyExc_RuntimeError);
  py::register_exception<GenerationFailure>(m, "GenerationFailure", PyExc_RuntimeError);

  py::class_<Cell>(m, "Cell")
      .def(py::init<std::vector<Coord>>(), py::arg("doubled"))
      .def_static("voxel", [](const Point& p) { return Cell::voxel(p); }, py::arg("centre"))
      .def_property_readonly("coords", &coords_of)
      .def_property_readonly("dimension", &Cell::dimension)
      .def_property_readonly("ambient", &Cell::ambient)
      .def("half_integer", &Cell::half_integer_string)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Cell& c) { return CellHash{}(c); })
      .def("__repr__", [](const Cell& c) { return "Cell" + c.doubled_string(); });

  m.def("cell_from", [](const Point& x, const std::vector<int>& theta) {
    return cell_from(x, Direction(theta));
  }, py::arg("x"), py::arg("theta"));
  m.def("incident", &incident);
  m.def("bounds", &bounds);
  m.def("faces_of", &faces_of, py::arg("cell"), py::arg("i"));
  m.def("cofaces_voxels", &cofaces_voxels);
  m.def("const_i_to_j", &const_i_to_j, py::arg("i"), py::arg("j"), py::arg("n"));
  m.def("const_i_from_j", &const_i_from_j, py::arg("i"), py::arg("j"), py::arg("n"));

  py::class_<DigitalObject>(m, "DigitalObject")
      .def(py::init([](std::size_t n, std::vector<Point> voxels, bool strict) {
             return DigitalObject(n, std::move(voxels),
                                  strict ? DuplicatePolicy::kStrict : DuplicatePolicy::kDeduplicate);
           }),
           py::arg("n"), py::arg("voxels"), py::arg("strict") = true)
      .def_property_readonly("ambient", &DigitalObject::ambient)
      .def_property_readonly("voxels", &voxels_of)
      .def_property_readonly("duplicates_dropped", &DigitalObject::duplicates_dropped)
      .def("__len__", &DigitalObject::size)
      .def("__contains__", &DigitalObject::contains);

  py::class_<CellCensus>(m, "CellCensus")
      .def_readonly("ambient", &CellCensus::ambient_n)
      .def_readonly("cells", &CellCensus::cells)
      .def_readonly("free", &CellCensus::free)
      .def_readonly("nonfree", &CellCensus::nonfree)
      .def("c", &CellCensus::c)
      .def("c_free", &CellCensus::c_free)
      .def("c_nonfree", &CellCensus::c_nonfree);

  m.def("census", &census, py::arg("object"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("adjacent_voxels", &adjacent_voxels, py::arg("object"), py::arg("voxel"), py::arg("k"));
  m.def("strictly_adjacent", &strictly_adjacent);
  m.def("intersection_cell", &intersection_cell);
  m.def("b_count", &b_count, py::arg("cell"), py::arg("object"), py::arg("j"));

  m.def("detect_hubs", &detect_hubs, py::arg("object"), py::arg("i"));
  m.def("g1_closed_form", &g1_closed_form);
  m.def("g0_closed_form", &g0_closed_form);
  m.def("csi_identity_check", [](const DigitalObject& d) {
    const CsiCheck c = csi_identity_check(d);
    return py::make_tuple(c.lhs, c.rhs, c.holds());
  });

  py::class_<CurveCheck>(m, "CurveCheck")
      .def_readonly("is_valid", &CurveCheck::is_valid)
      .def_readonly("extremes", &CurveCheck::extremes)
      .def_readonly("component_count", &CurveCheck::component_count)
      .def_property_readonly("violations", [](const CurveCheck& c) {
        py::list out;
        for (const auto& v : c.violations) out.append(py::make_tuple(v.voxel, std::string(to_string(v.reason))));
        return out;
      });
  m.def("validate_curve", &validate_curve, py::arg("object"), py::arg("k") = 0);
  m.def("generate_curve", [](std::size_t length, std::uint64_t seed, int k, std::size_t n) {
    CurveGenOptions opts;
    opts.k = k;
    opts.ambient_n = n;
    return generate_curve(length, seed, opts);
  }, py::arg("length"), py::arg("seed"), py::arg("k") = 0, py::arg("n") = 3);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("claim", &Verdict::claim)
      .def_readonly("input", &Verdict::input)
      .def_readonly("expected", &Verdict::expected)
      .def_readonly("observed", &Verdict::observed)
      .def_readonly("passed", &Verdict::pass)
      .def_readonly("informational", &Verdict::informational);
  py::class_<VerdictTable>(m, "VerdictTable")
      .def_readonly("rows", &VerdictTable::rows)
      .def_readonly("curve_valid", &VerdictTable::curve_valid)
      .def("all_pass", &VerdictTable::all_pass)
      .def("failures", &VerdictTable::failures);
  m.def("run_identity_suite", &run_identity_suite);
}
