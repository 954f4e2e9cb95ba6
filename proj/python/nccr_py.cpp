#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "nccr/cli.hpp"
#include "nccr/cm_nccr.hpp"
#include "nccr/errors.hpp"
#include "nccr/homology_oracle.hpp"
#include "nccr/io.hpp"
#include "nccr/quiver.hpp"
#include "nccr/upper_sets.hpp"

namespace py = pybind11;
using namespace nccr;

namespace {

std::vector<std::string> texts(const FGGroup& g, const std::vector<GroupElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(g.format(x));
  return out;
}

// A validated input file. Degrees cross the boundary as raw coordinate
// lists on the way in and as element text forms on the way out.
class System {
 public:
  explicit System(InputDocument doc) : doc_(std::move(doc)), ws_(validate(doc_.group, doc_.weights)) {
    if (ws_.group().free_rank() == 1) classifier_.emplace(ws_);
  }

  std::string group() const { return ws_.group().to_string(); }
  std::vector<std::string> weights() const { return texts(ws_.group(), ws_.weights()); }
  std::vector<std::size_t> permutation() const { return ws_.permutation(); }
  std::size_t dimension() const { return ws_.ring_dimension(); }

  std::string p() const { return c().h().format(c().context().p()); }

  std::vector<std::vector<std::string>> classes() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& cls : enumerate_classes(c().context())) out.push_back(texts(c().h(), cls.canonical.elements));
    return out;
  }

  std::vector<std::string> summands(std::size_t k) const {
    return texts(c().g(), c().summands(class_at(k)).degrees);
  }

  bool is_mcm(const std::vector<Int>& degree) const { return c().is_mcm(doc_.from_raw(degree)); }
  bool is_modifying(const std::vector<std::vector<Int>>& ds) const { return c().is_modifying(vertices(ds)); }
  bool is_nccr(const std::vector<std::vector<Int>>& ds) const { return c().is_nccr(vertices(ds)); }

  py::dict quiver(std::size_t k, std::optional<Int> bound) const {
    const Int b = bound.value_or(default_search_bound(c()));
    auto s = arrows(ws_, c().summands(class_at(k)), b);
    py::list arrow_list;
    for (const auto& a : s.quiver.arrows) {
      arrow_list.append(py::make_tuple(c().g().format(s.quiver.vertices[a.source]),
                                       c().g().format(s.quiver.vertices[a.target]), monomial_label(a.exponents)));
    }
    py::dict d;
    d["vertices"] = texts(c().g(), s.quiver.vertices);
    d["arrows"] = arrow_list;
    d["loops"] = s.quiver.loop_count();
    d["bound"] = b;
    d["warnings"] = s.warnings;
    d["dot"] = emit_dot(s.quiver);
    return d;
  }

  std::vector<std::string> mutate_class(std::size_t k, const std::string& at) const {
    JSet j{class_at(k), true};
    return texts(c().h(), mutate(c().context(), j, c().h().parse(at)).elements);
  }

  std::string crosscheck(Int lo, Int hi, Int window) const {
    std::vector<GroupElement> degrees;
    for (Int f = lo; f <= hi; ++f) {
      for (const auto& t : c().g().torsion_elements()) degrees.push_back(GroupElement{f, t.tors});
    }
    return oracle::mcm_crosscheck(ws_, degrees, window, [&](const GroupElement& g) { return c().is_mcm(g); })
        .summary();
  }

  py::dict mckay() const {
    auto q = mckay_quiver(ws_);
    py::dict d;
    d["vertices"] = texts(ws_.group(), q.vertices);
    d["arrow_count"] = q.arrows.size();
    d["dot"] = emit_dot(q);
    return d;
  }

 private:
  const Classifier& c() const {
    if (!classifier_) throw UsageError("RankZeroGroup", "operation needs a rank-one group");
    return *classifier_;
  }

  std::vector<GroupElement> class_at(std::size_t k) const {
    auto all = enumerate_classes(c().context());
    if (k >= all.size()) throw UsageError("UnknownClass", "class index out of range");
    return all[k].canonical.elements;
  }

  VertexSet vertices(const std::vector<std::vector<Int>>& ds) const {
    std::vector<GroupElement> out;
    for (const auto& d : ds) out.push_back(doc_.from_raw(d));
    return make_vertex_set(out);
  }

  InputDocument doc_;
  WeightSystem ws_;
  std::optional<Classifier> classifier_;
};

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_nccr, m) {
  m.doc() = "Toric NCCR classification for rank-one Gorenstein toric singularities";

  auto base = py::register_exception<Error>(m, "NccrError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<System>(m, "System")
      .def_property_readonly("group", &System::group)
      .def_property_readonly("weights", &System::weights)
      .def_property_readonly("permutation", &System::permutation)
      .def_property_readonly("dimension", &System::dimension)
      .def_property_readonly("p", &System::p)
      .def("classes", &System::classes)
      .def("summands", &System::summands, py::arg("index"))
      .def("is_mcm", &System::is_mcm, py::arg("degree"))
      .def("is_modifying", &System::is_modifying, py::arg("degrees"))
      .def("is_nccr", &System::is_nccr, py::arg("degrees"))
      .def("quiver", &System::quiver, py::arg("index"), py::arg("bound") = py::none())
      .def("mutate", &System::mutate_class, py::arg("index"), py::arg("at"))
      .def("crosscheck", &System::crosscheck, py::arg("lo"), py::arg("hi"), py::arg("window"))
      .def("mckay", &System::mckay);

  m.def("loads", [](const std::string& text) { return System(parse_input(text)); }, py::arg("text"));
  m.def("load", [](const std::string& path) { return System(load_input(path)); }, py::arg("path"));
  m.def("run_cli", &run_cli, py::arg("args"));
  m.attr("REPORT_VERSION") = kReportVersion;
}
