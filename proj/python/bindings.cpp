#include "semitoric/classify.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/fans.hpp"
#include "semitoric/helix.hpp"
#include "semitoric/io.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/standard_form.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace semitoric;

namespace {

using PyVec = std::pair<Int, Int>;
using PyVecs = std::vector<PyVec>;

std::vector<Vec2> to_vecs(const PyVecs& v) {
    std::vector<Vec2> out;
    for (auto [x, y] : v) out.push_back({x, y});
    return out;
}

PyVecs from_vecs(const std::vector<Vec2>& v) {
    PyVecs out;
    for (Vec2 p : v) out.emplace_back(p.x, p.y);
    return out;
}

SemitoricHelix make_helix(Int c, const PyVecs& v) { return {c, to_vecs(v)}; }

py::dict helix_dict(const SemitoricHelix& h) {
    py::dict d;
    d["c"] = h.c;
    d["vectors"] = from_vecs(h.vectors);
    return d;
}

}  // namespace

PYBIND11_MODULE(_semitoric, m) {
    m.doc() = "Words in SL2(Z), toric fans, semitoric helices and polygons";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("eval_word", [](const std::string& w) {
        Mat2 x = eval(parse_word(w));
        return std::vector<std::vector<Int>>{{x.a, x.b}, {x.c, x.d}};
    }, py::arg("word"));
    m.def("winding", [](const std::string& w) { return render_twelfths(winding_twelfths(parse_word(w))); },
          py::arg("word"), "Winding number as \"n/12\".");
    m.def("reduce", [](const std::string& w) { return render(reduce(parse_word(w)).to_word()); },
          py::arg("word"), "Standard form of a word.");
    m.def("eq_g", [](const std::string& u, const std::string& v) { return eq_g(parse_word(u), parse_word(v)); },
          py::arg("u"), py::arg("v"));

    m.def("helix_validate", [](Int c, const PyVecs& v) { helix_validate(make_helix(c, v)); },
          py::arg("c"), py::arg("vectors"));
    m.def("helix_integers", [](Int c, const PyVecs& v) { return helix_integers(make_helix(c, v)); },
          py::arg("c"), py::arg("vectors"));
    m.def("helix_word", [](Int c, const PyVecs& v) { return render(helix_word(make_helix(c, v))); },
          py::arg("c"), py::arg("vectors"));
    m.def("helix_from_word", [](Int c, const std::vector<Int>& a) { return helix_dict(helix_from_word(c, a)); },
          py::arg("c"), py::arg("integers"));
    m.def("helix_from_seed", [](Int c, const std::string& seed) {
        return helix_dict(type7_from_seed(c, eval(parse_word(seed))));
    }, py::arg("c"), py::arg("seed"));
    m.def("helix_blowup", [](Int c, const PyVecs& v, std::size_t i) {
        return helix_dict(helix_blowup(make_helix(c, v), i));
    }, py::arg("c"), py::arg("vectors"), py::arg("index"));
    m.def("helix_blowdown", [](Int c, const PyVecs& v, std::size_t i) {
        return helix_dict(helix_blowdown(make_helix(c, v), i));
    }, py::arg("c"), py::arg("vectors"), py::arg("index"));
    m.def("helix_minimize", [](Int c, const PyVecs& v) {
        return helix_dict(helix_minimize(make_helix(c, v)).helix);
    }, py::arg("c"), py::arg("vectors"));
    m.def("classify", [](Int c, const PyVecs& v) {
        return helix_classify_minimal(make_helix(c, v)).render();
    }, py::arg("c"), py::arg("vectors"), "Class of a minimal helix with c > 0.");

    m.def("fan_minimize", [](const PyVecs& v) {
        return from_vecs(fan_minimize(ToricFan{to_vecs(v)}).fan.vectors);
    }, py::arg("vectors"));
    m.def("fan_classify", [](const PyVecs& v) {
        return fan_classify_minimal(ToricFan{to_vecs(v)}).render();
    }, py::arg("vectors"));

    m.def("polygon_to_helix", [](const std::string& json) {
        return helix_dict(polygon_to_helix(polygon_from_json(json)));
    }, py::arg("json"), "Helix of a polygon given as a JSON document.");
    m.def("polygon_from_helix", [](Int c, const PyVecs& v) {
        return to_json(helix_to_polygon(make_helix(c, v)));
    }, py::arg("c"), py::arg("vectors"), "Polygon JSON document for a helix.");
}
