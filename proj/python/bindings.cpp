// Python bindings. Structures cross the boundary as JSON text; the Python
// package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eigproj/analysis.hpp"
#include "eigproj/error.hpp"

namespace py = pybind11;
using namespace eigproj;

namespace {

struct Loaded {
  CategoryPtr category;
  std::optional<FinitePoset> poset;
};

Loaded load(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::Malformed, "not valid JSON");
  if (j.is_object() && j.contains("elements")) {
    FinitePoset p = poset_from_json(j);
    return {std::make_shared<const FiniteCategory>(poset_to_category(p)), p};
  }
  return {std::make_shared<const FiniteCategory>(category_from_json(j)), std::nullopt};
}

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::Malformed, "not valid JSON");
  return j;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "eigproj core (JSON in, JSON out)";

  static py::exception<Error> error(m, "EigprojError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("validate", [](const std::string& cat) { return dump(to_json(validate(*load(cat).category))); },
        py::arg("category"));

  m.def(
      "analyze",
      [](const std::string& cat, std::vector<std::uint32_t> fields, bool audit) {
        Loaded l = load(cat);
        AnalysisReport r;
        {
          py::gil_scoped_release release;
          r = analyze(l.category, fields, {audit, false}, l.poset);
        }
        return dump(to_json(r, *l.category));
      },
      py::arg("category"), py::arg("fields") = std::vector<std::uint32_t>{2}, py::arg("audit") = false);

  m.def(
      "gpt_closed",
      [](const std::string& cat, std::uint32_t p, bool audit) {
        return dump(to_json(gpt_closed(load(cat).category, FieldSpec(p), GptOptions{audit, true})));
      },
      py::arg("category"), py::arg("p"), py::arg("audit") = false);

  m.def("poset_gpt", [](const std::string& poset) { return dump(to_json(poset_gpt(poset_from_json(parse(poset))))); },
        py::arg("poset"));

  m.def(
      "column",
      [](const std::string& cat, std::size_t q, std::uint32_t p) {
        return dump(module_to_json(column_module(load(cat).category, FieldSpec(p), q)));
      },
      py::arg("category"), py::arg("q"), py::arg("p"));

  m.def(
      "tensor",
      [](const std::string& cat, const std::string& a, const std::string& b) {
        CategoryPtr c = load(cat).category;
        return dump(module_to_json(tensor_hat(module_from_json(parse(a), c), module_from_json(parse(b), c))));
      },
      py::arg("category"), py::arg("a"), py::arg("b"));

  m.def(
      "gproj",
      [](const std::string& cat, const std::string& module) {
        return dump(to_json(gproj_test(module_from_json(parse(module), load(cat).category))));
      },
      py::arg("category"), py::arg("module"));

  m.def("generate", [](const std::string& spec) { return dump(category_to_json(generate_category(spec_from_json(parse(spec))))); },
        py::arg("spec"));
  m.def("random_spec", [](std::uint64_t seed) { return dump(spec_to_json(random_spec(seed))); }, py::arg("seed"));
  m.def("digest", [](const std::string& cat) { return category_digest(*load(cat).category); }, py::arg("category"));

  m.def(
      "enumerate_posets",
      [](std::size_t n) {
        std::vector<std::string> out;
        for_each_poset(n, [&](const FinitePoset& p) { out.push_back(dump(poset_to_json(p))); });
        return out;
      },
      py::arg("n"));
}
