// eigproj command line tool. JSON goes to stdout (or --out), diagnostics to
// stderr. Exit codes: 0 success / positive verdict, 1 negative verdict or
// invalid input, 2 malformed input or inapplicable operation.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "eigproj/analysis.hpp"
#include "eigproj/error.hpp"

using namespace eigproj;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Loaded {
  CategoryPtr category;
  std::optional<FinitePoset> poset;
};

// A file with "elements" is a poset, anything else a category.
Loaded load_structure(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("elements")) {
    FinitePoset p = poset_from_json(j);
    return {std::make_shared<const FiniteCategory>(poset_to_category(p)), p};
  }
  return {std::make_shared<const FiniteCategory>(category_from_json(j)), std::nullopt};
}

CategoryPtr load_valid_category(const std::string& path) {
  CategoryPtr cat = load_structure(path).category;
  auto v = validate(*cat);
  if (!v.empty()) throw Error(ErrorKind::InvalidCategory, "invalid category: " + v.front().message());
  if (!is_ei(*cat) || !is_skeletal(*cat)) throw Error(ErrorKind::InvalidCategory, "category must be EI and skeletal");
  return cat;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out, j);
  }
}

FieldSpec single_field(const std::vector<std::uint32_t>& fields) {
  if (fields.size() != 1) throw Error(ErrorKind::Precondition, "exactly one --field expected");
  return FieldSpec(fields.front());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedures for Gorenstein-projective tensor closure"};
  app.require_subcommand(1);

  std::string path, module_a, module_b, out;
  std::vector<std::uint32_t> fields;
  bool audit = false, timing = false, constant = false;
  std::size_t index = 0, posets = 0, seeds = 0, jobs = 1;
  std::optional<std::uint64_t> seed;

  auto* validate_cmd = app.add_subcommand("validate", "check the category axioms");
  validate_cmd->add_option("category", path, "category or poset file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full report with verdicts per field");
  analyze_cmd->add_option("category", path, "category or poset file")->required();
  analyze_cmd->add_option("--field", fields, "field characteristics")->delimiter(',')->default_str("2");
  analyze_cmd->add_flag("--audit", audit, "enumerate every column pair");
  analyze_cmd->add_flag("--timing", timing, "include wall-clock time");
  analyze_cmd->add_option("--out", out, "output file");

  auto* gproj_cmd = app.add_subcommand("gproj", "Gorenstein-projectivity of a module");
  gproj_cmd->add_option("category", path, "category or poset file")->required();
  gproj_cmd->add_option("module", module_a, "module file")->required();
  gproj_cmd->add_option("--field", fields, "must match the module's field")->delimiter(',');
  gproj_cmd->add_option("--out", out, "output file");

  auto* tensor_cmd = app.add_subcommand("tensor", "pointwise tensor product of two modules");
  tensor_cmd->add_option("category", path, "category or poset file")->required();
  tensor_cmd->add_option("a", module_a, "first module")->required();
  tensor_cmd->add_option("b", module_b, "second module")->required();
  tensor_cmd->add_option("--out", out, "output file");

  auto* column_cmd = app.add_subcommand("column", "write the column module C_q");
  column_cmd->add_option("category", path, "category or poset file")->required();
  column_cmd->add_option("q", index, "1-based position");
  column_cmd->add_flag("--constant", constant, "write the constant module instead");
  column_cmd->add_option("--field", fields, "field characteristic")->delimiter(',')->default_str("2");
  column_cmd->add_option("--out", out, "output file");

  auto* generate_cmd = app.add_subcommand("generate", "build a free EI category from a spec");
  generate_cmd->add_option("spec", path, "spec file");
  generate_cmd->add_option("--seed", seed, "use random_spec(seed) instead of a file");
  generate_cmd->add_flag("--emit-spec", constant, "write the spec instead of the category");
  generate_cmd->add_option("--out", out, "output file");

  auto* poset_cmd = app.add_subcommand("poset-gpt", "upper-bound criterion on a poset");
  poset_cmd->add_option("poset", path, "poset file")->required();
  poset_cmd->add_option("--out", out, "output file");

  auto* sweep_cmd = app.add_subcommand("sweep", "cross-check all methods over a corpus");
  auto* posets_opt = sweep_cmd->add_option("--posets", posets, "all labeled posets on n elements");
  auto* seeds_opt = sweep_cmd->add_option("--seeds", seeds, "random free categories for seeds 0..k-1");
  posets_opt->excludes(seeds_opt);
  sweep_cmd->add_option("--field", fields, "field characteristics")->delimiter(',')->default_str("2,3");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->default_val(1);
  sweep_cmd->add_flag("--audit", audit, "enumerate every column pair");
  sweep_cmd->add_option("--out", out, "JSONL output file");

  CLI11_PARSE(app, argc, argv);
  if (fields.empty()) fields = {2};

  try {
    if (*validate_cmd) {
      Loaded loaded;
      try {
        loaded = load_structure(path);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Malformed) throw;
        std::cerr << "malformed: " << e.what() << "\n";
        return kError;
      }
      auto v = validate(*loaded.category);
      Json j{{"valid", v.empty()}, {"violations", to_json(v)}};
      std::cout << j.dump(2) << "\n";
      return v.empty() ? kOk : kNegative;
    }

    if (*analyze_cmd) {
      Loaded loaded = load_structure(path);
      AnalysisReport r = analyze(loaded.category, fields, {audit, timing}, loaded.poset);
      emit(to_json(r, *loaded.category), out);
      return r.valid ? kOk : kNegative;
    }

    if (*gproj_cmd) {
      CategoryPtr cat = load_valid_category(path);
      CModule m = module_from_json(read_json_file(module_a), cat);
      if (gproj_cmd->count("--field") && !(single_field(fields) == m.field)) {
        throw Error(ErrorKind::Precondition, "--field differs from the module's field");
      }
      GprojVerdict v = gproj_test(m);
      emit(to_json(v), out);
      return v.overall ? kOk : kNegative;
    }

    if (*tensor_cmd) {
      CategoryPtr cat = load_valid_category(path);
      CModule a = module_from_json(read_json_file(module_a), cat);
      CModule b = module_from_json(read_json_file(module_b), cat);
      for (const CModule* m : {&a, &b}) {
        auto v = validate_module(*m);
        if (!v.empty()) throw Error(ErrorKind::InvalidModule, "module is not a functor: " + v.front().message());
      }
      emit(module_to_json(tensor_hat(a, b)), out);
      return kOk;
    }

    if (*column_cmd) {
      CategoryPtr cat = load_valid_category(path);
      FieldSpec k = single_field(fields);
      if (!constant && !column_cmd->count("q")) throw Error(ErrorKind::Precondition, "give q or --constant");
      CModule m = constant ? constant_module(cat, k) : column_module(cat, k, index);
      emit(module_to_json(m), out);
      return kOk;
    }

    if (*generate_cmd) {
      if (path.empty() == !seed) throw Error(ErrorKind::Precondition, "give either a spec file or --seed");
      FreeEISpec spec = seed ? random_spec(*seed) : spec_from_json(read_json_file(path));
      if (constant) {
        emit(spec_to_json(spec), out);
      } else {
        emit(category_to_json(generate_category(spec)), out);
      }
      return kOk;
    }

    if (*poset_cmd) {
      FinitePoset p = poset_from_json(read_json_file(path));
      GptVerdict v = poset_gpt(p);
      emit(to_json(v), out);
      return kOk;
    }

    if (*sweep_cmd) {
      if (!*posets_opt && !*seeds_opt) throw Error(ErrorKind::Precondition, "give --posets n or --seeds k");
      SweepOptions options;
      options.fields = fields;
      options.jobs = std::max<std::size_t>(jobs, 1);
      options.audit = audit;
      std::ofstream file;
      if (!out.empty()) {
        file.open(out);
        if (!file) throw Error(ErrorKind::Precondition, "cannot write '" + out + "'");
      }
      std::ostream& sink = out.empty() ? std::cout : file;
      SweepSummary s = *posets_opt ? sweep_posets(posets, options, sink) : sweep_seeds(seeds, options, sink);
      std::cerr << s.instances << " instances, " << s.disagreements << " disagreements, " << s.findings
                << " field-dependent\n";
      return s.disagreements == 0 ? kOk : kNegative;
    }
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kError;
  }
  return kOk;
}
