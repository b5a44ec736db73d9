#pragma once

// Gorenstein-projectivity of modules over a projective EI category and the
// decision procedures for closure of Gorenstein-projectives under ⊗̂.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eigproj/cmodule.hpp"

namespace eigproj {

struct TailVerdict {
  std::size_t t = 0;
  std::size_t quotient_dim = 0;
  std::size_t rank = 0;
  bool injective = true;
};

struct GprojVerdict {
  std::vector<TailVerdict> tails;  // t = 1 .. n-1
  bool overall = true;
};

/// Injectivity of the map from the tail quotient into X_t for every cut t.
/// Throws NotGorenstein if the category is not projective over the field,
/// InvalidModule if x is not a functor.
GprojVerdict gproj_test(const CModule& x);
/// The same computation without the precondition checks.
GprojVerdict gproj_test_unchecked(const CModule& x);

struct GpnEntry {
  std::size_t i = 0, s = 0;
  std::size_t domain_dim = 0, rank = 0;
  bool injective = true;
};

/// For X vanishing at positions above s and passing gproj_test: the maps
/// kHom(x_s, x_i) ⊗_{kAut(x_s)} X_s -> X_i for i < s. Throws Precondition
/// when the hypotheses fail.
std::vector<GpnEntry> gpn_check(const CModule& x, std::size_t s);

/// The tail map with the domain built from unfactorizable morphisms only,
/// quotiented by automorphism relations. Throws NotFree.
TailRow free_phi_star(const CModule& x, std::size_t t);

enum class GptMethod { ColumnCriterion, MonoCriterion, PosetCriterion };
enum class GptOutcome { Closed, NotClosed, Abstain };
const char* to_string(GptMethod m);
const char* to_string(GptOutcome o);

struct ColumnWitness {
  std::size_t p = 0, q = 0, t = 0;
  friend bool operator==(const ColumnWitness&, const ColumnWitness&) = default;
};
struct MonoWitness {
  std::string morphism;
};
struct PosetWitness {
  std::string a, b, s1, s2, upper;
};
using GptWitness = std::variant<std::monostate, ColumnWitness, MonoWitness, PosetWitness>;

/// Result for one tensor C_p ⊗̂ C_q of column modules.
struct ColumnPair {
  std::size_t p = 0, q = 0;
  GprojVerdict gproj;
  std::optional<bool> projective;  // set when the consistency check ran
};

struct GptVerdict {
  GptMethod method = GptMethod::ColumnCriterion;
  GptOutcome outcome = GptOutcome::Closed;
  GptWitness witness;                    // set iff outcome is NotClosed
  std::optional<std::uint32_t> field;    // unset for the field-free poset criterion
  std::vector<ColumnPair> pairs;         // column criterion only
  std::vector<ColumnWitness> failures;   // every failing (p, q, least t) seen
  std::vector<std::string> consistency;  // gproj / projectivity disagreements

  bool closed() const { return outcome == GptOutcome::Closed; }
};

struct GptOptions {
  bool audit = false;             // keep going after the first failure
  bool check_projective = true;   // compare each gproj verdict with is_projective
};

/// Column criterion: every C_p ⊗̂ C_q with p <= q is Gorenstein-projective.
/// Throws NotGorenstein.
GptVerdict gpt_closed(const FiniteCategory& cat, FieldSpec field, GptOptions options = {});
GptVerdict gpt_closed(const CategoryPtr& cat, FieldSpec field, GptOptions options = {});

/// Monomorphism criterion. A non-mono morphism rules closure out; for free
/// categories all-mono decides it; otherwise abstains. Throws NotGorenstein.
GptVerdict gpt_closed_via_mono(const FiniteCategory& cat, FieldSpec field);

}  // namespace eigproj
