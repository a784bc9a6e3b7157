#ifndef LIEINV_REPORT_HPP
#define LIEINV_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieinv/contraction.hpp"
#include "lieinv/gelfand.hpp"
#include "lieinv/lie_algebra.hpp"
#include "lieinv/mlp.hpp"

namespace lieinv {

struct InvariantEntry {
    MultiPoly poly;
    int degree = 0;
    std::string provenance;
    int operators_checked = 0;
    int operators_passed = 0;

    bool verified() const { return operators_checked > 0 && operators_passed == operators_checked; }
};

struct InvariantsReport {
    std::string algebra;
    int dim = 0;
    int n_invariants = 0;  // N(g)
    std::string method;    // "matrix" or "kernel"
    std::optional<MultiPoly> polynomial;
    std::vector<InvariantEntry> invariants;
    int independence_rank = 0;
    std::vector<std::string> notes;
};

struct ContractionDiagnostic {
    std::string kind;  // "CountMismatch" or "DependentInvariants"
    std::string message;
};

struct ContractionReport {
    std::string name;
    std::string source;
    std::vector<int> exponents;
    LieAlgebra contracted;
    int n_source = 0;
    int n_contracted = 0;
    std::optional<int> alpha;
    std::optional<MultiPoly> limit;
    std::vector<InvariantEntry> invariants;
    std::optional<ContractionDiagnostic> diagnostic;
};

/// Invariants from the matrix recipe when there is one, otherwise from the polynomial kernel.
InvariantsReport build_invariants_report(const LieAlgebra& g, const std::optional<MatrixRecipe>& recipe);

/// Runs the contraction steps. CountMismatch and DependentInvariants are recorded in
/// `diagnostic` instead of thrown; DivergentContraction and NonInvariantCoefficient propagate.
ContractionReport build_contraction_report(const ContractionSpec& spec, const std::optional<MatrixRecipe>& recipe);

/// Per-operator check of each polynomial.
std::vector<InvariantEntry> check_entries(const LieAlgebra& g, const InvariantSet& s);

std::string render_text(const InvariantsReport& r);
std::string render_text(const ContractionReport& r);
std::string render_text(const MLPReport& r);

}  // namespace lieinv

#endif  // LIEINV_REPORT_HPP
