#ifndef LIEINV_VERIFY_HPP
#define LIEINV_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieinv/gelfand.hpp"
#include "lieinv/lie_algebra.hpp"

namespace lieinv {

struct CheckResult {
    std::string name;  // "<group>/<subject>"
    std::string group;
    bool passed = false;
    std::string detail;
};

/// Where the suite gets its algebras and matrices. Tests swap these to inject faults.
struct VerifySources {
    std::function<LieAlgebra(std::string_view)> algebra;
    std::function<MatrixRecipe(std::string_view)> recipe;
};
VerifySources default_sources();

struct VerifyOptions {
    std::string only;     // group name; empty runs all groups
    std::string subject;  // restrict to checks about one algebra (canonical name); empty = all
    /// Compare with the displayed formulas literally: no sign freedom per coefficient, the
    /// dependency relation as printed and every table row as printed.
    bool strict = false;
    int jobs = 1;
};

struct VerifyReport {
    bool strict = false;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::optional<std::string> first_failure() const;
};

/// formulas, invariance, counts, contraction, labels, identity, isp
const std::vector<std::string>& verify_groups();

/// Throws UnknownName for an unknown group in `only`.
VerifyReport run_verify(const VerifyOptions& options, const VerifySources& sources = default_sources());

std::string render_text(const VerifyReport& r);

}  // namespace lieinv

#endif  // LIEINV_VERIFY_HPP
