#pragma once

#include <functional>
#include <string>
#include <vector>

#include "alg3/catalog.hpp"

namespace alg3 {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelfTestOptions {
    bool full = true;
    /// Test hook: replaces canonical table lookup (used to prove the suite
    /// catches deliberately corrupted catalogs). Null means the real catalog.
    std::function<StructureTable(const Label&, FieldMode)> table_source;
};

/// Runs the acceptance criteria; quick mode covers 1-4, full mode 1-10.
std::vector<CriterionResult> run_selftest(const SelfTestOptions& opt = {});

}  // namespace alg3
