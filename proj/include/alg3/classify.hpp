#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alg3/catalog.hpp"
#include "alg3/invariants.hpp"
#include "alg3/table.hpp"

namespace alg3 {

enum class WitnessStatus { ExactVerified, OmittedCubicRoot, OmittedUnsupported };

const char* witness_status_name(WitnessStatus s);

/// One step of the case analysis, with the scalars it bound.
struct TraceStep {
    std::string case_id;
    std::vector<std::pair<std::string, std::string>> bound;
};

struct ClassifyResult {
    Label label;
    InvariantProfile profile;
    std::vector<TraceStep> trace;
    /// Basis change from the input basis to the canonical basis; verified
    /// against the canonical table whenever present.
    std::optional<Mat<ExtScalar>> witness;
    WitnessStatus witness_status = WitnessStatus::ExactVerified;
};

/// Master dispatch: dimension, then unitality, then shape.
ClassifyResult classify(const StructureTable& a);

ClassifyResult classify_dim1(const StructureTable& a);
ClassifyResult classify_dim2(const StructureTable& a);
ClassifyResult classify_unital3(const StructureTable& a);
ClassifyResult classify_curled3(const StructureTable& a);
ClassifyResult classify_straight3(const StructureTable& a);
ClassifyResult classify_waved3(const StructureTable& a);

/// Complete invariant of the one-parameter waved family, computed from the
/// induced form Q on A/A^2 via lambda = det(T)/det(Q).
struct WavedParameter {
    std::optional<int> detq_sign_real;  // Real mode only
    Scalar k_squared;
    ExtScalar k;      // normalized representative
    Family family;    // W3_3, or W3_3m in Real mode with det(Q) < 0
};

WavedParameter waved_parameter(const StructureTable& a);

/// Exact check of the isomorphism criterion for a transformation matrix
/// m from table a to table b (rows give images of a's basis).
bool satisfies_iso_criterion(const StructureTable& a, const StructureTable& b,
                             const Mat<ExtScalar>& m);

}  // namespace alg3
