#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "alg3/invariants.hpp"
#include "alg3/table.hpp"

namespace alg3 {

enum class Family {
    A1_0, A1_1,
    A2_0, A2_1, A2_2, A2_3, A2_4, A2_5, A2_5m, A2_6,
    U3_0, U3_1, U3_2, U3_2m, U3_3, U3_4,
    C3_0, C3_1, C3_2, C3_3, C3_4,
    S3_1, S3_2, S3_3, S3_3m, S3_4,
    W3_1, W3_2, W3_3, W3_3m, W3_4, W3_5, W3_6, W3_7, W3_8, W3_9, W3_10,
};

std::string family_name(Family f);
std::optional<Family> family_parse(const std::string& name);
int family_dim(Family f);
bool family_real_only(Family f);
inline bool family_parameterized(Family f) { return f == Family::W3_3 || f == Family::W3_3m; }

/// Canonical catalog identifier; parameterized families carry the exact k^2
/// and a normalized representative of k (which may live in a quadratic tower).
struct Label {
    Family family;
    std::optional<Scalar> k_squared;
    std::optional<ExtScalar> k;

    static Label fixed(Family f);
    /// Family label from a rational parameter value; normalizes k into the
    /// half-plane (Complex) or to k >= 0 (Real).
    static Label with_param(Family f, const Scalar& k_value, FieldMode mode);
    /// Family label from an exact k^2 with a tower representative for k.
    static Label with_param_squared(Family f, Scalar k_squared, ExtScalar k_norm);

    bool is_family() const { return family_parameterized(family); }
    std::string to_string() const;

    friend bool operator==(const Label& a, const Label& b) {
        if (a.family != b.family) return false;
        if (!family_parameterized(a.family)) return true;
        return a.k_squared && b.k_squared && *a.k_squared == *b.k_squared;
    }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
};

struct CatalogMetadata {
    bool commutative = false;
    bool unital = false;
    bool zeropotent = false;
    bool indecomposable = false;
    /// Discriminates classes the profile cannot split (stored, test-asserted).
    std::string reduction_class;
};

/// Exact table as printed in the source catalog. Family labels need a
/// rational parameter; minus-decorated labels exist only in Real mode.
StructureTable canonical_table(const Label& label, FieldMode mode);

/// Complete list for a mode and dimension; parameterized families appear as
/// stubs (no parameter) after the fixed labels.
std::vector<Label> catalog_list(FieldMode mode, int dim);

/// Stored profile for fixed labels; computed from the canonical table for
/// family labels (the alpha/beta/gamma block is pinned either way).
InvariantProfile expected_invariants(const Label& label, FieldMode mode);

CatalogMetadata catalog_metadata(Family f);

/// The solutions (k,l,a,b,c,d) of the curled two-dimensional equations,
/// in the canonical order. There are exactly seven.
std::vector<std::array<int, 6>> enumerate_curled2();

/// Table of the curled dim-2 algebra for one enumerated tuple.
StructureTable curled2_table(const std::array<int, 6>& t, FieldMode mode);

}  // namespace alg3
