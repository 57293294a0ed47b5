#include "alg3/catalog.hpp"

#include <map>

namespace alg3 {

namespace {

struct FamilyInfo {
    const char* name;
    int dim;
    bool real_only;
    InvariantProfile profile;  // fixed labels only
    CatalogMetadata meta;
};

InvariantProfile prof(int a, int b, int g, bool comm, bool unital, Shape sh, bool zp, bool sqsq,
                      bool plane) {
    InvariantProfile p;
    p.alpha = a;
    p.beta = b;
    p.gamma = g;
    p.commutative = comm;
    p.unital = unital;
    p.shape = sh;
    p.zeropotent = zp;
    p.square_of_square_zero = sqsq;
    p.zeropotent_plane = plane;
    return p;
}

CatalogMetadata meta(bool comm, bool unital, bool zp, bool indec, const char* cls = "") {
    return CatalogMetadata{comm, unital, zp, indec, cls};
}

const std::map<Family, FamilyInfo>& info_map() {
    using S = Shape;
    static const std::map<Family, FamilyInfo> m = {
        {Family::A1_0, {"A1_0", 1, false, prof(0, 1, 1, true, false, S::Curled, true, true, false),
                        meta(true, false, true, true)}},
        {Family::A1_1, {"A1_1", 1, false, prof(1, 0, 0, true, true, S::Curled, false, false, false),
                        meta(true, true, false, true)}},
        {Family::A2_0, {"A2_0", 2, false, prof(0, 2, 2, true, false, S::Curled, true, true, true),
                        meta(true, false, true, false)}},
        {Family::A2_1, {"A2_1", 2, false, prof(2, 1, 0, false, false, S::Curled, false, false, false),
                        meta(false, false, false, true)}},
        {Family::A2_2, {"A2_2", 2, false, prof(2, 0, 1, false, false, S::Curled, false, false, false),
                        meta(false, false, false, true)}},
        {Family::A2_3, {"A2_3", 2, false, prof(1, 1, 1, true, false, S::Straight, false, true, false),
                        meta(true, false, false, true, "nilpotent")}},
        {Family::A2_4, {"A2_4", 2, false, prof(1, 1, 1, true, false, S::Straight, false, false, false),
                        meta(true, false, false, false, "idempotent")}},
        {Family::A2_5, {"A2_5", 2, false, prof(2, 0, 0, true, true, S::Straight, false, false, false),
                        meta(true, true, false, false, "split")}},
        {Family::A2_5m, {"A2_5m", 2, true, prof(2, 0, 0, true, true, S::Straight, false, false, false),
                         meta(true, true, false, true, "nonsplit")}},
        {Family::A2_6, {"A2_6", 2, false, prof(2, 0, 0, true, true, S::Straight, false, false, false),
                        meta(true, true, false, true, "degenerate")}},
        {Family::U3_0, {"U3_0", 3, false, prof(3, 0, 0, true, true, S::Waved, false, false, true),
                        meta(true, true, false, true, "not_unitally_straight")}},
        {Family::U3_1, {"U3_1", 3, false, prof(3, 0, 0, false, true, S::Waved, false, false, false),
                        meta(false, true, false, true, "not_unitally_straight")}},
        {Family::U3_2, {"U3_2", 3, false, prof(3, 0, 0, true, true, S::Straight, false, false, false),
                        meta(true, true, false, false, "squarefree_split")}},
        {Family::U3_2m, {"U3_2m", 3, true, prof(3, 0, 0, true, true, S::Straight, false, false, false),
                         meta(true, true, false, false, "squarefree_nonsplit")}},
        {Family::U3_3, {"U3_3", 3, false, prof(3, 0, 0, true, true, S::Straight, false, false, false),
                        meta(true, true, false, false, "double_root")}},
        {Family::U3_4, {"U3_4", 3, false, prof(3, 0, 0, true, true, S::Straight, false, false, false),
                        meta(true, true, false, true, "triple_root")}},
        {Family::C3_0, {"C3_0", 3, false, prof(0, 3, 3, true, false, S::Curled, true, true, true),
                        meta(true, false, true, false)}},
        {Family::C3_1, {"C3_1", 3, false, prof(1, 1, 1, false, false, S::Curled, true, true, true),
                        meta(false, false, true, true)}},
        {Family::C3_2, {"C3_2", 3, false, prof(3, 1, 1, false, false, S::Curled, false, false, true),
                        meta(false, false, false, true)}},
        {Family::C3_3, {"C3_3", 3, false, prof(3, 2, 0, false, false, S::Curled, false, false, true),
                        meta(false, false, false, true)}},
        {Family::C3_4, {"C3_4", 3, false, prof(3, 0, 2, false, false, S::Curled, false, false, true),
                        meta(false, false, false, true)}},
        {Family::S3_1, {"S3_1", 3, false, prof(2, 1, 1, true, false, S::Straight, false, true, true),
                        meta(true, false, false, true, "nilpotent")}},
        {Family::S3_2, {"S3_2", 3, false, prof(2, 1, 1, true, false, S::Straight, false, false, false),
                        meta(true, false, false, false, "idempotent")}},
        {Family::S3_3, {"S3_3", 3, false, prof(2, 1, 1, true, false, S::Straight, false, false, false),
                        meta(true, false, false, false, "split")}},
        {Family::S3_3m, {"S3_3m", 3, true, prof(2, 1, 1, true, false, S::Straight, false, false, false),
                         meta(true, false, false, false, "nonsplit")}},
        {Family::S3_4, {"S3_4", 3, false, prof(2, 1, 1, true, false, S::Straight, false, false, true),
                        meta(true, false, false, false, "degenerate")}},
        {Family::W3_1, {"W3_1", 3, false, prof(1, 2, 2, true, false, S::Waved, false, true, true),
                        meta(true, false, false, false)}},
        {Family::W3_2, {"W3_2", 3, false, prof(1, 2, 2, false, false, S::Waved, false, true, true),
                        meta(false, false, false, true)}},
        {Family::W3_3, {"W3_3", 3, false, prof(1, 1, 1, false, false, S::Waved, false, true, true),
                        meta(false, false, false, true)}},
        {Family::W3_3m, {"W3_3m", 3, true, prof(1, 1, 1, false, false, S::Waved, false, true, true),
                         meta(false, false, false, true)}},
        {Family::W3_4, {"W3_4", 3, false, prof(1, 2, 2, true, false, S::Waved, false, false, true),
                        meta(true, false, false, false)}},
        {Family::W3_5, {"W3_5", 3, false, prof(2, 2, 1, false, false, S::Waved, false, false, true),
                        meta(false, false, false, false)}},
        {Family::W3_6, {"W3_6", 3, false, prof(2, 1, 2, false, false, S::Waved, false, false, true),
                        meta(false, false, false, false)}},
        {Family::W3_7, {"W3_7", 3, false, prof(3, 1, 0, false, false, S::Waved, false, false, false),
                        meta(false, false, false, false)}},
        {Family::W3_8, {"W3_8", 3, false, prof(3, 0, 1, false, false, S::Waved, false, false, false),
                        meta(false, false, false, false)}},
        {Family::W3_9, {"W3_9", 3, false, prof(3, 0, 1, false, false, S::Waved, false, false, true),
                        meta(false, false, false, true)}},
        {Family::W3_10, {"W3_10", 3, false, prof(3, 1, 0, false, false, S::Waved, false, false, true),
                         meta(false, false, false, true)}},
    };
    return m;
}

const FamilyInfo& info(Family f) { return info_map().at(f); }

// Sets e_i e_j = sign * e_s (1-indexed basis positions).
void put(StructureTable& t, int i, int j, int s, long coef = 1) {
    t.at(i - 1, j - 1, s - 1) = Scalar(coef);
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

std::optional<Family> family_parse(const std::string& name) {
    for (const auto& [fam, fi] : info_map())
        if (name == fi.name) return fam;
    return std::nullopt;
}

int family_dim(Family f) { return info(f).dim; }
bool family_real_only(Family f) { return info(f).real_only; }

Label Label::fixed(Family f) { return Label{f, std::nullopt, std::nullopt}; }

Label Label::with_param(Family f, const Scalar& k_value, FieldMode mode) {
    if (!family_parameterized(f)) throw BadLabel("parameter given for fixed label " + family_name(f));
    Scalar k = k_value;
    if (mode == FieldMode::Real) {
        if (!k.is_real()) throw ModeMismatch("real family parameter expected");
        if (sgn(k.re) < 0) k = -k;
    } else if (!in_half_plane(k)) {
        k = -k;
    }
    return Label{f, k * k, ExtScalar(k)};
}

Label Label::with_param_squared(Family f, Scalar k_squared, ExtScalar k_norm) {
    if (!family_parameterized(f)) throw BadLabel("parameter given for fixed label " + family_name(f));
    return Label{f, std::move(k_squared), std::move(k_norm)};
}

std::string Label::to_string() const {
    if (!is_family()) return family_name(family);
    std::string out = family_name(family) + "(k)";
    if (k_squared) out += ", k^2 = " + scalar_to_string(*k_squared);
    return out;
}

StructureTable canonical_table(const Label& label, FieldMode mode) {
    Family f = label.family;
    if (family_real_only(f) && mode == FieldMode::Complex)
        throw BadLabel(family_name(f) + " exists only over the reals");
    int d = family_dim(f);
    StructureTable t(d, mode);
    Scalar k;
    if (family_parameterized(f)) {
        if (!label.k || !label.k->is_scalar())
            throw BadLabel("family label needs a rational parameter to build its table");
        k = label.k->as_scalar();
        if (k * k != *label.k_squared) throw BadLabel("inconsistent family parameter");
    }
    switch (f) {
        case Family::A1_0: break;
        case Family::A1_1: put(t, 1, 1, 1); break;
        case Family::A2_0: break;
        case Family::A2_1: put(t, 2, 1, 1); put(t, 2, 2, 2); break;
        case Family::A2_2: put(t, 1, 2, 1); put(t, 2, 2, 2); break;
        case Family::A2_3: put(t, 2, 2, 1); break;
        case Family::A2_4: put(t, 1, 1, 1); break;
        case Family::A2_5: put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 2, 1, 2); put(t, 2, 2, 1); break;
        case Family::A2_5m: put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 2, 1, 2); put(t, 2, 2, 1, -1); break;
        case Family::A2_6: put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 2, 1, 2); break;
        case Family::U3_0:
            put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 1, 3, 3);
            put(t, 2, 1, 2); put(t, 3, 1, 3);
            break;
        case Family::U3_1:
            put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 1, 3, 3);
            put(t, 2, 1, 2); put(t, 3, 1, 3);
            put(t, 2, 3, 2); put(t, 3, 2, 2, -1); put(t, 3, 3, 1);
            break;
        case Family::U3_2: put(t, 1, 1, 1); put(t, 2, 2, 2); put(t, 3, 3, 3); break;
        case Family::U3_2m:
            put(t, 1, 1, 1);
            put(t, 2, 2, 2); put(t, 2, 3, 3); put(t, 3, 2, 3); put(t, 3, 3, 2, -1);
            break;
        case Family::U3_3:
            put(t, 1, 1, 1);
            put(t, 2, 2, 2); put(t, 2, 3, 3); put(t, 3, 2, 3);
            break;
        case Family::U3_4:
            put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 1, 3, 3);
            put(t, 2, 1, 2); put(t, 3, 1, 3);
            put(t, 2, 2, 3);
            break;
        case Family::C3_0: break;
        case Family::C3_1: put(t, 2, 3, 1); put(t, 3, 2, 1, -1); break;
        case Family::C3_2: put(t, 2, 1, 1); put(t, 2, 2, 2); put(t, 3, 2, 3); break;
        case Family::C3_3: put(t, 3, 1, 1); put(t, 3, 2, 2); put(t, 3, 3, 3); break;
        case Family::C3_4: put(t, 1, 3, 1); put(t, 2, 3, 2); put(t, 3, 3, 3); break;
        case Family::S3_1: put(t, 1, 1, 2); put(t, 1, 2, 3); put(t, 2, 1, 3); break;
        case Family::S3_2: put(t, 1, 1, 1); put(t, 2, 2, 3); break;
        case Family::S3_3:
            put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 2, 1, 2); put(t, 2, 2, 1);
            break;
        case Family::S3_3m:
            put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 2, 1, 2); put(t, 2, 2, 1, -1);
            break;
        case Family::S3_4: put(t, 1, 1, 1); put(t, 1, 2, 2); put(t, 2, 1, 2); break;
        case Family::W3_1: put(t, 3, 3, 1); break;
        case Family::W3_2: put(t, 3, 2, 1); break;
        case Family::W3_3:
            put(t, 2, 2, 1); put(t, 3, 3, 1);
            t.at(2, 1, 0) = k;
            break;
        case Family::W3_3m:
            put(t, 2, 2, 1); put(t, 3, 3, 1, -1);
            t.at(2, 1, 0) = k;
            break;
        case Family::W3_4: put(t, 1, 1, 1); break;
        case Family::W3_5: put(t, 3, 2, 2); put(t, 3, 3, 3); break;
        case Family::W3_6: put(t, 2, 3, 2); put(t, 3, 3, 3); break;
        case Family::W3_7: put(t, 1, 1, 1); put(t, 3, 2, 2); put(t, 3, 3, 3); break;
        case Family::W3_8: put(t, 1, 1, 1); put(t, 2, 3, 2); put(t, 3, 3, 3); break;
        case Family::W3_9: put(t, 1, 2, 1); put(t, 2, 1, 1); put(t, 2, 2, 2); put(t, 3, 2, 3); break;
        case Family::W3_10: put(t, 1, 2, 1); put(t, 2, 1, 1); put(t, 2, 2, 2); put(t, 2, 3, 3); break;
    }
    if (mode == FieldMode::Real && !t.all_real())
        throw ModeMismatch("complex parameter in a Real-mode table");
    return t;
}

std::vector<Label> catalog_list(FieldMode mode, int dim) {
    if (dim < 1 || dim > 3) throw BadLabel("catalog covers dimensions 1..3");
    std::vector<Label> fixed, stubs;
    for (const auto& [fam, fi] : info_map()) {
        if (fi.dim != dim) continue;
        if (fi.real_only && mode == FieldMode::Complex) continue;
        if (family_parameterized(fam))
            stubs.push_back(Label::fixed(fam));
        else
            fixed.push_back(Label::fixed(fam));
    }
    fixed.insert(fixed.end(), stubs.begin(), stubs.end());
    return fixed;
}

InvariantProfile expected_invariants(const Label& label, FieldMode mode) {
    const FamilyInfo& fi = info(label.family);
    if (!family_parameterized(label.family)) return fi.profile;
    if (label.k && label.k->is_scalar()) {
        InvariantProfile p = invariant_profile(canonical_table(label, mode));
        if (p.alpha != fi.profile.alpha || p.beta != fi.profile.beta ||
            p.gamma != fi.profile.gamma)
            throw InternalContradiction("family profile drifted from the stored table values");
        return p;
    }
    return fi.profile;  // stub: the (1,1,1) block with generic flags
}

CatalogMetadata catalog_metadata(Family f) { return info(f).meta; }

std::vector<std::array<int, 6>> enumerate_curled2() {
    std::vector<std::array<int, 6>> out;
    for (int k = 0; k <= 1; ++k)
        for (int l = 0; l <= 1; ++l)
            for (int a = 0; a <= 1; ++a)
                for (int b = 0; b <= 1; ++b)
                    for (int c = 0; c <= 1; ++c)
                        for (int d = 0; d <= 1; ++d) {
                            bool ok = a * b == 0 && b * b == k * b;
                            ok = ok && c * d == 0 && a * a == l * a && c * c == l * c &&
                                 d * d == k * d;
                            ok = ok && k * (a - c) == a * d - b * c &&
                                 l * (d - b) == a * d - b * c;
                            ok = ok && k == b + d && l == a + c;
                            if (ok) out.push_back({k, l, a, b, c, d});
                        }
    return out;
}

StructureTable curled2_table(const std::array<int, 6>& t, FieldMode mode) {
    auto [k, l, a, b, c, d] = t;
    StructureTable s(2, mode);
    s.at(0, 0, 0) = Scalar(k);
    s.at(1, 1, 1) = Scalar(l);
    s.at(0, 1, 0) = Scalar(a);
    s.at(0, 1, 1) = Scalar(b);
    s.at(1, 0, 0) = Scalar(c);
    s.at(1, 0, 1) = Scalar(d);
    return s;
}

}  // namespace alg3
