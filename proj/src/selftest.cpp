#include "alg3/selftest.hpp"

#include <chrono>
#include <sstream>

#include "alg3/classify.hpp"
#include "alg3/iso.hpp"
#include "alg3/prng.hpp"

namespace alg3 {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    std::ostringstream detail;
    int failures = 0;
    int checks = 0;

    void require(bool cond, const std::string& msg) {
        ++checks;
        if (!cond) {
            ++failures;
            if (failures <= 8) detail << (failures > 1 ? "; " : "") << msg;
        }
    }

    std::string summary() const {
        std::ostringstream os;
        if (failures == 0) {
            os << checks << " checks";
        } else {
            os << failures << "/" << checks << " checks failed: " << detail.str();
        }
        return os.str();
    }
};

std::vector<Scalar> family_samples(FieldMode mode) {
    std::vector<Scalar> ks = {Scalar(0), Scalar(1), Scalar(2)};
    if (mode == FieldMode::Complex) ks.push_back(Scalar(1, 1));
    return ks;
}

/// Every concrete catalog instance for a mode: fixed labels plus family
/// samples.
std::vector<Label> concrete_labels(FieldMode mode, int dim) {
    std::vector<Label> out;
    for (const Label& stub : catalog_list(mode, dim)) {
        if (!stub.is_family()) {
            out.push_back(stub);
            continue;
        }
        for (const Scalar& k : family_samples(mode)) {
            if (stub.family == Family::W3_3m && !k.is_real()) continue;
            out.push_back(Label::with_param(stub.family, k, mode));
        }
    }
    return out;
}

StructureTable table_of(const SelfTestOptions& opt, const Label& label, FieldMode mode) {
    if (opt.table_source) return opt.table_source(label, mode);
    return canonical_table(label, mode);
}

// Seeded sparse random table; entries in {-2..2}.
StructureTable random_table(SplitMix64& rng, FieldMode mode) {
    StructureTable t(3, mode);
    for (auto& c : t.c) {
        if (rng.below(4) != 0) continue;  // three quarters zero
        long v = rng.range(1, 2) * (rng.below(2) ? 1 : -1);
        c = Scalar(v);
    }
    return t;
}

// ---- criterion bodies ------------------------------------------------------

CriterionResult criterion1(const SelfTestOptions& opt) {
    CriterionResult r{1, "catalog associativity", false, "", 0};
    Checker ck;
    size_t complex3 = 0, real3 = 0;
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        for (int dim = 1; dim <= 3; ++dim) {
            size_t fixed = 0;
            for (const Label& label : concrete_labels(mode, dim)) {
                StructureTable t = table_of(opt, label, mode);
                ck.require(check_associativity(t).empty(),
                           label.to_string() + " is not associative");
                if (!label.is_family()) ++fixed;
            }
            if (dim == 3 && mode == FieldMode::Complex) complex3 = fixed;
            if (dim == 3 && mode == FieldMode::Real) real3 = fixed;
        }
    }
    ck.require(complex3 == 23, "expected 23 fixed complex labels in dimension 3");
    ck.require(real3 == 25, "expected 25 fixed real labels in dimension 3");
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

CriterionResult criterion2(const SelfTestOptions& opt) {
    CriterionResult r{2, "invariant tables reproduced exactly", false, "", 0};
    Checker ck;
    auto abg = [&](Family f, FieldMode mode, const Scalar* k = nullptr) {
        Label label = k ? Label::with_param(f, *k, mode) : Label::fixed(f);
        InvariantProfile p = invariant_profile(table_of(opt, label, mode));
        return std::array<int, 3>{p.alpha, p.beta, p.gamma};
    };
    // curled block
    ck.require(abg(Family::C3_0, FieldMode::Real)[0] == 0, "alpha(C3_0)");
    ck.require(abg(Family::C3_1, FieldMode::Real)[0] == 1, "alpha(C3_1)");
    for (Family f : {Family::C3_2, Family::C3_3, Family::C3_4})
        ck.require(abg(f, FieldMode::Real)[0] == 3, "alpha of " + family_name(f));
    ck.require((abg(Family::C3_2, FieldMode::Real) == std::array<int, 3>{3, 1, 1}), "C3_2");
    ck.require((abg(Family::C3_3, FieldMode::Real) == std::array<int, 3>{3, 2, 0}), "C3_3");
    ck.require((abg(Family::C3_4, FieldMode::Real) == std::array<int, 3>{3, 0, 2}), "C3_4");
    // waved block
    const std::pair<Family, std::array<int, 3>> waved[] = {
        {Family::W3_1, {1, 2, 2}},  {Family::W3_2, {1, 2, 2}}, {Family::W3_4, {1, 2, 2}},
        {Family::W3_5, {2, 2, 1}},  {Family::W3_6, {2, 1, 2}}, {Family::W3_7, {3, 1, 0}},
        {Family::W3_8, {3, 0, 1}},  {Family::W3_9, {3, 0, 1}}, {Family::W3_10, {3, 1, 0}},
    };
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex})
        for (const auto& [f, expected] : waved)
            ck.require(abg(f, mode) == expected,
                       family_name(f) + " over " + field_mode_name(mode));
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex})
        for (const Scalar& k : family_samples(mode)) {
            ck.require((abg(Family::W3_3, mode, &k) == std::array<int, 3>{1, 1, 1}),
                       "W3_3(" + scalar_to_string(k) + ")");
            if (mode == FieldMode::Real)
                ck.require((abg(Family::W3_3m, mode, &k) == std::array<int, 3>{1, 1, 1}),
                           "W3_3m(" + scalar_to_string(k) + ")");
        }
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

// Tables of the intermediate reduction forms, exactly as printed.
StructureTable fixture(int dim, FieldMode mode,
                       const std::vector<std::array<int, 4>>& entries) {
    StructureTable t(dim, mode);
    for (const auto& e : entries) t.at(e[0], e[1], e[2]) = Scalar(e[3]);
    return t;
}

Mat<ExtScalar> matrix3(std::initializer_list<long> vals) {
    Mat<ExtScalar> m(3, 3);
    auto it = vals.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = ExtScalar(*it++);
    return m;
}

CriterionResult criterion3(const SelfTestOptions& opt) {
    CriterionResult r{3, "printed transformation matrices verify", false, "", 0};
    Checker ck;
    auto cat = [&](Family f, FieldMode mode) { return table_of(opt, Label::fixed(f), mode); };
    FieldMode R = FieldMode::Real;

    // dimension 2: the four curled reductions
    {
        Mat<ExtScalar> swap2(2, 2);
        swap2.at(0, 1) = ExtScalar(1);
        swap2.at(1, 0) = ExtScalar(1);
        Mat<ExtScalar> shear(2, 2);
        shear.at(0, 0) = ExtScalar(1);
        shear.at(0, 1) = ExtScalar(1);
        shear.at(1, 1) = ExtScalar(1);
        StructureTable a2_1 = cat(Family::A2_1, R), a2_2 = cat(Family::A2_2, R);
        StructureTable a2_4p = fixture(2, R, {{0, 0, 0, 1}, {0, 1, 1, 1}});              // e^2=e, ef=f
        StructureTable a2_3p = fixture(2, R, {{0, 0, 0, 1}, {1, 0, 1, 1}});              // e^2=e, fe=f
        StructureTable a2_5p =
            fixture(2, R, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}});     // rows e f / e f
        StructureTable a2_6p =
            fixture(2, R, {{0, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}});     // rows e e / f f
        ck.require(verify_witness(a2_1, a2_4p, Witness(swap2)), "A2_1 -> A'2_4 swap");
        ck.require(verify_witness(a2_4p, a2_1, Witness(swap2)), "A'2_4 -> A2_1 swap");
        ck.require(verify_witness(a2_2, a2_3p, Witness(swap2)), "A2_2 -> A'2_3 swap");
        ck.require(verify_witness(a2_3p, a2_2, Witness(swap2)), "A'2_3 -> A2_2 swap");
        ck.require(verify_witness(a2_5p, a2_1, Witness(shear)), "A'2_5 -> A2_1 shear");
        ck.require(verify_witness(a2_6p, a2_2, Witness(shear)), "A'2_6 -> A2_2 shear");
    }

    // dimension 3, curled case reductions
    {
        StructureTable c3_2 = cat(Family::C3_2, R), c3_3 = cat(Family::C3_3, R);
        struct Fix {
            StructureTable src;
            const StructureTable* dst;
            Mat<ExtScalar> m;
            const char* name;
        };
        std::vector<Fix> fixes;
        fixes.push_back({fixture(3, R, {{1, 2, 1, 1}, {2, 0, 0, 1}, {2, 2, 2, 1}}), &c3_2,
                         matrix3({1, 0, 0, 0, 0, 1, 0, 1, 0}), "plane-zero second"});
        fixes.push_back({fixture(3, R, {{0, 2, 0, 1}, {2, 1, 1, 1}, {2, 2, 2, 1}}), &c3_2,
                         matrix3({0, 0, 1, 1, 0, 0, 0, 1, 0}), "plane-zero third"});
        fixes.push_back({fixture(3, R, {{1, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}}), &c3_3,
                         matrix3({1, 0, 0, 0, 0, 1, 0, 1, 0}), "plane-A2_1 k=0 second"});
        fixes.push_back(
            {fixture(3, R, {{1, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 0, 1}, {2, 1, 1, 1}, {2, 2, 2, 1}}),
             &c3_3, matrix3({1, 0, 0, 0, -1, 1, 0, 0, 1}), "plane-A2_1 k=1 first"});
        fixes.push_back(
            {fixture(3, R, {{1, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 1, 1}, {2, 0, 0, 1}, {2, 1, 2, 1}, {2, 2, 2, 1}}),
             &c3_2, matrix3({1, 0, 0, 0, 1, 0, 0, 1, -1}), "plane-A2_1 k=1 second"});
        fixes.push_back({fixture(3, R, {{0, 1, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}}), &c3_2,
                         matrix3({0, 0, 1, 0, 1, 0, 1, 0, 0}), "plane-A2_2 first"});
        fixes.push_back(
            {fixture(3, R, {{0, 1, 0, 1}, {0, 2, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 1, 1}, {2, 2, 2, 1}}),
             &c3_2, matrix3({0, 0, 1, 0, 1, 0, -1, 1, 0}), "plane-A2_2 last"});
        for (const auto& f : fixes)
            ck.require(verify_witness(f.src, *f.dst, Witness(f.m)),
                       std::string("curled fixture: ") + f.name);
    }

    // family sign change and the real-to-complex identification
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        for (const Scalar& k : family_samples(mode)) {
            StructureTable pos = table_of(opt, Label::with_param(Family::W3_3, k, mode), mode);
            StructureTable neg =
                canonical_table(Label::with_param_squared(Family::W3_3, k * k, ExtScalar(-k)), mode);
            Mat<ExtScalar> m = matrix3({1, 0, 0, 0, 1, 0, 0, 0, -1});
            ck.require(verify_witness(pos, neg, Witness(m)),
                       "diag(1,1,-1) on W3_3(" + scalar_to_string(k) + ") over " +
                           field_mode_name(mode));
        }
    }
    for (const Scalar& k : family_samples(FieldMode::Real)) {
        StructureTable wm = table_of(opt, Label::with_param(Family::W3_3m, k, FieldMode::Real),
                                     FieldMode::Real);
        wm.mode = FieldMode::Complex;  // same constants viewed over C
        Scalar ik = k * Scalar(0, 1);
        StructureTable target =
            canonical_table(Label::with_param_squared(Family::W3_3, ik * ik, ExtScalar(ik)),
                            FieldMode::Complex);
        Mat<ExtScalar> m = matrix3({1, 0, 0, 0, 1, 0, 0, 0, 0});
        m.at(2, 2) = ExtScalar(Scalar(0, -1));
        ck.require(verify_witness(wm, target, Witness(m)),
                   "diag(1,1,-i) on W3_3m(" + scalar_to_string(k) + ")");
    }
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

CriterionResult criterion4(const SelfTestOptions&) {
    CriterionResult r{4, "curled two-dimensional enumeration", false, "", 0};
    Checker ck;
    auto got = enumerate_curled2();
    std::vector<std::array<int, 6>> expected = {
        {0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 1},
        {1, 0, 0, 1, 0, 0}, {1, 1, 0, 1, 1, 0}, {1, 1, 1, 0, 0, 1},
    };
    ck.require(got.size() == 7, "expected 7 solutions, got " + std::to_string(got.size()));
    auto sorted_got = got;
    auto sorted_exp = expected;
    std::sort(sorted_got.begin(), sorted_got.end());
    std::sort(sorted_exp.begin(), sorted_exp.end());
    ck.require(sorted_got == sorted_exp, "solution sets differ");
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

CriterionResult criterion5(const SelfTestOptions& opt) {
    CriterionResult r{5, "classification round-trip under 100 scrambles", false, "", 0};
    Checker ck;
    int instances = 0;
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex}) {
        for (int dim = 1; dim <= 3; ++dim) {
            for (const Label& label : concrete_labels(mode, dim)) {
                StructureTable t = table_of(opt, label, mode);
                ++instances;
                for (uint64_t seed = 1; seed <= 100; ++seed) {
                    ScrambleResult s = scramble(t, seed * 1009 + static_cast<uint64_t>(dim));
                    ClassifyResult c = classify(s.table);
                    if (!(c.label == label)) {
                        ck.require(false, label.to_string() + " seed " + std::to_string(seed) +
                                              " came back as " + c.label.to_string());
                        break;
                    }
                    ++ck.checks;
                }
            }
        }
    }
    r.passed = ck.failures == 0;
    std::ostringstream os;
    os << instances << " labels x 100 scrambles";
    if (ck.failures) os << "; " << ck.summary();
    r.detail = os.str();
    return r;
}

CriterionResult criterion6(const SelfTestOptions& opt) {
    CriterionResult r{6, "family parameter recovery", false, "", 0};
    Checker ck;
    SplitMix64 rng(20260810);
    std::vector<Scalar> ks;
    std::vector<Label> labels;
    for (int i = 0; i < 50; ++i) {
        Rational k(rng.range(-10, 10), rng.range(1, 10));
        k.canonicalize();
        ks.push_back(Scalar(k));
    }
    for (size_t i = 0; i < ks.size(); ++i) {
        Label label = Label::with_param(Family::W3_3, ks[i], FieldMode::Real);
        StructureTable t = table_of(opt, label, FieldMode::Real);
        ScrambleResult s = scramble(t, 4242 + i);
        ClassifyResult c = classify(s.table);
        ck.require(c.label == label, "k = " + scalar_to_string(ks[i]) + " not recovered");
        ck.require(c.label.k_squared && *c.label.k_squared == ks[i] * ks[i],
                   "k^2 mismatch at k = " + scalar_to_string(ks[i]));
        labels.push_back(c.label);
    }
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j) {
            bool same_param = ks[i] * ks[i] == ks[j] * ks[j];
            ck.require((labels[i] == labels[j]) == same_param,
                       "parameter separation failed for ks " + scalar_to_string(ks[i]) + ", " +
                           scalar_to_string(ks[j]));
        }
    // spot-check the full isomorphism path on a few pairs
    for (size_t i = 0; i + 1 < 6; i += 2) {
        StructureTable a = table_of(opt, Label::with_param(Family::W3_3, ks[i], FieldMode::Real),
                                    FieldMode::Real);
        StructureTable b =
            table_of(opt, Label::with_param(Family::W3_3, ks[i + 1], FieldMode::Real),
                     FieldMode::Real);
        IsoResult iso = are_isomorphic(a, b);
        bool same_param = ks[i] * ks[i] == ks[i + 1] * ks[i + 1];
        ck.require(iso.isomorphic == same_param, "are_isomorphic disagrees with the parameter");
    }
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

CriterionResult criterion7(const SelfTestOptions& opt) {
    CriterionResult r{7, "real/complex family split", false, "", 0};
    Checker ck;
    std::vector<Scalar> ks = {Scalar(0), Scalar(1), Scalar(2), Scalar(Rational(5, 2))};
    for (const Scalar& k : ks)
        for (const Scalar& k2 : ks) {
            StructureTable a = table_of(opt, Label::with_param(Family::W3_3, k, FieldMode::Real),
                                        FieldMode::Real);
            StructureTable b = table_of(opt, Label::with_param(Family::W3_3m, k2, FieldMode::Real),
                                        FieldMode::Real);
            IsoResult iso = are_isomorphic(a, b);
            ck.require(!iso.isomorphic && !iso.separator.empty() &&
                           iso.separator != "canonical_label",
                       "W3_3(" + scalar_to_string(k) + ") vs W3_3m(" + scalar_to_string(k2) +
                           ") not separated");
            // the det(Q) sign splits the two families regardless of k
            WavedParameter wa = waved_parameter(a), wb = waved_parameter(b);
            ck.require(wa.detq_sign_real && *wa.detq_sign_real > 0 && wb.detq_sign_real &&
                           *wb.detq_sign_real < 0,
                       "det(Q) signs fail to separate at k = " + scalar_to_string(k) + ", k' = " +
                           scalar_to_string(k2));
        }
    for (const Scalar& k : ks) {
        StructureTable wm = table_of(opt, Label::with_param(Family::W3_3m, k, FieldMode::Real),
                                     FieldMode::Real);
        wm.mode = FieldMode::Complex;
        ClassifyResult c = classify(wm);
        ck.require(c.label.family == Family::W3_3, "retagged table left the W3_3 family");
        ck.require(c.label.k_squared && *c.label.k_squared == -(k * k),
                   "retagged k^2 != -k^2 for k = " + scalar_to_string(k));
    }
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

// Frozen oracle outputs; discovered once by running the exhaustive scan and
// pinned here as regression values.
struct OracleExpectation {
    Family a, b;
    int prime;
    const char* result;  // "none" or FFMatrix::to_string()
};

const OracleExpectation kOracleExpectations[] = {
    {Family::W3_7, Family::W3_10, 3, "none"},
    {Family::W3_7, Family::W3_10, 5, "none"},
    {Family::W3_8, Family::W3_9, 3, "none"},
    {Family::W3_8, Family::W3_9, 5, "none"},
    {Family::W3_1, Family::W3_4, 3, "none"},
    {Family::W3_1, Family::W3_4, 5, "none"},
    {Family::A2_1, Family::A2_2, 3, "none"},
    {Family::A2_1, Family::A2_2, 5, "none"},
};

CriterionResult criterion8(const SelfTestOptions& opt) {
    CriterionResult r{8, "pairwise non-isomorphism and oracle regression", false, "", 0};
    Checker ck;
    for (FieldMode mode : {FieldMode::Real, FieldMode::Complex})
        for (int dim = 1; dim <= 3; ++dim) {
            std::vector<Label> fixed;
            for (const Label& l : catalog_list(mode, dim))
                if (!l.is_family()) fixed.push_back(l);
            std::vector<ClassifyResult> results;
            for (const Label& l : fixed) results.push_back(classify(table_of(opt, l, mode)));
            for (size_t i = 0; i < fixed.size(); ++i) {
                ck.require(results[i].label == fixed[i],
                           family_name(fixed[i].family) + " does not classify to itself");
                for (size_t j = i + 1; j < fixed.size(); ++j) {
                    ck.require(!(results[i].label == results[j].label),
                               family_name(fixed[i].family) + " vs " +
                                   family_name(fixed[j].family) + " labels collide");
                    std::string sep = separating_invariant(results[i], results[j]);
                    ck.require(!sep.empty() && sep != "canonical_label",
                               family_name(fixed[i].family) + " vs " +
                                   family_name(fixed[j].family) + " lacks a separator");
                }
            }
        }
    for (const auto& e : kOracleExpectations) {
        FieldMode mode = FieldMode::Real;
        StructureTable a = table_of(opt, Label::fixed(e.a), mode);
        StructureTable b = table_of(opt, Label::fixed(e.b), mode);
        auto m = ff_oracle(a, b, e.prime);
        std::string got = m ? m->to_string() : "none";
        ck.require(got == e.result, family_name(e.a) + " vs " + family_name(e.b) + " GF(" +
                                        std::to_string(e.prime) + "): discovered \"" + got +
                                        "\", frozen \"" + e.result + "\"");
    }
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

CriterionResult criterion9(const SelfTestOptions&) {
    CriterionResult r{9, "dispatch on random associative tables", false, "", 0};
    Checker ck;
    SplitMix64 rng(0xabcdef1234567890ULL);
    int found = 0;
    long attempts = 0;
    while (found < 1000 && attempts < 4000000) {
        ++attempts;
        StructureTable t = random_table(rng, rng.below(2) ? FieldMode::Real : FieldMode::Complex);
        if (!check_associativity(t).empty()) continue;
        ++found;
        try {
            ClassifyResult c1 = classify(t);
            ScrambleResult s = scramble(t, 77000 + static_cast<uint64_t>(found));
            ClassifyResult c2 = classify(s.table);
            ck.require(c1.label == c2.label,
                       "label instability at sample " + std::to_string(found) + ": " +
                           c1.label.to_string() + " vs " + c2.label.to_string());
        } catch (const Error& err) {
            ck.require(false,
                       "classification error at sample " + std::to_string(found) + ": " + err.what());
        }
    }
    ck.require(found == 1000, "only " + std::to_string(found) + " associative samples found");
    r.passed = ck.failures == 0;
    std::ostringstream os;
    os << found << " associative tables from " << attempts << " draws";
    if (ck.failures) os << "; " << ck.summary();
    r.detail = os.str();
    return r;
}

CriterionResult criterion10(const SelfTestOptions&) {
    CriterionResult r{10, "zeropotent characterization", false, "", 0};
    Checker ck;
    SplitMix64 rng(0x5eedc0de5eedc0deULL);
    for (int n = 0; n < 1000; ++n) {
        StructureTable t = random_table(rng, FieldMode::Real);
        bool zp = is_zeropotent(t);
        // alternative-matrix condition, written out independently
        bool alt = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int s = 0; s < 3; ++s)
                    if (t.at(i, j, s) != -t.at(j, i, s)) alt = false;
        ck.require(zp == alt, "alternative-matrix condition disagrees at sample " +
                                  std::to_string(n));
        // squares vanish on sampled elements plus the deterministic witnesses
        std::vector<Element> samples;
        for (int m = 0; m < 100; ++m) {
            Element x(3);
            for (auto& v : x) v = Scalar(rng.range(-5, 5));
            samples.push_back(std::move(x));
        }
        for (int i = 0; i < 3; ++i) {
            samples.push_back(unit_vector(3, i));
            for (int j = i + 1; j < 3; ++j) {
                Element x = unit_vector(3, i);
                x[static_cast<size_t>(j)] = Scalar(1);
                samples.push_back(std::move(x));
            }
        }
        bool all_zero = true;
        for (const Element& x : samples) {
            Element sq = multiply(t, x, x);
            for (const Scalar& v : sq)
                if (!v.is_zero()) all_zero = false;
        }
        ck.require(zp == all_zero,
                   "sampled squares disagree with is_zeropotent at sample " + std::to_string(n));
    }
    r.passed = ck.failures == 0;
    r.detail = ck.summary();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelfTestOptions& opt) {
    std::vector<CriterionResult> out;
    auto run = [&](CriterionResult (*fn)(const SelfTestOptions&)) {
        auto start = Clock::now();
        CriterionResult r = fn(opt);
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        out.push_back(std::move(r));
    };
    run(criterion1);
    run(criterion2);
    run(criterion3);
    run(criterion4);
    if (!opt.full) return out;
    run(criterion5);
    run(criterion6);
    run(criterion7);
    run(criterion8);
    run(criterion9);
    run(criterion10);
    // runtime budgets
    for (auto& r : out) {
        if (r.id == 1 && r.seconds >= 1.0) {
            r.passed = false;
            r.detail += "; over the 1 s budget";
        }
        if (r.id == 2 && r.seconds >= 1.0) {
            r.passed = false;
            r.detail += "; over the 1 s budget";
        }
        if (r.id == 5 && r.seconds >= 60.0) {
            r.passed = false;
            r.detail += "; over the 60 s budget";
        }
        if (r.id == 8 && r.seconds >= 300.0) {
            r.passed = false;
            r.detail += "; over the 300 s budget";
        }
    }
    return out;
}

}  // namespace alg3
