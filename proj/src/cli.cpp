#include "alg3/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "alg3/classify.hpp"
#include "alg3/io.hpp"
#include "alg3/iso.hpp"
#include "alg3/selftest.hpp"

namespace alg3::cli {

namespace {

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_profile(std::ostream& out, const InvariantProfile& p) {
    out << "profile: " << p.to_string() << "\n";
}

void print_witness(std::ostream& out, const Mat<ExtScalar>& m) {
    out << "witness:\n";
    for (int i = 0; i < m.rows; ++i) {
        out << "  [";
        for (int j = 0; j < m.cols; ++j) out << (j ? ", " : "") << m.at(i, j).to_string();
        out << "]\n";
    }
}

void print_trace(std::ostream& out, const ClassifyResult& r) {
    out << "trace:\n";
    for (const auto& s : r.trace) {
        out << "  " << s.case_id;
        for (const auto& [name, value] : s.bound) out << " " << name << "=" << value;
        out << "\n";
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

int usage_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return 2;
}

}  // namespace

namespace {

int verify_one(const StructureTable& t, const std::string& tag, std::ostream& out) {
    auto bad = check_associativity(t);
    if (bad.empty()) {
        out << tag << "associative: yes\n";
        return 0;
    }
    out << tag << "associative: no\n";
    for (const auto& v : bad)
        out << tag << "violation: (" << v[0] + 1 << "," << v[1] + 1 << "," << v[2] + 1 << ")\n";
    return 1;
}

}  // namespace

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    // Directory: verify every .json file inside.
    if (path != "-" && std::filesystem::is_directory(path)) {
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(path))
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) return usage_error(err, "no .json files in " + path);
        int rc = 0;
        for (const auto& f : files) rc = std::max(rc, cmd_verify(f, out, err));
        return rc;
    }
    std::string text;
    try {
        text = read_source(path);
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    // Catalog exports carry an entries array; verify each member table.
    try {
        auto docs = extract_documents(text);
        int rc = 0;
        for (const auto& [tag, t] : docs) rc = std::max(rc, verify_one(t, tag, out));
        return rc;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_classify(const std::string& path, bool with_witness, bool with_trace, std::ostream& out,
                 std::ostream& err) {
    StructureTable t;
    try {
        t = parse_table_document(read_source(path));
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    Timer timer;
    auto bad = check_associativity(t);
    if (!bad.empty()) {
        out << "associative: no\n";
        for (const auto& v : bad)
            out << "violation: (" << v[0] + 1 << "," << v[1] + 1 << "," << v[2] + 1 << ")\n";
        return 1;
    }
    ClassifyResult r;
    try {
        r = classify(t);
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    out << "label: " << r.label.to_string() << "\n";
    print_profile(out, r.profile);
    if (with_witness) {
        if (r.witness)
            print_witness(out, *r.witness);
        else
            out << "witness: omitted (" << witness_status_name(r.witness_status) << ")\n";
    }
    if (with_trace) print_trace(out, r);
    out << "time: " << timer.ms() << " ms\n";
    return 0;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, std::optional<int> oracle_prime,
            std::ostream& out, std::ostream& err) {
    StructureTable a, b;
    try {
        a = parse_table_document(read_source(path_a));
        b = parse_table_document(read_source(path_b));
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    Timer timer;
    IsoResult r;
    try {
        r = are_isomorphic(a, b);
    } catch (const NonAssociative& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DimensionMismatch& e) {
        return usage_error(err, e.what());
    } catch (const ModeMismatch& e) {
        return usage_error(err, e.what());
    }
    if (r.isomorphic) {
        out << "isomorphic: yes\n";
        out << "label: " << r.left.label.to_string() << "\n";
        if (r.witness)
            print_witness(out, r.witness->matrix);
        else
            out << "witness: omitted\n";
    } else {
        out << "isomorphic: no\n";
        out << "separator: " << r.separator << "\n";
        out << "labels: " << r.left.label.to_string() << " vs " << r.right.label.to_string()
            << "\n";
    }
    if (oracle_prime) {
        try {
            auto m = ff_oracle(a, b, *oracle_prime);
            out << "oracle GF(" << *oracle_prime << "): " << (m ? m->to_string() : "none") << "\n";
        } catch (const BadPrime& e) {
            return usage_error(err, e.what());
        }
    }
    out << "time: " << timer.ms() << " ms\n";
    return r.isomorphic ? 0 : 1;
}

int cmd_catalog_list(FieldMode mode, std::optional<int> dim, std::ostream& out, std::ostream&) {
    for (int d = 1; d <= 3; ++d) {
        if (dim && *dim != d) continue;
        for (const Label& label : catalog_list(mode, d)) {
            InvariantProfile p = expected_invariants(label, mode);
            out << (label.is_family() ? family_name(label.family) + "(k) family"
                                      : family_name(label.family))
                << "  dim=" << d << "  " << p.to_string() << "\n";
        }
    }
    return 0;
}

int cmd_catalog_show(const std::string& label_name, FieldMode mode,
                     const std::optional<std::string>& k_text, std::ostream& out,
                     std::ostream& err) {
    auto fam = family_parse(label_name);
    if (!fam) return usage_error(err, "unknown label " + label_name);
    Label label = Label::fixed(*fam);
    if (family_parameterized(*fam)) {
        if (!k_text) return usage_error(err, label_name + " needs --k");
        auto k = scalar_parse(*k_text);
        if (!k) return usage_error(err, "bad scalar for --k: " + *k_text);
        label = Label::with_param(*fam, *k, mode);
    } else if (k_text) {
        return usage_error(err, label_name + " takes no parameter");
    }
    try {
        StructureTable t = canonical_table(label, mode);
        out << serialize_table_document(t);
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    return 0;
}

int cmd_catalog_export(const std::string& out_path, FieldMode mode, std::optional<int> dim,
                       std::ostream& out, std::ostream& err) {
    std::string text = serialize_catalog(mode, dim);
    if (out_path == "-") {
        out << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) return usage_error(err, "cannot write " + out_path);
    f << text;
    out << "wrote " << out_path << "\n";
    return 0;
}

int cmd_scramble(const std::string& label_or_path, uint64_t seed,
                 const std::optional<std::string>& k_text, FieldMode mode, std::ostream& out,
                 std::ostream& err) {
    StructureTable t;
    auto fam = family_parse(label_or_path);
    try {
        if (fam) {
            Label label = Label::fixed(*fam);
            if (family_parameterized(*fam)) {
                if (!k_text) return usage_error(err, label_or_path + " needs --k");
                auto k = scalar_parse(*k_text);
                if (!k) return usage_error(err, "bad scalar for --k: " + *k_text);
                label = Label::with_param(*fam, *k, mode);
            }
            t = canonical_table(label, mode);
        } else {
            t = parse_table_document(read_source(label_or_path));
        }
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    ScrambleResult s = scramble(t, seed);
    out << serialize_table_document(s.table);
    err << "matrix:\n";
    for (int i = 0; i < s.matrix.rows; ++i) {
        err << "  [";
        for (int j = 0; j < s.matrix.cols; ++j)
            err << (j ? ", " : "") << scalar_to_string(s.matrix.at(i, j));
        err << "]\n";
    }
    return 0;
}

int cmd_selftest(bool full, std::ostream& out, std::ostream&) {
    SelfTestOptions opt;
    opt.full = full;
    auto results = run_selftest(opt);
    bool all = true;
    for (const auto& r : results) {
        out << "criterion " << r.id << " [" << (r.passed ? "pass" : "FAIL") << "] " << r.name
            << " (" << r.seconds << " s): " << r.detail << "\n";
        all = all && r.passed;
    }
    out << (all ? "selftest: pass" : "selftest: FAIL") << "\n";
    return all ? 0 : 1;
}

}  // namespace alg3::cli
