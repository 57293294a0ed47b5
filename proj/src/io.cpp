#include "alg3/io.hpp"

#include <json.hpp>

#include "alg3/invariants.hpp"

namespace alg3 {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kDefaultNames = {"e", "f", "g"};

Scalar parse_scalar_or_throw(const std::string& text, const std::string& where) {
    auto s = scalar_parse(text);
    if (!s) throw ParseError("bad scalar \"" + text + "\" at " + where);
    return *s;
}

}  // namespace

StructureTable parse_table_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (!doc.contains("format") || !doc["format"].is_number_integer() || doc["format"] != 1)
        throw ParseError("missing or unsupported \"format\" (expected 1)");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("missing integer \"dim\"");
    int dim = doc["dim"].get<int>();
    if (dim < 1 || dim > 3) throw ParseError("\"dim\" must be 1, 2 or 3");
    if (!doc.contains("field") || !doc["field"].is_string())
        throw ParseError("missing string \"field\"");
    std::string field = doc["field"].get<std::string>();
    FieldMode mode;
    if (field == "real")
        mode = FieldMode::Real;
    else if (field == "complex")
        mode = FieldMode::Complex;
    else
        throw ParseError("\"field\" must be \"real\" or \"complex\"");
    if (!doc.contains("table") || !doc["table"].is_array() ||
        doc["table"].size() != static_cast<size_t>(dim))
        throw ParseError("\"table\" must be a dim x dim array of coordinate rows");
    StructureTable t(dim, mode);
    for (int i = 0; i < dim; ++i) {
        const json& row = doc["table"][static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(dim))
            throw ParseError("table row " + std::to_string(i + 1) + " has the wrong length");
        for (int j = 0; j < dim; ++j) {
            const json& cell = row[static_cast<size_t>(j)];
            if (!cell.is_array() || cell.size() != static_cast<size_t>(dim))
                throw ParseError("table cell (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") must list dim coordinates");
            for (int s = 0; s < dim; ++s) {
                const json& v = cell[static_cast<size_t>(s)];
                if (!v.is_string())
                    throw ParseError("coordinates are scalar strings; cell (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                t.at(i, j, s) = parse_scalar_or_throw(
                    v.get<std::string>(), "cell (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ")");
            }
        }
    }
    if (mode == FieldMode::Real && !t.all_real())
        throw ParseError("real document with non-real scalar entries");
    return t;
}

std::string serialize_table_document(const StructureTable& t,
                                     const std::vector<std::string>& basis_names) {
    json doc;
    doc["format"] = 1;
    doc["dim"] = t.dim;
    doc["field"] = field_mode_name(t.mode);
    json basis = json::array();
    for (int i = 0; i < t.dim; ++i)
        basis.push_back(static_cast<size_t>(i) < basis_names.size()
                            ? basis_names[static_cast<size_t>(i)]
                            : kDefaultNames[static_cast<size_t>(i)]);
    doc["basis"] = basis;
    json table = json::array();
    for (int i = 0; i < t.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < t.dim; ++j) {
            json cell = json::array();
            for (int s = 0; s < t.dim; ++s) cell.push_back(scalar_to_string(t.at(i, j, s)));
            row.push_back(cell);
        }
        table.push_back(row);
    }
    doc["table"] = table;
    return doc.dump(2) + "\n";
}

namespace {

json profile_json(const InvariantProfile& p) {
    json j;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["gamma"] = p.gamma;
    j["commutative"] = p.commutative;
    j["unital"] = p.unital;
    j["shape"] = shape_name(p.shape);
    j["zeropotent"] = p.zeropotent;
    j["square_of_square_zero"] = p.square_of_square_zero;
    j["zeropotent_plane"] = p.zeropotent_plane;
    return j;
}

}  // namespace

std::vector<std::pair<std::string, StructureTable>> extract_documents(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<std::pair<std::string, StructureTable>> out;
    if (doc.is_object() && doc.contains("entries") && doc["entries"].is_array()) {
        for (const auto& entry : doc["entries"]) {
            if (!entry.is_object() || !entry.contains("document"))
                throw ParseError("catalog entry without a document");
            std::string tag = entry.contains("label") && entry["label"].is_string()
                                  ? entry["label"].get<std::string>()
                                  : "entry";
            if (entry.contains("k") && entry["k"].is_string())
                tag += "(" + entry["k"].get<std::string>() + ")";
            out.emplace_back(tag + ": ", parse_table_document(entry["document"].dump()));
        }
        return out;
    }
    out.emplace_back("", parse_table_document(text));
    return out;
}

std::string serialize_catalog(FieldMode mode, std::optional<int> dim_filter) {
    json doc;
    doc["format"] = 1;
    doc["field"] = field_mode_name(mode);
    json entries = json::array();
    std::vector<Scalar> samples = {Scalar(0), Scalar(1), Scalar(2)};
    if (mode == FieldMode::Complex) samples.push_back(Scalar(1, 1));
    for (int dim = 1; dim <= 3; ++dim) {
        if (dim_filter && *dim_filter != dim) continue;
        for (const Label& stub : catalog_list(mode, dim)) {
            std::vector<Label> concrete;
            if (stub.is_family()) {
                for (const Scalar& k : samples)
                    concrete.push_back(Label::with_param(stub.family, k, mode));
            } else {
                concrete.push_back(stub);
            }
            for (const Label& label : concrete) {
                json e;
                e["label"] = family_name(label.family);
                if (label.is_family()) e["k"] = scalar_to_string(label.k->as_scalar());
                StructureTable t = canonical_table(label, mode);
                InvariantProfile p = invariant_profile(t);
                e["document"] = json::parse(serialize_table_document(t));
                e["profile"] = profile_json(p);
                CatalogMetadata m = catalog_metadata(label.family);
                json meta;
                meta["commutative"] = p.commutative;
                meta["unital"] = p.unital;
                meta["zeropotent"] = p.zeropotent;
                meta["indecomposable"] = m.indecomposable;
                e["metadata"] = meta;
                entries.push_back(e);
            }
        }
    }
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

}  // namespace alg3
