#include <CLI11.hpp>
#include <iostream>

#include "alg3/cli.hpp"

using namespace alg3;

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of associative algebras of dimension 1-3"};
    app.require_subcommand(1);

    std::string path, path_a, path_b, label, out_path = "-";
    std::string field = "real";
    std::string k_text;
    bool with_witness = false, with_trace = false, full = false;
    int dim = 0;
    int oracle = 0;
    uint64_t seed = 1;

    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", field, "coefficient field: real or complex")
            ->check(CLI::IsMember({"real", "complex"}));
    };
    auto mode = [&]() { return field == "real" ? FieldMode::Real : FieldMode::Complex; };

    auto* verify = app.add_subcommand("verify", "check a table document for associativity");
    verify->add_option("path", path, "table document (- for stdin)")->required();

    auto* classify = app.add_subcommand("classify", "classify a table document");
    classify->add_option("path", path, "table document (- for stdin)")->required();
    classify->add_flag("--witness", with_witness, "print the basis-change witness");
    classify->add_flag("--trace", with_trace, "print the case trace");

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two table documents");
    iso->add_option("path_a", path_a, "first document")->required();
    iso->add_option("path_b", path_b, "second document")->required();
    iso->add_option("--oracle", oracle, "also run the GF(p) brute-force oracle");

    auto* catalog = app.add_subcommand("catalog", "canonical catalog access");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list catalog labels with profiles");
    add_field(cat_list);
    cat_list->add_option("--dim", dim, "restrict to one dimension")->check(CLI::Range(1, 3));
    auto* cat_show = catalog->add_subcommand("show", "print one canonical table document");
    cat_show->add_option("label", label, "catalog label, e.g. W3_3 or S3_3m")->required();
    add_field(cat_show);
    cat_show->add_option("--k", k_text, "family parameter (scalar string)");
    auto* cat_export = catalog->add_subcommand("export", "write the whole catalog as JSON");
    cat_export->add_option("path", out_path, "output file (- for stdout)");
    add_field(cat_export);
    cat_export->add_option("--dim", dim, "restrict to one dimension")->check(CLI::Range(1, 3));

    auto* scramble = app.add_subcommand("scramble", "unimodular random basis change");
    scramble->add_option("source", label, "catalog label or document path")->required();
    scramble->add_option("--seed", seed, "scramble seed");
    scramble->add_option("--k", k_text, "family parameter for family labels");
    add_field(scramble);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    std::string level = "quick";
    selftest->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cli::cmd_verify(path, std::cout, std::cerr);
        if (classify->parsed())
            return cli::cmd_classify(path, with_witness, with_trace, std::cout, std::cerr);
        if (iso->parsed())
            return cli::cmd_iso(path_a, path_b,
                                oracle ? std::optional<int>(oracle) : std::nullopt, std::cout,
                                std::cerr);
        if (catalog->parsed()) {
            if (cat_list->parsed())
                return cli::cmd_catalog_list(mode(), dim ? std::optional<int>(dim) : std::nullopt,
                                             std::cout, std::cerr);
            if (cat_show->parsed())
                return cli::cmd_catalog_show(
                    label, mode(), k_text.empty() ? std::nullopt : std::optional(k_text),
                    std::cout, std::cerr);
            if (cat_export->parsed())
                return cli::cmd_catalog_export(out_path, mode(),
                                               dim ? std::optional<int>(dim) : std::nullopt,
                                               std::cout, std::cerr);
        }
        if (scramble->parsed())
            return cli::cmd_scramble(label, seed,
                                     k_text.empty() ? std::nullopt : std::optional(k_text),
                                     mode(), std::cout, std::cerr);
        if (selftest->parsed()) return cli::cmd_selftest(level == "full", std::cout, std::cerr);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
