// Command-line front end: JSON in, JSON out, with a small catalog of named
// seeds.  Exit codes: 0 success, 1 domain error, 2 malformed input JSON.
// Simple-root indices are 1-based on the command line and in all output.

#include "rootarr/catalog.hpp"
#include "rootarr/cellcomplex.hpp"
#include "rootarr/groupoid.hpp"
#include "rootarr/json_io.hpp"
#include "rootarr/nichols.hpp"
#include "rootarr/restriction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace rootarr;

struct CommonOpts {
    std::string input_path;    // positional; empty or "-" means stdin
    std::string output_path;   // --output; empty means stdout
    std::string seed_catalog;  // --seed-catalog; named seed instead of input JSON
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_catalog = true) {
    sub->add_option("input", o.input_path, "input JSON file (default: stdin)");
    sub->add_option("-o,--output", o.output_path, "write output JSON here instead of stdout");
    if (with_catalog)
        sub->add_option("--seed-catalog", o.seed_catalog,
                        "named seed (root system like B3, or braiding like cycle_rank3)");
}

ojson read_input(const CommonOpts& o) {
    if (o.input_path.empty() || o.input_path == "-") return ojson::parse(std::cin);
    std::ifstream in(o.input_path);
    if (!in) throw std::domain_error("cannot open input file: " + o.input_path);
    return ojson::parse(in);
}

void emit(const ojson& j, const CommonOpts& o) {
    const std::string text = j.dump(2) + "\n";
    if (o.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output_path);
    if (!out) throw std::domain_error("cannot open output file: " + o.output_path);
    out << text;
}

// A catalog name denotes either a classical root system or a named braiding
// (whose root set is the seed object of its braided closure).
RootSet seed_roots_from_catalog(const std::string& name) {
    try {
        return classical(name);
    } catch (const std::domain_error& e) {
        if (std::string(e.what()).find("unknown type") == std::string::npos) throw;
    }
    BraidingMatrix b;
    try {
        b = named_braiding(name);
    } catch (const std::domain_error&) {
        throw std::domain_error("unknown catalog entry: " + name);
    }
    return enumerate_braided(b).objects[0].roots;
}

RootSet load_root_set(const CommonOpts& o) {
    if (!o.seed_catalog.empty()) return seed_roots_from_catalog(o.seed_catalog);
    return rootset_from_json(read_input(o));
}

BraidingMatrix load_braiding(const CommonOpts& o) {
    if (!o.seed_catalog.empty()) return named_braiding(o.seed_catalog);
    return braiding_from_json(read_input(o));
}

// "1,3" -> {0, 2}; used for index sets and permutations alike.
std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::domain_error("invalid index list: " + text);
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size() || value < 1)
            throw std::domain_error("invalid index list: " + text);
        out.push_back(value - 1);
    }
    if (out.empty()) throw std::domain_error("invalid index list: " + text);
    return out;
}

IntMat matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open matrix file: " + path);
    return intmat_from_json(ojson::parse(in));
}

// --braiding accepts a catalog braiding name or a JSON file path.
BraidingMatrix braiding_from_name_or_file(const std::string& value) {
    try {
        return named_braiding(value);
    } catch (const std::domain_error&) {
    }
    std::ifstream in(value);
    if (!in) throw std::domain_error("unknown braiding name or unreadable file: " + value);
    return braiding_from_json(ojson::parse(in));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with crystallographic root arrangements"};
    app.require_subcommand(1);

    CommonOpts cartan_opts;
    CLI::App* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix of a root set");
    add_common(cartan_cmd, cartan_opts);
    cartan_cmd->callback([&] {
        const RootSet r = load_root_set(cartan_opts);
        emit(to_json(cartan_from_roots(r)), cartan_opts);
    });

    CommonOpts enum_opts;
    std::string enum_dot;
    std::size_t enum_max = 100000;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "reflection closure of a seed root set");
    add_common(enum_cmd, enum_opts);
    enum_cmd->add_option("--dot", enum_dot, "also write a DOT sketch of the object classes");
    enum_cmd->add_option("--max-objects", enum_max, "object cap before giving up");
    enum_cmd->callback([&] {
        const RootSet r = load_root_set(enum_opts);
        const CartanGraph g = enumerate_groupoid(r, enum_max);
        if (!enum_dot.empty()) {
            std::ofstream out(enum_dot);
            if (!out) throw std::domain_error("cannot open output file: " + enum_dot);
            out << object_change_dot(g);
        }
        emit(to_json(g), enum_opts);
    });

    CommonOpts restrict_opts;
    std::string restrict_parabolic_arg, restrict_permute_arg, restrict_fold_arg;
    CLI::App* restrict_cmd = app.add_subcommand("restrict", "restrict a root set to smaller rank");
    add_common(restrict_cmd, restrict_opts);
    CLI::Option* opt_par = restrict_cmd->add_option("--parabolic", restrict_parabolic_arg,
                                                    "delete these coordinates (e.g. 1,3)");
    CLI::Option* opt_perm = restrict_cmd->add_option("--permute", restrict_permute_arg,
                                                     "sum orbits of this permutation (images, e.g. 2,1,3)");
    CLI::Option* opt_fold = restrict_cmd->add_option("--fold", restrict_fold_arg,
                                                     "fold along the involution in this matrix JSON file");
    opt_par->excludes(opt_perm)->excludes(opt_fold);
    opt_perm->excludes(opt_fold);
    restrict_cmd->callback([&] {
        const RootSet r = load_root_set(restrict_opts);
        RestrictionReport report;
        if (!restrict_parabolic_arg.empty()) {
            std::vector<int> J = parse_index_list(restrict_parabolic_arg);
            std::sort(J.begin(), J.end());
            report = restrict_parabolic(r, J);
        } else if (!restrict_permute_arg.empty()) {
            report = restrict_permutation(r, parse_index_list(restrict_permute_arg));
        } else if (!restrict_fold_arg.empty()) {
            report = restrict_folding(r, matrix_from_file(restrict_fold_arg));
        } else {
            throw std::domain_error("restrict needs one of --parabolic, --permute, --fold");
        }
        emit(to_json(report), restrict_opts);
    });

    CommonOpts hilbert_opts;
    std::string hilbert_roots_path, hilbert_restrict_arg;
    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of a diagonal braiding");
    add_common(hilbert_cmd, hilbert_opts);
    hilbert_cmd->add_option("--roots", hilbert_roots_path,
                            "root set JSON file (default: computed from the braiding)");
    hilbert_cmd->add_option("--restrict", hilbert_restrict_arg,
                            "split the series along this coordinate deletion (e.g. 1,3)");
    hilbert_cmd->callback([&] {
        const BraidingMatrix b = load_braiding(hilbert_opts);
        RootSet roots;
        if (!hilbert_roots_path.empty()) {
            std::ifstream in(hilbert_roots_path);
            if (!in) throw std::domain_error("cannot open input file: " + hilbert_roots_path);
            roots = rootset_from_json(ojson::parse(in));
        } else {
            roots = enumerate_braided(b).objects[0].roots;
        }
        if (!hilbert_restrict_arg.empty()) {
            std::vector<int> J = parse_index_list(hilbert_restrict_arg);
            std::sort(J.begin(), J.end());
            const RestrictedSeries s = hilbert_restricted(b, roots, J);
            ojson j = ojson::object();
            j["localized"] = to_json(s.localized);
            j["restricted"] = to_json(s.restricted);
            j["dimension"] = (s.localized.dimension() * s.restricted.dimension()).str();
            emit(j, hilbert_opts);
        } else {
            emit(to_json(hilbert_full(b, roots)), hilbert_opts);
        }
    });

    CommonOpts complex_opts;
    std::string complex_braiding_arg;
    bool complex_empty_cell = false;
    std::size_t complex_max = 100000;
    CLI::App* complex_cmd = app.add_subcommand("complex", "decorated cell complex of a root set");
    add_common(complex_cmd, complex_opts);
    complex_cmd->add_option("--braiding", complex_braiding_arg,
                            "braiding (catalog name or JSON file) for series decorations");
    complex_cmd->add_flag("--include-empty-cell", complex_empty_cell,
                          "also emit the single cell of dimension -1");
    complex_cmd->add_option("--max-objects", complex_max, "object cap before giving up");
    complex_cmd->callback([&] {
        const RootSet r = load_root_set(complex_opts);
        const CartanGraph g = enumerate_groupoid(r, complex_max);
        const CellComplex c = build_complex(g, complex_empty_cell);
        if (complex_braiding_arg.empty()) {
            emit(decorated_complex_json(c, g), complex_opts);
        } else {
            const BraidingMatrix b = braiding_from_name_or_file(complex_braiding_arg);
            const std::vector<BraidingMatrix> braidings = braidings_along(g, b);
            emit(decorated_complex_json(c, g, &braidings), complex_opts);
        }
    });

    CommonOpts survey_opts;
    int survey_target = 0;
    std::string survey_scope = "auto";
    std::size_t survey_max = 100000;
    CLI::App* survey_cmd = app.add_subcommand("survey", "catalog the restrictions of a root set");
    add_common(survey_cmd, survey_opts);
    survey_cmd->add_option("--target-rank", survey_target, "rank of the restricted systems")
        ->required();
    survey_cmd->add_option("--scope", survey_scope, "auto | seed | full")
        ->check(CLI::IsMember({"auto", "seed", "full"}));
    survey_cmd->add_option("--max-objects", survey_max, "object cap before giving up");
    survey_cmd->callback([&] {
        const RootSet r = load_root_set(survey_opts);
        SurveyScope scope = SurveyScope::automatic;
        if (survey_scope == "seed") scope = SurveyScope::seed_only;
        if (survey_scope == "full") scope = SurveyScope::full_orbit;
        emit(to_json(survey_restrictions(r, survey_target, scope, survey_max)), survey_opts);
    });

    CommonOpts verify_opts;
    std::size_t verify_max = 100000;
    CLI::App* verify_cmd = app.add_subcommand("verify", "enumerate a seed and re-check the axioms");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--max-objects", verify_max, "object cap before giving up");
    verify_cmd->callback([&] {
        const RootSet r = load_root_set(verify_opts);
        emit(to_json(verify_axioms(enumerate_groupoid(r, verify_max))), verify_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
