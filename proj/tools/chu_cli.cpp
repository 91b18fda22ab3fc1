#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chu/canonical.hpp"
#include "chu/chain.hpp"
#include "chu/finobj.hpp"
#include "chu/gallery.hpp"
#include "chu/io.hpp"
#include "chu/monic.hpp"
#include "chu/suites.hpp"
#include "chu/universal.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chu::Error(chu::Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const fs::path& path, const std::string& content) {
    if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

chu::Space load_space(const std::string& path) { return chu::io::parse_space(slurp(path)); }

chu::Morphism load_morphism(const std::string& path) {
    std::string text = slurp(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return chu::io::parse_morphism_json(text, slurp);
    return chu::io::parse_morphism_text(text, slurp);
}

chu::Chain load_chain(const std::string& path) { return chu::io::parse_chain_text(slurp(path)); }

/// One report object per command; the table view prints the same fields, so
/// both output modes agree by construction.
void emit_report(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
}

json arrows(const std::vector<std::string>& from, const std::vector<std::string>& to,
            const std::vector<std::size_t>& map) {
    json out = json::array();
    for (std::size_t i = 0; i < map.size(); ++i) out.push_back(from[i] + "->" + to[map[i]]);
    return out;
}

json morphism_arrows(const chu::Morphism& m) {
    return json{{"forward", arrows(m.source.objects(), m.target.objects(), m.forward)},
                {"backward", arrows(m.target.attributes(), m.source.attributes(), m.backward)}};
}

json suite_json(const chu::suites::SuiteReport& r) {
    return json{{"suite", r.suite},
                {"cases", r.cases},
                {"failures", r.failures},
                {"passed", r.passed()},
                {"notes", r.notes}};
}

chu::Category parse_cat(const std::string& name) {
    if (name == "C") return chu::Category::C;
    if (name == "E") return chu::Category::E;
    if (name == "B") return chu::Category::B;
    if (name == "S" || name == "Separable") return chu::Category::Separable;
    throw CLI::ValidationError("--category", "expected C, E, B or S");
}

struct Options {
    bool as_json = false;
    std::uint64_t seed = 0x5eed;
    std::optional<std::uint64_t> budget_override;
    std::size_t window = 5;
    std::size_t depth = 0;  // 0 = full explicit length
    std::string emit_dir;

    chu::Budget budget() const {
        chu::Budget b;
        if (budget_override)
            b.max_raw_matrices = b.max_functions = b.max_morphism_search = b.max_threads =
                *budget_override;
        return b;
    }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--json", opt.as_json, "emit a JSON report instead of a table");
    cmd->add_option("--budget", opt.budget_override, "override all search budgets");
}

std::size_t chain_depth(const chu::Chain& chain, const Options& opt) {
    if (opt.depth) return opt.depth;
    if (auto n = chain.length()) return *n;
    throw CLI::ValidationError("--depth", "generated chains need an explicit depth");
}

int run(int argc, char** argv) {
    CLI::App app{"finite Chu space toolkit: morphisms, monicity, chain colimits, finiteness"};
    app.require_subcommand(1);
    Options opt;

    std::string path_a, path_b, category = "C", filter = "all", suite, rule, sets;
    std::size_t max_objects = 2, max_attributes = 2, runs = 100, steps = 50, n_objects = 2,
                limit = 20;
    bool reduce = false, count_only = false, no_witness = false;

    auto* c_check = app.add_subcommand("check", "predicate table for a space file");
    c_check->add_option("space", path_a)->required();
    add_common(c_check, opt);

    auto* c_iso = app.add_subcommand("iso", "search for an isomorphism between two spaces");
    c_iso->add_option("first", path_a)->required();
    c_iso->add_option("second", path_b)->required();
    add_common(c_iso, opt);

    auto* c_morph = app.add_subcommand("morphisms", "enumerate morphisms between two spaces");
    c_morph->add_option("source", path_a)->required();
    c_morph->add_option("target", path_b)->required();
    c_morph->add_option("--filter", filter, "all | monic-c | monic-e");
    c_morph->add_flag("--count", count_only, "only report the count");
    c_morph->add_option("--limit", limit, "max morphisms listed");
    add_common(c_morph, opt);

    auto* c_monic = app.add_subcommand("monic", "monicity verdict for a morphism file");
    c_monic->add_option("morphism", path_a)->required();
    c_monic->add_option("--category", category, "C | E | B | S")->required();
    c_monic->add_flag("--no-witness", no_witness, "skip witness construction");
    c_monic->add_option("--emit", opt.emit_dir, "write witness files to this directory");
    add_common(c_monic, opt);

    auto* c_colim = app.add_subcommand("colimit", "colimit of a chain file");
    c_colim->add_option("chain", path_a)->required();
    c_colim->add_option("--depth", opt.depth, "stages to consume (default: full explicit chain)");
    c_colim->add_option("--emit", opt.emit_dir, "write the colimit space here");
    add_common(c_colim, opt);

    auto* c_med = app.add_subcommand("mediate",
                                     "mediating morphism from a chain's colimit to a cocone "
                                     "given by its top leg");
    c_med->add_option("chain", path_a)->required();
    c_med->add_option("leg", path_b, "morphism from the last consumed stage to the apex")
        ->required();
    c_med->add_option("--depth", opt.depth);
    add_common(c_med, opt);

    auto* c_classify = app.add_subcommand("classify", "finiteness classification of a space");
    c_classify->add_option("space", path_a)->required();
    add_common(c_classify, opt);

    auto* c_amalg = app.add_subcommand("amalgamate", "amalgamate two monic legs out of one base");
    c_amalg->add_option("left", path_a, "morphism file: base -> left")->required();
    c_amalg->add_option("right", path_b, "morphism file: base -> right")->required();
    c_amalg->add_flag("--reduce", reduce, "shrink the apex to a covering attribute subset");
    c_amalg->add_option("--emit", opt.emit_dir, "write apex and leg files here");
    add_common(c_amalg, opt);

    auto* c_fraisse = app.add_subcommand("fraisse", "build universal-space approximants");
    c_fraisse->add_option("--max-objects", max_objects, "catalog object bound");
    c_fraisse->add_option("--max-attributes", max_attributes, "catalog attribute bound");
    c_fraisse->add_option("--steps", steps, "amalgamation steps");
    c_fraisse->add_option("--emit", opt.emit_dir, "write the final stage here");
    add_common(c_fraisse, opt);

    auto* c_gallery = app.add_subcommand("gallery", "built-in chains, spaces and demos");
    c_gallery
        ->add_option("name", rule,
                     "order-chain | divisibility-M | subset-chain | discrete | no-colimit-demo")
        ->required();
    c_gallery->add_option("--window", opt.window, "window for the windowed constructions");
    c_gallery->add_option("--sets", sets, "subset-chain stages, e.g. \"a;a,b;a,b,c\"");
    c_gallery->add_option("--objects", n_objects, "object count for the discrete space");
    c_gallery->add_option("--depth", opt.depth, "stages to report on");
    c_gallery->add_option("--emit", opt.emit_dir, "write the chain/space here");
    add_common(c_gallery, opt);

    auto* c_sweep = app.add_subcommand("sweep", "exhaustive / seeded verification suites");
    c_sweep
        ->add_option("--suite", suite,
                     "characterization | determination | mediator | biextensional-colimit | "
                     "amalgamation | roundtrip")
        ->required();
    c_sweep->add_option("--max-objects", max_objects);
    c_sweep->add_option("--max-attributes", max_attributes);
    c_sweep->add_option("--runs", runs, "random chain count for the seeded suites");
    c_sweep->add_option("--seed", opt.seed);
    add_common(c_sweep, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;  // usage errors -> 1, help -> 0
    }
    const chu::Budget budget = opt.budget();

    if (c_check->parsed()) {
        chu::Space s = load_space(path_a);
        auto disc = chu::is_discrete(s, budget);
        json j{{"objects", s.object_count()},
               {"attributes", s.attribute_count()},
               {"extensional", chu::is_extensional(s)},
               {"separable", chu::is_separable(s)},
               {"biextensional", chu::is_biextensional(s)},
               {"discrete", disc.discrete}};
        emit_report(j, opt.as_json);
    } else if (c_iso->parsed()) {
        chu::Space s1 = load_space(path_a), s2 = load_space(path_b);
        auto iso = chu::find_isomorphism(s1, s2);
        json j{{"isomorphic", iso.has_value()}};
        if (iso) j["isomorphism"] = morphism_arrows(*iso);
        emit_report(j, opt.as_json);
    } else if (c_morph->parsed()) {
        chu::MorphismFilter f = filter == "monic-c"   ? chu::MorphismFilter::MonicC
                                : filter == "monic-e" ? chu::MorphismFilter::MonicE
                                                      : chu::MorphismFilter::All;
        chu::Space s = load_space(path_a), t = load_space(path_b);
        json j{{"count", chu::count_morphisms(s, t, f, budget)}};
        if (!count_only) {
            json list = json::array();
            for (const chu::Morphism& m : chu::enumerate_morphisms(s, t, f, budget)) {
                if (list.size() >= limit) break;
                list.push_back(morphism_arrows(m));
            }
            j["morphisms"] = std::move(list);
        }
        emit_report(j, opt.as_json);
    } else if (c_monic->parsed()) {
        chu::Morphism m = load_morphism(path_a);
        chu::Category cat = parse_cat(category);
        chu::MonicVerdict v = chu::is_monic(m, cat, !no_witness);
        json j{{"category", chu::category_name(cat)},
               {"monic", v.monic},
               {"forward_injective", v.forward_injective},
               {"backward_surjective", v.backward_surjective},
               {"alphabet_assumption_met", v.alphabet_assumption_met},
               {"witness", v.witness.has_value()}};
        if (v.witness && !opt.emit_dir.empty()) {
            fs::path dir(opt.emit_dir);
            spill(dir / "witness_space.chu", chu::io::emit_space_text(v.witness->test_space));
            spill(dir / "witness_first.chumorph", chu::io::emit_morphism_text(v.witness->first));
            spill(dir / "witness_second.chumorph", chu::io::emit_morphism_text(v.witness->second));
            j["witness_dir"] = opt.emit_dir;
        }
        emit_report(j, opt.as_json);
    } else if (c_colim->parsed()) {
        chu::Chain chain = load_chain(path_a);
        std::size_t depth = chain_depth(chain, opt);
        chu::ColimitResult res = chu::colimit(chain, depth, budget);
        json j{{"depth", res.depth},
               {"objects", res.space.object_count()},
               {"threads", res.space.attribute_count()},
               {"exact", res.exact},
               {"stabilized", res.stabilized},
               {"extensional", chu::is_extensional(res.space)}};
        if (!opt.emit_dir.empty()) {
            spill(fs::path(opt.emit_dir) / "colimit.chu", chu::io::emit_space_text(res.space));
            j["emitted"] = opt.emit_dir;
        }
        emit_report(j, opt.as_json);
    } else if (c_med->parsed()) {
        chu::Chain chain = load_chain(path_a);
        std::size_t depth = chain_depth(chain, opt);
        chu::ColimitResult res = chu::colimit(chain, depth, budget);
        chu::Morphism top = load_morphism(path_b);
        std::vector<chu::Morphism> legs(depth);
        legs[depth - 1] = top;
        for (std::size_t i = depth - 1; i-- > 0;)
            legs[i] = chu::compose(legs[i + 1], chain.link(i));
        auto med = chu::mediate(chain, res, top.target, legs);
        json j{{"depth", depth}, {"mediator", med.has_value()}};
        if (med) j["morphism"] = morphism_arrows(*med);
        emit_report(j, opt.as_json);
    } else if (c_classify->parsed()) {
        chu::FinitenessReport r = chu::classify(load_space(path_a), budget);
        json j{{"objects", r.objects},
               {"attributes", r.attributes},
               {"extensional", r.extensional},
               {"separable", r.separable},
               {"discrete", r.discreteness.discrete},
               {"finite_iC", r.finite_iC}};
        j["finite_iE"] = r.finite_iE ? json(*r.finite_iE) : json();
        j["finite_iB"] = r.finite_iB ? json(*r.finite_iB) : json();
        j["attribute_bound_holds"] =
            r.attribute_bound_holds ? json(*r.attribute_bound_holds) : json();
        emit_report(j, opt.as_json);
    } else if (c_amalg->parsed()) {
        chu::Morphism l = load_morphism(path_a), r = load_morphism(path_b);
        chu::AmalgamationSquare sq = chu::amalgamate(l.source, l, r);
        if (reduce) sq = chu::reduce_apex(sq);
        json j{{"apex_objects", sq.apex.object_count()},
               {"apex_attributes", sq.apex.attribute_count()},
               {"apex_extensional", chu::is_extensional(sq.apex)},
               {"apex_strongly_finite", chu::is_strongly_finite(sq.apex)},
               {"reduced", reduce}};
        if (!opt.emit_dir.empty()) {
            fs::path dir(opt.emit_dir);
            spill(dir / "apex.chu", chu::io::emit_space_text(sq.apex));
            spill(dir / "from_left.chumorph", chu::io::emit_morphism_text(sq.from_left));
            spill(dir / "from_right.chumorph", chu::io::emit_morphism_text(sq.from_right));
            j["emitted"] = opt.emit_dir;
        }
        emit_report(j, opt.as_json);
    } else if (c_fraisse->parsed()) {
        chu::FraisseState st =
            chu::fraisse_build(chu::Alphabet::binary(), max_objects, max_attributes, steps, budget);
        const chu::Space& top = st.stages.back();
        json j{{"catalog_size", st.catalog.size()},
               {"stages", st.stages.size()},
               {"top_objects", top.object_count()},
               {"top_attributes", top.attribute_count()},
               {"top_strongly_finite", chu::is_strongly_finite(top)}};
        if (!opt.emit_dir.empty()) {
            spill(fs::path(opt.emit_dir) / "top_stage.chu", chu::io::emit_space_text(top));
            j["emitted"] = opt.emit_dir;
        }
        emit_report(j, opt.as_json);
    } else if (c_gallery->parsed()) {
        if (rule == "no-colimit-demo") {
            chu::gallery::NoColimitReport r = chu::gallery::demo_no_colimit_in_iC(opt.window);
            emit_report(json{{"window", r.window},
                             {"cocones_valid", r.cocones_valid},
                             {"commuting_count", r.commuting_count},
                             {"commuting_monic_count", r.commuting_monic_count},
                             {"obstruction_confirmed", r.obstruction_confirmed},
                             {"ie_mediator_exists", r.ie_mediator_exists}},
                        opt.as_json);
        } else if (rule == "discrete") {
            chu::Space s = chu::gallery::discrete_space(chu::Alphabet::binary(), n_objects, budget);
            json j{{"objects", s.object_count()}, {"attributes", s.attribute_count()}};
            if (!opt.emit_dir.empty()) {
                spill(fs::path(opt.emit_dir) / "discrete.chu", chu::io::emit_space_text(s));
                j["emitted"] = opt.emit_dir;
            }
            emit_report(j, opt.as_json);
        } else {
            std::map<std::string, std::string> params;
            if (rule == "subset-chain")
                params["sets"] = sets;
            else
                params["window"] = std::to_string(opt.window);
            chu::Chain chain = chu::gallery::make_rule_chain(rule, params);
            std::size_t depth = opt.depth ? opt.depth
                                          : chain.length().value_or(opt.window);
            chu::validate(chain, depth);
            const chu::Space& top = chain.stage(depth - 1);
            json j{{"rule", rule},
                   {"stages_validated", depth},
                   {"top_objects", top.object_count()},
                   {"top_attributes", top.attribute_count()}};
            if (!opt.emit_dir.empty()) {
                spill(fs::path(opt.emit_dir) / (rule + ".chuchain"),
                      chu::io::emit_chain_text(chu::normalize_to_inclusions(chain, depth)));
                j["emitted"] = opt.emit_dir;
            }
            emit_report(j, opt.as_json);
        }
    } else if (c_sweep->parsed()) {
        chu::suites::SuiteReport r;
        chu::Alphabet sigma = chu::Alphabet::binary();
        if (suite == "characterization")
            r = chu::suites::characterization_agreement(sigma, max_objects, max_attributes,
                                                        max_objects, max_attributes + 1, budget);
        else if (suite == "determination")
            r = chu::suites::determination_sweep(sigma, max_objects, max_attributes, budget);
        else if (suite == "mediator")
            r = chu::suites::mediator_sweep(opt.seed, runs, 4, 3, 4, 3, 4, budget);
        else if (suite == "biextensional-colimit")
            r = chu::suites::biextensional_colimit_sweep(opt.seed, runs, 4, 3, 3, budget);
        else if (suite == "amalgamation")
            r = chu::suites::amalgamation_sweep(sigma, max_objects, max_attributes, 10000,
                                                opt.seed, budget);
        else if (suite == "roundtrip")
            r = chu::suites::roundtrip_sweep(sigma, max_objects, max_attributes, budget);
        else
            throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
        emit_report(suite_json(r), opt.as_json);
        return r.passed() ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chu::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == chu::Errc::BudgetExceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
