#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/families.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/moves.hpp"
#include "gausslink/search.hpp"
#include "gausslink/verify.hpp"

namespace gausslink::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;
constexpr int kParseError = 3;

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<MoveKind> parse_kinds(const std::string& spec, std::ostream& err, bool& ok) {
    ok = true;
    if (spec.empty()) return all_move_kinds();
    std::vector<MoveKind> kinds;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Polarity pol = Polarity::None;
        std::string name = item;
        if (!item.empty() && (item.back() == '+' || item.back() == '-')) {
            pol = item.back() == '+' ? Polarity::Positive : Polarity::Negative;
            name = item.substr(0, item.size() - 1);
        }
        auto v = variant_from_string(name);
        if (!v) {
            err << "unknown move kind: " << item << "\n";
            ok = false;
            return {};
        }
        if (family_of(*v) == MoveFamily::Omega3) {
            kinds.push_back({*v, Polarity::None});
        } else if (pol == Polarity::None) {
            kinds.push_back({*v, Polarity::Positive});
            kinds.push_back({*v, Polarity::Negative});
        } else {
            kinds.push_back({*v, pol});
        }
    }
    return kinds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Gauss diagram invariants and Reidemeister rewriting"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "invariant report for a Gauss code");
    std::string compute_input = "-";
    compute->add_option("input", compute_input, "file path or - for stdin");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a named family as Gauss code");
    std::string family;
    std::vector<long long> params;
    generate->add_option("family", family, "torus | torus-prime | dn | l | k")->required();
    generate->add_option("params", params, "family parameters");

    // moves
    auto* moves = app.add_subcommand("moves", "enumerate or apply move sites");
    auto* moves_list = moves->add_subcommand("list", "list applicable sites as JSON");
    auto* moves_apply = moves->add_subcommand("apply", "apply one site and print the result");
    std::string moves_input = "-", kinds_spec, site_json;
    long long site_index = -1;
    for (auto* sub : {moves_list, moves_apply}) {
        sub->add_option("input", moves_input, "file path or - for stdin");
        sub->add_option("--kinds", kinds_spec, "comma list, e.g. omega2a-,omega3a");
    }
    moves_apply->add_option("--index", site_index, "index into the moves list order");
    moves_apply->add_option("--site-json", site_json, "site description as printed by list");

    // verify
    auto* verify = app.add_subcommand("verify", "run the theorem-checking suite");
    uint64_t seed = 0;
    int trials = 1000, max_crossings = 12;
    std::string claims_spec;
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "number of random diagrams");
    verify->add_option("--max-crossings", max_crossings, "crossing bound for the corpus");
    verify->add_option("--claims", claims_spec,
                       "comma list of s_invariance,t_behavior,relators,table2");

    // search
    auto* search = app.add_subcommand("search", "certified minimal negative omega2 count");
    std::string from_path, to_path;
    int search_max_crossings = 12;
    long long max_states = 1000000;
    search->add_option("--from", from_path, "source Gauss code file or -")->required();
    search->add_option("--to", to_path, "target Gauss code file or -")->required();
    search->add_option("--max-crossings", search_max_crossings, "crossing bound");
    search->add_option("--max-states", max_states, "state budget");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("gausslink");
        for (const std::string& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (compute->parsed()) {
            GaussDiagram d;
            try {
                d = parse_gauss_code(read_input(compute_input, in));
            } catch (const ParseError& e) {
                err << "parse error: " << e.what() << "\n";
                return kParseError;
            }
            if (d.component_count() != 2) {
                err << "compute requires a two-component diagram (got "
                    << d.component_count() << ")\n";
                return kUsageError;
            }
            out << report_json(compute_report(d)) << "\n";
            return kOk;
        }

        if (generate->parsed()) {
            auto need = [&](size_t n) {
                if (params.size() != n)
                    throw CLI::ValidationError("family " + family + " takes " +
                                               std::to_string(n) + " parameter(s)");
            };
            GaussDiagram d;
            if (family == "torus") {
                need(1);
                d = family_torus(static_cast<int>(params[0]));
            } else if (family == "torus-prime") {
                need(1);
                d = family_torus_prime(static_cast<int>(params[0]));
            } else if (family == "dn") {
                need(1);
                d = family_nested_bigons(static_cast<int>(params[0]));
            } else if (family == "l") {
                need(2);
                d = family_l(static_cast<int>(params[0]), static_cast<int>(params[1]));
            } else if (family == "k") {
                need(2);
                d = family_k(static_cast<int>(params[0]), static_cast<int>(params[1]));
            } else {
                err << "unknown family: " << family << "\n";
                return kUsageError;
            }
            out << serialize_gauss_code(d) << "\n";
            return kOk;
        }

        if (moves->parsed()) {
            GaussDiagram d;
            try {
                d = parse_gauss_code(read_input(moves_input, in));
            } catch (const ParseError& e) {
                err << "parse error: " << e.what() << "\n";
                return kParseError;
            }
            bool kinds_ok = true;
            auto kinds = parse_kinds(kinds_spec, err, kinds_ok);
            if (!kinds_ok) return kUsageError;
            auto sites = enumerate_sites(d, kinds);
            if (moves_list->parsed()) {
                for (const MoveSite& s : sites) out << site_to_json(s) << "\n";
                return kOk;
            }
            MoveSite chosen;
            if (!site_json.empty()) {
                chosen = site_from_json(site_json);
            } else if (site_index >= 0 && site_index < static_cast<long long>(sites.size())) {
                chosen = sites[static_cast<size_t>(site_index)];
            } else {
                err << "moves apply needs --site-json or a valid --index (0.."
                    << sites.size() - 1 << ")\n";
                return kUsageError;
            }
            out << serialize_gauss_code(apply_move(d, chosen)) << "\n";
            return kOk;
        }

        if (verify->parsed()) {
            VerifySuiteConfig cfg;
            cfg.random_seed = seed;
            cfg.trials = trials;
            cfg.max_crossings = max_crossings;
            std::vector<Verdict> verdicts;
            if (claims_spec.empty()) {
                verdicts = run_all_checks(cfg);
            } else {
                std::vector<std::string> ids;
                std::stringstream ss(claims_spec);
                std::string item;
                while (std::getline(ss, item, ',')) ids.push_back(item);
                verdicts = run_checks(cfg, ids);
            }
            bool all_pass = true;
            for (const Verdict& v : verdicts) {
                out << verdict_to_json(v) << "\n";
                all_pass &= v.pass;
            }
            return all_pass ? kOk : kVerifyFailure;
        }

        if (search->parsed()) {
            GaussDiagram from, to;
            try {
                from = parse_gauss_code(read_input(from_path, in));
                to = parse_gauss_code(read_input(to_path, in));
            } catch (const ParseError& e) {
                err << "parse error: " << e.what() << "\n";
                return kParseError;
            }
            SearchResult r = min_negative_omega2(from, to, search_max_crossings, max_states);
            out << search_result_to_json(r) << "\n";
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace gausslink::cli
