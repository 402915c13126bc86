#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ksadist/analysis.hpp"
#include "ksadist/datasets.hpp"
#include "ksadist/dot.hpp"
#include "ksadist/io.hpp"

using namespace ksadist;

namespace {

// exit codes: 0 property holds / SAT / CONTEXTUAL, 1 property fails / UNSAT,
// 2 UNKNOWN, 3 input error
constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw InputError("cannot write '" + out_path + "'");
    out << text << "\n";
}

void emit(const Json& j, const std::string& out_path) {
    emit(j.dump(2), out_path);
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    if (out.empty())
        throw InputError("--states needs a comma-separated id list");
    return out;
}

void check_backend_flag(const std::string& flag, const std::string& actual) {
    if (flag.empty())
        return;
    std::string want = flag == "exact" ? "cyclotomic3" : "float";
    if (want != actual)
        throw InputError("input file is '" + actual + "' but --backend requests '" + flag +
                         "'");
}

template <typename S>
std::vector<StateVector<S>> pick_states(const Pool<S>& pool, const std::vector<std::string>& ids) {
    std::vector<StateVector<S>> out;
    for (const auto& id : ids) {
        auto idx = pool.find_id(id);
        if (!idx)
            throw InputError("no vector with id '" + id + "' in the pool");
        out.push_back(pool[*idx]);
    }
    return out;
}

struct Options {
    std::string scenario_path;
    std::string pool_path;
    std::string pvm_path;
    std::string states_csv;
    std::string overlaps_csv;
    std::string backend;
    std::string out_path;
    std::string dataset_name;
    int closure_rounds = 1;
    int max_size = 3;
    int jobs = 0;
};

Exec exec_policy(const Options& opt) {
    return opt.jobs == 1 ? Exec::Serial : Exec::Parallel;
}

int run_color(const Options& opt) {
    AnyScenario any = parse_scenario(read_json_file(opt.scenario_path));
    check_backend_flag(opt.backend, field_of(any));
    return std::visit(
        [&](const auto& sc) {
            Forced forced;
            if (!opt.states_csv.empty()) {
                for (const auto& id : split_ids(opt.states_csv)) {
                    bool found = false;
                    for (std::size_t v = 0; v < sc.vertices.size(); ++v)
                        if (sc.vertices[v].id == id) {
                            forced.emplace_back(static_cast<int>(v), 1);
                            found = true;
                        }
                    if (!found)
                        throw InputError("no vertex with id '" + id + "'");
                }
            }
            auto witness = ks_color(sc, forced);
            emit(witness_json(sc, witness), opt.out_path);
            return witness ? kExitHolds : kExitFails;
        },
        any);
}

int run_instance(const Options& opt) {
    AnyPool any = parse_pool(read_json_file(opt.pool_path));
    check_backend_flag(opt.backend, field_of(any));
    auto ids = split_ids(opt.states_csv);
    return std::visit(
        [&](const auto& pool) {
            using S = std::decay_t<decltype(pool[0].entries[0])>;
            auto states = pick_states(pool, ids);
            auto sc = generate_scenario(std::span<const StateVector<S>>(states), pool,
                                        exec_policy(opt));
            std::vector<int> si(states.size());
            for (std::size_t i = 0; i < si.size(); ++i)
                si[i] = static_cast<int>(i);
            bool contextual = is_contextual_instance(std::span<const int>{si}, sc);
            Json j;
            j["contextual_instance"] = contextual;
            j["scenario"] = to_json(sc);
            emit(j, opt.out_path);
            return contextual ? kExitHolds : kExitFails;
        },
        any);
}

int run_classify(const Options& opt) {
    AnyPool any = parse_pool(read_json_file(opt.pool_path));
    check_backend_flag(opt.backend, field_of(any));
    Json jpvm = read_json_file(opt.pvm_path);
    return std::visit(
        [&](const auto& pool) {
            using S = std::decay_t<decltype(pool[0].entries[0])>;
            auto pvm = parse_pvm<S>(jpvm, pool);
            std::vector<StateVector<S>> states =
                opt.states_csv.empty() ? pool.vectors()
                                       : pick_states(pool, split_ids(opt.states_csv));
            auto cls = classify<S>(pvm, states);
            emit(classification_json<S>(cls, pvm, states), opt.out_path);
            return cls.weakly() ? kExitHolds : kExitFails;
        },
        any);
}

int run_wa_search(const Options& opt) {
    AnyPool any = parse_pool(read_json_file(opt.pool_path));
    check_backend_flag(opt.backend, field_of(any));
    auto ids = split_ids(opt.states_csv);
    return std::visit(
        [&](const auto& pool) {
            using S = std::decay_t<decltype(pool[0].entries[0])>;
            auto states = pick_states(pool, ids);
            auto grown = closure(pool, opt.closure_rounds, exec_policy(opt));
            auto hit = find_wa_pvm(std::span<const StateVector<S>>(states), grown,
                                   exec_policy(opt));
            Json j;
            j["found"] = hit.has_value();
            if (hit) {
                Json ctx = Json::array();
                for (int v : hit->context)
                    ctx.push_back(hit->scenario.vertices[v].id);
                j["context"] = std::move(ctx);
                j["pvm"] = to_json(hit->pvm);
                auto cls = classify<S>(hit->pvm, states);
                j["classification"] = classification_json<S>(cls, hit->pvm, states);
            }
            emit(j, opt.out_path);
            return hit ? kExitHolds : kExitFails;
        },
        any);
}

int run_contextual(const Options& opt) {
    AnyPool any = parse_pool(read_json_file(opt.pool_path));
    check_backend_flag(opt.backend, field_of(any));
    auto ids = split_ids(opt.states_csv);
    return std::visit(
        [&](const auto& pool) {
            using S = std::decay_t<decltype(pool[0].entries[0])>;
            auto states = pick_states(pool, ids);
            auto verdict = is_set_contextual(std::span<const StateVector<S>>(states), pool,
                                             opt.closure_rounds, exec_policy(opt));
            emit(verdict_json(verdict), opt.out_path);
            switch (verdict.status) {
            case Verdict::Contextual: return kExitHolds;
            case Verdict::NotContextual: return kExitFails;
            default: return kExitUnknown;
            }
        },
        any);
}

int run_maximal(const Options& opt) {
    AnyPool any = parse_pool(read_json_file(opt.pool_path));
    check_backend_flag(opt.backend, field_of(any));
    auto ids = split_ids(opt.states_csv);
    return std::visit(
        [&](const auto& pool) {
            using S = std::decay_t<decltype(pool[0].entries[0])>;
            auto states = pick_states(pool, ids);
            auto verdict = is_maximally_contextual(std::span<const StateVector<S>>(states),
                                                   pool, opt.closure_rounds, exec_policy(opt));
            emit(maximality_json<S>(verdict, states), opt.out_path);
            switch (verdict.status) {
            case Maximality::Maximal: return kExitHolds;
            case Maximality::NotMaximal: return kExitFails;
            default: return kExitUnknown;
            }
        },
        any);
}

int run_triple(const Options& opt) {
    Json j;
    bool holds = false;
    if (!opt.overlaps_csv.empty()) {
        auto parts = split_ids(opt.overlaps_csv);
        if (parts.size() != 3)
            throw InputError("--overlaps needs exactly three rationals");
        Rational d1 = Rational::parse(parts[0]);
        Rational d2 = Rational::parse(parts[1]);
        Rational d3 = Rational::parse(parts[2]);
        holds = triple_criterion(d1, d2, d3);
        j["overlaps"] = Json::array({d1.str(), d2.str(), d3.str()});
    } else if (!opt.pool_path.empty()) {
        AnyPool any = parse_pool(read_json_file(opt.pool_path));
        check_backend_flag(opt.backend, field_of(any));
        auto ids = split_ids(opt.states_csv);
        if (ids.size() != 3)
            throw InputError("triple needs exactly three state ids");
        std::visit(
            [&](const auto& pool) {
                auto states = pick_states(pool, ids);
                auto d1 = overlap(states[0], states[1]);
                auto d2 = overlap(states[0], states[2]);
                auto d3 = overlap(states[1], states[2]);
                holds = triple_criterion(d1, d2, d3);
                if constexpr (std::is_same_v<std::decay_t<decltype(d1)>, Rational>)
                    j["overlaps"] = Json::array({d1.str(), d2.str(), d3.str()});
                else
                    j["overlaps"] = Json::array({d1, d2, d3});
            },
            any);
    } else {
        throw InputError("triple needs --overlaps or --pool with --states");
    }
    j["criterion_holds"] = holds;
    j["note"] = "a positive verdict certifies an excluding measurement in the cited "
                "three-state sense; a negative verdict exactly refutes it";
    emit(j, opt.out_path);
    return holds ? kExitHolds : kExitFails;
}

int run_generators(const Options& opt) {
    AnyScenario any = parse_scenario(read_json_file(opt.scenario_path));
    check_backend_flag(opt.backend, field_of(any));
    return std::visit(
        [&](const auto& sc) {
            auto subs = find_generating_subsets(sc, opt.max_size, exec_policy(opt));
            Json j;
            j["count"] = subs.size();
            j["generating_subsets"] = Json::array();
            for (const auto& sub : subs) {
                Json ids = Json::array();
                for (int v : sub)
                    ids.push_back(sc.vertices[v].id);
                j["generating_subsets"].push_back(std::move(ids));
            }
            emit(j, opt.out_path);
            return subs.empty() ? kExitFails : kExitHolds;
        },
        any);
}

int run_datasets_list(const Options& opt) {
    Json j = Json::array();
    for (const auto& name : dataset_names()) {
        Dataset d = load_dataset(name);
        Json e;
        e["name"] = d.name;
        e["title"] = d.title;
        e["dimension"] = d.dim;
        e["vectors"] = d.pool.size();
        j.push_back(std::move(e));
    }
    emit(j, opt.out_path);
    return kExitHolds;
}

int run_datasets_show(const Options& opt) {
    Dataset d = load_dataset(opt.dataset_name);
    auto sc = enumerate_contexts(d.pool);
    Json j = to_json(sc);
    j["name"] = d.name;
    if (!d.state_ids.empty())
        j["states"] = d.state_ids;
    if (!d.known_pvm_ids.empty())
        j["known_pvm"] = d.known_pvm_ids;
    if (!d.known_contextual_sets.empty())
        j["known_contextual_sets"] = d.known_contextual_sets;
    emit(j, opt.out_path);
    return kExitHolds;
}

int run_export_dot(const Options& opt) {
    AnyScenario any = parse_scenario(read_json_file(opt.scenario_path));
    check_backend_flag(opt.backend, field_of(any));
    return std::visit(
        [&](const auto& sc) {
            std::string dot = export_dot(sc);
            if (opt.out_path.empty()) {
                std::cout << dot;
            } else {
                std::ofstream out(opt.out_path);
                if (!out)
                    throw InputError("cannot write '" + opt.out_path + "'");
                out << dot;
                Json j;
                j["written"] = opt.out_path;
                j["vertices"] = sc.vertices.size();
                j["contexts"] = sc.contexts.size();
                std::cout << j.dump(2) << "\n";
            }
            return kExitHolds;
        },
        any);
}

} // namespace

int main(int argc, char** argv) {
    if (const char* eps = std::getenv("KSADIST_FLOAT_EPS")) {
        try {
            set_float_eps(std::stod(eps));
        } catch (const std::exception&) {
            std::cerr << "error: KSADIST_FLOAT_EPS is not a positive number\n";
            return kExitInputError;
        }
    }

    CLI::App app{"Exact decision procedures for antidistinguishability and "
                 "Kochen-Specker contextuality of pure-state sets"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs", opt.jobs, "worker threads for enumeration fan-out (1 = serial)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", opt.backend, "require input backend: exact|float")
            ->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--out", opt.out_path, "write the result to a file instead of stdout");
    };

    auto* color = app.add_subcommand("color", "search for a noncontextual value assignment");
    color->add_option("scenario", opt.scenario_path, "scenario JSON file")->required();
    color->add_option("--states", opt.states_csv, "ids forced to value 1");
    add_common(color);

    auto* instance = app.add_subcommand(
        "instance",
        "decide whether states form a contextual instance of their generated scenario");
    instance->add_option("--pool", opt.pool_path, "pool JSON file")->required();
    instance->add_option("--states", opt.states_csv, "state ids")->required();
    add_common(instance);

    auto* cls = app.add_subcommand("classify-pvm",
                                   "classify a measurement against a state set (NONE/WA/SA)");
    cls->add_option("--pvm", opt.pvm_path, "PVM JSON file")->required();
    cls->add_option("--pool", opt.pool_path, "pool JSON file")->required();
    cls->add_option("--states", opt.states_csv, "state ids (default: whole pool)");
    add_common(cls);

    auto* wa =
        app.add_subcommand("wa-search", "search for a weakly antidistinguishing context");
    wa->add_option("--pool", opt.pool_path)->required();
    wa->add_option("--states", opt.states_csv)->required();
    wa->add_option("--closure-rounds", opt.closure_rounds, "pool growth rounds before search")
        ->default_val(0);
    add_common(wa);

    auto* ctx = app.add_subcommand("contextual", "decide contextuality of a state set");
    ctx->add_option("--pool", opt.pool_path)->required();
    ctx->add_option("--states", opt.states_csv)->required();
    ctx->add_option("--closure-rounds", opt.closure_rounds)->default_val(1);
    add_common(ctx);

    auto* mx = app.add_subcommand("maximal", "decide maximal contextuality of a state set");
    mx->add_option("--pool", opt.pool_path)->required();
    mx->add_option("--states", opt.states_csv)->required();
    mx->add_option("--closure-rounds", opt.closure_rounds)->default_val(1);
    add_common(mx);

    auto* tri = app.add_subcommand("triple", "three-state overlap criterion");
    tri->add_option("--overlaps", opt.overlaps_csv, "three rationals d1,d2,d3");
    tri->add_option("--pool", opt.pool_path);
    tri->add_option("--states", opt.states_csv, "exactly three ids");
    add_common(tri);

    auto* gen = app.add_subcommand("generators", "list generating subsets of a scenario");
    gen->add_option("scenario", opt.scenario_path)->required();
    gen->add_option("--max-size", opt.max_size)->default_val(3);
    add_common(gen);

    auto* ds = app.add_subcommand("datasets", "bundled vector families");
    auto* ds_list = ds->add_subcommand("list", "list datasets");
    ds_list->add_option("--out", opt.out_path);
    auto* ds_show = ds->add_subcommand("show", "print a dataset as scenario JSON");
    ds_show->add_option("name", opt.dataset_name)->required();
    ds_show->add_option("--out", opt.out_path);
    ds->require_subcommand(1);

    auto* dot = app.add_subcommand("export-dot", "bipartite DOT rendering of a scenario");
    dot->add_option("scenario", opt.scenario_path)->required();
    add_common(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    set_max_threads(opt.jobs);
    try {
        if (color->parsed())
            return run_color(opt);
        if (instance->parsed())
            return run_instance(opt);
        if (cls->parsed())
            return run_classify(opt);
        if (wa->parsed())
            return run_wa_search(opt);
        if (ctx->parsed())
            return run_contextual(opt);
        if (mx->parsed())
            return run_maximal(opt);
        if (tri->parsed())
            return run_triple(opt);
        if (gen->parsed())
            return run_generators(opt);
        if (ds->parsed())
            return ds_list->parsed() ? run_datasets_list(opt) : run_datasets_show(opt);
        if (dot->parsed())
            return run_export_dot(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
