#include "fhtw/decomposition.hpp"
#include "fhtw/enumerate.hpp"
#include "fhtw/errors.hpp"
#include "fhtw/game.hpp"
#include "fhtw/generators.hpp"
#include "fhtw/io.hpp"
#include "fhtw/solver.hpp"
#include "fhtw/weights.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fhtw;

namespace {

// Exit codes: 0 success, 1 invalid input, 2 resource limit.
constexpr int kInvalid = 1;
constexpr int kLimit = 2;

Json read_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw InvalidArgument("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Rational budget_of(const std::string& text) {
    auto r = parse_rational(text);
    if (sgn(r) < 0)
        throw InvalidArgument("budget must be nonnegative");
    return r;
}

FractionalHypertreeDecomposition decomposition_for(const CspInstance& inst, const std::string& path) {
    auto h = hypergraph_of(inst);
    if (!path.empty())
        return decomposition_from_json(h, read_json(path));
    return optimal_fractional_decomposition(h);
}

std::vector<int> parse_vars(const CspInstance& inst, const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ','))
        if (!name.empty())
            out.push_back(inst.variable_index(name));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional hypertree width toolkit"};
    app.require_subcommand(1);

    std::string input, second, measure = "fhw", budget, vars, dec_path;
    long limit = -1;

    auto* rho = app.add_subcommand("rho-star", "fractional edge cover number");
    rho->add_option("hypergraph", input)->default_val("-");
    auto* alpha = app.add_subcommand("alpha-star", "fractional independent set number");
    alpha->add_option("hypergraph", input)->default_val("-");

    auto* width = app.add_subcommand("width", "exact width with a witness decomposition");
    width->add_option("--measure", measure)->check(CLI::IsMember({"tree", "ghw", "fhw"}));
    width->add_option("hypergraph", input)->default_val("-");

    auto* aw = app.add_subcommand("aw", "army width");
    aw->add_option("hypergraph", input)->default_val("-");
    auto* game = app.add_subcommand("game", "winner of the game at a budget");
    game->add_option("--budget", budget)->required();
    game->add_option("hypergraph", input)->default_val("-");

    auto* decompose = app.add_subcommand("decompose", "separator-built decomposition");
    decompose->add_option("--budget", budget)->required();
    decompose->add_option("hypergraph", input)->default_val("-");

    auto* validate_cmd = app.add_subcommand("validate", "check a decomposition");
    validate_cmd->add_option("hypergraph", input)->required();
    validate_cmd->add_option("decomposition", second)->required();

    auto* solve_cmd = app.add_subcommand("solve", "one solution or null");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "all solutions, one JSON object per line");
    enumerate_cmd->add_option("--limit", limit);
    auto* count_cmd = app.add_subcommand("count", "number of solutions");
    auto* project_cmd = app.add_subcommand("project", "distinct projections, one per line");
    project_cmd->add_option("--vars", vars)->required();
    for (auto* c : {solve_cmd, enumerate_cmd, count_cmd, project_cmd}) {
        c->add_option("--decomposition", dec_path);
        c->add_option("instance", input)->default_val("-");
    }

    auto* generate = app.add_subcommand("generate", "emit generated hypergraphs or instances");
    generate->require_subcommand(1);
    std::uint64_t n0 = 2, seed = 0;
    int n = 2, num_vars = 5, domain = 3, num_constraints = 5, arity = 3;
    double density = 0.5;
    auto* g_tight = generate->add_subcommand("tight", "tight instance on a hypergraph");
    g_tight->add_option("--n0", n0);
    g_tight->add_option("hypergraph", input)->default_val("-");
    auto* g_hn = generate->add_subcommand("hn", "the hypergraph H_n");
    g_hn->add_option("n", n)->required();
    auto* g_matching = generate->add_subcommand("matching", "k disjoint edges");
    g_matching->add_option("k", n)->required();
    auto* g_universal = generate->add_subcommand("universal", "one edge over n vertices");
    g_universal->add_option("n", n)->required();
    auto* g_random = generate->add_subcommand("random", "seeded random instance");
    g_random->add_option("--seed", seed);
    g_random->add_option("--vars", num_vars);
    g_random->add_option("--domain", domain);
    g_random->add_option("--constraints", num_constraints);
    g_random->add_option("--arity", arity);
    g_random->add_option("--density", density);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*rho) {
            auto h = hypergraph_from_json(read_json(input));
            auto c = fractional_edge_cover(h, h.all_vertices());
            emit(Json{{"value", to_string(c.value)}, {"witness", weighting_to_json(h, c.cover)}});
        } else if (*alpha) {
            auto h = hypergraph_from_json(read_json(input));
            auto y = fractional_independent_set(h);
            Json w = Json::object();
            for (std::size_t v = 0; v < h.num_vertices(); ++v)
                w[h.name(static_cast<int>(v))] = to_string(y.weights[v]);
            emit(Json{{"value", to_string(y.value)}, {"witness", w}});
        } else if (*width) {
            auto h = hypergraph_from_json(read_json(input));
            auto m = measure == "tree" ? WidthMeasure::Tree
                     : measure == "ghw" ? WidthMeasure::Generalized
                                        : WidthMeasure::Fractional;
            auto r = exact_width(h, m);
            emit(Json{{"measure", measure}, {"value", to_string(r.value)}, {"decomposition", to_json(h, r.witness)}});
        } else if (*aw) {
            auto h = hypergraph_from_json(read_json(input));
            emit(Json{{"value", to_string(army_width(h))}});
        } else if (*game) {
            auto h = hypergraph_from_json(read_json(input));
            auto r = budget_of(budget);
            emit(Json{{"budget", to_string(r)}, {"winner", general_wins(h, r) ? "general" : "robber"}});
        } else if (*decompose) {
            auto h = hypergraph_from_json(read_json(input));
            auto r = budget_of(budget);
            auto d = decompose_by_separators(h, r);
            if (d)
                emit(Json{{"budget", to_string(r)}, {"success", true}, {"decomposition", to_json(h, *d)},
                          {"validation", to_json(validate(h, *d))}});
            else
                emit(Json{{"budget", to_string(r)}, {"success", false},
                          {"reason", "no balanced separator within the budget"}});
        } else if (*validate_cmd) {
            auto h = hypergraph_from_json(read_json(input));
            emit(to_json(validate(h, decomposition_from_json(h, read_json(second)))));
        } else if (*solve_cmd) {
            auto inst = instance_from_json(read_json(input));
            auto s = solve_with_decomposition(inst, decomposition_for(inst, dec_path));
            emit(Json{{"satisfiable", s.has_value()}, {"solution", s ? assignment_to_json(inst, *s) : Json(nullptr)}});
        } else if (*enumerate_cmd) {
            auto inst = instance_from_json(read_json(input));
            auto stream = enumerate_all(inst, decomposition_for(inst, dec_path));
            for (long k = 0; limit < 0 || k < limit; ++k) {
                auto s = stream.next();
                if (!s)
                    break;
                std::cout << assignment_to_json(inst, *s).dump() << '\n' << std::flush;
            }
        } else if (*count_cmd) {
            auto inst = instance_from_json(read_json(input));
            auto stream = enumerate_all(inst, decomposition_for(inst, dec_path));
            std::uint64_t total = 0;
            while (stream.next())
                ++total;
            emit(Json{{"count", total}});
        } else if (*project_cmd) {
            auto inst = instance_from_json(read_json(input));
            auto stream = project_solutions(inst, decomposition_for(inst, dec_path), parse_vars(inst, vars));
            while (auto s = stream.next())
                std::cout << assignment_to_json(inst, *s).dump() << '\n' << std::flush;
        } else if (*g_tight) {
            emit(to_json(generate_tight(hypergraph_from_json(read_json(input)), n0)));
        } else if (*g_hn) {
            emit(to_json(generate_hn(n)));
        } else if (*g_matching) {
            emit(to_json(generate_matching(n)));
        } else if (*g_universal) {
            emit(to_json(generate_universal(n)));
        } else if (*g_random) {
            emit(to_json(generate_random(seed, num_vars, domain, num_constraints, arity, density)));
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kLimit;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return 0;
}
