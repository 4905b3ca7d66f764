/*
 * Copyright 2026 The rabinchain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rabinchain/cli.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rabinchain/error.hpp"
#include "rabinchain/instances.hpp"

namespace rc {

ChainReport
check_chain(const CliqueInstance &instance, RabinMethod method, const SolverLimits &limits)
{
    ChainReport r{};
    r.clique = solve_clique_bruteforce(instance, limits).has_value();
    const Formula phi = clique_to_permsat(instance);
    const auto witness = solve_bruteforce(phi);
    r.satisfiable = witness.has_value();
    r.witness_ok = true;
    if (witness) {
        const auto cells = decode_permutation_to_clique(instance, *witness);
        for (std::size_t a = 0; a < cells.size(); a++)
            for (std::size_t b = a + 1; b < cells.size(); b++)
                if (!instance.adjacent(cells[a], cells[b])) r.witness_ok = false;
    }
    const auto game = permsat_to_rabin(phi);
    r.steven_wins = solve_rabin(game.arena, game.objective, method, limits).winner == Player::steven;
    return r;
}

Formula
bench_formula(int k, std::uint64_t seed)
{
    const Formula base = gen_permsat(k, k, 2, seed);
    auto clauses = base.clauses();
    clauses.push_back({{0, 1}});
    clauses.push_back({{1, 0}});
    return Formula(k, 2, 2, std::move(clauses));
}

namespace {

template <class F>
double
seconds(F &&f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double
median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

} // namespace

std::vector<BenchRow>
run_bench(int k_min, int k_max, int runs, std::uint64_t seed, const SolverLimits &limits)
{
    if (k_min < 2 || k_max < k_min || runs < 1) throw validation_error("invalid benchmark range");
    std::vector<BenchRow> rows;
    for (int k = k_min; k <= k_max; k++) {
        const Formula phi = bench_formula(k, seed + static_cast<std::uint64_t>(k));
        const auto game = permsat_to_rabin(phi);

        std::vector<double> brute, iar;
        bool brute_skip = false, iar_skip = false;
        for (int r = 0; r < runs; r++) {
            try {
                brute.push_back(seconds([&] { (void)solve_bruteforce(phi, {std::max(10, k)}); }));
            } catch (const resource_error &) {
                brute_skip = true;
            }
            try {
                iar.push_back(seconds([&] { (void)solve_rabin_iar(game.arena, game.objective, limits); }));
            } catch (const resource_error &) {
                iar_skip = true;
            }
        }
        auto row = [&](const char *name, const std::vector<double> &t, bool skipped) {
            BenchRow b{k, name, runs, 0.0, 0.0, skipped};
            if (!skipped) {
                double sum = 0;
                for (double x : t) sum += x;
                b.mean_seconds = sum / t.size();
                b.median_seconds = median(t);
            }
            rows.push_back(b);
        };
        row("permsat-bruteforce", brute, brute_skip);
        row("rabin-iar", iar, iar_skip);
    }
    return rows;
}

std::string
bench_csv(const std::vector<BenchRow> &rows)
{
    std::ostringstream out;
    out << "k,method,runs,mean_seconds,median_seconds\n";
    out.precision(9);
    for (const auto &r : rows) {
        out << r.k << ',' << r.method << ',' << r.runs << ',';
        if (r.skipped)
            out << "NA,NA\n";
        else
            out << std::fixed << r.mean_seconds << ',' << r.median_seconds << std::defaultfloat << '\n';
    }
    return out.str();
}

namespace {

struct usage_error : error
{
    using error::error;
};

struct Context
{
    std::ostream &out;
    std::ostream &err;
};

int
finish(Context &ctx, const std::string &command, const std::string &fields, int code)
{
    ctx.out << "summary: command=" << command << (fields.empty() ? "" : " ") << fields << " exit=" << code << '\n';
    return code;
}

std::string
names_of(const Arena &arena, const std::vector<int> &vs)
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); i++) s += (i ? " " : "") + arena.name(vs[i]);
    return s;
}

void
print_game_witness(Context &ctx, const Arena &arena, const SolveResult &res)
{
    if (res.strategy) {
        ctx.out << "strategy:\n";
        for (int v = 0; v < arena.vertex_count(); v++)
            if (arena.owner(v) == Player::steven)
                ctx.out << "  " << arena.name(v) << " -> " << arena.name(res.strategy->choice[v]) << '\n';
    }
    if (res.counter_play) {
        if (!res.counter_play->prefix.empty()) ctx.out << "prefix: " << names_of(arena, res.counter_play->prefix) << '\n';
        ctx.out << "bad cycle: " << names_of(arena, res.counter_play->cycle) << '\n';
    }
}

std::string
cells_text(const std::vector<Cell> &cells)
{
    std::string s;
    for (const auto &c : cells)
        s += (s.empty() ? "" : " ") + ("(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")");
    return s;
}

std::string
order_text(const Assignment &a, const std::vector<std::string> &names)
{
    std::string s;
    for (int v : a.order()) s += (s.empty() ? "" : " < ") + names[v];
    return s;
}

std::vector<std::string>
plain_names(int k)
{
    std::vector<std::string> names;
    for (int v = 0; v < k; v++) names.push_back("x_" + std::to_string(v + 1));
    return names;
}

RabinMethod
rabin_method(const std::string &m)
{
    if (m == "auto") return RabinMethod::automatic;
    if (m == "brute") return RabinMethod::bruteforce;
    if (m == "iar") return RabinMethod::iar;
    throw usage_error("method '" + m + "' does not apply to this game");
}

int
cmd_solve(Context &ctx, const std::string &file, const std::string &method, const std::string &dot,
          const SolverLimits &limits)
{
    const std::string text = read_text_file(file);
    const auto kind = detect_kind(text);

    if (kind == InstanceKind::clique) {
        if (method != "auto" && method != "brute") throw usage_error("clique instances only support --method=brute");
        const auto inst = parse_clique(text);
        const auto clique = solve_clique_bruteforce(inst, limits);
        ctx.out << "clique=" << (clique ? "yes" : "no") << '\n';
        if (clique) ctx.out << "vertices: " << cells_text(*clique) << '\n';
        return finish(ctx, "solve", "kind=clique method=brute clique=" + std::string(clique ? "yes" : "no"),
                      clique ? exit_code::steven : exit_code::audrey);
    }

    if (kind == InstanceKind::permsat) {
        const auto phi = parse_permsat(text);
        std::optional<Assignment> sol;
        std::string used;
        if (method == "brute") {
            sol = solve_bruteforce(phi);
            used = "brute";
        } else if (method == "auto" || method == "backtrack") {
            sol = solve_backtracking(phi);
            used = "backtrack";
        } else {
            throw usage_error("psat instances support --method=auto|brute|backtrack");
        }
        ctx.out << "satisfiable=" << (sol ? "yes" : "no") << '\n';
        if (sol) ctx.out << "order: " << order_text(*sol, plain_names(phi.variable_count())) << '\n';
        return finish(ctx, "solve", "kind=psat method=" + used + " satisfiable=" + (sol ? "yes" : "no"),
                      sol ? exit_code::steven : exit_code::audrey);
    }

    const auto game = parse_game(text);
    const std::string gkind = objective_kind(game.objective);
    SolveResult res{Player::audrey, std::nullopt, std::nullopt};
    std::string used = method;
    if (const auto *r = std::get_if<RabinObjective>(&game.objective)) {
        res = solve_rabin(game.arena, *r, rabin_method(method), limits);
    } else if (const auto *p = std::get_if<ParityObjective>(&game.objective)) {
        if (method == "auto" || method == "zielonka") {
            res = solve_parity_zielonka(game.arena, *p);
            used = "zielonka";
        } else {
            res = solve_rabin(game.arena, parity_to_rabin(*p), rabin_method(method), limits);
        }
    } else if (const auto *m = std::get_if<MullerObjective>(&game.objective)) {
        if (method != "auto" && method != "lar") throw usage_error("muller games support --method=auto|lar");
        res = solve_muller_lar(game.arena, *m, limits);
        used = "lar";
    } else {
        const auto &g = std::get<GenParityObjective>(game.objective);
        res = solve_rabin(game.arena, genparity_to_rabin(g), rabin_method(method), limits);
    }
    if (!dot.empty()) write_text_file(dot, export_dot(game.arena, game.objective));

    ctx.out << "winner=" << to_string(res.winner) << '\n';
    print_game_witness(ctx, game.arena, res);
    return finish(ctx, "solve", "kind=" + gkind + " method=" + used + " winner=" + to_string(res.winner),
                  res.winner == Player::steven ? exit_code::steven : exit_code::audrey);
}

// Instances flowing through `reduce`.
using AnyInstance = std::variant<CliqueInstance, Formula, GameInstance>;

struct Step
{
    const char *from;
    const char *to;
};

constexpr Step reduction_steps[] = {
    {"clique", "psat"},   {"psat", "rabin"},     {"psat", "genparity"}, {"rabin", "muller"},
    {"rabin", "genparity"}, {"genparity", "rabin"}, {"parity", "rabin"},
};

std::vector<Step>
reduction_path(const std::string &from, const std::string &to)
{
    std::map<std::string, Step> via;
    std::deque<std::string> queue{from};
    std::map<std::string, bool> seen{{from, true}};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (const auto &s : reduction_steps) {
            if (cur != s.from || seen[s.to]) continue;
            seen[s.to] = true;
            via.emplace(s.to, s);
            queue.push_back(s.to);
        }
    }
    if (from == to || !via.count(to)) throw usage_error("no reduction from " + from + " to " + to);
    std::vector<Step> path;
    for (std::string cur = to; cur != from; cur = via.at(cur).from) path.push_back(via.at(cur));
    std::reverse(path.begin(), path.end());
    return path;
}

std::string
kind_of(const AnyInstance &inst)
{
    if (std::holds_alternative<CliqueInstance>(inst)) return "clique";
    if (std::holds_alternative<Formula>(inst)) return "psat";
    return objective_kind(std::get<GameInstance>(inst).objective);
}

AnyInstance
apply_step(const Step &s, const AnyInstance &in)
{
    const std::string from = s.from, to = s.to;
    if (from == "clique") return clique_to_permsat(std::get<CliqueInstance>(in));
    if (from == "psat") {
        const auto &phi = std::get<Formula>(in);
        if (to == "rabin") {
            auto g = permsat_to_rabin(phi);
            return GameInstance{std::move(g.arena), std::move(g.objective)};
        }
        auto g = permsat_to_genparity2(phi);
        return GameInstance{std::move(g.arena), std::move(g.objective)};
    }
    const auto &game = std::get<GameInstance>(in);
    if (from == "rabin") {
        const auto &r = std::get<RabinObjective>(game.objective);
        if (to == "muller") return GameInstance{game.arena, rabin_to_muller(r)};
        return GameInstance{game.arena, rabin_to_genparity(r)};
    }
    if (from == "genparity") return GameInstance{game.arena, genparity_to_rabin(std::get<GenParityObjective>(game.objective))};
    return GameInstance{game.arena, parity_to_rabin(std::get<ParityObjective>(game.objective))};
}

std::string
size_report(const AnyInstance &inst)
{
    std::ostringstream s;
    if (const auto *c = std::get_if<CliqueInstance>(&inst)) {
        s << "k=" << c->size() << " edges=" << c->edges().size();
    } else if (const auto *f = std::get_if<Formula>(&inst)) {
        s << "vars=" << f->variable_count() << " clauses=" << f->clause_count();
    } else {
        const auto &g = std::get<GameInstance>(inst);
        s << "vertices=" << g.arena.vertex_count() << " edges=" << g.arena.edge_count();
        std::visit(
            [&](const auto &o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, RabinObjective>)
                    s << " pairs=" << o.degree();
                else if constexpr (std::is_same_v<T, MullerObjective>)
                    s << " colors=" << o.colour_count();
                else if constexpr (std::is_same_v<T, ParityObjective>)
                    s << " colors=" << o.max_colour();
                else
                    s << " dim=" << o.dimension() << " colors=" << o.max_colour();
            },
            g.objective);
    }
    return s.str();
}

std::string
serialize(const AnyInstance &inst)
{
    if (const auto *c = std::get_if<CliqueInstance>(&inst)) return write_clique(*c);
    if (const auto *f = std::get_if<Formula>(&inst)) return write_permsat(*f);
    const auto &g = std::get<GameInstance>(inst);
    return write_game(g.arena, g.objective);
}

AnyInstance
load(const std::string &text)
{
    switch (detect_kind(text)) {
    case InstanceKind::clique:
        return parse_clique(text);
    case InstanceKind::permsat:
        return parse_permsat(text);
    default:
        return parse_game(text);
    }
}

int
cmd_reduce(Context &ctx, const std::string &from, const std::string &to, const std::string &in_path,
           const std::string &out_path, const std::string &dot)
{
    const auto path = reduction_path(from, to);
    AnyInstance inst = load(read_text_file(in_path));
    if (kind_of(inst) != from) throw usage_error("input is a " + kind_of(inst) + " instance, not " + from);
    for (const auto &step : path) {
        inst = apply_step(step, inst);
        ctx.out << step.from << " -> " << step.to << ": " << size_report(inst) << '\n';
    }
    write_text_file(out_path, serialize(inst));
    if (!dot.empty()) {
        const auto *g = std::get_if<GameInstance>(&inst);
        if (!g) throw usage_error("--dot needs a game as the reduction target");
        write_text_file(dot, export_dot(g->arena, g->objective));
    }
    return finish(ctx, "reduce", "from=" + from + " to=" + to + " " + size_report(inst), exit_code::success);
}

int
cmd_check_chain(Context &ctx, const std::string &file, int samples, std::uint64_t seed, int k,
                const std::vector<double> &densities, bool exhaustive, const std::string &method,
                const SolverLimits &limits)
{
    const RabinMethod rm = rabin_method(method);
    ctx.out << "# seed=" << seed << '\n';
    std::vector<std::pair<std::string, CliqueInstance>> work;
    if (!file.empty()) work.emplace_back(file, parse_clique(read_text_file(file)));
    if (exhaustive) {
        if (k < 1) throw usage_error("--k must be positive");
        std::vector<std::pair<Cell, Cell>> cross;
        for (int a = 0; a < k; a++)
            for (int b = 0; b < k; b++)
                for (int c = a + 1; c < k; c++)
                    for (int d = 0; d < k; d++) cross.push_back({{a, b}, {c, d}});
        if (cross.size() > 20) throw resource_error("exhaustive sweep over 2^" + std::to_string(cross.size()) + " graphs");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross.size()); mask++) {
            std::vector<std::pair<Cell, Cell>> edges;
            for (std::size_t i = 0; i < cross.size(); i++)
                if (mask >> i & 1) edges.push_back(cross[i]);
            work.emplace_back("subset-" + std::to_string(mask), CliqueInstance(k, edges));
        }
    }
    if (samples > 0) {
        if (densities.empty()) throw usage_error("--density needs at least one value");
        for (int s = 0; s < samples; s++) {
            const double d = densities[s % densities.size()];
            const std::uint64_t inst_seed = seed + static_cast<std::uint64_t>(s);
            work.emplace_back("sample-" + std::to_string(s), gen_clique(k, d, inst_seed, false));
        }
    }
    if (work.empty()) throw usage_error("nothing to check: give a file, --samples or --exhaustive");

    int agree = 0;
    for (const auto &[label, inst] : work) {
        const auto r = check_chain(inst, rm, limits);
        const int votes = static_cast<int>(r.clique) + r.satisfiable + r.steven_wins;
        const int matching = std::max(votes, 3 - votes);
        ctx.out << label << ": clique=" << (r.clique ? "yes" : "no") << " psat=" << (r.satisfiable ? "sat" : "unsat")
                << " rabin=" << (r.steven_wins ? "Steven" : "Audrey") << " agree=" << matching << "/3"
                << (r.witness_ok ? "" : " witness=BAD") << '\n';
        if (r.agree()) agree++;
    }
    const bool ok = agree == static_cast<int>(work.size());
    return finish(ctx, "check-chain",
                  "checked=" + std::to_string(work.size()) + " agreed=" + std::to_string(agree) + " seed=" +
                      std::to_string(seed),
                  ok ? exit_code::success : exit_code::disagreement);
}

int
cmd_gen(Context &ctx, const std::string &kind, int k, int n, int m, int beta, int colours, double density,
        std::uint64_t seed, bool planted, const std::string &out_path)
{
    std::string text;
    if (kind == "clique")
        text = write_clique(gen_clique(k, density, seed, planted));
    else if (kind == "psat")
        text = write_permsat(gen_permsat(k, m, beta, seed));
    else if (kind == "rabin") {
        auto g = gen_rabin(n, k, density, seed);
        text = write_game(g.arena, g.objective);
    } else if (kind == "parity") {
        auto g = gen_parity(n, colours, density, seed);
        text = write_game(g.arena, g.objective);
    } else {
        throw usage_error("unknown instance kind '" + kind + "'");
    }
    text = "# generated: kind=" + kind + " seed=" + std::to_string(seed) + '\n' + text;
    const std::string fields = "kind=" + kind + " seed=" + std::to_string(seed);
    ctx.err << "# seed=" << seed << '\n';
    if (out_path.empty() || out_path == "-") {
        // the instance owns stdout here
        ctx.out << text;
        Context side{ctx.err, ctx.err};
        return finish(side, "gen", fields, exit_code::success);
    }
    write_text_file(out_path, text);
    return finish(ctx, "gen", fields, exit_code::success);
}

int
cmd_bench(Context &ctx, int k_min, int k_max, int runs, std::uint64_t seed, const std::string &out_path,
          const SolverLimits &limits)
{
    if (k_min < 2 || k_max < k_min || runs < 1) throw usage_error("bench needs 2 <= kmin <= kmax and runs >= 1");
    const auto csv = bench_csv(run_bench(k_min, k_max, runs, seed, limits));
    ctx.out << "# seed=" << seed << '\n';
    if (out_path.empty() || out_path == "-")
        ctx.out << csv;
    else
        write_text_file(out_path, csv);
    return finish(ctx, "bench", "kmin=" + std::to_string(k_min) + " kmax=" + std::to_string(k_max), exit_code::success);
}

} // namespace

int
run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Context ctx{out, err};
    CLI::App app{"Reductions and solvers for Rabin, Muller and generalized parity games"};
    app.require_subcommand(1);

    SolverLimits limits;
    auto add_limits = [&](CLI::App *cmd) {
        cmd->add_option("--jobs", limits.jobs, "Worker threads for strategy enumeration")->check(CLI::Range(1u, 256u));
        cmd->add_option("--max-strategies", limits.max_strategies, "Rabin brute-force strategy limit");
        cmd->add_option("--max-states", limits.max_product_states, "Appearance-record product state limit");
    };

    std::string file, method = "auto", dot;
    auto *solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("file", file, "Instance file")->required();
    solve->add_option("--method", method, "auto|brute|iar|lar|zielonka|backtrack")
        ->check(CLI::IsMember({"auto", "brute", "iar", "lar", "zielonka", "backtrack"}));
    solve->add_option("--dot", dot, "Write a Graphviz rendering of the game");
    add_limits(solve);

    std::string from, to, in_path, out_path;
    auto *reduce = app.add_subcommand("reduce", "Translate an instance along the reduction chain");
    const std::vector<std::string> kinds{"clique", "psat", "rabin", "muller", "genparity", "parity"};
    reduce->add_option("--from", from)->required()->check(CLI::IsMember(kinds));
    reduce->add_option("--to", to)->required()->check(CLI::IsMember(kinds));
    reduce->add_option("in", in_path)->required();
    reduce->add_option("out", out_path)->required();
    reduce->add_option("--dot", dot, "Write a Graphviz rendering of the resulting game");

    int samples = 0, k = 2;
    std::uint64_t seed = 1;
    std::vector<double> densities{0.0, 0.3, 0.6, 1.0};
    bool exhaustive = false;
    std::string chain_file;
    auto *chain = app.add_subcommand("check-chain", "Cross-check clique, permutation SAT and Rabin verdicts");
    chain->add_option("file", chain_file, "Clique instance file");
    chain->add_option("--samples", samples, "Random instances to generate")->check(CLI::NonNegativeNumber);
    chain->add_option("--seed", seed, "Seed of the first random instance");
    chain->add_option("--k", k, "Grid size for generated instances")->check(CLI::Range(1, 64));
    chain->add_option("--density", densities, "Edge densities, used round-robin")->check(CLI::Range(0.0, 1.0));
    chain->add_flag("--exhaustive", exhaustive, "Check every cross-row edge subset of the k x k grid");
    chain->add_option("--method", method, "Rabin solver: auto|brute|iar")->check(CLI::IsMember({"auto", "brute", "iar"}));
    add_limits(chain);

    std::string gen_kind;
    int n = 5, m = 4, beta = 4, colours = 4;
    double density = 0.5;
    bool planted = false;
    std::string gen_out;
    auto *gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->add_option("kind", gen_kind, "clique|psat|rabin|parity")
        ->required()
        ->check(CLI::IsMember({"clique", "psat", "rabin", "parity"}));
    gen->add_option("--k", k, "Grid size, variable count, or pair count")->check(CLI::Range(1, 64));
    gen->add_option("--n", n, "Vertex count")->check(CLI::Range(1, 100000));
    gen->add_option("--m", m, "Clause count")->check(CLI::Range(0, 100000));
    gen->add_option("--beta", beta, "Maximum clause width")->check(CLI::Range(1, 64));
    gen->add_option("--colors", colours, "Parity colour bound")->check(CLI::Range(1, 1000));
    gen->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed);
    gen->add_flag("--planted", planted, "Plant a one-per-row clique");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    int k_min = 4, k_max = 8, runs = 5;
    std::string bench_out;
    auto *bench = app.add_subcommand("bench", "Time the permutation brute force and the IAR solver over k");
    bench->add_option("--kmin", k_min);
    bench->add_option("--kmax", k_max);
    bench->add_option("--runs", runs);
    bench->add_option("--seed", seed);
    bench->add_option("-o,--output", bench_out, "CSV file (default stdout)");
    add_limits(bench);

    std::vector<const char *> argv{"rabinchain"};
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return finish(ctx, "usage", "", exit_code::usage);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (*solve) return cmd_solve(ctx, file, method, dot, limits);
        if (*reduce) return cmd_reduce(ctx, from, to, in_path, out_path, dot);
        if (*chain)
            return cmd_check_chain(ctx, chain_file, samples, seed, k, densities, exhaustive, method, limits);
        if (*gen) return cmd_gen(ctx, gen_kind, k, n, m, beta, colours, density, seed, planted, gen_out);
        return cmd_bench(ctx, k_min, k_max, runs, seed, bench_out, limits);
    } catch (const usage_error &e) {
        err << "usage error: " << e.what() << '\n';
        return finish(ctx, command, "error=usage", exit_code::usage);
    } catch (const resource_error &e) {
        err << "resource limit: " << e.what() << '\n';
        return finish(ctx, command, "error=resource", exit_code::resource);
    } catch (const error &e) {
        err << "input error: " << e.what() << '\n';
        return finish(ctx, command, "error=input", exit_code::input);
    }
}

} // namespace rc
