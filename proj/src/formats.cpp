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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "rabinchain/error.hpp"
#include "rabinchain/instances.hpp"

namespace rc {
namespace {

constexpr int max_vertices = 100'000;
constexpr long max_colour_entries = 1'000'000;
constexpr int max_variables = 100'000;
constexpr int max_grid = 64;

struct Line
{
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<Line>
tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty() || number == 0) {
        number++;
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) i++;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') j++;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (text.empty()) break;
    }
    return lines;
}

int
to_int(std::string_view s, int line, int lo, int hi, const char *what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw parse_error(line, std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
    if (value < lo || value > hi)
        throw parse_error(line, std::string(what) + " " + std::to_string(value) + " outside " + std::to_string(lo) +
                                    ".." + std::to_string(hi));
    return value;
}

std::vector<std::string_view>
split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    while (true) {
        const auto p = s.find(sep);
        parts.push_back(s.substr(0, p));
        if (p == std::string_view::npos) break;
        s = s.substr(p + 1);
    }
    return parts;
}

/// Comma separated integers; "-" or an empty value is the empty list.
std::vector<int>
int_list(std::string_view s, int line, int lo, int hi, const char *what)
{
    std::vector<int> out;
    if (s.empty() || s == "-") return out;
    for (auto part : split(s, ',')) out.push_back(to_int(part, line, lo, hi, what));
    return out;
}

std::string
join(const std::vector<int> &values, int shift = 0)
{
    if (values.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < values.size(); i++) {
        if (i) s += ',';
        s += std::to_string(values[i] + shift);
    }
    return s;
}

/// Parses key=value tokens starting at `from`; every key must be known and
/// appear at most once.
std::map<std::string, std::string_view, std::less<>>
keyed(const Line &line, std::size_t from, std::initializer_list<const char *> known)
{
    std::map<std::string, std::string_view, std::less<>> out;
    for (std::size_t i = from; i < line.tokens.size(); i++) {
        const auto tok = line.tokens[i];
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) throw parse_error(line.number, "expected key=value, got '" + std::string(tok) + "'");
        std::string key(tok.substr(0, eq));
        if (std::find_if(known.begin(), known.end(), [&](const char *k) { return key == k; }) == known.end())
            throw parse_error(line.number, "unknown key '" + key + "'");
        if (!out.emplace(key, tok.substr(eq + 1)).second) throw parse_error(line.number, "repeated key '" + key + "'");
    }
    return out;
}

std::string_view
required(const std::map<std::string, std::string_view, std::less<>> &kv, const char *key, int line)
{
    auto it = kv.find(key);
    if (it == kv.end()) throw parse_error(line, std::string("missing ") + key + "=");
    return it->second;
}

void
expect_arity(const Line &line, std::size_t n)
{
    if (line.tokens.size() != n)
        throw parse_error(line.number, "'" + std::string(line.tokens[0]) + "' expects " + std::to_string(n - 1) +
                                           " arguments");
}

} // namespace

InstanceKind
detect_kind(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty()) throw parse_error(1, "empty input");
    const auto head = lines.front().tokens.front();
    if (head == "kxk") return InstanceKind::clique;
    if (head == "psat") return InstanceKind::permsat;
    if (head == "game") return InstanceKind::game;
    throw parse_error(lines.front().number, "unknown header '" + std::string(head) + "'");
}

CliqueInstance
parse_clique(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "kxk") throw parse_error(lines.empty() ? 1 : lines[0].number, "expected 'kxk <k>' header");
    expect_arity(lines[0], 2);
    const int k = to_int(lines[0].tokens[1], lines[0].number, 1, max_grid, "grid size");

    std::vector<std::pair<Cell, Cell>> edges;
    for (std::size_t i = 1; i < lines.size(); i++) {
        const auto &l = lines[i];
        if (l.tokens[0] != "edge") throw parse_error(l.number, "unexpected '" + std::string(l.tokens[0]) + "'");
        expect_arity(l, 5);
        int c[4];
        for (int t = 0; t < 4; t++) c[t] = to_int(l.tokens[t + 1], l.number, 1, k, "grid coordinate") - 1;
        const Cell a{c[0], c[1]}, b{c[2], c[3]};
        if (a == b) throw parse_error(l.number, "self-edge");
        edges.push_back({a, b});
    }
    return CliqueInstance(k, edges);
}

std::string
write_clique(const CliqueInstance &instance)
{
    std::ostringstream out;
    out << "kxk " << instance.size() << '\n';
    for (auto [a, b] : instance.edges())
        out << "edge " << a.row + 1 << ' ' << a.col + 1 << ' ' << b.row + 1 << ' ' << b.col + 1 << '\n';
    return out.str();
}

Formula
parse_permsat(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "psat")
        throw parse_error(lines.empty() ? 1 : lines[0].number, "expected 'psat vars=<k> alpha=<a> beta=<b>' header");
    const auto &h = lines[0];
    const auto kv = keyed(h, 1, {"vars", "alpha", "beta"});
    const int k = to_int(required(kv, "vars", h.number), h.number, 1, max_variables, "vars");
    const int alpha = to_int(required(kv, "alpha", h.number), h.number, 2, max_variables, "alpha");
    const int beta = to_int(required(kv, "beta", h.number), h.number, 1, max_variables, "beta");

    std::vector<Clause> clauses;
    for (std::size_t i = 1; i < lines.size(); i++) {
        const auto &l = lines[i];
        if (l.tokens[0] != "clause") throw parse_error(l.number, "unexpected '" + std::string(l.tokens[0]) + "'");
        std::string body;
        for (std::size_t t = 1; t < l.tokens.size(); t++) body += l.tokens[t];
        if (body.empty()) throw parse_error(l.number, "empty clause");
        Clause clause;
        for (auto lit_text : split(body, '|')) {
            if (lit_text.empty()) throw parse_error(l.number, "empty literal");
            ChainLiteral lit;
            for (auto v : split(lit_text, '<')) lit.push_back(to_int(v, l.number, 1, k, "variable") - 1);
            if (lit.size() < 2) throw parse_error(l.number, "literal needs at least two variables");
            clause.push_back(std::move(lit));
        }
        clauses.push_back(std::move(clause));
    }
    try {
        return Formula(k, alpha, beta, std::move(clauses));
    } catch (const validation_error &e) {
        throw validation_error(std::string("invalid formula: ") + e.what());
    }
}

std::string
write_permsat(const Formula &formula)
{
    std::ostringstream out;
    out << "psat vars=" << formula.variable_count() << " alpha=" << formula.alpha() << " beta=" << formula.beta()
        << '\n';
    for (const auto &clause : formula.clauses()) {
        out << "clause";
        for (std::size_t i = 0; i < clause.size(); i++) {
            out << (i ? " | " : " ");
            for (std::size_t j = 0; j < clause[i].size(); j++) out << (j ? "<" : "") << clause[i][j] + 1;
        }
        out << '\n';
    }
    return out.str();
}

GameInstance
parse_game(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "game" || lines[0].tokens.size() < 2)
        throw parse_error(lines.empty() ? 1 : lines[0].number, "expected 'game <kind> vertices=<n> ...' header");
    const auto &h = lines[0];
    const std::string kind(h.tokens[1]);
    const auto kv = keyed(h, 2, {"vertices", "pairs", "colors", "dim", "family"});
    const int n = to_int(required(kv, "vertices", h.number), h.number, 1, max_vertices, "vertices");

    auto forbid = [&](std::initializer_list<const char *> keys) {
        for (const char *key : keys)
            if (kv.count(key)) throw parse_error(h.number, std::string("key ") + key + " is not valid for " + kind);
    };
    int pair_count = 0, colours = 0, dim = 1;
    bool rule_family = false;
    if (kind == "rabin") {
        forbid({"colors", "dim", "family"});
        pair_count = to_int(required(kv, "pairs", h.number), h.number, 1, 64, "pairs");
    } else if (kind == "parity") {
        forbid({"pairs", "dim", "family"});
        colours = to_int(required(kv, "colors", h.number), h.number, 1, 1'000'000, "colors");
    } else if (kind == "genparity") {
        forbid({"pairs", "family"});
        colours = to_int(required(kv, "colors", h.number), h.number, 1, 1'000'000, "colors");
        dim = to_int(required(kv, "dim", h.number), h.number, 1, 64, "dim");
        if (static_cast<long>(n) * dim > max_colour_entries) throw validation_error("too many colour entries");
    } else if (kind == "muller") {
        forbid({"pairs", "dim"});
        colours = to_int(required(kv, "colors", h.number), h.number, 1, max_set_colours, "colors");
        if (auto it = kv.find("family"); it != kv.end()) {
            if (it->second != "rabin") throw parse_error(h.number, "family= only accepts 'rabin'");
            rule_family = true;
        }
    } else {
        throw parse_error(h.number, "unknown game kind '" + kind + "'");
    }

    std::vector<Player> owner(n);
    std::vector<char> declared(n, 0);
    std::vector<std::string> names(n);
    bool any_name = false;
    std::vector<int> vertex_colours(static_cast<std::size_t>(n) * dim, 0);
    std::vector<ColourSet> colour_sets(kind == "muller" ? n : 0, 0);
    std::vector<Edge> edges;
    std::optional<int> init;
    std::vector<RabinPair> pairs(pair_count);
    std::vector<char> pair_seen(pair_count, 0);
    ExplicitFamily family;

    for (std::size_t i = 1; i < lines.size(); i++) {
        const auto &l = lines[i];
        const auto cmd = l.tokens[0];
        if (cmd == "vertex") {
            if (l.tokens.size() < 2) throw parse_error(l.number, "vertex needs an id");
            const int v = to_int(l.tokens[1], l.number, 0, n - 1, "vertex id");
            if (declared[v]) throw parse_error(l.number, "vertex " + std::to_string(v) + " declared twice");
            declared[v] = 1;
            const auto vkv = keyed(l, 2, {"owner", "colors", "name"});
            const auto o = required(vkv, "owner", l.number);
            if (o == "S")
                owner[v] = Player::steven;
            else if (o == "A")
                owner[v] = Player::audrey;
            else
                throw parse_error(l.number, "owner must be S or A");
            if (auto it = vkv.find("name"); it != vkv.end()) {
                if (it->second.empty()) throw parse_error(l.number, "empty name");
                names[v] = std::string(it->second);
                any_name = true;
            }
            const bool wants_colours = kind != "rabin";
            auto cit = vkv.find("colors");
            if (wants_colours != (cit != vkv.end()))
                throw parse_error(l.number, wants_colours ? "missing colors=" : "colors= not valid for rabin games");
            if (kind == "muller") {
                for (int c : int_list(cit->second, l.number, 1, colours, "colour")) colour_sets[v] |= ColourSet{1} << (c - 1);
            } else if (wants_colours) {
                auto cs = int_list(cit->second, l.number, 1, colours, "colour");
                if (static_cast<int>(cs.size()) != dim)
                    throw parse_error(l.number, "expected " + std::to_string(dim) + " colour(s)");
                std::copy(cs.begin(), cs.end(), vertex_colours.begin() + static_cast<std::ptrdiff_t>(v) * dim);
            }
        } else if (cmd == "edge") {
            expect_arity(l, 3);
            edges.emplace_back(to_int(l.tokens[1], l.number, 0, n - 1, "vertex id"),
                               to_int(l.tokens[2], l.number, 0, n - 1, "vertex id"));
        } else if (cmd == "init") {
            expect_arity(l, 2);
            if (init) throw parse_error(l.number, "repeated init");
            init = to_int(l.tokens[1], l.number, 0, n - 1, "vertex id");
        } else if (cmd == "pair") {
            if (kind != "rabin") throw parse_error(l.number, "pair lines are only valid for rabin games");
            if (l.tokens.size() < 2) throw parse_error(l.number, "pair needs an index");
            const int p = to_int(l.tokens[1], l.number, 1, pair_count, "pair index") - 1;
            if (pair_seen[p]) throw parse_error(l.number, "pair " + std::to_string(p + 1) + " given twice");
            pair_seen[p] = 1;
            const auto pkv = keyed(l, 2, {"G", "B"});
            pairs[p].good = int_list(required(pkv, "G", l.number), l.number, 0, n - 1, "vertex id");
            pairs[p].bad = int_list(required(pkv, "B", l.number), l.number, 0, n - 1, "vertex id");
        } else if (cmd == "family") {
            if (kind != "muller" || rule_family) throw parse_error(l.number, "family lines need an explicit muller family");
            expect_arity(l, 2);
            ColourSet s = 0;
            for (int c : int_list(l.tokens[1], l.number, 1, colours, "colour")) s |= ColourSet{1} << (c - 1);
            family.members.push_back(s);
        } else {
            throw parse_error(l.number, "unexpected '" + std::string(cmd) + "'");
        }
    }

    for (int v = 0; v < n; v++)
        if (!declared[v]) throw validation_error("header declares " + std::to_string(n) + " vertices, vertex " +
                                                 std::to_string(v) + " is missing");
    for (int p = 0; p < pair_count; p++)
        if (!pair_seen[p]) throw validation_error("header declares " + std::to_string(pair_count) + " pairs, pair " +
                                                  std::to_string(p + 1) + " is missing");
    if (!init) throw validation_error("missing init line");
    if (any_name)
        for (int v = 0; v < n; v++)
            if (names[v].empty()) names[v] = std::to_string(v);
    if (!any_name) names.clear();

    Arena arena(std::move(owner), edges, *init, std::move(names));
    if (kind == "rabin") return {std::move(arena), RabinObjective(n, std::move(pairs))};
    if (kind == "parity") return {std::move(arena), ParityObjective(colours, std::move(vertex_colours))};
    if (kind == "genparity") return {std::move(arena), GenParityObjective(dim, colours, std::move(vertex_colours))};
    if (rule_family) {
        if (colours % 2) throw validation_error("rabin family needs an even colour count");
        return {std::move(arena), MullerObjective(colours, std::move(colour_sets), RabinRuleFamily{colours / 2})};
    }
    return {std::move(arena), MullerObjective(colours, std::move(colour_sets), std::move(family))};
}

namespace {

std::vector<int>
set_members(ColourSet s)
{
    std::vector<int> out;
    for (int c = 0; c < max_set_colours; c++)
        if (s >> c & 1) out.push_back(c + 1);
    return out;
}

} // namespace

std::string
write_game(const Arena &arena, const Objective &objective)
{
    const int n = arena.vertex_count();
    if (objective_vertex_count(objective) != n) throw validation_error("objective and arena disagree on the vertex count");
    std::ostringstream out;
    out << "game " << objective_kind(objective) << " vertices=" << n;
    std::visit(
        [&](const auto &o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, RabinObjective>) {
                out << " pairs=" << o.degree();
            } else if constexpr (std::is_same_v<T, ParityObjective>) {
                out << " colors=" << o.max_colour();
            } else if constexpr (std::is_same_v<T, GenParityObjective>) {
                out << " dim=" << o.dimension() << " colors=" << o.max_colour();
            } else {
                out << " colors=" << o.colour_count();
                if (std::holds_alternative<RabinRuleFamily>(o.family())) out << " family=rabin";
            }
        },
        objective);
    out << '\n';

    for (int v = 0; v < n; v++) {
        out << "vertex " << v << " owner=" << (arena.owner(v) == Player::steven ? 'S' : 'A');
        if (const auto *p = std::get_if<ParityObjective>(&objective)) out << " colors=" << p->colour(v);
        if (const auto *g = std::get_if<GenParityObjective>(&objective)) {
            std::vector<int> cs;
            for (int t = 0; t < g->dimension(); t++) cs.push_back(g->colour(v, t));
            out << " colors=" << join(cs);
        }
        if (const auto *m = std::get_if<MullerObjective>(&objective)) out << " colors=" << join(set_members(m->colours(v)));
        if (arena.has_names()) {
            const auto &name = arena.name(v);
            if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos)
                throw validation_error("vertex name '" + name + "' cannot be written");
            out << " name=" << name;
        }
        out << '\n';
    }
    for (auto [u, v] : arena.edges()) out << "edge " << u << ' ' << v << '\n';
    out << "init " << arena.initial() << '\n';
    if (const auto *r = std::get_if<RabinObjective>(&objective))
        for (int i = 0; i < r->degree(); i++)
            out << "pair " << i + 1 << " G=" << join(r->pairs()[i].good) << " B=" << join(r->pairs()[i].bad) << '\n';
    if (const auto *m = std::get_if<MullerObjective>(&objective))
        if (const auto *ex = std::get_if<ExplicitFamily>(&m->family()))
            for (ColourSet s : ex->members) out << "family " << join(set_members(s)) << '\n';
    return out.str();
}

std::string
read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void
write_text_file(const std::string &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path + "'");
    out << text;
    if (!out) throw error("write to '" + path + "' failed");
}

} // namespace rc
