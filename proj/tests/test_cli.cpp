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
#include <doctest.h>

#include <regex>
#include <sstream>

#include "rabinchain/cli.hpp"
#include "rabinchain/instances.hpp"
#include "support.hpp"

using namespace rc;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run
run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// The last summary line, wherever it was printed, must carry the exit code.
int
summary_exit(const Run &r)
{
    static const std::regex re("summary: command=\\S+.* exit=(\\d+)");
    int found = -1;
    for (const std::string *s : {&r.err, &r.out}) {
        for (auto it = std::sregex_iterator(s->begin(), s->end(), re); it != std::sregex_iterator(); ++it)
            found = std::stoi((*it)[1]);
    }
    return found;
}

Run
checked(const std::vector<std::string> &args)
{
    Run r = run(args);
    CHECK(summary_exit(r) == r.code);
    return r;
}

std::string
put(const std::filesystem::path &dir, const std::string &name, const std::string &text)
{
    const auto p = (dir / name).string();
    write_text_file(p, text);
    return p;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve")
{
    const auto dir = test::scratch_dir("cli-solve");
    const auto psat1 = put(dir, "one.psat", "psat vars=2 alpha=2 beta=1\nclause 1<2\n");
    const auto psat2 = put(dir, "two.psat", "psat vars=2 alpha=2 beta=1\nclause 1<2\nclause 2<1\n");
    const auto game1 = (dir / "one.game").string();
    REQUIRE(checked({"reduce", "--from", "psat", "--to", "rabin", psat1, game1}).code == exit_code::success);

    const auto s = checked({"solve", game1, "--method", "brute"});
    CHECK(s.code == exit_code::steven);
    CHECK(s.out.find("winner=Steven") != std::string::npos);
    CHECK(s.out.find("[C_1] -> [x_1<x_2]") != std::string::npos);

    CHECK(checked({"solve", psat2}).code == exit_code::audrey);
    CHECK(checked({"solve", psat1, "--method", "brute"}).code == exit_code::steven);

    const auto parity = put(dir, "p.game", write_game(gen_parity(4, 3, 0.5, 1).arena, gen_parity(4, 3, 0.5, 1).objective));
    CHECK(checked({"solve", parity, "--method", "lar"}).code == exit_code::usage);
    CHECK(checked({"solve", parity}).code >= exit_code::steven);

    const auto dot = (dir / "g.dot").string();
    CHECK(checked({"solve", game1, "--dot", dot}).code == exit_code::steven);
    CHECK(read_text_file(dot).find("digraph") == 0);

    CHECK(checked({"solve", (dir / "missing").string()}).code == exit_code::input);
    const auto broken = put(dir, "broken.game", "game rabin vertices=1 pairs=1\nvertex 0 owner=Q\n");
    const auto b = checked({"solve", broken});
    CHECK(b.code == exit_code::input);
    CHECK(b.err.find("line 2") != std::string::npos);

    const auto big = gen_rabin(30, 3, 0.5, 2);
    const auto bigf = put(dir, "big.game", write_game(big.arena, big.objective));
    CHECK(checked({"solve", bigf, "--method", "brute"}).code == exit_code::resource);
    CHECK(checked({"solve", bigf, "--method", "brute", "--jobs", "0"}).code == exit_code::usage);
    CHECK(checked({"frobnicate"}).code == exit_code::usage);
}

TEST_CASE("solve output does not depend on the job count")
{
    const auto dir = test::scratch_dir("cli-jobs");
    for (std::uint64_t seed = 0; seed < 10; seed++) {
        const auto g = gen_rabin(7, 2, 0.5, seed);
        const auto f = put(dir, "g.game", write_game(g.arena, g.objective));
        CHECK(run({"solve", f, "--method", "brute"}).out == run({"solve", f, "--method", "brute", "--jobs", "4"}).out);
    }
}

TEST_CASE("reduce")
{
    const auto dir = test::scratch_dir("cli-reduce");
    const auto clique = put(dir, "empty.kxk", "kxk 2\n");
    const auto out = (dir / "out.psat").string();
    const auto r = checked({"reduce", "--from", "clique", "--to", "psat", clique, out});
    CHECK(r.out.find("vars=5 clauses=10") != std::string::npos);
    CHECK(parse_permsat(read_text_file(out)).clause_count() == 10);

    const auto psat = put(dir, "f.psat", "psat vars=3 alpha=2 beta=2\nclause 1<2 | 2<3\nclause 3<1\n");
    CHECK(checked({"reduce", "--from", "psat", "--to", "rabin", psat, out}).out.find("vertices=9") !=
          std::string::npos);

    CHECK(checked({"reduce", "--from", "psat", "--to", "muller", psat, out}).code == exit_code::success);
    const auto m = parse_game(read_text_file(out));
    CHECK(std::get<MullerObjective>(m.objective).colour_count() == 6);

    CHECK(checked({"reduce", "--from", "rabin", "--to", "clique", psat, out}).code == exit_code::usage);
    CHECK(checked({"reduce", "--from", "clique", "--to", "psat", psat, out}).code == exit_code::usage);
}

TEST_CASE("check-chain")
{
    const auto all = checked({"check-chain", "--exhaustive", "--k", "2"});
    CHECK(all.code == exit_code::success);
    CHECK(all.out.find("checked=16 agreed=16") != std::string::npos);
    CHECK(all.out.find("# seed=") == 0);

    const auto dir = test::scratch_dir("cli-chain");
    const auto planted = put(dir, "p.kxk", write_clique(gen_clique(3, 0.1, 5, true)));
    const auto p = checked({"check-chain", planted});
    CHECK(p.code == exit_code::success);
    CHECK(p.out.find("clique=yes psat=sat rabin=Steven agree=3/3") != std::string::npos);

    const auto none = put(dir, "n.kxk", "kxk 2\n");
    CHECK(checked({"check-chain", none}).out.find("clique=no psat=unsat rabin=Audrey agree=3/3") !=
          std::string::npos);
    CHECK(checked({"check-chain"}).code == exit_code::usage);
}

TEST_CASE("chain report agreement")
{
    ChainReport r{true, true, true, true};
    CHECK(r.agree());
    r.steven_wins = false;
    CHECK_FALSE(r.agree());
    r = {false, false, false, false};
    CHECK_FALSE(r.agree());
}

TEST_CASE("gen is reproducible")
{
    const auto dir = test::scratch_dir("cli-gen");
    const auto a = (dir / "a").string(), b = (dir / "b").string();
    for (const char *kind : {"clique", "psat", "rabin", "parity"}) {
        CHECK(checked({"gen", kind, "--seed", "7", "-o", a}).code == exit_code::success);
        CHECK(checked({"gen", kind, "--seed", "7", "-o", b}).code == exit_code::success);
        CHECK(read_text_file(a) == read_text_file(b));
        CHECK(read_text_file(a).find("seed=7") != std::string::npos);
    }
    const auto s = checked({"gen", "psat", "--k", "3", "--m", "2"});
    CHECK(parse_permsat(s.out).clause_count() == 2);
    CHECK(checked({"gen", "psat", "--k", "1"}).code == exit_code::input);
}

TEST_CASE("bench")
{
    const auto r = checked({"bench", "--kmin", "3", "--kmax", "4", "--runs", "2"});
    CHECK(r.code == exit_code::success);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) rows++;
    CHECK(rows == 4);
    CHECK(r.out.find("k,method,runs,mean_seconds,median_seconds") != std::string::npos);
    CHECK(checked({"bench", "--kmin", "5", "--kmax", "4"}).code == exit_code::usage);
}

TEST_SUITE_END();
