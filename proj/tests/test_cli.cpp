#include "doctest.h"

#include "gfchase/cli.hpp"
#include "support.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace gfchase;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "gfchase");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        out.push_back(l);
    return out;
}

// CSV text with the wall-time column blanked.
std::string without_wall_time(const std::string& csv)
{
    std::string out;
    for (const auto& l : lines(csv)) {
        if (!l.empty() && l[0] != '#' && l.find("wall_ms") == std::string::npos)
            out += l.substr(0, l.rfind(',')) + "\n";
        else
            out += l + "\n";
    }
    return out;
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const std::string path = "/tmp/gfchase_test_" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("sim writes the config line and the header")
{
    const auto r = run_cli({"sim", "--m", "3", "--d", "5", "--sweep", "0.05,0.1", "--trials", "20", "--eta", "3"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0].rfind("# config: ", 0) == 0);
    CHECK(ls[0].find("m=3") != std::string::npos);
    CHECK(ls[1] == "sweep_param,fer,ser,avg_candidates,avg_edges,avg_mults,wall_ms");
    CHECK(ls[2].rfind("0.05,", 0) == 0);
}

TEST_CASE("zero trials give the header only")
{
    const auto r = run_cli({"sim", "--trials", "0"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 2);
}

TEST_CASE("sim output is reproducible and independent of the worker count")
{
    const std::vector<std::string> base{"sim", "--m", "4", "--d", "7", "--sweep", "0.1", "--trials", "60",
                                        "--seed", "7", "--eta", "4", "--r-max", "2"};
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto four = base;
    four.insert(four.end(), {"--jobs", "4"});
    const auto a = run_cli(one);
    const auto b = run_cli(four);
    const auto c = run_cli(one);
    REQUIRE(a.code == 0);
    CHECK(without_wall_time(a.out) == without_wall_time(b.out));
    CHECK(without_wall_time(a.out) == without_wall_time(c.out));
    auto other_seed = base;
    other_seed[10] = "8";
    CHECK(without_wall_time(run_cli(other_seed).out) != without_wall_time(a.out));
}

TEST_CASE("noiseless simulation has no frame errors")
{
    cli::SimConfig cfg;
    cfg.code.m = 3;
    cfg.code.d = 5;
    cfg.sweep = {0.0};
    cfg.trials = 30;
    cfg.chase.eta = 3;
    const auto rows = cli::run_sim(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].fer == 0.0);
    CHECK(rows[0].ser == 0.0);
    CHECK(rows[0].avg_edges == 0.0);
}

TEST_CASE("soft channel simulation runs")
{
    const auto r = run_cli({"sim", "--m", "3", "--d", "5", "--channel", "soft", "--sweep", "0.4", "--trials", "20",
                            "--eta", "3", "--kernel", "C"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 3);
}

TEST_CASE("configuration errors exit with code 2")
{
    CHECK(run_cli({"sim", "--d", "6"}).code == 2);
    CHECK(run_cli({"sim", "--m", "2"}).code == 2);
    CHECK(run_cli({"sim", "--m", "4", "--prim-poly", "0x15"}).code == 2);
    CHECK(run_cli({"sim", "--r-max", "5", "--eta", "4"}).code == 2);
    CHECK(run_cli({"sim", "--kernel", "Q"}).code == 2);
    CHECK(run_cli({"sim", "--sweep", "1.5"}).code == 2);
    CHECK(run_cli({"sim", "--channel", "soft", "--m", "9", "--d", "5"}).code == 2);
    CHECK(run_cli({"sim", "--jobs", "0"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
    const auto r = run_cli({"sim", "--d", "6"});
    CHECK(r.err.find("design distance") != std::string::npos);
}

TEST_CASE("config file sections and flag overrides")
{
    const auto path = temp_file("cfg.ini", "[code]\nm = 3\nd = 5\n[chase]\neta = 3\nkernel = A2\n"
                                           "[channel]\nsweep = 0.05\n[run]\ntrials = 5\nseed = 11\n");
    const auto r = run_cli({"sim", "--config", path});
    REQUIRE(r.code == 0);
    const auto first = lines(r.out)[0];
    CHECK(first.find("kernel=A2") != std::string::npos);
    CHECK(first.find("trials=5") != std::string::npos);
    CHECK(first.find("seed=11") != std::string::npos);
    const auto o = run_cli({"sim", "--config", path, "--kernel", "B", "--trials", "3"});
    REQUIRE(o.code == 0);
    CHECK(lines(o.out)[0].find("kernel=B") != std::string::npos);
    CHECK(lines(o.out)[0].find("trials=3") != std::string::npos);

    const auto bad = temp_file("bad.ini", "[code]\nwidth = 3\n");
    const auto b = run_cli({"sim", "--config", bad});
    CHECK(b.code == 2);
    CHECK(b.err.find("code.width") != std::string::npos);
    CHECK(run_cli({"sim", "--config", "/nonexistent/x.ini"}).code == 2);
    std::remove(path.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("decode: hard-decision path")
{
    std::mt19937_64 rng(81);
    const GrsCode c = testsupport::code(4, 7);
    auto y = testsupport::random_codeword(c, rng);
    const auto cw = y;
    y[2] ^= 5;
    std::string rx;
    for (auto v : y)
        rx += (rx.empty() ? "" : ",") + std::to_string(v);
    const auto r = run_cli({"decode", "--received", rx});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("hd: success") != std::string::npos);
    std::string cws;
    for (auto v : cw)
        cws += (cws.empty() ? "" : ",") + std::to_string(v);
    CHECK(r.out.find("codeword: " + cws) != std::string::npos);
}

TEST_CASE("decode: Chase path with reliabilities and alternatives")
{
    std::mt19937_64 rng(82);
    const GrsCode c = testsupport::code(4, 7);
    const auto cw = testsupport::random_codeword(c, rng);
    auto y = cw;
    // Four errors (t + 1); the one at coordinate 5 is flagged unreliable with
    // the right alternative.
    for (unsigned i : {1u, 5u, 8u, 12u})
        y[i] ^= 3;
    std::string rx, rel, alt;
    for (unsigned i = 0; i < c.n(); ++i) {
        rx += (i ? "," : "") + std::to_string(y[i]);
        rel += (i ? "," : "") + std::string(i == 5 ? "0.1" : i == 7 ? "0.2" : "0.9");
        alt += (i ? "," : "") + (i == 5 ? std::to_string(cw[5]) + "/" + std::to_string(cw[5] ^ 1) : std::string("-"));
    }
    const auto r = run_cli({"decode", "--received", rx, "--reliability", rel, "--alternatives", alt, "--eta", "2",
                            "--mu", "3", "--r-max", "1", "--exhaustive"});
    CHECK(r.out.find("hd: failure") != std::string::npos);
    std::string cws;
    for (auto v : cw)
        cws += (cws.empty() ? "" : ",") + std::to_string(v);
    CHECK(r.out.find(cws) != std::string::npos);
    CHECK(r.out.find("unreliable: 5{") != std::string::npos);
}

TEST_CASE("decode: failure and malformed input")
{
    // Far from every codeword and nothing flagged: no candidates.
    std::string rx;
    for (unsigned i = 0; i < 7; ++i)
        rx += (i ? "," : "") + std::to_string(i % 2 ? 7 : 1);
    const auto r = run_cli({"decode", "--m", "3", "--d", "5", "--received", rx, "--eta", "1", "--r-max", "1"});
    if (r.out.find("candidates: 0") != std::string::npos)
        CHECK(r.code == 1);
    else
        CHECK(r.code == 0);
    CHECK(run_cli({"decode", "--m", "3", "--d", "5", "--received", "1,2,3"}).code == 2);
    CHECK(run_cli({"decode", "--m", "3", "--d", "5", "--received", "1,2,3,4,5,6,9"}).code == 2);
    CHECK(run_cli({"decode", "--m", "3", "--d", "5", "--received", "1,2,3,4,5,6,x"}).code == 2);
    CHECK(run_cli({"decode"}).code == 2);
}

TEST_CASE("bench reports bounds")
{
    const auto r = run_cli({"bench", "--m", "4", "--d", "7", "--kernel", "B", "--r-max", "2", "--eta", "4",
                            "--trials", "20"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[1] == "depth,measured_max,bound,all_nonzero_edges,status");
    CHECK(ls[2].find(",180,") != std::string::npos); // 12 n
    CHECK(r.out.find("VIOLATION") == std::string::npos);
    CHECK(cli::edge_bound(KernelKind::A2, 3, 15, 2) == 12 * 3 + 12 * 2 + 3);
    CHECK(cli::edge_bound(KernelKind::C, 3, 15, 2) == 43);
}

TEST_CASE("symbol parsing")
{
    const FieldCtx f(3, 0xB);
    CHECK(cli::parse_symbols("1, 0x7 3", f) == std::vector<Elem>{1, 7, 3});
    CHECK_THROWS_AS(cli::parse_symbols("8", f), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_symbols("-1", f), cli::ConfigError);
}
