#include "gfchase/cli.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace gfchase::cli {

namespace {

std::string hex(std::uint64_t v)
{
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

std::uint64_t parse_uint(const std::string& key, const std::string& text)
{
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(text, &pos, 0);
        if (pos != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + text + "'");
    }
}

double parse_double(const std::string& key, const std::string& text)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& text)
{
    if (text == "1" || text == "true" || text == "yes" || text == "on")
        return true;
    if (text == "0" || text == "false" || text == "no" || text == "off")
        return false;
    throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

ChannelKind parse_channel(const std::string& text)
{
    if (text == "symmetric")
        return ChannelKind::Symmetric;
    if (text == "soft")
        return ChannelKind::Soft;
    throw ConfigError("channel.kind: expected 'symmetric' or 'soft', got '" + text + "'");
}

const char* channel_name(ChannelKind k) { return k == ChannelKind::Symmetric ? "symmetric" : "soft"; }

KernelKind parse_kernel_key(const std::string& text)
{
    try {
        return parse_kernel(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("chase.kernel: ") + e.what());
    }
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::vector<double> parse_sweep(const std::vector<std::string>& items)
{
    std::vector<double> out;
    for (const auto& item : items)
        for (const auto& tok : split_list(item))
            out.push_back(parse_double("channel.sweep", tok));
    return out;
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : ",") + x;
    return s;
}

} // namespace

GrsCode CodeSpec::build(std::uint64_t seed) const
{
    if (m < 3 || m > 16)
        throw ConfigError("code.m: must be in [3, 16], got " + std::to_string(m));
    const std::uint32_t poly = prim_poly ? prim_poly : default_prim_poly(m);
    if (poly >> m != 1 || !is_irreducible(poly, m))
        throw ConfigError("code.prim_poly: " + hex(poly) + " is not an irreducible polynomial of degree " +
                          std::to_string(m));
    auto field = std::make_shared<const FieldCtx>(m, poly);
    std::vector<Elem> a;
    if (multipliers == "random") {
        std::mt19937_64 rng = trial_rng(seed, ~std::uint64_t{0});
        std::uniform_int_distribution<Elem> nz(1, field->q() - 1);
        a.resize(field->order());
        for (auto& x : a)
            x = nz(rng);
    } else if (multipliers != "ones") {
        try {
            a = parse_symbols(multipliers, *field);
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("code.multipliers: ") + e.what());
        }
    }
    try {
        return GrsCode(field, d, std::move(a));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("code: ") + e.what());
    }
}

void SimConfig::validate() const
{
    try {
        chase.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("chase: ") + e.what());
    }
    if (jobs < 1)
        throw ConfigError("run.jobs: must be at least 1");
    if (sweep.empty() && trials > 0)
        throw ConfigError("channel.sweep: at least one value is required");
    for (double x : sweep) {
        if (channel == ChannelKind::Symmetric && !(x >= 0.0 && x <= 1.0))
            throw ConfigError("channel.sweep: symmetric error probability must be in [0, 1]");
        if (channel == ChannelKind::Soft && !(x > 0.0))
            throw ConfigError("channel.sweep: soft noise deviation must be positive");
    }
    if (channel == ChannelKind::Soft && (code.m > 8))
        throw ConfigError("channel.kind: the soft channel supports m <= 8");
}

std::string SimConfig::canonical() const
{
    std::ostringstream os;
    os << "m=" << code.m << " prim_poly=" << hex(code.prim_poly ? code.prim_poly : default_prim_poly(code.m))
       << " d=" << code.d << " multipliers=" << code.multipliers << " channel=" << channel_name(channel)
       << " sweep=";
    for (std::size_t i = 0; i < sweep.size(); ++i)
        os << (i ? ";" : "") << sweep[i];
    os << " eta=" << chase.eta << " mu=" << chase.mu << " r_max=" << chase.r_max
       << " kernel=" << kernel_name(chase.kernel) << " exhaustive=" << chase.exhaustive << " gmd=" << chase.gmd
       << " trials=" << trials << " seed=" << seed;
    return os.str();
}

std::vector<Elem> parse_symbols(const std::string& text, const FieldCtx& f)
{
    std::vector<Elem> out;
    for (const auto& tok : split_list(text)) {
        std::uint64_t v = 0;
        try {
            v = parse_uint("symbol", tok);
        } catch (const ConfigError&) {
            throw ConfigError("malformed symbol '" + tok + "'");
        }
        if (v >= f.q())
            throw ConfigError("symbol " + tok + " is not an element of GF(" + std::to_string(f.q()) + ")");
        out.push_back(static_cast<Elem>(v));
    }
    return out;
}

void load_config_file(const std::string& path, SimConfig& cfg)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_config(in);
    } catch (const CLI::Error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    for (const auto& it : items) {
        if (it.name == "++" || it.name == "--")
            continue;
        const std::string section = it.parents.empty() ? "" : it.parents.back();
        const std::string key = section.empty() ? it.name : section + "." + it.name;
        const std::string value = join(it.inputs);
        if (key == "code.m")
            cfg.code.m = static_cast<unsigned>(parse_uint(key, value));
        else if (key == "code.prim_poly")
            cfg.code.prim_poly = static_cast<std::uint32_t>(parse_uint(key, value));
        else if (key == "code.d")
            cfg.code.d = static_cast<unsigned>(parse_uint(key, value));
        else if (key == "code.multipliers")
            cfg.code.multipliers = value;
        else if (key == "channel.kind")
            cfg.channel = parse_channel(value);
        else if (key == "channel.sweep")
            cfg.sweep = parse_sweep(it.inputs);
        else if (key == "chase.eta")
            cfg.chase.eta = static_cast<unsigned>(parse_uint(key, value));
        else if (key == "chase.mu")
            cfg.chase.mu = static_cast<unsigned>(parse_uint(key, value));
        else if (key == "chase.r_max")
            cfg.chase.r_max = static_cast<unsigned>(parse_uint(key, value));
        else if (key == "chase.kernel")
            cfg.chase.kernel = parse_kernel_key(value);
        else if (key == "chase.exhaustive")
            cfg.chase.exhaustive = parse_bool(key, value);
        else if (key == "chase.gmd")
            cfg.chase.gmd = parse_bool(key, value);
        else if (key == "run.trials")
            cfg.trials = parse_uint(key, value);
        else if (key == "run.seed")
            cfg.seed = parse_uint(key, value);
        else if (key == "run.jobs")
            cfg.jobs = static_cast<unsigned>(parse_uint(key, value));
        else
            throw ConfigError("unknown config key '" + key + "'");
    }
}

namespace {

struct TrialOutcome {
    bool frame_error = false;
    unsigned symbol_errors = 0;
    std::size_t candidates = 0;
    std::uint64_t edges = 0;
    std::uint64_t mults = 0;
};

TrialOutcome run_trial(const GrsCode& code, const SimConfig& cfg, const ChannelModel& model,
                       std::uint64_t stream)
{
    const FieldCtx& f = code.field();
    auto rng = trial_rng(cfg.seed, stream);
    std::uniform_int_distribution<Elem> sym(0, f.q() - 1);
    std::vector<Elem> msg(code.k());
    for (auto& x : msg)
        x = sym(rng);
    const auto c = encode(code, msg);
    const Transmission tx = transmit(code, c, model, rng);
    const ChaseInput in = pick_unreliable(tx.info, cfg.chase.eta, cfg.chase.mu);

    TrialOutcome out;
    OpCounter ops;
    DecodeOutcome dec;
    {
        CountScope scope(ops);
        dec = chase_decode(code, tx.y, in, cfg.chase);
    }
    out.mults = ops.mults;
    out.edges = dec.result.stats.edges;
    out.candidates = dec.result.candidates.size();
    const auto best = select_best(dec.result.candidates, tx.y, tx.info, model);
    const std::vector<Elem> decoded =
        best ? corrected_word(code, tx.y, dec.result.candidates.items()[*best].error) : tx.y;
    for (std::size_t i = 0; i < c.size(); ++i)
        out.symbol_errors += decoded[i] != c[i];
    out.frame_error = decoded != c;
    return out;
}

} // namespace

std::vector<SweepPoint> run_sim(const SimConfig& cfg)
{
    cfg.validate();
    const GrsCode code = cfg.code.build(cfg.seed);
    if (cfg.chase.eta > code.n())
        throw ConfigError("chase.eta: exceeds the code length " + std::to_string(code.n()));
    std::vector<SweepPoint> rows;
    if (cfg.trials == 0)
        return rows;
    for (std::size_t si = 0; si < cfg.sweep.size(); ++si) {
        ChannelModel model;
        model.kind = cfg.channel;
        (cfg.channel == ChannelKind::Symmetric ? model.p : model.sigma) = cfg.sweep[si];
        try {
            model.validate(code.field());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("channel: ") + e.what());
        }

        const auto start = std::chrono::steady_clock::now();
        std::vector<TrialOutcome> results(cfg.trials);
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mu;
        auto worker = [&] {
            for (std::uint64_t k = next++; k < cfg.trials; k = next++) {
                try {
                    results[k] = run_trial(code, cfg, model, (static_cast<std::uint64_t>(si) << 40) | k);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        };
        const unsigned nthreads = static_cast<unsigned>(std::min<std::uint64_t>(cfg.jobs, cfg.trials));
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < nthreads; ++i)
            pool.emplace_back(worker);
        worker();
        for (auto& th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
        const auto stop = std::chrono::steady_clock::now();

        // Merged in trial order so the totals do not depend on scheduling.
        SweepPoint row;
        row.param = cfg.sweep[si];
        double frames = 0, symbols = 0, cands = 0, edges = 0, mults = 0;
        for (const auto& r : results) {
            frames += r.frame_error;
            symbols += r.symbol_errors;
            cands += static_cast<double>(r.candidates);
            edges += static_cast<double>(r.edges);
            mults += static_cast<double>(r.mults);
        }
        const double nt = static_cast<double>(cfg.trials);
        row.fer = frames / nt;
        row.ser = symbols / (nt * code.n());
        row.avg_candidates = cands / nt;
        row.avg_edges = edges / nt;
        row.avg_mults = mults / nt;
        row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& os, const SimConfig& cfg, const std::vector<SweepPoint>& rows)
{
    os << "# config: " << cfg.canonical() << "\n";
    os << "sweep_param,fer,ser,avg_candidates,avg_edges,avg_mults,wall_ms\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%g,%.6f,%.6f,%.4f,%.4f,%.2f,%.3f\n", r.param, r.fer, r.ser,
                      r.avg_candidates, r.avg_edges, r.avg_mults, r.wall_ms);
        os << buf;
    }
}

std::uint64_t edge_bound(KernelKind kernel, unsigned t, unsigned n, unsigned depth)
{
    switch (kernel) {
    case KernelKind::A2:
        return 12ull * t + 12ull * depth + 3;
    case KernelKind::B:
        return 12ull * n;
    case KernelKind::C:
        return 20ull * depth + 3;
    case KernelKind::A:
        break;
    }
    throw ConfigError("bench.kernel: must be A2, B or C");
}

std::vector<BenchRow> run_bench(const GrsCode& code, KernelKind kernel, unsigned r_max, unsigned eta,
                                std::uint64_t trials, std::uint64_t seed)
{
    edge_bound(kernel, code.t(), code.n(), 1); // rejects kernel A
    if (r_max < 1 || r_max > eta || eta > code.n())
        throw ConfigError("bench: need 1 <= r_max <= eta <= n");
    const FieldCtx& f = code.field();
    std::vector<BenchRow> rows(r_max);
    for (unsigned r = 1; r <= r_max; ++r) {
        rows[r - 1].depth = r;
        rows[r - 1].bound = edge_bound(kernel, code.t(), code.n(), r);
    }
    ChaseConfig cfg;
    cfg.eta = eta;
    cfg.r_max = r_max;
    cfg.kernel = kernel;
    cfg.exhaustive = true;
    for (std::uint64_t k = 0; k < trials; ++k) {
        auto rng = trial_rng(seed, k);
        std::uniform_int_distribution<Elem> nz(1, f.q() - 1);
        std::vector<unsigned> perm(code.n());
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        // t + r_max errors, the first r_max of them inside I with the right
        // value among the hypotheses.
        const unsigned eps = std::min(code.t() + r_max, code.n());
        std::vector<Elem> y(code.n(), 0);
        for (unsigned i = 0; i < eps; ++i)
            y[perm[i]] = nz(rng);
        ChaseInput in;
        for (unsigned s = 0; s < eta; ++s) {
            const unsigned coord = s < r_max ? perm[s] : perm[(eps + s) % code.n()];
            in.coords.push_back(coord);
            Elem h = y[coord] ? y[coord] : nz(rng);
            in.hypotheses.push_back({h});
        }
        auto ctx = make_decode_context(code, syndrome(code, y));
        const TraversalResult res = traverse_with(ctx, ChaseTree(in, r_max), cfg);
        for (unsigned r = 1; r <= r_max; ++r) {
            rows[r - 1].measured_max = std::max(rows[r - 1].measured_max, res.stats.max_mults_all_nonzero[r]);
            rows[r - 1].edges += res.stats.all_nonzero_by_depth[r];
        }
    }
    return rows;
}

namespace {

// Flag overrides, applied on top of the config file.
struct CodeFlags {
    std::optional<unsigned> m;
    std::optional<std::string> prim_poly;
    std::optional<unsigned> d;
    std::optional<std::string> multipliers;

    void attach(CLI::App* app)
    {
        app->add_option("--m", m, "field extension degree, GF(2^m)");
        app->add_option("--prim-poly", prim_poly, "field polynomial, e.g. 0x13 (default from the built-in table)");
        app->add_option("--d", d, "odd design distance");
        app->add_option("--multipliers", multipliers, "column multipliers: ones, random, or a symbol list");
    }
    void apply(CodeSpec& c) const
    {
        if (m)
            c.m = *m;
        if (prim_poly)
            c.prim_poly = static_cast<std::uint32_t>(parse_uint("code.prim_poly", *prim_poly));
        if (d)
            c.d = *d;
        if (multipliers)
            c.multipliers = *multipliers;
    }
};

struct ChaseFlags {
    std::optional<unsigned> eta, mu, r_max;
    std::optional<std::string> kernel;
    bool exhaustive = false;
    bool gmd = false;

    void attach(CLI::App* app)
    {
        app->add_option("--eta", eta, "number of least reliable coordinates");
        app->add_option("--mu", mu, "most probable symbols considered per coordinate");
        app->add_option("--r-max", r_max, "tree depth");
        app->add_option("--kernel", kernel, "edge kernel: A, A2, B or C");
        app->add_flag("--exhaustive", exhaustive, "search for candidates at every node");
        app->add_flag("--gmd", gmd, "erasure-only traversal");
    }
    void apply(ChaseConfig& c) const
    {
        if (eta)
            c.eta = *eta;
        if (mu)
            c.mu = *mu;
        if (r_max)
            c.r_max = *r_max;
        if (kernel)
            c.kernel = parse_kernel_key(*kernel);
        if (exhaustive)
            c.exhaustive = true;
        if (gmd)
            c.gmd = true;
    }
};

std::string join_symbols(std::span<const Elem> v)
{
    std::string s;
    for (Elem x : v)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

void print_estimate(std::ostream& out, const GrsCode& code, const ErrorEstimate& e)
{
    out << "weight=" << e.weight() << " coords=";
    std::string coords;
    for (Elem loc : e.locators)
        coords += (coords.empty() ? "" : ",") + std::to_string(code.coordinate(loc));
    out << (coords.empty() ? "-" : coords) << " values=" << (e.values.empty() ? "-" : join_symbols(e.values));
}

int cmd_decode(const SimConfig& cfg, const std::string& received, const std::string& reliability,
               const std::string& alternatives, std::ostream& out)
{
    cfg.validate();
    const GrsCode code = cfg.code.build(cfg.seed);
    const FieldCtx& f = code.field();
    const std::vector<Elem> y = parse_symbols(received, f);
    if (y.size() != code.n())
        throw ConfigError("received: expected " + std::to_string(code.n()) + " symbols, got " +
                          std::to_string(y.size()));
    if (cfg.chase.eta > code.n())
        throw ConfigError("chase.eta: exceeds the code length " + std::to_string(code.n()));

    ReliabilityInfo info;
    info.q = f.q();
    info.hard = y;
    info.score.assign(code.n(), 1.0);
    if (!reliability.empty()) {
        const auto toks = split_list(reliability);
        if (toks.size() != code.n())
            throw ConfigError("reliability: expected " + std::to_string(code.n()) + " scores, got " +
                              std::to_string(toks.size()));
        for (std::size_t i = 0; i < toks.size(); ++i)
            info.score[i] = parse_double("reliability", toks[i]);
    }
    if (!alternatives.empty()) {
        const auto toks = split_list(alternatives);
        if (toks.size() != code.n())
            throw ConfigError("alternatives: expected " + std::to_string(code.n()) + " entries, got " +
                              std::to_string(toks.size()));
        info.alternatives.resize(code.n());
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (toks[i] == "-")
                continue;
            std::string t = toks[i];
            for (char& ch : t)
                if (ch == '/')
                    ch = ' ';
            info.alternatives[i] = parse_symbols(t, f);
        }
    }
    const ChaseInput in = pick_unreliable(info, cfg.chase.eta, cfg.chase.mu);
    const DecodeOutcome dec = chase_decode(code, y, in, cfg.chase);

    out << "hd: " << (dec.hd_success ? "success" : "failure") << "\n";
    if (dec.hd_success) {
        out << "hd_error: ";
        print_estimate(out, code, dec.result.candidates.items().front().error);
        out << "\n";
    } else {
        out << "unreliable:";
        for (std::size_t s = 0; s < in.coords.size(); ++s) {
            out << " " << in.coords[s] << "{";
            out << join_symbols(in.hypotheses[s]) << "}";
        }
        out << "\n";
        out << "edges: " << dec.result.stats.edges << "\n";
    }
    const auto& cands = dec.result.candidates.items();
    out << "candidates: " << cands.size() << "\n";
    for (std::size_t k = 0; k < cands.size(); ++k) {
        out << "candidate " << k << ": ";
        print_estimate(out, code, cands[k].error);
        out << " pattern=";
        std::string pat;
        for (const auto& p : cands[k].pattern)
            pat += (pat.empty() ? "" : ",") + std::to_string(p.coord) + ":" + std::to_string(p.beta);
        out << (pat.empty() ? "-" : pat) << "\n";
    }
    ChannelModel model;
    const auto best = select_best(dec.result.candidates, y, info, model);
    if (!best) {
        out << "selected: none\n";
        return kDecodeFailure;
    }
    out << "selected: " << *best << "\n";
    out << "codeword: " << join_symbols(corrected_word(code, y, cands[*best].error)) << "\n";
    return kSuccess;
}

int cmd_bench(const SimConfig& cfg, std::ostream& out)
{
    const GrsCode code = cfg.code.build(cfg.seed);
    const auto rows = run_bench(code, cfg.chase.kernel, cfg.chase.r_max, cfg.chase.eta, cfg.trials, cfg.seed);
    out << "# bench: kernel=" << kernel_name(cfg.chase.kernel) << " q=" << code.field().q() << " n=" << code.n()
        << " t=" << code.t() << " eta=" << cfg.chase.eta << " r_max=" << cfg.chase.r_max
        << " trials=" << cfg.trials << " seed=" << cfg.seed << "\n";
    out << "depth,measured_max,bound,all_nonzero_edges,status\n";
    for (const auto& r : rows)
        out << r.depth << "," << r.measured_max << "," << r.bound << "," << r.edges << ","
            << (r.edges == 0 ? "no-data" : r.ok() ? "ok" : "VIOLATION") << "\n";
    return kSuccess;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chase decoding of GRS codes over GF(2^m)"};
    app.require_subcommand(1);

    std::string config_path;
    CodeFlags code_flags;
    ChaseFlags chase_flags;
    std::optional<std::string> channel;
    std::vector<std::string> sweep;
    std::optional<std::uint64_t> trials, seed;
    std::optional<unsigned> jobs;
    std::string out_path;
    std::string received, reliability, alternatives;

    auto* sim = app.add_subcommand("sim", "simulate frames and write a CSV report");
    sim->add_option("--config", config_path, "INI-style config file with [code], [channel], [chase], [run]");
    code_flags.attach(sim);
    chase_flags.attach(sim);
    sim->add_option("--channel", channel, "symmetric or soft");
    sim->add_option("--sweep", sweep, "channel parameters: p (symmetric) or sigma (soft)")->delimiter(',');
    sim->add_option("--trials", trials, "frames per sweep point");
    sim->add_option("--seed", seed, "master seed");
    sim->add_option("--jobs", jobs, "worker threads");
    sim->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* decode = app.add_subcommand("decode", "decode one received word");
    decode->add_option("--config", config_path, "config file; only [code] and [chase] are used");
    code_flags.attach(decode);
    chase_flags.attach(decode);
    decode->add_option("--received", received, "received symbols, decimal or 0x-hex")->required();
    decode->add_option("--reliability", reliability, "per-coordinate reliability scores, lower is less reliable");
    decode->add_option("--alternatives", alternatives,
                       "per-coordinate ranked alternative symbols as a/b/..., or - for none");

    auto* bench = app.add_subcommand("bench", "per-edge multiplication counts against the closed-form bounds");
    bench->add_option("--config", config_path, "config file; only [code], [chase] and [run] are used");
    code_flags.attach(bench);
    chase_flags.attach(bench);
    bench->add_option("--trials", trials, "random instances");
    bench->add_option("--seed", seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigError;
    }

    try {
        SimConfig cfg;
        if (!config_path.empty())
            load_config_file(config_path, cfg);
        code_flags.apply(cfg.code);
        chase_flags.apply(cfg.chase);
        if (channel)
            cfg.channel = parse_channel(*channel);
        if (!sweep.empty())
            cfg.sweep = parse_sweep(sweep);
        if (trials)
            cfg.trials = *trials;
        if (seed)
            cfg.seed = *seed;
        if (jobs)
            cfg.jobs = *jobs;

        if (sim->parsed()) {
            const auto rows = run_sim(cfg);
            if (out_path.empty()) {
                write_csv(out, cfg, rows);
            } else {
                std::ofstream file(out_path);
                if (!file)
                    throw ConfigError("cannot write '" + out_path + "'");
                write_csv(file, cfg, rows);
            }
            return kSuccess;
        }
        if (decode->parsed())
            return cmd_decode(cfg, received, reliability, alternatives, out);
        return cmd_bench(cfg, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        // Parameter checks below the CLI layer (code, tree, channel).
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

} // namespace gfchase::cli
