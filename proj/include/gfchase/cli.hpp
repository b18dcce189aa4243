#pragma once

#include "gfchase/channel.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfchase::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kDecodeFailure = 1, kConfigError = 2 };

struct CodeSpec {
    unsigned m = 4;
    std::uint32_t prim_poly = 0; // 0 selects the built-in table entry
    unsigned d = 7;
    std::string multipliers = "ones"; // "ones", "random" or a comma list

    // Throws ConfigError naming the offending key.
    GrsCode build(std::uint64_t seed) const;
};

struct SimConfig {
    CodeSpec code;
    ChannelKind channel = ChannelKind::Symmetric;
    std::vector<double> sweep{0.01};
    ChaseConfig chase;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    unsigned jobs = 1;

    void validate() const;
    // Single-line key=value form echoed at the top of every CSV. The worker
    // count is left out because it does not change the output.
    std::string canonical() const;
};

struct SweepPoint {
    double param = 0;
    double fer = 0;
    double ser = 0;
    double avg_candidates = 0;
    double avg_edges = 0;
    double avg_mults = 0;
    double wall_ms = 0;
};

std::vector<SweepPoint> run_sim(const SimConfig& cfg);
void write_csv(std::ostream& os, const SimConfig& cfg, const std::vector<SweepPoint>& rows);

// Applies `[section] key = value` entries from an INI-style file.
void load_config_file(const std::string& path, SimConfig& cfg);

// Decimal or 0x-prefixed hexadecimal symbols separated by commas/spaces.
std::vector<Elem> parse_symbols(const std::string& text, const FieldCtx& f);

struct BenchRow {
    unsigned depth = 0;
    std::uint64_t measured_max = 0;
    std::uint64_t bound = 0;
    std::uint64_t edges = 0; // all-nonzero edges measured at this depth
    bool ok() const { return measured_max <= bound; }
};

// Largest per-edge multiplication count on all-nonzero edges at each depth,
// next to the closed-form bound for the kernel.
std::vector<BenchRow> run_bench(const GrsCode& code, KernelKind kernel, unsigned r_max, unsigned eta,
                                std::uint64_t trials, std::uint64_t seed);
std::uint64_t edge_bound(KernelKind kernel, unsigned t, unsigned n, unsigned depth);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace gfchase::cli
