#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbm/model.hpp"

namespace sbm {

// Command-line / config mistakes: unparseable values, malformed ranges,
// missing required keys. Distinct from domain_error so the CLI can map it to
// its own exit code.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Shortest round-trippable decimal form: 17 significant digits reparse to the
// identical double, and identical doubles print identically, which is what
// makes byte-level output determinism possible at all.
std::string fmt17(double x);

struct Range {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    std::vector<double> values() const;  // inclusive linear grid; n = 1 gives {lo}
};

// Parses "lo:hi:n". Throws usage_error on anything else.
Range parse_range(const std::string& spec);
std::string format_range(const Range& r);

// Run parameters shared by every subcommand. Presence flags record whether a
// value arrived from a config file or flag, so required-argument checks can
// tell "defaulted" from "given".
struct RunConfig {
    double delta = 0.0;
    bool has_delta = false;
    double alpha = 0.0;
    bool has_alpha = false;
    double omega_c = 1.0;
    double s = 1.0;
    double epsilon = 0.0;

    double tol = defaults::eta_tol;  // fixed-point and root-finding tolerance
    double dt = defaults::dt;
    double t_max = defaults::t_max;
    double dalpha = defaults::dalpha;

    Range grid_delta;
    bool has_grid_delta = false;
    Range grid_alpha;
    bool has_grid_alpha = false;

    std::string format = "csv";  // csv | json
    std::string out;             // output path; empty means stdout only
    bool emit_plot = false;
    int jobs = 0;  // 0: hardware concurrency

    ModelParams params() const;  // validated ModelParams from the model fields
};

// Reads key = value lines ('#' prefixes are stripped first, so a provenance
// header pasted from an output file is itself a valid config), or, when the
// first non-space byte is '{', a JSON object — either flat or the "params"
// object of a previous JSON output, which makes every emitted file re-runnable.
// Unknown keys are ignored. Values overwrite cfg in place.
void load_config(const std::string& path, RunConfig& cfg);

struct KV {
    std::string key, value;
};

// The '#'-prefixed block stamped at the top of every output file: tool
// version, subcommand, and the complete parameter set needed to reproduce the
// run. Scheduling knobs (jobs, output paths) are deliberately absent — they
// must not change the bytes that follow.
std::string provenance_header(const std::string& command, const std::vector<KV>& kv);

struct Column {
    std::string name;
    bool numeric = true;  // false: quote in JSON; CSV is unaffected
};

struct Table {
    std::vector<Column> cols;
    std::vector<std::vector<std::string>> rows;  // cells pre-formatted via fmt17
};

void write_csv(std::ostream& os, const std::string& header, const Table& t);
void write_json_table(std::ostream& os, const std::string& command,
                      const std::vector<KV>& params, const std::vector<KV>& extra,
                      const Table& t);
void write_json_result(std::ostream& os, const std::string& command,
                       const std::vector<KV>& params, const std::vector<KV>& result);

// Self-contained matplotlib script that reads `data_path` (as written by
// `command`) and draws the obvious picture. Emitted next to the data on
// --emit-plot; uses only the Python standard library plus matplotlib.
std::string plot_script(const std::string& command, const std::string& data_path,
                        const std::string& format);

}  // namespace sbm
