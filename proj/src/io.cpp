#include "sbm/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sbm/version.hpp"

namespace sbm {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw usage_error(what + ": cannot parse '" + s + "' as a number");
    return v;
}

long parse_long(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw usage_error(what + ": cannot parse '" + s + "' as an integer");
    return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    if (t == "true" || t == "1") return true;
    if (t == "false" || t == "0") return false;
    throw usage_error(what + ": cannot parse '" + s + "' as a boolean");
}

// One switchboard for both config syntaxes. Unknown keys are ignored so that
// provenance headers (which carry 'command', 'columns', result summaries...)
// can be fed straight back in.
void set_key(RunConfig& cfg, const std::string& key, const std::string& val) {
    if (key == "delta") {
        cfg.delta = parse_double(val, key);
        cfg.has_delta = true;
    } else if (key == "alpha") {
        cfg.alpha = parse_double(val, key);
        cfg.has_alpha = true;
    } else if (key == "omega_c") {
        cfg.omega_c = parse_double(val, key);
    } else if (key == "s") {
        cfg.s = parse_double(val, key);
    } else if (key == "epsilon") {
        cfg.epsilon = parse_double(val, key);
    } else if (key == "tol") {
        cfg.tol = parse_double(val, key);
    } else if (key == "dt") {
        cfg.dt = parse_double(val, key);
    } else if (key == "tmax" || key == "t_max") {
        cfg.t_max = parse_double(val, key);
    } else if (key == "dalpha") {
        cfg.dalpha = parse_double(val, key);
    } else if (key == "grid_delta") {
        cfg.grid_delta = parse_range(val);
        cfg.has_grid_delta = true;
    } else if (key == "grid_alpha") {
        cfg.grid_alpha = parse_range(val);
        cfg.has_grid_alpha = true;
    } else if (key == "format") {
        cfg.format = trim(val);
    } else if (key == "out") {
        cfg.out = trim(val);
    } else if (key == "emit_plot") {
        cfg.emit_plot = parse_bool(val, key);
    } else if (key == "jobs") {
        cfg.jobs = static_cast<int>(parse_long(val, key));
    }  // anything else: ignored
}

void load_json_config(const std::string& text, RunConfig& cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw usage_error("config: top-level JSON must be an object");
    const nlohmann::json& src =
        (j.contains("params") && j.at("params").is_object()) ? j.at("params") : j;
    for (const auto& item : src.items()) {
        const nlohmann::json& v = item.value();
        if (v.is_null()) continue;
        std::string s;
        if (v.is_string()) s = v.get<std::string>();
        else if (v.is_boolean()) s = v.get<bool>() ? "true" : "false";
        else if (v.is_number()) s = fmt17(v.get<double>());
        else continue;  // arrays/objects carry no config meaning
        set_key(cfg, item.key(), s);
    }
}

// JSON scalar from an fmt17-formatted cell: numbers stay raw, non-finite
// becomes null, anything else is quoted.
std::string json_scalar(const std::string& value, bool numeric) {
    if (numeric) {
        if (value == "nan" || value == "inf" || value == "-inf") return "null";
        return value;
    }
    if (value == "true" || value == "false") return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

bool looks_numeric(const std::string& v) {
    if (v.empty()) return false;
    char* end = nullptr;
    std::strtod(v.c_str(), &end);
    return end == v.c_str() + v.size();
}

void write_kv_object(std::ostream& os, const std::vector<KV>& kv, const char* indent) {
    for (std::size_t i = 0; i < kv.size(); ++i) {
        os << indent << "\"" << kv[i].key
           << "\": " << json_scalar(kv[i].value, looks_numeric(kv[i].value))
           << (i + 1 < kv.size() ? "," : "") << "\n";
    }
}

}  // namespace

std::string fmt17(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<double> Range::values() const {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return v;
}

Range parse_range(const std::string& spec) {
    const std::string t = trim(spec);
    const std::size_t c1 = t.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : t.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        t.find(':', c2 + 1) != std::string::npos)
        throw usage_error("range '" + spec + "' must have the form lo:hi:n");
    Range r;
    r.lo = parse_double(t.substr(0, c1), "range lo");
    r.hi = parse_double(t.substr(c1 + 1, c2 - c1 - 1), "range hi");
    const long n = parse_long(t.substr(c2 + 1), "range n");
    if (n < 1) throw usage_error("range '" + spec + "': n must be at least 1");
    r.n = static_cast<int>(n);
    return r;
}

std::string format_range(const Range& r) {
    return fmt17(r.lo) + ":" + fmt17(r.hi) + ":" + std::to_string(r.n);
}

ModelParams RunConfig::params() const {
    ModelParams p;
    p.delta = delta;
    p.alpha = alpha;
    p.omega_c = omega_c;
    p.s = s;
    p.epsilon = epsilon;
    p.validate();
    return p;
}

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw usage_error("config: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        load_json_config(text, cfg);
        return;
    }

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::string s = trim(line);
        while (!s.empty() && s.front() == '#') s = trim(s.substr(1));
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) continue;  // headers, CSV data rows, prose
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (!key.empty()) set_key(cfg, key, val);
    }
}

std::string provenance_header(const std::string& command, const std::vector<KV>& kv) {
    std::string h = "# sbm " SBM_VERSION_STRING "\n# command = " + command + "\n";
    for (const KV& item : kv) h += "# " + item.key + " = " + item.value + "\n";
    return h;
}

void write_csv(std::ostream& os, const std::string& header, const Table& t) {
    os << header;
    for (std::size_t i = 0; i < t.cols.size(); ++i)
        os << t.cols[i].name << (i + 1 < t.cols.size() ? "," : "\n");
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

void write_json_table(std::ostream& os, const std::string& command,
                      const std::vector<KV>& params, const std::vector<KV>& extra,
                      const Table& t) {
    os << "{\n  \"tool\": \"sbm\",\n  \"version\": \"" SBM_VERSION_STRING "\",\n"
       << "  \"command\": \"" << command << "\",\n  \"params\": {\n";
    write_kv_object(os, params, "    ");
    os << "  },\n";
    if (!extra.empty()) {
        os << "  \"derived\": {\n";
        write_kv_object(os, extra, "    ");
        os << "  },\n";
    }
    os << "  \"columns\": [";
    for (std::size_t i = 0; i < t.cols.size(); ++i)
        os << "\"" << t.cols[i].name << "\"" << (i + 1 < t.cols.size() ? ", " : "");
    os << "],\n  \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "    [";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i)
            os << json_scalar(t.rows[r][i], t.cols[i].numeric)
               << (i + 1 < t.rows[r].size() ? ", " : "");
        os << "]" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

void write_json_result(std::ostream& os, const std::string& command,
                       const std::vector<KV>& params, const std::vector<KV>& result) {
    os << "{\n  \"tool\": \"sbm\",\n  \"version\": \"" SBM_VERSION_STRING "\",\n"
       << "  \"command\": \"" << command << "\",\n  \"params\": {\n";
    write_kv_object(os, params, "    ");
    os << "  },\n  \"result\": {\n";
    write_kv_object(os, result, "    ");
    os << "  }\n}\n";
}

std::string plot_script(const std::string& command, const std::string& data_path,
                        const std::string& format) {
    std::string s;
    s += "#!/usr/bin/env python3\n";
    s += "# Reads " + data_path + " (written by `sbm " + command + "`) and plots it.\n";
    s += "import json, csv, math\n";
    s += "import matplotlib\nmatplotlib.use('Agg')\n";
    s += "import matplotlib.pyplot as plt\n\n";
    s += "PATH = " + json_scalar(data_path, false) + "\n";
    s += "FORMAT = " + json_scalar(format, false) + "\n\n";
    s += "def load(path):\n";
    s += "    if FORMAT == 'json':\n";
    s += "        with open(path) as f:\n";
    s += "            doc = json.load(f)\n";
    s += "        cols = doc['columns']\n";
    s += "        rows = doc['rows']\n";
    s += "    else:\n";
    s += "        with open(path) as f:\n";
    s += "            body = [r for r in csv.reader(l for l in f if not l.startswith('#'))]\n";
    s += "        cols, rows = body[0], body[1:]\n";
    s += "    def num(x):\n";
    s += "        try:\n";
    s += "            return float(x) if x is not None else math.nan\n";
    s += "        except (TypeError, ValueError):\n";
    s += "            return x\n";
    s += "    series = {c: [num(r[i]) for r in rows] for i, c in enumerate(cols)}\n";
    s += "    return series\n\n";
    if (command == "dynamics") {
        s += "d = load(PATH)\n";
        s += "fig, (top, bot) = plt.subplots(2, 1, sharex=True, figsize=(8, 6))\n";
        s += "top.plot(d['t'], d['pz'], lw=0.8, label='P_z (master)')\n";
        s += "top.set_ylabel('P_z')\n";
        s += "top.legend(loc='upper right')\n";
        s += "bot.plot(d['t'], d['abs_c'], lw=0.8, label='|c|')\n";
        s += "bot.set_xlabel('t [1/omega_c]')\n";
        s += "bot.set_ylabel('|c|')\n";
        s += "bot.legend(loc='upper right')\n";
    } else if (command == "phase-diagram") {
        s += "d = load(PATH)\n";
        s += "b = load(PATH.rsplit('.', 1)[0] + '_boundaries.' + PATH.rsplit('.', 1)[1])\n";
        s += "order = ['delocalized-no-bound-state', 'delocalized-bound-state',\n";
        s += "         'localized', 'failed']\n";
        s += "colors = {k: c for k, c in zip(order, ['#4477aa', '#66ccee', '#ee6677', '#999'])}\n";
        s += "fig, ax = plt.subplots(figsize=(7, 5))\n";
        s += "for lab in order:\n";
        s += "    xs = [a for a, l in zip(d['alpha'], d['label']) if l == lab]\n";
        s += "    ys = [dd for dd, l in zip(d['delta'], d['label']) if l == lab]\n";
        s += "    if xs:\n";
        s += "        ax.scatter(xs, ys, s=12, color=colors[lab], label=lab)\n";
        s += "ax.plot(b['alpha_bs'], b['delta'], 'k-', lw=1, label='bound-state onset')\n";
        s += "ax.plot(b['alpha_dl'], b['delta'], 'k--', lw=1, label='localization')\n";
        s += "ax.set_xlabel('alpha')\n";
        s += "ax.set_ylabel('delta [omega_c]')\n";
        s += "ax.legend(fontsize=7)\n";
    } else {
        s += "d = load(PATH)\n";
        s += "fig, ax = plt.subplots()\n";
        s += "keys = [k for k in d if k != 't']\n";
        s += "for k in keys:\n";
        s += "    if all(isinstance(v, float) for v in d[k]):\n";
        s += "        ax.plot(d.get('t', range(len(d[k]))), d[k], label=k)\n";
        s += "ax.legend()\n";
    }
    s += "out = PATH.rsplit('.', 1)[0] + '.png'\n";
    s += "fig.tight_layout()\n";
    s += "fig.savefig(out, dpi=160)\n";
    s += "print('wrote', out)\n";
    return s;
}

}  // namespace sbm
