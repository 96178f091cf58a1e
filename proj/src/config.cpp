#include "tpp/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "tpp/error.hpp"
#include "tpp/sweep.hpp"

namespace tpp {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

double parse_real(std::string_view text, int line, std::string_view key) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(line, "value of '" + std::string(key) + "' is not a number: '" + std::string(text) + "'");
    return v;
}

int parse_int(std::string_view text, int line, std::string_view key) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(line, "value of '" + std::string(key) + "' is not an integer: '" + std::string(text) + "'");
    return v;
}

const std::set<std::string, std::less<>>& known_keys() {
    static const std::set<std::string, std::less<>> keys{
        "a1",    "a2",    "b1",        "c1",     "c2",     "d1",      "d2",           "tau1",
        "tau2",  "x_min", "x_max",     "t_end",  "dx",     "dt",      "ic_height",    "ic_lo",
        "ic_hi", "scheme", "probe_x", "field_stride", "blow_up_threshold", "neg_tol", "grid_fit"};
    return keys;
}

}  // namespace

ProbeConfig RunConfig::probes() const {
    ProbeConfig p;
    p.probe_x = probe_x;
    p.field_stride = field_stride;
    p.blow_up_threshold = blow_up_threshold;
    return p;
}

RunConfig parse_config(std::string_view text) {
    struct Entry {
        std::string value;
        int line;
    };
    std::map<std::string, Entry, std::less<>> entries;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, "missing key");
        if (value.empty()) throw ParseError(lineno, "missing value for '" + std::string(key) + "'");
        if (!known_keys().contains(key)) throw UnknownKey(std::string(key));
        if (entries.contains(key)) throw ParseError(lineno, "duplicate key '" + std::string(key) + "'");
        entries.emplace(std::string(key), Entry{std::string(value), lineno});
    }

    RunConfig cfg;
    auto real = [&](std::string_view key, double& out) {
        if (auto it = entries.find(key); it != entries.end()) out = parse_real(it->second.value, it->second.line, key);
    };
    real("a1", cfg.params.a1);
    real("a2", cfg.params.a2);
    real("b1", cfg.params.b1);
    real("c1", cfg.params.c1);
    real("c2", cfg.params.c2);
    real("d1", cfg.params.d1);
    real("d2", cfg.params.d2);
    real("tau1", cfg.params.tau1);
    real("tau2", cfg.params.tau2);
    real("x_min", cfg.domain.x_min);
    real("x_max", cfg.domain.x_max);
    real("t_end", cfg.domain.t_max);
    real("dx", cfg.dx);
    real("dt", cfg.dt);
    real("ic_height", cfg.ic.height);
    real("ic_lo", cfg.ic.support_lo);
    real("ic_hi", cfg.ic.support_hi);
    real("probe_x", cfg.probe_x);
    real("blow_up_threshold", cfg.blow_up_threshold);
    bool has_neg_tol = entries.contains("neg_tol");
    real("neg_tol", cfg.neg_tol);

    if (auto it = entries.find("field_stride"); it != entries.end())
        cfg.field_stride = parse_int(it->second.value, it->second.line, "field_stride");
    if (auto it = entries.find("scheme"); it != entries.end()) {
        if (it->second.value == "telegraph")
            cfg.scheme = Scheme::Telegraph;
        else if (it->second.value == "diffusive")
            cfg.scheme = Scheme::Diffusive;
        else
            throw ParseError(it->second.line, "scheme must be 'telegraph' or 'diffusive'");
    }
    if (auto it = entries.find("grid_fit"); it != entries.end()) {
        if (it->second.value == "strict")
            cfg.grid_fit = GridFit::Strict;
        else if (it->second.value == "nearest")
            cfg.grid_fit = GridFit::Nearest;
        else
            throw ParseError(it->second.line, "grid_fit must be 'strict' or 'nearest'");
    }
    if (!has_neg_tol) cfg.neg_tol = default_neg_tol(cfg.ic);

    validate_params(cfg.params, cfg.scheme);
    cfg.grid = cfg.grid_fit == GridFit::Strict ? build_grid(cfg.domain, cfg.dx, cfg.dt)
                                               : fit_grid(cfg.domain, cfg.dx, cfg.dt);
    validate_initial_condition(cfg.ic, cfg.domain);

    std::vector<RejectedParam::Violation> bad;
    if (!(cfg.probe_x >= cfg.domain.x_min && cfg.probe_x <= cfg.domain.x_max))
        bad.push_back({"probe_x", "must lie inside [x_min, x_max]"});
    if (cfg.field_stride < 0) bad.push_back({"field_stride", "must be >= 0"});
    if (!(cfg.blow_up_threshold > 0.0) || !std::isfinite(cfg.blow_up_threshold))
        bad.push_back({"blow_up_threshold", "must be finite and > 0"});
    if (!(cfg.neg_tol >= 0.0) || !std::isfinite(cfg.neg_tol)) bad.push_back({"neg_tol", "must be finite and >= 0"});
    if (!bad.empty()) throw RejectedParam(std::move(bad));
    return cfg;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return ss.str();
}

RunConfig load_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

std::vector<RefinementLevel> parse_levels(std::string_view text) {
    std::vector<RefinementLevel> out;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty() || line == "dx,dt") continue;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) throw ParseError(lineno, "expected 'dx,dt'");
        RefinementLevel lv{parse_real(trim(line.substr(0, comma)), lineno, "dx"),
                           parse_real(trim(line.substr(comma + 1)), lineno, "dt")};
        if (!(lv.dx > 0.0) || !std::isfinite(lv.dx)) throw RejectedParam("dx", "must be finite and > 0");
        if (!(lv.dt > 0.0) || !std::isfinite(lv.dt)) throw RejectedParam("dt", "must be finite and > 0");
        out.push_back(lv);
    }
    if (out.empty()) throw RejectedParam("levels", "must not be empty");
    return out;
}

std::vector<RefinementLevel> load_levels(const std::filesystem::path& path) {
    return parse_levels(read_text_file(path));
}

}  // namespace tpp
