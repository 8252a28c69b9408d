#pragma once

// Command dispatch for the digitree tool. Argument parsing lives in
// tools/digitree.cpp; this layer only maps a CommandConfig onto library calls
// and serialises the result.

#include "digitree/cantor.hpp"
#include "digitree/convert.hpp"
#include "digitree/errors.hpp"
#include "digitree/hausdorff.hpp"
#include "digitree/io.hpp"
#include "digitree/stream.hpp"
#include "digitree/tree.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace digitree::cli {

enum class Format { json, text };

struct CommandConfig {
    std::string group;    // stream | tree | convert | hausdorff | cantor
    std::string command;  // approx, cover, ...
    std::optional<int> depth;
    std::optional<int> digits;
    std::optional<int> precision;
    std::optional<int> maxdepth;
    std::string oracle;
    std::string stream;
    std::string source;
    std::string input;
    std::string a;
    std::string b;
    Format format = Format::json;
    int depth_cap = 24;
};

struct CommandResult {
    int status = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitContract = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int require_count(const std::optional<int>& v, const char* name, std::optional<int> cap = std::nullopt) {
    if (!v) throw UsageError(std::string("missing --") + name);
    if (*v < 0) throw UsageError(std::string("--") + name + " must be >= 0");
    if (cap && *v > *cap)
        throw UsageError(std::string("--") + name + " " + std::to_string(*v) + " exceeds the safety cap " +
                         std::to_string(*cap) + " (raise it with --depth-cap)");
    return *v;
}

inline const std::string& require_text(const std::string& v, const char* name) {
    if (v.empty()) throw UsageError(std::string("missing --") + name);
    return v;
}

inline std::string interval_lines(const std::vector<Interval>& ivs) {
    std::ostringstream os;
    for (const auto& iv : ivs) os << iv.to_string() << "\n";
    return os.str();
}

inline std::string word_lines(const TreePrefix& p) {
    std::ostringstream os;
    for (const auto& w : p.leaves()) os << (w.empty() ? "(empty)" : word_to_string(w)) << "\n";
    return os.str();
}

/// Hausdorff operand: "{...}" set literal or "[[lo,hi],...]" interval list.
struct Operand {
    std::optional<BasicSet> points;
    std::vector<Interval> intervals;
};

inline Operand parse_operand(const std::string& text) {
    const std::string_view s = digitree::detail::trim(text);
    if (!s.empty() && s.front() == '{') {
        BasicSet set = io::parse_set_literal(s);
        return {set, as_points(set)};
    }
    return {std::nullopt, io::parse_interval_list(s)};
}

inline CommandResult emit(const CommandConfig& cfg, const io::json& j, const std::string& text) {
    return {0, cfg.format == Format::json ? j.dump(2) + "\n" : text, {}};
}

inline CommandResult run_stream(const CommandConfig& cfg) {
    if (cfg.command == "approx") {
        const int n = require_count(cfg.digits, "digits");
        const DigitStream s = cauchy_to_stream(io::parse_oracle_spec(require_text(cfg.oracle, "oracle")));
        const DigitWord w = stream_prefix(s, n);
        const Interval iv = stream_value_interval(s, n);
        io::json j;
        j["digits"] = io::to_json(w);
        j["interval"] = io::to_json(iv);
        return emit(cfg, j, "digits   " + word_to_string(w) + "\ninterval " + iv.to_string() + "\n");
    }
    if (cfg.command == "to-cauchy") {
        const int n = require_count(cfg.precision, "precision");
        const CauchyReal c = stream_to_cauchy(io::parse_stream_spec(require_text(cfg.stream, "stream")));
        io::json queries = io::json::array();
        std::string text;
        for (int k = 0; k <= n; ++k) {
            const Rational q = c.query(k);
            queries.push_back(q.to_string());
            text += std::to_string(k) + "\t" + q.to_string() + "\n";
        }
        io::json j;
        j["queries"] = std::move(queries);
        return emit(cfg, j, text);
    }
    throw UsageError("unknown stream command '" + cfg.command + "'");
}

inline CommandResult run_tree(const CommandConfig& cfg) {
    if (cfg.command == "cover") {
        const int n = require_count(cfg.depth, "depth", cfg.depth_cap);
        const auto cover = tree_value_cover(io::parse_tree_source(require_text(cfg.source, "source")), n);
        io::json j;
        j["depth"] = n;
        j["intervals"] = io::to_json(cover);
        return emit(cfg, j, interval_lines(cover));
    }
    if (cfg.command == "truncate") {
        const int n = require_count(cfg.depth, "depth", cfg.depth_cap);
        const TreePrefix p = tree_truncate(io::parse_tree_source(require_text(cfg.source, "source")), n);
        return emit(cfg, io::to_json(p), word_lines(p));
    }
    if (cfg.command == "metric") {
        const int n = require_count(cfg.maxdepth, "maxdepth", cfg.depth_cap);
        const TreeDistance d =
            tree_metric_resolve(io::parse_tree_source(require_text(cfg.a, "a")), io::parse_tree_source(require_text(cfg.b, "b")), n);
        io::json j;
        j["resolved"] = d.resolved;
        j["depth"] = d.depth;
        j[d.resolved ? "distance" : "bound"] = d.value.to_string();
        const std::string text = d.resolved ? "distance " + d.value.to_string() + " (first difference at depth " +
                                                  std::to_string(d.depth) + ")\n"
                                            : "distance <= " + d.value.to_string() + "\n";
        return emit(cfg, j, text);
    }
    throw UsageError("unknown tree command '" + cfg.command + "'");
}

inline CommandResult run_convert(const CommandConfig& cfg) {
    if (cfg.command == "tree-to-hausdorff") {
        const int n = require_count(cfg.precision, "precision", cfg.depth_cap);
        const CauchyCompact k = tree_to_cauchy_compact(io::parse_tree_source(require_text(cfg.source, "source")));
        const io::json j = io::levels_to_json(k, n);
        std::string text;
        for (int i = 0; i <= n; ++i) text += std::to_string(i) + "\t" + k.query(i).to_string() + "\n";
        return emit(cfg, j, text);
    }
    if (cfg.command == "hausdorff-to-tree") {
        const int n = require_count(cfg.depth, "depth", cfg.depth_cap);
        const TreePrefix p = tree_truncate(cauchy_compact_to_tree(io::parse_compact_source(require_text(cfg.input, "input"))), n);
        return emit(cfg, io::to_json(p), word_lines(p));
    }
    throw UsageError("unknown convert command '" + cfg.command + "'");
}

inline CommandResult run_hausdorff(const CommandConfig& cfg) {
    if (cfg.command != "distance") throw UsageError("unknown hausdorff command '" + cfg.command + "'");
    const Operand a = parse_operand(require_text(cfg.a, "a"));
    const Operand b = parse_operand(require_text(cfg.b, "b"));
    const Rational d = a.points && b.points ? hausdorff_finite(*a.points, *b.points)
                                            : hausdorff_interval_unions(a.intervals, b.intervals);
    io::json j;
    j["distance"] = d.to_string();
    return emit(cfg, j, d.to_string() + "\n");
}

inline CommandResult run_cantor(const CommandConfig& cfg) {
    const int n = require_count(cfg.depth, "depth", cfg.depth_cap);
    if (cfg.command == "tree") {
        const TreePrefix p = tree_truncate(cantor_tree(), n);
        return emit(cfg, io::to_json(p), word_lines(p));
    }
    if (cfg.command == "cover" || cfg.command == "oracle") {
        const auto ivs = cfg.command == "cover" ? tree_value_cover(cantor_tree(), n) : ifs_iterate(n);
        io::json j;
        j["depth"] = n;
        j["intervals"] = io::to_json(ivs);
        return emit(cfg, j, interval_lines(ivs));
    }
    if (cfg.command == "check") {
        const Rational d = hausdorff_interval_unions(tree_value_cover(cantor_tree(), n), ifs_iterate(n));
        Rational third_pow(1);
        for (int i = 0; i < n; ++i) third_pow /= Rational(3);
        const Rational bound = pow2(1 - n) + Rational(2) * third_pow;
        io::json j;
        j["depth"] = n;
        j["distance"] = d.to_string();
        j["bound"] = bound.to_string();
        j["within_bound"] = d <= bound;
        return emit(cfg, j,
                    "distance " + d.to_string() + "\nbound    " + bound.to_string() + "\nwithin   " +
                        (d <= bound ? "yes" : "no") + "\n");
    }
    throw UsageError("unknown cantor command '" + cfg.command + "'");
}

}  // namespace detail

inline CommandResult run(const CommandConfig& cfg) {
    try {
        if (cfg.depth_cap < 0) throw detail::UsageError("--depth-cap must be >= 0");
        if (cfg.group == "stream") return detail::run_stream(cfg);
        if (cfg.group == "tree") return detail::run_tree(cfg);
        if (cfg.group == "convert") return detail::run_convert(cfg);
        if (cfg.group == "hausdorff") return detail::run_hausdorff(cfg);
        if (cfg.group == "cantor") return detail::run_cantor(cfg);
        throw detail::UsageError("unknown command group '" + cfg.group + "'");
    } catch (const detail::UsageError& e) {
        return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const io::ParseError& e) {
        return {kExitUsage, {}, std::string("parse error: ") + e.what() + "\n"};
    } catch (const ContractViolation& e) {
        return {kExitContract, {}, std::string("contract violation: ") + e.what() + "\n"};
    } catch (const ResourceLimit& e) {
        return {kExitContract, {}, std::string("resource limit: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitContract, {}, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace digitree::cli
