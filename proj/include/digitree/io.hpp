#pragma once

// Text and JSON exchange formats.
//
//   rational        "p/q" in lowest terms, "p" when q = 1
//   interval        "[lo, hi]"; JSON ["lo", "hi"]
//   digit word      "+-0"; JSON [1, -1, 0]
//   tree prefix     {"depth": n, "words": [[...], ...]} listing the depth-n words
//   compact levels  {"levels": [["r", ...], ...]}
//   real levels     {"values": ["r", ...]}
//   stream spec     "<prefix>(<cycle>)", e.g. "+(-)" for 1,-1,-1,...;
//                   a bare word continues with zeros

#include "digitree/cantor.hpp"
#include "digitree/convert.hpp"
#include "digitree/digit_space.hpp"
#include "digitree/hausdorff.hpp"
#include "digitree/interval.hpp"
#include "digitree/rational.hpp"
#include "digitree/stream.hpp"
#include "digitree/tree.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace digitree::io {

using json = nlohmann::ordered_json;

/// Malformed user input: specs, literals, files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

inline Rational parse_rational(std::string_view text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

inline json to_json(const Rational& x) { return x.to_string(); }
inline json to_json(const Interval& iv) { return json::array({iv.lo().to_string(), iv.hi().to_string()}); }

inline json to_json(const DigitWord& w) {
    json out = json::array();
    for (Digit d : w) out.push_back(to_int(d));
    return out;
}

inline json to_json(const std::vector<Interval>& ivs) {
    json out = json::array();
    for (const auto& iv : ivs) out.push_back(to_json(iv));
    return out;
}

inline json to_json(const BasicSet& s) {
    json out = json::array();
    for (const auto& x : s) out.push_back(x.to_string());
    return out;
}

inline json to_json(const TreePrefix& p) {
    json words = json::array();
    for (const auto& w : p.leaves()) words.push_back(to_json(w));
    json out;
    out["depth"] = p.depth();
    out["words"] = std::move(words);
    return out;
}

inline DigitWord word_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("digit word must be an array, got " + j.dump());
    DigitWord w;
    for (const auto& d : j) {
        if (!d.is_number_integer()) throw ParseError("digit must be an integer, got " + d.dump());
        try {
            w.push_back(digit_from_int(d.get<long>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return w;
}

inline TreePrefix tree_prefix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("depth") || !j.contains("words"))
        throw ParseError("tree prefix needs \"depth\" and \"words\"");
    std::vector<DigitWord> words;
    for (const auto& w : j.at("words")) words.push_back(word_from_json(w));
    try {
        return TreePrefix(j.at("depth").get<int>(), std::move(words));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline BasicSet basic_set_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("basic set must be an array, got " + j.dump());
    std::vector<Rational> xs;
    for (const auto& x : j) xs.push_back(rational_from_json(x));
    try {
        return BasicSet(std::move(xs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline json levels_to_json(const CauchyCompact& k, int max_precision) {
    json levels = json::array();
    for (int n = 0; n <= max_precision; ++n) levels.push_back(to_json(k.query(n)));
    json out;
    out["levels"] = std::move(levels);
    return out;
}

inline CauchyCompact cauchy_compact_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j.at("levels").is_array())
        throw ParseError("compact file needs a \"levels\" array");
    std::vector<BasicSet> levels;
    for (const auto& level : j.at("levels")) levels.push_back(basic_set_from_json(level));
    if (levels.empty()) throw ParseError("compact file has no levels");
    return CauchyCompact::from_levels(std::move(levels));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Literals and specs

namespace detail {

inline std::vector<std::string_view> split_top_level(std::string_view body) {
    std::vector<std::string_view> parts;
    int nesting = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '[') ++nesting;
        if (body[i] == ']') --nesting;
        if (body[i] == ',' && nesting == 0) {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(body.substr(start));
    return parts;
}

inline std::string_view strip(std::string_view s) { return digitree::detail::trim(s); }

}  // namespace detail

/// "{r1,r2,...}"
inline BasicSet parse_set_literal(std::string_view text) {
    std::string_view s = detail::strip(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw ParseError("set literal must look like {r1,r2,...}");
    std::vector<Rational> xs;
    for (auto part : detail::split_top_level(s.substr(1, s.size() - 2))) xs.push_back(parse_rational(detail::strip(part)));
    try {
        return BasicSet(std::move(xs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// "[[lo,hi],...]"
inline std::vector<Interval> parse_interval_list(std::string_view text) {
    std::string_view s = detail::strip(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("interval list must look like [[lo,hi],...]");
    std::vector<Interval> out;
    for (auto part : detail::split_top_level(s.substr(1, s.size() - 2))) {
        std::string_view p = detail::strip(part);
        if (p.size() < 2 || p.front() != '[' || p.back() != ']') throw ParseError("interval must look like [lo,hi]");
        auto ends = detail::split_top_level(p.substr(1, p.size() - 2));
        if (ends.size() != 2) throw ParseError("interval must have two endpoints");
        try {
            out.emplace_back(parse_rational(detail::strip(ends[0])), parse_rational(detail::strip(ends[1])));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (out.empty()) throw ParseError("interval list is empty");
    return out;
}

/// "<prefix>(<cycle>)" or a bare word followed by zeros.
inline DigitStream parse_stream_spec(std::string_view text) {
    std::string_view s = detail::strip(text);
    try {
        const auto open = s.find('(');
        if (open == std::string_view::npos) return DigitStream::periodic(word_from_string(s), {Digit::zero});
        if (s.back() != ')') throw ParseError("stream spec must end with ')'");
        DigitWord cycle = word_from_string(s.substr(open + 1, s.size() - open - 2));
        if (cycle.empty()) throw ParseError("stream cycle must be nonempty");
        return DigitStream::periodic(word_from_string(s.substr(0, open)), std::move(cycle));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// const:p/q | decimal:<literal> | file:<path> with {"values": [...]}.
inline CauchyReal parse_oracle_spec(std::string_view spec) {
    auto checked = [](Rational x) {
        if (!unit_interval().contains(x)) throw ParseError(x.to_string() + " is outside [-1, 1]");
        return CauchyReal::constant(std::move(x));
    };
    if (starts_with(spec, "const:")) return checked(parse_rational(spec.substr(6)));
    if (starts_with(spec, "decimal:")) {
        try {
            return checked(Rational::parse_decimal(spec.substr(8)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (starts_with(spec, "file:")) {
        const json j = read_json_file(std::string(spec.substr(5)));
        if (!j.is_object() || !j.contains("values") || !j.at("values").is_array() || j.at("values").empty())
            throw ParseError("real oracle file needs a nonempty \"values\" array");
        std::vector<Rational> values;
        for (const auto& v : j.at("values")) {
            Rational x = rational_from_json(v);
            if (!unit_interval().contains(x)) throw ParseError(x.to_string() + " is outside [-1, 1]");
            values.push_back(std::move(x));
        }
        return CauchyReal([values = std::move(values)](int n) {
            return values[std::min<std::size_t>(static_cast<std::size_t>(n), values.size() - 1)];
        });
    }
    throw ParseError("unknown oracle spec '" + std::string(spec) + "' (expected const:, decimal: or file:)");
}

/// cantor | full | stream:<spec> | file:<tree prefix json>
inline DigitalTree parse_tree_source(std::string_view spec) {
    if (spec == "cantor") return cantor_tree();
    if (spec == "full") return full_tree();
    if (starts_with(spec, "stream:")) return tree_from_stream(parse_stream_spec(spec.substr(7)));
    if (starts_with(spec, "file:")) return tree_from_prefix(tree_prefix_from_json(read_json_file(std::string(spec.substr(5)))));
    throw ParseError("unknown tree source '" + std::string(spec) + "' (expected cantor, full, stream: or file:)");
}

/// {r,...} literal or file:<path> with {"levels": [...]}.
inline CauchyCompact parse_compact_source(std::string_view spec) {
    if (starts_with(spec, "file:")) return cauchy_compact_from_json(read_json_file(std::string(spec.substr(5))));
    return CauchyCompact::constant(parse_set_literal(spec));
}

}  // namespace digitree::io
