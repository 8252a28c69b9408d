#include "digitree/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using digitree::cli::CommandConfig;
    using digitree::cli::Format;

    CommandConfig cfg;
    std::string format = "json";

    CLI::App app{"Exact signed-digit streams, digital trees and compact sets in [-1,1]"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--depth-cap", cfg.depth_cap, "Largest accepted depth/precision for tree commands");

    auto group = [&](const char* name, const char* help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    auto leaf = [&](CLI::App* g, const char* name, const char* help) {
        auto* c = g->add_subcommand(name, help);
        c->callback([&cfg, g, c] {
            cfg.group = g->get_name();
            cfg.command = c->get_name();
        });
        return c;
    };
    auto count = [](CLI::App* c, const char* flag, std::optional<int>& target, const char* help) {
        c->add_option(flag, target, help)->required();
    };

    auto* stream = group("stream", "Signed-digit streams");
    auto* approx = leaf(stream, "approx", "Digit expansion of a Cauchy oracle");
    approx->add_option("--oracle", cfg.oracle, "const:p/q | decimal:<literal> | file:<path>")->required();
    count(approx, "--digits", cfg.digits, "Number of digits");
    auto* to_cauchy = leaf(stream, "to-cauchy", "Fast Cauchy approximations of a stream");
    to_cauchy->add_option("--stream", cfg.stream, "<prefix>(<cycle>), e.g. +(-)")->required();
    count(to_cauchy, "--precision", cfg.precision, "Largest precision index");

    auto* tree = group("tree", "Digital trees");
    auto* cover = leaf(tree, "cover", "Depth-n interval cover of a tree's value");
    cover->add_option("--source", cfg.source, "cantor | full | stream:<spec> | file:<path>")->required();
    count(cover, "--depth", cfg.depth, "Depth");
    auto* truncate = leaf(tree, "truncate", "Depth-n truncation of a tree");
    truncate->add_option("--source", cfg.source, "cantor | full | stream:<spec> | file:<path>")->required();
    count(truncate, "--depth", cfg.depth, "Depth");
    auto* metric = leaf(tree, "metric", "Tree distance from the first differing truncation");
    metric->add_option("--a", cfg.a, "First tree source")->required();
    metric->add_option("--b", cfg.b, "Second tree source")->required();
    count(metric, "--maxdepth", cfg.maxdepth, "Deepest level compared");

    auto* convert = group("convert", "Representation converters");
    auto* t2h = leaf(convert, "tree-to-hausdorff", "Hausdorff-Cauchy levels of a tree's value");
    t2h->add_option("--source", cfg.source, "cantor | full | stream:<spec> | file:<path>")->required();
    count(t2h, "--precision", cfg.precision, "Largest precision index");
    auto* h2t = leaf(convert, "hausdorff-to-tree", "Digital tree of a Hausdorff-Cauchy compact");
    h2t->add_option("--input", cfg.input, "{r,...} | file:<path> with {\"levels\": ...}")->required();
    count(h2t, "--depth", cfg.depth, "Truncation depth of the output");

    auto* hausdorff = group("hausdorff", "Exact Hausdorff distances");
    auto* distance = leaf(hausdorff, "distance", "Distance between two finite sets or interval unions");
    distance->add_option("--a", cfg.a, "{r,...} or [[lo,hi],...]")->required();
    distance->add_option("--b", cfg.b, "{r,...} or [[lo,hi],...]")->required();

    auto* cantor = group("cantor", "Cantor set extraction");
    for (auto [name, help] : {std::pair{"tree", "Truncation of the Cantor tree"},
                              std::pair{"cover", "Interval cover of the Cantor tree"},
                              std::pair{"oracle", "Iterated function system intervals"},
                              std::pair{"check", "Hausdorff distance between cover and oracle"}}) {
        auto* c = leaf(cantor, name, help);
        count(c, "--depth", cfg.depth, "Depth");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : digitree::cli::kExitUsage;
    }
    cfg.format = format == "text" ? Format::text : Format::json;

    const auto result = digitree::cli::run(cfg);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
