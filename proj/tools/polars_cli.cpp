// polars: polar and reciprocal polar curves, singular points and component coverage.

#include "polars/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace polars;

namespace {

std::vector<Rational> rationals(const std::string& text, std::size_t n, const char* what) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != n) throw std::invalid_argument(std::string(what) + " expects " + std::to_string(n) + " comma-separated rationals");
    return out;
}

void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar varieties of real plane curves"};
    app.require_subcommand(1);

    std::string curve, corpus, direction, center, quadric, box, out, svg, overlay;
    int resolution = 0;
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--curve", curve, "curve polynomial in X1, X2 (x, y also accepted)");
        sub->add_option("--corpus", corpus, "built-in example id");
        sub->add_option("--box", box, "x0,x1,y0,y1");
        sub->add_option("--resolution", resolution, "grid size, a power of two");
        sub->add_option("--out", out, "report path (default stdout)");
    };
    CLI::App* polar = app.add_subcommand("polar", "classical polar curve and component coverage");
    CLI::App* reciprocal = app.add_subcommand("reciprocal", "reciprocal polar curve and component coverage");
    CLI::App* singular = app.add_subcommand("singular", "singular points and their classification");
    CLI::App* components = app.add_subcommand("components", "connected components inside the box");
    CLI::App* render = app.add_subcommand("render", "SVG of the curve, a polar curve and its points");
    CLI::App* verify = app.add_subcommand("verify", "check the expected facts of corpus entries");
    for (CLI::App* s : {polar, reciprocal, singular, components, render, verify}) common(s);
    for (CLI::App* s : {polar, render}) s->add_option("--direction", direction, "flag point (0 : a : b) as a,b");
    for (CLI::App* s : {reciprocal, render}) {
        s->add_option("--center", center, "centre x,y of the distance quadric");
        s->add_option("--quadric", quadric, "quadratic form in X0, X1, X2, or 'standard'");
    }
    render->add_option("--svg", svg, "SVG output path")->required();
    render->add_option("--overlay", overlay, "polar, reciprocal or none")->check(CLI::IsMember({"polar", "reciprocal", "none"}));

    CLI11_PARSE(app, argc, argv);

    Report report;
    try {
        JobSpec spec;
        if (!curve.empty()) spec.curve = curve;
        if (!corpus.empty()) spec.corpus = corpus;
        if (!direction.empty()) {
            auto v = rationals(direction, 2, "--direction");
            spec.direction = RationalPair(v[0], v[1]);
        }
        if (!center.empty()) {
            auto v = rationals(center, 2, "--center");
            spec.center = RationalPair(v[0], v[1]);
        }
        if (!quadric.empty()) spec.quadric = quadric;
        if (!box.empty()) {
            auto v = rationals(box, 4, "--box");
            spec.box = Box{Interval(v[0], v[1]), Interval(v[2], v[3])};
        }
        if (resolution) spec.resolution = resolution;
        spec.overlay = overlay;

        if (polar->parsed())
            report = cmd_polar(spec);
        else if (reciprocal->parsed())
            report = cmd_reciprocal(spec);
        else if (singular->parsed())
            report = cmd_singular(spec);
        else if (components->parsed())
            report = cmd_components(spec);
        else if (verify->parsed())
            report = cmd_verify(spec);
        else {
            write(svg, cmd_render(spec, &report));
        }
    } catch (const std::exception& e) {
        report.command = app.get_subcommands().front()->get_name();
        report.curve = curve.empty() ? corpus : curve;
        report.error = e.what();
        report.exit_code = 1;
    }
    try {
        write(render->parsed() && out.empty() ? "" : out, render->parsed() && out.empty() ? "" : serialize(report));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (!report.error.empty()) std::cerr << "error: " << report.error << "\n";
    if (!report.suggestion.empty()) std::cerr << "suggestion: " << report.suggestion << "\n";
    return report.exit_code;
}
