#include "polars/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace polars {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else if (c == '&')
            out += "&amp;";
        else
            out += c;
    }
    return out;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, const std::vector<PointRecord>& witnesses,
                       const std::vector<PointRecord>& singular, const std::string& title) {
    if (layers.empty() || !layers.front().map) throw std::invalid_argument("render_svg needs a curve layer");
    const Box& b = layers.front().map->box();
    const double x0 = b.x.lo.get_d(), x1 = b.x.hi.get_d(), y0 = b.y.lo.get_d(), y1 = b.y.hi.get_d();
    const double W = 800, H = W * (y1 - y0) / (x1 - x0);
    const auto px = [&](double x) { return (x - x0) / (x1 - x0) * W; };
    const auto py = [&](double y) { return (y1 - y) / (y1 - y0) * H; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(W) << "\" height=\"" << num(H)
       << "\" viewBox=\"0 0 " << num(W) << ' ' << num(H) << "\">\n"
       << "<title>" << escape(title) << "</title>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(W) << "\" height=\"" << num(H) << "\" fill=\"white\"/>\n";
    // axes
    if (x0 < 0 && x1 > 0)
        os << "<line x1=\"" << num(px(0)) << "\" y1=\"0\" x2=\"" << num(px(0)) << "\" y2=\"" << num(H)
           << "\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
    if (y0 < 0 && y1 > 0)
        os << "<line x1=\"0\" y1=\"" << num(py(0)) << "\" x2=\"" << num(W) << "\" y2=\"" << num(py(0))
           << "\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";

    for (const auto& layer : layers) {
        const ComponentMap& m = *layer.map;
        const double cw = (m.box().x.width().get_d()) / m.resolution(), ch = m.box().y.width().get_d() / m.resolution();
        const double mx = m.box().x.lo.get_d(), my = m.box().y.lo.get_d();
        os << "<g fill=\"" << layer.color << "\" stroke=\"none\">\n";
        // one rectangle per horizontal run of carrying cells
        for (int j = 0; j < m.resolution(); ++j)
            for (int i = 0; i < m.resolution(); ++i) {
                if (!m.carrying(i, j)) continue;
                int k = i;
                while (k + 1 < m.resolution() && m.carrying(k + 1, j)) ++k;
                const double ax = px(mx + i * cw), bx = px(mx + (k + 1) * cw);
                const double ay = py(my + (j + 1) * ch), by = py(my + j * ch);
                os << "<rect x=\"" << num(ax) << "\" y=\"" << num(ay) << "\" width=\"" << num(bx - ax) << "\" height=\""
                   << num(by - ay) << "\"/>\n";
                i = k;
            }
        os << "</g>\n";
    }
    os << "<g fill=\"#d62728\" stroke=\"black\" stroke-width=\"0.5\">\n";
    for (const auto& w : witnesses)
        os << "<circle cx=\"" << num(px(w.x)) << "\" cy=\"" << num(py(w.y)) << "\" r=\"4\"/>\n";
    os << "</g>\n<g fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\">\n";
    for (const auto& s : singular)
        os << "<rect x=\"" << num(px(s.x) - 5) << "\" y=\"" << num(py(s.y) - 5) << "\" width=\"10\" height=\"10\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace polars
