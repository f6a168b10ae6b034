#include "sl2op/render.hpp"

#include <algorithm>
#include <sstream>

namespace sl2op {

namespace {

struct ArcCopy {
    int from, to;
    int level = 0;
};

} // namespace

std::string ascii_graph(const OuterplanarGraph& g) {
    const int base = g.vertex_base();
    const int n = g.num_vertices();

    // expand arc classes into copies; inner copies get lower levels
    std::vector<ArcCopy> copies;
    for (const Arc& a : g.arcs())
        for (int t = 0; t < a.mult; ++t) copies.push_back({a.from, a.to, 0});
    // level = 1 + highest level strictly inside the span; same-class
    // copies stack because earlier copies count as inside
    std::sort(copies.begin(), copies.end(), [](const ArcCopy& a, const ArcCopy& b) {
        return a.to - a.from < b.to - b.from;
    });
    for (size_t i = 0; i < copies.size(); ++i) {
        int lvl = 1;
        for (size_t k = 0; k < i; ++k)
            if (copies[k].from >= copies[i].from && copies[k].to <= copies[i].to)
                lvl = std::max(lvl, copies[k].level + 1);
        copies[i].level = lvl;
    }
    int max_level = 0;
    for (const ArcCopy& c : copies) max_level = std::max(max_level, c.level);

    int label_w = 1;
    for (int v = base; v < base + n; ++v) label_w = std::max(label_w, (int)std::to_string(v).size());
    const int cellw = label_w + 3;
    auto col = [&](int v) { return (v - base) * cellw; };
    const int width = col(base + n - 1) + label_w;

    std::vector<std::string> canvas(max_level, std::string(width, ' '));
    for (const ArcCopy& c : copies) {
        const int row = max_level - c.level;
        canvas[row][col(c.from)] = '.';
        canvas[row][col(c.to)] = '.';
        for (int x = col(c.from) + 1; x < col(c.to); ++x)
            if (canvas[row][x] == ' ') canvas[row][x] = '-';
    }
    // vertical bars from each corner down to the vertex line
    for (const ArcCopy& c : copies) {
        const int row = max_level - c.level;
        for (int r = row + 1; r < max_level; ++r) {
            if (canvas[r][col(c.from)] == ' ' || canvas[r][col(c.from)] == '-') canvas[r][col(c.from)] = '|';
            if (canvas[r][col(c.to)] == ' ' || canvas[r][col(c.to)] == '-') canvas[r][col(c.to)] = '|';
        }
    }
    std::string labels(width, ' ');
    for (int v = base; v < base + n; ++v)
        labels.replace(col(v), std::to_string(v).size(), std::to_string(v));
    canvas.push_back(std::move(labels));

    std::ostringstream out;
    for (std::string& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string arc_list(const OuterplanarGraph& g) {
    if (g.arcs().empty()) return "(no arcs)";
    std::ostringstream out;
    bool first = true;
    for (const Arc& a : g.arcs()) {
        if (!first) out << ' ';
        first = false;
        out << '(' << a.from << ',' << a.to << ')';
        if (a.mult > 1) out << 'x' << a.mult;
    }
    return out.str();
}

} // namespace sl2op
