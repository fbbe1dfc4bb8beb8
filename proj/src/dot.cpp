#include "onep/dot.hpp"

#include <sstream>

namespace onep {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const OnePlaneGraph& g) {
    const Drawing& d = g.drawing();
    const PlanarMap& map = g.map();
    std::ostringstream os;
    os << "graph onep {\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        const std::string& label = d.label(v);
        os << "  " << v << " [label=\"" << (label.empty() ? std::to_string(v) : escape(label)) << "\"];\n";
    }
    std::vector<std::vector<EdgeId>> crossing(map.num_vertices());
    for (EdgeId e = 0; e < g.size(); ++e) {
        if (d.edge(e).crossed()) crossing[d.edge(e).crossing].push_back(e);
    }
    for (VertexId x = static_cast<VertexId>(g.order()); x < map.num_vertices(); ++x) {
        os << "  " << x << " [shape=point, color=red, width=0.08, xlabel=\"";
        for (std::size_t i = 0; i < crossing[x].size(); ++i) {
            os << (i ? " x " : "") << 'e' << crossing[x][i];
        }
        os << "\"];\n";
    }
    for (SegmentId s = 0; s < map.num_segments(); ++s) {
        const SegmentRef ref = d.segment(s);
        os << "  " << map.origin(2 * s) << " -- " << map.origin(2 * s + 1);
        if (ref.half != Half::Whole) {
            os << " [style=dashed, comment=\"e" << ref.edge << "\"]";
        } else {
            os << " [comment=\"e" << ref.edge << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace onep
