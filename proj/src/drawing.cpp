#include "onep/drawing.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace onep {

namespace {

struct SegmentEnds {
    VertexId first;
    VertexId second;
};

SegmentEnds ends_of(const RawEdge& e, Half h) {
    switch (h) {
        case Half::Whole: return {e.u, e.v};
        case Half::USide: return {e.u, e.crossings.front()};
        case Half::VSide: return {e.crossings.front(), e.v};
    }
    return {kNone, kNone};
}

// Moves true vertices ahead of fake ones, keeping relative order.
RawDrawing canonical_order(const RawDrawing& raw) {
    const std::size_t n = raw.kinds.size();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(),
                          [&](VertexId v) { return raw.kinds[v] == VertexKind::True; });
    bool identity = true;
    for (VertexId i = 0; i < n; ++i) identity = identity && order[i] == i;
    if (identity) return raw;

    std::vector<VertexId> index(n);
    for (VertexId i = 0; i < n; ++i) index[order[i]] = i;
    RawDrawing out;
    out.kinds.resize(n);
    out.rotation.resize(n);
    if (!raw.labels.empty()) out.labels.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        out.kinds[index[v]] = raw.kinds[v];
        out.rotation[index[v]] = raw.rotation[v];
        if (!raw.labels.empty()) out.labels[index[v]] = raw.labels[v];
    }
    out.edges = raw.edges;
    for (auto& e : out.edges) {
        e.u = index[e.u];
        e.v = index[e.v];
        for (auto& x : e.crossings) x = index[x];
    }
    return out;
}

}  // namespace

Drawing Drawing::from_trusted_raw(const RawDrawing& input) {
    const RawDrawing raw = canonical_order(input);
    Drawing d;
    const std::size_t n = raw.kinds.size();
    d.num_true_ = static_cast<std::size_t>(
        std::count(raw.kinds.begin(), raw.kinds.end(), VertexKind::True));
    d.labels_ = raw.labels;
    d.labels_.resize(n);

    std::vector<SegmentEnds> ends;
    for (EdgeId e = 0; e < raw.edges.size(); ++e) {
        const RawEdge& re = raw.edges[e];
        EdgeRecord rec{re.u, re.v, re.crossings.empty() ? kNone : re.crossings.front()};
        d.edges_.push_back(rec);
        if (!rec.crossed()) {
            const auto s = static_cast<SegmentId>(d.segments_.size());
            d.segments_.push_back({e, Half::Whole});
            ends.push_back(ends_of(re, Half::Whole));
            d.edge_segments_.push_back({s, kNone});
        } else {
            const auto s = static_cast<SegmentId>(d.segments_.size());
            d.segments_.push_back({e, Half::USide});
            d.segments_.push_back({e, Half::VSide});
            ends.push_back(ends_of(re, Half::USide));
            ends.push_back(ends_of(re, Half::VSide));
            d.edge_segments_.push_back({s, s + 1});
        }
    }

    std::vector<std::vector<DartId>> rotations(n);
    // A loop lists its segment twice at the same vertex: first occurrence gets dart 2s.
    std::vector<char> first_used(d.segments_.size(), 0);
    for (VertexId w = 0; w < n; ++w) {
        for (const DartRef& ref : raw.rotation[w]) {
            const SegmentId s = d.segment_of_edge(ref.edge, ref.half);
            DartId dart;
            if (ends[s].first == w && !(ends[s].second == w && first_used[s])) {
                dart = 2 * s;
                first_used[s] = 1;
            } else {
                dart = 2 * s + 1;
            }
            rotations[w].push_back(dart);
        }
    }
    d.map_ = PlanarMap(raw.kinds, std::move(rotations));
    return d;
}

RawDrawing Drawing::to_raw() const {
    RawDrawing raw;
    const std::size_t n = map_.num_vertices();
    raw.kinds.resize(n);
    for (VertexId v = 0; v < n; ++v) raw.kinds[v] = map_.kind(v);
    raw.labels = labels_;
    if (std::all_of(raw.labels.begin(), raw.labels.end(),
                    [](const std::string& s) { return s.empty(); })) {
        raw.labels.clear();
    }
    for (const auto& e : edges_) {
        RawEdge re{e.u, e.v, {}};
        if (e.crossed()) re.crossings.push_back(e.crossing);
        raw.edges.push_back(std::move(re));
    }
    raw.rotation.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        for (DartId d : map_.rotation(v)) {
            const SegmentRef s = segments_[segment_of(d)];
            raw.rotation[v].push_back({s.edge, s.half});
        }
    }
    return raw;
}

SegmentId Drawing::segment_of_edge(EdgeId e, Half half) const {
    return edge_segments_[e][half == Half::VSide ? 1 : 0];
}

DartId Drawing::dart_from(EdgeId e, VertexId w) const {
    const EdgeRecord& rec = edges_[e];
    const SegmentId s = segment_of_edge(e, rec.crossed() ? (w == rec.u ? Half::USide : Half::VSide)
                                                         : Half::Whole);
    return map_.origin(2 * s) == w ? 2 * s : 2 * s + 1;
}

bool Drawing::adjacent(VertexId u, VertexId v) const {
    for (DartId d : map_.rotation(u)) {
        if (edges_[edge_of_dart(d)].other(u) == v) return true;
    }
    return false;
}

VertexId Drawing::add_true_vertex(std::string label) {
    const auto at = static_cast<VertexId>(num_true_);
    map_.insert_vertex(at, VertexKind::True);
    for (auto& e : edges_) {
        if (e.crossed() && e.crossing >= at) ++e.crossing;
    }
    labels_.insert(labels_.begin() + at, std::move(label));
    ++num_true_;
    return at;
}

EdgeId Drawing::add_edge(VertexId u, DartId corner_u, VertexId v, DartId corner_v) {
    const auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, kNone});
    const SegmentId s = map_.add_segment(u, corner_u, v, corner_v);
    segments_.push_back({e, Half::Whole});
    edge_segments_.push_back({s, kNone});
    return e;
}

EdgeId Drawing::add_crossing_edge(VertexId u, DartId corner_u, DartId crossed, VertexId v,
                                  DartId corner_v) {
    const SegmentId s = segment_of(crossed);
    const EdgeId old = segments_[s].edge;
    assert(segments_[s].half == Half::Whole);
    const VertexId a = map_.origin(2 * s);
    const bool crossed_is_first = (crossed == 2 * s);

    const auto sub = map_.subdivide(s, VertexKind::Fake);
    const VertexId x = sub.vertex;
    const SegmentId t = sub.tail;
    labels_.emplace_back();
    const bool a_is_u = (a == edges_[old].u);
    segments_[s] = {old, a_is_u ? Half::USide : Half::VSide};
    segments_.push_back({old, a_is_u ? Half::VSide : Half::USide});
    edge_segments_[old] = a_is_u ? std::array<SegmentId, 2>{s, t} : std::array<SegmentId, 2>{t, s};
    edges_[old].crossing = x;

    // Corners at x: the dart leaving x along the face of `crossed` and along its twin.
    const DartId corner_x_u = crossed_is_first ? 2 * t : 2 * s + 1;
    const DartId corner_x_v = crossed_is_first ? 2 * s + 1 : 2 * t;

    const auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, x});
    const SegmentId s1 = map_.add_segment(u, corner_u, x, corner_x_u);
    segments_.push_back({e, Half::USide});
    const SegmentId s2 = map_.add_segment(x, corner_x_v, v, corner_v);
    segments_.push_back({e, Half::VSide});
    edge_segments_.push_back({s1, s2});
    return e;
}

RawDrawing remove_edge(const RawDrawing& raw, EdgeId e) {
    RawDrawing out = raw;
    const RawEdge gone = raw.edges[e];
    VertexId fake = kNone;
    EdgeId partner = kNone;
    if (!gone.crossings.empty()) {
        fake = gone.crossings.front();
        for (EdgeId f = 0; f < raw.edges.size(); ++f) {
            if (f != e && !raw.edges[f].crossings.empty() && raw.edges[f].crossings.front() == fake) {
                partner = f;
            }
        }
    }

    for (auto& rot : out.rotation) {
        std::vector<DartRef> kept;
        for (DartRef ref : rot) {
            if (ref.edge == e) continue;
            if (ref.edge == partner) ref.half = Half::Whole;
            kept.push_back(ref);
        }
        // The partner's two halves at its endpoints collapse into one whole dart each.
        rot = std::move(kept);
    }
    if (partner != kNone) out.edges[partner].crossings.clear();
    out.edges.erase(out.edges.begin() + e);
    for (auto& rot : out.rotation) {
        for (auto& ref : rot) {
            if (ref.edge > e) --ref.edge;
        }
    }
    if (fake != kNone) {
        out.kinds.erase(out.kinds.begin() + fake);
        out.rotation.erase(out.rotation.begin() + fake);
        if (!out.labels.empty()) out.labels.erase(out.labels.begin() + fake);
        for (auto& re : out.edges) {
            if (re.u > fake) --re.u;
            if (re.v > fake) --re.v;
            for (auto& x : re.crossings) {
                if (x > fake) --x;
            }
        }
    }
    return out;
}

Drawing Drawing::without_edge(EdgeId e) const {
    return from_trusted_raw(remove_edge(to_raw(), e));
}

DartId corner_in_walk(const PlanarMap& map, std::span<const DartId> walk, VertexId v) {
    DartId best = kNone;
    for (DartId d : walk) {
        if (map.origin(d) != v) continue;
        if (best == kNone || map.position(d) < map.position(best)) best = d;
    }
    return best;
}

}  // namespace onep
