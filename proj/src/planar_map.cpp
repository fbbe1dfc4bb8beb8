#include "onep/planar_map.hpp"

#include <cassert>

namespace onep {

PlanarMap::PlanarMap(std::vector<VertexKind> kinds, std::vector<std::vector<DartId>> rotations)
    : kinds_(std::move(kinds)), rotation_(std::move(rotations)) {
    assert(kinds_.size() == rotation_.size());
    std::size_t darts = 0;
    for (const auto& r : rotation_) darts += r.size();
    origin_.assign(darts, kNone);
    position_.assign(darts, 0);
    for (VertexId v = 0; v < rotation_.size(); ++v) {
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            const DartId d = rotation_[v][i];
            assert(d < darts && origin_[d] == kNone);
            origin_[d] = v;
            position_[d] = i;
        }
    }
}

DartId PlanarMap::next_cw(DartId d) const {
    const auto& rot = rotation_[origin_[d]];
    const std::size_t i = position_[d] + 1;
    return rot[i == rot.size() ? 0 : i];
}

DartId PlanarMap::prev_cw(DartId d) const {
    const auto& rot = rotation_[origin_[d]];
    const std::size_t i = position_[d];
    return rot[i == 0 ? rot.size() - 1 : i - 1];
}

VertexId PlanarMap::add_vertex(VertexKind kind) {
    kinds_.push_back(kind);
    rotation_.emplace_back();
    return static_cast<VertexId>(kinds_.size() - 1);
}

VertexId PlanarMap::insert_vertex(VertexId at, VertexKind kind) {
    assert(at <= kinds_.size());
    kinds_.insert(kinds_.begin() + at, kind);
    rotation_.insert(rotation_.begin() + at, std::vector<DartId>{});
    for (auto& o : origin_) {
        if (o >= at) ++o;
    }
    return at;
}

void PlanarMap::reindex(VertexId v) {
    const auto& rot = rotation_[v];
    for (std::size_t i = 0; i < rot.size(); ++i) position_[rot[i]] = i;
}

SegmentId PlanarMap::add_segment(VertexId a, DartId corner_a, VertexId b, DartId corner_b) {
    const auto s = static_cast<SegmentId>(num_segments());
    const DartId da = 2 * s;
    const DartId db = 2 * s + 1;
    origin_.push_back(a);
    origin_.push_back(b);
    position_.push_back(0);
    position_.push_back(0);

    auto place = [&](VertexId v, DartId corner, DartId d) {
        auto& rot = rotation_[v];
        if (corner == kNone) {
            rot.push_back(d);
        } else {
            assert(origin_[corner] == v);
            rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(position_[corner]), d);
        }
        reindex(v);
    };
    place(a, corner_a, da);
    place(b, corner_b, db);
    return s;
}

PlanarMap::Subdivision PlanarMap::subdivide(SegmentId s, VertexKind kind) {
    const DartId d1 = 2 * s + 1;
    const VertexId b = origin_[d1];
    const VertexId x = add_vertex(kind);
    const auto t = static_cast<SegmentId>(num_segments());
    const DartId t0 = 2 * t;
    const DartId t1 = 2 * t + 1;
    origin_.push_back(x);
    origin_.push_back(b);
    position_.push_back(0);
    position_.push_back(0);

    // t1 takes the place of d1 at b; d1 moves to x.
    rotation_[b][position_[d1]] = t1;
    position_[t1] = position_[d1];
    origin_[d1] = x;
    rotation_[x] = {d1, t0};
    reindex(x);
    return {x, t};
}

bool PlanarMap::is_connected() const {
    const std::size_t n = num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (DartId d : rotation_[v]) {
            const VertexId w = head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

std::vector<DartId> face_walk(const PlanarMap& map, DartId start) {
    std::vector<DartId> walk;
    DartId d = start;
    do {
        walk.push_back(d);
        d = map.face_next(d);
    } while (d != start);
    return walk;
}

}  // namespace onep
