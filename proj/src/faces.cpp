#include "onep/faces.hpp"

#include <algorithm>

namespace onep {

std::size_t FaceSet::count(FaceKind k) const {
    return static_cast<std::size_t>(std::count(kind.begin(), kind.end(), k));
}

bool FaceSet::on_boundary(FaceId f, VertexId v) const {
    return std::binary_search(boundary[f].begin(), boundary[f].end(), v);
}

std::vector<FaceId> FaceSet::faces_at(VertexId v) const {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < boundary.size(); ++f) {
        if (on_boundary(f, v)) out.push_back(f);
    }
    return out;
}

FaceSet trace_faces(const PlanarMap& map) {
    FaceSet fs;
    fs.face_of_dart.assign(map.num_darts(), kNone);
    for (DartId start = 0; start < map.num_darts(); ++start) {
        if (fs.face_of_dart[start] != kNone) continue;
        const auto f = static_cast<FaceId>(fs.walks.size());
        auto walk = face_walk(map, start);
        std::vector<VertexId> verts;
        verts.reserve(walk.size());
        bool fake = false;
        for (DartId d : walk) {
            fs.face_of_dart[d] = f;
            verts.push_back(map.origin(d));
            fake = fake || map.is_fake(map.origin(d));
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        fs.walks.push_back(std::move(walk));
        fs.boundary.push_back(std::move(verts));
        fs.kind.push_back(fake ? FaceKind::Fake : FaceKind::True);
    }
    return fs;
}

}  // namespace onep
