#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "onep/one_plane_graph.hpp"

namespace onep {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

class Collector {
public:
    void add(ErrorCode code, std::string detail) {
        out.push_back({code, std::move(detail)});
    }
    bool has(ErrorCode code) const {
        return std::any_of(out.begin(), out.end(), [&](const Violation& v) { return v.code == code; });
    }
    std::vector<Violation> out;
};

bool half_valid(const RawEdge& e, Half h) {
    return e.crossings.empty() ? h == Half::Whole : h != Half::Whole;
}

// Checks that only need ids; returns false if the map cannot be built.
bool raw_checks(const RawDrawing& raw, Collector& c) {
    const std::size_t n = raw.kinds.size();
    const std::size_t m = raw.edges.size();
    bool buildable = true;

    if (raw.rotation.size() != n) {
        c.add(ErrorCode::BadReference, "rotation table has " + str(raw.rotation.size()) +
                                           " entries for " + str(n) + " vertices");
        return false;
    }
    if (!raw.labels.empty() && raw.labels.size() != n) {
        c.add(ErrorCode::BadReference, "label table size differs from vertex count");
    }

    // Edge table.
    std::vector<std::vector<EdgeId>> crossing_edges(n);
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e = 0; e < m; ++e) {
        const RawEdge& re = raw.edges[e];
        const std::string name = "edge " + str(e);
        if (re.u >= n || re.v >= n) {
            c.add(ErrorCode::BadReference, name + " has an endpoint out of range");
            buildable = false;
            continue;
        }
        if (raw.kinds[re.u] != VertexKind::True || raw.kinds[re.v] != VertexKind::True) {
            c.add(ErrorCode::BadReference, name + " has a fake endpoint");
            buildable = false;
        }
        if (re.u == re.v) {
            c.add(ErrorCode::NotSimple, name + " is a loop at " + str(re.u));
        } else if (!pairs.emplace(std::min(re.u, re.v), std::max(re.u, re.v)).second) {
            c.add(ErrorCode::NotSimple,
                  name + " is parallel to another edge " + str(re.u) + "-" + str(re.v));
        }
        if (re.crossings.size() > 1) {
            c.add(ErrorCode::EdgeMulticrossed,
                  name + " is crossed " + str(re.crossings.size()) + " times");
            buildable = false;
        }
        for (VertexId x : re.crossings) {
            if (x >= n || raw.kinds[x] != VertexKind::Fake) {
                c.add(ErrorCode::BadReference, name + " lists a crossing that is not a fake vertex");
                buildable = false;
            } else {
                crossing_edges[x].push_back(e);
            }
        }
    }
    if (!buildable) return false;

    // Dart pairing: every segment end must be listed exactly once, at the right vertex.
    std::map<std::tuple<VertexId, EdgeId, Half>, int> expected;
    for (EdgeId e = 0; e < m; ++e) {
        const RawEdge& re = raw.edges[e];
        if (re.crossings.empty()) {
            ++expected[{re.u, e, Half::Whole}];
            ++expected[{re.v, e, Half::Whole}];
        } else {
            const VertexId x = re.crossings.front();
            ++expected[{re.u, e, Half::USide}];
            ++expected[{x, e, Half::USide}];
            ++expected[{x, e, Half::VSide}];
            ++expected[{re.v, e, Half::VSide}];
        }
    }
    std::map<std::tuple<VertexId, EdgeId, Half>, int> seen;
    for (VertexId w = 0; w < n; ++w) {
        for (const DartRef& ref : raw.rotation[w]) {
            if (ref.edge >= m || !half_valid(raw.edges[ref.edge], ref.half)) {
                c.add(ErrorCode::BadReference,
                      "rotation of " + str(w) + " lists an unknown segment of edge " + str(ref.edge));
                buildable = false;
                continue;
            }
            ++seen[{w, ref.edge, ref.half}];
        }
    }
    if (!buildable) return false;
    if (seen != expected) {
        for (const auto& [key, count] : expected) {
            const auto it = seen.find(key);
            if (it == seen.end() || it->second != count) {
                c.add(ErrorCode::BadInvolution, "segment end of edge " + str(std::get<1>(key)) +
                                                    " missing or duplicated at vertex " +
                                                    str(std::get<0>(key)));
            }
        }
        for (const auto& [key, count] : seen) {
            if (!expected.count(key)) {
                c.add(ErrorCode::BadInvolution, "segment of edge " + str(std::get<1>(key)) +
                                                    " listed at non-incident vertex " +
                                                    str(std::get<0>(key)));
            }
        }
        buildable = false;
    }

    // Fake vertices; these checks only need the edge table and rotation sizes.
    for (VertexId x = 0; x < n; ++x) {
        if (raw.kinds[x] != VertexKind::Fake) continue;
        const std::string name = "fake vertex " + str(x);
        if (raw.rotation[x].size() != 4) {
            c.add(ErrorCode::FakeDegreeNot4, name + " has degree " + str(raw.rotation[x].size()));
        }
        const auto& es = crossing_edges[x];
        if (es.size() != 2) {
            c.add(ErrorCode::FakeNotTransversal,
                  name + " is the crossing of " + str(es.size()) + " edges");
            continue;
        }
        const RawEdge& a = raw.edges[es[0]];
        const RawEdge& b = raw.edges[es[1]];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
            c.add(ErrorCode::AdjacentEdgesCross, "edges " + str(es[0]) + " and " + str(es[1]) +
                                                     " share an endpoint and cross at " + str(x));
        }
        const auto& rot = raw.rotation[x];
        if (rot.size() == 4 &&
            !(rot[0].edge == rot[2].edge && rot[1].edge == rot[3].edge && rot[0].edge != rot[1].edge)) {
            c.add(ErrorCode::FakeNotTransversal, name + " does not alternate between its two edges");
        }
    }
    return buildable;
}

void map_checks(const Drawing& d, Collector& c) {
    const PlanarMap& map = d.map();
    if (!map.is_connected()) c.add(ErrorCode::NotConnected, "the planarization is disconnected");
    const FaceSet faces = trace_faces(map);
    const long long v = static_cast<long long>(map.num_vertices());
    const long long e = static_cast<long long>(map.num_segments());
    const long long f = map.num_darts() == 0 ? 1 : static_cast<long long>(faces.size());
    if (map.is_connected() && v - e + f != 2) {
        c.add(ErrorCode::PositiveGenus, "V-E+F = " + std::to_string(v - e + f));
    }
    for (VertexId x = static_cast<VertexId>(d.num_true()); x < map.num_vertices(); ++x) {
        std::vector<FaceId> around;
        for (DartId dart : map.rotation(x)) around.push_back(faces.face_of_dart[dart]);
        std::sort(around.begin(), around.end());
        if (std::adjacent_find(around.begin(), around.end()) != around.end()) {
            c.add(ErrorCode::FakeFacesNotDistinct,
                  "fake vertex " + str(x) + " meets the same face twice");
        }
    }
}

}  // namespace

ValidationResult validate(const RawDrawing& raw) {
    Collector c;
    ValidationResult result;
    if (!raw_checks(raw, c)) {
        result.violations = std::move(c.out);
        return result;
    }
    Drawing d = Drawing::from_trusted_raw(raw);
    map_checks(d, c);
    if (c.out.empty()) result.graph.emplace(OnePlaneGraph(std::move(d)));
    result.violations = std::move(c.out);
    return result;
}

std::string ValidationResult::report() const {
    std::ostringstream os;
    for (const auto& v : violations) os << to_string(v.code) << ": " << v.detail << '\n';
    return os.str();
}

OnePlaneGraph finalize(const RawDrawing& raw) {
    ValidationResult r = validate(raw);
    if (!r.ok()) throw Error(ErrorCode::ValidationFailed, r.report());
    return std::move(*r.graph);
}

OnePlaneGraph finalize(const Drawing& d) { return finalize(d.to_raw()); }

}  // namespace onep
