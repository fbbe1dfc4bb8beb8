#include "onep/interchange.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace onep {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t j = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > j) out.push_back(s.substr(j, i - j));
    }
    return out;
}

std::uint32_t number(std::string_view tok, std::size_t line) {
    std::uint32_t x = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size() || x == kNone) {
        fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return x;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Places item at index id, growing the table; rejects duplicates.
template <class T>
void put(std::vector<std::optional<T>>& table, std::uint32_t id, T item, std::size_t line,
         const char* what) {
    if (id >= table.size()) table.resize(static_cast<std::size_t>(id) + 1);
    if (table[id]) fail(line, std::string("duplicate ") + what + " " + std::to_string(id));
    table[id] = std::move(item);
}

template <class T>
std::vector<T> dense(std::vector<std::optional<T>>& table, const char* what) {
    std::vector<T> out;
    out.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!table[i]) {
            throw Error(ErrorCode::ParseError, std::string("missing ") + what + " " + std::to_string(i));
        }
        out.push_back(std::move(*table[i]));
    }
    return out;
}

struct VertexRec {
    VertexKind kind;
    std::string label;
};

}  // namespace

RawDrawing parse_1pg(std::string_view text) {
    std::vector<std::optional<VertexRec>> verts;
    std::vector<std::optional<RawEdge>> edges;
    std::vector<std::optional<std::vector<DartRef>>> rots;
    bool header = false;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != kFormatHeader) fail(line_no, "expected header '" + std::string(kFormatHeader) + "'");
            header = true;
            continue;
        }
        const auto tok = split(line);
        const std::string_view tag = tok[0];
        if (tag == "v") {
            if (tok.size() < 3) fail(line_no, "vertex record needs an id and a kind");
            VertexRec rec;
            if (tok[2] == "T") {
                rec.kind = VertexKind::True;
            } else if (tok[2] == "F") {
                rec.kind = VertexKind::Fake;
            } else {
                fail(line_no, "vertex kind must be T or F");
            }
            if (tok.size() > 3) {
                const auto start = static_cast<std::size_t>(tok[3].data() - line.data());
                rec.label = std::string(line.substr(start));
            }
            put(verts, number(tok[1], line_no), std::move(rec), line_no, "vertex");
        } else if (tag == "e") {
            if (tok.size() < 4) fail(line_no, "edge record needs an id and two endpoints");
            RawEdge e{number(tok[2], line_no), number(tok[3], line_no), {}};
            for (std::size_t i = 4; i < tok.size(); ++i) e.crossings.push_back(number(tok[i], line_no));
            put(edges, number(tok[1], line_no), std::move(e), line_no, "edge");
        } else if (tag == "r") {
            if (tok.size() < 2) fail(line_no, "rotation record needs a vertex id");
            std::vector<DartRef> darts;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const auto colon = tok[i].find(':');
                if (colon == std::string_view::npos || colon + 2 != tok[i].size()) {
                    fail(line_no, "dart must look like <edge>:<w|u|v>");
                }
                Half h;
                switch (tok[i][colon + 1]) {
                    case 'w': h = Half::Whole; break;
                    case 'u': h = Half::USide; break;
                    case 'v': h = Half::VSide; break;
                    default: fail(line_no, "dart half must be w, u or v");
                }
                darts.push_back({number(tok[i].substr(0, colon), line_no), h});
            }
            put(rots, number(tok[1], line_no), std::move(darts), line_no, "rotation");
        } else {
            fail(line_no, "unknown record '" + std::string(tag) + "'");
        }
    }
    if (!header) fail(line_no, "empty document");
    if (rots.size() > verts.size()) fail(line_no, "rotation for an undeclared vertex");
    rots.resize(verts.size());
    for (auto& r : rots) {
        if (!r) r.emplace();
    }

    RawDrawing raw;
    auto vs = dense(verts, "vertex");
    raw.edges = dense(edges, "edge");
    raw.rotation = dense(rots, "rotation");
    bool any_label = false;
    for (auto& v : vs) {
        raw.kinds.push_back(v.kind);
        any_label = any_label || !v.label.empty();
    }
    if (any_label) {
        for (auto& v : vs) raw.labels.push_back(std::move(v.label));
    }
    return raw;
}

std::string serialize_1pg(const RawDrawing& raw) {
    std::ostringstream os;
    os << kFormatHeader << '\n';
    for (std::size_t v = 0; v < raw.kinds.size(); ++v) {
        os << "v " << v << ' ' << (raw.kinds[v] == VertexKind::True ? 'T' : 'F');
        if (!raw.labels.empty() && !raw.labels[v].empty()) os << ' ' << raw.labels[v];
        os << '\n';
    }
    for (std::size_t e = 0; e < raw.edges.size(); ++e) {
        os << "e " << e << ' ' << raw.edges[e].u << ' ' << raw.edges[e].v;
        for (VertexId x : raw.edges[e].crossings) os << ' ' << x;
        os << '\n';
    }
    for (std::size_t v = 0; v < raw.rotation.size(); ++v) {
        os << "r " << v;
        for (const DartRef& d : raw.rotation[v]) {
            os << ' ' << d.edge << ':' << (d.half == Half::Whole ? 'w' : d.half == Half::USide ? 'u' : 'v');
        }
        os << '\n';
    }
    return os.str();
}

std::string serialize_1pg(const OnePlaneGraph& g) { return serialize_1pg(g.raw()); }

RawDrawing read_1pg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_1pg(ss.str());
}

void write_1pg(const std::string& path, const OnePlaneGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << serialize_1pg(g);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace onep
