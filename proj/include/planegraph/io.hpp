#pragma once

// Graph serialization.
//
// planar_code: optional ASCII header ">>planar_code<<", then per graph one
// byte n (n <= 255) followed by each vertex's clockwise neighbors as bytes,
// each list 0-terminated.
//
// Text: "pg <n>", then n lines "<i>: <j1> <j2> ...", '#' comments, blank
// lines ignored, optional "outer: <u> <v>" naming a directed edge of the
// outer face.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "planegraph/core.hpp"

namespace planegraph {

inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

inline void write_planar_code(std::ostream& os, const PlaneGraph& g, bool with_header = true) {
    require(g.vertex_count <= 255, Errc::FormatError,
            "planar_code stores at most 255 vertices, graph has " +
                std::to_string(g.vertex_count));
    if (with_header) os.write(kPlanarCodeHeader, 15);
    os.put(static_cast<char>(g.vertex_count));
    for (VertexId u = 1; u <= g.vertex_count; ++u) {
        for (VertexId w : g.rotations[u]) os.put(static_cast<char>(w));
        os.put(0);
    }
}

inline std::string planar_code_bytes(const PlaneGraph& g, bool with_header = true) {
    std::ostringstream os;
    write_planar_code(os, g, with_header);
    return os.str();
}

/// Reads every graph record in the stream. The outer face of each graph
/// defaults to the lexicographically smallest orbit (the format carries no
/// outer-face designation).
inline std::vector<PlaneGraph> read_planar_code(std::istream& is) {
    std::vector<PlaneGraph> graphs;
    long long offset = 0;
    int first = is.peek();
    if (first == '>') {
        char header[16] = {};
        is.read(header, 15);
        require(is.gcount() == 15 && std::string(header, 15) == kPlanarCodeHeader,
                Errc::FormatError, "bad planar_code header at byte 0");
        offset += 15;
    }
    while (true) {
        int n = is.get();
        if (n == EOF) break;
        long long record_at = offset;
        ++offset;
        require(n >= 1, Errc::FormatError,
                "planar_code record with n = 0 at byte " + std::to_string(record_at));
        std::vector<std::vector<VertexId>> rot(static_cast<size_t>(n) + 1);
        for (int u = 1; u <= n; ++u) {
            while (true) {
                int b = is.get();
                ++offset;
                require(b != EOF, Errc::FormatError,
                        "truncated planar_code record at byte " + std::to_string(offset - 1));
                if (b == 0) break;
                rot[u].push_back(b);
            }
        }
        try {
            graphs.push_back(build_plane_graph(n, std::move(rot)));
        } catch (const GraphError& e) {
            fail(Errc::FormatError, "invalid graph in planar_code record at byte " +
                                        std::to_string(record_at) + ": " + e.what());
        }
    }
    return graphs;
}

inline void write_text(std::ostream& os, const PlaneGraph& g,
                       const std::string& comment = std::string()) {
    if (!comment.empty()) os << "# " << comment << "\n";
    os << "pg " << g.vertex_count << "\n";
    for (VertexId u = 1; u <= g.vertex_count; ++u) {
        os << u << ":";
        for (VertexId w : g.rotations[u]) os << " " << w;
        os << "\n";
    }
    const auto& outer = g.outer_face().boundary;
    if (!outer.empty()) os << "outer: " << outer.front().from << " " << outer.front().to << "\n";
}

inline std::vector<PlaneGraph> read_text(std::istream& is) {
    std::vector<PlaneGraph> graphs;
    std::string line;
    int line_no = 0;

    int n = -1;
    int rows_seen = 0;
    std::vector<std::vector<VertexId>> rot;
    std::optional<DirectedEdge> outer_hint;
    int block_line = 0;

    auto flush = [&]() {
        if (n < 0) return;
        require(rows_seen == n, Errc::FormatError,
                "pg block at line " + std::to_string(block_line) + " lists " +
                    std::to_string(rows_seen) + " of " + std::to_string(n) + " vertices");
        graphs.push_back(build_plane_graph(n, std::move(rot), outer_hint));
        n = -1;
        rows_seen = 0;
        rot.clear();
        outer_hint.reset();
    };

    while (std::getline(is, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "pg") {
            flush();
            block_line = line_no;
            require(static_cast<bool>(ls >> n) && n >= 1, Errc::FormatError,
                    "bad vertex count at line " + std::to_string(line_no));
            rot.assign(static_cast<size_t>(n) + 1, {});
        } else if (head == "outer:") {
            require(n >= 1, Errc::FormatError,
                    "outer line before pg header at line " + std::to_string(line_no));
            DirectedEdge e;
            require(static_cast<bool>(ls >> e.from >> e.to), Errc::FormatError,
                    "bad outer line at line " + std::to_string(line_no));
            outer_hint = e;
        } else {
            require(n >= 1, Errc::FormatError,
                    "vertex row before pg header at line " + std::to_string(line_no));
            require(!head.empty() && head.back() == ':', Errc::FormatError,
                    "expected '<i>:' at line " + std::to_string(line_no));
            int u = 0;
            try {
                u = std::stoi(head.substr(0, head.size() - 1));
            } catch (...) {
                fail(Errc::FormatError, "bad vertex id at line " + std::to_string(line_no));
            }
            require(u >= 1 && u <= n, Errc::FormatError,
                    "vertex id out of range at line " + std::to_string(line_no));
            require(rot[u].empty(), Errc::FormatError,
                    "duplicate row for vertex " + std::to_string(u) + " at line " +
                        std::to_string(line_no));
            int w;
            while (ls >> w) rot[u].push_back(w);
            require(!rot[u].empty(), Errc::FormatError,
                    "empty rotation at line " + std::to_string(line_no));
            ++rows_seen;
        }
    }
    flush();
    return graphs;
}

/// 64-bit FNV-1a over the rotation system; format-independent identity used
/// by certificates.
inline std::uint64_t graph_hash(const PlaneGraph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count));
    for (VertexId u = 1; u <= g.vertex_count; ++u) {
        mix(0xfffffffffffffffeull);
        for (VertexId w : g.rotations[u]) mix(static_cast<std::uint64_t>(w));
    }
    return h;
}

inline std::string graph_hash_hex(const PlaneGraph& g) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = graph_hash(g);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

}  // namespace planegraph
