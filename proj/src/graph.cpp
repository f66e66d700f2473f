#include "motifspectral/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace motifspectral {

DirectedGraph::DirectedGraph(index_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.src != b.src ? a.src < b.src : a.dst < b.dst; });
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.src < 0 || ed.src >= n || ed.dst < 0 || ed.dst >= n)
            throw std::out_of_range("graph: vertex id out of range");
        if (ed.src == ed.dst)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(ed.src));
        if (!(ed.weight > 0.0) || !std::isfinite(ed.weight))
            throw std::invalid_argument("graph: non-positive or non-finite weight on edge (" +
                                        std::to_string(ed.src) + "," + std::to_string(ed.dst) + ")");
        if (e > 0 && edges_[e - 1].src == ed.src && edges_[e - 1].dst == ed.dst)
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(ed.src) + "," +
                                        std::to_string(ed.dst) + ")");
    }
}

CsrMatrix DirectedGraph::adjacency() const {
    CsrBuilder b(n_);
    size_t e = 0;
    for (index_t i = 0; i < n_; ++i) {
        while (e < edges_.size() && edges_[e].src == i) {
            b.push(edges_[e].dst, edges_[e].weight);
            ++e;
        }
        b.finish_row();
    }
    return b.take();
}

bool DirectedGraph::has_edge(index_t src, index_t dst) const { return weight(src, dst) > 0.0; }

double DirectedGraph::weight(index_t src, index_t dst) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{src, dst},
                               [](const Edge& e, const std::pair<index_t, index_t>& k) {
                                   return e.src != k.first ? e.src < k.first : e.dst < k.second;
                               });
    if (it == edges_.end() || it->src != src || it->dst != dst) return 0.0;
    return it->weight;
}

GraphMatrices build_matrices(const DirectedGraph& g) {
    GraphMatrices m;
    m.G = g.adjacency();
    m.J = m.G.ones_like();
    const CsrMatrix Jt = m.J.transpose();
    m.Jd = m.J.hadamard(Jt);                       // reciprocated pairs
    m.Js = m.J.subtract_support(m.Jd);             // unreciprocated
    m.Gs = m.G.hadamard(m.Js);
    m.Gd = m.G.add(m.G.transpose()).hadamard(m.Jd);  // weight sums on double edges
    return m;
}

GraphMatrices unit_weight_matrices(const GraphMatrices& m) {
    GraphMatrices u;
    u.J = m.J;
    u.Js = m.Js;
    u.Jd = m.Jd;
    u.G = m.J;
    u.Gs = m.Js;
    u.Gd = m.Jd.add(m.Jd);  // both directions weigh 1
    return u;
}

namespace {

bool parse_field(const char*& p, const char* end, index_t& out) {
    auto [ptr, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{} || ptr == p) return false;
    p = ptr;
    return true;
}

bool parse_field(const char*& p, const char* end, double& out) {
    auto [ptr, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{} || ptr == p) return false;
    p = ptr;
    return true;
}

void skip_sep(const char*& p, const char* end) {
    while (p < end && (*p == '\t' || *p == ' ')) ++p;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    struct RawEdge {
        index_t src, dst;
        double w;
    };
    std::vector<RawEdge> raw;
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const char* p = line.data();
        const char* end = p + line.size();
        skip_sep(p, end);
        if (p == end || *p == '#') continue;

        RawEdge e{0, 0, 1.0};
        if (!parse_field(p, end, e.src) || e.src < 0) fail("malformed source id");
        skip_sep(p, end);
        if (!parse_field(p, end, e.dst) || e.dst < 0) fail("malformed target id");
        skip_sep(p, end);
        if (p < end) {
            if (!parse_field(p, end, e.w)) fail("malformed weight");
            skip_sep(p, end);
            if (p < end) fail("trailing characters");
        }
        if (e.src == e.dst) {
            if (opts.drop_self_loops) continue;
            fail("self-loop on vertex " + std::to_string(e.src));
        }
        if (!(e.w > 0.0) || !std::isfinite(e.w)) fail("non-positive weight");
        if (opts.weight_cap && e.w > *opts.weight_cap) e.w = *opts.weight_cap;
        raw.push_back(e);
    }

    // remap external ids to contiguous 0-based ids in ascending order
    std::vector<index_t> ids;
    ids.reserve(raw.size() * 2);
    for (const RawEdge& e : raw) {
        ids.push_back(e.src);
        ids.push_back(e.dst);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    auto internal = [&](index_t ext) {
        return static_cast<index_t>(std::lower_bound(ids.begin(), ids.end(), ext) - ids.begin());
    };

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const RawEdge& e : raw) edges.push_back({internal(e.src), internal(e.dst), e.w});

    LoadedGraph out;
    try {
        out.graph = DirectedGraph(static_cast<index_t>(ids.size()), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
    out.external_ids = std::move(ids);
    return out;
}

void save_edge_list(const std::string& path, const DirectedGraph& g,
                    const std::vector<index_t>& external_ids) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    char buf[64];
    for (const Edge& e : g.edges()) {
        const index_t s = external_ids.empty() ? e.src : external_ids[e.src];
        const index_t d = external_ids.empty() ? e.dst : external_ids[e.dst];
        // %.17g keeps doubles bit-exact through a read-back
        std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
        out << s << '\t' << d << '\t' << buf << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void save_id_mapping(const std::string& path, const std::vector<index_t>& external_ids) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write id mapping: " + path);
    out << "external_id,internal_id\n";
    for (size_t i = 0; i < external_ids.size(); ++i) out << external_ids[i] << ',' << i << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace motifspectral
