#include "frp/jsonio.hpp"

#include <json.hpp>

namespace frp {

namespace {

using Json = nlohmann::ordered_json;

Json dist_or_null(Dist d) {
    if (is_inf(d)) return nullptr;
    return d;
}

Json edge_tuple(const Graph& g, EdgeId id) {
    const Edge& e = g.edges[static_cast<std::size_t>(id)];
    return Json::array({e.tail, e.head, e.w, id});
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string path_to_json(const PathSeq& p) {
    Json j;
    j["vertices"] = p.verts;
    j["length"] = dist_or_null(p.length());
    return finish(j);
}

std::string f_table_to_json(const FTable& f) {
    Json j;
    j["h"] = f.h;
    Json entries = Json::array();
    for (std::int32_t row = 1; row < f.h; ++row) {
        for (std::int32_t col = 0; col < row; ++col) {
            Json e;
            e["j"] = row;
            e["i"] = col;
            e["d"] = dist_or_null(f.at(row, col));
            entries.push_back(std::move(e));
        }
    }
    j["entries"] = std::move(entries);
    return finish(j);
}

std::string two_fault_table_to_json(const TwoFaultTable& t, const Graph& g) {
    Json j;
    j["s"] = t.s;
    j["t"] = t.t;
    j["path"] = t.path.verts;
    Json entries = Json::array();
    for (const auto& en : t.entries) {
        Json e;
        e["e1"] = edge_tuple(g, en.e1);
        e["e2"] = edge_tuple(g, en.e2);
        e["d"] = dist_or_null(en.d);
        e["case"] = to_string(en.solved_by);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return finish(j);
}

std::string fault_tuple_table_to_json(const FaultTupleTable& t, const Graph& g) {
    Json j;
    j["k"] = t.k;
    j["s"] = t.s;
    j["t"] = t.t;
    Json entries = Json::array();
    for (const auto& en : t.entries) {
        Json e;
        Json faults = Json::array();
        for (EdgeId id : en.faults) faults.push_back(edge_tuple(g, id));
        e["faults"] = std::move(faults);
        e["d"] = dist_or_null(en.d);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return finish(j);
}

std::string gadget_layout_to_json(const GadgetLayout& lay) {
    Json j;
    j["k"] = lay.params.k;
    j["L"] = lay.params.L;
    j["base"] = lay.params.base;
    j["bucket"] = lay.params.b;
    j["n"] = lay.params.n;
    j["s"] = lay.s;
    j["t"] = lay.t;
    j["layers"] = lay.p;
    j["chunk_edges"] = lay.chunk_edge;
    j["q"] = lay.q;
    j["a"] = lay.a;
    j["b"] = lay.b;
    j["c"] = lay.c;
    j["adjacency"] = lay.adjacency;
    Json conns = Json::array();
    for (const auto& cn : lay.connections) {
        Json c;
        c["from"] = cn.from;
        c["to"] = cn.to;
        c["length"] = cn.length;
        conns.push_back(std::move(c));
    }
    j["connections"] = std::move(conns);
    j["internal"] = lay.n_internal;
    return finish(j);
}

}  // namespace frp
