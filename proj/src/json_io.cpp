#include "sl2op/json_io.hpp"

#include <stdexcept>

namespace sl2op {

namespace {

Int int_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad integer string: " + s);
    return v;
}

std::vector<int> degrees_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("degrees must be an array");
    std::vector<int> d;
    for (const auto& x : j) d.push_back(x.get<int>());
    return d;
}

} // namespace

Json tensor_to_json(const SparseTensor& t) {
    Json j;
    j["degrees"] = t.space().degrees();
    Json entries = Json::array();
    for (const auto& [e, c] : t.entries()) {
        Json entry;
        entry["e"] = e.e;
        entry["num"] = c.get_num().get_str();
        entry["den"] = c.get_den().get_str();
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

SparseTensor tensor_from_json(const Json& j) {
    SparseTensor t{TensorSpace(degrees_from_json(j.at("degrees")))};
    for (const auto& entry : j.at("entries")) {
        BasisIndex e;
        for (const auto& x : entry.at("e")) e.e.push_back(x.get<int>());
        const Rat c = make_rat(int_from_string(entry.at("num").get<std::string>()),
                               int_from_string(entry.at("den").get<std::string>()));
        t.add_term(e, c);
    }
    return t;
}

Json report_to_json(const DecompositionReport& report) {
    Json j;
    j["degrees"] = report.degrees;
    Json components = Json::array();
    for (const IsotypicComponent& comp : report.components) {
        Json jc;
        jc["d0"] = comp.d0;
        Json graphs = Json::array();
        for (const GraphTensors& gt : comp.graphs) {
            Json jg;
            Json arcs = Json::array();
            for (const Arc& a : gt.graph.arcs()) arcs.push_back(Json::array({a.from, a.to, a.mult}));
            jg["arcs"] = std::move(arcs);
            Json tensors = Json::array();
            for (const SparseTensor& t : gt.tensors) tensors.push_back(tensor_to_json(t));
            jg["tensors"] = std::move(tensors);
            graphs.push_back(std::move(jg));
        }
        jc["graphs"] = std::move(graphs);
        components.push_back(std::move(jc));
    }
    j["components"] = std::move(components);
    j["dimension"] = report.dimension.get_ui();
    j["verified"] = Json{{"rank", report.verified.rank},
                         {"invariance", report.verified.invariance},
                         {"intertwining", report.verified.intertwining}};
    return j;
}

DecompositionReport report_from_json(const Json& j) {
    DecompositionReport report;
    report.degrees = degrees_from_json(j.at("degrees"));
    const TensorSpace space{report.degrees};
    report.dimension = space.dimension();
    if (report.dimension != Int(j.at("dimension").get<unsigned long>()))
        throw std::invalid_argument("report dimension does not match its degrees");
    const int m = static_cast<int>(report.degrees.size());

    for (const auto& jc : j.at("components")) {
        IsotypicComponent comp;
        comp.d0 = jc.at("d0").get<int>();
        for (const auto& jg : jc.at("graphs")) {
            std::vector<Arc> arcs;
            for (const auto& ja : jg.at("arcs")) {
                if (!ja.is_array() || ja.size() != 3) throw std::invalid_argument("arc must be [i, j, mult]");
                arcs.push_back({ja[0].get<int>(), ja[1].get<int>(), ja[2].get<int>()});
            }
            OuterplanarGraph graph(0, m, std::move(arcs));
            std::vector<int> gd = graph.degrees();
            if (gd[0] != comp.d0) throw std::invalid_argument("graph root degree does not match d0");
            for (int k = 0; k < m; ++k)
                if (gd[k + 1] != report.degrees[k])
                    throw std::invalid_argument("graph degrees do not match the report degrees");
            GraphTensors gt{std::move(graph), {}};
            for (const auto& jt : jg.at("tensors")) {
                SparseTensor t = tensor_from_json(jt);
                if (t.space() != space) throw std::invalid_argument("tensor space does not match the report");
                gt.tensors.push_back(std::move(t));
            }
            if (static_cast<int>(gt.tensors.size()) != comp.d0 + 1)
                throw std::invalid_argument("component must carry d0+1 tensors per graph");
            comp.graphs.push_back(std::move(gt));
        }
        report.components.push_back(std::move(comp));
    }
    const Json& v = j.at("verified");
    report.verified = {v.at("rank").get<bool>(), v.at("invariance").get<bool>(),
                       v.at("intertwining").get<bool>()};
    return report;
}

} // namespace sl2op
