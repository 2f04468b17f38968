#include "hypercen/io.hpp"

#include "hypercen/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hypercen::io {

namespace {

using nlohmann::json;

std::string format_weight(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

double member_weight(const json& member, const char* key, const std::string& path) {
    if (!member.contains(key) || !member[key].is_number())
        throw ParseError("member needs a numeric '" + std::string(key) + "'", path);
    const double w = member[key].get<double>();
    if (!std::isfinite(w) || w < 0.0 || w > 1.0)
        throw ParseError("weight " + format_weight(w) + " outside [0,1]", path);
    return w;
}

int member_node(const json& member, const std::unordered_map<std::string, int>& node_index,
                const std::string& path) {
    if (!member.contains("node") || !member["node"].is_string())
        throw ParseError("member needs a string 'node'", path);
    const std::string name = member["node"].get<std::string>();
    const auto it = node_index.find(name);
    if (it == node_index.end())
        throw ParseError("unknown node '" + name + "'", path);
    return it->second;
}

json members_json(const Eigen::MatrixXd& m, int edge, const Hypergraph& h, const char* key) {
    json members = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        if (m(i, edge) <= 0.0) continue;
        members.push_back({{"node", h.node_label(i)}, {key, m(i, edge)}});
    }
    return members;
}

} // namespace

HypergraphFile parse(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), origin);
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
        throw ParseError("document needs a 'nodes' array", origin);

    std::vector<std::string> node_labels;
    std::unordered_map<std::string, int> node_index;
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
        const auto& entry = doc["nodes"][i];
        if (!entry.is_string())
            throw ParseError("node entry must be a string", "nodes[" + std::to_string(i) + "]");
        const std::string name = entry.get<std::string>();
        if (!node_index.emplace(name, static_cast<int>(i)).second)
            throw ParseError("duplicate node '" + name + "'", "nodes[" + std::to_string(i) + "]");
        node_labels.push_back(name);
    }
    if (node_labels.empty()) throw ParseError("at least one node is required", origin);

    const json edges = doc.contains("edges") ? doc["edges"] : json::array();
    if (!edges.is_array()) throw ParseError("'edges' must be an array", origin);

    const auto n = static_cast<Eigen::Index>(node_labels.size());
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(edges.size()));
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(edges.size()));
    bool directed = false;
    std::vector<std::string> edge_labels;

    for (std::size_t j = 0; j < edges.size(); ++j) {
        const std::string edge_path = "edges[" + std::to_string(j) + "]";
        const auto& edge = edges[j];
        if (!edge.is_object()) throw ParseError("edge must be an object", edge_path);
        edge_labels.push_back(edge.contains("id") && edge["id"].is_string()
                                  ? edge["id"].get<std::string>()
                                  : "e" + std::to_string(j + 1));
        const json members = edge.contains("members") ? edge["members"] : json::array();
        if (!members.is_array())
            throw ParseError("'members' must be an array", edge_path + ".members");
        for (std::size_t k = 0; k < members.size(); ++k) {
            const std::string path = edge_path + ".members[" + std::to_string(k) + "]";
            const int node = member_node(members[k], node_index, path);
            w(node, static_cast<Eigen::Index>(j)) = member_weight(members[k], "w", path + ".w");
        }
        if (edge.contains("out_members")) {
            directed = true;
            if (!edge["out_members"].is_array())
                throw ParseError("'out_members' must be an array", edge_path + ".out_members");
            for (std::size_t k = 0; k < edge["out_members"].size(); ++k) {
                const std::string path =
                    edge_path + ".out_members[" + std::to_string(k) + "]";
                const int node = member_node(edge["out_members"][k], node_index, path);
                z(node, static_cast<Eigen::Index>(j)) =
                    member_weight(edge["out_members"][k], "z", path + ".z");
            }
        }
    }

    HypergraphFile file;
    file.hyper = Hypergraph(std::move(w), std::move(node_labels), std::move(edge_labels));
    if (directed) file.z = std::move(z);
    return file;
}

HypergraphFile load(const std::string& path) {
    return parse(read_file(path), path);
}

namespace {

json document_json(const Hypergraph& h, const Eigen::MatrixXd* z) {
    json doc;
    doc["nodes"] = json::array();
    for (int i = 0; i < h.node_count(); ++i) doc["nodes"].push_back(h.node_label(i));
    doc["edges"] = json::array();
    for (int j = 0; j < h.edge_count(); ++j) {
        json edge;
        edge["id"] = h.edge_label(j);
        edge["members"] = members_json(h.weights(), j, h, "w");
        if (z != nullptr) edge["out_members"] = members_json(*z, j, h, "z");
        doc["edges"].push_back(std::move(edge));
    }
    return doc;
}

} // namespace

std::string to_json(const Hypergraph& h) { return document_json(h, nullptr).dump(2) + "\n"; }

std::string to_json(const DirectedHypergraph& dh) {
    return document_json(dh.base(), &dh.z()).dump(2) + "\n";
}

void save(const Hypergraph& h, const std::string& path) { write_file(path, to_json(h)); }

void save(const DirectedHypergraph& dh, const std::string& path) {
    write_file(path, to_json(dh));
}

std::string to_matrix_csv(const Hypergraph& h) {
    std::ostringstream out;
    out << "node,edge,weight\n";
    for (int j = 0; j < h.edge_count(); ++j)
        for (int i = 0; i < h.node_count(); ++i)
            if (h.weight(i, j) > 0.0)
                out << h.node_label(i) << ',' << h.edge_label(j) << ','
                    << format_weight(h.weight(i, j)) << '\n';
    return out.str();
}

void save_matrix_csv(const Hypergraph& h, const std::string& path) {
    write_file(path, to_matrix_csv(h));
}

Hypergraph from_matrix_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty csv", origin);

    std::vector<std::string> node_labels;
    std::vector<std::string> edge_labels;
    std::unordered_map<std::string, int> node_index;
    std::unordered_map<std::string, int> edge_index;
    std::vector<std::tuple<int, int, double>> entries;

    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(line_number);
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw ParseError("expected node,edge,weight", where);
        const std::string node = line.substr(0, first);
        const std::string edge = line.substr(first + 1, second - first - 1);
        double weight = 0.0;
        try {
            weight = std::stod(line.substr(second + 1));
        } catch (const std::exception&) {
            throw ParseError("bad weight '" + line.substr(second + 1) + "'", where);
        }
        if (!std::isfinite(weight) || weight < 0.0 || weight > 1.0)
            throw ParseError("weight " + format_weight(weight) + " outside [0,1]", where);
        const int ni = node_index.emplace(node, static_cast<int>(node_labels.size())).first->second;
        if (ni == static_cast<int>(node_labels.size())) node_labels.push_back(node);
        const int ei = edge_index.emplace(edge, static_cast<int>(edge_labels.size())).first->second;
        if (ei == static_cast<int>(edge_labels.size())) edge_labels.push_back(edge);
        entries.emplace_back(ni, ei, weight);
    }
    if (node_labels.empty()) throw ParseError("csv lists no entries", origin);

    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(node_labels.size()),
                                              static_cast<Eigen::Index>(edge_labels.size()));
    for (const auto& [i, j, value] : entries) w(i, j) = value;
    return Hypergraph(std::move(w), std::move(node_labels), std::move(edge_labels));
}

Hypergraph load_matrix_csv(const std::string& path) {
    return from_matrix_csv(read_file(path), path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoError("failed reading " + path);
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out.good()) throw IoError("failed writing " + path);
}

} // namespace hypercen::io
