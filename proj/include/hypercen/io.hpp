#pragma once

#include "hypercen/hypergraph.hpp"

#include <optional>
#include <string>

namespace hypercen::io {

// Parsed hypergraph file; z is present when any edge carried out_members.
struct HypergraphFile {
    Hypergraph hyper;
    std::optional<Eigen::MatrixXd> z;

    bool directed() const { return z.has_value(); }
    DirectedHypergraph directed_hypergraph() const { return DirectedHypergraph(hyper, *z); }
};

// JSON document layout:
//   { "nodes": ["n1", ...],
//     "edges": [ { "id": "e1",
//                  "members": [ {"node": "n1", "w": 0.1}, ... ],
//                  "out_members": [ {"node": "n2", "z": 0.1}, ... ] } ] }
// out_members appears on directed hypergraphs only. Weights outside [0,1]
// are rejected with the offending path in the message.
HypergraphFile load(const std::string& path);
HypergraphFile parse(const std::string& text, const std::string& origin = "<string>");

void save(const Hypergraph& h, const std::string& path);
void save(const DirectedHypergraph& dh, const std::string& path);
std::string to_json(const Hypergraph& h);
std::string to_json(const DirectedHypergraph& dh);

// Matrix export: header `node,edge,weight`, one row per nonzero entry,
// values printed with up to 12 significant digits.
std::string to_matrix_csv(const Hypergraph& h);
void save_matrix_csv(const Hypergraph& h, const std::string& path);

// Inverse of to_matrix_csv; node and edge indices follow first appearance.
Hypergraph from_matrix_csv(const std::string& text, const std::string& origin = "<string>");
Hypergraph load_matrix_csv(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace hypercen::io
