#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "polyjoin/closed_forms.hpp"
#include "polyjoin/complex.hpp"
#include "polyjoin/engine.hpp"
#include "polyjoin/graph.hpp"
#include "polyjoin/homotopy.hpp"
#include "polyjoin/shedding.hpp"

namespace polyjoin {

using ojson = nlohmann::ordered_json;

/// Malformed input file, with a 1-based line/column position.
struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

/// Graph text format: first line "n m", then m lines "u v" with 1-based
/// labels; '#' starts a comment. The writer emits edges sorted and
/// requires the vertex labels to be exactly 1..n.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

/// Complex text format: one facet per line as space-separated 1-based
/// labels; a line holding only "-" denotes {∅}; '#' comments. The ambient
/// vertex count is the largest label mentioned.
std::string complex_to_text(const SimplicialComplex& k);
SimplicialComplex complex_from_text(const std::string& text);

ojson complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const ojson& j);

/// Certificate JSON: nested {"v":…, "w":…, "del":…, "lk":…}; leaves are
/// the strings "SIMPLEX" and "EMPTY".
ojson certificate_to_json(const CertPtr& cert);
CertPtr certificate_from_json(const ojson& j);

/// Expression JSON: {"wedge":[{"susp":r,"atoms":{id:k,…}},…],
/// "extra_components":c}; multiplicities are expanded into repeats.
ojson normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const ojson& j);

/// Betti JSON: {"betti":{"0":…,…},"torsion":bool}; zero entries omitted.
ojson betti_to_json(const BettiVector& v);
BettiVector betti_from_json(const ojson& j);

/// Table JSON: {"spheres":{"0":c0,…},"extra_components":c}.
ojson table_to_json(const SphereCountTable& t);
SphereCountTable table_from_json(const ojson& j);

ojson verify_report_to_json(const VerifyReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace polyjoin
