#include "polyjoin/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace polyjoin {

namespace {

/// Line-oriented tokenizer with 1-based line/column reporting.
/// '#' comments run to end of line.
struct Lines {
    std::vector<std::vector<std::pair<int, std::string>>> tokens;  // (col, token)
    std::vector<int> line_no;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int ln = 0;
        while (std::getline(in, raw)) {
            ++ln;
            std::vector<std::pair<int, std::string>> toks;
            for (size_t i = 0; i < raw.size();) {
                if (raw[i] == '#') break;
                if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                    ++i;
                    continue;
                }
                size_t j = i;
                while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) &&
                       raw[j] != '#')
                    ++j;
                toks.emplace_back(static_cast<int>(i) + 1, raw.substr(i, j - i));
                i = j;
            }
            if (!toks.empty()) {
                tokens.push_back(std::move(toks));
                line_no.push_back(ln);
            }
        }
    }
};

int parse_int(const std::pair<int, std::string>& tok, int line, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok.second, &pos);
        if (pos != tok.second.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, tok.first,
                         std::string("expected ") + what + ", got '" + tok.second + "'");
    }
}

ojson mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return ojson(v.get_si());
    return ojson(v.get_str());
}

mpz_class json_to_mpz(const ojson& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    throw std::runtime_error("expected integer or decimal string");
}

void require_labels_1_to_n(const std::vector<int>& labels, const char* what) {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument(std::string(what) +
                                        ": vertex labels must be exactly 1..n to serialize");
}

}  // namespace

std::string graph_to_text(const Graph& g) {
    require_labels_1_to_n(g.vertices(), "graph_to_text");
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    Lines ls(text);
    if (ls.tokens.empty()) throw ParseError(1, 1, "missing 'n m' header");
    if (ls.tokens[0].size() != 2)
        throw ParseError(ls.line_no[0], ls.tokens[0][0].first, "header must be 'n m'");
    int n = parse_int(ls.tokens[0][0], ls.line_no[0], "vertex count");
    int m = parse_int(ls.tokens[0][1], ls.line_no[0], "edge count");
    if (n < 0 || m < 0) throw ParseError(ls.line_no[0], ls.tokens[0][0].first, "negative count");
    if (static_cast<int>(ls.tokens.size()) - 1 != m)
        throw ParseError(ls.line_no.back(), 1,
                         "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(ls.tokens.size() - 1));
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= m; ++i) {
        const auto& t = ls.tokens[i];
        if (t.size() != 2) throw ParseError(ls.line_no[i], t[0].first, "edge line must be 'u v'");
        int u = parse_int(t[0], ls.line_no[i], "vertex label");
        int v = parse_int(t[1], ls.line_no[i], "vertex label");
        if (u < 1 || u > n) throw ParseError(ls.line_no[i], t[0].first, "label out of range");
        if (v < 1 || v > n) throw ParseError(ls.line_no[i], t[1].first, "label out of range");
        if (u == v) throw ParseError(ls.line_no[i], t[0].first, "loop edge");
        es.emplace_back(u, v);
    }
    return Graph(std::move(vs), std::move(es));
}

std::string complex_to_text(const SimplicialComplex& k) {
    if (k.is_empty_complex()) return "-\n";
    for (int v : k.vertices())
        if (v < 1) throw std::invalid_argument("complex_to_text: labels must be positive");
    std::ostringstream out;
    for (const auto& f : k.facets()) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
    return out.str();
}

SimplicialComplex complex_from_text(const std::string& text) {
    Lines ls(text);
    std::vector<std::vector<int>> facets;
    bool empty_marker = false;
    for (size_t i = 0; i < ls.tokens.size(); ++i) {
        const auto& t = ls.tokens[i];
        if (t.size() == 1 && t[0].second == "-") {
            empty_marker = true;
            continue;
        }
        std::vector<int> f;
        for (const auto& tok : t) {
            int v = parse_int(tok, ls.line_no[i], "vertex label");
            if (v < 1) throw ParseError(ls.line_no[i], tok.first, "labels are 1-based");
            f.push_back(v);
        }
        facets.push_back(std::move(f));
    }
    if (empty_marker && !facets.empty())
        throw ParseError(ls.line_no[0], 1, "'-' must be the only facet line");
    if (facets.empty()) return SimplicialComplex();
    int n = 0;
    for (const auto& f : facets)
        for (int v : f) n = std::max(n, v);
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    return SimplicialComplex::from_facets(vs, facets);
}

ojson complex_to_json(const SimplicialComplex& k) {
    int n = 0;
    for (int v : k.vertices()) {
        if (v < 1) throw std::invalid_argument("complex_to_json: labels must be positive");
        n = std::max(n, v);
    }
    ojson facets = ojson::array();
    if (k.is_empty_complex()) {
        facets.push_back(ojson::array());
    } else {
        for (const auto& f : k.facets()) facets.push_back(f);
    }
    return ojson{{"vertices", n}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const ojson& j) {
    int n = j.at("vertices").get<int>();
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex::from_facets(vs, facets);
}

ojson certificate_to_json(const CertPtr& cert) {
    if (!cert) throw std::invalid_argument("certificate_to_json: null certificate");
    switch (cert->kind) {
        case SheddingCertificate::Kind::Simplex: return ojson("SIMPLEX");
        case SheddingCertificate::Kind::Empty: return ojson("EMPTY");
        case SheddingCertificate::Kind::Node:
            return ojson{{"v", cert->v},
                         {"w", cert->w},
                         {"del", certificate_to_json(cert->del)},
                         {"lk", certificate_to_json(cert->lk)}};
    }
    throw std::logic_error("certificate_to_json: unknown kind");
}

CertPtr certificate_from_json(const ojson& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "SIMPLEX") return SheddingCertificate::leaf_simplex();
        if (s == "EMPTY") return SheddingCertificate::leaf_empty();
        throw std::runtime_error("certificate leaf must be SIMPLEX or EMPTY, got '" + s + "'");
    }
    return SheddingCertificate::node(j.at("v").get<int>(), j.at("w").get<int>(),
                                     certificate_from_json(j.at("del")),
                                     certificate_from_json(j.at("lk")));
}

ojson normal_form_to_json(const NormalForm& nf) {
    ojson wedge = ojson::array();
    for (const auto& [t, m] : nf.summands) {
        if (!m.fits_ulong_p())
            throw std::invalid_argument("normal_form_to_json: multiplicity too large to expand");
        ojson atoms = ojson::object();
        for (const auto& [id, p] : t.powers) atoms[id] = p;
        ojson entry{{"susp", t.susp}, {"atoms", atoms}};
        for (unsigned long i = 0; i < m.get_ui(); ++i) wedge.push_back(entry);
    }
    return ojson{{"wedge", wedge}, {"extra_components", nf.extra_components}};
}

NormalForm normal_form_from_json(const ojson& j) {
    NormalForm nf;
    for (const auto& entry : j.at("wedge")) {
        JoinTerm t;
        t.susp = entry.at("susp").get<int>();
        for (const auto& [id, p] : entry.at("atoms").items())
            t.powers[id] = p.get<int>();
        nf.add_term(t, 1);
    }
    nf.extra_components = j.at("extra_components").get<long long>();
    return nf;
}

ojson betti_to_json(const BettiVector& v) {
    ojson b = ojson::object();
    for (const auto& [d, x] : v.b) b[std::to_string(d)] = mpz_to_json(x);
    return ojson{{"betti", b}, {"torsion", v.torsion}};
}

BettiVector betti_from_json(const ojson& j) {
    BettiVector v;
    for (const auto& [d, x] : j.at("betti").items()) v.set(std::stoi(d), json_to_mpz(x));
    v.torsion = j.at("torsion").get<bool>();
    return v;
}

ojson table_to_json(const SphereCountTable& t) {
    ojson s = ojson::object();
    for (const auto& [d, c] : t.spheres) s[std::to_string(d)] = mpz_to_json(c);
    return ojson{{"spheres", s}, {"extra_components", t.extra_components}};
}

SphereCountTable table_from_json(const ojson& j) {
    SphereCountTable t;
    for (const auto& [d, c] : j.at("spheres").items()) t.spheres[std::stoi(d)] = json_to_mpz(c);
    t.extra_components = j.at("extra_components").get<long long>();
    return t;
}

ojson verify_report_to_json(const VerifyReport& rep) {
    return ojson{{"engine", betti_to_json(rep.engine)},
                 {"oracle", betti_to_json(rep.oracle)},
                 {"closed_form", rep.closed_form ? betti_to_json(*rep.closed_form) : ojson()},
                 {"agree", rep.agree},
                 {"ms", rep.ms}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace polyjoin
