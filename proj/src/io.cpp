#include "delmorse/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace delmorse {

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // normalize negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_value(const std::string& token) {
    if (token == "inf" || token == "+inf") return kInf;
    if (token == "-inf") return -kInf;
    size_t used = 0;
    double v;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw ParseError("not a number: '" + token + "'");
    }
    if (used != token.size()) throw ParseError("trailing characters in number: '" + token + "'");
    return v;
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    return out;
}

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        return true;
    }
    return false;
}

Simplex parse_vertex_list(const std::string& s) {
    Simplex out;
    if (s.empty()) return out;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad vertex index '" + item + "'");
        }
    }
    return out;
}

// key=value field from a header line.
std::string header_field(const std::string& line, const std::string& key) {
    const std::string tag = key + "=";
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        if (tok.rfind(tag, 0) == 0) return tok.substr(tag.size());
    throw ParseError("header is missing field '" + key + "'");
}

}  // namespace

std::string format_selective(const Simplex& E, int ground_size) {
    if (E.empty()) return "empty";
    if (static_cast<int>(E.size()) == ground_size) return "all";
    std::string out;
    for (size_t i = 0; i < E.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(E[i]);
    }
    return out;
}

WeightedPointSet read_points(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty point file");
    {
        std::istringstream ss(line);
        std::string word;
        ss >> word;
        if (word != "dim") throw ParseError("point file must start with 'dim n'");
    }
    int dim = 0;
    {
        std::istringstream ss(line);
        std::string word;
        ss >> word >> dim;
        if (ss.fail() || dim <= 0) throw ParseError("bad dimension in point file header");
    }

    std::vector<std::vector<double>> rows;
    std::vector<double> weights;
    while (next_content_line(in, line)) {
        std::istringstream ss(line);
        std::vector<double> coords;
        double w = 0.0;
        std::string tok;
        while (ss >> tok) {
            if (tok.rfind("w=", 0) == 0) {
                w = parse_value(tok.substr(2));
            } else {
                coords.push_back(parse_value(tok));
            }
        }
        if (static_cast<int>(coords.size()) != dim)
            throw ParseError("point line '" + line + "' has " + std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(dim));
        rows.push_back(std::move(coords));
        weights.push_back(w);
    }
    return WeightedPointSet::from_rows(dim, rows, weights);
}

WeightedPointSet read_points_file(const std::string& path) {
    auto in = open_in(path);
    return read_points(in);
}

void write_points(std::ostream& out, const WeightedPointSet& X) {
    out << "dim " << X.dim() << "\n";
    for (int i = 0; i < X.size(); ++i) {
        const auto p = X.point(i);
        for (int d = 0; d < X.dim(); ++d) {
            if (d) out << ' ';
            out << format_value(p[d]);
        }
        if (X.weight(i) != 0.0) out << " w=" << format_value(X.weight(i));
        out << "\n";
    }
}

void write_points_file(const std::string& path, const WeightedPointSet& X) {
    auto out = open_out(path);
    write_points(out, X);
}

void write_complex(std::ostream& out, const FilteredComplex& K) {
    const bool wrap = K.kind() == "wrap";
    out << (wrap ? "wrap" : "complex") << " dim=" << K.ambient_dim()
        << " E=" << format_selective(K.selective_set(), K.ground_size())
        << " cap=" << format_value(K.cap()) << "\n";
    for (const auto& e : K.entries())
        out << simplex_to_string(e.simplex) << ' ' << format_value(e.value) << "\n";
}

void write_complex_file(const std::string& path, const FilteredComplex& K) {
    auto out = open_out(path);
    write_complex(out, K);
}

FilteredComplex read_complex(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty complex file");
    std::istringstream header(line);
    std::string kind;
    header >> kind;
    if (kind != "complex" && kind != "wrap")
        throw ParseError("complex file must start with 'complex' or 'wrap'");
    int dim = 0;
    try {
        dim = std::stoi(header_field(line, "dim"));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad dim field in complex header");
    }
    const std::string e_field = header_field(line, "E");
    const double cap = parse_value(header_field(line, "cap"));

    std::vector<std::pair<Simplex, double>> entries;
    int max_vertex = -1;
    while (next_content_line(in, line)) {
        std::istringstream ss(line);
        std::string verts, value;
        ss >> verts >> value;
        if (verts.empty() || value.empty())
            throw ParseError("bad simplex line '" + line + "'");
        Simplex s = parse_vertex_list(verts);
        if (!is_valid_simplex(s)) throw ParseError("invalid simplex '" + verts + "'");
        max_vertex = std::max(max_vertex, s.back());
        entries.emplace_back(std::move(s), parse_value(value));
    }

    const int ground = max_vertex + 1;
    Simplex selective;
    if (e_field == "all") {
        for (int v = 0; v < ground; ++v) selective.push_back(v);
    } else if (e_field != "empty") {
        selective = parse_vertex_list(e_field);
    }
    FilteredComplex K(dim, ground, selective, cap, kind == "wrap" ? "wrap" : "complex");
    for (auto& [s, v] : entries) K.insert(std::move(s), v);
    K.finalize();
    return K;
}

FilteredComplex read_complex_file(const std::string& path) {
    auto in = open_in(path);
    return read_complex(in);
}

void write_gradient(std::ostream& out, const GeneralizedVectorField& W, const Simplex& E,
                    int ground_size) {
    out << "gradient E=" << format_selective(E, ground_size) << "\n";
    for (const auto& iv : W.intervals) {
        out << "interval lower=" << simplex_to_string(iv.lower)
            << " upper=" << simplex_to_string(iv.upper) << " value=" << format_value(iv.value);
        if (iv.singular()) out << " critical";
        out << "\n";
    }
}

void write_collapse(std::ostream& out, const CollapseSequence& seq) {
    out << "collapse from=" << seq.from_label << " to=" << seq.to_label << "\n";
    for (size_t k = 0; k < seq.steps.size(); ++k) {
        const auto& st = seq.steps[k];
        out << "step " << k << ": facet=" << simplex_to_string(st.facet)
            << " cofacet=" << simplex_to_string(st.cofacet)
            << " value=" << format_value(st.value) << "\n";
    }
}

void write_collapse_file(const std::string& path, const CollapseSequence& seq) {
    auto out = open_out(path);
    write_collapse(out, seq);
}

void write_barcode(std::ostream& out, const Barcode& bc) {
    out << "dim,birth,death\n";
    for (const auto& b : bc.bars)
        out << b.dim << ',' << format_value(b.birth) << ',' << format_value(b.death) << "\n";
}

void write_barcode_file(const std::string& path, const Barcode& bc) {
    auto out = open_out(path);
    write_barcode(out, bc);
}

}  // namespace delmorse
