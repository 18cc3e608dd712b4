#include "siglap/graph_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace siglap {

namespace {

bool is_blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<std::string> split_fields(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) { out.push_back(cur); cur.clear(); }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, int line, const char* what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw EdgeListError(line, std::string("expected ") + what + ", got '" + s + "'");
    }
    if (pos != s.size())
        throw EdgeListError(line, std::string("expected ") + what + ", got '" + s + "'");
    return v;
}

double parse_weight(const std::string& s, int line) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw EdgeListError(line, "expected weight, got '" + s + "'");
    }
    if (pos != s.size())
        throw EdgeListError(line, "expected weight, got '" + s + "'");
    if (!std::isfinite(v))
        throw EdgeListError(line, "weight must be finite, got '" + s + "'");
    return v;
}

std::string format_weight(double w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

}  // namespace

EdgeListData read_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> weights;

    int n = -1;
    int line_no = 0;
    int have_weights = -1;  // -1 unknown, 0 no, 1 yes

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (is_blank(line)) continue;
        auto fields = split_fields(line);
        if (!fields.empty() && fields[0][0] == '#') continue;

        if (n < 0) {
            if (fields.size() != 1)
                throw EdgeListError(line_no, "expected a single vertex count");
            n = parse_int(fields[0], line_no, "vertex count");
            if (n < 1) throw EdgeListError(line_no, "vertex count must be >= 1");
            continue;
        }

        if (fields.size() != 2 && fields.size() != 3)
            throw EdgeListError(line_no, "expected 'u v' or 'u v w', got " +
                                             std::to_string(fields.size()) + " fields");
        int weighted = (fields.size() == 3) ? 1 : 0;
        if (have_weights < 0)
            have_weights = weighted;
        else if (have_weights != weighted)
            throw EdgeListError(line_no, "mixed weighted and unweighted edge lines");

        int u = parse_int(fields[0], line_no, "vertex id");
        int v = parse_int(fields[1], line_no, "vertex id");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw EdgeListError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw EdgeListError(line_no, "self-loop not allowed");
        if (weighted) weights.push_back(parse_weight(fields[2], line_no));
        pairs.emplace_back(u, v);
    }

    if (n < 0) throw EdgeListError(line_no, "missing vertex count line");

    EdgeListData out{build_graph(n, pairs), std::nullopt};
    if (have_weights == 1) {
        // build_graph sorted the edges; realign the weight column to the
        // canonical edge order
        std::vector<double> aligned(weights.size());
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto idx = out.graph.edge_index(pairs[i].first, pairs[i].second);
            aligned[static_cast<size_t>(*idx)] = weights[i];
        }
        out.weights = WeightVector(std::move(aligned));
    }
    return out;
}

std::string write_edge_list(const Graph& g, const WeightVector* weights) {
    if (weights && weights->size() != g.edge_count())
        throw std::invalid_argument("weight vector length does not match edge count");
    std::ostringstream os;
    os << g.vertex_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        os << ed.u << " " << ed.v;
        if (weights) os << " " << format_weight((*weights)[e]);
        os << "\n";
    }
    return os.str();
}

EdgeListData read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_edge_list(ss.str());
}

void write_edge_list_file(const std::string& path, const Graph& g, const WeightVector* weights) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << write_edge_list(g, weights);
}

}  // namespace siglap
