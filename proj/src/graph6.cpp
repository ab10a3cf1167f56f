#include "cliquecolor/graph6.hpp"

#include <sstream>

namespace cliquecolor {

std::string encode_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 258047) throw std::invalid_argument("encode_graph6: order too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("parse_graph6: empty string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("parse_graph6: byte out of range 63..126");

    size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("parse_graph6: order beyond supported range");
        if (s.size() < 4) throw std::invalid_argument("parse_graph6: truncated order field");
        n = (static_cast<long long>(s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    }
    if (n < 0 || n > 258047) throw std::invalid_argument("parse_graph6: vertex count out of range");

    long long pairs = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((pairs + 5) / 6);
    if (s.size() - pos != need)
        throw std::invalid_argument("parse_graph6: body length mismatch (got " +
                                    std::to_string(s.size() - pos) + " bytes, expected " +
                                    std::to_string(need) + ")");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (size_t k = pos; k < s.size(); ++k) {
        int word = s[k] - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= pairs) {
                if ((word >> b) & 1)
                    throw std::invalid_argument("parse_graph6: nonzero padding bits");
                continue;
            }
            if ((word >> b) & 1) {
                // invert the linear index back to (i, j), j ascending
                long long t = bit;
                int j = 1;
                while (t >= j) t -= j, ++j;
                edges.emplace_back(static_cast<int>(t), j);
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0) throw std::invalid_argument("edge list: negative order");
    std::vector<std::pair<int, int>> edges;
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: ragged input, expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(k));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing tokens after declared edges");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> parse_graph6_file(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace cliquecolor
