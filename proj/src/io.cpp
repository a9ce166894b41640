#include "chrom/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chrom {

namespace {

// Strips '#' comments and splits on whitespace.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

std::int64_t to_int(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected an integer for ") + what + ", got \"" + tok + "\"");
    }
}

Tensor tensor_from_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("tensor JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j.contains("slices"))
        throw ParseError("tensor JSON: need fields n, a, slices");
    Tensor T;
    try {
        T.n = j.at("n").get<int>();
        T.a = j.at("a").get<int>();
        for (const auto& slice : j.at("slices")) {
            IntMat m;
            for (const auto& row : slice) m.push_back(row.get<std::vector<std::int64_t>>());
            T.slices.push_back(std::move(m));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("tensor JSON: ") + e.what());
    }
    if (static_cast<int>(T.slices.size()) != T.a)
        throw ParseError("tensor JSON: slice count does not match a");
    for (const IntMat& s : T.slices) {
        if (static_cast<int>(s.size()) != T.n) throw ParseError("tensor JSON: slice is not n x n");
        for (const auto& row : s)
            if (static_cast<int>(row.size()) != T.n) throw ParseError("tensor JSON: slice is not n x n");
    }
    return T;
}

} // namespace

Tensor parse_tensor(std::istream& in) {
    // Peek past leading whitespace to detect the JSON form.
    int ch = in.peek();
    while (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') {
        in.get();
        ch = in.peek();
    }
    if (ch == '{') return tensor_from_json(in);

    std::vector<std::string> tokens = tokenize(in);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (pos >= tokens.size()) throw ParseError(std::string("tensor file ended early, expected ") + what);
        return tokens[pos++];
    };
    if (next("\"n\"") != "n") throw ParseError("tensor file must start with 'n <size>'");
    Tensor T;
    T.n = static_cast<int>(to_int(next("n value"), "n"));
    if (next("\"a\"") != "a") throw ParseError("tensor file: expected 'a <count>' after n");
    T.a = static_cast<int>(to_int(next("a value"), "a"));
    if (T.n < 1 || T.a < 1) throw ParseError("tensor file: n and a must be positive");
    for (int s = 0; s < T.a; ++s) {
        IntMat m(static_cast<std::size_t>(T.n), std::vector<std::int64_t>(static_cast<std::size_t>(T.n)));
        for (int r = 0; r < T.n; ++r)
            for (int c = 0; c < T.n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = to_int(next("matrix entry"), "matrix entry");
        T.slices.push_back(std::move(m));
    }
    if (pos != tokens.size()) throw ParseError("tensor file: trailing tokens after the last slice");
    return T;
}

Tensor parse_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tensor file: " + path);
    return parse_tensor(in);
}

Graph parse_graph(std::istream& in) {
    std::vector<std::string> tokens = tokenize(in);
    if (tokens.size() < 2) throw ParseError("graph file: expected 'V E' header");
    Graph G;
    G.vertex_count = static_cast<int>(to_int(tokens[0], "vertex count"));
    const auto edge_count = to_int(tokens[1], "edge count");
    if (edge_count < 0) throw ParseError("graph file: negative edge count");
    if (tokens.size() != 2 + 2 * static_cast<std::size_t>(edge_count))
        throw ParseError("graph file: expected " + std::to_string(edge_count) + " 'u v' pairs");
    for (std::int64_t e = 0; e < edge_count; ++e) {
        int u = static_cast<int>(to_int(tokens[2 + 2 * static_cast<std::size_t>(e)], "edge endpoint"));
        int v = static_cast<int>(to_int(tokens[3 + 2 * static_cast<std::size_t>(e)], "edge endpoint"));
        G.edges.emplace_back(u, v);
    }
    try {
        G.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("graph file: ") + e.what());
    }
    return G;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_graph(in);
}

} // namespace chrom
