#include "ksadist/dot.hpp"

#include <sstream>

namespace ksadist {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string hypergraph_dot(const std::vector<std::string>& vertex_ids,
                           const std::vector<std::vector<int>>& contexts) {
    std::ostringstream os;
    os << "graph scenario {\n";
    for (std::size_t v = 0; v < vertex_ids.size(); ++v)
        os << "  v" << v << " [label=" << quote(vertex_ids[v]) << "];\n";
    for (std::size_t c = 0; c < contexts.size(); ++c)
        os << "  c" << c << " [shape=box, label=" << quote("C" + std::to_string(c)) << "];\n";
    for (std::size_t c = 0; c < contexts.size(); ++c)
        for (int v : contexts[c])
            os << "  v" << v << " -- c" << c << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ksadist
