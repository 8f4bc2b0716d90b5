#include "altcycles/dot.hpp"

#include <array>
#include <sstream>

#include "altcycles/serialize.hpp"

namespace altcycles {

namespace {
    constexpr std::array<const char *, 12> palette = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
        "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb"};

    auto escape(const std::string & s) -> std::string
    {
        std::string out;
        for (char ch : s) {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out;
    }

    auto render(const Graph & g, const std::vector<std::pair<int, int>> & links, bool directed,
        const Coloring * coloring) -> std::string
    {
        if (coloring && coloring->size() != g.order())
            throw Error(ErrorKind::PartialColoring, "colouring does not match the graph");
        std::ostringstream out;
        out << (directed ? "digraph" : "graph") << " G {\n";
        if (coloring)
            out << "  node [style=filled];\n";
        for (int v = 0; v < g.order(); ++v) {
            out << "  v" << v << " [label=\"" << escape(g.label(v).to_string());
            if (coloring) {
                int c = (*coloring)[v];
                out << "\\nc" << c << "\", fillcolor=\"" << palette[c % palette.size()];
            }
            out << "\"];\n";
        }
        const char * op = directed ? " -> " : " -- ";
        for (auto [u, v] : links)
            out << "  v" << u << op << "v" << v << ";\n";
        out << "}\n";
        return out.str();
    }
}

auto to_dot(const Graph & g, const Coloring * coloring) -> std::string
{
    return render(g, g.edges(), false, coloring);
}

auto to_dot(const Orientation & o, const Coloring * coloring) -> std::string
{
    return render(o.base(), o.arcs(), true, coloring);
}

void export_dot(const Graph & g, const Coloring * coloring, const std::filesystem::path & path)
{
    write_text_file(path, to_dot(g, coloring));
}

void export_dot(const Orientation & o, const Coloring * coloring, const std::filesystem::path & path)
{
    write_text_file(path, to_dot(o, coloring));
}

} // namespace altcycles
