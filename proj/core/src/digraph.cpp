#include <pultr/digraph.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pultr {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs))
{
    if (n_ < 0)
        throw std::invalid_argument("negative vertex count");
    for (auto & [u, v] : arcs_)
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("arc endpoint out of range");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool Digraph::has_arc(int u, int v) const
{
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

std::vector<std::vector<int>> Digraph::out_neighbours() const
{
    std::vector<std::vector<int>> out(n_);
    for (auto & [u, v] : arcs_)
        out[u].push_back(v);
    return out;
}

std::vector<std::vector<int>> Digraph::in_neighbours() const
{
    std::vector<std::vector<int>> in(n_);
    for (auto & [u, v] : arcs_)
        in[v].push_back(u);
    return in;
}

namespace {

int parse_int(const std::string & tok, int line)
{
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception &) {
        throw parse_error(line, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw parse_error(line, "trailing characters in integer '" + tok + "'");
    return value;
}

} // namespace

Digraph parse_digraph(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool have_n = false;
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<std::pair<int, std::string>> labels;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (! (ls >> head))
            continue;
        if (head[0] == '#')
            continue;

        if (head == "n") {
            if (have_n)
                throw parse_error(lineno, "duplicate 'n' header");
            std::string tok;
            if (! (ls >> tok))
                throw parse_error(lineno, "'n' needs a vertex count");
            n = parse_int(tok, lineno);
            if (n < 0)
                throw parse_error(lineno, "negative vertex count");
            have_n = true;
        }
        else if (head == "a") {
            if (! have_n)
                throw parse_error(lineno, "arc before 'n' header");
            std::string ut, vt;
            if (! (ls >> ut >> vt))
                throw parse_error(lineno, "'a' needs two endpoints");
            int u = parse_int(ut, lineno), v = parse_int(vt, lineno);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw parse_error(lineno, "arc endpoint out of range");
            arcs.emplace_back(u, v);
        }
        else if (head == "l") {
            if (! have_n)
                throw parse_error(lineno, "label before 'n' header");
            std::string vt;
            if (! (ls >> vt))
                throw parse_error(lineno, "'l' needs a vertex");
            int v = parse_int(vt, lineno);
            if (v < 0 || v >= n)
                throw parse_error(lineno, "label vertex out of range");
            std::string rest;
            std::getline(ls, rest);
            size_t start = rest.find_first_not_of(" \t");
            labels.emplace_back(v, start == std::string::npos ? "" : rest.substr(start));
        }
        else {
            throw parse_error(lineno, "unknown directive '" + head + "'");
        }
    }

    if (! have_n)
        throw parse_error(lineno, "missing 'n' header");

    Digraph g(n, std::move(arcs));
    if (! labels.empty()) {
        std::vector<std::string> full(n);
        std::vector<bool> seen(n, false);
        for (auto & [v, text_] : labels) {
            if (seen[v])
                throw parse_error(lineno, "vertex " + std::to_string(v) + " labelled twice");
            seen[v] = true;
            full[v] = text_;
        }
        for (int v = 0; v < n; ++v)
            if (! seen[v])
                throw parse_error(lineno, "labels must cover every vertex (vertex " + std::to_string(v) + " unlabelled)");
        g.labels = std::move(full);
    }
    return g;
}

namespace {

std::string dot_escape(const std::string & s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string emit_digraph(const Digraph & g, EmitFormat format)
{
    std::ostringstream out;
    if (format == EmitFormat::native) {
        out << "n " << g.n() << "\n";
        for (auto & [u, v] : g.arcs())
            out << "a " << u << " " << v << "\n";
        if (g.labels)
            for (int v = 0; v < g.n(); ++v)
                out << "l " << v << " " << (*g.labels)[v] << "\n";
    }
    else {
        out << "digraph G {\n";
        for (int v = 0; v < g.n(); ++v) {
            out << "  " << v;
            if (g.labels)
                out << " [label=\"" << dot_escape((*g.labels)[v]) << "\"]";
            out << ";\n";
        }
        for (auto & [u, v] : g.arcs())
            out << "  " << u << " -> " << v << ";\n";
        out << "}\n";
    }
    return out.str();
}

DisjointUnionResult disjoint_union(const std::vector<Digraph> & parts)
{
    DisjointUnionResult result;
    result.offsets.reserve(parts.size());
    int total = 0;
    std::vector<Arc> arcs;
    for (auto & part : parts) {
        result.offsets.push_back(total);
        for (auto & [u, v] : part.arcs())
            arcs.emplace_back(total + u, total + v);
        total += part.n();
    }
    result.graph = Digraph(total, std::move(arcs));
    return result;
}

QuotientResult quotient(const Digraph & g, const VertexPartition & p)
{
    std::vector<int> cls(g.n(), -1);
    for (auto & block : p.classes) {
        if (block.empty())
            throw std::invalid_argument("partition has an empty block");
        for (int v : block) {
            if (v < 0 || v >= g.n())
                throw std::invalid_argument("partition vertex out of range");
            if (cls[v] != -1)
                throw std::invalid_argument("partition blocks overlap at vertex " + std::to_string(v));
            cls[v] = 1;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (cls[v] == -1)
            throw std::invalid_argument("partition omits vertex " + std::to_string(v));

    // Number classes by their least member so the result is deterministic.
    std::vector<const std::vector<int> *> ordered;
    ordered.reserve(p.classes.size());
    for (auto & block : p.classes)
        ordered.push_back(&block);
    std::sort(ordered.begin(), ordered.end(), [](auto * a, auto * b) {
        return *std::min_element(a->begin(), a->end()) < *std::min_element(b->begin(), b->end());
    });

    std::vector<int> projection(g.n());
    for (int i = 0; i < static_cast<int>(ordered.size()); ++i)
        for (int v : *ordered[i])
            projection[v] = i;

    std::vector<Arc> arcs;
    arcs.reserve(g.arcs().size());
    for (auto & [u, v] : g.arcs())
        arcs.emplace_back(projection[u], projection[v]);

    QuotientResult result;
    result.graph = Digraph(static_cast<int>(ordered.size()), std::move(arcs));
    result.projection = std::move(projection);
    return result;
}

bool weakly_connected(const Digraph & g)
{
    if (g.n() == 0)
        return false;
    std::vector<std::vector<int>> adj(g.n());
    for (auto & [u, v] : g.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(g.n(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (! seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n();
}

bool is_oriented_tree(const Digraph & g)
{
    // n-1 arcs and weak connectivity force simplicity: a loop or an
    // antiparallel pair would leave too few arcs to connect everything.
    return g.n() >= 1 && g.arc_count() == g.n() - 1 && weakly_connected(g);
}

Digraph path_digraph(int k)
{
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        arcs.emplace_back(i, i + 1);
    return Digraph(k + 1, std::move(arcs));
}

} // namespace pultr
