#include <pultr/duality.hpp>
#include <pultr/functors.hpp>
#include <pultr/hom.hpp>
#include <pultr/reduce.hpp>
#include <pultr/audit.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace pultr {

std::string DualityVerdict::render() const
{
    std::ostringstream out;
    out << (holds ? "PASS" : "FAIL") << " duality check over " << graphs_checked << " digraphs\n";
    if (! holds && witness) {
        out << "direction: " << broken_direction << "\nwitness G:\n" << emit_digraph(*witness);
    }
    return out.str();
}

DualityVerdict verify_duality(const DualityCandidate & c, int n_max, int n_max_cap)
{
    if (n_max > n_max_cap)
        throw resource_error("verify_duality: n_max " + std::to_string(n_max) + " exceeds cap " + std::to_string(n_max_cap));

    DualityVerdict verdict;
    for (int n = 0; n <= n_max; ++n) {
        for (auto & g : all_digraphs(n)) {
            ++verdict.graphs_checked;
            bool maps = hom_exists_bool(g, c.target);
            bool obstructed = false;
            for (auto & f : c.obstructions)
                if (hom_exists_bool(f, g)) {
                    obstructed = true;
                    break;
                }
            if (maps == ! obstructed)
                continue;
            verdict.holds = false;
            verdict.witness = g;
            verdict.broken_direction = maps ? "hom-despite-obstruction" : "no-obstruction-but-no-hom";
            return verdict;
        }
    }
    verdict.holds = true;
    return verdict;
}

std::string TransferVerdict::render() const
{
    std::ostringstream out;
    out << (holds ? "PASS" : "FAIL") << " obstruction transfer";
    if (! holds)
        out << " at stage " << stage;
    out << " (candidate equation over " << equation_checked << " digraphs)\n";
    if (! holds && stage == "candidate-equation" && equation_witness)
        out << "witness G:\n" << emit_digraph(*equation_witness);
    if (! holds && stage == "transferred-duality")
        out << duality.render();
    return out.str();
}

TransferVerdict transfer_obstructions(const PultrTemplate & t, const DualityCandidate & c,
    const Digraph & k, int n_max, int n_max_cap)
{
    if (n_max > n_max_cap)
        throw resource_error("transfer_obstructions: n_max " + std::to_string(n_max) + " exceeds cap " + std::to_string(n_max_cap));
    require_valid(t);

    TransferVerdict verdict;
    for (int n = 0; n <= n_max; ++n) {
        for (auto & g : all_digraphs(n)) {
            ++verdict.equation_checked;
            bool lhs = hom_exists_bool(gamma_apply(t, g), c.target);
            bool rhs = hom_exists_bool(g, k);
            if (lhs != rhs) {
                verdict.holds = false;
                verdict.stage = "candidate-equation";
                verdict.equation_witness = g;
                return verdict;
            }
        }
    }

    DualityCandidate transferred;
    for (auto & f : c.obstructions) {
        Digraph lf = lambda_apply(t, f).graph;
        lf.labels.reset();
        transferred.obstructions.push_back(std::move(lf));
    }
    transferred.target = k;
    verdict.duality = verify_duality(transferred, n_max, n_max_cap);
    verdict.holds = verdict.duality.holds;
    if (! verdict.holds)
        verdict.stage = "transferred-duality";
    return verdict;
}

std::string NecessaryReport::render() const
{
    std::ostringstream out;
    out << (p_equiv_tree ? "PASS" : "FAIL") << " P hom-equivalent to a tree\n";
    out << (q_equiv_tree ? "PASS" : "FAIL") << " Q hom-equivalent to a tree\n";
    out << (failing_trees.empty() ? "PASS" : "FAIL") << " Lambda of every tree hom-equivalent to a tree ("
        << trees_checked << " trees checked, " << failing_trees.size() << " failures)\n";
    if (! failing_trees.empty())
        out << "first witness tree:\n" << emit_digraph(failing_trees.front());
    out << "overall: " << (verdict ? "PASS" : "FAIL") << "\n";
    return out.str();
}

NecessaryReport check_necessary_conditions(const PultrTemplate & t, int tree_budget, int tree_budget_cap)
{
    if (tree_budget > tree_budget_cap)
        throw resource_error("check_necessary_conditions: tree budget " + std::to_string(tree_budget) + " exceeds cap " + std::to_string(tree_budget_cap));
    require_valid(t);

    NecessaryReport report;
    report.p_equiv_tree = equiv_to_tree(t.p);
    report.q_equiv_tree = equiv_to_tree(t.q);

    for (int n = 1; n <= tree_budget; ++n) {
        for (auto & tree : enumerate_oriented_trees(n)) {
            ++report.trees_checked;
            Digraph image = lambda_apply(t, tree).graph;
            image.labels.reset();
            if (! equiv_to_tree(image))
                report.failing_trees.push_back(tree);
        }
    }
    report.verdict = report.p_equiv_tree && report.q_equiv_tree && report.failing_trees.empty();
    return report;
}

namespace {

// Canonical form for an oriented tree: encode rooted at the centre of the
// underlying tree (min over both centres when there are two).
std::string tree_canonical(const Digraph & g)
{
    int n = g.n();
    if (n == 1)
        return "()";
    std::vector<std::vector<int>> adj(n);
    for (auto & [u, v] : g.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v)
        degree[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v)
        if (degree[v] <= 1)
            layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : adj[v])
                if (! removed[w] && --degree[w] == 1)
                    next.push_back(w);
        }
        layer = std::move(next);
    }

    auto encode = [&](auto && self, int v, int parent) -> std::string {
        std::vector<std::string> parts;
        for (int w : adj[v]) {
            if (w == parent)
                continue;
            parts.push_back((g.has_arc(v, w) ? ">" : "<") + self(self, w, v));
        }
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (auto & p : parts)
            out += p;
        return out + ")";
    };

    std::string best;
    for (int v = 0; v < n; ++v) {
        if (removed[v])
            continue;
        std::string e = encode(encode, v, -1);
        if (best.empty() || e < best)
            best = e;
    }
    return best;
}

void prufer_decode(const std::vector<int> & seq, int n, std::vector<Arc> & edges)
{
    edges.clear();
    std::vector<int> degree(n, 1);
    for (int v : seq)
        ++degree[v];
    std::vector<int> count = degree;
    // Standard decode via the smallest current leaf.
    std::vector<bool> used(n, false);
    for (int v : seq) {
        int leaf = -1;
        for (int u = 0; u < n; ++u)
            if (count[u] == 1 && ! used[u]) {
                leaf = u;
                break;
            }
        edges.emplace_back(leaf, v);
        used[leaf] = true;
        --count[v];
    }
    std::vector<int> rest;
    for (int u = 0; u < n; ++u)
        if (! used[u] && count[u] == 1)
            rest.push_back(u);
    edges.emplace_back(rest[0], rest[1]);
}

} // namespace

std::vector<Digraph> enumerate_oriented_trees(int n)
{
    std::vector<Digraph> trees;
    if (n <= 0)
        return trees;
    if (n == 1) {
        trees.emplace_back(1, std::vector<Arc>{});
        return trees;
    }

    std::map<std::string, Digraph> canonical;
    std::vector<int> seq(std::max(0, n - 2), 0);
    std::vector<Arc> edges;
    bool more = true;
    while (more) {
        prufer_decode(seq, n, edges);
        int m = static_cast<int>(edges.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<Arc> arcs(m);
            for (int i = 0; i < m; ++i)
                arcs[i] = (mask >> i & 1) ? Arc{edges[i].second, edges[i].first} : edges[i];
            Digraph tree(n, std::move(arcs));
            canonical.try_emplace(tree_canonical(tree), std::move(tree));
        }
        more = false;
        for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
            if (seq[i] + 1 < n) {
                ++seq[i];
                std::fill(seq.begin() + i + 1, seq.end(), 0);
                more = true;
                break;
            }
        }
    }

    trees.reserve(canonical.size());
    for (auto & [key, tree] : canonical)
        trees.push_back(std::move(tree));
    return trees;
}

} // namespace pultr
