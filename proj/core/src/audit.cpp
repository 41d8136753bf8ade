#include <pultr/audit.hpp>
#include <pultr/functors.hpp>
#include <pultr/hom.hpp>
#include <pultr/right_adjoints.hpp>
#include <pultr/subtree.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace pultr {

std::vector<Digraph> all_digraphs(int n)
{
    std::vector<Digraph> graphs;
    long long masks = 1ll << (n * n);
    graphs.reserve(masks);
    for (long long mask = 0; mask < masks; ++mask) {
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (mask >> (u * n + v) & 1)
                    arcs.emplace_back(u, v);
        graphs.emplace_back(n, std::move(arcs));
    }
    return graphs;
}

std::vector<Digraph> all_digraphs_up_to(int n)
{
    std::vector<Digraph> graphs;
    for (int i = 0; i <= n; ++i) {
        auto layer = all_digraphs(i);
        graphs.insert(graphs.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return graphs;
}

const char * omega_kind_name(OmegaKind kind)
{
    switch (kind) {
    case OmegaKind::delta_r: return "delta-r";
    case OmegaKind::path: return "omega-path";
    case OmegaKind::path_triple: return "omega-path-triple";
    case OmegaKind::rpath: return "omega-rpath";
    case OmegaKind::glued_paths: return "omega-glued";
    case OmegaKind::example_tree: return "omega-example-tree";
    case OmegaKind::tree: return "omega-tree";
    }
    return "?";
}

std::optional<OmegaKind> omega_kind_from_name(const std::string & name)
{
    for (OmegaKind kind : {OmegaKind::delta_r, OmegaKind::path, OmegaKind::path_triple,
             OmegaKind::rpath, OmegaKind::glued_paths, OmegaKind::example_tree, OmegaKind::tree})
        if (name == omega_kind_name(kind))
            return kind;
    return std::nullopt;
}

TupleConstruction omega_construction(const OmegaRequest & request, const Digraph & h)
{
    switch (request.kind) {
    case OmegaKind::delta_r: return delta_r_construction(h);
    case OmegaKind::path: return omega_path_construction(h);
    case OmegaKind::path_triple: return omega_path_triple_construction(h);
    case OmegaKind::rpath: return omega_rpath_construction(request.t, h);
    case OmegaKind::glued_paths: return omega_glued_paths_construction(h);
    case OmegaKind::example_tree: return omega_example_tree_construction(h);
    case OmegaKind::tree:
        return omega_tree_construction(build_subtree_decomposition(request.t, request.middle_override), h);
    }
    throw std::logic_error("unknown omega kind");
}

Digraph omega_folded(const OmegaRequest & request, const Digraph & h)
{
    ConstructionOptions options;
    options.candidate_cap = request.candidate_cap;
    return materialize_folded(omega_construction(request, h), options);
}

int run_parallel(int jobs, int tasks, const std::function<void(int)> & task)
{
    jobs = std::max(1, std::min(jobs, tasks));
    if (jobs <= 1) {
        for (int i = 0; i < tasks; ++i)
            task(i);
        return 1;
    }
    std::vector<std::thread> workers;
    std::mutex mutex;
    int next = 0;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            while (true) {
                int i;
                {
                    std::lock_guard<std::mutex> lock(mutex);
                    if (next == tasks)
                        return;
                    i = next++;
                }
                task(i);
            }
        });
    for (auto & worker : workers)
        worker.join();
    return jobs;
}

namespace {

constexpr size_t max_recorded_violations = 5;

// Violation order must not depend on thread interleaving.
void sort_violations(std::vector<Violation> & violations)
{
    std::sort(violations.begin(), violations.end(), [](const Violation & a, const Violation & b) {
        auto key = [](const Violation & v) {
            return std::make_tuple(v.h.n(), v.h.arcs(), v.g.n(), v.g.arcs());
        };
        return key(a) < key(b);
    });
}

std::string render_universe(const std::vector<long long> & sizes)
{
    std::ostringstream out;
    long long total = 0;
    for (size_t n = 0; n < sizes.size(); ++n) {
        out << (n ? " + " : "") << sizes[n] << " (n=" << n << ")";
        total += sizes[n];
    }
    out << " = " << total;
    return out.str();
}

} // namespace

std::string AdjunctionReport::render() const
{
    std::ostringstream out;
    out << (pass() ? "PASS" : "FAIL") << " " << description << "\n";
    if (sampled) {
        out << "sampled sweep, seed " << seed << "\n";
    }
    else {
        out << "G universe: " << render_universe(g_universe_sizes) << "\n";
        out << "H universe: " << render_universe(h_universe_sizes) << "\n";
    }
    out << "pairs checked: " << pairs_checked << ", violations: " << violations.size() << "\n";
    for (auto & v : violations) {
        out << "violation (lhs=" << v.lhs << ", rhs=" << v.rhs << ")\nG:\n"
            << emit_digraph(v.g) << "H:\n" << emit_digraph(v.h);
    }
    return out.str();
}

AdjunctionReport audit_lambda_gamma(const PultrTemplate & t, int g_max, int h_max, int jobs)
{
    require_valid(t);
    auto gs = all_digraphs_up_to(g_max);
    auto hs = all_digraphs_up_to(h_max);

    AdjunctionReport report;
    report.description = "lambda -| gamma adjunction";
    for (int n = 0; n <= g_max; ++n)
        report.g_universe_sizes.push_back(1ll << (n * n));
    for (int n = 0; n <= h_max; ++n)
        report.h_universe_sizes.push_back(1ll << (n * n));

    std::vector<Digraph> lambdas(gs.size());
    run_parallel(jobs, static_cast<int>(gs.size()), [&](int i) {
        lambdas[i] = lambda_apply(t, gs[i]).graph;
        lambdas[i].labels.reset();
    });
    std::vector<Digraph> gammas(hs.size());
    run_parallel(jobs, static_cast<int>(hs.size()), [&](int i) {
        gammas[i] = gamma_apply(t, hs[i]);
        gammas[i].labels.reset();
    });

    std::mutex mutex;
    run_parallel(jobs, static_cast<int>(gs.size()), [&](int i) {
        for (size_t j = 0; j < hs.size(); ++j) {
            bool lhs = hom_exists_bool(lambdas[i], hs[j]);
            bool rhs = hom_exists_bool(gs[i], gammas[j]);
            if (lhs != rhs) {
                std::lock_guard<std::mutex> lock(mutex);
                if (report.violations.size() < max_recorded_violations)
                    report.violations.push_back({gs[i], hs[j], lhs, rhs});
            }
        }
    });
    report.pairs_checked = static_cast<long long>(gs.size()) * hs.size();
    sort_violations(report.violations);
    return report;
}

AdjunctionReport audit_gamma_omega(const OmegaRequest & request, int g_max, int h_max, int jobs)
{
    require_valid(request.t);
    auto gs = all_digraphs_up_to(g_max);
    auto hs = all_digraphs_up_to(h_max);

    AdjunctionReport report;
    report.description = std::string("gamma -| ") + omega_kind_name(request.kind) + " adjunction";
    for (int n = 0; n <= g_max; ++n)
        report.g_universe_sizes.push_back(1ll << (n * n));
    for (int n = 0; n <= h_max; ++n)
        report.h_universe_sizes.push_back(1ll << (n * n));

    std::vector<Digraph> gammas(gs.size());
    run_parallel(jobs, static_cast<int>(gs.size()), [&](int i) {
        gammas[i] = gamma_apply(request.t, gs[i]);
        gammas[i].labels.reset();
    });

    std::mutex mutex;
    run_parallel(jobs, static_cast<int>(hs.size()), [&](int j) {
        Digraph omega = omega_folded(request, hs[j]);
        omega.labels.reset();
        for (size_t i = 0; i < gs.size(); ++i) {
            bool lhs = hom_exists_bool(gammas[i], hs[j]);
            bool rhs = hom_exists_bool(gs[i], omega);
            if (lhs != rhs) {
                std::lock_guard<std::mutex> lock(mutex);
                if (report.violations.size() < max_recorded_violations)
                    report.violations.push_back({gs[i], hs[j], lhs, rhs});
            }
        }
    });
    report.pairs_checked = static_cast<long long>(gs.size()) * hs.size();
    sort_violations(report.violations);
    return report;
}

AdjunctionReport audit_gamma_omega_sampled(const OmegaRequest & request, int g_max, int h_max,
    int samples, unsigned seed)
{
    require_valid(request.t);
    AdjunctionReport report;
    report.description = std::string("gamma -| ") + omega_kind_name(request.kind) + " adjunction";
    report.sampled = true;
    report.seed = seed;

    std::mt19937 rng(seed);
    auto random_digraph = [&](int max_n) {
        int n = std::uniform_int_distribution<int>(0, max_n)(rng);
        std::bernoulli_distribution arc(0.35);
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (arc(rng))
                    arcs.emplace_back(u, v);
        return Digraph(n, std::move(arcs));
    };

    // The folded adjoint is the expensive part; cache it per ground digraph.
    std::map<std::string, Digraph> folded;
    for (int i = 0; i < samples; ++i) {
        Digraph g = random_digraph(g_max);
        Digraph h = random_digraph(h_max);
        auto key = emit_digraph(h);
        auto it = folded.find(key);
        if (it == folded.end()) {
            Digraph w = omega_folded(request, h);
            w.labels.reset();
            it = folded.emplace(std::move(key), std::move(w)).first;
        }
        bool lhs = hom_exists_bool(gamma_apply(request.t, g), h);
        bool rhs = hom_exists_bool(g, it->second);
        ++report.pairs_checked;
        if (lhs != rhs && report.violations.size() < max_recorded_violations)
            report.violations.push_back({g, h, lhs, rhs});
    }
    return report;
}

std::string EquivalenceReport::render() const
{
    std::ostringstream out;
    out << (pass() ? "PASS" : "FAIL") << " " << description << "\n";
    out << "ground digraphs checked: " << graphs_checked << ", failures: " << failures.size() << "\n";
    for (auto & h : failures)
        out << "failure at H:\n" << emit_digraph(h);
    return out.str();
}

EquivalenceReport audit_omega_equivalence(const OmegaRequest & a, const OmegaRequest & b, int h_max)
{
    EquivalenceReport report;
    report.description = std::string(omega_kind_name(a.kind)) + " ~ " + omega_kind_name(b.kind) + " hom-equivalence";
    for (auto & h : all_digraphs_up_to(h_max)) {
        ++report.graphs_checked;
        Digraph wa = omega_folded(a, h);
        Digraph wb = omega_folded(b, h);
        wa.labels.reset();
        wb.labels.reset();
        if (! (hom_exists_bool(wa, wb) && hom_exists_bool(wb, wa)))
            report.failures.push_back(h);
    }
    return report;
}

} // namespace pultr
