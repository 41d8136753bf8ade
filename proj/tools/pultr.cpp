// Command-line front end for the digraph functor workbench: applies the
// template functors and right-adjoint constructions to digraph files and
// runs the exhaustive audits.

#include <CLI11.hpp>

#include <pultr/audit.hpp>
#include <pultr/duality.hpp>
#include <pultr/fixtures.hpp>
#include <pultr/functors.hpp>
#include <pultr/hom.hpp>
#include <pultr/pultr_template.hpp>
#include <pultr/right_adjoints.hpp>
#include <pultr/subtree.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

// Exit codes, stable for scripting:
//   0 success / audit passed / homomorphism found
//   1 audit violation found / no homomorphism
//   2 parse error
//   3 size or resource guard breach
//   4 precondition or construction failure
//   5 internal error
constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_parse = 2;
constexpr int exit_guard = 3;
constexpr int exit_precondition = 4;
constexpr int exit_internal = 5;

std::string read_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw pultr::parse_error(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

pultr::Digraph load_digraph(const std::string & path)
{
    return pultr::parse_digraph(read_file(path));
}

pultr::PultrTemplate load_template(const std::string & path)
{
    return pultr::parse_template(read_file(path));
}

void write_output(const std::string & text, const std::string & out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (! out)
        throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

struct ApplyArgs {
    std::string functor;
    std::string template_path;
    std::string graph_path;
    std::string format = "native";
    std::string out_path;
    unsigned long long cap = 1ull << 16;
    int middle_vertex = -1;
};

int run_apply(const ApplyArgs & args)
{
    using namespace pultr;
    Digraph input = load_digraph(args.graph_path);
    ConstructionOptions construction{args.cap};
    std::optional<int> middle;
    if (args.middle_vertex >= 0)
        middle = args.middle_vertex;

    Digraph result;
    if (args.functor == "lambda" || args.functor == "gamma") {
        PultrTemplate t = load_template(args.template_path);
        result = args.functor == "lambda" ? lambda_apply(t, input).graph : gamma_apply(t, input);
    }
    else if (args.functor == "omega-rpath" || args.functor == "omega-tree") {
        PultrTemplate t = load_template(args.template_path);
        if (args.functor == "omega-rpath")
            result = omega_rpath(t, input, construction);
        else
            result = omega_tree(t, input, {middle, construction});
    }
    else {
        auto kind = omega_kind_from_name(args.functor);
        if (! kind)
            throw CLI::ValidationError("--functor", "unknown functor '" + args.functor + "'");
        OmegaRequest request{*kind, {}, middle, args.cap};
        result = materialize(omega_construction(request, input), construction);
    }

    write_output(emit_digraph(result, args.format == "dot" ? EmitFormat::dot : EmitFormat::native),
        args.out_path);
    return exit_ok;
}

pultr::OmegaRequest make_request(pultr::OmegaKind kind, const std::string & template_path,
    int middle_vertex, unsigned long long cap)
{
    pultr::OmegaRequest request;
    request.kind = kind;
    if (! template_path.empty())
        request.t = load_template(template_path);
    else if (kind == pultr::OmegaKind::rpath || kind == pultr::OmegaKind::tree)
        throw CLI::ValidationError("--template", "this construction needs a template");
    if (middle_vertex >= 0)
        request.middle_override = middle_vertex;
    request.candidate_cap = cap;
    return request;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"digraph functor workbench: Pultr templates, their left and central "
                 "functors, right adjoints, and exhaustive adjunction audits"};
    app.require_subcommand(1);

    // ---- apply ----
    ApplyArgs apply_args;
    auto * apply = app.add_subcommand("apply", "apply a functor or adjoint construction to a digraph");
    apply->add_option("--functor", apply_args.functor,
             "one of: lambda, gamma, delta-r, omega-path, omega-path-triple, omega-rpath, "
             "omega-tree, omega-example-tree, omega-glued")
        ->required();
    apply->add_option("--template", apply_args.template_path, "template file (lambda/gamma/omega-rpath/omega-tree)");
    apply->add_option("--graph", apply_args.graph_path, "input digraph file")->required();
    apply->add_option("--format", apply_args.format, "output format: native or dot")
        ->check(CLI::IsMember({"native", "dot"}));
    apply->add_option("--out", apply_args.out_path, "output file (default stdout)");
    apply->add_option("--cap", apply_args.cap, "candidate-count guard for the adjoint constructions");
    apply->add_option("--middle-vertex", apply_args.middle_vertex, "middle vertex override (omega-tree)");

    // ---- audit ----
    auto * audit = app.add_subcommand("audit", "run an exhaustive verification sweep");
    audit->require_subcommand(1);

    struct {
        std::string template_path, omega;
        int g_max = 3, h_max = 2, jobs = 1, middle_vertex = -1, sample = 0;
        unsigned seed = 1;
        unsigned long long cap = 1ull << 21;
    } adj;
    auto * adjunction = audit->add_subcommand("adjunction", "gamma -| omega over all small digraphs");
    adjunction->add_option("--template", adj.template_path)->required();
    adjunction->add_option("--omega", adj.omega, "adjoint construction (see apply --functor)")->required();
    adjunction->add_option("--g-max", adj.g_max);
    adjunction->add_option("--h-max", adj.h_max);
    adjunction->add_option("--jobs", adj.jobs);
    adjunction->add_option("--cap", adj.cap);
    adjunction->add_option("--middle-vertex", adj.middle_vertex);
    adjunction->add_option("--sample", adj.sample,
        "check this many seeded random pairs instead of the exhaustive sweep");
    adjunction->add_option("--seed", adj.seed, "seed for --sample");

    struct {
        std::string template_path;
        int g_max = 3, h_max = 2, jobs = 1;
    } lg;
    auto * lambda_gamma = audit->add_subcommand("lambda-gamma", "lambda -| gamma over all small digraphs");
    lambda_gamma->add_option("--template", lg.template_path)->required();
    lambda_gamma->add_option("--g-max", lg.g_max);
    lambda_gamma->add_option("--h-max", lg.h_max);
    lambda_gamma->add_option("--jobs", lg.jobs);

    struct {
        std::string template_path;
        int tree_budget = 6;
    } nec;
    auto * necessary = audit->add_subcommand("necessary", "necessary conditions for a right adjoint");
    necessary->add_option("--template", nec.template_path)->required();
    necessary->add_option("--tree-budget", nec.tree_budget);

    struct {
        std::vector<std::string> obstructions;
        std::string target;
        int n_max = 4;
    } dua;
    auto * duality = audit->add_subcommand("duality", "verify a homomorphism duality candidate");
    duality->add_option("--obstructions", dua.obstructions)->required()->expected(-1);
    duality->add_option("--target", dua.target)->required();
    duality->add_option("--n-max", dua.n_max);

    struct {
        std::string template_path, target, k;
        std::vector<std::string> obstructions;
        int n_max = 3;
    } tra;
    auto * transfer = audit->add_subcommand("transfer", "transfer an obstruction set through a template");
    transfer->add_option("--template", tra.template_path)->required();
    transfer->add_option("--obstructions", tra.obstructions)->required()->expected(-1);
    transfer->add_option("--target", tra.target)->required();
    transfer->add_option("--k", tra.k, "candidate digraph for the transferred side")->required();
    transfer->add_option("--n-max", tra.n_max);

    struct {
        std::string template_path, omega_a, omega_b;
        int h_max = 2, middle_vertex = -1;
        unsigned long long cap = 1ull << 21;
    } eqv;
    auto * omega_equiv = audit->add_subcommand("omega-equiv", "hom-equivalence of two adjoint constructions");
    omega_equiv->add_option("--template", eqv.template_path)->required();
    omega_equiv->add_option("--omega-a", eqv.omega_a)->required();
    omega_equiv->add_option("--omega-b", eqv.omega_b)->required();
    omega_equiv->add_option("--h-max", eqv.h_max);
    omega_equiv->add_option("--cap", eqv.cap);
    omega_equiv->add_option("--middle-vertex", eqv.middle_vertex);

    struct {
        std::string outer, inner;
        int g_max = 3;
    } cmp;
    auto * composition = audit->add_subcommand("composition", "certify a template composition");
    composition->add_option("--outer", cmp.outer)->required();
    composition->add_option("--inner", cmp.inner)->required();
    composition->add_option("--g-max", cmp.g_max);

    // ---- core ----
    struct {
        std::string graph_path, out_path;
        int cap = 12;
    } core_args;
    auto * core_cmd = app.add_subcommand("core", "minimum hom-equivalent induced subgraph");
    core_cmd->add_option("--graph", core_args.graph_path)->required();
    core_cmd->add_option("--out", core_args.out_path);
    core_cmd->add_option("--cap", core_args.cap, "vertex cap for the exhaustive search");

    // ---- hom ----
    struct {
        std::string source, target;
        bool enumerate = false;
        std::vector<int> pins;
    } hom_args;
    auto * hom_cmd = app.add_subcommand("hom", "search for a homomorphism between two digraphs");
    hom_cmd->add_option("--source", hom_args.source)->required();
    hom_cmd->add_option("--target", hom_args.target)->required();
    hom_cmd->add_flag("--enumerate", hom_args.enumerate, "list every homomorphism");
    hom_cmd->add_option("--pin", hom_args.pins, "pinned assignments as flat pairs: u w [u w ...]")
        ->expected(-1);

    // ---- compose ----
    struct {
        std::string outer, inner, out_path;
        int certify_max = 3;
    } compose_args;
    auto * compose_cmd = app.add_subcommand("compose", "compose two templates and certify the result");
    compose_cmd->add_option("--outer", compose_args.outer)->required();
    compose_cmd->add_option("--inner", compose_args.inner)->required();
    compose_cmd->add_option("--certify-max", compose_args.certify_max,
        "certify on all digraphs with at most this many vertices");
    compose_cmd->add_option("--out", compose_args.out_path);

    // ---- decompose ----
    struct {
        std::string template_path;
        int middle_vertex = -1;
    } dec;
    auto * decompose = app.add_subcommand("decompose", "print the subtree decomposition of a tree template");
    decompose->add_option("--template", dec.template_path)->required();
    decompose->add_option("--middle-vertex", dec.middle_vertex);

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace pultr;

        if (*apply)
            return run_apply(apply_args);

        if (*adjunction) {
            auto kind = omega_kind_from_name(adj.omega);
            if (! kind)
                throw CLI::ValidationError("--omega", "unknown construction '" + adj.omega + "'");
            OmegaRequest request = make_request(*kind, adj.template_path, adj.middle_vertex, adj.cap);
            auto report = adj.sample > 0
                ? audit_gamma_omega_sampled(request, adj.g_max, adj.h_max, adj.sample, adj.seed)
                : audit_gamma_omega(request, adj.g_max, adj.h_max, adj.jobs);
            std::cout << report.render();
            return report.pass() ? exit_ok : exit_violation;
        }
        if (*lambda_gamma) {
            auto report = audit_lambda_gamma(load_template(lg.template_path), lg.g_max, lg.h_max, lg.jobs);
            std::cout << report.render();
            return report.pass() ? exit_ok : exit_violation;
        }
        if (*necessary) {
            auto report = check_necessary_conditions(load_template(nec.template_path), nec.tree_budget);
            std::cout << report.render();
            return report.verdict ? exit_ok : exit_violation;
        }
        if (*duality) {
            DualityCandidate candidate;
            for (auto & path : dua.obstructions)
                candidate.obstructions.push_back(load_digraph(path));
            candidate.target = load_digraph(dua.target);
            auto verdict = verify_duality(candidate, dua.n_max);
            std::cout << verdict.render();
            return verdict.holds ? exit_ok : exit_violation;
        }
        if (*transfer) {
            DualityCandidate candidate;
            for (auto & path : tra.obstructions)
                candidate.obstructions.push_back(load_digraph(path));
            candidate.target = load_digraph(tra.target);
            auto verdict = transfer_obstructions(load_template(tra.template_path), candidate,
                load_digraph(tra.k), tra.n_max);
            std::cout << verdict.render();
            return verdict.holds ? exit_ok : exit_violation;
        }
        if (*omega_equiv) {
            auto kind_a = omega_kind_from_name(eqv.omega_a);
            auto kind_b = omega_kind_from_name(eqv.omega_b);
            if (! kind_a || ! kind_b)
                throw CLI::ValidationError("--omega-a/--omega-b", "unknown construction");
            OmegaRequest a = make_request(*kind_a, eqv.template_path, eqv.middle_vertex, eqv.cap);
            OmegaRequest b = make_request(*kind_b, eqv.template_path, eqv.middle_vertex, eqv.cap);
            auto report = audit_omega_equivalence(a, b, eqv.h_max);
            std::cout << report.render();
            return report.pass() ? exit_ok : exit_violation;
        }
        if (*composition) {
            auto outer = load_template(cmp.outer);
            auto inner = load_template(cmp.inner);
            auto result = compose_templates(outer, inner, cmp.g_max);
            std::cout << "PASS composition certificate over " << result.certified_graphs
                      << " digraphs\n" << emit_template(result.composed);
            return exit_ok;
        }
        if (*core_cmd) {
            auto result = core(load_digraph(core_args.graph_path), {core_args.cap});
            std::ostringstream note;
            note << "# core vertices of the input:";
            for (int v : result.vertices)
                note << " " << v;
            note << "\n";
            write_output(note.str() + emit_digraph(result.graph), core_args.out_path);
            return exit_ok;
        }
        if (*hom_cmd) {
            Digraph source = load_digraph(hom_args.source);
            Digraph target = load_digraph(hom_args.target);
            if (hom_args.pins.size() % 2 != 0)
                throw CLI::ValidationError("--pin", "expects an even number of integers");
            PinSet pins;
            for (size_t i = 0; i + 1 < hom_args.pins.size(); i += 2)
                pins.emplace_back(hom_args.pins[i], hom_args.pins[i + 1]);
            if (hom_args.enumerate) {
                auto homs = enumerate_homs(source, target, pins);
                std::cout << homs.size() << " homomorphisms\n";
                for (auto & hom : homs) {
                    for (size_t v = 0; v < hom.map.size(); ++v)
                        std::cout << (v ? " " : "") << hom.map[v];
                    std::cout << "\n";
                }
                return homs.empty() ? exit_violation : exit_ok;
            }
            auto witness = hom_exists(source, target, pins);
            if (! witness) {
                std::cout << "none\n";
                return exit_violation;
            }
            for (size_t v = 0; v < witness->map.size(); ++v)
                std::cout << (v ? " " : "") << witness->map[v];
            std::cout << "\n";
            return exit_ok;
        }
        if (*compose_cmd) {
            auto result = compose_templates(load_template(compose_args.outer),
                load_template(compose_args.inner), compose_args.certify_max);
            std::ostringstream out;
            out << "# certified on " << result.certified_graphs << " digraphs\n";
            out << emit_template(result.composed);
            write_output(out.str(), compose_args.out_path);
            return exit_ok;
        }
        if (*decompose) {
            std::optional<int> middle;
            if (dec.middle_vertex >= 0)
                middle = dec.middle_vertex;
            auto d = build_subtree_decomposition(load_template(dec.template_path), middle);
            std::cout << d.describe();
            return exit_ok;
        }
    }
    catch (const pultr::parse_error & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    }
    catch (const pultr::resource_error & e) {
        std::cerr << "guard: " << e.what() << "\n";
        return exit_guard;
    }
    catch (const pultr::construction_error & e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return exit_precondition;
    }
    catch (const pultr::precondition_error & e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return exit_precondition;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
