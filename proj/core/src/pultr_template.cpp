#include <pultr/pultr_template.hpp>
#include <pultr/hom.hpp>

#include <sstream>

namespace pultr {

TemplateReport validate_template(const PultrTemplate & t)
{
    TemplateReport report;
    report.eps1_homomorphism = is_arc_preserving(t.p, t.q, t.eps1);
    report.eps2_homomorphism = is_arc_preserving(t.p, t.q, t.eps2);
    report.degenerate_equal_eps = t.eps1 == t.eps2;
    report.p_is_point = t.p.n() == 1 && t.p.arc_count() == 0;
    report.p_is_arc = t.p.n() == 2 && t.p.arcs() == std::vector<Arc>{{0, 1}};
    report.q_is_tree = is_oriented_tree(t.q);
    report.tree_construction_applies =
        (report.p_is_point || report.p_is_arc) && report.q_is_tree && ! report.degenerate_equal_eps && report.valid();
    return report;
}

std::string TemplateReport::describe() const
{
    std::ostringstream out;
    out << "eps1 homomorphism: " << (eps1_homomorphism ? "yes" : "NO") << "\n";
    out << "eps2 homomorphism: " << (eps2_homomorphism ? "yes" : "NO") << "\n";
    out << "eps1 == eps2 (degenerate): " << (degenerate_equal_eps ? "yes" : "no") << "\n";
    out << "P is a point: " << (p_is_point ? "yes" : "no") << "\n";
    out << "P is an arc: " << (p_is_arc ? "yes" : "no") << "\n";
    out << "Q is an oriented tree: " << (q_is_tree ? "yes" : "no") << "\n";
    out << "tree right-adjoint construction applies: " << (tree_construction_applies ? "yes" : "no") << "\n";
    return out.str();
}

void require_valid(const PultrTemplate & t)
{
    auto report = validate_template(t);
    if (! report.eps1_homomorphism)
        throw precondition_error("template: eps1 is not a homomorphism P -> Q");
    if (! report.eps2_homomorphism)
        throw precondition_error("template: eps2 is not a homomorphism P -> Q");
}

PultrTemplate parse_template(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    // Digraph blocks are collected verbatim and reparsed so digraph errors
    // carry block-relative line numbers.
    std::string p_block, q_block;
    std::vector<std::pair<int, int>> e1, e2;
    int section = 0; // 0 = preamble, 1 = P, 2 = Q

    auto parse_pair = [&](std::istringstream & ls, std::vector<std::pair<int, int>> & target) {
        int pv, qv;
        if (! (ls >> pv >> qv))
            throw parse_error(lineno, "eps line needs '<p-vertex> <q-vertex>'");
        target.emplace_back(pv, qv);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (! (ls >> head))
            continue;
        if (head[0] == '#')
            continue;
        if (head == "P" || head == "p") {
            section = 1;
        }
        else if (head == "Q" || head == "q") {
            section = 2;
        }
        else if (head == "e1") {
            parse_pair(ls, e1);
        }
        else if (head == "e2") {
            parse_pair(ls, e2);
        }
        else if (section == 1) {
            p_block += line + "\n";
        }
        else if (section == 2) {
            q_block += line + "\n";
        }
        else {
            throw parse_error(lineno, "unexpected '" + head + "' before a P/Q section");
        }
    }

    PultrTemplate t;
    t.p = parse_digraph(p_block);
    t.q = parse_digraph(q_block);
    t.eps1.assign(t.p.n(), -1);
    t.eps2.assign(t.p.n(), -1);
    auto fill = [&](const std::vector<std::pair<int, int>> & pairs, std::vector<int> & eps, const char * name) {
        for (auto & [pv, qv] : pairs) {
            if (pv < 0 || pv >= t.p.n())
                throw parse_error(0, std::string(name) + ": P-vertex out of range");
            if (qv < 0 || qv >= t.q.n())
                throw parse_error(0, std::string(name) + ": Q-vertex out of range");
            if (eps[pv] != -1 && eps[pv] != qv)
                throw parse_error(0, std::string(name) + ": P-vertex mapped twice");
            eps[pv] = qv;
        }
        for (int v = 0; v < t.p.n(); ++v)
            if (eps[v] == -1)
                throw parse_error(0, std::string(name) + ": P-vertex " + std::to_string(v) + " unmapped");
    };
    fill(e1, t.eps1, "e1");
    fill(e2, t.eps2, "e2");
    require_valid(t);
    return t;
}

std::string emit_template(const PultrTemplate & t)
{
    std::ostringstream out;
    out << "P\n" << emit_digraph(t.p);
    out << "Q\n" << emit_digraph(t.q);
    for (int v = 0; v < t.p.n(); ++v)
        out << "e1 " << v << " " << t.eps1[v] << "\n";
    for (int v = 0; v < t.p.n(); ++v)
        out << "e2 " << v << " " << t.eps2[v] << "\n";
    return out.str();
}

} // namespace pultr
