#ifndef PULTR_PULTR_TEMPLATE_HPP
#define PULTR_PULTR_TEMPLATE_HPP

#include <pultr/digraph.hpp>

#include <string>
#include <vector>

namespace pultr {

/// Quadruple (P, Q, eps1, eps2) with eps1, eps2 homomorphisms P -> Q.
struct PultrTemplate {
    Digraph p;
    Digraph q;
    std::vector<int> eps1;
    std::vector<int> eps2;
};

struct TemplateReport {
    bool eps1_homomorphism = false;
    bool eps2_homomorphism = false;
    bool degenerate_equal_eps = false; // eps1 == eps2
    bool p_is_point = false;           // P = single arcless vertex
    bool p_is_arc = false;             // P = single arc on two vertices
    bool q_is_tree = false;
    bool tree_construction_applies = false; // P point or arc, Q a tree, eps distinct

    bool valid() const { return eps1_homomorphism && eps2_homomorphism; }
    std::string describe() const;
};

TemplateReport validate_template(const PultrTemplate & t);

/// Throws precondition_error when either eps map is not a homomorphism.
void require_valid(const PultrTemplate & t);

PultrTemplate parse_template(const std::string & text);
std::string emit_template(const PultrTemplate & t);

} // namespace pultr

#endif
