#include <pultr/tuple_construction.hpp>
#include <pultr/reduce.hpp>


#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace pultr {

namespace {

struct Evaluator {
    const TupleConstruction & tc;
    int n;
    std::uint32_t full_mask;
    std::vector<std::uint32_t> out_mask;   // out-neighbourhoods of h
    std::vector<std::uint32_t> common_out; // AND of out-masks over a vertex set

    explicit Evaluator(const TupleConstruction & tc_) : tc(tc_), n(tc_.h.n())
    {
        if (n > 16)
            throw resource_error(tc.name + ": ground digraph too large for set coordinates (" + std::to_string(n) + " vertices)");
        full_mask = n == 32 ? ~0u : (1u << n) - 1;
        out_mask.assign(n, 0);
        for (auto & [u, v] : tc.h.arcs())
            out_mask[u] |= 1u << v;
        common_out.assign(1u << n, full_mask);
        for (std::uint32_t x = 1; x < (1u << n); ++x) {
            int low = __builtin_ctz(x);
            common_out[x] = common_out[x & (x - 1)] & out_mask[low];
        }
    }

    bool rr(std::uint32_t xs, std::uint32_t ys) const
    {
        return (common_out[xs] & ys) == ys;
    }

    static std::uint32_t family_union(std::uint32_t fam)
    {
        std::uint32_t u = 0;
        while (fam) {
            u |= static_cast<std::uint32_t>(__builtin_ctz(fam));
            fam &= fam - 1;
        }
        return u;
    }

    static bool allpairs_intersect(std::uint32_t fam_a, std::uint32_t fam_b)
    {
        for (std::uint32_t a = fam_a; a; a &= a - 1) {
            std::uint32_t m = static_cast<std::uint32_t>(__builtin_ctz(a));
            for (std::uint32_t b = fam_b; b; b &= b - 1)
                if ((m & static_cast<std::uint32_t>(__builtin_ctz(b))) == 0)
                    return false;
        }
        return true;
    }

    std::uint32_t operand_value(const Operand & op, const std::uint32_t * src, const std::uint32_t * tgt) const
    {
        std::uint32_t raw = (op.side == Side::src ? src : tgt)[op.coord];
        switch (op.kind) {
        case Operand::vset:
        case Operand::family:
        case Operand::bullet:
            return raw;
        case Operand::bullet_as_set:
            return 1u << raw;
        case Operand::family_union:
            return family_union(raw);
        }
        return raw;
    }

    bool atom(const Atom & a, const std::uint32_t * src, const std::uint32_t * tgt) const
    {
        switch (a.pred) {
        case Atom::rr:
            return rr(operand_value(a.a, src, tgt), operand_value(a.b, src, tgt));
        case Atom::member:
            return operand_value(a.b, src, tgt) >> operand_value(a.a, src, tgt) & 1;
        case Atom::subset: {
            std::uint32_t x = operand_value(a.a, src, tgt);
            return (x & operand_value(a.b, src, tgt)) == x;
        }
        case Atom::intersects:
            return (operand_value(a.a, src, tgt) & operand_value(a.b, src, tgt)) != 0;
        case Atom::allpairs_intersect:
            return allpairs_intersect(operand_value(a.a, src, tgt), operand_value(a.b, src, tgt));
        case Atom::nonempty:
            return operand_value(a.a, src, tgt) != 0;
        case Atom::bit_set:
            return operand_value(a.a, src, tgt) == 1;
        }
        return false;
    }

    bool rule(const Rule & r, const std::uint32_t * src, const std::uint32_t * tgt) const
    {
        for (auto & hyp : r.hyps)
            if (! atom(hyp, src, tgt))
                return true; // hypothesis fails, rule imposes nothing
        return atom(r.concl, src, tgt);
    }
};

unsigned long long domain_size(const Coord & c, int n)
{
    switch (c.type) {
    case CoordType::bullet: return static_cast<unsigned long long>(n);
    case CoordType::bit: return 2;
    case CoordType::vset: return 1ull << n;
    case CoordType::family: return 1ull << (1u << n);
    }
    return 0;
}

} // namespace

unsigned long long TupleConstruction::candidate_estimate() const
{
    int n = h.n();
    for (auto & c : coords)
        if (c.type == CoordType::family && n > 4)
            throw resource_error(name + ": family coordinates need |V(H)| <= 4");
    unsigned long long total = 1;
    for (auto & c : coords) {
        unsigned long long d = domain_size(c, n);
        if (d == 0)
            return 0;
        if (total > (1ull << 62) / d)
            return ~0ull; // saturate
        total *= d;
    }
    return total;
}

std::vector<std::vector<std::uint32_t>> enumerate_valid_tuples(const TupleConstruction & tc,
    const ConstructionOptions & options)
{
    unsigned long long estimate = tc.candidate_estimate();
    if (estimate > options.candidate_cap)
        throw resource_error(tc.name + ": candidate estimate " + std::to_string(estimate) +
            " exceeds cap " + std::to_string(options.candidate_cap));

    Evaluator ev(tc);
    int k = static_cast<int>(tc.coords.size());
    std::vector<unsigned long long> sizes(k);
    for (int i = 0; i < k; ++i)
        sizes[i] = domain_size(tc.coords[i], tc.h.n());

    std::vector<std::vector<std::uint32_t>> tuples;
    if (estimate == 0)
        return tuples;

    std::vector<std::uint32_t> current(k, 0);
    while (true) {
        bool ok = true;
        for (auto & r : tc.validity)
            if (! ev.rule(r, current.data(), current.data())) {
                ok = false;
                break;
            }
        if (ok)
            tuples.push_back(current);

        int i = k - 1;
        while (i >= 0 && current[i] + 1 == sizes[i]) {
            current[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++current[i];
    }
    return tuples;
}

bool tuple_arc(const TupleConstruction & tc, const std::vector<std::uint32_t> & src,
    const std::vector<std::uint32_t> & tgt)
{
    Evaluator ev(tc);
    for (auto & r : tc.arc_rules)
        if (! ev.rule(r, src.data(), tgt.data()))
            return false;
    return true;
}

namespace {

std::string render_set(std::uint32_t mask)
{
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < 32; ++v)
        if (mask >> v & 1) {
            if (! first)
                out += ",";
            out += std::to_string(v);
            first = false;
        }
    return out + "}";
}

std::string render_family(std::uint32_t fam)
{
    std::string out = "{";
    bool first = true;
    for (int j = 0; j < 32; ++j)
        if (fam >> j & 1) {
            if (! first)
                out += ",";
            out += render_set(static_cast<std::uint32_t>(j));
            first = false;
        }
    return out + "}";
}

} // namespace

std::string render_tuple(const TupleConstruction & tc, const std::vector<std::uint32_t> & tuple)
{
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < tc.coords.size(); ++i) {
        if (i > 0)
            out << (i == 1 && tc.coords[0].type == CoordType::bullet ? ";" : ",");
        switch (tc.coords[i].type) {
        case CoordType::bullet:
        case CoordType::bit:
            out << tuple[i];
            break;
        case CoordType::vset:
            out << render_set(tuple[i]);
            break;
        case CoordType::family:
            out << render_family(tuple[i]);
            break;
        }
    }
    out << ")";
    return out.str();
}

namespace {

// The arc predicate factors through the coordinates the rules actually read
// on each side. Projecting tuples accordingly both dedups the quadratic arc
// work and drives the class-level fold.
struct Projections {
    std::vector<int> src_coords, tgt_coords;      // coord indices, ascending
    std::vector<int> src_pos, tgt_pos;            // coord index -> position (-1 if absent)

    Projections(const TupleConstruction & tc)
    {
        int k = static_cast<int>(tc.coords.size());
        std::vector<bool> src_used(k, false), tgt_used(k, false);
        auto mark = [&](const Operand & op) {
            (op.side == Side::src ? src_used : tgt_used)[op.coord] = true;
        };
        for (auto & r : tc.arc_rules) {
            for (auto & hyp : r.hyps)
                mark(hyp.a);
            mark(r.concl.a);
            if (r.concl.pred != Atom::nonempty && r.concl.pred != Atom::bit_set)
                mark(r.concl.b);
        }
        src_pos.assign(k, -1);
        tgt_pos.assign(k, -1);
        for (int i = 0; i < k; ++i) {
            if (src_used[i]) {
                src_pos[i] = static_cast<int>(src_coords.size());
                src_coords.push_back(i);
            }
            if (tgt_used[i]) {
                tgt_pos[i] = static_cast<int>(tgt_coords.size());
                tgt_coords.push_back(i);
            }
        }
    }
};

struct Interner {
    std::unordered_map<std::string, int> ids;
    std::vector<std::vector<std::uint32_t>> values;

    int intern(const std::vector<std::uint32_t> & key)
    {
        std::string bytes(reinterpret_cast<const char *>(key.data()), key.size() * sizeof(std::uint32_t));
        auto [it, inserted] = ids.try_emplace(std::move(bytes), static_cast<int>(values.size()));
        if (inserted)
            values.push_back(key);
        return it->second;
    }
};

struct BitMatrix {
    int rows = 0, cols = 0, words = 0;
    std::vector<std::uint64_t> data;

    BitMatrix(int r, int c) : rows(r), cols(c), words((c + 63) / 64), data(static_cast<size_t>(r) * words, 0) {}

    std::uint64_t * row(int r) { return data.data() + static_cast<size_t>(r) * words; }
    const std::uint64_t * row(int r) const { return data.data() + static_cast<size_t>(r) * words; }

    void set(int r, int c) { row(r)[c / 64] |= 1ull << (c % 64); }
    bool test(int r, int c) const { return row(r)[c / 64] >> (c % 64) & 1; }

    bool row_subset(int a, int b) const
    {
        const std::uint64_t * ra = row(a);
        const std::uint64_t * rb = row(b);
        for (int w = 0; w < words; ++w)
            if (ra[w] & ~rb[w])
                return false;
        return true;
    }
};

// Rules whose operands read only one side can be hoisted out of the
// quadratic arc loop.
enum class RuleScope { src_only, tgt_only, pairwise };

RuleScope rule_scope(const Rule & r)
{
    bool src = false, tgt = false;
    auto mark = [&](const Operand & op) { (op.side == Side::src ? src : tgt) = true; };
    for (auto & hyp : r.hyps)
        mark(hyp.a);
    mark(r.concl.a);
    if (r.concl.pred != Atom::nonempty && r.concl.pred != Atom::bit_set)
        mark(r.concl.b);
    if (src && ! tgt)
        return RuleScope::src_only;
    if (tgt && ! src)
        return RuleScope::tgt_only;
    return RuleScope::pairwise;
}

// Evaluates rules against projected tuples: positions remap coordinate
// indices into the projection vectors.
struct ProjectedEvaluator {
    Evaluator ev;
    const Projections & proj;
    std::vector<Rule> src_rules, tgt_rules, pair_rules;

    ProjectedEvaluator(const TupleConstruction & tc, const Projections & proj_)
        : ev(tc), proj(proj_)
    {
        auto remap_rule = [&](Rule r) {
            auto remap = [&](Operand & op) {
                op.coord = op.side == Side::src ? proj.src_pos[op.coord] : proj.tgt_pos[op.coord];
            };
            for (auto & hyp : r.hyps)
                remap(hyp.a);
            remap(r.concl.a);
            if (r.concl.pred != Atom::nonempty && r.concl.pred != Atom::bit_set)
                remap(r.concl.b);
            return r;
        };
        for (auto & r : tc.arc_rules) {
            switch (rule_scope(r)) {
            case RuleScope::src_only: src_rules.push_back(remap_rule(r)); break;
            case RuleScope::tgt_only: tgt_rules.push_back(remap_rule(r)); break;
            case RuleScope::pairwise: pair_rules.push_back(remap_rule(r)); break;
            }
        }
    }

    bool src_ok(const std::uint32_t * sp) const
    {
        for (auto & r : src_rules)
            if (! ev.rule(r, sp, nullptr))
                return false;
        return true;
    }

    bool tgt_ok(const std::uint32_t * tp) const
    {
        for (auto & r : tgt_rules)
            if (! ev.rule(r, nullptr, tp))
                return false;
        return true;
    }

    bool pair_ok(const std::uint32_t * sp, const std::uint32_t * tp) const
    {
        for (auto & r : pair_rules)
            if (! ev.rule(r, sp, tp))
                return false;
        return true;
    }
};

} // namespace

Digraph materialize(const TupleConstruction & tc, const ConstructionOptions & options)
{
    auto tuples = enumerate_valid_tuples(tc, options);
    int m = static_cast<int>(tuples.size());

    Projections proj(tc);
    ProjectedEvaluator pev(tc, proj);

    Interner sp_in, tp_in;
    std::vector<int> sp_of(m), tp_of(m);
    std::vector<std::uint32_t> key;
    for (int v = 0; v < m; ++v) {
        key.clear();
        for (int c : proj.src_coords)
            key.push_back(tuples[v][c]);
        sp_of[v] = sp_in.intern(key);
        key.clear();
        for (int c : proj.tgt_coords)
            key.push_back(tuples[v][c]);
        tp_of[v] = tp_in.intern(key);
    }

    int nsp = static_cast<int>(sp_in.values.size());
    int ntp = static_cast<int>(tp_in.values.size());
    BitMatrix M(nsp, ntp);
    std::vector<char> sok(nsp), tok(ntp);
    for (int s = 0; s < nsp; ++s)
        sok[s] = pev.src_ok(sp_in.values[s].data());
    for (int t = 0; t < ntp; ++t)
        tok[t] = pev.tgt_ok(tp_in.values[t].data());
    for (int s = 0; s < nsp; ++s) {
        if (! sok[s])
            continue;
        for (int t = 0; t < ntp; ++t)
            if (tok[t] && pev.pair_ok(sp_in.values[s].data(), tp_in.values[t].data()))
                M.set(s, t);
    }

    std::vector<Arc> arcs;
    for (int u = 0; u < m; ++u) {
        const std::uint64_t * row = M.row(sp_of[u]);
        for (int v = 0; v < m; ++v)
            if (row[tp_of[v] / 64] >> (tp_of[v] % 64) & 1)
                arcs.emplace_back(u, v);
    }

    Digraph g(m, std::move(arcs));
    std::vector<std::string> labels;
    labels.reserve(m);
    for (auto & tuple : tuples)
        labels.push_back(render_tuple(tc, tuple));
    g.labels = std::move(labels);
    return g;
}

FoldedConstruction materialize_folded_with_map(const TupleConstruction & tc, const ConstructionOptions & options)
{
    auto tuples = enumerate_valid_tuples(tc, options);
    int m = static_cast<int>(tuples.size());
    if (m == 0)
        return {Digraph(0, {}), {}};

    Projections proj(tc);
    ProjectedEvaluator pev(tc, proj);

    Interner sp_in, tp_in;
    std::vector<int> sp_of(m), tp_of(m);
    std::vector<std::uint32_t> key;
    for (int v = 0; v < m; ++v) {
        key.clear();
        for (int c : proj.src_coords)
            key.push_back(tuples[v][c]);
        sp_of[v] = sp_in.intern(key);
        key.clear();
        for (int c : proj.tgt_coords)
            key.push_back(tuples[v][c]);
        tp_of[v] = tp_in.intern(key);
    }

    int nsp = static_cast<int>(sp_in.values.size());
    int ntp = static_cast<int>(tp_in.values.size());
    if (static_cast<long long>(nsp) * ntp > (1ll << 34))
        throw resource_error(tc.name + ": projection matrix too large (" + std::to_string(nsp) + " x " + std::to_string(ntp) + ")");

    BitMatrix M(nsp, ntp);
    {
        std::vector<char> sok(nsp), tok(ntp);
        for (int s = 0; s < nsp; ++s)
            sok[s] = pev.src_ok(sp_in.values[s].data());
        for (int t = 0; t < ntp; ++t)
            tok[t] = pev.tgt_ok(tp_in.values[t].data());
        for (int s = 0; s < nsp; ++s) {
            if (! sok[s])
                continue;
            for (int t = 0; t < ntp; ++t)
                if (tok[t] && pev.pair_ok(sp_in.values[s].data(), tp_in.values[t].data()))
                    M.set(s, t);
        }
    }

    BitMatrix Mt(ntp, nsp);
    for (int s = 0; s < nsp; ++s) {
        const std::uint64_t * row = M.row(s);
        for (int w = 0; w < M.words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int t = w * 64 + __builtin_ctzll(bits);
                Mt.set(t, s);
                bits &= bits - 1;
            }
        }
    }

    // Row/column containment preorders on the projection classes, computed
    // over distinct rows only (the matrices are full of repeats and zeros).
    struct Containment {
        std::vector<int> cls;  // row -> distinct-row class
        BitMatrix dom{0, 0};   // containment between distinct rows

        bool test(int a, int b) const { return dom.test(cls[a], cls[b]); }
    };
    auto containment = [](const BitMatrix & mat) {
        Containment result;
        result.cls.resize(mat.rows);
        std::unordered_map<std::string, int> ids;
        std::vector<int> rep;
        for (int r = 0; r < mat.rows; ++r) {
            std::string key(reinterpret_cast<const char *>(mat.row(r)), mat.words * sizeof(std::uint64_t));
            auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<int>(rep.size()));
            if (inserted)
                rep.push_back(r);
            result.cls[r] = it->second;
        }
        int k = static_cast<int>(rep.size());
        std::vector<int> pop(k, 0);
        for (int i = 0; i < k; ++i) {
            const std::uint64_t * row = mat.row(rep[i]);
            for (int w = 0; w < mat.words; ++w)
                pop[i] += __builtin_popcountll(row[w]);
        }
        result.dom = BitMatrix(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (pop[a] > pop[b])
                    continue;
                if (pop[a] == 0 || a == b || mat.row_subset(rep[a], rep[b]))
                    result.dom.set(a, b);
            }
        return result;
    };
    Containment odom = containment(M);
    Containment idom = containment(Mt);

    // Twin classes: tuples with equal projections have identical rows.
    Interner class_in;
    std::vector<int> class_of(m);
    std::vector<int> class_rep;
    for (int v = 0; v < m; ++v) {
        int before = static_cast<int>(class_in.values.size());
        int c = class_in.intern({static_cast<std::uint32_t>(sp_of[v]), static_cast<std::uint32_t>(tp_of[v])});
        class_of[v] = c;
        if (c == before)
            class_rep.push_back(v);
    }
    int nc = static_cast<int>(class_in.values.size());
    auto class_sp = [&](int c) { return static_cast<int>(class_in.values[c][0]); };
    auto class_tp = [&](int c) { return static_cast<int>(class_in.values[c][1]); };
    auto class_loop = [&](int c) { return M.test(class_sp(c), class_tp(c)); };

    auto dominates = [&](int c, int d) { // class d absorbs class c
        return odom.test(class_sp(c), class_sp(d)) && idom.test(class_tp(c), class_tp(d)) &&
            (! class_loop(c) || class_loop(d));
    };

    // Pareto front of classes; everything else folds onto a front member.
    std::vector<int> front;
    std::vector<int> fold_to(nc);
    for (int c = 0; c < nc; ++c)
        fold_to[c] = c;
    for (int c = 0; c < nc; ++c) {
        bool absorbed = false;
        for (int f : front)
            if (dominates(c, f)) {
                fold_to[c] = f;
                absorbed = true;
                break;
            }
        if (absorbed)
            continue;
        std::vector<int> next_front;
        next_front.reserve(front.size() + 1);
        for (int f : front) {
            if (dominates(f, c))
                fold_to[f] = c;
            else
                next_front.push_back(f);
        }
        next_front.push_back(c);
        front = std::move(next_front);
    }
    for (int c = 0; c < nc; ++c) {
        int f = c;
        while (fold_to[f] != f)
            f = fold_to[f];
        fold_to[c] = f;
    }

    std::sort(front.begin(), front.end());
    std::vector<int> front_index(nc, -1);
    for (int i = 0; i < static_cast<int>(front.size()); ++i)
        front_index[front[i]] = i;

    int fm = static_cast<int>(front.size());
    std::vector<Arc> arcs;
    for (int i = 0; i < fm; ++i)
        for (int j = 0; j < fm; ++j)
            if (M.test(class_sp(front[i]), class_tp(front[j])))
                arcs.emplace_back(i, j);

    Digraph folded(fm, std::move(arcs));
    std::vector<std::string> labels;
    labels.reserve(fm);
    for (int i = 0; i < fm; ++i)
        labels.push_back(render_tuple(tc, tuples[class_rep[front[i]]]));
    folded.labels = std::move(labels);

    // The class fold is conservative (it quantifies over all columns, alive
    // or not); a final row fold picks up what it missed.
    FoldResult fr = fold_retract(folded);

    std::vector<int> final_index(fm, -1);
    for (int i = 0; i < static_cast<int>(fr.kept.size()); ++i)
        final_index[fr.kept[i]] = i;

    FoldedConstruction result;
    result.graph = std::move(fr.graph);
    result.tuple_to_vertex.resize(m);
    for (int v = 0; v < m; ++v)
        result.tuple_to_vertex[v] = final_index[fr.map[front_index[fold_to[class_of[v]]]]];
    return result;
}

Digraph materialize_folded(const TupleConstruction & tc, const ConstructionOptions & options)
{
    return materialize_folded_with_map(tc, options).graph;
}

} // namespace pultr
