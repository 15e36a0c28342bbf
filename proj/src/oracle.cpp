#include "gramcalc/oracle.hpp"

#include "gramcalc/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace gramcalc {

PermRecord perm_stats(const Permutation& sigma)
{
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v])
            throw NotAPermutation("not a permutation of [" + std::to_string(n) + "]");
        seen[v] = true;
    }
    PermRecord r;
    r.sigma = sigma;
    auto at = [&](int i) { return i < 1 || i > n ? 0 : sigma[i - 1]; };
    for (int i = 1; i < n; ++i)
        (at(i) > at(i + 1) ? r.des : r.asc)++;
    for (int i = 1; i <= n; ++i) {
        if (!(at(i - 1) < at(i) && at(i) > at(i + 1)))
            continue;
        r.lrpk++;
        if (i < n)
            r.lpk++;
        if (i > 1 && i < n)
            r.ipk++;
    }
    r.alternating = true;
    for (int i = 1; i < n; ++i)
        if ((i % 2 == 1) != (at(i) > at(i + 1)))
            r.alternating = false;
    return r;
}

Permutation parse_permutation(const std::string& text)
{
    Permutation p;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
            try {
                std::size_t used = 0;
                p.push_back(std::stoi(part, &used));
                if (used != part.size())
                    throw NotAPermutation("bad entry '" + part + "'");
            } catch (const std::logic_error&) {
                throw NotAPermutation("bad entry '" + part + "'");
            }
            if (end == std::string::npos)
                break;
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw NotAPermutation("bad digit '" + std::string(1, c) + "'");
            p.push_back(c - '0');
        }
    }
    if (p.empty())
        throw NotAPermutation("empty permutation");
    perm_stats(p);
    return p;
}

LabelScheme label_scheme_from_name(const std::string& name)
{
    if (name == "L")
        return LabelScheme::L;
    if (name == "M")
        return LabelScheme::M;
    if (name == "W")
        return LabelScheme::W;
    throw Error("unknown labeling scheme '" + name + "'");
}

Labeling label_permutation(const Permutation& sigma, LabelScheme scheme)
{
    perm_stats(sigma);
    const int n = static_cast<int>(sigma.size());
    auto at = [&](int i) { return i < 1 || i > n ? 0 : sigma[i - 1]; };
    std::vector<char> labels(static_cast<std::size_t>(n) + 1, 'y');
    if (scheme == LabelScheme::L)
        labels[n] = 'x';
    if (scheme == LabelScheme::M)
        labels[0] = labels[n] = 'x';
    int lo = scheme == LabelScheme::M ? 2 : 1;
    int hi = scheme == LabelScheme::W ? n : n - 1;
    for (int i = lo; i <= hi; ++i) {
        if (at(i - 1) < at(i) && at(i) > at(i + 1))
            labels[i - 1] = labels[i] = 'x';
    }

    Labeling out;
    out.labels = labels;
    std::string text = "0";
    int xs = 0;
    for (int j = 0; j <= n; ++j) {
        text += ' ';
        text += labels[j];
        text += ' ';
        text += std::to_string(at(j + 1));
        xs += labels[j] == 'x';
    }
    out.text = text;
    out.weight = LaurentPoly::term(VarTable{"x", "y"}, {xs, n + 1 - xs});
    return out;
}

namespace {

const std::vector<std::pair<StructureKind, std::string>>& kind_names()
{
    static const std::vector<std::pair<StructureKind, std::string>> names{
        {StructureKind::permutations, "permutations"}, {StructureKind::inc_binary, "inc_binary"},
        {StructureKind::plane_012, "plane_012"},       {StructureKind::tree_012, "tree_012"},
        {StructureKind::planted_forest, "planted_forest"}, {StructureKind::jv_tree, "jv_tree"},
        {StructureKind::jv_forest, "jv_forest"},
    };
    return names;
}

void check_bound(int n, int bound)
{
    if (n < 0)
        throw Error("structure size must be nonnegative");
    if (n > bound)
        throw BoundExceeded("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
}

/// Builds structures by inserting labels 1..n one at a time, undoing each
/// insertion after the recursive call returns.
class Inserter {
public:
    Inserter(StructureKind kind, int n, const std::function<void(const IncreasingTree&)>& visit)
        : n_(n), visit_(visit)
    {
        t_.kind = kind;
    }

    void run()
    {
        if (t_.kind == StructureKind::jv_tree) {
            t_.nodes.push_back(TreeNode{});
            t_.roots.push_back(0);
        }
        step(1);
    }

private:
    int add_node(int label)
    {
        t_.nodes.push_back(TreeNode{label, {-1, -1}});
        return static_cast<int>(t_.nodes.size()) - 1;
    }

    void pop_node() { t_.nodes.pop_back(); }

    bool is_root(int i) const { return std::find(t_.roots.begin(), t_.roots.end(), i) != t_.roots.end(); }

    void step(int k)
    {
        if (k > n_) {
            visit_(t_);
            return;
        }
        switch (t_.kind) {
        case StructureKind::inc_binary:
            return binary_step(k, k == 1);
        case StructureKind::plane_012:
            return plane_step(k, true);
        case StructureKind::tree_012:
            return plane_step(k, false);
        case StructureKind::planted_forest:
            return planted_step(k);
        case StructureKind::jv_tree:
            return jv_step(k);
        case StructureKind::jv_forest:
            new_root(k, true);
            return jv_step(k);
        default:
            throw Error("not a tree kind");
        }
    }

    void new_root(int k, bool with_empty)
    {
        int r = add_node(k);
        if (with_empty) {
            int e = add_node(0);
            t_.nodes[r].child[0] = e;
        }
        t_.roots.push_back(r);
        step(k + 1);
        t_.roots.pop_back();
        if (with_empty)
            pop_node();
        pop_node();
    }

    void attach(int parent, int slot, int k)
    {
        int c = add_node(k);
        t_.nodes[parent].child[slot] = c;
        step(k + 1);
        t_.nodes[parent].child[slot] = -1;
        pop_node();
    }

    void binary_step(int k, bool first)
    {
        if (first)
            return new_root(k, false);
        std::size_t count = t_.nodes.size();
        for (std::size_t i = 0; i < count; ++i)
            for (int s = 0; s < 2; ++s)
                if (t_.nodes[i].child[s] < 0)
                    attach(static_cast<int>(i), s, k);
    }

    void plane_step(int k, bool ordered)
    {
        if (k == 1)
            return new_root(k, false);
        std::size_t count = t_.nodes.size();
        for (std::size_t i = 0; i < count; ++i) {
            TreeNode& nd = t_.nodes[i];
            int c = nd.child_count();
            if (c == 0) {
                attach(static_cast<int>(i), 0, k);
            } else if (c == 1) {
                if (ordered) {
                    // new child before the existing one
                    int old = nd.child[0];
                    int fresh = add_node(k);
                    t_.nodes[i].child[0] = fresh;
                    t_.nodes[i].child[1] = old;
                    step(k + 1);
                    t_.nodes[i].child[0] = old;
                    t_.nodes[i].child[1] = -1;
                    pop_node();
                }
                attach(static_cast<int>(i), 1, k);
            }
        }
    }

    void planted_step(int k)
    {
        new_root(k, false);
        std::size_t count = t_.nodes.size();
        for (std::size_t i = 0; i < count; ++i) {
            if (is_root(static_cast<int>(i))) {
                if (t_.nodes[i].child[0] < 0)
                    attach(static_cast<int>(i), 0, k);
                continue;
            }
            for (int s = 0; s < 2; ++s)
                if (t_.nodes[i].child[s] < 0)
                    attach(static_cast<int>(i), s, k);
        }
    }

    void jv_step(int k)
    {
        std::size_t count = t_.nodes.size();
        for (std::size_t i = 0; i < count; ++i) {
            if (t_.nodes[i].label != 0)
                continue;
            t_.nodes[i].label = k;
            step(k + 1);
            int a = add_node(0), b = add_node(0);
            t_.nodes[i].child[0] = a;
            t_.nodes[i].child[1] = b;
            step(k + 1);
            t_.nodes[i].child[0] = t_.nodes[i].child[1] = -1;
            pop_node();
            pop_node();
            t_.nodes[i].label = 0;
        }
    }

    int n_;
    const std::function<void(const IncreasingTree&)>& visit_;
    IncreasingTree t_;
};

json node_json(const IncreasingTree& t, int i)
{
    if (i < 0)
        return nullptr;
    const TreeNode& nd = t.nodes[i];
    json label = nd.label == 0 ? json(nullptr) : json(nd.label);
    json kids = json::array();
    bool binary = t.kind == StructureKind::inc_binary ||
                  (t.kind == StructureKind::planted_forest &&
                   std::find(t.roots.begin(), t.roots.end(), i) == t.roots.end());
    if (binary) {
        if (nd.child_count() > 0)
            for (int s = 0; s < 2; ++s)
                kids.push_back(node_json(t, nd.child[s]));
    } else {
        for (int s = 0; s < 2; ++s)
            if (nd.child[s] >= 0)
                kids.push_back(node_json(t, nd.child[s]));
    }
    return json::array({label, kids});
}

/// Accumulates integer-weighted monomials over a fixed table.
class WeightSum {
public:
    explicit WeightSum(VarTable vars) : vars_(std::move(vars)) {}

    void add(const Monomial& m, long c = 1) { counts_[m] += c; }

    LaurentPoly poly() const
    {
        LaurentPoly p(vars_);
        for (const auto& [m, c] : counts_)
            p.add_term(m, Scalar(c));
        return p;
    }

private:
    VarTable vars_;
    std::map<Monomial, long> counts_;
};

} // namespace

StructureKind structure_kind_from_name(const std::string& name)
{
    for (const auto& [k, s] : kind_names())
        if (s == name)
            return k;
    throw Error("unknown structure kind '" + name + "'");
}

std::string structure_kind_name(StructureKind k)
{
    for (const auto& [kk, s] : kind_names())
        if (kk == k)
            return s;
    return "?";
}

TreeStats tree_stats(const IncreasingTree& t)
{
    TreeStats s;
    for (const auto& nd : t.nodes) {
        if (nd.label == 0) {
            s.empty_leaf_count++;
            continue;
        }
        switch (nd.child_count()) {
        case 0:
            s.f0++;
            break;
        case 1:
            s.f1++;
            break;
        default:
            s.f2++;
        }
    }
    return s;
}

json structure_to_json(const IncreasingTree& t)
{
    bool forest = t.kind == StructureKind::planted_forest || t.kind == StructureKind::jv_forest;
    if (!forest)
        return t.roots.empty() ? json(nullptr) : node_json(t, t.roots.front());
    json out = json::array();
    for (int r : t.roots)
        out.push_back(node_json(t, r));
    return out;
}

json permutation_to_json(const Permutation& sigma) { return json(sigma); }

void enumerate_trees(StructureKind kind, int n, const std::function<void(const IncreasingTree&)>& visit, int bound)
{
    check_bound(n, bound);
    if (kind == StructureKind::permutations)
        throw Error("use enumerate_permutations for permutations");
    Inserter(kind, n, visit).run();
}

void enumerate_permutations(int n, const std::function<void(const PermRecord&)>& visit, int bound)
{
    check_bound(n, bound);
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        visit(perm_stats(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

long count_structures(StructureKind kind, int n, int bound)
{
    long count = 0;
    if (kind == StructureKind::permutations)
        enumerate_permutations(n, [&](const PermRecord&) { ++count; }, bound);
    else
        enumerate_trees(kind, n, [&](const IncreasingTree&) { ++count; }, bound);
    return count;
}

namespace {

LaurentPoly perm_family(Family f, int n, int bound)
{
    VarTable xy{"x", "y"}, x{"x"};
    bool uni = f == Family::eulerian_uni || f == Family::left_peak_uni || f == Family::interior_peak_uni ||
               f == Family::lr_peak_uni;
    WeightSum sum(uni ? x : xy);
    enumerate_permutations(
        n,
        [&](const PermRecord& r) {
            switch (f) {
            case Family::eulerian_biv:
                return sum.add({r.des + 1, r.asc + 1});
            case Family::eulerian_uni:
                return sum.add({r.des + 1});
            case Family::left_peak_biv:
                return sum.add({2 * r.lpk + 1, n - 2 * r.lpk});
            case Family::left_peak_uni:
                return sum.add({r.lpk});
            case Family::interior_peak_biv:
                return sum.add({2 * r.ipk + 2, n - 2 * r.ipk - 1});
            case Family::interior_peak_uni:
                return sum.add({r.ipk});
            case Family::lr_peak_biv:
                return sum.add({2 * r.lrpk, n - 2 * r.lrpk + 1});
            case Family::lr_peak_uni:
                return sum.add({r.lrpk});
            default:
                throw Error("not a permutation family");
            }
        },
        bound);
    return sum.poly();
}

LaurentPoly tree_uv_sum(StructureKind kind, int n, int bound, bool two_v)
{
    WeightSum sum(VarTable{"u", "v"});
    enumerate_trees(
        kind, n,
        [&](const IncreasingTree& t) {
            TreeStats s = tree_stats(t);
            sum.add({s.f0, s.f1}, two_v ? (1L << s.f1) : 1L);
        },
        bound);
    return sum.poly();
}

LaurentPoly empty_leaf_sum(StructureKind kind, int n, int bound)
{
    WeightSum sum(VarTable{"x"});
    enumerate_trees(kind, n, [&](const IncreasingTree& t) { sum.add({tree_stats(t).empty_leaf_count}); }, bound);
    return sum.poly();
}

} // namespace

LaurentPoly family_poly_oracle(Family f, int n, int bound)
{
    check_bound(n, bound);
    VarTable xy{"x", "y"}, uv{"u", "v"}, x{"x"};
    // Seeds fixed by convention rather than by any structure on the empty set.
    if (n == 0) {
        switch (f) {
        case Family::eulerian_biv:
        case Family::interior_peak_biv:
            return LaurentPoly::variable(xy, "y");
        case Family::eulerian_uni:
        case Family::andre_uni:
            return LaurentPoly::constant(x, Scalar(1));
        case Family::interior_peak_uni:
            return LaurentPoly::term(x, {-1});
        case Family::dumont:
            return LaurentPoly::variable(uv, "v");
        case Family::andre_biv:
            return LaurentPoly::constant(uv, Scalar(1));
        default:
            break;
        }
    }
    switch (f) {
    case Family::eulerian_biv:
    case Family::eulerian_uni:
    case Family::left_peak_biv:
    case Family::left_peak_uni:
    case Family::interior_peak_biv:
    case Family::interior_peak_uni:
    case Family::lr_peak_biv:
    case Family::lr_peak_uni:
        return perm_family(f, n, bound);
    case Family::R_family:
        return perm_family(Family::left_peak_biv, n, bound) +
               (n == 0 ? LaurentPoly::variable(xy, "y") : perm_family(Family::interior_peak_biv, n, bound));
    case Family::dumont:
        return tree_uv_sum(StructureKind::inc_binary, n, bound, false);
    case Family::andre_biv:
        return tree_uv_sum(StructureKind::tree_012, n, bound, false);
    case Family::andre_uni:
        return andre_to_uni(tree_uv_sum(StructureKind::tree_012, n, bound, false));
    case Family::deriv_P:
        return empty_leaf_sum(StructureKind::jv_tree, n, bound);
    case Family::deriv_Q:
        return empty_leaf_sum(StructureKind::jv_forest, n, bound);
    }
    throw UnknownFamily("unhandled family");
}

LaurentPoly dumont_plane_oracle(int n, int bound)
{
    check_bound(n, bound);
    if (n == 0)
        return LaurentPoly::variable(VarTable{"u", "v"}, "v");
    return tree_uv_sum(StructureKind::plane_012, n, bound, true);
}

LaurentPoly planted_forest_oracle(int n, int bound)
{
    VarTable auv{"a", "v", "u"};
    WeightSum sum(auv);
    enumerate_trees(
        StructureKind::planted_forest, n,
        [&](const IncreasingTree& t) {
            int u = 0, v = 0;
            for (int r : t.roots)
                if (t.nodes[r].child_count() == 0)
                    ++v;
            for (std::size_t i = 0; i < t.nodes.size(); ++i) {
                if (std::find(t.roots.begin(), t.roots.end(), static_cast<int>(i)) != t.roots.end())
                    continue;
                int c = t.nodes[i].child_count();
                u += c == 0;
                v += c == 1;
            }
            sum.add({1, v, u});
        },
        bound);
    return sum.poly();
}

CoefficientTable plane_leaf_table(int n, int bound)
{
    CoefficientTable t{"plane_012_leaves", n, {}};
    enumerate_trees(
        StructureKind::plane_012, n, [&](const IncreasingTree& tr) { t.coeffs[tree_stats(tr).f0] += 1; }, bound);
    return t;
}

} // namespace gramcalc
