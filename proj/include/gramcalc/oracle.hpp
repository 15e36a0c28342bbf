#pragma once

#include "gramcalc/codec.hpp"
#include "gramcalc/families.hpp"
#include "gramcalc/laurent.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gramcalc {

inline constexpr int default_enumeration_bound = 9;

using Permutation = std::vector<int>;

struct PermRecord {
    Permutation sigma;
    int des = 0;
    int asc = 0;
    int lpk = 0;  ///< 1 <= i < n
    int ipk = 0;  ///< 1 < i < n
    int lrpk = 0; ///< 1 <= i <= n
    bool alternating = false;
};

/// Statistics under sigma_0 = sigma_{n+1} = 0. Throws NotAPermutation.
PermRecord perm_stats(const Permutation& sigma);

/// "314562" or "3,1,4,5,6,2". Throws NotAPermutation.
Permutation parse_permutation(const std::string& text);

enum class LabelScheme { L, M, W };

LabelScheme label_scheme_from_name(const std::string& name);

struct Labeling {
    std::vector<char> labels; ///< n+1 position labels, 'x' or 'y'
    LaurentPoly weight;       ///< over {x, y}
    std::string text;         ///< "0 x 3 x 1 y ... 0"
};

Labeling label_permutation(const Permutation& sigma, LabelScheme scheme);

enum class StructureKind { permutations, inc_binary, plane_012, tree_012, planted_forest, jv_tree, jv_forest };

StructureKind structure_kind_from_name(const std::string& name);
std::string structure_kind_name(StructureKind k);

/// Flat tree arena. Every node has at most two child slots.
///   inc_binary, planted_forest (below a root): slot 0 = left, slot 1 = right.
///   plane_012, tree_012: children packed in order into slot 0 then slot 1.
///   jv kinds: labeled nodes have two children or none; label 0 is EMPTY.
///   planted roots keep their single child in slot 0.
struct TreeNode {
    int label = 0;
    int child[2] = {-1, -1};

    int child_count() const { return (child[0] >= 0) + (child[1] >= 0); }
};

struct IncreasingTree {
    StructureKind kind = StructureKind::inc_binary;
    std::vector<TreeNode> nodes;
    std::vector<int> roots; ///< one root for trees, one per component for forests
};

struct TreeStats {
    int f0 = 0, f1 = 0, f2 = 0; ///< labeled vertices with 0, 1, 2 children
    int empty_leaf_count = 0;
};

TreeStats tree_stats(const IncreasingTree& t);

/// Nested-list JSON: node = [label or null, [children...]]; binary kinds list
/// both slots with null for an absent child. Forests are lists of trees.
json structure_to_json(const IncreasingTree& t);
json permutation_to_json(const Permutation& sigma);

/// Calls `visit` once per structure of the given kind on [n], in a fixed
/// order. Throws BoundExceeded when n > bound.
void enumerate_trees(StructureKind kind, int n, const std::function<void(const IncreasingTree&)>& visit,
                     int bound = default_enumeration_bound);
void enumerate_permutations(int n, const std::function<void(const PermRecord&)>& visit,
                            int bound = default_enumeration_bound);

long count_structures(StructureKind kind, int n, int bound = default_enumeration_bound);

/// Family member as a weighted sum over structures, without any grammar.
LaurentPoly family_poly_oracle(Family f, int n, int bound = default_enumeration_bound);

/// D_n(u,v) from (u,2v)-labeled 0-1-2 increasing plane trees.
LaurentPoly dumont_plane_oracle(int n, int bound = default_enumeration_bound);

/// a * (sum over forests of planted increasing binary trees), i.e. D^n(a)
/// for a -> av, v -> u, u -> 2uv.
LaurentPoly planted_forest_oracle(int n, int bound = default_enumeration_bound);

/// sum_k beta_{n,k} x^k over 0-1-2 increasing plane trees with k leaves.
CoefficientTable plane_leaf_table(int n, int bound = default_enumeration_bound);

} // namespace gramcalc
