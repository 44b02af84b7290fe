#pragma once

#include <optional>
#include <string>
#include <vector>

namespace twistforge::qgroups {

enum class LieType { A, B, C, D };

std::string lie_type_name(LieType t);

// Nonexceptional root system with the bilinear form normalized so every
// pairing (alpha_i, alpha_j) is an integer: types A/D use orthonormal epsilon
// coordinates (long roots of squared length 2), type B scales the metric by 2
// (short roots squared length 2), type C uses orthonormal epsilon with long
// roots 2*eps_i. q_i = q^{(alpha_i,alpha_i)/2} then has integer exponent.
struct RootSystem {
    LieType type;
    int rank = 0;
    int eps_dim = 0;
    int metric_scale = 1; // (eps_i, eps_j) = metric_scale * delta_ij
    std::vector<std::vector<int>> simple_eps;
    std::vector<std::vector<int>> positive_eps;
    std::vector<std::vector<int>> positive_alpha; // simple-root coordinates
    std::vector<std::vector<int>> bilinear;       // (alpha_i, alpha_j)
    std::vector<std::vector<int>> cartan_matrix;  // a_ij
    int highest = -1;                             // index of the maximal root

    int n_positive() const { return (int)positive_eps.size(); }
    int pairing_eps(const std::vector<int> &a, const std::vector<int> &b) const;
    // (root_i, root_j) for positive-root indices
    int pairing_roots(int i, int j) const { return pairing_eps(positive_eps[i], positive_eps[j]); }
    std::optional<int> find_root_eps(const std::vector<int> &eps) const;
    std::string root_str(int index) const; // e.g. "a1+2*a2"
};

RootSystem build_root_system(LieType type, int rank);

// Total order on the positive roots, ascending in "<" of the source ordering.
struct NormalOrdering {
    std::vector<int> ascending;  // root indices
    std::vector<int> position;   // position[root index] = place in ascending
    bool precedes(int i, int j) const { return position[i] < position[j]; }
};

// The ordering displayed in the Prop. 2 proof for the type.
NormalOrdering paper_normal_ordering(const RootSystem &rs);
NormalOrdering reversed_ordering(const NormalOrdering &o);
// alpha < beta with alpha+beta positive implies alpha < alpha+beta < beta.
bool is_normal_ordering(const RootSystem &rs, const NormalOrdering &o);

} // namespace twistforge::qgroups
