#include "twistforge/rootsys.hpp"

#include "twistforge/errors.hpp"
#include "twistforge/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace twistforge::qgroups {

std::string lie_type_name(LieType t) {
    switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    }
    return "?";
}

int RootSystem::pairing_eps(const std::vector<int> &a, const std::vector<int> &b) const {
    int s = 0;
    for (int i = 0; i < eps_dim; ++i) s += a[i] * b[i];
    return s * metric_scale;
}

std::optional<int> RootSystem::find_root_eps(const std::vector<int> &eps) const {
    for (int i = 0; i < n_positive(); ++i)
        if (positive_eps[i] == eps) return i;
    return std::nullopt;
}

std::string RootSystem::root_str(int index) const {
    const auto &a = positive_alpha[index];
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        if (a[i] != 1) os << a[i] << "*";
        os << "a" << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

namespace {

std::vector<int> eps_vec(int dim, std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> v(dim, 0);
    for (auto [i, c] : entries) v[i] += c;
    return v;
}

// Solve eps = sum c_i * simple_eps_i exactly (the simple roots are a basis of
// the root lattice for these coordinates).
std::vector<int> alpha_coords(const RootSystem &rs, const std::vector<int> &eps) {
    using coeff::Rational;
    int n = rs.rank, m = rs.eps_dim;
    std::vector<std::vector<Rational>> M(m, std::vector<Rational>(n + 1, Rational(0)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) M[i][j] = rs.simple_eps[j][i];
    for (int i = 0; i < m; ++i) M[i][n] = eps[i];
    std::vector<int> where(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[row]);
        for (int r = 0; r < m; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rational f = M[r][col] / M[row][col];
            for (int c = col; c <= n; ++c) M[r][c] -= f * M[row][c];
        }
        where[col] = row++;
    }
    std::vector<int> out(n, 0);
    for (int col = 0; col < n; ++col) {
        if (where[col] < 0) continue;
        Rational v = M[where[col]][n] / M[where[col]][col];
        if (v.get_den() != 1) throw EngineError("root not in the simple-root lattice");
        out[col] = (int)v.get_num().get_si();
    }
    return out;
}

} // namespace

RootSystem build_root_system(LieType type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    const int n = rank;
    auto bad = [&](const char *msg) { throw UnsupportedType(lie_type_name(type) + std::to_string(rank) + ": " + msg); };
    switch (type) {
    case LieType::A:
        if (n < 1) bad("rank >= 1 required");
        rs.eps_dim = n + 1;
        rs.metric_scale = 1;
        for (int i = 0; i < n; ++i) rs.simple_eps.push_back(eps_vec(n + 1, {{i, 1}, {i + 1, -1}}));
        for (int i = 0; i < n + 1; ++i)
            for (int j = i + 1; j < n + 1; ++j)
                rs.positive_eps.push_back(eps_vec(n + 1, {{i, 1}, {j, -1}}));
        rs.highest = *rs.find_root_eps(eps_vec(n + 1, {{0, 1}, {n, -1}}));
        break;
    case LieType::B:
        if (n < 2) bad("rank >= 2 required");
        rs.eps_dim = n;
        rs.metric_scale = 2;
        for (int i = 0; i + 1 < n; ++i) rs.simple_eps.push_back(eps_vec(n, {{i, 1}, {i + 1, -1}}));
        rs.simple_eps.push_back(eps_vec(n, {{n - 1, 1}}));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                rs.positive_eps.push_back(eps_vec(n, {{i, 1}, {j, -1}}));
                rs.positive_eps.push_back(eps_vec(n, {{i, 1}, {j, 1}}));
            }
        for (int i = 0; i < n; ++i) rs.positive_eps.push_back(eps_vec(n, {{i, 1}}));
        rs.highest = *rs.find_root_eps(eps_vec(n, {{0, 1}, {1, 1}}));
        break;
    case LieType::C:
        if (n < 2) bad("rank >= 2 required");
        rs.eps_dim = n;
        rs.metric_scale = 1;
        for (int i = 0; i + 1 < n; ++i) rs.simple_eps.push_back(eps_vec(n, {{i, 1}, {i + 1, -1}}));
        rs.simple_eps.push_back(eps_vec(n, {{n - 1, 2}}));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                rs.positive_eps.push_back(eps_vec(n, {{i, 1}, {j, -1}}));
                rs.positive_eps.push_back(eps_vec(n, {{i, 1}, {j, 1}}));
            }
        for (int i = 0; i < n; ++i) rs.positive_eps.push_back(eps_vec(n, {{i, 2}}));
        rs.highest = *rs.find_root_eps(eps_vec(n, {{0, 2}}));
        break;
    case LieType::D:
        if (n < 4) bad("rank >= 4 required");
        rs.eps_dim = n;
        rs.metric_scale = 1;
        for (int i = 0; i + 1 < n; ++i) rs.simple_eps.push_back(eps_vec(n, {{i, 1}, {i + 1, -1}}));
        rs.simple_eps.push_back(eps_vec(n, {{n - 2, 1}, {n - 1, 1}}));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                rs.positive_eps.push_back(eps_vec(n, {{i, 1}, {j, -1}}));
                rs.positive_eps.push_back(eps_vec(n, {{i, 1}, {j, 1}}));
            }
        rs.highest = *rs.find_root_eps(eps_vec(n, {{0, 1}, {1, 1}}));
        break;
    }
    for (const auto &eps : rs.positive_eps) rs.positive_alpha.push_back(alpha_coords(rs, eps));
    rs.bilinear.assign(n, std::vector<int>(n, 0));
    rs.cartan_matrix.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.bilinear[i][j] = rs.pairing_eps(rs.simple_eps[i], rs.simple_eps[j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int num = 2 * rs.bilinear[i][j];
            if (num % rs.bilinear[i][i] != 0) throw EngineError("nonintegral Cartan matrix");
            rs.cartan_matrix[i][j] = num / rs.bilinear[i][i];
        }
    return rs;
}

NormalOrdering paper_normal_ordering(const RootSystem &rs) {
    const int n = rs.rank;
    std::vector<std::vector<int>> display; // eps vectors, read left to right
    auto push = [&](std::initializer_list<std::pair<int, int>> e) {
        display.push_back(eps_vec(rs.eps_dim, e));
    };
    switch (rs.type) {
    case LieType::A:
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) push({{i, 1}, {j, -1}});
        break;
    case LieType::B:
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) push({{i, 1}, {j, -1}});
            push({{i, 1}});
            for (int j = n - 1; j > i; --j) push({{i, 1}, {j, 1}});
        }
        break;
    case LieType::C:
        // The C display is already ascending; the others descend.
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) push({{i, 1}, {j, -1}});
            push({{i, 2}});
            for (int j = n - 1; j > i; --j) push({{i, 1}, {j, 1}});
        }
        break;
    case LieType::D:
        for (int i = 0; i + 1 < n; ++i) {
            for (int j = i + 1; j < n; ++j) push({{i, 1}, {j, -1}});
            for (int j = n - 1; j > i; --j) push({{i, 1}, {j, 1}});
        }
        break;
    }
    NormalOrdering o;
    for (const auto &eps : display) {
        auto idx = rs.find_root_eps(eps);
        if (!idx) throw EngineError("ordering refers to a non-root");
        o.ascending.push_back(*idx);
    }
    if ((int)o.ascending.size() != rs.n_positive()) throw EngineError("ordering misses roots");
    if (rs.type != LieType::C) std::reverse(o.ascending.begin(), o.ascending.end());
    o.position.assign(rs.n_positive(), -1);
    for (int p = 0; p < (int)o.ascending.size(); ++p) o.position[o.ascending[p]] = p;
    return o;
}

NormalOrdering reversed_ordering(const NormalOrdering &o) {
    NormalOrdering r;
    r.ascending.assign(o.ascending.rbegin(), o.ascending.rend());
    r.position.assign(o.position.size(), -1);
    for (int p = 0; p < (int)r.ascending.size(); ++p) r.position[r.ascending[p]] = p;
    return r;
}

bool is_normal_ordering(const RootSystem &rs, const NormalOrdering &o) {
    const int m = rs.n_positive();
    for (int pi = 0; pi < m; ++pi)
        for (int pj = pi + 1; pj < m; ++pj) {
            int i = o.ascending[pi], j = o.ascending[pj];
            std::vector<int> sum(rs.eps_dim);
            for (int k = 0; k < rs.eps_dim; ++k) sum[k] = rs.positive_eps[i][k] + rs.positive_eps[j][k];
            auto s = rs.find_root_eps(sum);
            if (!s) continue;
            int ps = o.position[*s];
            if (!(pi < ps && ps < pj)) return false;
        }
    return true;
}

} // namespace twistforge::qgroups
