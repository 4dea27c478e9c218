#include "mkv/lp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mkv/errors.hpp"

namespace mkv::lp {

namespace {

// Bipartite spanning-tree basis for the transportation simplex. Nodes are
// rows 0..m-1 and columns m..m+n-1; basic cells are tree edges.
struct Basis {
    int m, n;
    std::vector<int> cell_row, cell_col;  // basic cells
    std::vector<std::vector<int>> adj;    // node -> incident basic cell ids

    int nodes() const { return m + n; }

    void add_cell(int i, int j) {
        const int id = static_cast<int>(cell_row.size());
        cell_row.push_back(i);
        cell_col.push_back(j);
        adj[i].push_back(id);
        adj[m + j].push_back(id);
    }

    void replace_cell(int id, int i, int j) {
        detach(id);
        cell_row[id] = i;
        cell_col[id] = j;
        adj[i].push_back(id);
        adj[m + j].push_back(id);
    }

    void detach(int id) {
        auto drop = [&](int node) {
            auto& v = adj[node];
            v.erase(std::find(v.begin(), v.end(), id));
        };
        drop(cell_row[id]);
        drop(m + cell_col[id]);
    }

    int other_end(int id, int node) const {
        const int a = cell_row[id], b = m + cell_col[id];
        return node == a ? b : a;
    }
};

}  // namespace

TransportResult transport_simplex(const Eigen::VectorXd& supply, const Eigen::VectorXd& demand,
                                  const Eigen::MatrixXd& cost) {
    const int m = static_cast<int>(supply.size());
    const int n = static_cast<int>(demand.size());
    if (cost.rows() != m || cost.cols() != n)
        throw DimensionError("transport_simplex: cost shape mismatch");
    if (supply.minCoeff() < 0.0 || demand.minCoeff() < 0.0)
        throw DomainError("transport_simplex: negative mass");
    if (std::abs(supply.sum() - demand.sum()) > 1e-9 * std::max(1.0, supply.sum()))
        throw DomainError("transport_simplex: unbalanced masses");

    Basis basis;
    basis.m = m;
    basis.n = n;
    basis.adj.assign(m + n, {});
    Eigen::MatrixXd flow = Eigen::MatrixXd::Zero(m, n);
    std::vector<double> cell_flow;

    // Northwest-corner start: staircase spanning tree with m+n-1 cells.
    {
        Eigen::VectorXd a = supply, b = demand;
        int i = 0, j = 0;
        while (true) {
            const double f = std::min(a[i], b[j]);
            basis.add_cell(i, j);
            cell_flow.push_back(f);
            flow(i, j) += f;
            a[i] -= f;
            b[j] -= f;
            if (i == m - 1 && j == n - 1) break;
            if (a[i] <= 0.0 && i < m - 1)
                ++i;
            else
                ++j;
        }
    }

    const double cscale = std::max(1.0, cost.cwiseAbs().maxCoeff());
    const double rc_tol = 1e-12 * cscale;

    std::vector<double> potential(m + n);
    std::vector<int> parent_edge(m + n);
    std::vector<int> order(m + n);

    auto recompute_potentials = [&] {
        // u_i + v_j = c_ij on tree edges; root u_0 = 0. BFS over the tree.
        std::vector<char> seen(m + n, 0);
        int head = 0, tail = 0;
        order[tail++] = 0;
        seen[0] = 1;
        potential[0] = 0.0;
        parent_edge[0] = -1;
        while (head < tail) {
            const int node = order[head++];
            for (int id : basis.adj[node]) {
                const int nxt = basis.other_end(id, node);
                if (seen[nxt]) continue;
                seen[nxt] = 1;
                const double c = cost(basis.cell_row[id], basis.cell_col[id]);
                potential[nxt] = c - potential[node];
                parent_edge[nxt] = id;
                order[tail++] = nxt;
            }
        }
        if (tail != m + n) throw std::logic_error("transport_simplex: basis tree disconnected");
    };

    const long max_iters = 200L * (m + n) * std::max(m, n) + 10000;
    bool bland = false;
    int stall = 0;

    for (long iter = 0; iter < max_iters; ++iter) {
        recompute_potentials();

        int ei = -1, ej = -1;
        double best = -rc_tol;
        for (int i = 0; i < m && (!bland || ei < 0); ++i) {
            const double ui = potential[i];
            for (int j = 0; j < n; ++j) {
                const double r = cost(i, j) - ui - potential[m + j];
                if (bland) {
                    if (r < -rc_tol) {
                        ei = i;
                        ej = j;
                        break;
                    }
                } else if (r < best) {
                    best = r;
                    ei = i;
                    ej = j;
                }
            }
        }
        if (ei < 0) {  // optimal
            TransportResult out;
            out.flow = flow;
            out.cost = (flow.array() * cost.array()).sum();
            return out;
        }

        // Tree path from row node ei to column node m+ej; walk parent pointers
        // to the root from both ends and splice at the junction.
        std::vector<int> path_edges;
        {
            std::vector<int> depth(m + n, -1);
            // depth via BFS order: order[] is a valid topological order from root
            for (int k = 0; k < m + n; ++k) {
                const int node = order[k];
                depth[node] = (k == 0) ? 0 : depth[basis.other_end(parent_edge[node], node)] + 1;
            }
            int a = ei, b = m + ej;
            std::vector<int> ea, eb;
            while (depth[a] > depth[b]) {
                ea.push_back(parent_edge[a]);
                a = basis.other_end(parent_edge[a], a);
            }
            while (depth[b] > depth[a]) {
                eb.push_back(parent_edge[b]);
                b = basis.other_end(parent_edge[b], b);
            }
            while (a != b) {
                ea.push_back(parent_edge[a]);
                a = basis.other_end(parent_edge[a], a);
                eb.push_back(parent_edge[b]);
                b = basis.other_end(parent_edge[b], b);
            }
            path_edges = std::move(ea);
            path_edges.insert(path_edges.end(), eb.rbegin(), eb.rend());
        }

        // Entering cell takes +delta; alternate signs along the cycle starting
        // from the row end of the entering arc.
        double delta = std::numeric_limits<double>::infinity();
        int leaving = -1;
        {
            int node = ei;
            int sign = -1;  // first path edge leaves the row node: -delta
            for (int id : path_edges) {
                if (sign < 0 && cell_flow[id] < delta - 1e-18) {
                    delta = cell_flow[id];
                    leaving = id;
                }
                node = basis.other_end(id, node);
                sign = -sign;
            }
        }
        if (leaving < 0) throw std::logic_error("transport_simplex: no leaving arc");

        {
            int sign = -1;
            for (int id : path_edges) {
                cell_flow[id] += sign * delta;
                flow(basis.cell_row[id], basis.cell_col[id]) = cell_flow[id];
                sign = -sign;
            }
        }
        basis.replace_cell(leaving, ei, ej);
        cell_flow[leaving] = delta;
        flow(ei, ej) = delta;

        if (delta <= 1e-18) {
            if (++stall > 8 * (m + n)) bland = true;
        } else {
            stall = 0;
        }
    }
    throw std::logic_error("transport_simplex: iteration cap exceeded");
}

FeasibilityResult feasibility_simplex(const Eigen::MatrixXd& A_in, const Eigen::VectorXd& b_in) {
    const int rows = static_cast<int>(A_in.rows());
    const int cols = static_cast<int>(A_in.cols());
    if (b_in.size() != rows) throw DimensionError("feasibility_simplex: b size mismatch");

    // Flip rows so b >= 0; remember flips to map the certificate back.
    Eigen::MatrixXd A = A_in;
    Eigen::VectorXd b = b_in;
    Eigen::VectorXd flip = Eigen::VectorXd::Ones(rows);
    for (int r = 0; r < rows; ++r) {
        if (b[r] < 0.0) {
            A.row(r) *= -1.0;
            b[r] *= -1.0;
            flip[r] = -1.0;
        }
    }

    // Phase-1 tableau: columns [original | artificials | rhs]; artificials
    // start basic. Objective: min sum of artificials.
    const int total = cols + rows;
    Eigen::MatrixXd T(rows + 1, total + 1);
    T.setZero();
    T.block(0, 0, rows, cols) = A;
    T.block(0, cols, rows, rows).setIdentity();
    T.col(total).head(rows) = b;
    // Reduced-cost row for cost (0,...,0 | 1,...,1) with artificial basis:
    // r_j = c_j - sum_rows a_rj  (for artificials this starts at 0).
    for (int j = 0; j < cols; ++j) T(rows, j) = -A.col(j).sum();
    T(rows, total) = -b.sum();  // negative of current objective

    std::vector<int> basic(rows);
    for (int r = 0; r < rows; ++r) basic[r] = cols + r;

    const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
    const double rc_tol = 1e-11 * scale;
    const long max_iters = 4000L * (rows + cols) + 20000;

    for (long iter = 0; iter < max_iters; ++iter) {
        // Bland's rule: smallest-index column with negative reduced cost.
        int pivot_col = -1;
        for (int j = 0; j < total; ++j) {
            if (T(rows, j) < -rc_tol) {
                pivot_col = j;
                break;
            }
        }
        if (pivot_col < 0) break;

        // Ratio test, ties by smallest basic variable index (Bland).
        int pivot_row = -1;
        double best_ratio = 0.0;
        for (int r = 0; r < rows; ++r) {
            const double a = T(r, pivot_col);
            if (a > 1e-11) {
                const double ratio = T(r, total) / a;
                if (pivot_row < 0 || ratio < best_ratio - 1e-14 ||
                    (std::abs(ratio - best_ratio) <= 1e-14 && basic[r] < basic[pivot_row])) {
                    pivot_row = r;
                    best_ratio = ratio;
                }
            }
        }
        if (pivot_row < 0)
            throw std::logic_error("feasibility_simplex: unbounded phase-1 (cannot happen)");

        // Pivot.
        T.row(pivot_row) /= T(pivot_row, pivot_col);
        for (int r = 0; r <= rows; ++r) {
            if (r == pivot_row) continue;
            const double f = T(r, pivot_col);
            if (f != 0.0) T.row(r) -= f * T.row(pivot_row);
        }
        basic[pivot_row] = pivot_col;
    }

    const double objective = -T(rows, total);
    FeasibilityResult out;
    out.phase1_objective = objective;
    const double feas_tol = 1e-8 * std::max(1.0, b.cwiseAbs().maxCoeff());
    if (objective <= feas_tol) {
        out.feasible = true;
        out.x = Eigen::VectorXd::Zero(cols);
        for (int r = 0; r < rows; ++r)
            if (basic[r] < cols) out.x[basic[r]] = std::max(0.0, T(r, total));
    } else {
        out.feasible = false;
        // Simplex multipliers from artificial reduced costs: y_r = 1 - rc_r.
        // They satisfy y^T A <= 0 on original columns and y^T b = objective > 0
        // for the flipped system; undo the flips for the caller's system.
        out.certificate = Eigen::VectorXd(rows);
        for (int r = 0; r < rows; ++r) out.certificate[r] = flip[r] * (1.0 - T(rows, cols + r));
    }
    return out;
}

}  // namespace mkv::lp
