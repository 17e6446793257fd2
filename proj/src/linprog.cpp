#include "skc/linprog.hpp"

#include <algorithm>

namespace skc {

void LinearProgram::add_row(std::vector<Value> coefficients, Value bound) {
    if (coefficients.size() != vars)
        throw DomainError("constraint row width does not match variable count");
    rows.push_back(std::move(coefficients));
    rhs.push_back(std::move(bound));
}

namespace {

// Dense tableau over exact rationals. Columns: structural variables first,
// then one surplus per row, then artificials as needed.
class Tableau {
public:
    Tableau(const LinearProgram& lp) : n_(lp.vars), r_(lp.rows.size()) {
        std::vector<std::vector<mpq_class>> a(r_, std::vector<mpq_class>(n_));
        std::vector<mpq_class> b(r_);
        cost_.assign(n_, 0);
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = lp.objective[j].lifted();
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) a[i][j] = lp.rows[i][j].lifted();
            b[i] = lp.rhs[i].lifted();
        }

        // Orient every row so its right-hand side is nonnegative. Rows that
        // started with b < 0 keep their surplus as the initial basic
        // variable; the rest get an artificial.
        std::size_t arts = 0;
        for (std::size_t i = 0; i < r_; ++i)
            if (b[i] >= 0) ++arts;
        cols_ = n_ + r_ + arts;
        t_.assign(r_, std::vector<mpq_class>(cols_, 0));
        rhs_.assign(r_, 0);
        basis_.assign(r_, 0);
        artificial_.assign(cols_, false);

        std::size_t next_art = n_ + r_;
        for (std::size_t i = 0; i < r_; ++i) {
            bool flip = b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -a[i][j] : a[i][j];
            t_[i][n_ + i] = flip ? 1 : -1; // surplus
            rhs_[i] = flip ? mpq_class(-b[i]) : b[i];
            if (flip) {
                basis_[i] = n_ + i;
            } else {
                t_[i][next_art] = 1;
                artificial_[next_art] = true;
                basis_[i] = next_art;
                ++next_art;
            }
        }
    }

    void solve() {
        // Phase 1: minimize the artificial sum.
        std::vector<mpq_class> phase1(cols_, 0);
        for (std::size_t j = 0; j < cols_; ++j)
            if (artificial_[j]) phase1[j] = 1;
        price(phase1, true);
        run(true);
        mpq_class art_sum = 0;
        for (std::size_t i = 0; i < r_; ++i)
            if (artificial_[basis_[i]]) art_sum += rhs_[i];
        if (art_sum != 0) throw LpInfeasible();
        evict_artificials();

        // Phase 2: the real objective, artificial columns locked out.
        std::vector<mpq_class> full_cost(cols_, 0);
        for (std::size_t j = 0; j < n_; ++j) full_cost[j] = cost_[j];
        price(full_cost, false);
        run(false);
    }

    mpq_class objective_value() const {
        mpq_class v = 0;
        for (std::size_t i = 0; i < r_; ++i)
            if (basis_[i] < n_) v += cost_[basis_[i]] * rhs_[i];
        return v;
    }

    std::vector<mpq_class> witness() const {
        std::vector<mpq_class> x(n_, 0);
        for (std::size_t i = 0; i < r_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    void price(const std::vector<mpq_class>& c, bool allow_artificial) {
        z_.assign(cols_, 0);
        allowed_.assign(cols_, true);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (artificial_[j] && !allow_artificial) allowed_[j] = false;
            z_[j] = c[j];
        }
        for (std::size_t i = 0; i < r_; ++i) {
            const mpq_class& cb = c[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_[i][j] != 0) z_[j] -= cb * t_[i][j];
        }
    }

    void run(bool phase1) {
        while (true) {
            // Bland: lowest-index improving column. Basic columns always
            // have zero reduced cost, so they never qualify.
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allowed_[j]) continue;
                if (z_[j] < 0) { enter = j; break; }
            }
            if (enter == cols_) return;

            // Leaving: minimum ratio, ties to the lowest basic index.
            std::size_t leave = r_;
            mpq_class best_ratio;
            for (std::size_t i = 0; i < r_; ++i) {
                if (t_[i][enter] <= 0) continue;
                mpq_class ratio = rhs_[i] / t_[i][enter];
                if (leave == r_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == r_) {
                if (phase1) throw InternalError("phase-1 objective unbounded");
                throw LpUnbounded();
            }
            pivot(leave, enter);
        }
    }

    bool basis_contains(std::size_t j) const {
        return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
    }

    void pivot(std::size_t row, std::size_t col) {
        const mpq_class inv = 1 / t_[row][col];
        for (auto& v : t_[row]) v *= inv;
        rhs_[row] *= inv;
        t_[row][col] = 1;
        for (std::size_t i = 0; i < r_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            const mpq_class f = t_[i][col];
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
            rhs_[i] -= f * rhs_[row];
            t_[i][col] = 0;
        }
        if (z_[col] != 0) {
            const mpq_class f = z_[col];
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_[row][j] != 0) z_[j] -= f * t_[row][j];
            z_[col] = 0;
        }
        basis_[row] = col;
    }

    // Replace basic artificials with structural/surplus columns; rows that
    // cannot be repivoted are redundant and dropped.
    void evict_artificials() {
        for (std::size_t i = 0; i < r_;) {
            if (!artificial_[basis_[i]]) { ++i; continue; }
            std::size_t col = cols_;
            for (std::size_t j = 0; j < n_ + r_; ++j)
                if (t_[i][j] != 0 && !basis_contains(j)) { col = j; break; }
            if (col == cols_) {
                t_.erase(t_.begin() + static_cast<long>(i));
                rhs_.erase(rhs_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
                --r_;
                continue;
            }
            pivot(i, col);
            ++i;
        }
    }

    std::size_t n_, r_, cols_ = 0;
    std::vector<mpq_class> cost_;
    std::vector<std::vector<mpq_class>> t_;
    std::vector<mpq_class> rhs_;
    std::vector<mpq_class> z_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
    std::vector<bool> artificial_;
};

} // namespace

SimplexSolution simplex_min(const LinearProgram& lp) {
    if (lp.objective.size() != lp.vars)
        throw DomainError("objective width does not match variable count");
    if (lp.vars == 0) throw DomainError("linear program has no variables");

    Tableau tab(lp);
    tab.solve();

    std::vector<mpq_class> x = tab.witness();
    // Re-verify the witness against every original row.
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        mpq_class lhs = 0;
        for (std::size_t j = 0; j < lp.vars; ++j) lhs += lp.rows[i][j].lifted() * x[j];
        if (lhs < lp.rhs[i].lifted())
            throw InternalError("simplex witness violates constraint " + std::to_string(i));
    }
    mpq_class obj = 0;
    for (std::size_t j = 0; j < lp.vars; ++j) obj += lp.objective[j].lifted() * x[j];
    if (obj != tab.objective_value())
        throw InternalError("simplex witness objective mismatch");

    SimplexSolution sol;
    sol.optimum = Value::rational(obj);
    sol.witness.reserve(lp.vars);
    for (const auto& v : x) sol.witness.push_back(Value::rational(v));
    return sol;
}

} // namespace skc
