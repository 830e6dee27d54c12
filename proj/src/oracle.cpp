#include "latcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace latcount {

namespace {

void check_budget_pow(std::uint64_t base, int exp, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < exp; ++i) {
        if (total > budget / base)
            throw BudgetExceeded("oracle: enumeration of " + std::to_string(base) + "^" +
                                 std::to_string(exp) + " candidates exceeds budget " +
                                 std::to_string(budget));
        total *= base;
    }
}

struct PSpaceWalker {
    int dim;
    long n;
    bool parity_constraint;
    // subset_of[i]: index of the zero-sum group coordinate i belongs to, or -1.
    std::vector<int> subset_of;
    int n_subsets;

    std::uint64_t count = 0;

    void walk(int depth, long parity_sum, std::vector<long>& sums) {
        if (depth == dim) {
            if (parity_constraint && (parity_sum & 1)) return;
            for (long s : sums)
                if (s != 0) return;
            ++count;
            return;
        }
        for (long v = -n; v <= n; ++v) {
            int g = subset_of[depth];
            if (g >= 0) sums[g] += v;
            walk(depth + 1, parity_sum + v, sums);
            if (g >= 0) sums[g] -= v;
        }
    }
};

}  // namespace

BigInt count_bulk_pspace(const OracleConfig& config) {
    config.spec.validate();
    if (config.n < 0) throw std::invalid_argument("oracle: n >= 0 required");
    if (config.mode != OracleMode::integer_points)
        throw std::invalid_argument("count_bulk_pspace: integer_points mode only");
    const MembershipPredicate pred = membership_predicate(config.spec);
    check_budget_pow(2 * static_cast<std::uint64_t>(config.n) + 1, pred.ambient_dim,
                     config.budget);

    PSpaceWalker w;
    w.dim = pred.ambient_dim;
    w.n = config.n;
    w.parity_constraint = pred.even_coordinate_sum;
    w.subset_of.assign(w.dim, -1);
    w.n_subsets = static_cast<int>(pred.zero_sum_indices.size());
    for (int g = 0; g < w.n_subsets; ++g)
        for (int i : pred.zero_sum_indices[g]) w.subset_of[i] = g;

    std::vector<long> sums(std::max(w.n_subsets, 1), 0);
    w.walk(0, 0, sums);
    return BigInt(static_cast<unsigned long>(w.count));
}

namespace {

// Generator and inverse scaled by 2 so all entries are integers.
struct AlphaSpaceWalker {
    int ambient;                          // rows of the generator
    int rank;                             // enumerated coordinates
    long n;                               // |p_i| <= n, i.e. |2 p_i| <= 2n
    bool require_integer_points;          // 2 p_i even
    std::vector<std::vector<long>> gen2;  // ambient x rank, doubled entries
    std::vector<long> bounds;             // |alpha_j| <= bounds[j]
    std::vector<int> order;               // column enumeration order
    // rows_done[t]: rows fully determined once order[0..t] are assigned.
    std::vector<std::vector<int>> rows_done;
    std::uint64_t budget;

    std::uint64_t visited = 0;
    std::uint64_t count = 0;

    void walk(int depth, std::vector<long>& row_vals) {
        if (++visited > budget)
            throw BudgetExceeded("oracle: alpha-space enumeration exceeds budget " +
                                 std::to_string(budget));
        if (depth == rank) {
            ++count;
            return;
        }
        const int col = order[depth];
        const long b = bounds[col];
        for (long a = -b; a <= b; ++a) {
            bool ok = true;
            for (int i = 0; i < ambient; ++i) row_vals[i] += gen2[i][col] * a;
            for (int i : rows_done[depth]) {
                long v = row_vals[i];
                if (v > 2 * n || v < -2 * n || (require_integer_points && (v & 1))) {
                    ok = false;
                    break;
                }
            }
            if (ok) walk(depth + 1, row_vals);
            for (int i = 0; i < ambient; ++i) row_vals[i] -= gen2[i][col] * a;
        }
    }
};

}  // namespace

BigInt count_bulk_alphaspace(const OracleConfig& config) {
    config.spec.validate();
    if (config.n < 0) throw std::invalid_argument("oracle: n >= 0 required");

    const RatMatrix gen = generator_matrix(config.spec);
    const RatMatrix inv = invert_generator(config.spec);
    AlphaSpaceWalker w;
    w.ambient = ambient_dim(config.spec);
    w.rank = config.spec.rank;
    w.n = config.n;
    w.require_integer_points = config.mode == OracleMode::integer_points;
    w.budget = config.budget;

    w.gen2.assign(w.ambient, std::vector<long>(w.rank, 0));
    for (int i = 0; i < w.ambient; ++i)
        for (int j = 0; j < w.rank; ++j) {
            Rational doubled = gen[i][j] * 2;
            w.gen2[i][j] = static_cast<long>(to_integer(doubled).get_si());
        }

    // |alpha_j| <= n * sum_i |inv_{ji}|, floor since alpha is integral.
    w.bounds.resize(w.rank);
    for (int j = 0; j < w.rank; ++j) {
        Rational row_sum(0);
        for (int i = 0; i < w.ambient; ++i) row_sum += abs(inv[j][i]);
        Rational bound = row_sum * config.n;
        BigInt fl;
        mpz_fdiv_q(fl.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
        w.bounds[j] = fl.get_si();
    }

    // Enumerate the densest columns first so rows complete (and reject) early.
    w.order.resize(w.rank);
    std::iota(w.order.begin(), w.order.end(), 0);
    auto nonzeros = [&](int col) {
        int c = 0;
        for (int i = 0; i < w.ambient; ++i) c += w.gen2[i][col] != 0;
        return c;
    };
    std::stable_sort(w.order.begin(), w.order.end(),
                     [&](int a, int b) { return nonzeros(a) > nonzeros(b); });

    w.rows_done.assign(w.rank, {});
    std::vector<bool> assigned(w.rank, false), row_seen(w.ambient, false);
    for (int t = 0; t < w.rank; ++t) {
        assigned[w.order[t]] = true;
        for (int i = 0; i < w.ambient; ++i) {
            if (row_seen[i]) continue;
            bool complete = true;
            for (int j = 0; j < w.rank; ++j)
                if (w.gen2[i][j] != 0 && !assigned[j]) {
                    complete = false;
                    break;
                }
            if (complete) {
                w.rows_done[t].push_back(i);
                row_seen[i] = true;
            }
        }
    }

    std::vector<long> row_vals(w.ambient, 0);
    w.walk(0, row_vals);
    return BigInt(static_cast<unsigned long>(w.count));
}

BigInt count_surface(const OracleConfig& config) {
    if (config.n == 0) return 1;
    OracleConfig prev = config;
    prev.n = config.n - 1;
    return count_bulk_pspace(config) - count_bulk_pspace(prev);
}

}  // namespace latcount
