#include "latcount/lattice.hpp"

#include <algorithm>
#include <cctype>

namespace latcount {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::D: return "D";
        case Family::Dstar: return "Dstar";
        case Family::E: return "E";
        case Family::Z: return "Z";
    }
    throw std::logic_error("unreachable family");
}

Family parse_family(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "a") return Family::A;
    if (t == "d") return Family::D;
    if (t == "dstar" || t == "d*") return Family::Dstar;
    if (t == "e") return Family::E;
    if (t == "z") return Family::Z;
    throw InvalidSpec("unknown lattice family: " + s);
}

void LatticeSpec::validate() const {
    switch (family) {
        case Family::A:
            if (rank < 1) throw InvalidSpec("A family requires rank >= 1");
            return;
        case Family::D:
        case Family::Dstar:
            if (rank < 2) throw InvalidSpec(family_name(family) + " family requires rank >= 2");
            return;
        case Family::E:
            if (rank < 6 || rank > 8) throw InvalidSpec("E family requires rank in {6,7,8}");
            return;
        case Family::Z:
            if (rank < 1) throw InvalidSpec("Z family requires rank >= 1");
            return;
    }
    throw InvalidSpec("unknown family");
}

std::string LatticeSpec::name() const {
    return family_name(family) + "_" + std::to_string(rank);
}

int ambient_dim(const LatticeSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::A: return spec.rank + 1;
        case Family::D:
        case Family::Dstar:
        case Family::Z: return spec.rank;
        case Family::E: return 8;
    }
    throw std::logic_error("unreachable");
}

namespace {

RatMatrix zeros(int rows, int cols) {
    return RatMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

const Rational kHalf(1, 2);

// Entries given row-wise as doubled integers (so +-1/2 becomes +-1).
RatMatrix from_doubled(int rows, int cols, const int* doubled) {
    RatMatrix m = zeros(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            m[i][j] = Rational(doubled[i * cols + j], 2);
            m[i][j].canonicalize();
        }
    return m;
}

RatMatrix e6_generator() {
    static const int d[8 * 6] = {
        0,  0,  0,  0,  0,  1,   //
        -2, 0,  0,  0,  0,  1,   //
        2,  -2, 0,  0,  0,  1,   //
        0,  2,  -2, 0,  0,  1,   //
        0,  0,  2,  -2, 0,  -1,  //
        0,  0,  0,  2,  -2, -1,  //
        0,  0,  0,  0,  2,  -1,  //
        0,  0,  0,  0,  0,  -1,
    };
    return from_doubled(8, 6, d);
}

RatMatrix e7_generator() {
    static const int d[8 * 7] = {
        -2, 0,  0,  0,  0,  0,  1,   //
        2,  -2, 0,  0,  0,  0,  1,   //
        0,  2,  -2, 0,  0,  0,  1,   //
        0,  0,  2,  -2, 0,  0,  1,   //
        0,  0,  0,  2,  -2, 0,  -1,  //
        0,  0,  0,  0,  2,  -2, -1,  //
        0,  0,  0,  0,  0,  2,  -1,  //
        0,  0,  0,  0,  0,  0,  -1,
    };
    return from_doubled(8, 7, d);
}

RatMatrix e8_generator() {
    static const int d[8 * 8] = {
        4, -2, 0,  0,  0,  0,  0,  1,   //
        0, 2,  -2, 0,  0,  0,  0,  1,   //
        0, 0,  2,  -2, 0,  0,  0,  1,   //
        0, 0,  0,  2,  -2, 0,  0,  1,   //
        0, 0,  0,  0,  2,  -2, 0,  -1,  //
        0, 0,  0,  0,  0,  2,  -2, -1,  //
        0, 0,  0,  0,  0,  0,  2,  -1,  //
        0, 0,  0,  0,  0,  0,  0,  -1,
    };
    return from_doubled(8, 8, d);
}

}  // namespace

RatMatrix generator_matrix(const LatticeSpec& spec) {
    spec.validate();
    const int k = spec.rank;
    switch (spec.family) {
        case Family::Z: {
            RatMatrix m = zeros(k, k);
            for (int i = 0; i < k; ++i) m[i][i] = 1;
            return m;
        }
        case Family::A: {
            // Column j is e_j - e_{j+1}; every column sums to zero.
            RatMatrix m = zeros(k + 1, k);
            for (int j = 0; j < k; ++j) {
                m[j][j] = 1;
                m[j + 1][j] = -1;
            }
            return m;
        }
        case Family::D: {
            // Column 0 is e_1 + e_2, column j >= 1 is e_j - e_{j+1}.
            RatMatrix m = zeros(k, k);
            m[0][0] = 1;
            m[1][0] = 1;
            for (int j = 1; j < k; ++j) {
                m[j - 1][j] = 1;
                m[j][j] = -1;
            }
            return m;
        }
        case Family::Dstar: {
            // Identity with the last column replaced by the all-1/2 glue vector.
            RatMatrix m = zeros(k, k);
            for (int i = 0; i < k - 1; ++i) m[i][i] = 1;
            for (int i = 0; i < k; ++i) m[i][k - 1] = kHalf;
            return m;
        }
        case Family::E:
            if (k == 6) return e6_generator();
            if (k == 7) return e7_generator();
            return e8_generator();
    }
    throw std::logic_error("unreachable");
}

bool MembershipPredicate::accepts(std::span<const long> p) const {
    if (static_cast<int>(p.size()) != ambient_dim)
        throw std::invalid_argument("membership: wrong vector length");
    if (even_coordinate_sum) {
        long s = 0;
        for (long v : p) s += v;
        if (s % 2 != 0) return false;
    }
    for (const auto& idx : zero_sum_indices) {
        long s = 0;
        for (int i : idx) s += p[i];
        if (s != 0) return false;
    }
    return true;
}

MembershipPredicate membership_predicate(const LatticeSpec& spec) {
    spec.validate();
    MembershipPredicate pred;
    pred.ambient_dim = ambient_dim(spec);
    switch (spec.family) {
        case Family::Z:
        case Family::Dstar:
            break;
        case Family::D:
            pred.even_coordinate_sum = true;
            break;
        case Family::A: {
            std::vector<int> all(pred.ambient_dim);
            for (int i = 0; i < pred.ambient_dim; ++i) all[i] = i;
            pred.zero_sum_indices.push_back(std::move(all));
            break;
        }
        case Family::E:
            if (spec.rank == 6) {
                pred.zero_sum_indices.push_back({1, 2, 3, 4, 5, 6});
                pred.zero_sum_indices.push_back({0, 7});
            } else if (spec.rank == 7) {
                pred.zero_sum_indices.push_back({0, 1, 2, 3, 4, 5, 6, 7});
            } else {
                pred.even_coordinate_sum = true;
            }
            break;
    }
    return pred;
}

RatMatrix embedded_square_generator(const LatticeSpec& spec) {
    spec.validate();
    RatMatrix g = generator_matrix(spec);
    const int m = ambient_dim(spec);
    const int k = spec.rank;
    if (k == m) return g;
    // Pad with unit-vector columns for the missing directions: e_{k+1} for
    // A_k, e_7/e_8 for E_6, e_8 for E_7.
    for (auto& row : g) row.resize(m, Rational(0));
    int col = k;
    for (int i = 0; i < m && col < m; ++i) {
        bool hit = false;
        // Give row i a unit column if the square part would otherwise leave
        // the matrix singular; for the matrices at hand the rows needing
        // padding are exactly the trailing ones.
        if (spec.family == Family::A) {
            hit = (i == m - 1);
        } else if (spec.family == Family::E && spec.rank == 6) {
            hit = (i == 6 || i == 7);
        } else if (spec.family == Family::E && spec.rank == 7) {
            hit = (i == 7);
        }
        if (hit) g[i][col++] = 1;
    }
    return g;
}

RatMatrix invert_matrix(RatMatrix m) {
    const int n = static_cast<int>(m.size());
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("invert_matrix: singular matrix");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rational p = m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

RatMatrix invert_generator(const LatticeSpec& spec) {
    return invert_matrix(embedded_square_generator(spec));
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b[0].size());
    const int inner = static_cast<int>(b.size());
    RatMatrix out(n, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < inner; ++l)
            for (int j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

}  // namespace latcount
