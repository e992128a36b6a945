#include "plumb/matrix.hpp"

#include <algorithm>
#include <map>

namespace plumb {

IntegerSymmetricMatrix intersection_matrix(const PlumbingGraph& g) {
    std::vector<VertexId> vs = g.vertices();  // sorted by id
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;

    IntegerSymmetricMatrix m(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        m.set(i, i, mpz_class(static_cast<long>(g.weight(vs[i]))));
    for (const Edge& e : g.edges())
        m.set(index.at(e.first), index.at(e.second), 1);
    return m;
}

mpz_class determinant(const IntegerSymmetricMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;

    // working copy
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

SignatureTriple signature(const IntegerSymmetricMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(m.at(i, j));

    SignatureTriple sig;
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    auto eliminate_with_pivot = [&](std::size_t p) {
        // symmetric rank-1 elimination of row/column p within the active set
        mpq_class d = a[p][p];
        std::vector<std::size_t> rest;
        for (std::size_t r : active)
            if (r != p) rest.push_back(r);
        for (std::size_t i : rest)
            for (std::size_t j : rest) a[i][j] -= a[i][p] * a[p][j] / d;
        active = rest;
        if (d > 0) ++sig.n_plus;
        else ++sig.n_minus;
    };

    while (!active.empty()) {
        // prefer a nonzero diagonal pivot
        std::size_t pivot = active.size();
        for (std::size_t idx = 0; idx < active.size(); ++idx)
            if (a[active[idx]][active[idx]] != 0) {
                pivot = idx;
                break;
            }
        if (pivot < active.size()) {
            eliminate_with_pivot(active[pivot]);
            continue;
        }
        // all active diagonals zero: look for an off-diagonal entry
        bool found = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t x = 0; x < active.size() && !found; ++x)
            for (std::size_t y = x + 1; y < active.size() && !found; ++y)
                if (a[active[x]][active[y]] != 0) {
                    pi = active[x];
                    pj = active[y];
                    found = true;
                }
        if (!found) {
            sig.n_zero += active.size();
            break;
        }
        // hyperbolic block [[0, c], [c, 0]]: contributes (+1, -1); clear the
        // rest via the 2x2 block inverse
        mpq_class c = a[pi][pj];
        std::vector<std::size_t> rest;
        for (std::size_t r : active)
            if (r != pi && r != pj) rest.push_back(r);
        for (std::size_t i : rest)
            for (std::size_t j : rest)
                a[i][j] -= (a[i][pi] * a[pj][j] + a[i][pj] * a[pi][j]) / c;
        active = rest;
        ++sig.n_plus;
        ++sig.n_minus;
    }
    return sig;
}

bool is_unimodular(const PlumbingGraph& g) {
    mpz_class d = determinant(intersection_matrix(g));
    return d == 1 || d == -1;
}

bool is_negative_definite(const PlumbingGraph& g) {
    SignatureTriple s = signature(intersection_matrix(g));
    return s.n_plus == 0 && s.n_zero == 0 && s.n_minus == g.size();
}

bool is_homology_sphere(const PlumbingGraph& g) { return is_unimodular(g); }

}  // namespace plumb
