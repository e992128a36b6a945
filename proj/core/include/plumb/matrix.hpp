#pragma once

// Exact intersection-form invariants.
//
// Determinant: fraction-free Bareiss elimination over arbitrary-precision
// integers.  Signature: symmetric pivoting over exact rationals, with
// hyperbolic 2x2 blocks handled when the remaining diagonal is all zero.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

class IntegerSymmetricMatrix {
public:
    IntegerSymmetricMatrix() = default;
    explicit IntegerSymmetricMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, 0) {}

    std::size_t dim() const { return dim_; }

    const mpz_class& at(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }
    void set(std::size_t i, std::size_t j, const mpz_class& v) {
        entries_[i * dim_ + j] = v;
        entries_[j * dim_ + i] = v;
    }

private:
    std::size_t dim_ = 0;
    std::vector<mpz_class> entries_;
};

struct SignatureTriple {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    bool operator==(const SignatureTriple&) const = default;
};

// Vertex ordering is the graph's id order (insertion order for build_graph).
IntegerSymmetricMatrix intersection_matrix(const PlumbingGraph& g);

mpz_class determinant(const IntegerSymmetricMatrix& m);  // 0x0 -> 1
SignatureTriple signature(const IntegerSymmetricMatrix& m);

bool is_unimodular(const PlumbingGraph& g);
bool is_negative_definite(const PlumbingGraph& g);
bool is_homology_sphere(const PlumbingGraph& g);

inline mpz_class determinant(const PlumbingGraph& g) {
    return determinant(intersection_matrix(g));
}
inline SignatureTriple signature(const PlumbingGraph& g) {
    return signature(intersection_matrix(g));
}

}  // namespace plumb
