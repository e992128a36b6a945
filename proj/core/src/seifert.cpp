#include "plumb/seifert.hpp"

#include <algorithm>
#include <numeric>

#include "plumb/matrix.hpp"

namespace plumb {

const char* obstruction_name(ObstructionVerdict v) {
    switch (v) {
        case ObstructionVerdict::Obstructed: return "Obstructed";
        case ObstructionVerdict::NotObstructed: return "NotObstructed";
        case ObstructionVerdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

NcfExpansion neg_cont_frac(std::int64_t p, std::int64_t q) {
    if (q < 1 || p <= q)
        throw DomainError("neg_cont_frac: need p > q >= 1");
    if (std::gcd(p, q) != 1)
        throw DomainError("neg_cont_frac: p, q not coprime");
    NcfExpansion out;
    out.p = p;
    out.q = q;
    while (q > 0) {
        std::int64_t c = (p + q - 1) / q;  // ceil(p/q)
        out.terms.push_back(c);
        std::int64_t np = q, nq = c * q - p;
        p = np;
        q = nq;
    }
    return out;
}

namespace {

std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    // extended Euclid; x coprime to m, m >= 1
    std::int64_t a = x % m, b = m, u = 1, v = 0;
    while (b != 0) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        u -= t * v;
        std::swap(u, v);
    }
    return ((u % m) + m) % m;
}

}  // namespace

PlumbingGraph brieskorn_plumbing(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    std::int64_t as[3] = {a1, a2, a3};
    int ones = 0;
    for (std::int64_t a : as) {
        if (a < 1) throw DomainError("brieskorn_plumbing: a_i must be >= 1");
        if (a == 1) ++ones;
    }
    if (ones > 1) throw DomainError("brieskorn_plumbing: at most one a_i may be 1");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(as[i], as[j]) != 1)
                throw DomainError("brieskorn_plumbing: a_i not pairwise coprime");

    const std::int64_t P = a1 * a2 * a3;
    // Solve e = w0 + sum b_i/a_i = -1/P with 0 < b_i < a_i:
    //   b_i * (P/a_i) = -1 (mod a_i)  =>  b_i = (-(P/a_i)^{-1}) mod a_i.
    std::int64_t b[3];
    std::int64_t num = -1;  // running numerator of -1 - sum b_i * P/a_i
    for (int i = 0; i < 3; ++i) {
        if (as[i] == 1) {
            b[i] = 0;
        } else {
            b[i] = (as[i] - mod_inverse(P / as[i], as[i])) % as[i];
            if (b[i] == 0)
                throw InternalError("brieskorn_plumbing: b_i degenerate");
        }
        num -= b[i] * (P / as[i]);
    }
    if (num % P != 0)
        throw InternalError("brieskorn_plumbing: central weight not integral");
    const std::int64_t w0 = num / P;

    PlumbingGraph g;
    VertexId center = g.add_vertex(w0);
    for (int i = 0; i < 3; ++i) {
        if (as[i] == 1) continue;  // empty arm
        NcfExpansion ncf = neg_cont_frac(as[i], b[i]);
        VertexId prev = center;
        for (std::int64_t c : ncf.terms) {
            VertexId v = g.add_vertex(-c);
            g.add_edge(prev, v);
            prev = v;
        }
    }

    if (!is_unimodular(g) || !is_negative_definite(g))
        throw InternalError("brieskorn_plumbing: convention check failed");
    return g;
}

SeifertData seifert_data_from_star(const PlumbingGraph& g) {
    if (g.empty()) throw NotStarError("seifert_data_from_star: empty graph");
    if (!g.is_connected())
        throw NotStarError("seifert_data_from_star: graph not connected");

    // pick the center: the unique node, or the smallest id when <= 2 vertices
    VertexId center = -1;
    std::vector<VertexId> vs = g.vertices();
    if (vs.size() <= 2) {
        center = vs.front();
    } else {
        for (VertexId v : vs)
            if (g.valence(v) >= 3) {
                if (center != -1)
                    throw NotStarError("seifert_data_from_star: more than one node");
                center = v;
            }
        if (center == -1)
            throw NotStarError("seifert_data_from_star: no node (linear graph)");
    }

    SeifertData data;
    data.b0 = g.weight(center);
    data.e = mpq_class(static_cast<long>(data.b0));
    for (VertexId first : g.neighbors(center)) {
        // walk the arm outward, collecting -c_1, ..., -c_k
        std::vector<std::int64_t> terms;
        VertexId prev = center, cur = first;
        for (;;) {
            if (g.valence(cur) > 2)
                throw NotStarError("seifert_data_from_star: branching arm");
            Weight w = g.weight(cur);
            if (w >= -1)
                throw NotReducedError("seifert_data_from_star: arm weight >= -1");
            terms.push_back(-w);
            VertexId next = -1;
            for (VertexId u : g.neighbors(cur))
                if (u != prev) next = u;
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        // evaluate a/b = c_1 - 1/(c_2 - ... - 1/c_k) from the tail
        std::int64_t p = terms.back(), q = 1;
        for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
            std::int64_t np = *it * p - q;
            q = p;
            p = np;
        }
        data.arms.emplace_back(p, q);
        data.e += mpq_class(static_cast<long>(q), static_cast<long>(p));
    }
    data.e.canonicalize();
    std::sort(data.arms.begin(), data.arms.end());
    return data;
}

ObstructionVerdict central_weight_obstruction(const PlumbingGraph& g) {
    if (g.empty() || !g.is_connected()) return ObstructionVerdict::NotApplicable;
    Classification c = classify(g);
    if (c.node_ids.size() != 1 || c.branch_count < 3)
        return ObstructionVerdict::NotApplicable;
    if (!is_unimodular(g) || !is_negative_definite(g))
        return ObstructionVerdict::NotApplicable;
    return g.weight(c.node_ids.front()) == -1 ? ObstructionVerdict::NotObstructed
                                              : ObstructionVerdict::Obstructed;
}

}  // namespace plumb
