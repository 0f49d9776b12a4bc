#pragma once
// dim Hom(M, N) straight from the intertwining equations M_a f_t = f_s N_a,
// one unknown per entry of every f_v, with its own modular elimination.

#include <cstdint>
#include <vector>

#include "qalg/module.hpp"

namespace oracle {

inline std::size_t naive_hom_dim(const qalg::repr::Module& m, const qalg::repr::Module& n)
{
    const auto& q = m.algebra().quiver();
    const std::uint64_t p = m.field().modulus();
    const auto nv = static_cast<std::size_t>(m.num_vertices());
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + m.dims()[v] * n.dims()[v];
    const std::size_t unknowns = offset[nv];
    auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * n.dims()[v] + c; };

    std::vector<std::vector<std::uint64_t>> rows;
    for (qalg::quiver::ArrowId a = 0; a < static_cast<qalg::quiver::ArrowId>(q.num_arrows()); ++a) {
        const auto s = static_cast<std::size_t>(q.arrow(a).source);
        const auto t = static_cast<std::size_t>(q.arrow(a).target);
        const auto& ma = m.action(a);  // dim M_s x dim M_t
        const auto& na = n.action(a);  // dim N_s x dim N_t
        // entry (i, j) of M_a f_t - f_s N_a, i < dim M_s, j < dim N_t
        for (std::size_t i = 0; i < m.dims()[s]; ++i)
            for (std::size_t j = 0; j < n.dims()[t]; ++j) {
                std::vector<std::uint64_t> row(unknowns, 0);
                for (std::size_t k = 0; k < m.dims()[t]; ++k)
                    row[var(t, k, j)] = (row[var(t, k, j)] + ma(i, k)) % p;
                for (std::size_t k = 0; k < n.dims()[s]; ++k)
                    row[var(s, i, k)] = (row[var(s, i, k)] + (p - na(k, j)) % p) % p;
                rows.push_back(std::move(row));
            }
    }
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        for (; e; e >>= 1, x = x * x % p)
            if (e & 1)
                r = r * x % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < unknowns && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[sel], rows[rank]);
        const auto iv = inv(rows[rank][c]);
        for (auto& x : rows[rank])
            x = x * iv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const auto f = rows[r][c];
            for (std::size_t k = c; k < unknowns; ++k)
                rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
        }
        ++rank;
    }
    return unknowns - rank;
}

}  // namespace oracle
