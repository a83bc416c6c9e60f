#ifndef BLOWUP_TESTS_ORACLE_MACAULAY_HPP
#define BLOWUP_TESTS_ORACLE_MACAULAY_HPP

// Dense Macaulay-matrix oracle: exact row reduction over QQ, written
// independently of the Groebner path it cross-checks.

#include "blowup/module_ops.hpp"

#include <map>
#include <random>
#include <vector>

namespace test {

using namespace blowup;

/// Plain Gauss-Jordan over QQ. Rows are modified in place; returns the
/// list of pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = rows[rank][col].inverse();
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            Rational f = rows[i][col];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

/// Is `v` in the row space of an RREF matrix?
inline bool in_rowspace(const std::vector<std::vector<Rational>>& rref_rows,
                        const std::vector<std::size_t>& pivots, std::vector<Rational> v) {
    for (std::size_t r = 0; r < rref_rows.size(); ++r) {
        Rational f = v[pivots[r]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rref_rows[r][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// All monomials of total degree d (every variable), in the enumeration
/// order of monomials_of_degree.
inline std::vector<Monomial> degree_basis(const Ring& r, int d) {
    std::vector<Monomial> out;
    monomials_of_degree(r.nvars(), std::vector<std::uint8_t>(r.nvars(), 1), d, out);
    return out;
}

/// The monomials of degree d lying in the homogeneous ideal generated by
/// `gens`, decided by dense row reduction of the degree-d Macaulay matrix.
inline std::vector<Monomial> macaulay_zero_monomials(const RingP& r,
                                                     const std::vector<Polynomial>& gens,
                                                     int d) {
    auto basis = degree_basis(*r, d);
    std::map<std::vector<std::int32_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;

    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto wd = g.homogeneous_weight(std::vector<int>(r->nvars(), 1));
        if (!wd || *wd > d) continue;
        auto mults = degree_basis(*r, d - static_cast<int>(*wd));
        for (const auto& m : mults) {
            std::vector<Rational> row(basis.size());
            for (const auto& t : g.terms()) row[index.at((t.mono * m).exponents())] = t.coeff.rat();
            rows.push_back(std::move(row));
        }
    }
    auto pivots = rref(rows);

    std::vector<Monomial> zero;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Rational> unit(basis.size());
        unit[i] = Rational(1);
        if (in_rowspace(rows, pivots, std::move(unit))) zero.push_back(basis[i]);
    }
    return zero;
}

inline std::vector<Polynomial> random_homogeneous_ideal(const RingP& r, std::mt19937& rng) {
    std::uniform_int_distribution<int> ngens(1, 3), deg(1, 4), nterms(1, 3), coeff(-2, 2);
    std::vector<Polynomial> gens;
    int k = ngens(rng);
    for (int i = 0; i < k; ++i) {
        int d = deg(rng);
        auto basis = degree_basis(*r, d);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        Polynomial p;
        int t = nterms(rng);
        for (int j = 0; j < t; ++j) {
            int c = coeff(rng);
            if (c == 0) c = 1;
            p = add(p, Polynomial::monomial(basis[pick(rng)], Scalar::from_int(r->field, c)),
                    r->order);
        }
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    if (gens.empty()) gens.push_back(r->var_poly(0));
    return gens;
}

inline std::vector<PolyVec> wrap(const std::vector<Polynomial>& ps) {
    std::vector<PolyVec> out;
    for (const auto& p : ps) out.push_back(PolyVec({p}));
    return out;
}

} // namespace test

#endif
