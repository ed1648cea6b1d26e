#pragma once

// Relation suites for the matrix realization and for the spinor realization.

#include "osprep/structure.hpp"
#include "osprep/superpoly.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace osprep {

struct CheckFamily {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    explicit CheckFamily(std::string n) : name(std::move(n)) {}
    bool pass() const { return failed == 0 && checked > 0; }
    void record(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = what;
    }
};

struct SuiteReport {
    std::string suite;
    Context ctx;
    std::vector<CheckFamily> families;

    bool pass() const {
        for (const auto& f : families)
            if (!f.pass()) return false;
        return !families.empty();
    }
};

inline std::string ctx_label(Context c) { return "osp(" + std::to_string(c.m) + "|" + std::to_string(2 * c.n) + ")"; }

/// Chevalley generators, structure table and super-Jacobi identity on basis triples.
inline SuiteReport algebra_suite(Context c) {
    validate_context(c);
    SuiteReport rep{"algebra", c, {}};
    auto ch = chevalley_nonstandard(c);
    auto rs = build_root_system(c, Convention::nonstandard);
    CheckFamily mem{"osp_membership"}, xy{"x_y_bracket"}, hx{"h_x_bracket"}, hy{"h_y_bracket"}, par{"parity"};
    for (std::size_t k = 0; k < ch.size(); ++k) {
        std::string tag = "k=" + std::to_string(k + 1);
        mem.record(is_osp(ch[k].X) && is_osp(ch[k].Y) && is_osp(ch[k].H), tag);
        par.record(ch[k].X.parity() == std::optional<int>(ch[k].odd ? 1 : 0) && ch[k].odd == rs.simple[k].odd, tag);
        for (std::size_t l = 0; l < ch.size(); ++l) {
            std::string tl = tag + " l=" + std::to_string(l + 1);
            SuperMatrix br = bracket(ch[k].X, ch[l].Y);
            xy.record(k == l ? br == ch[k].H : br.is_zero(), tl);
            Rational a = evaluate(rs.simple[k].weight, ch[l].H);
            hx.record(bracket(ch[l].H, ch[k].X) == a * ch[k].X, tl);
            hy.record(bracket(ch[l].H, ch[k].Y) == -a * ch[k].Y, tl);
        }
    }
    CheckFamily closure{"structure_closure"}, jacobi{"super_jacobi"};
    for (auto conv : {Convention::nonstandard, Convention::standard}) {
        const auto& s = Structure::get(c, conv);
        const int B = s.basis_size();
        for (int i = 0; i < B; ++i) {
            mem.record(is_osp(s.basis_matrix(i)), std::string(to_string(conv)) + " basis " + std::to_string(i));
            for (int j = 0; j < B; ++j)
                closure.record(s.to_matrix(s.bracket(i, j)) == bracket(s.basis_matrix(i), s.basis_matrix(j)),
                               std::string(to_string(conv)) + " " + std::to_string(i) + "," + std::to_string(j));
        }
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]] with structure constants
        auto br = [&](const LieElem& x, int k) {
            std::map<int, Rational> acc;
            for (const auto& t : x)
                for (const auto& u : s.bracket(t.index, k)) acc[u.index] += t.coef * u.coef;
            return acc;
        };
        auto lbr = [&](int k, const LieElem& x) {
            std::map<int, Rational> acc;
            for (const auto& t : x)
                for (const auto& u : s.bracket(k, t.index)) acc[u.index] += t.coef * u.coef;
            return acc;
        };
        auto clean = [](std::map<int, Rational> m) {
            for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
            return m;
        };
        for (int a = 0; a < B; ++a)
            for (int b = 0; b < B; ++b)
                for (int k = 0; k < B; ++k) {
                    auto lhs = lbr(a, s.bracket(b, k));
                    auto rhs = br(s.bracket(a, b), k);
                    Rational sg(s.basis_parity(a) * s.basis_parity(b) == 1 ? -1 : 1);
                    for (const auto& [i, x] : lbr(b, s.bracket(a, k))) rhs[i] += sg * x;
                    jacobi.record(clean(lhs) == clean(rhs), std::string(to_string(conv)) + " " + std::to_string(a) + "," +
                                                                std::to_string(b) + "," + std::to_string(k));
                }
    }
    rep.families = {mem, par, xy, hx, hy, closure, jacobi};
    return rep;
}

/// Graded commutator [A, B] p = A B p - (-1)^{|A||B|} B A p of realization operators.
inline SuperPoly graded_commutator(Context c, OpKind a, int k, OpKind b, int l, const SuperPoly& p) {
    auto par = [&](OpKind o, int i) { return o == OpKind::H ? 0 : op_parity(c, i); };
    SuperPoly ab = act(c, a, k, act(c, b, l, p));
    SuperPoly ba = act(c, b, l, act(c, a, k, p));
    if (par(a, k) * par(b, l) == 1)
        ab += ba;
    else
        ab -= ba;
    return ab;
}

/// Chevalley relations in the spinor realization on monomials of degree <= degree,
/// the completely pointed property and the highest weight vectors.
inline SuiteReport spinor_suite(Context c, int degree = 8) {
    validate_context(c);
    SuiteReport rep{"spinor", c, {}};
    auto ch = chevalley_nonstandard(c);
    auto rs = build_root_system(c, Convention::nonstandard);
    CheckFamily h{"h_action"}, xy{"x_y_bracket"}, hx{"h_x_bracket"}, hy{"h_y_bracket"}, shift{"weight_shift"};
    CheckFamily pointed{"completely_pointed"}, top{"highest_weight_vectors"};
    std::set<Weight> seen;
    for (const auto& m : basis_up_to(c, degree)) {
        SuperPoly p(m);
        Weight w = weight_of(m, c);
        pointed.record(seen.insert(w).second && monomial_of_weight(w) == std::optional<SuperMonomial>(m), m.str());
        for (int k = 1; k <= c.rank(); ++k) {
            const auto& tk = ch[static_cast<std::size_t>(k - 1)];
            std::string tag = m.str() + " k=" + std::to_string(k);
            h.record(act(c, OpKind::H, k, p) == FieldScalar(evaluate(w, tk.H)) * p, tag);
            for (int l = 1; l <= c.rank(); ++l) {
                std::string tl = tag + " l=" + std::to_string(l);
                SuperPoly br = graded_commutator(c, OpKind::X, k, OpKind::Y, l, p);
                xy.record(k == l ? br == act(c, OpKind::H, k, p) : br.is_zero(), tl);
                Rational a = evaluate(rs.simple[static_cast<std::size_t>(k - 1)].weight, ch[static_cast<std::size_t>(l - 1)].H);
                hx.record(graded_commutator(c, OpKind::H, l, OpKind::X, k, p) == FieldScalar(a) * act(c, OpKind::X, k, p), tl);
                hy.record(graded_commutator(c, OpKind::H, l, OpKind::Y, k, p) == FieldScalar(-a) * act(c, OpKind::Y, k, p), tl);
            }
            bool ok = true;
            SuperPoly raised = act(c, OpKind::X, k, p);
            for (const auto& [mx, cx] : raised.terms())
                ok = ok && weight_of(mx, c) == w + rs.simple[static_cast<std::size_t>(k - 1)].weight;
            shift.record(ok, tag);
        }
    }
    auto killed = [&](const SuperMonomial& m) {
        for (int k = 1; k <= c.rank(); ++k)
            if (!act(c, OpKind::X, k, SuperPoly(m)).is_zero()) return false;
        return true;
    };
    SuperMonomial one = unit_monomial(c.d(), c.n);
    top.record(killed(one) && weight_of(one, c) == omega_top(c) - Rational(1, 2) * nu(c.n, c), "1");
    if (!c.m_odd()) {
        SuperMonomial t1 = one;
        t1.beta[0] = 1;
        top.record(killed(t1) && weight_of(t1, c) == omega_top(c) + nu(c.n - 1, c) - Rational(3, 2) * nu(c.n, c), "t1");
    }
    rep.families = {h, xy, hx, hy, shift, pointed, top};
    return rep;
}

}  // namespace osprep
