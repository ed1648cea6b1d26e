#include "osprep/decomp.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace osprep;

namespace {

std::set<Weight> nonstandard_of(const DecompositionResult& r) {
    std::set<Weight> s;
    for (const auto& x : r.summands) s.insert(x.nonstandard);
    return s;
}
std::set<Weight> standard_of(const DecompositionResult& r) {
    std::set<Weight> s;
    for (const auto& x : r.summands) s.insert(x.standard);
    return s;
}

bool so_odd_dominant(const Weight& w) {
    const int d = w.context().d();
    for (int j = 1; j < d; ++j)
        if (w.k(j) < w.k(j + 1)) return false;
    return d == 0 || w.k(d).sign() >= 0;
}

Weight eps(Context c, std::vector<long> ks) {
    Weight w(c);
    for (std::size_t j = 0; j < ks.size(); ++j) w.k(static_cast<int>(j) + 1) = Rational(ks[j]);
    return w;
}

}  // namespace

TEST(SoSpinor, MatchesMinusculeDominanceRule) {
    for (int d = 1; d <= 3; ++d) {
        Context c{2 * d + 1, 1};
        std::vector<std::vector<long>> lams{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {2, 2, 1}, {3, 1, 1}};
        for (auto ks : lams) {
            ks.resize(static_cast<std::size_t>(d));
            Weight lam = eps(c, ks);
            if (!so_odd_dominant(lam)) continue;
            std::set<Weight> want;
            for (int bits = 0; bits < (1 << d); ++bits) {
                Weight w = lam + omega_top(c);
                for (int j = 0; j < d; ++j)
                    if (bits >> j & 1) w.k(j + 1) -= Rational(1);
                if (so_odd_dominant(w)) want.insert(w);
            }
            auto got = so_spinor_decompose(lam);
            EXPECT_EQ(std::set<Weight>(got.begin(), got.end()), want) << lam.str();
            EXPECT_EQ(got.size(), want.size());
        }
    }
}

TEST(SoSpinor, TrivialGivesSpinor) {
    Context c{5, 1};
    auto got = so_spinor_decompose(Weight(c));
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0], omega_top(c));
}

TEST(SpinorTimesKe1, StandardLabelsOddM) {
    for (int d = 1; d <= 2; ++d)
        for (int n = 1; n <= 2; ++n) {
            Context c{2 * d + 1, n};
            Weight s = omega(d, c) - Rational(1, 2) * nu(n, c);
            for (int k = 1; k <= n + 2; ++k) {
                Weight K = to_standard(Rational(k) * Weight::eps_unit(c, 1));
                std::set<Weight> want;
                if (k <= n) {
                    EXPECT_EQ(K, nu(k, c));
                    want = {nu(k, c) + s, nu(k - 1, c) + s};
                } else {
                    Weight l1 = Rational(k - n) * Weight::eps_unit(c, 1);
                    EXPECT_EQ(K, l1 + nu(n, c));
                    want = {l1 + omega(d, c) + Rational(1, 2) * nu(n, c),
                            l1 - Weight::eps_unit(c, 1) + omega(d, c) + Rational(1, 2) * nu(n, c)};
                }
                auto r = spinor_times_ke1(c, k, Part::all);
                EXPECT_EQ(standard_of(r), want) << c.m << " " << n << " " << k;
                EXPECT_EQ(r.shape, Shape::completely_reducible);
            }
        }
}

TEST(SpinorTimesKe1, StandardLabelsEvenM) {
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= 3; ++n) {
            Context c{2 * d, n};
            Weight half = Rational(1, 2) * nu(n, c);
            Weight wd = omega(d, c), wd1 = omega(d - 1, c);
            for (int k = 1; k <= n + 2; ++k) {
                if (k + d == n + 1) continue;
                std::set<Weight> plus, minus;
                if (k <= n) {
                    plus = {nu(k, c) + wd - half, nu(k - 1, c) + wd1 - half};
                    minus = {nu(k, c) + wd1 - half, nu(k - 1, c) + wd - half};
                } else {
                    Weight l1 = Rational(k - n) * Weight::eps_unit(c, 1), e1 = Weight::eps_unit(c, 1);
                    plus = {l1 + wd + half, l1 - e1 + wd1 + half};
                    minus = {l1 + wd1 + half, l1 - e1 + wd + half};
                }
                EXPECT_EQ(standard_of(spinor_times_ke1(c, k, Part::plus)), plus) << c.m << " " << n << " " << k;
                EXPECT_EQ(standard_of(spinor_times_ke1(c, k, Part::minus)), minus) << c.m << " " << n << " " << k;
            }
        }
}

TEST(SpinorTimesKe1, C2nLabels) {
    for (int n = 1; n <= 3; ++n) {
        Context c{2, n};
        Weight e = Weight::eps_unit(c, 1);
        Weight sp = Rational(1, 2) * e - Rational(1, 2) * nu(n, c);
        Weight sm = Rational(1, 2) * e + nu(n - 1, c) - Rational(3, 2) * nu(n, c);
        for (int k = 1; k <= n + 1; ++k) {
            auto p = spinor_times_ke1(c, k, Part::plus);
            auto m = spinor_times_ke1(c, k, Part::minus);
            EXPECT_EQ(nonstandard_of(p), (std::set<Weight>{Rational(k) * e + sp, Rational(k - 1) * e + sm}));
            EXPECT_EQ(nonstandard_of(m), (std::set<Weight>{Rational(k) * e + sm, Rational(k - 1) * e + sp}));
            Shape want = k == n ? Shape::chain : Shape::completely_reducible;
            EXPECT_EQ(p.shape, want);
            EXPECT_EQ(m.shape, want);
        }
    }
}

TEST(SpinorTimesKe1, ChainWeights) {
    for (auto [m, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{6, 3}}) {
        Context c{m, n};
        int k = n - c.d() + 1;
        Weight e = Weight::eps_unit(c, 1);
        for (Part p : {Part::plus, Part::minus}) {
            auto r = spinor_times_ke1(c, k, p);
            ASSERT_EQ(r.shape, Shape::chain);
            ASSERT_TRUE(r.chain.has_value());
            EXPECT_EQ(r.chain->upper, Rational(k) * e + spinor_highest_weight(c, p));
            EXPECT_EQ(r.chain->inner, Rational(k - 1) * e + spinor_highest_weight(c, opposite(p)));
        }
    }
}

TEST(SpinorTimesKe1, B0nCases) {
    Context c{1, 2};
    auto r1 = spinor_times_ke1(c, 1, Part::all);
    EXPECT_EQ(nonstandard_of(r1), (std::set<Weight>{nu(1, c) - Rational(1, 2) * nu(2, c), Rational(-1, 2) * nu(2, c)}));
    auto r2 = spinor_times_ke1(c, 2, Part::all);
    Weight h = Rational(1, 2) * nu(2, c), d2 = Weight::delta_unit(c, 2);
    EXPECT_EQ(nonstandard_of(r2), (std::set<Weight>{h, h - d2, h - Rational(2) * d2}));
    EXPECT_THROW(spinor_times_ke1(c, 3, Part::all), std::invalid_argument);
}

TEST(SpinorTimesKe1, SummandsAreCandidates) {
    for (Context c : {Context{3, 1}, Context{3, 2}, Context{5, 1}, Context{4, 1}, Context{4, 2}, Context{2, 2}}) {
        for (int k = 1; k <= 3; ++k) {
            for (Part p : c.m_odd() ? std::vector<Part>{Part::all} : std::vector<Part>{Part::plus, Part::minus}) {
                std::set<Weight> cand;
                for (const auto& x : candidates(Rational(k) * Weight::eps_unit(c, 1), p)) cand.insert(x.weight);
                for (const auto& s : spinor_times_ke1(c, k, p).summands) EXPECT_TRUE(cand.count(s.nonstandard)) << s.nonstandard.str();
            }
        }
    }
}

TEST(Candidates, DeltaShiftBounds) {
    Context c{1, 1};
    auto got = candidates(nu(1, c), Part::all);
    std::set<Weight> w;
    for (const auto& x : got) w.insert(x.weight);
    Weight d = Weight::delta_unit(c, 1);
    EXPECT_EQ(w, (std::set<Weight>{Rational(1, 2) * d, Rational(-1, 2) * d, Rational(-3, 2) * d}));
    Context e{2, 1};
    auto plus = candidates(Weight::eps_unit(e, 1), Part::plus);
    auto minus = candidates(Weight::eps_unit(e, 1), Part::minus);
    EXPECT_FALSE(plus.empty());
    EXPECT_FALSE(minus.empty());
    for (const auto& x : plus) {
        long deg = 0;
        for (long l : x.shift) deg += l;
        for (const auto& y : x.mu.eps()) deg += y.to_long();
        EXPECT_EQ(deg % 2, 0);
    }
}

TEST(Candidates, RejectsInconsistentWeight) {
    Context c{3, 1};
    EXPECT_THROW(candidates(Weight::delta_unit(c, 1), Part::all), std::invalid_argument);
}

TEST(Lemma3, FormulasMatchCasimir) {
    for (int d = 2; d <= 4; ++d)
        for (int n = 1; n <= 3; ++n)
            for (long k = 1; k <= 5; ++k)
                for (long l = 1; l <= k; ++l) {
                    auto r = lemma3_reducibility(d, n, k, l);
                    for (std::size_t i = 0; i < 6; ++i) {
                        bool uses_fourth = i == 2 || i == 4 || i == 5;
                        if (uses_fourth && !r.has_fourth) continue;
                        EXPECT_EQ(r.formula[i], r.computed[i]) << d << n << k << l << " pair " << i;
                    }
                    EXPECT_EQ(r.completely_reducible, k + l != 2 + 2 * n - 2 * d);
                    bool separated = true;
                    for (std::size_t i = 0; i < 6; ++i) {
                        bool uses_fourth = i == 2 || i == 4 || i == 5;
                        if (uses_fourth && !r.has_fourth) continue;
                        if (r.computed[i].is_zero()) separated = false;
                    }
                    EXPECT_EQ(separated, r.completely_reducible) << d << n << k << l;
                }
}

TEST(Lemma3, RejectsBadArguments) {
    EXPECT_THROW(lemma3_reducibility(1, 1, 2, 1), std::invalid_argument);
    EXPECT_THROW(lemma3_reducibility(2, 1, 1, 2), std::invalid_argument);
}

TEST(Theorem10And11, LabelsAgree) {
    for (Context c : {Context{3, 1}, Context{5, 1}, Context{5, 2}, Context{4, 1}, Context{6, 1}}) {
        const int d = c.d();
        std::vector<std::vector<long>> forms{{1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}, {3, 2, 1}};
        for (auto ks : forms) {
            if (static_cast<int>(ks.size()) > d) continue;
            int a = static_cast<int>(ks.size());
            if (!c.m_odd() && a >= d - 1) continue;
            Weight Lam = eps(c, ks) + Rational(a) * nu(c.n, c);
            std::vector<long> shifted = ks;
            for (auto& x : shifted) x += c.n;
            Weight mu = eps(c, shifted);
            EXPECT_EQ(to_nonstandard(Lam), mu);
            for (Part p : c.m_odd() ? std::vector<Part>{Part::all} : std::vector<Part>{Part::plus, Part::minus}) {
                auto t10 = theorem10_decompose(Lam, p);
                auto t11 = theorem11_decompose(mu, p);
                ASSERT_EQ(t10.summands.size(), t11.summands.size());
                for (std::size_t i = 0; i < t10.summands.size(); ++i) {
                    EXPECT_EQ(t10.summands[i].nonstandard, t11.summands[i].nonstandard) << Lam.str() << " " << i;
                    EXPECT_EQ(t10.summands[i].standard, t11.summands[i].standard) << Lam.str() << " " << i;
                }
                EXPECT_EQ(t11.summands.size(), enumerate_I(mu).size());
            }
        }
    }
}

TEST(Theorem10And11, EvenSigmaShift) {
    Context c{4, 1};
    Weight mu = eps(c, {2, 2});
    auto p = theorem11_decompose(mu, Part::plus);
    auto m = theorem11_decompose(mu, Part::minus);
    auto I = enumerate_I(mu);
    ASSERT_EQ(p.summands.size(), I.size());
    Weight dn = Weight::delta_unit(c, 1);
    for (std::size_t i = 0; i < I.size(); ++i) {
        Weight base = mu - I[i].mu;
        Rational s(sigma(I[i].mu));
        EXPECT_EQ(p.summands[i].nonstandard, base + omega_top(c) - Rational(1, 2) * nu(1, c) - s * dn);
        EXPECT_EQ(m.summands[i].nonstandard, base + omega_top(c) + nu(0, c) - Rational(3, 2) * nu(1, c) + s * dn);
    }
}

TEST(Theorem10And11, RejectsExcludedForms) {
    Context c{4, 1};
    EXPECT_THROW(theorem11_decompose(eps(c, {2, 0}), Part::plus), std::invalid_argument);
    EXPECT_THROW(theorem11_decompose(eps(c, {1, 1}), Part::plus), std::invalid_argument);
    Context o{5, 1};
    EXPECT_THROW(theorem10_decompose(eps(o, {0, 1}) + nu(1, o), Part::all), std::invalid_argument);
    EXPECT_THROW(theorem10_decompose(eps(o, {1}), Part::all), std::invalid_argument);
}
