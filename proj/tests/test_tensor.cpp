#include "osprep/decomp.hpp"
#include "osprep/tensor.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace osprep;

namespace {

Weight ke1(Context c, int k) {
    if (c.d() == 0) return nu(k, c);
    return Rational(k) * Weight::eps_unit(c, 1);
}

std::set<Weight> weights_of(const DecompositionResult& r) {
    std::set<Weight> s;
    for (const auto& x : r.summands) s.insert(x.nonstandard);
    return s;
}

}  // namespace

TEST(Tensor, TopIsPrimitive) {
    for (Context c : {Context{1, 1}, Context{2, 1}, Context{3, 1}, Context{4, 1}}) {
        auto K = finite_module(ke1(c, 1), Convention::nonstandard);
        for (Part p : c.m_odd() ? std::vector<Part>{Part::all} : std::vector<Part>{Part::plus, Part::minus}) {
            TensorProduct W(c, p, K);
            EXPECT_EQ(W.dim(W.top()), 1u);
            EXPECT_EQ(W.primitive_space(W.top()).size(), 1u);
            EXPECT_TRUE(W.lowerable_space(W.top()).empty());
            EXPECT_EQ(W.spinor_top(), spinor_highest_weight(c, p));
        }
    }
}

TEST(Tensor, LowerableAndPrimitiveSplitEachWeightSpace) {
    for (Context c : {Context{1, 1}, Context{2, 1}, Context{3, 1}, Context{3, 2}}) {
        auto K = finite_module(ke1(c, 1), Convention::nonstandard);
        TensorProduct W(c, c.m_odd() ? Part::all : Part::plus, K);
        for (const auto& row : primitive_report(W, 4)) {
            EXPECT_EQ(row.dim_primitive + row.dim_lowerable, row.dim_w) << row.weight.str();
            EXPECT_LE(row.dim_primitive, 1u) << row.weight.str();
        }
    }
}

TEST(Tensor, MembershipOfGeneratorInItself) {
    Context c{3, 1};
    auto K = finite_module(ke1(c, 2), Convention::nonstandard);
    TensorProduct W(c, Part::all, K);
    auto v = W.primitive_space(W.top());
    ASSERT_EQ(v.size(), 1u);
    EXPECT_TRUE(W.membership(W.top(), v[0], W.top(), v[0]));
    auto Y = W.op_matrix(OpKind::Y, 0, W.top());
    Weight below = W.top() - W.simple_root(0);
    EXPECT_TRUE(W.membership(below, Y.apply(v[0]), W.top(), v[0]));
}

TEST(Tensor, MembershipRejectsNonPrimitiveGenerator) {
    Context c{3, 1};
    auto K = finite_module(ke1(c, 1), Convention::nonstandard);
    TensorProduct W(c, Part::all, K);
    Weight below = W.top() - W.simple_root(0);
    auto Y = W.op_matrix(OpKind::Y, 0, W.top());
    TVec top(1);
    top[0] = FieldScalar(1);
    auto y = Y.apply(top);
    EXPECT_THROW(W.membership(below, y, below, y), std::invalid_argument);
}

TEST(Tensor, Osp12TimesNatural) {
    Context c{1, 1};
    auto K = finite_module(nu(1, c), Convention::nonstandard);
    EXPECT_EQ(K.total_dim(), 3u);
    TensorProduct W(c, Part::all, K);
    auto rep = brute_force_decompose(W, 6);
    Weight d1 = Weight::delta_unit(c, 1);
    std::set<Weight> want{Rational(1, 2) * d1, Rational(-1, 2) * d1, Rational(-3, 2) * d1};
    EXPECT_EQ(weights_of(rep.result), want);
    EXPECT_EQ(rep.result.shape, Shape::completely_reducible);
    EXPECT_TRUE(rep.character_match);
    EXPECT_TRUE(rep.theorem4_holds);
    EXPECT_EQ(weights_of(spinor_times_ke1(c, 1, Part::all)), want);
}

TEST(Tensor, Osp32TwoSummands) {
    Context c{3, 1};
    auto K = finite_module(ke1(c, 2), Convention::nonstandard);
    TensorProduct W(c, Part::all, K);
    auto rep = brute_force_decompose(W, 6);
    Weight e = Weight::eps_unit(c, 1), d = Weight::delta_unit(c, 1);
    std::set<Weight> want{Rational(5, 2) * e - Rational(1, 2) * d, Rational(3, 2) * e - Rational(1, 2) * d};
    EXPECT_EQ(weights_of(rep.result), want);
    EXPECT_TRUE(rep.character_match);
    EXPECT_EQ(weights_of(spinor_times_ke1(c, 2, Part::all)), want);
}

TEST(Tensor, Osp22ExceptionalChain) {
    Context c{2, 1};
    auto K = finite_module(ke1(c, 1), Convention::nonstandard);
    for (Part p : {Part::plus, Part::minus}) {
        TensorProduct W(c, p, K);
        auto rep = brute_force_decompose(W, 6);
        EXPECT_EQ(rep.result.shape, Shape::chain) << to_string(p);
        ASSERT_EQ(rep.primitives.size(), 2u) << to_string(p);
        EXPECT_TRUE(rep.theorem4_holds);
        auto closed = spinor_times_ke1(c, 1, p);
        ASSERT_TRUE(closed.chain.has_value());
        ASSERT_TRUE(rep.result.chain.has_value());
        EXPECT_EQ(rep.result.chain->upper, closed.chain->upper);
        EXPECT_EQ(rep.result.chain->inner, closed.chain->inner);
    }
}

TEST(Tensor, Osp22GenericCompletelyReducible) {
    Context c{2, 1};
    auto K = finite_module(ke1(c, 2), Convention::nonstandard);
    for (Part p : {Part::plus, Part::minus}) {
        TensorProduct W(c, p, K);
        auto rep = brute_force_decompose(W, 6);
        EXPECT_EQ(rep.result.shape, Shape::completely_reducible);
        EXPECT_TRUE(rep.character_match);
        EXPECT_EQ(weights_of(rep.result), weights_of(spinor_times_ke1(c, 2, p)));
    }
}

TEST(Witness, CoefficientsAndMembership) {
    for (auto [m, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{4, 1}, std::pair{4, 2}}) {
        Context c{m, n};
        for (int k = 1; k <= 3; ++k) {
            auto K = finite_module(ke1(c, k), Convention::nonstandard);
            TensorProduct W(c, Part::plus, K);
            auto wit = theorem8_witness(W, k);
            EXPECT_EQ(wit.weight, Rational(k - 1) * Weight::eps_unit(c, 1) + spinor_highest_weight(c, Part::minus));
            ASSERT_EQ(wit.primitives.size(), 1u);
            ASSERT_TRUE(wit.coefficients.has_value()) << m << " " << n << " " << k;
            for (std::size_t j = 0; j < wit.predicted.size(); ++j)
                EXPECT_EQ((*wit.coefficients)[j], FieldScalar(wit.predicted[j])) << m << " " << n << " " << k << " j=" << j + 1;
            Rational alt;
            for (std::size_t j = 0; j < wit.predicted.size(); ++j) alt += (j % 2 == 0 ? Rational(-1) : Rational(1)) * wit.predicted[j];
            TVec top(1);
            top[0] = FieldScalar(1);
            bool member = W.membership(wit.weight, wit.primitives[0], W.top(), top);
            EXPECT_EQ(member, alt.is_zero()) << m << " " << n << " " << k;
            EXPECT_EQ(member, k + c.d() == n + 1) << m << " " << n << " " << k;
        }
    }
}
