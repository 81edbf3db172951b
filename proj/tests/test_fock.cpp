#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockalg/fock.hpp"

using namespace fockalg;

namespace {

Params fixed_params(int r) {
    Params p;
    p.t1 = Q(3, 7);
    p.t2 = Q(-5, 11);
    for (int i = 0; i < r; ++i) p.a.push_back(Q(2 * i + 1, 3));
    p.q = Q(2, 9);
    return p;
}

bool is_power_of_two(Q x) {
    if (x < 0) x = -x;
    if (x.get_den() != 1) return false;
    Z n = x.get_num();
    while (n > 1 && n % 2 == 0) n /= 2;
    return n == 1;
}

}  // namespace

TEST_CASE("creation and annihilation on a single factor") {
    Params p = fixed_params(1);
    auto vac = FockVector<Q>::vacuum(1);
    auto p1 = FockVector<Q>::basis({{1}});
    CHECK(apply_alpha(p, 0, -1, Q(1), vac) == p1);
    CHECK(apply_alpha(p, 0, 1, p.pt(), p1) == vac.scaled(Q(-1)));
    // alpha_2(1) p1 p2 = 2 tau(1) p1
    auto v = FockVector<Q>::basis({{2, 1}});
    CHECK(apply_alpha(p, 0, 2, Q(1), v) == p1.scaled(Q(-2) / (p.t1 * p.t2)));
    CHECK(apply_alpha(p, 0, 3, Q(1), v).is_zero());
    CHECK_THROWS(apply_alpha(p, 1, 1, Q(1), v));
}

TEST_CASE("zero modes") {
    Params p = fixed_params(1);
    p.a[0] = 3;
    CHECK(zero_mode(p, 0, p.pt()) == 3);
    p.a[0] = 0;
    CHECK(zero_mode(p, 0, Q(1)) == 0);
    p.a[0] = p.t1 * p.t2;
    CHECK(zero_mode(p, 0, Q(1)) == 1);
}

TEST_CASE("plus/minus change of basis") {
    CHECK(pm_change_of_basis(0, PmDirection::from_pm) == Matrix<Q>::identity(1));
    Matrix<Q> M1 = pm_change_of_basis(1, PmDirection::from_pm);
    const BasisIndex& b = basis_index(1, 2);
    int first = b.index.at(key_of({{1}, {}})), second = b.index.at(key_of({{}, {1}}));
    // columns: (alpha+_{-1} vac, alpha-_{-1} vac)
    int plus = first, minus = second;
    CHECK(M1(first, plus) == 1);
    CHECK(M1(second, plus) == 1);
    CHECK(M1(first, minus) == 1);
    CHECK(M1(second, minus) == -1);
    for (int n = 0; n <= 4; ++n) {
        Matrix<Q> F = pm_change_of_basis(n, PmDirection::from_pm), T = pm_change_of_basis(n, PmDirection::to_pm);
        CHECK(F * T == Matrix<Q>::identity(F.rows));
    }
    Q d = determinant(pm_change_of_basis(3, PmDirection::from_pm));
    CHECK(pm_change_of_basis(3, PmDirection::from_pm).rows == 10);
    CHECK(is_power_of_two(d));
}

TEST_CASE("operator matrices") {
    Params p = fixed_params(1);
    auto id = GradedOperator<Q>::identity(1);
    for (int n = 0; n <= 5; ++n) CHECK(id.matrix(n) == Matrix<Q>::identity(partition_count(n)));
    auto create = GradedOperator<Q>::from(alpha_op<Q>(1, p.tau1(), single_factor(0), -1, Q(1)));
    Matrix<Q> col = create.matrix(0);
    CHECK(col.rows == 1);
    CHECK(col.cols == 1);
    CHECK(col(0, 0) == 1);
    auto ann = GradedOperator<Q>::from(alpha_op<Q>(1, p.tau1(), single_factor(0), 1, Q(1)));
    CHECK_THROWS(ann.matrix(0));
}

TEST_CASE("Heisenberg relation on a basis") {
    Params p = fixed_params(2);
    for (int k = 1; k <= 3; ++k) {
        auto a = GradedOperator<Q>::from(alpha_op<Q>(2, p.tau1(), single_factor(1), k, Q(1)));
        auto b = GradedOperator<Q>::from(alpha_op<Q>(2, p.tau1(), single_factor(1), -k, p.pt()));
        Matrix<Q> c = (a * b).matrix(3) - (b * a).matrix(3);
        CHECK(c == Matrix<Q>::identity(c.rows).scaled(Q(k) * p.tau(p.pt())));
    }
}

TEST_CASE("basis bookkeeping") {
    for (int n = 0; n <= 4; ++n) {
        const BasisIndex& b = basis_index(n, 2);
        CHECK(b.basis.size() == multipartitions_of(n, 2).size());
        for (size_t i = 0; i < b.keys.size(); ++i) {
            CHECK(key_degree(b.keys[i], 2) == n);
            CHECK(multipartition_of(b.keys[i], 2) == b.basis[i]);
        }
    }
}
