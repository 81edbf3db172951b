#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fockalg/partitions.hpp"

using namespace fockalg;

namespace {

// parts bounded by k
long brute_count(int n, int k) {
    if (n == 0) return 1;
    long c = 0;
    for (int part = std::min(n, k); part >= 1; --part) c += brute_count(n - part, part);
    return c;
}

Z factorial(int n) {
    Z f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("partition counts") {
    REQUIRE(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    for (int n = 0; n <= 10; ++n) CHECK(partition_count(n) == brute_count(n, n));
}

TEST_CASE("partitions are distinct and well formed") {
    for (int n = 1; n <= 8; ++n) {
        std::set<Partition> seen;
        for (const auto& l : partitions_of(n)) {
            CHECK(size(l) == n);
            CHECK(std::is_sorted(l.rbegin(), l.rend()));
            seen.insert(l);
        }
        CHECK(seen.size() == partitions_of(n).size());
        CHECK(partitions_of(n).front() == Partition{n});
    }
}

TEST_CASE("multipartitions") {
    // generating function (prod 1/(1-x^k))^2 at x^3: 10
    CHECK(multipartitions_of(3, 2).size() == 10);
    CHECK(multipartitions_of(2, 3).size() == 9);
    for (const auto& mp : multipartitions_of(4, 2)) CHECK(degree(mp) == 4);
}

TEST_CASE("hook data") {
    auto h = hook_data({1}, 1, 1);
    CHECK(h.arm == 0);
    CHECK(h.leg == 0);
    CHECK(h.content == 0);
    h = hook_data({2}, 1, 1);
    CHECK(h.arm == 1);
    CHECK(h.leg == 0);
    h = hook_data({3, 1}, 1, 1);
    CHECK(h.arm == 2);
    CHECK(h.leg == 1);
    CHECK(h.content == 0);
    CHECK(hook_data({3, 1}, 2, 1).content == -1);
    CHECK(hook_data({3, 1}, 1, 3).content == 2);
}

TEST_CASE("conjugation and dominance") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : partitions_of(n)) {
            CHECK(conjugate(conjugate(l)) == l);
            for (const auto& m : partitions_of(n))
                if (dominates(l, m)) CHECK(dominates(conjugate(m), conjugate(l)));
        }
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK_FALSE(dominates({3, 3}, {4, 1, 1}));
    CHECK_FALSE(dominates({4, 1, 1}, {3, 3}));
}

TEST_CASE("z_lambda and standard tableaux") {
    CHECK(z_lambda({2, 1, 1}) == 4);
    CHECK(z_lambda({1, 1, 1}) == 6);
    for (int n = 1; n <= 7; ++n) {
        Z conj_sum = 0, sq = 0;
        for (const auto& l : partitions_of(n)) {
            conj_sum += factorial(n) / z_lambda(l);
            Z f = standard_tableaux_count(l);
            sq += f * f;
        }
        CHECK(conj_sum == factorial(n));
        CHECK(sq == factorial(n));
    }
    CHECK(standard_tableaux_count({3, 2}) == 5);
}
