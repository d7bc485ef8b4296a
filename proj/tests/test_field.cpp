#include <doctest.h>

#include "altramsey/field.hpp"
#include "altramsey/randgen.hpp"

using namespace altramsey;

TEST_CASE("primality check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));   // Carmichael
    CHECK_FALSE(is_prime(1ull << 20));
    CHECK_THROWS_AS(FieldCtx(15), NotPrime);
    CHECK_THROWS_AS(FieldCtx(0), NotPrime);
}

TEST_CASE("basic arithmetic") {
    FieldCtx f3(3);
    CHECK(f3.add(Felt{2}, Felt{2}) == Felt{1});  // 4 mod 3
    CHECK(f3.inv(Felt{2}) == Felt{2});

    FieldCtx f5(5);
    CHECK(f5.mul(Felt{3}, Felt{4}) == Felt{2});  // 12 mod 5
    CHECK(f5.inv(Felt{2}) == Felt{3});           // 2*3 = 6 = 1

    FieldCtx f2(2);
    CHECK(f2.neg(Felt{1}) == Felt{1});

    FieldCtx f7(7);
    CHECK(f7.inv(Felt{1}) == Felt{1});
    CHECK_THROWS_AS(f7.inv(Felt{0}), ZeroInverse);
}

TEST_CASE("field axioms on random elements") {
    for (uint32_t p : {2u, 3u, 5u, 2147483629u}) {
        FieldCtx f(p);
        CounterRng rng(0xF1E1D, p);
        for (int i = 0; i < 200; ++i) {
            Felt a = rng.uniform(f, 3 * i);
            Felt b = rng.uniform(f, 3 * i + 1);
            Felt c = rng.uniform(f, 3 * i + 2);
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == f.zero());
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
            if (!a.is_zero()) {
                CHECK(f.mul(a, f.inv(a)) == f.one());
                CHECK(f.inv(f.inv(a)) == a);
            }
        }
    }
}
