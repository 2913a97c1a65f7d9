#include <gtest/gtest.h>

#include "cweg/selftest.hpp"

TEST(PropertySuite, AllPass) {
    for (unsigned seed : {1u, 2u}) {
        auto results = cweg::run_property_suite(seed);
        EXPECT_GE(results.size(), 15u);
        for (const auto& r : results) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
    }
}
