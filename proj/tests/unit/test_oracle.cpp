#include "doctest.h"

#include <set>
#include <sstream>

#include "qforest/oracle.hpp"
#include "qforest/recognize.hpp"

using namespace qforest;

TEST_CASE("enumerate_graphs counts labeled graphs") {
    auto count = [](int n) {
        long long c = 0;
        enumerate_graphs(n, [&](const Graph&) {
            ++c;
            return true;
        });
        return c;
    };
    CHECK(count(2) == 2);
    CHECK(count(3) == 8);
    CHECK(count(4) == 64);
    CHECK_THROWS_AS(count(8), ResourceLimitError);
}

TEST_CASE("enumerate_quasi_forests membership on tiny scopes") {
    auto collect = [](const EnumerationScope& scope) {
        std::set<std::vector<Face>> keys;
        enumerate_quasi_forests(scope, [&](const SimplicialComplex& c) {
            keys.insert(c.facets());
            return true;
        });
        return keys;
    };

    const auto two = collect({2, 2, std::nullopt});
    CHECK(two.contains({Face{1}, Face{2}}));
    CHECK(two.contains({Face{1, 2}}));
    CHECK(two.size() == 4); // {1}, {2}, {1 2}, {1},{2}

    const auto three = collect({3, 2, std::nullopt});
    CHECK(three.contains({Face{1, 2}, Face{2, 3}}));

    const auto three_full = collect({3, 3, std::nullopt});
    CHECK_FALSE(three_full.contains({Face{1, 2}, Face{1, 3}, Face{2, 3}}));
}

TEST_CASE("every enumerated complex passes leaf_order") {
    enumerate_quasi_forests({4, 4, std::nullopt}, [](const SimplicialComplex& c) {
        CHECK(leaf_order(c).is_quasi_forest);
        return true;
    });
}

TEST_CASE("pure quasi-forest f-vectors on 2 vertices") {
    std::set<std::vector<long long>> pure_fvectors;
    enumerate_quasi_forests({2, 5, std::nullopt}, [&](const SimplicialComplex& c) {
        if (c.is_pure()) pure_fvectors.insert(f_vector(c).entries);
        return true;
    });
    CHECK(pure_fvectors ==
          std::set<std::vector<long long>>{{1}, {2}, {2, 1}});
}

TEST_CASE("max_dimension caps facet cardinality") {
    enumerate_quasi_forests({4, 3, 1}, [](const SimplicialComplex& c) {
        CHECK(c.dimension() <= 1);
        return true;
    });
}

TEST_CASE("two runs yield identical streams") {
    std::vector<std::vector<Face>> first, second;
    const EnumerationScope scope{4, 3, std::nullopt};
    enumerate_quasi_forests(scope, [&](const SimplicialComplex& c) {
        first.push_back(c.facets());
        return true;
    });
    enumerate_quasi_forests(scope, [&](const SimplicialComplex& c) {
        second.push_back(c.facets());
        return true;
    });
    CHECK(first == second);
}

TEST_CASE("scope caps are enforced") {
    CHECK_THROWS_AS(all_quasi_forests({9, 3, std::nullopt}), ResourceLimitError);
    CHECK_THROWS_AS(all_quasi_forests({3, 7, std::nullopt}), ResourceLimitError);
}

TEST_CASE("cross_validate passes on a small scope") {
    const ValidationReport report = cross_validate({4, 4, std::nullopt});
    for (const PropertyResult& p : report.properties) {
        INFO(p.name, ": ", p.counterexample);
        CHECK(p.passed);
        CHECK(p.instances > 0);
    }
    CHECK(report.all_passed());

    std::ostringstream out;
    write_report(out, report);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("qf-fvector-set-matches-suffix-sum-test") != std::string::npos);
}
