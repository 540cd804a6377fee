#include "doctest.h"
#include "zenofront/model.hpp"

using namespace zenofront;

namespace {

Instance raw3() {
    Instance in;
    in.n = 3;
    in.t = 3;
    in.p = 2;
    in.d = {1, 2, 3};
    in.dbar = {1, 2, 3};
    in.c = {1, 2, 3};
    return in;
}

}  // namespace

TEST_CASE("validate merges duplicate cities") {
    Instance in;
    in.n = 2;
    in.t = 2;
    in.p = 1;
    in.d = {1, 1};
    in.dbar = {1, 1};
    in.c = {1, 1};
    auto v = validate(in);
    CHECK(v.n == 1);
    CHECK(v.symmetric);
}

TEST_CASE("validate accepts the linear symmetric family") {
    auto v = validate(raw3());
    CHECK(v.n == 3);
    CHECK(v.symmetric);
    CHECK(v.validated);
}

TEST_CASE("validate rejects t < p") {
    Instance in;
    in.n = 1;
    in.t = 1;
    in.p = 2;
    in.d = {1};
    in.dbar = {1};
    in.c = {1};
    CHECK_THROWS_AS(validate(in), ValidationError);
}

TEST_CASE("validate rejects negative and non-finite values") {
    auto in = raw3();
    in.d[1] = -1;
    CHECK_THROWS_AS(validate(in), ValidationError);
    in = raw3();
    in.c[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(in), ValidationError);
    in = raw3();
    in.dbar[2] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate(in), ValidationError);
}

TEST_CASE("validate is idempotent") {
    Instance in;
    in.n = 4;
    in.t = 3;
    in.p = 2;
    in.d = {1, 2, 2, 1};
    in.dbar = {3, 1, 1, 3};
    in.c = {5, 2, 2, 5};
    auto once = validate(in);
    auto twice = validate(once);
    CHECK(once.n == 2);
    CHECK(twice.n == once.n);
    CHECK(twice.d == once.d);
    CHECK(twice.dbar == once.dbar);
    CHECK(twice.c == once.c);
}

TEST_CASE("symmetry flag tracks d versus dbar") {
    auto in = raw3();
    in.dbar[1] = 2.5;
    CHECK_FALSE(validate(in).symmetric);
}

TEST_CASE("triangle check: equilateral central matrix is clean") {
    auto in = raw3();
    in.central = std::vector<std::vector<double>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    in.d = {1, 1, 1.5};
    in.dbar = {1, 1.2, 1};
    in.c = {1, 2, 3};
    auto violations = check_triangle(validate(in));
    CHECK(violations.empty());
}

TEST_CASE("triangle check flags a too-long central hop") {
    Instance in;
    in.n = 2;
    in.t = 2;
    in.p = 1;
    in.d = {1, 1};
    in.dbar = {1, 2};
    in.c = {1, 2};
    in.central = std::vector<std::vector<double>>{{0, 3}, {3, 0}};
    auto violations = check_triangle(validate(in));
    CHECK_FALSE(violations.empty());
}

TEST_CASE("triangle check accepts Euclidean embeddings") {
    // Cities at plane points; I at origin, G at (10, 0).
    const double pts[][2] = {{2, 1}, {5, -2}, {7, 3}};
    Instance in;
    in.n = 3;
    in.t = 3;
    in.p = 2;
    auto dist = [](double ax, double ay, double bx, double by) {
        return std::hypot(ax - bx, ay - by);
    };
    std::vector<std::vector<double>> m(3, std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i) {
        in.d.push_back(dist(0, 0, pts[i][0], pts[i][1]));
        in.dbar.push_back(dist(10, 0, pts[i][0], pts[i][1]));
        in.c.push_back(i + 1.0);
        for (int j = 0; j < 3; ++j)
            m[i][j] = dist(pts[i][0], pts[i][1], pts[j][0], pts[j][1]);
    }
    in.central = m;
    CHECK(check_triangle(validate(in)).empty());
}

TEST_CASE("pattern durations and legs honor overrides") {
    auto in = validate(raw3());
    CHECK(pattern_duration(in, 0, PatternKind::A) == doctest::Approx(2));
    CHECK(pattern_duration(in, 2, PatternKind::B) == doctest::Approx(6));
    in.overrides[1][PatternKind::Bbar] = {9.0, 4.0};
    CHECK(pattern_duration(in, 1, PatternKind::Bbar) == doctest::Approx(9));
    CHECK(pattern_cost(in, 1, PatternKind::Bbar) == doctest::Approx(4));
    auto [out_leg, in_leg] = pattern_legs(in, 1, PatternKind::Bbar);
    CHECK(out_leg == doctest::Approx(4.5));
    CHECK(in_leg == doctest::Approx(4.5));
    // Unoverridden kinds fall back to defaults.
    CHECK(pattern_duration(in, 1, PatternKind::B) == doctest::Approx(4));
}
