#include "doctest.h"

#include <functional>

#include "symcanon/io.hpp"
#include "symcanon/paramgen.hpp"

using namespace symcanon;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

std::string error_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ContractError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("tableau JSON round trip") {
    for (auto K : {F, FieldSpec::rationals()}) {
        SymmetricTableau T = realize(sample(3, K));
        Json j = tableau_to_json(T);
        CHECK(j["n"] == 2);
        SymmetricTableau U = tableau_from_json(parse_json(j.dump()));
        CHECK(U == T);
        CHECK(U.ring()->field() == K);
        CHECK(tableau_to_json(U).dump() == j.dump());
    }
    SymmetricTableau T10 = sample_k10(2, F);
    CHECK(tableau_from_json(tableau_to_json(T10)) == T10);
}

TEST_CASE("reader errors carry coordinates") {
    std::string e = error_of([] { parse_json("{\"n\": 2,\n  \"alpha\": [1, }", "in.json"); });
    CHECK(contains(e, "line 2"));
    CHECK(contains(e, "column"));
    Json j = tableau_to_json(realize(sample(1, F)));
    Json bad = j;
    bad["alpha"][1][2] = "x0^2";
    CHECK(contains(error_of([&] { tableau_from_json(bad); }), "alpha row 2, column 3"));
    bad = j;
    bad["beta"][0][1] = "x0 + ";
    CHECK(contains(error_of([&] { tableau_from_json(bad); }), "beta row 1, column 2"));
    bad = j;
    bad["alpha"].erase(1);
    CHECK(contains(error_of([&] { tableau_from_json(bad); }), "expected 3 rows"));
    bad = j;
    bad.erase("ring");
    CHECK(contains(error_of([&] { tableau_from_json(bad); }), "missing \"ring\""));
    bad = j;
    bad["ring"]["field"] = "p:9";
    CHECK_THROWS_AS(tableau_from_json(bad), ContractError);
}

TEST_CASE("report JSON round trip and rendering") {
    VerificationReport r;
    r.n = 2;
    r.checks = {{"symmetry", CheckStatus::pass, ""},
                {"acyclicity", CheckStatus::pass, "rank d1 = 3"},
                {"Ann_𝒜(𝓡) prime", CheckStatus::assumed, "not checked"},
                {"rational double points on X", CheckStatus::assumed, ""}};
    r.overall = true;
    VerificationReport back = report_from_json(parse_json(report_to_json(r).dump()));
    CHECK(back.n == 2);
    CHECK(back.overall);
    REQUIRE(back.checks.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(back.checks[i].name == r.checks[i].name);
        CHECK(back.checks[i].status == r.checks[i].status);
        CHECK(back.checks[i].detail == r.checks[i].detail);
    }
    std::string text = render_report(r, ReportFormat::text);
    CHECK(contains(text, "OVERALL: PASS (2 assumed)"));
    CHECK(contains(text, "Ann_𝒜(𝓡) prime: ASSUMED"));
    CHECK(contains(text, "acyclicity: PASS"));
    CHECK(parse_json(render_report(r, ReportFormat::json)) == report_to_json(r));
    for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped, CheckStatus::assumed})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(status_from_string("maybe"), ContractError);
}

TEST_CASE("params, moves and matrices round trip") {
    ParameterPoint p = sample(5, F);
    CHECK(params_from_json(parse_json(params_to_json(p).dump())) == p);
    std::vector<OpMove> moves{OpMove::swap(0, 2), OpMove::rotate(1), OpMove::transfer(7, 1, 2),
                              OpMove::add_col_same(3, 0, true), OpMove::add_col_pair(-2, 2, 0, false)};
    auto back = moves_from_json(moves_to_json(moves), F);
    SymmetricTableau T = realize(p);
    CHECK(apply_ops(T, back) == apply_ops(T, moves));
    // lambdas come back reduced into the field
    CHECK(moves_to_json(moves_from_json(moves_to_json(back), F)).dump() == moves_to_json(back).dump());
    CHECK(back[4].lambda == 32001);
    Matrix m = Matrix::from_rows(FieldSpec::rationals(), {{1, mpq_class(1, 2)}, {-3, 0}});
    CHECK(matrix_from_json(matrix_to_json(m), FieldSpec::rationals()) == m);
    CHECK_THROWS_AS(move_from_json(Json{{"kind", "teleport"}}, F), ContractError);
}
