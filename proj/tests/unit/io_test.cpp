#include <doctest.h>

#include <fstream>
#include <sstream>

#include <gpm/errors.hpp>
#include <gpm/fractal.hpp>
#include <gpm/io.hpp>
#include <gpm/pascal.hpp>
#include <gpm/special.hpp>
#include <gpm/zero_algebra.hpp>

#include "golden.hpp"

using namespace gpm;

TEST_CASE("matrix document JSON round trip")
{
    const std::vector<MatrixDocument> docs = {
        {"fractal", 3, Rational(-2, 7), fractal_matrix(Rational(-2, 7), 3, 16)},
        {"pascal", std::nullopt, std::nullopt, build_from_c(CSequence::exponential(), 16)},
        {"qumbral-inverse", -1, std::nullopt, q_umbral_inverse(Rational(-1), 9)},
        {"phiq", 2, Rational(1, 3), phi_q_matrix(Rational(1, 3), 2, 1)},
    };
    for (const auto &doc : docs) {
        const std::string text = to_json(doc);
        CHECK(matrix_document_from_json(text) == doc);
    }
    const std::string text = to_json(docs[0]);
    CHECK(text.rfind(R"({"kind":"fractal","q":3,"phi":"-2/7","size":16,"rows":[["1"],)", 0) == 0);
}

TEST_CASE("malformed documents")
{
    CHECK_THROWS_AS(matrix_document_from_json("{"), ParseError);
    CHECK_THROWS_AS(matrix_document_from_json(R"({"kind":"x","q":null,"phi":null,"size":2,"rows":[["1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(matrix_document_from_json(R"({"kind":"x","q":null,"phi":null,"size":2,"rows":[["1"],["1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(matrix_document_from_json(R"({"kind":"x","q":null,"phi":null,"size":1,"rows":[["1/0"]]})"),
                    ParseError);
    CHECK_THROWS_AS(matrix_document_from_json(R"({"kind":"x","q":null,"phi":null,"size":1,"rows":[[1]]})"),
                    ParseError);
}

TEST_CASE("CSV")
{
    const TriangularMatrix m = fractal_matrix(Rational(3, 2), 2, 5);
    const std::string csv = to_csv(m);
    CHECK(csv.substr(0, 12) == "1\n1,1\n1,3/2,");
    CHECK(matrix_from_csv(csv) == m);
    CHECK_THROWS_AS(matrix_from_csv("1\n1\n"), ParseError);
}

TEST_CASE("PBM export matches the golden bitmap")
{
    std::ifstream in(golden::data_path("zero_fractal_2_n64.pbm"), std::ios::binary);
    REQUIRE(in);
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(to_pbm(zero_fractal_matrix(2, 64)) == expected.str());
    CHECK(to_pbm(fractal_matrix(Rational{}, 2, 64)) == expected.str());
    CHECK(to_pbm(TriangularMatrix::identity(2)) == "P1\n2 2\n10\n01\n");
}

TEST_CASE("report and coordinate JSON")
{
    Report ok("primes");
    ok.checked = 3;
    CHECK(to_json(ok) == R"({"suite":"primes","pass":true,"counterexample":null,"checked":3})");
    Report bad("kron");
    bad.expect(false, [] { return Report::Fields{{"n", "4"}, {"m", "1"}}; });
    bad.expect(false, [] { return Report::Fields{{"n", "9"}}; });
    CHECK(to_json(bad) == R"({"suite":"kron","pass":false,"counterexample":{"n":"4","m":"1"},"checked":2})");
    CHECK(to_json(phi_coordinates(build_from_c(CSequence::exponential(), 12), 11)) ==
          R"({"2":"2","3":"3","4":"2","5":"5","6":"1","7":"7","8":"2","9":"3","10":"1","11":"11"})");
    CHECK(series_to_json(Polynomial{1, Rational(-1, 2)}, 3) == R"(["1","-1/2","0","0"])");
}
