#include <doctest.h>

#include "nsdiv/errors.hpp"
#include "nsdiv/io.hpp"
#include "support.hpp"

using namespace nsdiv;

namespace {

const char* kProduct = R"({"n": 2, "symbols": [{"name": "a"}, {"name": "b"}], "tau": [["a", "0"], ["0", "b"]]})";

std::string error_of(const std::string& doc) {
    try {
        load_problem(doc);
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("period matrix documents") {
    const auto p = load_problem(kProduct);
    CHECK(p.n == 2);
    CHECK(p.tau.has_value());
    CHECK(p.pns.rank() == 2);
    CHECK(p.warnings.empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(load_problem("{"), ParseError);
    CHECK_THROWS_AS(load_problem(R"({"n": 2, "tau": [["a"]], "extra": 1})"), ParseError);
    CHECK_THROWS_AS(load_problem(R"({"n": "2", "symbols": [], "tau": []})"), ParseError);
    CHECK_THROWS_AS(load_problem(R"({"n": 1, "symbols": [{"name": "a"}], "tau": [["a +"]]})"), ParseError);
    CHECK_THROWS_AS(load_problem(R"({"n": 1, "symbols": [{"name": "a"}], "tau": [["c"]]})"), ParseError);
    CHECK_THROWS_AS(load_problem_file("/nonexistent/file.json"), ParseError);
    CHECK(error_of(R"({"n": 1, "symbols": [{"name": "a"}], "tau": [["a +"]]})").find("tau[0][0]") != std::string::npos);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(load_problem(R"({"n": 2, "symbols": [{"name": "a"}], "tau": [["a", "1"], ["2", "a"]]})"),
                    DomainError);
    CHECK_THROWS_AS(load_problem(R"({"n": 2, "symbols": [{"name": "a"}], "tau": [["a", "1"], ["1"]]})"), DomainError);
    CHECK_THROWS_AS(load_problem(R"({"n": 0, "symbols": [], "tau": []})"), DomainError);
}

TEST_CASE("polarized-ns round trip") {
    const auto pns = testing::family_f3_ns();
    const std::string doc = format_ns(pns, Format::json);
    const auto p = load_problem(doc);
    CHECK_FALSE(p.tau.has_value());
    CHECK(same_lattice(p.pns.ns_basis(), pns.ns_basis()));
    CHECK(p.pns.quotient_basis() == pns.quotient_basis());
    CHECK(format_ns(p.pns, Format::json) == doc);
}

TEST_CASE("record formats") {
    const PolarizedContext ctx(3);
    const auto pns = testing::family_f3_ns();
    const auto rs = enumerate(ctx, pns, SearchQuery{3, 6, {}});
    const std::string csv = format_records(pns, rs, Format::csv);
    CHECK(csv.rfind("coords,divisor_degree,complement_degree,q_2,q_3\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 14);
    const std::string lines = format_records(pns, rs, Format::json);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 13);
    const std::string table = format_table(pns, rs, Format::text);
    CHECK(table.find("(Z.Theta^2)") != std::string::npos);
    CHECK(table.find("(E.Theta)") != std::string::npos);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS(parse_format("yaml"));
}

TEST_CASE("q form output") {
    const auto q = q_symbolic(3, 2);
    CHECK(format_qform(3, 2, q, Format::text).find("12*a12*a45") != std::string::npos);
}

}  // TEST_SUITE
