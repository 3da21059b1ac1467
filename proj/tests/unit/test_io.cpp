#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include "sliplab/constructions.hpp"
#include "sliplab/errors.hpp"
#include "sliplab/io.hpp"

using namespace sliplab;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("sliplab_io_" + tag);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("algebra serialization round-trips byte for byte") {
    for (const Algebra& a : {u_dual_numbers(2), tn(scalar_field(2), 2), matn(scalar_field(3), 2),
                             u_dual_numbers(65521)}) {
        std::string text = serialize_algebra(a);
        Algebra back = parse_algebra_text(text);
        CHECK(back == a);
        CHECK(serialize_algebra(back) == text);  // canonical form is a fixed point
    }
}

TEST_CASE("algebra parser accepts comments, blank lines, and any mul order") {
    std::string text =
        "# scalar extension by a square-zero element\n"
        "field 2\n"
        "dim 2\n"
        "\n"
        "mul 1 1 : 0 0\n"
        "mul 1 0 : 0 1\n"
        "mul 0 1 : 0 1   # x\n"
        "mul 0 0 : 1 0\n"
        "unit 1 0\n";
    Algebra a = parse_algebra_text(text);
    CHECK(a == u_dual_numbers(2));
}

TEST_CASE("algebra parser rejects malformed input") {
    std::string good = serialize_algebra(u_dual_numbers(2));

    CHECK_THROWS_AS(parse_algebra_text("field 4\ndim 1\nunit 1\nmul 0 0 : 1\n"),
                    NonPrimeModulus);
    // a missing product entry names the gap
    CHECK_THROWS_AS(
        parse_algebra_text("field 2\ndim 2\nunit 1 0\nmul 0 0 : 1 0\nmul 0 1 : 0 1\nmul 1 0 : 0 1\n"),
        MissingEntry);
    // duplicated product entry
    CHECK_THROWS_AS(parse_algebra_text(good + "mul 0 0 : 1 0\n"), ParseError);
    // unknown directive
    CHECK_THROWS_AS(parse_algebra_text("field 2\ndim 1\nsize 3\nunit 1\nmul 0 0 : 1\n"),
                    ParseError);
    // residue outside the field
    CHECK_THROWS_AS(parse_algebra_text("field 2\ndim 1\nunit 2\nmul 0 0 : 1\n"), ParseError);
    // structurally valid file describing a non-algebra
    CHECK_THROWS_AS(parse_algebra_text("field 2\ndim 1\nunit 0\nmul 0 0 : 1\n"),
                    ValidationFailed);
    // index out of range
    CHECK_THROWS_AS(parse_algebra_text("field 2\ndim 1\nunit 1\nmul 0 0 : 1\nmul 0 1 : 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_algebra_text(""), ParseError);
}

TEST_CASE("parse errors carry one-based line numbers") {
    try {
        parse_algebra_text("field 2\ndim 1\nunit 1\nbogus\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("map files round-trip and validate entries") {
    Matrix m(PrimeField(5), 2, 3);
    m.at(0, 0) = 4;
    m.at(1, 2) = 3;
    std::string text = serialize_map(m);
    Matrix back = parse_map_text(text, PrimeField(5));
    CHECK(back == m);
    CHECK(serialize_map(back) == text);

    CHECK_THROWS_AS(parse_map_text("rows 1\ncols 2\n7 0\n", PrimeField(5)), ParseError);
    CHECK_THROWS_AS(parse_map_text("rows 2\ncols 2\n1 0\n", PrimeField(5)), ParseError);
    CHECK_THROWS_AS(parse_map_text("rows 1\ncols 2\n1\n1 0\n", PrimeField(5)), ParseError);
}

TEST_CASE("module files resolve their algebra paths relative to the module file") {
    auto dir = fresh_dir("modules");
    write_file(dir / "m2.alg", serialize_algebra(matn(scalar_field(2), 2)));
    write_file(dir / "f2.alg", serialize_algebra(scalar_field(2)));

    Bimodule cols = column_bimodule(scalar_field(2), 2);
    write_file(dir / "cols.mod", serialize_bimodule(cols, "m2.alg", "f2.alg"));
    ParsedModule parsed = parse_module_file(dir / "cols.mod");
    REQUIRE(std::holds_alternative<Bimodule>(parsed));
    CHECK(std::get<Bimodule>(parsed) == cols);

    RightModule rows = row_module(scalar_field(2), 2);
    write_file(dir / "rows.mod", serialize_right_module(rows, "m2.alg"));
    ParsedModule parsed_rows = parse_module_file(dir / "rows.mod");
    REQUIRE(std::holds_alternative<RightModule>(parsed_rows));
    CHECK(std::get<RightModule>(parsed_rows) == rows);
}

TEST_CASE("a module file without a left algebra parses as a right module") {
    std::string base = serialize_algebra(u_dual_numbers(2));
    auto dir = fresh_dir("variant");
    write_file(dir / "u2.alg", base);

    RightModule reg = regular_module(u_dual_numbers(2));
    write_file(dir / "reg.mod", serialize_right_module(reg, "u2.alg"));
    ParsedModule parsed = parse_module_file(dir / "reg.mod");
    CHECK(std::holds_alternative<RightModule>(parsed));

    Bimodule reg2 = regular_bimodule(u_dual_numbers(2));
    write_file(dir / "reg2.mod", serialize_bimodule(reg2, "u2.alg", "u2.alg"));
    ParsedModule parsed2 = parse_module_file(dir / "reg2.mod");
    CHECK(std::holds_alternative<Bimodule>(parsed2));
}

TEST_CASE("module parser rejects actions that break the axioms") {
    auto dir = fresh_dir("badmod");
    write_file(dir / "u2.alg", serialize_algebra(u_dual_numbers(2)));
    // identity must act as identity; an all-ones action table cannot
    std::string text =
        "over u2.alg\n"
        "mdim 1\n"
        "ract 0 0 : 1\n"
        "ract 0 1 : 1\n";
    write_file(dir / "bad.mod", text);
    CHECK_THROWS_AS(parse_module_file(dir / "bad.mod"), ValidationFailed);

    write_file(dir / "gap.mod", "over u2.alg\nmdim 1\nract 0 0 : 1\n");
    CHECK_THROWS_AS(parse_module_file(dir / "gap.mod"), MissingEntry);
}

TEST_CASE("missing files surface as parse errors") {
    CHECK_THROWS_AS(parse_algebra_file("/nonexistent/algebra.alg"), Error);
    CHECK_THROWS_AS(parse_module_file("/nonexistent/module.mod"), Error);
}
