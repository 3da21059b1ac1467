#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sliplab/config.hpp"
#include "sliplab/constructions.hpp"

namespace sliplab {

struct CorpusAlgebra {
    std::string name;
    Algebra algebra;
};

struct CorpusTriangle {
    std::string name;
    Bimodule bimodule;
    TriangularConstruction tri;
};

// Fixed family of test algebras over GF(2) and GF(3): scalar fields, dual
// numbers, full and block upper triangular matrix algebras, direct products,
// and triangular extensions of assorted bimodules.
struct Corpus {
    std::vector<CorpusAlgebra> algebras;
    std::vector<CorpusTriangle> triangles;

    // Plain algebras followed by the triangular ones, under their names.
    std::vector<CorpusAlgebra> all_algebras() const;
    const Algebra& find(std::string_view name) const;
    const CorpusTriangle& triangle(std::string_view name) const;
};

Corpus build_corpus();

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;          // deterministic: never contains timings
    double elapsed_seconds = 0;  // wall time, excluded from serialization
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_pass() const;
};

// Runs the full verification suite (criteria 1..14) over a fresh corpus.
SuiteResult run_suite(const RunConfig& cfg = {});

// Deterministic renderings (byte-identical across runs); timings excluded.
std::string suite_text(const SuiteResult& r);
std::string suite_json_text(const SuiteResult& r);

}  // namespace sliplab
