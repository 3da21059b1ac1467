#include "sliplab/suite.hpp"

#include <chrono>
#include <json.hpp>

#include "sliplab/errors.hpp"
#include "sliplab/slip.hpp"
#include "sliplab/zpd.hpp"

namespace sliplab {
namespace {

std::string q(std::string_view s) { return std::string(s); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

// --- 1: the dual-number algebras are the canonical non-slip witnesses -------

Outcome crit_u_algebra(const RunConfig& cfg) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const std::string tag = "u(" + std::to_string(p) + ")";
        Algebra u = u_dual_numbers(p);
        SlipReport r = is_slip(u, cfg);
        if (r.is_slip || r.multiplier_dim != 2 || r.lip_dim != 3)
            return {false, tag + ": expected multiplier_dim=2, lip_dim=3, slip=false; got " +
                               std::to_string(r.multiplier_dim) + ", " +
                               std::to_string(r.lip_dim) + ", " +
                               (r.is_slip ? "true" : "false")};
        if (!r.witness) return {false, tag + ": no witness produced"};
        if (!lip_check_full(u, *r.witness, cfg.enumeration_cap))
            return {false, tag + ": witness does not preserve every left ideal"};
        if (is_left_multiplier_map(u, *r.witness))
            return {false, tag + ": witness is a left multiplier"};
    }
    return {true,
            "u(p) for p in {2,3,5}: multiplier_dim=2, lip_dim=3, witness map preserves every "
            "left ideal yet is no left multiplier"};
}

// --- 2: full matrix algebras are slip and zero-product determined -----------

Outcome crit_matrix_algebras(const Corpus& c, const RunConfig& cfg) {
    for (std::string_view name : {"m2_f2", "m3_f2", "m2_f3", "m2_u2"}) {
        const Algebra& a = c.find(name);
        SlipReport s = is_slip(a, cfg);
        if (!s.is_slip) return {false, q(name) + ": not slip"};
        ZpdReport z = is_zpd(a, cfg);
        if (!z.is_zpd)
            return {false, q(name) + ": not zero-product determined (span " +
                               std::to_string(z.span_dim) + " < kernel " +
                               std::to_string(z.kernel_dim) + ")"};
    }
    return {true, "m2_f2, m3_f2, m2_f3, m2_u2: all slip and zero-product determined"};
}

// --- 3: zero-product determined implies slip across the corpus --------------

Outcome crit_zpd_implies_slip(const Corpus& c, const RunConfig& cfg) {
    std::size_t checked = 0, zpd_count = 0;
    for (const CorpusAlgebra& entry : c.all_algebras()) {
        if (entry.algebra.dim > 14) continue;
        ++checked;
        ZpdReport z = is_zpd(entry.algebra, cfg);
        if (!z.is_zpd) continue;
        ++zpd_count;
        if (!is_slip(entry.algebra, cfg).is_slip)
            return {false, entry.name + ": zero-product determined but not slip"};
    }
    if (checked < 30)
        return {false, "corpus too small: only " + std::to_string(checked) +
                           " algebras of dim <= 14"};
    return {true, "checked " + std::to_string(checked) + " corpus algebras (dim <= 14): " +
                      std::to_string(zpd_count) + " zero-product determined, each slip"};
}

// --- 4: a slip algebra that is not zero-product determined ------------------

Outcome crit_slip_not_zpd(const Corpus& c, const RunConfig& cfg) {
    const CorpusTriangle& t = c.triangle("tri_u2_u2_f2");
    SlipReport s = is_slip(t.tri.algebra, cfg);
    if (!s.is_slip) return {false, t.name + ": expected slip"};
    ZpdReport z = is_zpd(t.tri.algebra, cfg);
    if (z.is_zpd) return {false, t.name + ": expected not zero-product determined"};
    return {true, "dim-5 triangular algebra over u(2): slip holds while the zero-product span "
                      "stops at " +
                      std::to_string(z.span_dim) + " of kernel dimension " +
                      std::to_string(z.kernel_dim)};
}

// --- 5: slip on a triangular algebra forces the corner conditions -----------

Outcome crit_necessity(const Corpus& c, const RunConfig& cfg) {
    std::size_t slip_count = 0;
    for (const CorpusTriangle& t : c.triangles) {
        if (!is_slip(t.tri.algebra, cfg).is_slip) continue;
        ++slip_count;
        const Algebra& b = t.bimodule.right_algebra;
        if (!is_slip(b, cfg).is_slip)
            return {false, t.name + ": triangular algebra slip but its right corner is not"};
        if (!local_equals_multiplier(b, t.bimodule.right_module(), cfg))
            return {false, t.name + ": triangular algebra slip but some local multiplier into "
                               "the bimodule is no multiplier"};
    }
    if (slip_count == 0) return {false, "no slip triangular algebra found in the corpus"};
    return {true, std::to_string(slip_count) + " of " + std::to_string(c.triangles.size()) +
                      " triangular algebras slip; each has a slip right corner and only "
                      "multiplier locals into the bimodule"};
}

// --- 6: the two sufficiency hypotheses each force slip ----------------------

Outcome crit_sufficiency(const Corpus& c, const RunConfig& cfg) {
    std::size_t qualified = 0;
    bool big_instance = false;
    for (const CorpusTriangle& t : c.triangles) {
        const Algebra& a = t.bimodule.left_algebra;
        const Algebra& b = t.bimodule.right_algebra;
        const bool b_slip = is_slip(b, cfg).is_slip;
        const bool locals_ok =
            b_slip && local_equals_multiplier(b, t.bimodule.right_module(), cfg);
        const bool hyp_faithful = locals_ok && left_annihilator(t.bimodule).dim() == 0;
        const bool hyp_both_corners = locals_ok && is_slip(a, cfg).is_slip;
        if (!hyp_faithful && !hyp_both_corners) continue;
        ++qualified;
        if (t.name == "tri_prodsq_m2f2") big_instance = true;
        if (!is_slip(t.tri.algebra, cfg).is_slip)
            return {false, t.name + ": sufficiency hypothesis holds but slip fails"};
    }
    if (!big_instance)
        return {false, "the dim-16 product-square instance did not meet a hypothesis"};
    return {true, std::to_string(qualified) +
                      " triangular algebras meet a sufficiency hypothesis (faithful bimodule "
                      "or slip left corner); all slip, including the dim-16 product-square "
                      "instance"};
}

// --- 7: mixed-action triangular algebra fails slip ---------------------------

Outcome crit_mixed_non_slip(const Corpus& c, const RunConfig& cfg) {
    const CorpusTriangle& t = c.triangle("tri_mixed_m2f2_u2");
    SlipReport s = is_slip(t.tri.algebra, cfg);
    if (s.is_slip) return {false, t.name + ": expected not slip"};
    Subspace ann = left_annihilator(t.bimodule);
    const Algebra& left = t.bimodule.left_algebra;
    SpanBuilder expected(left.field, left.dim);
    for (std::size_t i = 4; i < 6; ++i) {
        Vec e(left.dim, 0);
        e[i] = 1;
        expected.add(e);
    }
    if (!(ann == expected.to_subspace()))
        return {false, t.name + ": left annihilator is not the second product factor"};
    return {true, "dim-14 triangular algebra with mixed product action: multiplier_dim=" +
                      std::to_string(s.multiplier_dim) + " < lip_dim=" +
                      std::to_string(s.lip_dim) +
                      "; the bimodule's left annihilator is exactly the second product factor "
                      "(dim 2)"};
}

// --- 8: block shape alone does not decide slip; the last corner does --------

Outcome crit_block_boundary(const RunConfig& cfg) {
    Algebra u2 = u_dual_numbers(2);
    Algebra f2 = scalar_field(2);
    const bool one_two_u = is_slip(block_upper(u2, {{1, 2}}).algebra, cfg).is_slip;
    const bool two_one_u = is_slip(block_upper(u2, {{2, 1}}).algebra, cfg).is_slip;
    const bool two_one_f = is_slip(block_upper(f2, {{2, 1}}).algebra, cfg).is_slip;
    if (!one_two_u) return {false, "block shape (1,2) over u(2): expected slip"};
    if (two_one_u) return {false, "block shape (2,1) over u(2): expected not slip"};
    if (!two_one_f) return {false, "block shape (2,1) over gf(2): expected slip"};
    return {true, "over u(2): shape (1,2) slip, shape (2,1) not; shape (2,1) over gf(2) slip — "
                      "the trailing corner decides"};
}

// --- 9: upper triangular algebras inherit slip exactly from the base --------

Outcome crit_tn_iff_base(const RunConfig& cfg) {
    const Algebra bases[] = {scalar_field(2), scalar_field(3), u_dual_numbers(2)};
    const char* names[] = {"gf(2)", "gf(3)", "u(2)"};
    for (std::size_t i = 0; i < 3; ++i) {
        const bool base_slip = is_slip(bases[i], cfg).is_slip;
        for (std::size_t n : {2, 3}) {
            if (is_slip(tn(bases[i], n), cfg).is_slip != base_slip)
                return {false, "t" + std::to_string(n) + " over " + names[i] +
                                   ": slip differs from the base"};
        }
    }
    return {true, "t2 and t3 over gf(2), gf(3), u(2): slip exactly when the base is slip"};
}

// --- 10: every lip map on a triangular algebra decomposes into blocks -------

Outcome crit_decomposition(const Corpus& c, const RunConfig& cfg) {
    std::size_t maps = 0;
    for (const CorpusTriangle& t : c.triangles) {
        MapSpace lip = lip_space(t.tri.algebra, cfg);
        for (std::size_t i = 0; i < lip.dim(); ++i) {
            Matrix psi = lip.basis_map(i);
            TriangularDecomposition dec;
            try {
                dec = decompose_lip_triangular(t.tri.algebra, t.tri.corner_idempotent, psi, cfg,
                                               &lip);
            } catch (const BlockStructureViolated& e) {
                return {false, t.name + " basis map " + std::to_string(i) + ": " + e.what()};
            }
            if (!dec.all_checks())
                return {false, t.name + " basis map " + std::to_string(i) +
                                   ": component conditions failed (compat=" +
                                   std::to_string(dec.tau_compatible) + " alpha=" +
                                   std::to_string(dec.alpha_lip) + " beta2=" +
                                   std::to_string(dec.beta2_lip) + " beta1=" +
                                   std::to_string(dec.beta1_local) + ")"};
            ++maps;
        }
    }
    return {true, std::to_string(c.triangles.size()) + " triangular algebras, " +
                      std::to_string(maps) +
                      " lip basis maps: block pattern, corner compatibility, and component "
                      "conditions all hold"};
}

// --- 11: constraint solver agrees with brute-force ideal enumeration --------

Outcome crit_ideal_oracle(const Corpus& c, const RunConfig& cfg) {
    std::size_t algs = 0, maps = 0;
    for (const CorpusAlgebra& entry : c.all_algebras()) {
        const Algebra& a = entry.algebra;
        if (a.dim > 6) continue;
        std::uint64_t points = 1;
        bool small = true;
        for (std::size_t i = 0; i < a.dim && small; ++i) {
            points *= a.field.modulus();
            if (points > 1024) small = false;
        }
        if (!small) continue;
        ++algs;

        MapSpace lip = lip_space(a, cfg);
        std::vector<Subspace> ideals = enumerate_left_ideals(a, cfg.enumeration_cap);
        Vec image(a.dim, 0);
        for (std::size_t r = 0; r < a.dim; ++r) {
            for (std::size_t s = 0; s < a.dim; ++s) {
                Matrix unit_map(a.field, a.dim, a.dim);
                unit_map.at(r, s) = 1;
                bool oracle = true;
                for (const Subspace& ideal : ideals) {
                    for (std::size_t g = 0; g < ideal.dim() && oracle; ++g) {
                        image = unit_map.apply(ideal.basis.row(g));
                        if (!ideal.contains(image)) oracle = false;
                    }
                    if (!oracle) break;
                }
                if (lip.contains(unit_map) != oracle)
                    return {false, entry.name + ": solver and ideal enumeration disagree on "
                                       "basis map (" +
                                       std::to_string(r) + "," + std::to_string(s) + ")"};
                ++maps;
            }
        }

        RunConfig full = cfg;
        full.projective_reduction = false;
        full.early_stop = false;
        if (!(lip_space(a, full) == lip))
            return {false, entry.name + ": full-scan space differs from projective-scan space"};
    }
    if (algs < 10)
        return {false, "only " + std::to_string(algs) + " small algebras qualified"};
    return {true, std::to_string(algs) + " small corpus algebras, " + std::to_string(maps) +
                      " basis maps: solver membership matches full ideal enumeration, and "
                      "exhaustive scans reproduce the projective spaces"};
}

// --- 12: endomorphism triangular extensions, slip biconditional -------------

Outcome crit_endomorphism(const RunConfig& cfg) {
    Algebra f2 = scalar_field(2);
    Algebra u2 = u_dual_numbers(2);
    Algebra m2 = matn(f2, 2);
    struct Instance {
        const char* name;
        const Algebra* base;
        RightModule mod;
    };
    const Instance instances[] = {
        {"column pair over gf(2)", &f2, matrix_module(f2, 2, 1)},
        {"regular module over u(2)", &u2, regular_module(u2)},
        {"row module over m2(gf(2))", &m2, row_module(f2, 2)},
    };
    std::size_t slip_count = 0;
    for (const Instance& inst : instances) {
        EndomorphismAlgebra ea = endomorphism_algebra(inst.mod);
        TriangularConstruction tri = triangular(ea.as_bimodule);
        const bool lhs = is_slip(tri.algebra, cfg).is_slip;
        const bool rhs = is_slip(*inst.base, cfg).is_slip &&
                         local_equals_multiplier(*inst.base, inst.mod, cfg);
        if (lhs != rhs)
            return {false, q(inst.name) + ": triangular extension slip=" +
                               (lhs ? "true" : "false") + " but corner conditions give " +
                               (rhs ? "true" : "false")};
        if (lhs) ++slip_count;
    }
    return {true, "3 endomorphism triangular extensions: slip holds exactly when the base is "
                      "slip with only multiplier locals (" +
                      std::to_string(slip_count) + " slip, " +
                      std::to_string(3 - slip_count) + " not)"};
}

// --- 13: locals into rectangular matrix modules are multipliers -------------

Outcome crit_matrix_modules(const RunConfig& cfg) {
    Algebra f2 = scalar_field(2);
    const Algebra bases[] = {f2, matn(f2, 2)};
    const char* names[] = {"gf(2)", "m2(gf(2))"};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t r : {1, 2}) {
            for (std::size_t s : {1, 2}) {
                if (!local_equals_multiplier(bases[i], matrix_module(bases[i], r, s), cfg))
                    return {false, q(names[i]) + ", shape " + std::to_string(r) + "x" +
                                       std::to_string(s) +
                                       ": a local multiplier escapes the multipliers"};
            }
        }
    }
    return {true, "gf(2) and m2(gf(2)), module shapes {1,2}x{1,2}: local multipliers into the "
                      "matrix module coincide with the multipliers"};
}

}  // namespace

std::vector<CorpusAlgebra> Corpus::all_algebras() const {
    std::vector<CorpusAlgebra> all = algebras;
    for (const CorpusTriangle& t : triangles) all.push_back({t.name, t.tri.algebra});
    return all;
}

const Algebra& Corpus::find(std::string_view name) const {
    for (const CorpusAlgebra& entry : algebras)
        if (entry.name == name) return entry.algebra;
    for (const CorpusTriangle& t : triangles)
        if (t.name == name) return t.tri.algebra;
    throw Error("corpus has no algebra named '" + std::string(name) + "'");
}

const CorpusTriangle& Corpus::triangle(std::string_view name) const {
    for (const CorpusTriangle& t : triangles)
        if (t.name == name) return t;
    throw Error("corpus has no triangular algebra named '" + std::string(name) + "'");
}

Corpus build_corpus() {
    Corpus c;
    Algebra f2 = scalar_field(2);
    Algebra f3 = scalar_field(3);
    Algebra u2 = u_dual_numbers(2);
    Algebra u3 = u_dual_numbers(3);
    Algebra m2f2 = matn(f2, 2);

    auto add = [&](std::string name, Algebra a) {
        c.algebras.push_back({std::move(name), std::move(a)});
    };
    add("f2", f2);
    add("u2", u2);
    add("t2_f2", tn(f2, 2));
    add("t3_f2", tn(f2, 3));
    add("m2_f2", m2f2);
    add("m3_f2", matn(f2, 3));
    add("m2_u2", matn(u2, 2));
    add("t2_u2", tn(u2, 2));
    add("t3_u2", tn(u2, 3));
    add("b12_f2", block_upper(f2, {{1, 2}}).algebra);
    add("b21_f2", block_upper(f2, {{2, 1}}).algebra);
    add("b12_u2", block_upper(u2, {{1, 2}}).algebra);
    add("b21_u2", block_upper(u2, {{2, 1}}).algebra);
    add("b112_f2", block_upper(f2, {{1, 1, 2}}).algebra);
    add("b22_f2", block_upper(f2, {{2, 2}}).algebra);
    add("f2xf2", direct_product(f2, f2));
    add("u2xu2", direct_product(u2, u2));
    add("m2f2xu2", direct_product(m2f2, u2));
    add("m2f2xm2f2", direct_product(m2f2, m2f2));
    add("f2xm2f2", direct_product(f2, m2f2));
    add("f3", f3);
    add("u3", u3);
    add("t2_f3", tn(f3, 2));
    add("t3_f3", tn(f3, 3));
    add("m2_f3", matn(f3, 2));
    add("b12_f3", block_upper(f3, {{1, 2}}).algebra);
    add("b21_f3", block_upper(f3, {{2, 1}}).algebra);
    add("f3xf3", direct_product(f3, f3));
    add("u3xu3", direct_product(u3, u3));
    add("t2_u3", tn(u3, 2));

    auto add_tri = [&](std::string name, Bimodule m) {
        TriangularConstruction t = triangular(m);
        c.triangles.push_back({std::move(name), std::move(m), std::move(t)});
    };
    add_tri("tri_u2_u2_f2", scalar_right_bimodule(u2));
    add_tri("tri_u3_u3_f3", scalar_right_bimodule(u3));
    add_tri("tri_m2f2_reg_f2", scalar_right_bimodule(m2f2));
    add_tri("tri_f2_f2_f2", regular_bimodule(f2));
    add_tri("tri_col_m2f2", column_bimodule(f2, 2));
    add_tri("tri_prodsq_m2f2", e3_bimodule(m2f2));
    add_tri("tri_mixed_m2f2_u2", mixed_bimodule(m2f2, u2));
    add_tri("tri_end_f2_sq", endomorphism_algebra(matrix_module(f2, 2, 1)).as_bimodule);
    add_tri("tri_end_u2_reg", endomorphism_algebra(regular_module(u2)).as_bimodule);
    add_tri("tri_end_m2f2_rows", endomorphism_algebra(row_module(f2, 2)).as_bimodule);
    add_tri("tri_zero_f2_f2", zero_bimodule(f2, f2));
    add_tri("tri_u2_reg_u2", regular_bimodule(u2));
    add_tri("tri_col_m2f3", column_bimodule(f3, 2));
    return c;
}

bool SuiteResult::all_pass() const {
    for (const CriterionResult& r : criteria)
        if (!r.pass) return false;
    return !criteria.empty();
}

SuiteResult run_suite(const RunConfig& cfg) {
    const Corpus corpus = build_corpus();

    SuiteResult result;
    auto run = [&](int id, std::string name, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = fn();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        result.criteria.push_back(
            {id, std::move(name), o.pass, std::move(o.detail), elapsed.count()});
    };

    run(1, "u-algebra-non-slip-witness", [&] { return crit_u_algebra(cfg); });
    run(2, "full-matrix-algebras-slip-zpd", [&] { return crit_matrix_algebras(corpus, cfg); });
    run(3, "zpd-implies-slip-corpus", [&] { return crit_zpd_implies_slip(corpus, cfg); });
    run(4, "slip-but-not-zpd-triangular", [&] { return crit_slip_not_zpd(corpus, cfg); });
    run(5, "triangular-slip-necessity", [&] { return crit_necessity(corpus, cfg); });
    run(6, "triangular-slip-sufficiency", [&] { return crit_sufficiency(corpus, cfg); });
    run(7, "mixed-product-triangular-non-slip",
        [&] { return crit_mixed_non_slip(corpus, cfg); });
    run(8, "block-upper-slip-boundary", [&] { return crit_block_boundary(cfg); });
    run(9, "upper-triangular-slip-iff-base", [&] { return crit_tn_iff_base(cfg); });
    run(10, "lip-triangular-decomposition", [&] { return crit_decomposition(corpus, cfg); });
    run(11, "principal-ideal-oracle-equivalence", [&] { return crit_ideal_oracle(corpus, cfg); });
    run(12, "endomorphism-triangular-biconditional", [&] { return crit_endomorphism(cfg); });
    run(13, "local-multipliers-into-matrix-modules", [&] { return crit_matrix_modules(cfg); });

    // 14: recompute two representative criteria and re-render the report; both
    // must reproduce byte-for-byte.
    run(14, "structured-report-determinism", [&] {
        Outcome again1 = crit_u_algebra(cfg);
        Outcome again4 = crit_slip_not_zpd(corpus, cfg);
        const CriterionResult& first1 = result.criteria[0];
        const CriterionResult& first4 = result.criteria[3];
        if (again1.pass != first1.pass || again1.detail != first1.detail)
            return Outcome{false, "criterion 1 did not reproduce"};
        if (again4.pass != first4.pass || again4.detail != first4.detail)
            return Outcome{false, "criterion 4 did not reproduce"};
        SuiteResult partial{result.criteria};
        if (suite_text(partial) != suite_text(partial) ||
            suite_json_text(partial) != suite_json_text(partial))
            return Outcome{false, "report rendering is not stable"};
        return Outcome{true, "recomputed criteria and double-rendered reports reproduce "
                             "byte-for-byte"};
    });

    return result;
}

std::string suite_text(const SuiteResult& r) {
    std::string out;
    std::size_t passed = 0;
    for (const CriterionResult& c : r.criteria) {
        out += '[';
        if (c.id < 10) out += ' ';
        out += std::to_string(c.id);
        out += "] ";
        out += c.pass ? "PASS" : "FAIL";
        out += ' ';
        out += c.name;
        out += " — ";
        out += c.detail;
        out += '\n';
        if (c.pass) ++passed;
    }
    out += "result: " + std::to_string(passed) + "/" + std::to_string(r.criteria.size()) +
           " criteria hold\n";
    return out;
}

std::string suite_json_text(const SuiteResult& r) {
    nlohmann::ordered_json root;
    root["command"] = "paper-suite";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const CriterionResult& c : r.criteria) {
        nlohmann::ordered_json row;
        row["id"] = c.id;
        row["name"] = c.name;
        row["pass"] = c.pass;
        row["detail"] = c.detail;
        rows.push_back(std::move(row));
    }
    root["criteria"] = std::move(rows);
    root["all_pass"] = r.all_pass();
    return root.dump(2) + "\n";
}

}  // namespace sliplab
