#include "sliplab/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sliplab/errors.hpp"
#include "sliplab/io.hpp"
#include "sliplab/slip.hpp"
#include "sliplab/suite.hpp"
#include "sliplab/zpd.hpp"

namespace sliplab {
namespace {

using nlohmann::ordered_json;

struct CommandContext {
    RunConfig cfg;
    bool json = false;
    std::string output_path;  // empty means stdout
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
};

void emit(const CommandContext& ctx, const std::string& text) {
    if (ctx.output_path.empty()) {
        *ctx.out << text;
        return;
    }
    std::ofstream f(ctx.output_path, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + ctx.output_path + "'");
    f << text;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string vec_line(std::span<const Residue> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string matrix_lines(const Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows; ++r) {
        s += vec_line(m.row(r));
        s += '\n';
    }
    return s;
}

ordered_json vec_json(std::span<const Residue> v) {
    ordered_json a = ordered_json::array();
    for (Residue x : v) a.push_back(x);
    return a;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json a = ordered_json::array();
    for (std::size_t r = 0; r < m.rows; ++r) a.push_back(vec_json(m.row(r)));
    return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::uint64_t arg_number(const std::string& s, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(std::string(what) + ": '" + s + "' is not a number");
    return value;
}

void header(std::string& s, const char* command, const std::string& input, const Algebra& a) {
    s += "command: ";
    s += command;
    s += '\n';
    s += "input: " + input + '\n';
    s += "field: " + std::to_string(a.field.modulus()) + '\n';
    s += "dim: " + std::to_string(a.dim) + '\n';
}

ordered_json json_header(const char* command, const std::string& input, const Algebra& a) {
    ordered_json j;
    j["command"] = command;
    j["input"] = input;
    j["field"] = a.field.modulus();
    j["dim"] = a.dim;
    return j;
}

// --- commands ----------------------------------------------------------------

int cmd_check_slip(const CommandContext& ctx, const std::string& path) {
    Algebra a = parse_algebra_file(path);
    SlipReport r = is_slip(a, ctx.cfg);
    if (ctx.json) {
        ordered_json j = json_header("check-slip", path, a);
        j["multiplier_dim"] = r.multiplier_dim;
        j["lip_dim"] = r.lip_dim;
        j["points_processed"] = r.points_processed;
        j["early_stop"] = r.early_stop;
        j["is_slip"] = r.is_slip;
        j["witness"] = r.witness ? matrix_json(*r.witness) : ordered_json(nullptr);
        emit(ctx, dump(j));
    } else {
        std::string s;
        header(s, "check-slip", path, a);
        s += "multiplier_dim: " + std::to_string(r.multiplier_dim) + '\n';
        s += "lip_dim: " + std::to_string(r.lip_dim) + '\n';
        s += "points_processed: " + std::to_string(r.points_processed) + '\n';
        s += "early_stop: " + bool_word(r.early_stop) + '\n';
        s += "is_slip: " + bool_word(r.is_slip) + '\n';
        if (r.witness) {
            s += "witness:\n";
            s += matrix_lines(*r.witness);
        } else {
            s += "witness: none\n";
        }
        emit(ctx, s);
    }
    return r.is_slip ? 0 : 1;
}

int cmd_check_zpd(const CommandContext& ctx, const std::string& path) {
    Algebra a = parse_algebra_file(path);
    ZpdReport r = is_zpd(a, ctx.cfg);
    std::optional<Matrix> obstruction;
    if (!r.is_zpd) obstruction = zpd_obstruction(a, ctx.cfg);
    if (ctx.json) {
        ordered_json j = json_header("check-zpd", path, a);
        j["kernel_dim"] = r.kernel_dim;
        j["span_dim"] = r.span_dim;
        j["points_processed"] = r.points_processed;
        j["is_zpd"] = r.is_zpd;
        j["obstruction"] = obstruction ? matrix_json(*obstruction) : ordered_json(nullptr);
        emit(ctx, dump(j));
    } else {
        std::string s;
        header(s, "check-zpd", path, a);
        s += "kernel_dim: " + std::to_string(r.kernel_dim) + '\n';
        s += "span_dim: " + std::to_string(r.span_dim) + '\n';
        s += "points_processed: " + std::to_string(r.points_processed) + '\n';
        s += "is_zpd: " + bool_word(r.is_zpd) + '\n';
        if (obstruction) {
            s += "obstruction:\n";
            s += matrix_lines(*obstruction);
        } else {
            s += "obstruction: none\n";
        }
        emit(ctx, s);
    }
    return r.is_zpd ? 0 : 1;
}

int cmd_lip_basis(const CommandContext& ctx, const std::string& path) {
    Algebra a = parse_algebra_file(path);
    SpaceRun run = lip_space_run(a, ctx.cfg);
    MapSpace mult = left_multiplier_space(a);
    if (ctx.json) {
        ordered_json j = json_header("lip-basis", path, a);
        j["multiplier_dim"] = mult.dim();
        j["lip_dim"] = run.space.dim();
        j["points_processed"] = run.points_processed;
        j["early_stop"] = run.early_stop;
        ordered_json maps = ordered_json::array();
        for (std::size_t i = 0; i < run.space.dim(); ++i)
            maps.push_back(matrix_json(run.space.basis_map(i)));
        j["basis"] = std::move(maps);
        emit(ctx, dump(j));
    } else {
        std::string s;
        header(s, "lip-basis", path, a);
        s += "multiplier_dim: " + std::to_string(mult.dim()) + '\n';
        s += "lip_dim: " + std::to_string(run.space.dim()) + '\n';
        s += "points_processed: " + std::to_string(run.points_processed) + '\n';
        s += "early_stop: " + bool_word(run.early_stop) + '\n';
        for (std::size_t i = 0; i < run.space.dim(); ++i) {
            s += "map " + std::to_string(i) + ":\n";
            s += matrix_lines(run.space.basis_map(i));
        }
        emit(ctx, s);
    }
    return 0;
}

int cmd_witness(const CommandContext& ctx, const std::string& path) {
    Algebra a = parse_algebra_file(path);
    SlipReport r = is_slip(a, ctx.cfg);
    if (ctx.json) {
        ordered_json j = json_header("witness", path, a);
        j["is_slip"] = r.is_slip;
        j["witness"] = r.witness ? matrix_json(*r.witness) : ordered_json(nullptr);
        emit(ctx, dump(j));
    } else {
        std::string s;
        header(s, "witness", path, a);
        s += "is_slip: " + bool_word(r.is_slip) + '\n';
        if (r.witness) {
            s += "witness:\n";
            s += matrix_lines(*r.witness);
        } else {
            s += "witness: none\n";
        }
        emit(ctx, s);
    }
    return r.is_slip ? 0 : 1;
}

int cmd_idempotents(const CommandContext& ctx, const std::string& path, bool semicentral_only) {
    Algebra a = parse_algebra_file(path);
    checked_pow(a.field.modulus(), a.dim, ctx.cfg.enumeration_cap, "idempotent enumeration");
    IdempotentReport rep = idempotents(a, ctx.cfg.enumeration_cap);
    const std::vector<Vec>& list = semicentral_only ? rep.left_semicentral : rep.idempotents;
    if (ctx.json) {
        ordered_json j = json_header("idempotents", path, a);
        j["semicentral_only"] = semicentral_only;
        j["count"] = list.size();
        ordered_json rows = ordered_json::array();
        for (const Vec& e : list) rows.push_back(vec_json(e));
        j["idempotents"] = std::move(rows);
        j["truncated"] = rep.truncated;
        emit(ctx, dump(j));
    } else {
        std::string s;
        header(s, "idempotents", path, a);
        s += "semicentral_only: " + bool_word(semicentral_only) + '\n';
        s += "count: " + std::to_string(list.size()) + '\n';
        for (std::size_t i = 0; i < list.size(); ++i)
            s += "idempotent " + std::to_string(i) + ": " + vec_line(list[i]) + '\n';
        s += "truncated: " + bool_word(rep.truncated) + '\n';
        emit(ctx, s);
    }
    return 0;
}

int cmd_decompose(const CommandContext& ctx, const std::string& path,
                  const std::string& map_path, std::uint64_t index) {
    Algebra a = parse_algebra_file(path);
    Matrix psi = parse_map_file(map_path, a.field);
    if (psi.rows != a.dim || psi.cols != a.dim)
        throw DimensionMismatch("decompose: map must be " + std::to_string(a.dim) + "x" +
                                std::to_string(a.dim));
    checked_pow(a.field.modulus(), a.dim, ctx.cfg.enumeration_cap, "idempotent enumeration");
    IdempotentReport rep = idempotents(a, ctx.cfg.enumeration_cap);
    const std::vector<Vec>& semis = rep.left_semicentral;
    if (index >= semis.size())
        throw Error("idempotent index " + std::to_string(index) + " out of range: " +
                    std::to_string(semis.size()) + " left semicentral idempotents");
    const Vec& e = semis[static_cast<std::size_t>(index)];

    TriangularDecomposition dec = decompose_lip_triangular(a, e, psi, ctx.cfg);
    const std::size_t r = dec.split.corner_left.dim;
    const std::size_t s_dim = dec.split.off_diagonal.mdim;
    const std::size_t t = dec.split.corner_right.dim;

    if (ctx.json) {
        ordered_json j = json_header("decompose", path, a);
        j["map"] = map_path;
        j["idempotent_index"] = index;
        j["idempotent"] = vec_json(e);
        j["corner_dims"] = ordered_json::array({r, s_dim, t});
        j["alpha"] = matrix_json(dec.alpha);
        j["tau"] = matrix_json(dec.tau);
        j["beta1"] = matrix_json(dec.beta1);
        j["beta2"] = matrix_json(dec.beta2);
        j["tau_compatible"] = dec.tau_compatible;
        j["alpha_lip"] = dec.alpha_lip;
        j["beta2_lip"] = dec.beta2_lip;
        j["beta1_local"] = dec.beta1_local;
        j["all_checks"] = dec.all_checks();
        emit(ctx, dump(j));
    } else {
        std::string s;
        header(s, "decompose", path, a);
        s += "map: " + map_path + '\n';
        s += "idempotent_index: " + std::to_string(index) + '\n';
        s += "idempotent: " + vec_line(e) + '\n';
        s += "corner_dims: " + std::to_string(r) + " " + std::to_string(s_dim) + " " +
             std::to_string(t) + '\n';
        s += "alpha:\n" + matrix_lines(dec.alpha);
        s += "tau:\n" + matrix_lines(dec.tau);
        s += "beta1:\n" + matrix_lines(dec.beta1);
        s += "beta2:\n" + matrix_lines(dec.beta2);
        s += "tau_compatible: " + bool_word(dec.tau_compatible) + '\n';
        s += "alpha_lip: " + bool_word(dec.alpha_lip) + '\n';
        s += "beta2_lip: " + bool_word(dec.beta2_lip) + '\n';
        s += "beta1_local: " + bool_word(dec.beta1_local) + '\n';
        s += "all_checks: " + bool_word(dec.all_checks()) + '\n';
        emit(ctx, s);
    }
    return dec.all_checks() ? 0 : 1;
}

int cmd_construct(const CommandContext& ctx, const std::string& kind,
                  const std::vector<std::string>& args) {
    auto need = [&](std::size_t n, const char* usage) {
        if (args.size() != n)
            throw Error(std::string("construct ") + kind + ": expected " + usage);
    };
    Algebra result;
    if (kind == "field") {
        need(1, "one argument: p");
        result = scalar_field(static_cast<std::uint32_t>(arg_number(args[0], "construct field")));
    } else if (kind == "u") {
        need(1, "one argument: p");
        result =
            u_dual_numbers(static_cast<std::uint32_t>(arg_number(args[0], "construct u")));
    } else if (kind == "matn" || kind == "tn") {
        need(2, "two arguments: base-file n");
        Algebra base = parse_algebra_file(args[0]);
        std::size_t n = static_cast<std::size_t>(arg_number(args[1], "construct"));
        result = (kind == "matn") ? matn(base, n) : tn(base, n);
    } else if (kind == "block") {
        need(2, "two arguments: base-file k1,k2,...");
        Algebra base = parse_algebra_file(args[0]);
        BlockShape shape;
        std::size_t pos = 0;
        const std::string& list = args[1];
        while (pos <= list.size()) {
            std::size_t comma = list.find(',', pos);
            if (comma == std::string::npos) comma = list.size();
            shape.parts.push_back(static_cast<std::size_t>(
                arg_number(list.substr(pos, comma - pos), "construct block")));
            pos = comma + 1;
            if (comma == list.size()) break;
        }
        result = block_upper(base, shape).algebra;
    } else if (kind == "tri") {
        need(1, "one argument: bimodule-file");
        ParsedModule pm = parse_module_file(args[0]);
        if (!std::holds_alternative<Bimodule>(pm))
            throw Error("construct tri: module file must declare a left algebra");
        result = triangular(std::get<Bimodule>(pm)).algebra;
    } else if (kind == "product") {
        need(2, "two arguments: a-file b-file");
        result = direct_product(parse_algebra_file(args[0]), parse_algebra_file(args[1]));
    } else {
        throw Error("unknown construction kind '" + kind +
                    "' (expected field, u, matn, tn, block, tri, product)");
    }

    std::string text = serialize_algebra(result);
    if (ctx.json) {
        ordered_json j;
        j["command"] = "construct";
        j["kind"] = kind;
        j["field"] = result.field.modulus();
        j["dim"] = result.dim;
        j["algebra"] = text;
        emit(ctx, dump(j));
    } else {
        emit(ctx, text);
    }
    return 0;
}

int cmd_verify_triangulating(const CommandContext& ctx, const std::string& path,
                             const std::string& idems_path) {
    Algebra a = parse_algebra_file(path);
    Matrix rows = parse_map_file(idems_path, a.field);
    if (rows.cols != a.dim)
        throw DimensionMismatch("verify-triangulating: idempotent rows must have " +
                                std::to_string(a.dim) + " entries");
    std::vector<Vec> idems;
    for (std::size_t r = 0; r < rows.rows; ++r) {
        auto row = rows.row(r);
        idems.emplace_back(row.begin(), row.end());
    }
    Validation v = verify_triangulating(a, idems);
    if (ctx.json) {
        ordered_json j = json_header("verify-triangulating", path, a);
        j["idempotents"] = idems_path;
        j["count"] = idems.size();
        j["ok"] = v.passed();
        j["failure"] = v.passed() ? ordered_json(nullptr) : ordered_json(v.message);
        emit(ctx, dump(j));
    } else {
        std::string s;
        header(s, "verify-triangulating", path, a);
        s += "idempotents: " + idems_path + '\n';
        s += "count: " + std::to_string(idems.size()) + '\n';
        s += "ok: " + bool_word(v.passed()) + '\n';
        if (!v.passed()) s += "failure: " + v.message + '\n';
        emit(ctx, s);
    }
    return v.passed() ? 0 : 1;
}

int cmd_paper_suite(const CommandContext& ctx) {
    SuiteResult r = run_suite(ctx.cfg);
    emit(ctx, ctx.json ? suite_json_text(r) : suite_text(r));
    for (const CriterionResult& c : r.criteria)
        *ctx.err << "[" << std::setw(2) << c.id << "] " << std::fixed << std::setprecision(3)
                 << c.elapsed_seconds << "s " << c.name << "\n";
    return r.all_pass() ? 0 : 1;
}

}  // namespace

int cli_main(std::span<const char* const> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact left-multiplier and left-ideal-preserving map toolkit over GF(p)",
                 "sliplab"};

    CommandContext ctx;
    ctx.out = &out;
    ctx.err = &err;

    std::uint64_t cap = kDefaultEnumerationCap;
    if (const char* env = std::getenv("SLIPLAB_CAP")) {
        std::string s(env);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
            err << "error: SLIPLAB_CAP is not a positive number: '" << s << "'\n";
            return 2;
        }
        cap = value;
    }

    bool no_early_stop = false;
    app.add_option("--cap", cap,
                   "enumeration cap on scanned points/subspaces (env: SLIPLAB_CAP)")
        ->capture_default_str();
    app.add_flag("--no-early-stop", no_early_stop, "disable constraint-rank early stopping");
    app.add_flag("--json", ctx.json, "emit the report as JSON");
    app.add_option("-o,--output", ctx.output_path, "write the report to this file");

    std::string file_a, file_b, kind;
    std::vector<std::string> extra;
    std::uint64_t idem_index = 0;
    bool semicentral_only = false;

    auto sub = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* check_slip = sub("check-slip",
                               "decide whether every left-ideal-preserving map on the algebra "
                               "is a left multiplier");
    check_slip->add_option("file", file_a, "algebra file")->required();

    CLI::App* check_zpd =
        sub("check-zpd", "decide whether the algebra is zero-product determined");
    check_zpd->add_option("file", file_a, "algebra file")->required();

    CLI::App* lip_basis =
        sub("lip-basis", "print a basis of the space of left-ideal-preserving maps");
    lip_basis->add_option("file", file_a, "algebra file")->required();

    CLI::App* witness = sub("witness",
                            "produce a left-ideal-preserving map that is not a left "
                            "multiplier, when one exists");
    witness->add_option("file", file_a, "algebra file")->required();

    CLI::App* idem = sub("idempotents", "list all idempotents of the algebra");
    idem->add_option("file", file_a, "algebra file")->required();
    idem->add_flag("--semicentral", semicentral_only, "list only left semicentral idempotents");

    CLI::App* decompose = sub("decompose",
                              "split a left-ideal-preserving map into its corner components "
                              "along a left semicentral idempotent");
    decompose->add_option("file", file_a, "algebra file")->required();
    decompose->add_option("map", file_b, "map file (dim x dim matrix)")->required();
    decompose
        ->add_option("index", idem_index,
                     "index into the left semicentral idempotent list (see idempotents "
                     "--semicentral)")
        ->required();

    CLI::App* construct = sub("construct",
                              "build an algebra file: field p | u p | matn base-file n | tn "
                              "base-file n | block base-file k1,k2,... | tri module-file | "
                              "product a-file b-file");
    construct->add_option("kind", kind, "construction kind")->required();
    construct->add_option("args", extra, "construction arguments");

    CLI::App* verify_tri = sub("verify-triangulating",
                               "check an ordered idempotent list for the left triangulating "
                               "clauses");
    verify_tri->add_option("file", file_a, "algebra file")->required();
    verify_tri->add_option("idempotents", file_b, "idempotent rows as a map file")->required();

    CLI::App* paper_suite =
        sub("paper-suite", "run the built-in verification suite over the fixed corpus");

    app.require_subcommand(0, 1);

    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    ctx.cfg.enumeration_cap = cap;
    ctx.cfg.early_stop = !no_early_stop;

    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (check_slip->parsed()) {
            code = cmd_check_slip(ctx, file_a);
        } else if (check_zpd->parsed()) {
            code = cmd_check_zpd(ctx, file_a);
        } else if (lip_basis->parsed()) {
            code = cmd_lip_basis(ctx, file_a);
        } else if (witness->parsed()) {
            code = cmd_witness(ctx, file_a);
        } else if (idem->parsed()) {
            code = cmd_idempotents(ctx, file_a, semicentral_only);
        } else if (decompose->parsed()) {
            code = cmd_decompose(ctx, file_a, file_b, idem_index);
        } else if (construct->parsed()) {
            code = cmd_construct(ctx, kind, extra);
        } else if (verify_tri->parsed()) {
            code = cmd_verify_triangulating(ctx, file_a, file_b);
        } else if (paper_suite->parsed()) {
            code = cmd_paper_suite(ctx);
        } else {
            out << app.help();
            return 2;
        }
    } catch (const EnumerationCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        code = 3;
    } catch (const NotLip& e) {
        err << "property fails: " << e.what() << '\n';
        code = 1;
    } catch (const BlockStructureViolated& e) {
        err << "property fails: " << e.what() << '\n';
        code = 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        code = 2;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    err << "time: " << std::fixed << std::setprecision(3) << elapsed.count() << "s\n";
    return code;
}

}  // namespace sliplab
