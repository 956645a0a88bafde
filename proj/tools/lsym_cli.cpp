/**
 * @file lsym_cli.cpp
 * @brief Command-line harness: `lsym eval` evaluates one quantity in a chosen
 *        semifield, `lsym verify` runs identity suites and emits a JSON report.
 *
 * Exit codes: 0 success / all checks passed, 1 some check failed,
 * 2 usage error (bad flags, unknown suite or target, malformed input).
 */
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsym/cylindric.hpp"
#include "lsym/energy.hpp"
#include "lsym/verify.hpp"

namespace {

using nlohmann::json;
using namespace lsym;

enum class Mode { rational, tropical, polynomial };

const std::vector<std::string> kTargets = {"grsk",           "loop-schur",  "cyl-schur",       "energy", "cocharge", "central-charge",
                                           "q-invariant",    "shape-invariant", "R",            "e",      "ebar"};

/** Targets whose defining formula divides, so they have no polynomial form. */
bool needs_division(const std::string& target) {
    return target == "grsk" || target == "cocharge" || target == "central-charge" || target == "R" || target == "e" ||
           target == "ebar";
}

Rational read_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    fail("bad-input", "expected an integer or a \"p/q\" string, got " + v.dump());
}

Trop read_trop(const json& v) {
    if (v.is_number_integer()) return Trop(v.get<long>());
    if (v.is_string() && v.get<std::string>() == "inf") return Trop::infinity();
    fail("bad-input", "tropical values are integers or \"inf\", got " + v.dump());
}

template <class T>
T read_value(const json& v) {
    if constexpr (std::is_same_v<T, Rational>) {
        Rational r = read_rational(v);
        if (r <= 0) fail("bad-input", "entries must be positive rationals");
        return r;
    } else {
        return read_trop(v);
    }
}

json write(const Rational& r) { return r.get_str(); }
json write(const Trop& t) {
    if (t == Trop::infinity()) return "inf";
    return t.v;
}
json write(const Poly& p) { return {{"polynomial", p.str()}, {"terms", p.size()}}; }

template <class T>
json write(const Matrix<T>& A) {
    json rows = json::array();
    for (int i = 1; i <= A.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= A.cols(); ++j) row.push_back(write(A(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
json write(const GTPattern<T>& z) {
    json entries = json::object();
    for (const auto& [k, v] : z.z) entries[std::to_string(k.first) + "," + std::to_string(k.second)] = write(v);
    return {{"m", z.m}, {"n", z.n}, {"entries", entries}};
}

int get_int(const json& in, const char* key) {
    if (!in.contains(key) || !in[key].is_number_integer()) fail("bad-input", std::string("missing integer field \"") + key + "\"");
    return in[key].get<int>();
}

int get_int(const json& in, const char* key, int fallback) { return in.contains(key) ? get_int(in, key) : fallback; }

Partition get_partition(const json& in, const char* key) {
    if (!in.contains(key)) return Partition{};
    if (!in[key].is_array()) fail("bad-input", std::string("\"") + key + "\" must be an array of parts");
    return Partition(in[key].get<std::vector<int>>());
}

/** The point x: explicit entries, or the symbolic / all-unit point of size m x n. */
template <class T>
Matrix<T> read_point(const json& in) {
    if constexpr (std::is_same_v<T, Poly>) {
        if (in.contains("x")) fail("bad-input", "polynomial mode evaluates at the symbolic point; give m and n instead of x");
        return symbolic_point(get_int(in, "m"), get_int(in, "n", 1));
    } else {
        if (!in.contains("x")) {
            const int m = get_int(in, "m"), n = get_int(in, "n", 1);
            if (m < 1 || n < 1) fail("bad-input", "m and n must be positive");
            return Matrix<T>(m, n, Arith<T>::one());
        }
        const json& rows = in["x"];
        if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty())
            fail("bad-input", "x must be a non-empty array of rows");
        Matrix<T> x(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 1; i <= x.rows(); ++i) {
            if (!rows[i - 1].is_array() || static_cast<int>(rows[i - 1].size()) != x.cols()) fail("bad-input", "x rows have unequal length");
            for (int j = 1; j <= x.cols(); ++j) x(i, j) = read_value<T>(rows[i - 1][j - 1]);
        }
        return x;
    }
}

template <class T>
GTPattern<T> read_pattern(const json& in) {
    const json& g = in.at("z");
    GTPattern<T> z(g.at("m").get<int>(), g.at("n").get<int>());
    for (const auto& [key, v] : g.at("entries").items()) {
        int i = 0, j = 0;
        char comma = 0;
        std::istringstream ss(key);
        if (!(ss >> i >> comma >> j) || comma != ',') fail("bad-input", "pattern keys look like \"i,j\", got " + key);
        z(i, j) = read_value<T>(v);
    }
    return z;
}

template <class T>
T read_param(const json& in, const char* key) {
    if (!in.contains(key)) fail("bad-input", std::string("missing field \"") + key + "\"");
    return read_value<T>(in[key]);
}

template <class T>
json evaluate(const std::string& target, const json& in) {
    const bool via_minor = in.value("route", std::string("tableau")) == "minor";
    if (target == "loop-schur") {
        auto x = read_point<T>(in);
        ColoredSkewShape s(get_partition(in, "lambda"), get_partition(in, "mu"), get_int(in, "r", 1), x.cols());
        return write(via_minor ? jacobi_trudi(s, x) : ssyt_sum(s, x));
    }
    if (target == "cyl-schur") {
        auto x = read_point<T>(in);
        CylShape s(get_partition(in, "lambda"), get_partition(in, "mu"), get_int(in, "k"), get_int(in, "r", 1), x.cols());
        return write(cyl_schur(s, x));
    }
    if (target == "energy") {
        auto x = read_point<T>(in);
        return write(via_minor ? energy_product(x) : energy_D(x));
    }
    if (target == "q-invariant") {
        auto x = read_point<T>(in);
        const int i = get_int(in, "i"), j = get_int(in, "j");
        if constexpr (std::is_same_v<T, Rational>)
            if (via_minor) return write(q_invariant_minor(x, i, j));
        if constexpr (std::is_same_v<T, Trop>)
            if (via_minor) fail("needs-subtraction", "the minor route needs a determinant; use the tableau route in tropical mode");
        return write(q_invariant(x, i, j));
    }
    if (target == "shape-invariant") {
        auto x = read_point<T>(in);
        const int k = get_int(in, "k");
        if constexpr (std::is_same_v<T, Rational>)
            if (via_minor) return write(shape_invariant_minor(x, k));
        if constexpr (std::is_same_v<T, Trop>)
            if (via_minor) fail("needs-subtraction", "the minor route needs a determinant; use the tableau route in tropical mode");
        return write(shape_invariant(x, k));
    }
    if constexpr (!std::is_same_v<T, Poly>) {
        if (target == "grsk") {
            auto x = read_point<T>(in);
            auto pq = grsk(x);
            return {{"P", write(pq.P)}, {"Q", write(pq.Q)}, {"glued", write(glue(pq))}};
        }
        if (target == "cocharge") {
            if (in.contains("z")) return write(geometric_cocharge(read_pattern<T>(in)));
            return write(geometric_cocharge(grsk(read_point<T>(in)).Q));
        }
        if (target == "central-charge") return write(central_charge_A(read_point<T>(in)));
        if (target == "R") {
            auto x = read_point<T>(in);
            if (in.contains("j")) return write(col_R(x, get_int(in, "j")));
            return write(row_R(x, get_int(in, "i")));
        }
        if (target == "e") return write(apply_e(read_point<T>(in), get_int(in, "i"), read_param<T>(in, "c")));
        if (target == "ebar") return write(apply_e_bar(read_point<T>(in), get_int(in, "j"), read_param<T>(in, "c")));
    }
    fail("bad-input", "unknown target '" + target + "'");
}

json error_json(const std::string& code, const std::string& detail) { return {{"error", code}, {"detail", detail}}; }

int cmd_eval(const std::string& target, const std::string& input_text, const std::string& mode_name) {
    if (std::find(kTargets.begin(), kTargets.end(), target) == kTargets.end()) {
        std::cerr << error_json("bad-input", "unknown target '" + target + "'").dump() << "\n";
        return 2;
    }
    json in;
    try {
        in = json::parse(input_text);
    } catch (const json::parse_error& e) {
        std::cerr << error_json("malformed-json", e.what()).dump() << "\n";
        return 2;
    }
    if (!in.is_object()) {
        std::cerr << error_json("malformed-json", "input must be a JSON object").dump() << "\n";
        return 2;
    }
    try {
        json value;
        if (mode_name == "rational") {
            value = evaluate<Rational>(target, in);
        } else if (mode_name == "tropical") {
            value = evaluate<Trop>(target, in);
        } else {
            if (needs_division(target))
                fail("bad-input", "target '" + target + "' is a rational function; polynomial mode is unavailable");
            value = evaluate<Poly>(target, in);
        }
        std::cout << json{{"target", target}, {"mode", mode_name}, {"value", value}}.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << error_json(e.code(), e.what()).dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << error_json("malformed-json", e.what()).dump() << "\n";
        return 2;
    }
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, const std::string& report_path) {
    if (suite != "all" && !is_suite(suite)) {
        std::cerr << error_json("bad-input", "unknown suite '" + suite + "'").dump() << "\n";
        return 2;
    }
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    json out;
    bool passed = true;
    try {
        if (names.size() == 1) {
            VerifyReport rep = run_suite(names[0], opts);
            passed = rep.passed();
            out = rep.to_json();
        } else {
            json reports = json::array();
            long elapsed = 0;
            for (const auto& name : names) {
                VerifyReport rep = run_suite(name, opts);
                passed = passed && rep.passed();
                elapsed += static_cast<long>(rep.elapsed_ms);
                reports.push_back(rep.to_json(false));
                std::cerr << (rep.passed() ? "[PASS] " : "[FAIL] ") << name << ": " << rep.checks << " checks, "
                          << rep.failure_count << " failures\n";
            }
            out = {{"suite", "all"},
                   {"seed", opts.seed},
                   {"parameters", {{"m", opts.m}, {"n", opts.n}, {"trials", opts.trials}}},
                   {"reports", reports},
                   {"passed", passed},
                   {"elapsed_ms", elapsed}};
        }
    } catch (const Error& e) {
        std::cerr << error_json(e.code(), e.what()).dump() << "\n";
        return 2;
    }
    const std::string text = out.dump(2);
    std::cout << text << "\n";
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) {
            std::cerr << error_json("bad-input", "cannot write report to " + report_path).dump() << "\n";
            return 2;
        }
        f << text << "\n";
    }
    return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loop symmetric functions, geometric crystals and gRSK in exact arithmetic"};
    app.require_subcommand(1);

    VerifyOptions opts;
    std::string suite, report_path;
    auto* verify = app.add_subcommand("verify", "run an identity suite (or 'all') and print a JSON report");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--m", opts.m, "bound on the number of rows")->capture_default_str();
    verify->add_option("--n", opts.n, "bound on the number of columns")->capture_default_str();
    verify->add_option("--trials", opts.trials, "random points per size")->capture_default_str();
    verify->add_option("--seed", opts.seed, "master seed")->capture_default_str();
    verify->add_option("--threads", opts.threads, "worker threads (0 = hardware concurrency)")->capture_default_str();
    verify->add_option("--report", report_path, "also write the report to this path");

    std::string target, input_text, input_file, mode = "rational";
    auto* eval = app.add_subcommand("eval", "evaluate one quantity; input is a JSON object");
    eval->add_option("target", target, "one of: grsk, loop-schur, cyl-schur, energy, cocharge, central-charge, q-invariant, "
                                       "shape-invariant, R, e, ebar")
        ->required();
    auto* in_opt = eval->add_option("--input", input_text, "input JSON text");
    eval->add_option("--input-file", input_file, "read input JSON from this file")->excludes(in_opt);
    eval->add_option("--mode", mode, "rational, tropical or polynomial")
        ->check(CLI::IsMember({"rational", "tropical", "polynomial"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (verify->parsed()) return cmd_verify(suite, opts, report_path);

    if (!input_file.empty()) {
        std::ifstream f(input_file);
        if (!f) {
            std::cerr << error_json("bad-input", "cannot read " + input_file).dump() << "\n";
            return 2;
        }
        input_text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    } else if (input_text.empty()) {
        input_text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    return cmd_eval(target, input_text, mode);
}
