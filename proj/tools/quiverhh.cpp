// Command-line front end: validate, dims, cup, bracket, witness, selftest, format.

#include <fmt/core.h>

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "quiverhh/closed_form.hpp"
#include "quiverhh/cochain.hpp"
#include "quiverhh/gerstenhaber.hpp"
#include "quiverhh/invariants.hpp"
#include "quiverhh/io.hpp"

using namespace quiverhh;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kInvalid = 2, kHypothesis = 3 };

struct InputOptions {
    std::string file;
    std::optional<std::uint32_t> characteristic;
    bool json = false;
};

void add_input(CLI::App* cmd, InputOptions& in, bool with_char = true) {
    cmd->add_option("FILE", in.file, "quiver file")->required();
    if (with_char) cmd->add_option("--char", in.characteristic, "field characteristic (0 or prime); overrides the file");
    cmd->add_flag("--json", in.json, "machine-readable output");
}

struct Loaded {
    BoundQuiver quiver;
    Field field;
};

Loaded load(const InputOptions& in) {
    auto qf = load_quiver(in.file);
    return {std::move(qf.quiver), in.characteristic ? Field(*in.characteristic) : qf.field};
}

// Rejects inputs outside the class the pipeline is defined for.
std::optional<int> require_valid(const BoundQuiver& bq) {
    auto report = validate_string_algebra(bq);
    if (report.ok()) return std::nullopt;
    for (const auto& v : report.violations) std::cerr << "invalid input: " << to_string(v.condition) << ": " << v.witness << "\n";
    return kInvalid;
}

json json_header(const char* command, const Loaded& in) {
    return json{{"schema", 1}, {"command", command}, {"field", in.field.name()}};
}

json cochain_json(const BoundQuiver& bq, const Cochain& c) {
    json terms = json::array();
    for (const auto& [p, x] : c.terms())
        terms.push_back({{"rho", bq.describe(p.rho)}, {"gamma", bq.describe(p.gamma)}, {"coeff", to_string(x)}});
    return {{"degree", c.degree()}, {"terms", terms}};
}

json check_json(const Violation& v) { return {{"condition", to_string(v.condition)}, {"witness", v.witness}}; }

// ---------------------------------------------------------------------------

int run_validate(const InputOptions& in) {
    auto qf = load(in);
    const auto& bq = qf.quiver;
    auto string = validate_string(bq);
    auto gentle = validate_gentle(bq);
    auto connected = validate_connected(bq);
    auto infinite = check_finite_dimensional(bq);
    bool valid = string.ok() && connected.ok() && !infinite;
    if (in.json) {
        auto list = [](const ValidationReport& r) {
            json a = json::array();
            for (const auto& v : r.violations) a.push_back(check_json(v));
            return a;
        };
        json out = json_header("validate", qf);
        out["vertices"] = bq.vertex_count();
        out["arrows"] = bq.arrow_count();
        out["relations"] = bq.relations().size();
        out["string"] = list(string);
        out["gentle"] = list(gentle);
        out["connected"] = list(connected);
        out["finite_dimensional"] = infinite ? json(bq.describe(*infinite)) : json(nullptr);
        out["valid_string_algebra"] = valid;
        out["is_gentle"] = valid && gentle.ok();
        std::cout << out.dump(2) << "\n";
    } else {
        fmt::print("quiver: {} vertices, {} arrows, {} relations\n", bq.vertex_count(), bq.arrow_count(),
                   bq.relations().size());
        auto show = [](const char* name, const ValidationReport& r) {
            if (r.ok()) {
                fmt::print("  {:<20} ok\n", name);
                return;
            }
            for (const auto& v : r.violations) fmt::print("  {:<20} {} violated: {}\n", name, to_string(v.condition), v.witness);
        };
        show("string (S1, S2)", string);
        show("gentle (G1)", gentle);
        show("connected", connected);
        if (infinite)
            fmt::print("  {:<20} no: {} avoids every relation\n", "finite dimensional", bq.describe(*infinite));
        else
            fmt::print("  {:<20} ok\n", "finite dimensional");
        fmt::print("valid string algebra: {}\n", valid ? "yes" : "no");
    }
    return valid ? kOk : kInvalid;
}

// ---------------------------------------------------------------------------

struct DimsOptions {
    InputOptions in;
    std::size_t max_degree = 5;
    bool oracle = false, formula = false, both = false, breakdown = false;
};

int run_dims(const DimsOptions& o) {
    auto qf = load(o.in);
    if (auto e = require_valid(qf.quiver)) return *e;
    bool use_oracle = o.both || o.oracle || !o.formula;
    bool use_formula = o.both || o.formula;
    std::optional<CochainComplex> cx;
    if (use_oracle) cx.emplace(qf.quiver, qf.field);

    bool all_agree = true;
    json rows = json::array();
    if (!o.in.json) {
        fmt::print("field: {}\n", qf.field.name());
        fmt::print("{:>3}", "n");
        if (use_oracle) fmt::print("  {:>7}", "oracle");
        if (use_formula) fmt::print("  {:>7}", "formula");
        if (use_oracle && use_formula) fmt::print("  {:>5}", "agree");
        fmt::print("\n");
    }
    for (std::size_t n = 0; n <= o.max_degree; ++n) {
        json row{{"n", n}};
        std::optional<std::size_t> od;
        std::optional<DimensionReport> fr;
        if (use_oracle) od = cx->hh_dim(n), row["oracle"] = *od;
        if (use_formula) {
            fr = hh_dim_formula(qf.quiver, n, qf.field);
            row["formula"] = fr->dim;
            json parts = json::array();
            for (const auto& s : fr->breakdown) parts.push_back({{"name", s.name}, {"value", s.value}});
            row["breakdown"] = parts;
            row["char_case"] = fr->char_case;
        }
        bool agree = !(od && fr) || *od == fr->dim;
        if (od && fr) row["agree"] = agree;
        all_agree = all_agree && agree;
        if (o.in.json) {
            rows.push_back(row);
            continue;
        }
        fmt::print("{:>3}", n);
        if (od) fmt::print("  {:>7}", *od);
        if (fr) fmt::print("  {:>7}", fr->dim);
        if (od && fr) fmt::print("  {:>5}", agree ? "yes" : "NO");
        fmt::print("\n");
        if (fr && o.breakdown)
            for (const auto& s : fr->breakdown) fmt::print("       {:<40} {:>4}\n", s.name, s.value);
    }
    if (o.in.json) {
        json out = json_header("dims", qf);
        out["degrees"] = rows;
        if (use_oracle && use_formula) out["all_agree"] = all_agree;
        std::cout << out.dump(2) << "\n";
    } else if (use_oracle && use_formula) {
        fmt::print("{}\n", all_agree ? "all degrees agree" : "MISMATCH between oracle and formula");
    }
    return all_agree ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

struct ProductOptions {
    InputOptions in;
    std::vector<std::size_t> degrees;
};

std::string coords_text(const std::vector<Scalar>& v) {
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; })) return "0";
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out + ")";
}

int run_product(const ProductOptions& o, bool is_cup) {
    auto qf = load(o.in);
    if (auto e = require_valid(qf.quiver)) return *e;
    const std::size_t n = o.degrees.at(0), m = o.degrees.at(1);
    if (!is_cup && n + m == 0) {
        std::cerr << "invalid input: the bracket needs --deg N M with N + M >= 1\n";
        return kInvalid;
    }
    const std::size_t target = is_cup ? n + m : n + m - 1;
    CochainComplex cx(qf.quiver, qf.field);
    const auto& bq = cx.quiver();
    auto left = cx.cohomology_basis(n), right = cx.cohomology_basis(m), out_basis = cx.cohomology_basis(target);
    const char* op = is_cup ? "u" : ",";

    json table = json::array();
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            Cochain c = is_cup ? cup_class(cx, left[i], right[j]) : bracket_class(cx, left[i], right[j]);
            auto coords = cx.class_coordinates(c);
            json cj = json::array();
            for (const auto& x : coords) cj.push_back(to_string(x));
            table.push_back({{"left", i}, {"right", j}, {"coordinates", cj}, {"representative", cochain_json(bq, c)}});
            lines.push_back(is_cup ? fmt::format("  [{}] u [{}] = {}", i, j, coords_text(coords))
                                   : fmt::format("  [[{}], [{}]] = {}", i, j, coords_text(coords)));
        }
    if (o.in.json) {
        auto basis_json = [&](const std::vector<Cochain>& b) {
            json a = json::array();
            for (const auto& c : b) a.push_back(cochain_json(bq, c));
            return a;
        };
        json out = json_header(is_cup ? "cup" : "bracket", qf);
        out["degrees"] = {n, m};
        out["target_degree"] = target;
        out["left_basis"] = basis_json(left);
        out["right_basis"] = basis_json(right);
        out["target_basis"] = basis_json(out_basis);
        out["products"] = table;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    fmt::print("field: {}\n", qf.field.name());
    auto show = [&](std::size_t d, const std::vector<Cochain>& b) {
        fmt::print("HH^{} basis (dim {}):\n", d, b.size());
        for (std::size_t i = 0; i < b.size(); ++i) fmt::print("  [{}] {}\n", i, describe(bq, b[i]));
    };
    show(n, left);
    if (m != n) show(m, right);
    if (target != n && target != m) show(target, out_basis);
    fmt::print("products HH^{} {} HH^{} -> HH^{} (coordinates in the HH^{} basis):\n", n, op, m, target, target);
    for (const auto& l : lines) fmt::print("{}\n", l);
    if (lines.empty()) fmt::print("  (no products: a factor is zero)\n");
    return kOk;
}

// ---------------------------------------------------------------------------

struct WitnessOptions {
    InputOptions in;
    std::size_t max_degree = 4;
    std::string kind = "cup";
};

json witness_json(const BoundQuiver& bq, const Witness& w) {
    return {{"kind", to_string(w.kind)},
            {"omega", describe(bq, w.omega)},
            {"n", w.n},
            {"order", w.k},
            {"s1", w.s1},
            {"s2", w.s2},
            {"left", cochain_json(bq, w.left)},
            {"right", cochain_json(bq, w.right)},
            {"product", cochain_json(bq, w.product)},
            {"expected", cochain_json(bq, w.expected)},
            {"coefficient", to_string(w.coefficient)},
            {"identity_holds", w.identity_holds},
            {"factors_nonzero", w.factors_nonzero},
            {"class_nonzero", w.class_nonzero},
            {"verified", w.verified()}};
}

int run_witness(const WitnessOptions& o) {
    auto qf = load(o.in);
    if (auto e = require_valid(qf.quiver)) return *e;
    CochainComplex cx(qf.quiver, qf.field);
    std::optional<Witness> w;
    try {
        w = o.kind == "cup" ? find_cup_witness(cx, o.max_degree) : find_bracket_witness(cx, o.max_degree);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kHypothesis;
    }
    if (o.in.json) {
        json out = json_header("witness", qf);
        out["kind"] = o.kind;
        out["max_degree"] = o.max_degree;
        out["witness"] = w ? witness_json(cx.quiver(), *w) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else if (w) {
        fmt::print("field: {}\n{}", qf.field.name(), w->describe(cx.quiver()));
    } else {
        fmt::print("field: {}\nno gentle pair in degrees 1..{}; no witness\n", qf.field.name(), o.max_degree);
    }
    return !w || w->verified() ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

struct SelftestOptions {
    InputOptions in;
    std::size_t max_degree = 4;
    std::uint64_t seed = 1;
};

int run_selftest(const SelftestOptions& o) {
    auto qf = load(o.in);
    if (auto e = require_valid(qf.quiver)) return *e;
    CochainComplex cx(qf.quiver, qf.field);
    SuiteOptions so;
    so.max_degree = o.max_degree;
    so.product_degree = std::max<std::size_t>(1, std::min<std::size_t>(3, o.max_degree));
    so.seed = o.seed;
    auto results = run_invariants(cx, so);
    bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    if (o.in.json) {
        json out = json_header("selftest", qf);
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        out["checks"] = checks;
        out["passed"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        fmt::print("field: {}\n", qf.field.name());
        for (const auto& r : results) {
            fmt::print("{:<4} {:>6}  {}\n", r.passed ? "ok" : "FAIL", r.cases, r.name);
            if (!r.detail.empty()) fmt::print("            {}\n", r.detail);
        }
        fmt::print("{}\n", ok ? "all checks passed" : "some checks FAILED");
    }
    return ok ? kOk : kMismatch;
}

int run_format(const InputOptions& in) {
    auto qf = load(in);
    std::cout << emit_quiver(qf.quiver, qf.field);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of quadratic string algebras"};
    app.require_subcommand(1);
    std::function<int()> action;

    InputOptions validate_in;
    auto* validate = app.add_subcommand("validate", "check the string, gentle, connectivity and finiteness conditions");
    add_input(validate, validate_in, false);
    validate->callback([&] { action = [&] { return run_validate(validate_in); }; });

    DimsOptions dims;
    auto* dims_cmd = app.add_subcommand("dims", "dimension of HH^n for n = 0..N");
    add_input(dims_cmd, dims.in);
    dims_cmd->add_option("--max-degree", dims.max_degree, "largest degree")->required();
    auto* mode = dims_cmd->add_option_group("mode");
    mode->add_flag("--oracle", dims.oracle, "cochain complex ranks (default)");
    mode->add_flag("--formula", dims.formula, "closed-form counts");
    mode->add_flag("--both", dims.both, "both, with an agreement column");
    mode->require_option(0, 1);
    dims_cmd->add_flag("--breakdown", dims.breakdown, "print the summands of each formula");
    dims_cmd->callback([&] { action = [&] { return run_dims(dims); }; });

    ProductOptions cup_opts, bracket_opts;
    for (auto [name, opts, is_cup] : {std::tuple{"cup", &cup_opts, true}, std::tuple{"bracket", &bracket_opts, false}}) {
        auto* cmd = app.add_subcommand(name, is_cup ? "cup products of HH^N and HH^M basis classes"
                                                    : "brackets of HH^N and HH^M basis classes");
        add_input(cmd, opts->in);
        cmd->add_option("--deg", opts->degrees, "degrees N M")->required()->expected(2);
        ProductOptions* p = opts;
        bool c = is_cup;
        cmd->callback([&action, p, c] { action = [p, c] { return run_product(*p, c); }; });
    }

    WitnessOptions witness;
    auto* witness_cmd = app.add_subcommand("witness", "search for a nonvanishing cup product or bracket");
    add_input(witness_cmd, witness.in);
    witness_cmd->add_option("--max-degree", witness.max_degree, "largest n scanned for gentle pairs")->required();
    witness_cmd->add_option("--kind", witness.kind, "cup or bracket")->check(CLI::IsMember({"cup", "bracket"}));
    witness_cmd->callback([&] { action = [&] { return run_witness(witness); }; });

    SelftestOptions selftest;
    auto* selftest_cmd = app.add_subcommand("selftest", "run every invariant check on this quiver");
    add_input(selftest_cmd, selftest.in);
    selftest_cmd->add_option("--max-degree", selftest.max_degree, "largest degree")->required();
    selftest_cmd->add_option("--seed", selftest.seed, "seed for the random samples");
    selftest_cmd->callback([&] { action = [&] { return run_selftest(selftest); }; });

    InputOptions format_in;
    auto* format = app.add_subcommand("format", "print the quiver file in canonical form");
    add_input(format, format_in);
    format->callback([&] { action = [&] { return run_format(format_in); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }
    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInvalid;
    } catch (const QuiverError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
