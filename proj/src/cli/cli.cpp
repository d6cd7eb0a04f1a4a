// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "padic_cartan/classifier.hpp"
#include "padic_cartan/errors.hpp"
#include "padic_cartan/formal_log.hpp"
#include "padic_cartan/regression.hpp"
#include "padic_cartan/report_json.hpp"

namespace pcartan {

namespace {

constexpr const char* kBadPrime = "p must be an odd prime > 3";

bool all_digits(const std::string& s, std::size_t from = 0)
{
    if (s.size() <= from)
        return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(from), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::uint64_t parse_prime(const std::string& text)
{
    if (!all_digits(text) || text.size() > 19)
        throw DomainError(kBadPrime);
    std::uint64_t p = std::stoull(text);
    require_supported_prime(p);
    return p;
}

std::int64_t parse_positive(const std::string& text, const char* what)
{
    if (!all_digits(text) || text.size() > 18 || std::stoll(text) <= 0)
        throw DomainError(std::string(what) + " must be a positive integer, got '" + text + "'");
    return std::stoll(text);
}

/// Flag, then PADIC_CARTAN_PRECISION, then 0 (meaning 4e).
std::int64_t resolve_precision(std::int64_t flag)
{
    if (flag > 0)
        return flag;
    if (const char* env = std::getenv("PADIC_CARTAN_PRECISION"); env && *env)
        return parse_positive(env, "PADIC_CARTAN_PRECISION");
    return 0;
}

struct CurveArgs {
    std::string p;
    std::string a;
    std::string b;
    std::int64_t precision = 0;
    std::uint64_t k = 2;
    bool json = false;
};

void add_curve_options(CLI::App* sub, CurveArgs& args)
{
    sub->add_option("--p", args.p, "odd prime p > 3");
    sub->add_option("--a", args.a, "coefficient A, an integer or num/den");
    sub->add_option("--b", args.b, "coefficient B, an integer or num/den");
    sub->add_option("--precision", args.precision, "working pi-adic precision (default 4e)");
    sub->add_option("--k", args.k, "largest level k tried for beta (default 2)");
    sub->add_flag("--json", args.json, "machine-readable output");
}

struct Request {
    WeierstrassCurve curve;
    ClassifyOptions options;
};

Request make_request(const std::string& p_text, const std::string& a_text,
                     const std::string& b_text, const CurveArgs& args)
{
    if (p_text.empty())
        throw DomainError(kBadPrime);
    if (a_text.empty() || b_text.empty())
        throw DomainError("--a and --b are required");
    const std::uint64_t p = parse_prime(p_text);
    WeierstrassCurve curve(p, parse_rational(a_text), parse_rational(b_text));
    ClassifyOptions options;
    options.hodge.precision = resolve_precision(args.precision);
    options.hodge.k_max = args.k;
    if (options.hodge.precision > 0) {
        const int e = semistability_defect(curve).e;
        if (options.hodge.precision < e)
            throw DomainError("precision must be at least e = " + std::to_string(e));
    }
    return {std::move(curve), options};
}

// Text mode prints the same fields as the JSON, one "path: value" per line.
void print_flat(std::ostream& out, const Json& j, const std::string& prefix)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            print_flat(out, value, prefix.empty() ? key : prefix + "." + key);
        return;
    }
    if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) {
            return x.is_structured();
        })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            print_flat(out, j[i], prefix + "[" + std::to_string(i) + "]");
        return;
    }
    out << prefix << ": ";
    if (j.is_string())
        out << j.get<std::string>();
    else if (j.is_null())
        out << "-";
    else
        out << j.dump();
    out << '\n';
}

void emit(std::ostream& out, const Json& j, bool json)
{
    if (json)
        out << dump(j) << '\n';
    else
        print_flat(out, j, "");
}

int exit_code_for(const std::exception& ex)
{
    if (dynamic_cast<const InconsistencyError*>(&ex))
        return kExitInconsistent;
    if (dynamic_cast<const DomainError*>(&ex) || dynamic_cast<const PrecisionError*>(&ex))
        return kExitInput;
    return kExitFailure;
}

struct BatchLine {
    std::size_t line = 0;
    std::string p;
    std::string a;
    std::string b;
};

std::vector<BatchLine> read_batch(const std::string& path)
{
    // "-" reads standard input.
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file)
            throw DomainError("cannot open batch file '" + path + "'");
    }
    std::istream& in = path == "-" ? std::cin : file;
    std::vector<BatchLine> out;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        BatchLine item{n, "", "", ""};
        if (!(fields >> item.p))
            continue;
        std::string extra;
        if (!(fields >> item.a >> item.b) || (fields >> extra))
            throw DomainError("batch line " + std::to_string(n) + ": expected 'p A B'");
        out.push_back(item);
    }
    return out;
}

int run_batch(std::ostream& out, std::ostream& err, const std::string& path,
              const CurveArgs& args)
{
    const std::vector<BatchLine> lines = read_batch(path);
    struct Slot {
        Json result;
        std::string error;
        int code = kExitOk;
    };
    std::vector<Slot> slots(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
            try {
                Request req = make_request(lines[i].p, lines[i].a, lines[i].b, args);
                slots[i].result = to_json(
                    classify(req.curve.prime(), req.curve.a(), req.curve.b(), req.options));
            } catch (const std::exception& ex) {
                slots[i].error = ex.what();
                slots[i].code = exit_code_for(ex);
            }
        }
    };
    const std::size_t n_threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(n_threads, lines.size()); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    int code = kExitOk;
    Json all = Json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Slot& s = slots[i];
        if (!s.error.empty()) {
            err << "line " << lines[i].line << ": " << s.error << '\n';
            code = std::max(code, s.code);
        }
        if (args.json) {
            all.push_back(s.error.empty() ? s.result
                                          : Json{{"line", lines[i].line}, {"error", s.error}});
        } else if (s.error.empty()) {
            if (i > 0)
                out << '\n';
            print_flat(out, s.result, "");
        }
    }
    if (args.json)
        out << dump(all) << '\n';
    return code;
}

int run_classify(std::ostream& out, std::ostream& err, const CurveArgs& args,
                 const std::string& batch)
{
    if (!batch.empty())
        return run_batch(out, err, batch, args);
    Request req = make_request(args.p, args.a, args.b, args);
    ImageReport r = classify(req.curve.prime(), req.curve.a(), req.curve.b(), req.options);
    emit(out, to_json(r), args.json);
    return kExitOk;
}

int run_beta(std::ostream& out, const CurveArgs& args)
{
    Request req = make_request(args.p, args.a, args.b, args);
    HodgeParameters h = hodge_parameters(req.curve, req.options.hodge);
    emit(out, to_json(h), args.json);
    return kExitOk;
}

int run_logcoeffs(std::ostream& out, const CurveArgs& args, std::vector<std::uint64_t> indices,
                  std::uint64_t terms)
{
    Request req = make_request(args.p, args.a, args.b, args);
    const std::uint64_t p = req.curve.prime();
    const ReductionData red = semistability_defect(req.curve);
    const ModelOverL model = good_model_over_L(req.curve, red.e);
    const std::int64_t precision =
        req.options.hodge.precision > 0 ? req.options.hodge.precision : 4 * red.e;

    Json j;
    j["p"] = p;
    j["e"] = red.e;
    j["A_L"] = model.a.to_string();
    j["B_L"] = model.b.to_string();
    std::vector<std::pair<std::uint64_t, EisensteinElement>> values;
    if (terms > 0) {
        j["method"] = to_string(LogMethod::series_inversion);
        FormalLogPrefix log = series_inversion_logarithm(model.a.to_element(p, red.e, precision),
                                                         model.b.to_element(p, red.e, precision),
                                                         terms);
        for (const auto& [r, d] : log.coeffs)
            if (r % 2 == 1)
                values.emplace_back(r, d);
    } else {
        j["method"] = to_string(LogMethod::yasuda);
        if (indices.empty()) {
            std::uint64_t r = 1;
            for (std::uint64_t i = 0; i <= 2 * args.k + 1; ++i, r *= p)
                indices.push_back(r);
        }
        for (std::uint64_t r : indices)
            values.emplace_back(r, yasuda_coefficient(model, r, precision));
    }
    j["target_pi_precision"] = precision;
    Json coeffs = Json::array();
    for (const auto& [r, d] : values)
        coeffs.push_back(Json{{"r", r}, {"d", to_json(d)}});
    j["coefficients"] = coeffs;
    if (args.json) {
        out << dump(j) << '\n';
    } else {
        out << "p: " << p << "\ne: " << red.e << "\nA_L: " << model.a.to_string()
            << "\nB_L: " << model.b.to_string() << "\nmethod: " << j["method"].get<std::string>()
            << '\n';
        for (const auto& [r, d] : values)
            out << "d_" << r << " = " << d.to_string() << '\n';
    }
    return kExitOk;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    const std::size_t slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    const std::size_t sign = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!all_digits(num, sign) || !all_digits(den))
        throw DomainError("malformed rational '" + text + "' (expected an integer or num/den)");
    Integer d(den);
    if (d == 0)
        throw DomainError("malformed rational '" + text + "': zero denominator");
    Rational q(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"p-adic Galois images of potentially supersingular elliptic curves",
                 "padic-cartan"};
    app.require_subcommand(1);

    CurveArgs classify_args;
    std::string batch;
    CLI::App* classify_cmd = app.add_subcommand("classify", "classify the p-adic image");
    add_curve_options(classify_cmd, classify_args);
    classify_cmd->add_option("--batch", batch,
                             "file of 'p A B' lines ('-' for stdin), classified concurrently, output in order");

    CurveArgs beta_args;
    CLI::App* beta_cmd = app.add_subcommand("beta", "Hodge parameters beta, alpha and n0");
    add_curve_options(beta_cmd, beta_args);

    CurveArgs log_args;
    std::vector<std::uint64_t> log_indices;
    std::uint64_t log_terms = 0;
    CLI::App* log_cmd = app.add_subcommand("logcoeffs", "coefficients d_r of the formal logarithm");
    add_curve_options(log_cmd, log_args);
    log_cmd->add_option("--r", log_indices, "indices r (default p^0 .. p^(2k+1))")
        ->delimiter(',');
    log_cmd->add_option("--terms", log_terms, "all odd d_r up to this index by series inversion");

    std::string div_p;
    int div_e = 3;
    std::int64_t div_v = 0;
    bool div_alpha_inf = false;
    unsigned div_k = 1;
    bool div_force = false;
    bool div_json = false;
    bool div_dump = false;
    CLI::App* div_cmd = app.add_subcommand("divpoly", "Newton polygon of g_k");
    div_cmd->add_option("--p", div_p, "odd prime p > 3")->required();
    div_cmd->add_option("--e", div_e, "ramification index (default 3)");
    div_cmd->add_option("--v-alpha-inv", div_v, "valuation of alpha^-1 (unit part 1)");
    div_cmd->add_flag("--alpha-inf", div_alpha_inf, "alpha = infinity, i.e. alpha^-1 = 0");
    div_cmd->add_option("--k", div_k, "level k (default 1, at most 3 without --force)");
    div_cmd->add_flag("--force", div_force, "lift the k <= 3 cap");
    div_cmd->add_flag("--dump", div_dump, "also print every coefficient valuation");
    div_cmd->add_flag("--json", div_json, "machine-readable output");

    double adelic_h = 0;
    std::string adelic_prime;
    unsigned adelic_level = 1;
    bool adelic_json = false;
    CLI::App* adelic_cmd = app.add_subcommand("adelic-bound", "adelic index bounds");
    adelic_cmd->add_option("--height", adelic_h, "logarithmic Weil height h(j) >= 0")->required();
    adelic_cmd->add_option("--p", adelic_prime, "also report the per-prime bound at this prime");
    adelic_cmd->add_option("--n", adelic_level, "level n for the per-prime bound (default 1)");
    adelic_cmd->add_flag("--json", adelic_json, "machine-readable output");

    bool ex_list = false;
    bool ex_corrupt = false;
    CLI::App* ex_cmd = app.add_subcommand("examples", "run the worked-example regressions");
    ex_cmd->add_flag("--list", ex_list, "list the checks without running them");
    ex_cmd->add_flag("--corrupt-v-alpha-table", ex_corrupt,
                     "fault injection: perturb the v(alpha) table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        if (classify_cmd->parsed())
            return run_classify(out, err, classify_args, batch);
        if (beta_cmd->parsed())
            return run_beta(out, beta_args);
        if (log_cmd->parsed())
            return run_logcoeffs(out, log_args, log_indices, log_terms);
        if (div_cmd->parsed()) {
            const std::uint64_t p = parse_prime(div_p);
            if (div_k > 3 && !div_force)
                throw DomainError("k = " + std::to_string(div_k) +
                                  " exceeds the cap of 3; pass --force to proceed");
            if (div_k == 0)
                throw DomainError("k must be at least 1");
            PadicScalar alpha_inv = div_alpha_inf ? PadicScalar::exact_zero(p)
                                                  : PadicScalar::from_unit(p, 1, div_v, 64);
            SparsePolynomialL g = build_gk(p, div_e, alpha_inv, div_k);
            std::vector<RootClass> roots = root_valuation_partition(g);
            if (div_json) {
                Json j = to_json(g);
                j["roots"] = to_json(roots);
                out << dump(j) << '\n';
                return kExitOk;
            }
            out << "g_" << div_k << " over Q_" << p << "(pi), e = " << div_e
                << ", degree " << g.degree() << '\n';
            if (div_dump)
                dump_valuations(out, g);
            for (const auto& r : roots) {
                if (r.valuation.is_infinite())
                    out << r.multiplicity << (r.multiplicity == 1 ? " root" : " roots")
                        << " equal to 0\n";
                else
                    out << r.multiplicity << (r.multiplicity == 1 ? " root" : " roots")
                        << " of valuation " << r.valuation.to_string() << '\n';
            }
            return kExitOk;
        }
        if (adelic_cmd->parsed()) {
            AdelicBound bound = adelic_bound(adelic_h);
            Json j;
            j["h"] = adelic_h;
            j["bound_a"] = bound.bound_a;
            j["bound_b"] = bound.bound_b;
            if (!adelic_prime.empty()) {
                const std::uint64_t q = std::stoull(all_digits(adelic_prime) ? adelic_prime : "0");
                if (q < 3 || !is_prime(q))
                    throw DomainError("--p must be an odd prime");
                j["per_prime"] = Json{{"p", q},
                                      {"n", adelic_level},
                                      {"index_bound", per_prime_index_bound(q, adelic_level)
                                                          .get_str()}};
            }
            emit(out, j, adelic_json);
            return kExitOk;
        }
        if (ex_cmd->parsed()) {
            if (ex_list) {
                for (const auto& c : regression_checks())
                    out << c.name << "  " << c.description << '\n';
                return kExitOk;
            }
            RegressionFaults faults;
            faults.corrupt_v_alpha_table = ex_corrupt;
            std::size_t passed = 0;
            const auto results = run_regressions(faults);
            for (const auto& r : results) {
                out << (r.outcome.pass ? "PASS " : "FAIL ") << r.name << ": " << r.outcome.detail
                    << '\n';
                passed += r.outcome.pass ? 1 : 0;
            }
            out << passed << "/" << results.size() << " checks passed\n";
            return passed == results.size() ? kExitOk : kExitFailure;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_code_for(ex);
    }
    return kExitFailure;
}

}  // namespace pcartan
