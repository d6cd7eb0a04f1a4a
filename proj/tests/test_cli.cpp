// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "padic_cartan/cli.hpp"
#include "padic_cartan/errors.hpp"
#include "padic_cartan/report_json.hpp"

using namespace pcartan;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "padic-cartan");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// "path: value" lines of the text mode.
std::map<std::string, std::string> text_fields(const std::string& text)
{
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(": ");
        REQUIRE(colon != std::string::npos);
        out[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return out;
}

void flatten(const Json& j, const std::string& prefix, std::map<std::string, std::string>& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && j[0].is_structured()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out[prefix] = j.is_string() ? j.get<std::string>() : j.is_null() ? "-" : j.dump();
    }
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("rational parsing")
    {
        CHECK(parse_rational("59003/11") == Rational(59003, 11));
        CHECK(parse_rational("-4/6") == Rational(-2, 3));
        CHECK(parse_rational("+7") == 7);
        for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1/-2", "--1", "1 "})
            CHECK_THROWS_AS(parse_rational(bad), DomainError);
    }

    TEST_CASE("classify the first worked example as JSON")
    {
        Run r = run({"classify", "--p", "11", "--a", "1331", "--b", "121", "--json"});
        CHECK(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["n0"] == 1);
        CHECK(j["index_at_level"] == 3);
        CHECK(j["image_label"] == "preimage_of_index3_subgroup_level_1");
        CHECK(dump(j) + "\n" == r.out);
    }

    TEST_CASE("text and JSON modes carry the same fields")
    {
        for (std::vector<std::string> curve :
             {std::vector<std::string>{"--p", "11", "--a", "1331", "--b", "121"},
              {"--p", "11", "--a", "11", "--b", "121"},
              {"--p", "29", "--a", "707281", "--b", "841"},
              {"--p", "11", "--a", "0", "--b", "1"}}) {
            std::vector<std::string> text_args{"classify"}, json_args{"classify", "--json"};
            text_args.insert(text_args.end(), curve.begin(), curve.end());
            json_args.insert(json_args.end(), curve.begin(), curve.end());
            Run t = run(text_args), js = run(json_args);
            REQUIRE(t.code == 0);
            REQUIRE(js.code == 0);
            std::map<std::string, std::string> from_json;
            flatten(Json::parse(js.out), "", from_json);
            CHECK(text_fields(t.out) == from_json);
        }
    }

    TEST_CASE("out-of-scope is still a classification")
    {
        Run r = run({"classify", "--p", "11", "--a", "11", "--b", "121"});
        CHECK(r.code == 0);
        CHECK(r.out.find("image_label: out_of_scope(canonical_subgroup)") != std::string::npos);
    }

    TEST_CASE("input errors exit with 2")
    {
        Run r = run({"classify", "--p", "4", "--a", "1", "--b", "1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("p must be an odd prime > 3") != std::string::npos);
        CHECK(run({"classify", "--p", "3", "--a", "1", "--b", "1"}).code == 2);
        CHECK(run({"classify", "--p", "x", "--a", "1", "--b", "1"}).code == 2);
        CHECK(run({"classify", "--p", "11", "--a", "1/0", "--b", "1"}).code == 2);
        CHECK(run({"classify", "--p", "11", "--a", "-3", "--b", "2"}).code == 2);
        CHECK(run({"classify", "--p", "11", "--a", "1"}).code == 2);
        CHECK(run({"classify", "--p", "11", "--a", "1331", "--b", "121", "--precision", "2"}).code ==
              2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({}).code == 2);
    }

    TEST_CASE("precision from the environment")
    {
        setenv("PADIC_CARTAN_PRECISION", "2", 1);
        Run low = run({"classify", "--p", "11", "--a", "1331", "--b", "121"});
        setenv("PADIC_CARTAN_PRECISION", "20", 1);
        Run high = run({"beta", "--p", "11", "--a", "1331", "--b", "121", "--json"});
        Run flag = run({"classify", "--p", "11", "--a", "1331", "--b", "121", "--precision", "12"});
        unsetenv("PADIC_CARTAN_PRECISION");
        CHECK(low.code == 2);
        CHECK(low.err.find("precision must be at least e = 3") != std::string::npos);
        CHECK(high.code == 0);
        CHECK(flag.code == 0);
    }

    TEST_CASE("beta and logcoeffs")
    {
        Run b = run({"beta", "--p", "11", "--a", "1331", "--b", "121", "--json"});
        REQUIRE(b.code == 0);
        Json j = Json::parse(b.out);
        CHECK(j["v_beta"] == "4/3");
        CHECK(j["alpha"]["value"]["unit"] == "5");
        Run l = run({"logcoeffs", "--p", "11", "--a", "1331", "--b", "121", "--json"});
        REQUIRE(l.code == 0);
        Json lj = Json::parse(l.out);
        CHECK(lj["coefficients"].size() == 6);
        CHECK(lj["coefficients"][1]["r"] == 11);
        CHECK(lj["coefficients"][1]["d"]["coords"] == Json::array({"0", "0", "20"}));
        Run s = run({"logcoeffs", "--p", "11", "--a", "1331", "--b", "121", "--terms", "30"});
        CHECK(s.code == 0);
        CHECK(s.out.find("method: series_inversion") != std::string::npos);
        CHECK(s.out.find("d_29 = ") != std::string::npos);
        Run r = run({"logcoeffs", "--p", "11", "--a", "1331", "--b", "121", "--r", "121"});
        CHECK(r.out.find("d_121 = 59003/11 + O(pi^12)") != std::string::npos);
        Run list = run({"logcoeffs", "--p", "11", "--a", "1331", "--b", "121", "--r", "11,121"});
        CHECK(list.code == 0);
        CHECK(list.out.find("d_11 = ") != std::string::npos);
        CHECK(list.out.find("d_121 = ") != std::string::npos);
    }

    TEST_CASE("divpoly partitions and the cap")
    {
        Run k1 = run({"divpoly", "--p", "11", "--e", "3", "--v-alpha-inv", "0", "--k", "1"});
        CHECK(k1.code == 0);
        CHECK(k1.out.find("120 roots of valuation 1/120\n") != std::string::npos);
        Run k2 = run({"divpoly", "--p", "11", "--e", "3", "--v-alpha-inv", "0", "--k", "2"});
        CHECK(k2.out.find("120 roots of valuation 1/120\n") != std::string::npos);
        CHECK(k2.out.find("14520 roots of valuation 1/14520\n") != std::string::npos);
        Run inf = run({"divpoly", "--p", "11", "--e", "3", "--alpha-inf", "--k", "2"});
        CHECK(inf.out == k2.out);
        Run capped = run({"divpoly", "--p", "11", "--k", "4"});
        CHECK(capped.code == 2);
        CHECK(capped.err.find("--force") != std::string::npos);
        Run forced = run({"divpoly", "--p", "5", "--e", "3", "--k", "4", "--force", "--json"});
        CHECK(forced.code == 0);
        CHECK(Json::parse(forced.out)["roots"].size() == 5);
        Run dumped = run({"divpoly", "--p", "11", "--k", "1", "--dump"});
        CHECK(dumped.out.find("\n11 5/3\n") != std::string::npos);
    }

    TEST_CASE("adelic bounds")
    {
        Run r = run({"adelic-bound", "--height", "1000000", "--p", "11", "--n", "2", "--json"});
        REQUIRE(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["bound_a"].get<double>() > 0);
        CHECK(j["per_prime"]["index_bound"] == "6655");
        CHECK(run({"adelic-bound", "--height", "-2"}).code == 2);
        CHECK(run({"adelic-bound", "--height", "0"}).code == 0);
    }

    TEST_CASE("examples, listing and fault injection")
    {
        Run ok = run({"examples"});
        CHECK(ok.code == 0);
        CHECK(ok.out.find("FAIL") == std::string::npos);
        Run list = run({"examples", "--list"});
        CHECK(list.code == 0);
        CHECK(list.out.find("ex1_v_alpha_inverse") != std::string::npos);
        CHECK(list.out.find("PASS") == std::string::npos);
        Run bad = run({"examples", "--corrupt-v-alpha-table"});
        CHECK(bad.code != 0);
        CHECK(bad.out.find("FAIL ex1_v_alpha_inverse") != std::string::npos);
    }

    TEST_CASE("batch output keeps input order")
    {
        const auto path = std::filesystem::temp_directory_path() / "padic_cartan_batch_test.txt";
        {
            std::ofstream f(path);
            f << "# p A B\n11 1331 121\n\n23 279841 529\n4 1 1\n11 11 121   # canonical\n";
        }
        Run r = run({"classify", "--batch", path.string(), "--json"});
        std::filesystem::remove(path);
        CHECK(r.code == 2);
        Json j = Json::parse(r.out);
        REQUIRE(j.size() == 4);
        CHECK(j[0]["image_label"] == "preimage_of_index3_subgroup_level_1");
        CHECK(j[1]["image_label"] == "preimage_of_Cns_plus_level_2");
        CHECK(j[2]["line"] == 5);
        CHECK(j[2]["error"] == "p must be an odd prime > 3");
        CHECK(j[3]["image_label"] == "out_of_scope(canonical_subgroup)");
        CHECK(r.err.find("line 5:") != std::string::npos);
    }
}
