/*
 * Copyright 2026 The riordan-kit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "riordan/catalog.hpp"
#include "riordan/rational.hpp"

using namespace riordan;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void check_round_trip(const std::string &value)
{
    CHECK(Rational::parse(value).str() == value);
}

} // namespace

TEST_CASE("show")
{
    const auto r = run({"show", "pascal", "--rows", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 0 0\n1 1 0 0\n1 2 1 0\n1 3 3 1\n");
    const auto id = run({"show", "--g", "1", "--f", "t", "--rows", "3"});
    CHECK(id.out == "1 0 0\n0 1 0\n0 0 1\n");

    const auto csv = run({"--format", "csv", "show", "catalan-array", "--rows", "6"});
    CHECK(csv.code == 0);
    const auto ls = lines(csv.out);
    REQUIRE(ls.size() == 22);
    CHECK(ls[0] == "n,k,value");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto cells = split(ls[i], ',');
        REQUIRE(cells.size() == 3);
        const int n = std::stoi(cells[0]);
        const int k = std::stoi(cells[1]);
        CHECK(Rational::parse(cells[2]) == Rational(k + 1, 2 * n - k + 1) * binomial(2 * n - k + 1, n - k));
        check_round_trip(cells[2]);
    }
    const auto pair = run({"show", "(1/(1-t), t*(1+t)/(1-t))", "--rows", "4"});
    CHECK(pair.out == run({"show", "delannoy", "--rows", "4"}).out);
    const auto rational = run({"--format", "jsonl", "show", "--g", "1/(2-t)", "--rows", "3"});
    for (const auto &line : lines(rational.out)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["value"].is_string());
        check_round_trip(j["value"].get<std::string>());
    }
    CHECK(nlohmann::json::parse(lines(rational.out)[1])["value"] == "1/4");
}

TEST_CASE("inverse and multiply")
{
    const auto inv = run({"inverse", "pascal", "--rows", "5"});
    CHECK(inv.out == " 1  0  0  0 0\n-1  1  0  0 0\n 1 -2  1  0 0\n-1  3 -3  1 0\n 1 -4  6 -4 1\n");
    const auto prod = run({"multiply", "pascal", "(1/(1+t), t/(1+t))", "--rows", "4"});
    CHECK(prod.out == run({"show", "--g", "1", "--f", "t", "--rows", "4"}).out);
    CHECK(run({"multiply", "pascal"}).code == 2);
}

TEST_CASE("onepth")
{
    const auto ok = run({"onepth", "pascal", "-p", "2", "-r", "0", "--orientation", "horizontal", "--rows", "4", "--check-oracle"});
    CHECK(ok.code == 0);
    CHECK(lines(ok.out).back() == "MATCH");
    CHECK(ok.err.find("parent order") != std::string::npos);

    const auto same = run({"onepth", "delannoy", "-p", "1", "--orientation", "horizontal", "--rows", "6"});
    CHECK(same.out == run({"show", "delannoy", "--rows", "6"}).out);
    const auto toe = run({"onepth", "pascal", "-p", "1", "--rows", "4"});
    CHECK(toe.out == "1 0 0 0\n1 1 0 0\n1 1 1 0\n1 1 1 1\n");

    const auto bad = run({"onepth", "fib-catalan", "-p", "3", "-r", "2", "--rows", "5", "--check-oracle", "--corrupt-entry", "3,1"});
    CHECK(bad.code == 1);
    CHECK(lines(bad.out).back().rfind("MISMATCH at (3,1)", 0) == 0);

    const auto raised = run({"--order", "4", "onepth", "catalan-array", "-p", "4", "-r", "3", "--rows", "6", "--check-oracle"});
    CHECK(raised.code == 0);
    CHECK(raised.err.find("parent order 23") != std::string::npos);
    CHECK(run({"onepth", "pascal", "-p", "4", "--rows", "150"}).code == 3);
    CHECK(run({"onepth", "pascal", "--orientation", "diagonal"}).code == 2);
}

TEST_CASE("aseq")
{
    CHECK(run({"--order", "6", "aseq", "pascal"}).out == "A: 1, 1, 0, 0, 0, 0\nZ: 1, 0, 0, 0, 0, 0\n");
    CHECK(lines(run({"--order", "6", "aseq", "fib-catalan"}).out)[0] == "A: 1, 1, 1, 1, 1, 1");
    CHECK(lines(run({"--order", "6", "aseq", "--g", "1/(1-t)", "--f", "t"}).out)[0] == "A: 1, 0, 0, 0, 0, 0");
    for (const char *name : {"pascal", "delannoy", "fib-catalan", "catalan-array"}) {
        for (const char *orient : {"vertical", "horizontal"}) {
            const auto r = run({"--order", "10", "aseq", name, "--formula", "-p", "3", "--orientation", orient});
            CHECK(r.code == 0);
            CHECK(lines(r.out).back() == "EQUAL");
        }
    }
    // no Z line when g(0) != 1
    CHECK(lines(run({"--order", "5", "aseq", "--g", "2", "--f", "t"}).out).size() == 1);
}

TEST_CASE("identities")
{
    const auto all = run({"identities", "--n-max", "4", "--p-max", "2", "--r-max", "1"});
    CHECK(all.code == 0);
    CHECK(lines(all.out).size() == 9);
    for (const auto &line : lines(all.out)) {
        CHECK(line.rfind("PASS ", 0) == 0);
    }
    const auto gould = run({"identities", "--suite", "gould", "--r-grid", "1/2,3"});
    CHECK(gould.code == 0);
    CHECK(gould.out.find("grid={1/2,3}") != std::string::npos);
    CHECK(run({"identities", "--suite", "nope"}).code == 2);
    CHECK(run({"identities", "--r-grid", "1/0"}).code == 2);

    const auto verbose = run({"--format", "jsonl", "identities", "--suite", "chu-vandermonde", "--n-max", "3", "--verbose"});
    CHECK(verbose.code == 0);
    const auto records = lines(verbose.out);
    CHECK(records.size() == 10);
    for (const auto &line : records) {
        const auto j = nlohmann::ordered_json::parse(line);
        std::vector<std::string> keys;
        for (const auto &[k, v] : j.items()) {
            keys.push_back(k);
        }
        CHECK(keys == std::vector<std::string>{"suite", "name", "params", "lhs", "rhs", "pass"});
        CHECK(j["pass"] == true);
        check_round_trip(j["lhs"].get<std::string>());
        check_round_trip(j["rhs"].get<std::string>());
    }

    const auto perturbed = run({"identities", "--suite", "summation", "--n-max", "3", "--perturb-beta", "1:1/2"});
    CHECK(perturbed.code == 1);
    CHECK(perturbed.out.find("first counterexample") != std::string::npos);
    CHECK(perturbed.out.find("[p=1;r=0;n=1;k=0]") != std::string::npos);
    const auto csv = run({"--format", "csv", "identities", "--suite", "pascal-onepth", "--n-max", "2", "--perturb-beta", "1"});
    CHECK(csv.code == 1);
    CHECK(lines(csv.out)[0] == "suite,name,params,lhs,rhs,pass");
    CHECK(lines(csv.out)[1] == "pascal-onepth,pascal-onepth,\"p=1;r=0;n=1;k=0\",2,3,false");
}

TEST_CASE("bell and series")
{
    CHECK(run({"bell", "--x", "1,1,1", "--n", "4", "--k", "2"}).out == "7\n");
    CHECK(run({"bell", "--series", "t+t^2", "--n", "3", "--k", "2"}).out == "6\n");
    CHECK(run({"bell", "--partitions", "--n", "6", "--k", "3"}).out == "4+1+1\n3+2+1\n2+2+2\n");
    CHECK(run({"bell", "--x", "1,2", "--series", "t"}).code == 2);
    CHECK(run({"bell", "--x", "1,2", "--n", "5", "--k", "1"}).code == 3);

    CHECK(run({"--order", "7", "series", "(1-sqrt(1-4*t))/(2*t)"}).out == "(1-sqrt(1-4*t))/(2*t): 1, 1, 2, 5, 14, 42, 132, 429\n");
    CHECK(run({"--order", "6", "series", "fuss:3"}).out == "fuss:3: 1, 1, 3, 12, 55, 273, 1428\n");
    CHECK(run({"series", "catalan", "--order", "4"}).out == run({"--order", "4", "series", "catalan"}).out);
    CHECK(run({"series", "1/(1-t"}).code == 2);
    CHECK(run({"series", "1/t"}).code == 2);
    CHECK(run({"--order", "0", "series", "t"}).code == 2);
    const auto csv = run({"--format", "csv", "--order", "3", "series", "central-binomial"});
    CHECK(lines(csv.out) == std::vector<std::string>{"series,n,value", "\"central-binomial\",0,1", "\"central-binomial\",1,2",
                                                     "\"central-binomial\",2,6", "\"central-binomial\",3,20"});
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frob"}).code == 2);
    CHECK(run({"show", "nope"}).code == 2);
    CHECK(run({"show"}).code == 2);
    CHECK(run({"show", "pascal", "--g", "1"}).code == 2);
    CHECK(run({"show", "pascal", "--rows", "26"}).code == 3);
    CHECK(run({"--format", "xml", "show", "pascal"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
