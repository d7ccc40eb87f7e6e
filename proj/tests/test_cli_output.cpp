#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the built binary: exit-code contract, byte-identical
// CSV across runs, and JSON documents validating against the shipped schema.

using json = nlohmann::json;

namespace {

std::string bin() {
    const char* b = std::getenv("CHARLIER_BIN");
    REQUIRE(b != nullptr);
    return b;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

// minimal structural validator for the draft-07 subset the schema uses
bool validate(const json& schema, const json& value, std::string& why);

bool check_type(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    return false;
}

bool validate(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type") && !check_type(schema["type"], value)) {
        why = "type mismatch: expected " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema["enum"])
            if (e == value) ok = true;
        if (!ok) {
            why = "enum mismatch";
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& r : schema["required"])
            if (!value.contains(r.get<std::string>())) {
                why = "missing required field " + r.get<std::string>();
                return false;
            }
    if (schema.contains("properties"))
        for (auto& [k, sub] : schema["properties"].items())
            if (value.contains(k) && !validate(sub, value[k], why)) {
                why = k + ": " + why;
                return false;
            }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validate(schema["items"], item, why)) {
                why = "items: " + why;
                return false;
            }
    return true;
}

void check_against_schema(const std::string& doc_text) {
    const char* sp = std::getenv("CHARLIER_SCHEMA");
    REQUIRE(sp != nullptr);
    std::ifstream f(sp);
    REQUIRE(f.good());
    json schema = json::parse(f);
    json doc = json::parse(doc_text);
    std::string why;
    bool ok = validate(schema, doc, why);
    INFO(why);
    CHECK(ok);
}

}  // namespace

TEST_CASE("eval prints the known hand value") {
    RunResult r = run("eval --a 1 --n 2 --x 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("decimal: -1") != std::string::npos);
    CHECK(r.out.find("formula: oracle") != std::string::npos);
}

TEST_CASE("exit 2 on flag errors") {
    CHECK(run("eval --a 1 --x 2").exit_code == 2);            // missing --n
    CHECK(run("eval --a 1 --n 3").exit_code == 2);            // no point flag
    CHECK(run("eval --a 1 --n 3 --x 1 --y 2").exit_code == 2);  // two point flags
    CHECK(run("compare --a 1 --n 64 --formula outer").exit_code == 2);  // empty point set
    CHECK(run("compare --a 1 --n 4096 --y 2 --formula outer").exit_code == 2);  // needs --allow-slow
    CHECK(run("zeros --a 1 --n 0").exit_code == 2);
    CHECK(run("regionmap --nx 4000 --ny 4000").exit_code == 2);  // cell cap
}

TEST_CASE("exit 3 on formula precondition violations") {
    RunResult r = run("eval --a 1 --n 100 --y 0.5 --formula outer");  // y on [0,1]
    CHECK(r.exit_code == 3);
    CHECK(run("eval --a 1 --n 100 --t -5 --formula intermediate").exit_code == 3);
    CHECK(run("eval --a 1 --n 100 --t -4 --formula turn_left").exit_code == 3);
    CHECK(run("eval --a 1 --n 100 --y 1.5 --formula interior").exit_code == 3);
}

TEST_CASE("regionmap CSV is deterministic across runs and RFC-4180 framed") {
    std::string args = "regionmap --a 1 --n 512 --nx 17 --ny 9 --workers 3";
    RunResult r1 = run(args);
    RunResult r2 = run(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("\r\n") != std::string::npos);
    CHECK(r1.out.rfind("\r\n") == r1.out.size() - 2);
}

TEST_CASE("compare CSV is deterministic") {
    std::string args = "compare --a 1 --n 64,128 --y 2,-1 --formula outer,origin --workers 2";
    RunResult r1 = run(args);
    RunResult r2 = run(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("JSON documents validate against the shipped schema") {
    RunResult e = run("eval --a 1 --n 8 --x 3.5 --json");
    CHECK(e.exit_code == 0);
    check_against_schema(e.out);

    RunResult c = run("compare --a 1 --n 64 --y 2 --formula outer --json");
    CHECK(c.exit_code == 0);
    check_against_schema(c.out);

    RunResult m = run("regionmap --a 1 --n 256 --nx 5 --ny 3 --json");
    CHECK(m.exit_code == 0);
    check_against_schema(m.out);

    RunResult z = run("zeros --a 1 --n 12 --density --json");
    CHECK(z.exit_code == 0);
    check_against_schema(z.out);

    json doc = json::parse(z.out);
    CHECK(doc["schema_version"] == "1.0");
    CHECK(doc["rows"].size() == 12);
}

TEST_CASE("zeros CSV carries predictions when asked") {
    RunResult r = run("zeros --a 1 --n 12 --predictions");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("prediction_source") != std::string::npos);
    CHECK(r.out.find("corollary_integer") != std::string::npos);
}
