#pragma once

#include <json.hpp>

#include "ehrlab/examples.hpp"
#include "ehrlab/gt.hpp"
#include "ehrlab/hull.hpp"
#include "ehrlab/polynomial.hpp"
#include "ehrlab/search.hpp"

// JSON renderings of the report objects. All numbers are exact integer or
// "p/q" strings; field order is fixed, so parse + re-dump is byte-stable.
namespace ehrlab {

using Json = nlohmann::ordered_json;

inline Json to_json(const UniPolynomial& poly) {
    return Json(poly.to_strings());
}

inline Json to_json(const MembershipCertificate& cert) {
    Json j;
    j["verdict"] = cert.verdict == MembershipCertificate::Verdict::inside ? "inside" : "outside";
    if (cert.verdict == MembershipCertificate::Verdict::inside) {
        Json weights = Json::array();
        for (const auto& w : cert.weights) {
            weights.push_back(rat_string(w));
        }
        j["weights"] = std::move(weights);
    } else {
        Json functional = Json::array();
        for (const auto& f : cert.functional) {
            functional.push_back(int_string(f));
        }
        j["functional"] = std::move(functional);
        j["offset"] = rat_string(cert.offset);
    }
    return j;
}

inline Json to_json(const IdpViolation& violation) {
    Json point = Json::array();
    for (const auto& c : violation.point) {
        point.push_back(int_string(c));
    }
    Json j;
    j["dilate"] = violation.dilate;
    j["point"] = std::move(point);
    j["examined"] = std::to_string(violation.examined);
    j["witness_absent"] = true;
    return j;
}

inline Json to_json(const NegativeCoefficientScan& scan) {
    Json scope;
    scope["kind"] = "order-polytope coefficient signs";
    scope["max_size"] = scan.max_size;
    scope["jobs"] = scan.jobs;

    Json violations = Json::array();
    for (const auto& v : scan.violations) {
        Json item;
        item["poset_size"] = v.poset_size;
        item["relation"] = v.poset_bytes;
        item["degree"] = v.degree;
        item["coefficient"] = rat_string(v.coefficient);
        violations.push_back(std::move(item));
    }

    Json j;
    j["scope"] = std::move(scope);
    j["examined"] = scan.examined;
    j["violations"] = std::move(violations);
    j["checksum"] = scan.checksum;
    j["wall_seconds"] = scan.wall_seconds;
    return j;
}

inline Json to_json(const IdpScan& scan) {
    Json scope;
    scope["kind"] = "partition-polytope decomposition";
    scope["max_a"] = scan.max_a;
    scope["max_b"] = scan.max_b;
    scope["dilate"] = scan.dilate;
    scope["jobs"] = scan.jobs;

    Json violations = Json::array();
    for (const auto& v : scan.violations) {
        Json item;
        item["a"] = v.a;
        item["b"] = v.b;
        item["violation"] = to_json(v.violation);
        violations.push_back(std::move(item));
    }

    Json j;
    j["scope"] = std::move(scope);
    j["examined"] = Json{{"cells", scan.cells_examined},
                         {"points", int_string(scan.points_examined)}};
    j["violations"] = std::move(violations);
    j["checksum"] = scan.checksum;
    j["wall_seconds"] = scan.wall_seconds;
    return j;
}

inline Json to_json(const ExampleReport& report) {
    Json claims = Json::array();
    for (const auto& c : report.claims) {
        Json item;
        item["description"] = c.description;
        item["expected"] = c.expected;
        item["computed"] = c.computed;
        item["source"] = c.source;
        item["pass"] = c.pass;
        claims.push_back(std::move(item));
    }
    Json artifacts = Json::object();
    for (const auto& [name, value] : report.artifacts) {
        artifacts[name] = value;
    }
    Json j;
    j["example"] = report.id;
    j["claims"] = std::move(claims);
    j["artifacts"] = std::move(artifacts);
    j["pass"] = report.all_pass();
    return j;
}

inline Json to_json(const CounterexampleReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    Json j;
    j["checks"] = std::move(checks);
    Json row = Json::array();
    for (long v : report.distinguished_row) {
        row.push_back(v);
    }
    j["distinguished_row"] = std::move(row);
    j["decompositions_examined"] = report.decompositions_examined;
    j["pass"] = report.all_pass();
    return j;
}

}  // namespace ehrlab
