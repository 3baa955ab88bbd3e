#pragma once

#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dwmec/oracle.hpp"

namespace dwmec {

/// Malformed or incomplete problem input.
struct ParseError : Error {
    using Error::Error;
};

/// Insertion-ordered JSON emitter with a fixed number format (9 significant
/// digits), so identical inputs print byte-identical output.
class JsonWriter {
  public:
    JsonWriter& begin_object() { return open('{', '}'); }
    JsonWriter& end_object() { return close('}'); }
    JsonWriter& begin_array() { return open('[', ']'); }
    JsonWriter& end_array() { return close(']'); }

    JsonWriter& key(std::string_view k) {
        comma();
        out_ += '"';
        out_ += k;
        out_ += "\":";
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double v) {
        comma();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.9g", v);
        out_ += buf;
        return *this;
    }
    JsonWriter& value(int v) {
        comma();
        out_ += std::to_string(v);
        return *this;
    }
    JsonWriter& value(bool v) {
        comma();
        out_ += v ? "true" : "false";
        return *this;
    }
    JsonWriter& value(std::string_view v) {
        comma();
        out_ += '"';
        for (char c : v) {
            if (c == '"' || c == '\\') out_ += '\\';
            out_ += c;
        }
        out_ += '"';
        return *this;
    }
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }

    JsonWriter& point(Point p) {
        begin_array();
        value(p.x);
        value(p.y);
        return end_array();
    }

    JsonWriter& kv(std::string_view k, double v) { return key(k), value(v); }
    JsonWriter& kv(std::string_view k, int v) { return key(k), value(v); }
    JsonWriter& kv(std::string_view k, bool v) { return key(k), value(v); }
    JsonWriter& kv(std::string_view k, std::string_view v) { return key(k), value(v); }
    JsonWriter& kv(std::string_view k, const char* v) { return key(k), value(v); }
    JsonWriter& kv(std::string_view k, Point p) { return key(k), point(p); }

    std::string str() const { return out_; }

  private:
    JsonWriter& open(char c, char) {
        comma();
        out_ += c;
        first_ = true;
        return *this;
    }
    JsonWriter& close(char c) {
        out_ += c;
        first_ = false;
        return *this;
    }
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!first_) out_ += ',';
        first_ = false;
    }

    std::string out_;
    bool first_ = true;
    bool pending_value_ = false;
};

/// Input problem: sites plus the optional weight point and displacement
/// budget, with optional oracle overrides.
struct ProblemFile {
    std::vector<Point> sites;
    std::optional<Point> p;
    std::optional<double> budget;
    OracleConfig oracle;
};

inline ProblemFile parse_problem(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("sites") || !j["sites"].is_array())
        throw ParseError("expected an object with a \"sites\" array");

    auto as_point = [](const nlohmann::json& v, const char* what) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError(std::string(what) + " must be an [x, y] pair");
        Point p{v[0].get<double>(), v[1].get<double>()};
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ParseError(std::string(what) + " must be finite");
        return p;
    };

    ProblemFile out;
    for (const auto& v : j["sites"]) out.sites.push_back(as_point(v, "site"));
    if (out.sites.size() < 2) throw ParseError("need at least two sites");
    if (j.contains("p")) out.p = as_point(j["p"], "p");
    if (j.contains("C")) {
        if (!j["C"].is_number() || !(j["C"].get<double>() > 0))
            throw ParseError("C must be a positive number");
        out.budget = j["C"].get<double>();
    }
    if (j.contains("oracle")) {
        const auto& o = j["oracle"];
        if (!o.is_object()) throw ParseError("oracle must be an object");
        auto geti = [&](const char* k, int fallback) {
            if (!o.contains(k)) return fallback;
            if (!o[k].is_number_integer() || o[k].get<int>() <= 0)
                throw ParseError(std::string("oracle.") + k + " must be a positive integer");
            return o[k].get<int>();
        };
        out.oracle.edge_samples = geti("edge_samples", out.oracle.edge_samples);
        out.oracle.plane_grid = geti("plane_grid", out.oracle.plane_grid);
        out.oracle.theta_steps = geti("theta_steps", out.oracle.theta_steps);
        out.oracle.s_steps = geti("s_steps", out.oracle.s_steps);
        out.oracle.refine_rounds = geti("refine_rounds", out.oracle.refine_rounds);
    }
    return out;
}

inline std::vector<Point> parse_batch(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid batch JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("batch file must be an array of [x, y] pairs");
    std::vector<Point> out;
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError("batch entries must be [x, y] pairs");
        out.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return out;
}

// --- result serialization ----------------------------------------------------

inline void write_locus(JsonWriter& w, const Locus& l) {
    switch (l.kind) {
        case LocusKind::node:
            w.kv("locus", "node");
            w.kv("node", l.node);
            w.kv("point", *l.point);
            break;
        case LocusKind::edge_interior:
            w.kv("locus", "edge_interior");
            w.kv("edge", l.edge);
            w.kv("offset", l.offset);
            w.kv("point", *l.point);
            break;
        case LocusKind::infinity:
            w.kv("locus", "infinity");
            w.kv("limit", true);
            break;
    }
}

inline void write_solution(JsonWriter& w, const Solution& s) {
    w.begin_object();
    write_locus(w, s.locus);
    w.kv("value", s.value);
    w.kv("unique", s.unique);
    w.key("ties").begin_array();
    for (const Locus& l : s.ties) {
        w.begin_object();
        write_locus(w, l);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

inline void write_circle(JsonWriter& w, const Circle& c) {
    w.begin_object();
    w.kv("center", c.center);
    w.kv("radius", c.radius);
    w.end_object();
}

inline void write_boundary(JsonWriter& w, const std::vector<BoundaryPrimitive>& prims) {
    w.begin_array();
    for (const BoundaryPrimitive& prim : prims) {
        w.begin_object();
        if (const Arc* a = std::get_if<Arc>(&prim)) {
            w.kv("type", "arc");
            w.kv("center", a->center);
            w.kv("radius", a->radius);
            w.kv("start_angle", a->begin_angle);
            w.kv("sweep", a->sweep);
        } else if (const Segment* s = std::get_if<Segment>(&prim)) {
            w.kv("type", "segment");
            w.kv("from", s->a);
            w.kv("to", s->b);
        } else {
            const Line& l = std::get<Line>(prim);
            w.kv("type", "line");
            w.kv("point", l.point);
            w.kv("dir", l.dir);
        }
        w.end_object();
    }
    w.end_array();
}

}  // namespace dwmec
