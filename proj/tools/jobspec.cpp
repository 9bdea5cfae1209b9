#include "jobspec.hpp"

#include "orbcol/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace orbcol::cli {

namespace {

std::string expect_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw UsageError(where + ": expected a string");
    return j.get<std::string>();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Field field_of(const Json& doc) {
    if (!doc.contains("field") || doc["field"].is_null()) return Field();
    const Json& f = doc["field"];
    if (!f.is_object() || !f.contains("minpoly") || !f["minpoly"].is_array())
        throw UsageError("field: expected {\"minpoly\": [c0, c1, 1]}");
    std::vector<Rational> cs;
    for (const auto& c : f["minpoly"]) {
        if (c.is_number_integer()) cs.emplace_back(c.get<long>());
        else cs.push_back(parse_rational(expect_string(c, "field.minpoly")));
    }
    return Field::from_minpoly(cs);
}

}  // namespace

const PointFF& JobSpec::section(const std::string& name) const {
    for (const auto& [n, P] : sections)
        if (n == name) return P;
    throw UsageError("unknown section '" + name + "'");
}

Json JobSpec::block(const std::string& command) const {
    if (doc.contains(command)) {
        if (!doc[command].is_object()) throw UsageError(command + ": expected an object");
        return doc[command];
    }
    return Json::object();
}

JobSpec parse_job(const Json& doc) {
    if (!doc.is_object()) throw UsageError("job document must be an object");
    if (doc.contains("schema_version") && doc["schema_version"] != 1) throw UsageError("unsupported schema_version");
    JobSpec job;
    job.doc = doc;
    job.field = field_of(doc);
    if (!doc.contains("curve") || !doc["curve"].is_object()) throw UsageError("curve: missing");
    const Json& c = doc["curve"];
    if (!c.contains("A") || !c.contains("B")) throw UsageError("curve: needs A and B");
    job.curve = CurveFF::make(parse_expr(expect_string(c["A"], "curve.A"), job.field),
                              parse_expr(expect_string(c["B"], "curve.B"), job.field));
    if (doc.contains("sections")) {
        if (!doc["sections"].is_object()) throw UsageError("sections: expected an object");
        for (const auto& [name, s] : doc["sections"].items()) {
            PointFF P;
            if (s.contains("combo")) {
                P = parse_combo(expect_string(s["combo"], "sections." + name), job);
            } else if (s.contains("x") && s.contains("y")) {
                P = PointFF(parse_expr(expect_string(s["x"], "sections." + name + ".x"), job.field),
                            parse_expr(expect_string(s["y"], "sections." + name + ".y"), job.field));
            } else if (s.is_string() && s.get<std::string>() == "O") {
                P = PointFF::infinity();
            } else {
                throw UsageError("sections." + name + ": expected {x, y}, {combo} or \"O\"");
            }
            require_on_curve(job.C(), P, name.c_str());
            job.sections.emplace_back(name, P);
        }
    }
    return job;
}

JobSpec load_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read job file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    return parse_job(doc);
}

OrderElem parse_order_elem(std::string_view text, const OrderSpec& spec) {
    OrderElem acc{spec, 0, 0};
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool first = true;
    skip();
    if (i == text.size()) throw ParseError("empty order element", 0);
    while (i < text.size()) {
        i64 sign = 1;
        skip();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        first = false;
        i64 coef = 1;
        bool have_num = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            if (i - start > 15) throw ParseError("coefficient too large", start);
            coef = std::stoll(std::string(text.substr(start, i - start)));
            have_num = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
                if (text.substr(i, 2) != "th") throw ParseError("expected 'theta'", i);
            }
        }
        if (text.substr(i, 2) == "th") {
            i += text.substr(i, 5) == "theta" ? 5 : 2;
            acc.b += sign * coef;
        } else if (have_num) {
            acc.a += sign * coef;
        } else {
            throw ParseError("expected an integer or 'theta'", i);
        }
        skip();
    }
    return acc;
}

PointFF parse_combo(std::string_view text, const JobSpec& job) {
    PointFF acc = PointFF::infinity();
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool first = true;
    skip();
    while (i < text.size()) {
        bool neg = false;
        if (text[i] == '+' || text[i] == '-') {
            neg = text[i] == '-';
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        first = false;
        std::optional<std::string_view> coef;
        if (i < text.size() && text[i] == '[') {
            auto close = text.find(']', i);
            if (close == std::string_view::npos) throw ParseError("missing ']'", i);
            coef = text.substr(i + 1, close - i - 1);
            i = close + 1;
            skip();
        }
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        if (start == i) throw ParseError("expected a section name", i);
        PointFF P = job.section(std::string(text.substr(start, i - start)));
        if (coef) {
            auto e = detect_cm(job.C());
            OrderSpec spec = e ? e->order : OrderSpec::make(1, 1);
            OrderElem alpha;
            try {
                alpha = parse_order_elem(trim(*coef), spec);
            } catch (const ParseError& err) {
                throw ParseError("in multiplier: " + std::string(err.what()), start);
            }
            if (alpha.b == 0) P = scalar_mul(job.C(), alpha.a, P);
            else if (!e) throw MathError("theta used on a curve without a built-in CM structure");
            else P = cm_apply(job.C(), *e, alpha, P);
        }
        acc = add(job.C(), acc, neg ? negate(P) : P);
        skip();
    }
    if (first) throw ParseError("empty section combination", 0);
    return acc;
}

}  // namespace orbcol::cli
