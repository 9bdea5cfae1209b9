#include "cli.hpp"

#include "jobspec.hpp"
#include "orbcol/expr.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace orbcol::cli {

namespace {

constexpr int kSchemaVersion = 1;

// --- machine output -------------------------------------------------------

Json coeff_json(const Field& F, const FieldElem& c) {
    if (F.degree() == 1) return to_string(c.c0);
    return Json::array({to_string(c.c0), to_string(c.c1)});
}

Json poly_json(const Poly& p) {
    Json cs = Json::array();
    for (const auto& c : p.coeffs()) cs.push_back(coeff_json(p.field(), c));
    return Json{{"text", to_string(p)}, {"coeffs", cs}};
}

Json elem_json(const OrderElem& x) { return Json{{"a", x.a}, {"b", x.b}, {"text", to_string(x)}}; }

Json branches_json(const std::vector<BranchVerdict>& bs) {
    Json out = Json::array();
    for (const auto& b : bs) out.push_back(Json{{"modulus", poly_json(b.modulus)}, {"holds", b.holds}});
    return out;
}

Json verdict_json(const Verdict& v) {
    Json j{{"text", to_string(v)}};
    switch (v.kind) {
        case Verdict::Kind::A:
            j["kind"] = "A";
            j["k"] = v.k;
            j["i"] = v.i;
            break;
        case Verdict::Kind::B:
            j["kind"] = "B";
            j["k1"] = v.k1;
            j["k2"] = v.k2;
            break;
        case Verdict::Kind::C:
            j["kind"] = "C";
            j["alpha1"] = elem_json(v.triple->alpha1);
            j["alpha2"] = elem_json(v.triple->alpha2);
            j["beta"] = elem_json(v.triple->beta);
            break;
        case Verdict::Kind::NoneFound:
            j["kind"] = "NoneFound";
            j["bounds"] = Json{{"K", v.bounds.K}, {"box", v.bounds.box}, {"torsion", v.bounds.torsion}};
            break;
        case Verdict::Kind::Degenerate:
            j["kind"] = "Degenerate";
            j["reason"] = v.reason;
            break;
    }
    return j;
}

// --- text output ----------------------------------------------------------

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            bool last = i + 1 == r.size();
            std::string cell = r[i];
            if (!last) cell.resize(w[i], ' ');
            line += cell;
            if (!last) line += "  ";
        }
        out << line << '\n';
    }
}

// --- command state --------------------------------------------------------

struct Options {
    std::string format = "text";
    unsigned jobs = 1;
    std::string job_path;
    // classify
    std::optional<long> K, box, torsion;
    // collide
    std::optional<long> m1, m2;
    // growth
    std::optional<long> nmax;
    // verify
    std::optional<std::string> lambda, modulus, P, Q, alpha;
    std::optional<long> m;
    // order
    i64 D = 0, f = 0, a = 0, M = 0;
    std::string order_alpha;
};

template <class T>
T param(const Json& block, const char* key, const std::optional<T>& flag, std::optional<T> fallback = std::nullopt) {
    if (flag) return *flag;
    if (block.contains(key)) {
        try {
            return block[key].get<T>();
        } catch (const nlohmann::json::exception&) {
            throw UsageError(std::string("parameter '") + key + "' has the wrong type");
        }
    }
    if (fallback) return *fallback;
    throw UsageError(std::string("missing parameter '") + key + "'");
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void emit(const std::string& command, Json result) {
        Json doc{{"schema_version", kSchemaVersion}, {"command", command}, {"result", std::move(result)}};
        out_ << doc.dump(2) << '\n';
    }
    bool machine() const { return o_.format == "machine"; }

    void classify() {
        JobSpec job = load_job(o_.job_path);
        Json b = job.block("classify");
        ClassifyBounds bounds;
        bounds.K = param<long>(b, "K", o_.K, bounds.K);
        bounds.box = param<long>(b, "box", o_.box, bounds.box);
        bounds.torsion = param<long>(b, "torsion", o_.torsion, bounds.torsion);
        if (bounds.K < 1 || bounds.box < 1 || bounds.torsion < 1) throw UsageError("bounds must be positive");
        auto names = triple_names(b);
        Verdict v = classify_sections(job, names, bounds);
        if (machine()) emit("classify", verdict_json(v));
        else out_ << to_string(v) << '\n';
    }

    void collide() {
        JobSpec job = load_job(o_.job_path);
        Json b = job.block("collide");
        long M1 = param<long>(b, "m1", o_.m1), M2 = param<long>(b, "m2", o_.m2);
        if (M1 < 1 || M2 < 1) throw UsageError("--m1 and --m2 must be at least 1");
        auto names = triple_names(b);
        ScanOptions so;
        so.jobs = o_.jobs;
        auto rep = collision_scan(job.C(), job.section(names[0]), job.section(names[1]), job.section(names[2]), M1,
                                  M2, so);
        if (machine()) {
            Json entries = Json::array();
            for (const auto& e : rep.entries)
                entries.push_back(Json{{"factor", poly_json(e.factor)},
                                       {"m1", e.m1},
                                       {"m2", e.m2},
                                       {"verified", e.verified},
                                       {"branches1", branches_json(e.branches1)},
                                       {"branches2", branches_json(e.branches2)}});
            Json every = Json::array();
            for (auto [a, c] : rep.everywhere) every.push_back(Json::array({a, c}));
            emit("collide", Json{{"P1", names[0]},
                                 {"P2", names[1]},
                                 {"Q", names[2]},
                                 {"M1", M1},
                                 {"M2", M2},
                                 {"entries", entries},
                                 {"everywhere", every}});
            return;
        }
        out_ << "collisions of " << names[0] << ", " << names[1] << " at " << names[2] << " for |m1| <= " << M1
             << ", |m2| <= " << M2 << ": " << rep.entries.size() << " factors, " << rep.verified_count()
             << " verified\n";
        if (!rep.everywhere.empty()) {
            out_ << "identically satisfied at (m1, m2) =";
            for (auto [a, c] : rep.everywhere) out_ << " (" << a << ", " << c << ")";
            out_ << '\n';
        }
        std::vector<std::vector<std::string>> rows{{"m1", "m2", "verified", "factor"}};
        for (const auto& e : rep.entries)
            rows.push_back({std::to_string(e.m1), std::to_string(e.m2), yes_no(e.verified), to_string(e.factor)});
        if (!rep.entries.empty()) print_table(out_, rows);
    }

    void growth() {
        JobSpec job = load_job(o_.job_path);
        Json b = job.block("growth");
        long nmax = param<long>(b, "nmax", o_.nmax);
        if (nmax < 1) throw UsageError("--nmax must be at least 1");
        std::string pn = param<std::string>(b, "P", o_.P, std::string("P1"));
        std::string qn = param<std::string>(b, "Q", o_.Q, std::string("Q"));
        const PointFF& P = job.section(pn);
        auto t = is_torsion_section(job.C(), P, 12);
        if (t.kind == TorsionVerdict::Kind::TorsionOfOrder)
            throw MathError(pn + " is torsion of order " + std::to_string(t.n));
        auto rows = degree_growth(job.C(), P, job.section(qn), nmax, o_.jobs);
        if (machine()) {
            Json rs = Json::array();
            for (const auto& r : rows) {
                Json row{{"n", r.n}, {"degree", r.degree}};
                row["ratio"] = r.degree < 0 ? Json() : Json(to_string(make_rational(r.degree, r.n * r.n)));
                rs.push_back(row);
            }
            emit("growth", Json{{"P", pn}, {"Q", qn}, {"rows", rs}});
            return;
        }
        std::vector<std::vector<std::string>> table{{"n", "degree", "degree/n^2"}};
        for (const auto& r : rows) {
            std::ostringstream ratio;
            if (r.degree < 0) ratio << "identically satisfied";
            else ratio << std::fixed << std::setprecision(4) << double(r.degree) / double(r.n * r.n);
            table.push_back({std::to_string(r.n), std::to_string(r.degree), ratio.str()});
        }
        print_table(out_, table);
    }

    void verify() {
        JobSpec job = load_job(o_.job_path);
        Json b = job.block("verify");
        std::optional<std::string> lam = o_.lambda, mod = o_.modulus;
        if (!lam && !mod) {
            if (b.contains("lambda")) lam = param<std::string>(b, "lambda", {});
            if (b.contains("modulus")) mod = param<std::string>(b, "modulus", {});
        }
        if (lam.has_value() == mod.has_value()) throw UsageError("give exactly one of --lambda and --modulus");
        Base base = lam ? Base::rational(job.field, parse_rational(*lam))
                        : Base::algebraic(squarefree_checked(parse_poly(*mod, job.field)));
        std::string qn = param<std::string>(b, "Q", o_.Q, std::string("Q"));
        Relation rel;
        std::string text;
        std::optional<std::string> alpha_text = o_.alpha;
        if (!alpha_text && !o_.m && b.contains("alpha")) alpha_text = param<std::string>(b, "alpha", {});
        if (alpha_text) {
            auto e = detect_cm(job.C());
            if (!e) throw MathError("the curve has no built-in CM structure");
            OrderElem alpha = parse_order_elem(*alpha_text, e->order);
            rel = KillRelation{*e, alpha, job.section(qn)};
            text = "[" + to_string(alpha) + "]" + qn + " = O";
        } else {
            std::string pn = param<std::string>(b, "P", o_.P, std::string("P1"));
            long m = param<long>(b, "m", o_.m);
            if (m == 0) throw UsageError("--m must be nonzero");
            rel = MultipleRelation{job.section(pn), m, job.section(qn)};
            text = "[" + std::to_string(m) + "]" + pn + " = " + qn;
        }
        auto vs = verify_relation_at(job.C(), base, rel);
        bool all = std::all_of(vs.begin(), vs.end(), [](const BranchVerdict& v) { return v.holds; });
        if (machine()) {
            Json bj = lam ? Json{{"lambda", to_string(base.value())}} : Json{{"modulus", poly_json(base.modulus())}};
            emit("verify", Json{{"relation", text}, {"base", bj}, {"branches", branches_json(vs)}, {"all_hold", all}});
            return;
        }
        out_ << text << (lam ? " at l = " + *lam : " modulo " + to_string(base.modulus())) << '\n';
        std::vector<std::vector<std::string>> rows{{"holds", "branch"}};
        for (const auto& v : vs) rows.push_back({v.holds ? "true" : "false", to_string(v.modulus)});
        print_table(out_, rows);
    }

    void solve_shift() {
        auto spec = OrderSpec::make(o_.D, o_.f);
        auto w = orbcol::solve_shift(spec, o_.a);
        if (machine()) emit("order solve-shift", Json{{"D", o_.D}, {"f", o_.f}, {"a", w.a}, {"m", w.m}, {"r", w.r}, {"s", w.s}});
        else out_ << "m=" << w.m << " r=" << w.r << " s=" << w.s << '\n';
    }

    void find_residue() {
        if (o_.M < 1) throw UsageError("--M must be at least 1");
        auto spec = OrderSpec::make(o_.D, o_.f);
        i64 l = orbcol::find_residue(spec, o_.M);
        if (machine()) emit("order find-residue", Json{{"D", o_.D}, {"f", o_.f}, {"M", o_.M}, {"l", l}});
        else out_ << "l=" << l << " (a = " << 2 * l - 1 << " mod " << 2 * o_.M << ")\n";
    }

    void induced_map() {
        auto spec = OrderSpec::make(o_.D, o_.f);
        auto mod = theta_rep(spec, o_.a);
        OrderElem x = parse_order_elem(o_.order_alpha, spec);
        i64 img = orbcol::induced_map(mod, x);
        bool bij = induced_map_is_bijective(mod, x);
        if (machine()) {
            emit("order induced-map", Json{{"D", o_.D},
                                           {"f", o_.f},
                                           {"a", o_.a},
                                           {"N", mod.N},
                                           {"theta_rep", mod.theta_rep},
                                           {"alpha", elem_json(x)},
                                           {"norm", norm(x)},
                                           {"image", img},
                                           {"bijective", bij}});
            return;
        }
        out_ << "N=" << mod.N << " theta_rep=" << mod.theta_rep << " image=" << img << " norm=" << norm(x)
             << " bijective=" << (bij ? "yes" : "no") << '\n';
    }

private:
    std::array<std::string, 3> triple_names(const Json& b) const {
        return {param<std::string>(b, "P1", {}, std::string("P1")), param<std::string>(b, "P2", {}, std::string("P2")),
                param<std::string>(b, "Q", {}, std::string("Q"))};
    }

    static Verdict classify_sections(const JobSpec& job, const std::array<std::string, 3>& n,
                                     const ClassifyBounds& bounds) {
        return orbcol::classify(job.C(), job.section(n[0]), job.section(n[1]), job.section(n[2]), bounds);
    }

    static Poly squarefree_checked(const Poly& h) {
        if (h.degree() < 1) throw UsageError("--modulus must be a nonconstant polynomial");
        if (squarefree_part(h).degree() != h.degree()) throw MathError("--modulus must be squarefree");
        return h;
    }

    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Collisions of orbits on elliptic surfaces", "orbcol"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    auto* classify = app.add_subcommand("classify", "decide relation (A), (B) or (C) within bounds");
    classify->add_option("job", o.job_path, "job file")->required();
    classify->add_option("--K", o.K, "bound for (A) and (B)");
    classify->add_option("--box", o.box, "coordinate bound for (C)");
    classify->add_option("--torsion", o.torsion, "generic torsion bound");

    auto* collide = app.add_subcommand("collide", "scan for collisions");
    collide->add_option("job", o.job_path, "job file")->required();
    collide->add_option("--m1", o.m1, "bound on |m1|");
    collide->add_option("--m2", o.m2, "bound on |m2|");

    auto* growth = app.add_subcommand("growth", "degree of the condition polynomial for n = 1..nmax");
    growth->add_option("job", o.job_path, "job file")->required();
    growth->add_option("--nmax", o.nmax, "largest n");
    growth->add_option("--P", o.P, "section name (default P1)");
    growth->add_option("--Q", o.Q, "target section name (default Q)");

    auto* verify = app.add_subcommand("verify", "check a relation on a fiber");
    verify->add_option("job", o.job_path, "job file")->required();
    auto* lam = verify->add_option("--lambda", o.lambda, "rational parameter value");
    auto* mod = verify->add_option("--modulus", o.modulus, "squarefree polynomial in l");
    lam->excludes(mod);
    verify->add_option("--P", o.P, "section name (default P1)");
    verify->add_option("--m", o.m, "multiplier");
    verify->add_option("--Q", o.Q, "target section name (default Q)");
    verify->add_option("--alpha", o.alpha, "CM element; checks [alpha]Q = O instead");

    auto* order = app.add_subcommand("order", "imaginary quadratic order utilities");
    order->require_subcommand(1);
    auto* shift = order->add_subcommand("solve-shift", "m, r, s with m - theta = (a + 4 theta)(r + s theta)");
    auto* residue = order->add_subcommand("find-residue", "least l with gcd(N(a + 4 theta), 2M) = 1 on a = 2l - 1");
    auto* induced = order->add_subcommand("induced-map", "action of alpha on Z[theta]/(a + 4 theta)");
    for (auto* sc : {shift, residue, induced}) {
        sc->add_option("--D", o.D, "squarefree D > 0")->required();
        sc->add_option("--f", o.f, "conductor f >= 1")->required();
    }
    shift->add_option("--a", o.a, "odd integer")->required();
    residue->add_option("--M", o.M, "modulus M >= 1")->required();
    induced->add_option("--a", o.a, "odd integer")->required();
    induced->add_option("--alpha", o.order_alpha, "element c + d*theta")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    Runner r(o, out);
    try {
        if (*classify) r.classify();
        else if (*collide) r.collide();
        else if (*growth) r.growth();
        else if (*verify) r.verify();
        else if (*shift) r.solve_shift();
        else if (*residue) r.find_residue();
        else if (*induced) r.induced_map();
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const MathError& e) {
        err << "math error: " << e.what() << '\n';
        return kMath;
    }
}

}  // namespace orbcol::cli
