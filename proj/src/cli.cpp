#include "maghom/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "maghom/causal.hpp"
#include "maghom/delta_set.hpp"
#include "maghom/fixtures.hpp"
#include "maghom/io.hpp"
#include "maghom/kunneth.hpp"
#include "maghom/morse.hpp"
#include "maghom/parallel.hpp"

namespace maghom::cli {

namespace {

using nlohmann::json;

struct options {
    std::string fixture, space_file, total_file, base_file, proj_file;
    std::string lmax_text = "3";
    int nmax = -1;
    std::string basepoint;
    std::string format = "table";
    int jobs = 1;
};

void add_common(CLI::App* cmd, options& o) {
    cmd->add_option("--fixture", o.fixture, "built-in data set (paper-E1, paper-E2)");
    cmd->add_option("--space", o.space_file, "metric space file");
    cmd->add_option("--total", o.total_file,
                    "total space file, or one combined file with base and projection");
    cmd->add_option("--base", o.base_file, "base space file");
    cmd->add_option("--proj", o.proj_file, "projection file");
    cmd->add_option("--lmax", o.lmax_text, "largest length to examine")->capture_default_str();
    cmd->add_option("--nmax", o.nmax, "largest degree; -1 means the full range")
        ->capture_default_str();
    cmd->add_option("--basepoint", o.basepoint, "base point label (default: the first)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "structured"}))
        ->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

rational get_lmax(const options& o) {
    auto q = parse_rational(o.lmax_text);
    if (!q || *q < 0) throw input_error("bad --lmax \"" + o.lmax_text + "\"");
    return *q;
}

fibration_input resolve_fibration_input(const options& o) {
    if (!o.fixture.empty()) {
        const fibration& f = fixtures::get(o.fixture);
        std::vector<int> proj;
        for (int i = 0; i < f.total().size(); ++i) proj.push_back(f.project(i));
        return {f.total(), f.base(), std::move(proj)};
    }
    if (!o.total_file.empty() && o.base_file.empty() && o.proj_file.empty())
        return fibration_from_json(read_file(o.total_file), o.total_file);
    if (!o.total_file.empty() && !o.base_file.empty() && !o.proj_file.empty()) {
        metric_space total = space_from_json(read_file(o.total_file), o.total_file);
        metric_space base = space_from_json(read_file(o.base_file), o.base_file);
        std::vector<int> proj =
            projection_from_json(read_file(o.proj_file), total, base, o.proj_file);
        return {std::move(total), std::move(base), std::move(proj)};
    }
    throw input_error(
        "no fibration given: pass --fixture, one combined --total file, or --total/--base/--proj");
}

metric_space resolve_space(const options& o) {
    if (!o.fixture.empty()) return fixtures::get(o.fixture).total();
    if (!o.space_file.empty()) return space_from_json(read_file(o.space_file), o.space_file);
    if (!o.total_file.empty()) return resolve_fibration_input(o).total;
    throw input_error("no space given: pass --fixture or --space");
}

int resolve_basepoint(const options& o, const metric_space& base) {
    if (o.basepoint.empty()) return 0;
    auto i = base.index_of(o.basepoint);
    if (!i) throw input_error("unknown base point \"" + o.basepoint + "\"");
    return *i;
}

json torsion_json(const std::vector<bigint>& torsion) {
    json a = json::array();
    for (const bigint& t : torsion) a.push_back(t.get_str());
    return a;
}

json homology_json(const homology_summary& h) {
    json a = json::array();
    for (size_t n = 0; n < h.size(); ++n)
        a.push_back({{"n", n}, {"betti", h[n].betti}, {"torsion", torsion_json(h[n].torsion)}});
    return a;
}

std::string summary_text(const homology_summary& h) {
    std::string out = "[";
    for (size_t n = 0; n < h.size(); ++n) {
        if (n) out += ", ";
        out += describe(h[n]);
    }
    return out + "]";
}

void emit(std::ostream& out, const json& root) { out << root.dump(2) << "\n"; }

int cmd_validate(const options& o, std::ostream& out) {
    metric_space space = resolve_space(o);
    auto violation = validate_metric(space);
    if (o.format == "structured") {
        json root{{"schema", "maghom/1"},
                  {"command", "validate"},
                  {"points", space.size()},
                  {"valid", !violation}};
        root["violation"] = violation ? json(violation->message) : json();
        emit(out, root);
    } else {
        out << "points: " << space.size() << "\n";
        out << (violation ? "violation: " + violation->message : std::string("metric: valid"))
            << "\n";
    }
    return violation ? 1 : 0;
}

int cmd_mh(const options& o, std::ostream& out) {
    metric_space space = resolve_space(o);
    auto lengths = achievable_lengths(space, get_lmax(o));
    struct row {
        rational l;
        homology_summary h;
    };
    auto rows = parallel_map(static_cast<int>(lengths.size()), o.jobs, [&](int i) {
        return row{lengths[i], homology(build_complex(space, lengths[i], o.nmax).cx)};
    });
    if (o.format == "structured") {
        json list = json::array();
        for (const auto& r : rows)
            list.push_back({{"l", format_rational(r.l)}, {"H", homology_json(r.h)}});
        emit(out, json{{"schema", "maghom/1"}, {"command", "mh"}, {"rows", list}});
    } else {
        out << "l n betti torsion\n";
        for (const auto& r : rows)
            for (size_t n = 0; n < r.h.size(); ++n) {
                out << format_rational(r.l) << " " << n << " " << r.h[n].betti << " ";
                if (r.h[n].torsion.empty()) {
                    out << "-";
                } else {
                    for (size_t k = 0; k < r.h[n].torsion.size(); ++k)
                        out << (k ? "," : "") << "Z/" << r.h[n].torsion[k].get_str();
                }
                out << "\n";
            }
    }
    return 0;
}

// transport between any two fibers must preserve their inner distances
std::string transport_defect(const fibration& fib) {
    const metric_space& total = fib.total();
    for (int b = 0; b < fib.base().size(); ++b)
        for (int b2 = 0; b2 < fib.base().size(); ++b2)
            for (int x : fib.fiber(b))
                for (int y : fib.fiber(b)) {
                    if (total.dist(fib.lift(x, b2), fib.lift(y, b2)) == total.dist(x, y))
                        continue;
                    return "transport from " + fib.base().label(b) + " to " +
                           fib.base().label(b2) + " distorts d(" + total.label(x) + "," +
                           total.label(y) + ")";
                }
    return "";
}

int cmd_fibcheck(const options& o, std::ostream& out) {
    fibration_input in = resolve_fibration_input(o);
    auto checked = verify_fibration(in.total, in.base, in.proj);
    if (const auto* failure = std::get_if<fibration_failure>(&checked)) {
        if (o.format == "structured") {
            emit(out, json{{"schema", "maghom/1"},
                           {"command", "fibcheck"},
                           {"valid", false},
                           {"failure", failure->message}});
        } else {
            out << "not a fibration: " << failure->message << "\n";
        }
        return 1;
    }
    const fibration& fib = std::get<fibration>(checked);
    std::string defect = transport_defect(fib);
    if (o.format == "structured") {
        json fibers = json::array();
        for (int b = 0; b < fib.base().size(); ++b) {
            json pts = json::array();
            for (int x : fib.fiber(b)) pts.push_back(fib.total().label(x));
            fibers.push_back({{"base", fib.base().label(b)}, {"points", pts}});
        }
        json root{{"schema", "maghom/1"},
                  {"command", "fibcheck"},
                  {"valid", true},
                  {"fibers", fibers},
                  {"transport_isometric", defect.empty()}};
        if (!defect.empty()) root["failure"] = defect;
        emit(out, root);
    } else {
        out << "fibration verified: " << fib.total().size() << " points over "
            << fib.base().size() << "\n";
        for (int b = 0; b < fib.base().size(); ++b) {
            out << "fiber " << fib.base().label(b) << ":";
            for (int x : fib.fiber(b)) out << " " << fib.total().label(x);
            out << "\n";
        }
        out << (defect.empty() ? std::string("transport between fibers: isometric")
                               : "transport defect: " + defect)
            << "\n";
    }
    return defect.empty() ? 0 : 1;
}

int cmd_kunneth(const options& o, std::ostream& out) {
    fibration_input in = resolve_fibration_input(o);
    auto checked = verify_fibration(in.total, in.base, in.proj);
    if (const auto* failure = std::get_if<fibration_failure>(&checked)) {
        out << "not a fibration: " << failure->message << "\n";
        return 1;
    }
    const fibration& fib = std::get<fibration>(checked);
    int bp = resolve_basepoint(o, fib.base());
    kunneth_report rep = verify_kunneth(fib, bp, get_lmax(o), o.nmax, o.jobs);
    if (o.format == "structured") {
        json list = json::array();
        for (const auto& r : rep.rows) {
            json row{{"l", format_rational(r.length)},
                     {"quotient_ok", r.quotient_ok},
                     {"d_acyclic", r.d_acyclic},
                     {"maps_ok", r.maps_ok},
                     {"homology_match", r.homology_match},
                     {"projection_qiso", r.projection_qiso},
                     {"H_total", homology_json(r.h_total)},
                     {"H_quotient", homology_json(r.h_quotient)},
                     {"H_sum", homology_json(r.h_rhs)},
                     {"H_d", homology_json(r.h_d)}};
            if (!r.detail.empty()) row["detail"] = r.detail;
            list.push_back(std::move(row));
        }
        emit(out, json{{"schema", "maghom/1"},
                       {"command", "kunneth"},
                       {"basepoint", fib.base().label(bp)},
                       {"passed", rep.passed()},
                       {"rows", list}});
    } else {
        out << "basepoint: " << fib.base().label(bp) << "\n";
        out << "l n H(total) H(quotient) H(sum) H(sub)\n";
        for (const auto& r : rep.rows) {
            size_t degrees = std::max({r.h_total.size(), r.h_quotient.size(), r.h_rhs.size(),
                                       r.h_d.size(), size_t{1}});
            static const homology_group zero;
            auto at = [](const homology_summary& h, size_t n) -> const homology_group& {
                return n < h.size() ? h[n] : zero;
            };
            for (size_t n = 0; n < degrees; ++n)
                out << format_rational(r.length) << " " << n << " " << describe(at(r.h_total, n))
                    << " " << describe(at(r.h_quotient, n)) << " " << describe(at(r.h_rhs, n))
                    << " " << describe(at(r.h_d, n)) << "\n";
            out << "l=" << format_rational(r.length) << ": "
                << (r.passed() ? "pass" : "FAIL " + r.detail) << "\n";
        }
        out << (rep.passed() ? "decomposition verified" : "decomposition FAILED") << "\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_morse(const options& o, std::ostream& out) {
    fibration_input in = resolve_fibration_input(o);
    auto checked = verify_fibration(in.total, in.base, in.proj);
    if (const auto* failure = std::get_if<fibration_failure>(&checked)) {
        out << "not a fibration: " << failure->message << "\n";
        return 1;
    }
    const fibration& fib = std::get<fibration>(checked);
    auto lengths = achievable_lengths(fib.total(), get_lmax(o));
    struct row {
        rational l;
        bool valid = false, preserved = false, acyclic = false;
        std::string message;
        std::vector<int> cells, critical;
        int matched = 0;
    };
    auto rows = parallel_map(static_cast<int>(lengths.size()), o.jobs, [&](int i) {
        row r;
        r.l = lengths[i];
        try {
            magnitude_complex dc = build_d_complex(fib, r.l, o.nmax);
            for (int n = 0; n <= dc.cx.top_degree(); ++n) r.cells.push_back(dc.cx.dim(n));
            morse_matching matching = hv_matching(fib, dc);
            r.matched = static_cast<int>(matching.edges.size());
            if (auto bad = validate_matching(dc.cx, matching)) {
                r.message = bad->message;
                return r;
            }
            r.valid = true;
            morse_reduction red = morse_reduce(dc.cx, matching);
            for (int n = 0; n <= red.cx.top_degree(); ++n)
                r.critical.push_back(red.cx.dim(n));
            homology_summary before = homology(dc.cx);
            r.preserved = same_homology(before, homology(red.cx));
            r.acyclic = all_zero(before);
            if (!r.preserved) r.message = "homology changed under reduction";
        } catch (const error& e) {
            r.message = e.what();
        }
        return r;
    });
    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.valid && r.preserved;
    if (o.format == "structured") {
        json list = json::array();
        for (const auto& r : rows) {
            json jr{{"l", format_rational(r.l)}, {"cells", r.cells},
                    {"matched", r.matched},     {"critical", r.critical},
                    {"valid", r.valid},         {"preserved", r.preserved},
                    {"sub_acyclic", r.acyclic}};
            if (!r.message.empty()) jr["detail"] = r.message;
            list.push_back(std::move(jr));
        }
        emit(out, json{{"schema", "maghom/1"},
                       {"command", "morse"},
                       {"passed", all_ok},
                       {"rows", list}});
    } else {
        auto ints = [](const std::vector<int>& v) {
            std::string s = "[";
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s + "]";
        };
        for (const auto& r : rows) {
            out << "l=" << format_rational(r.l) << " cells=" << ints(r.cells)
                << " matched=" << r.matched << " critical=" << ints(r.critical)
                << " acyclic=" << (r.acyclic ? "yes" : "no") << " "
                << (r.valid && r.preserved ? "pass" : "FAIL " + r.message) << "\n";
        }
        out << (all_ok ? "reduction verified" : "reduction FAILED") << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_deltaiso(const options& o, std::ostream& out) {
    fibration_input in = resolve_fibration_input(o);
    auto checked = verify_fibration(in.total, in.base, in.proj);
    if (const auto* failure = std::get_if<fibration_failure>(&checked)) {
        out << "not a fibration: " << failure->message << "\n";
        return 1;
    }
    const fibration& fib = std::get<fibration>(checked);
    int bp = resolve_basepoint(o, fib.base());
    auto lengths = achievable_lengths(fib.total(), get_lmax(o));
    auto rows = parallel_map(static_cast<int>(lengths.size()), o.jobs, [&](int i) {
        return deltaiso_check(fib, bp, lengths[i], o.nmax);
    });
    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.passed();
    if (o.format == "structured") {
        json list = json::array();
        for (const auto& r : rows) {
            json jr{{"l", format_rational(r.length)},
                    {"cells", r.cells},
                    {"bijection_ok", r.bijection_ok},
                    {"faces_ok", r.faces_ok},
                    {"inverse_ok", r.inverse_ok}};
            if (!r.detail.empty()) jr["detail"] = r.detail;
            list.push_back(std::move(jr));
        }
        emit(out, json{{"schema", "maghom/1"},
                       {"command", "deltaiso"},
                       {"basepoint", fib.base().label(bp)},
                       {"passed", all_ok},
                       {"rows", list}});
    } else {
        out << "basepoint: " << fib.base().label(bp) << "\n";
        for (const auto& r : rows)
            out << "l=" << format_rational(r.length) << " cells=" << r.cells << " "
                << (r.passed() ? "pass" : "FAIL " + r.detail) << "\n";
        out << (all_ok ? "cell structures match" : "cell structures DIFFER") << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_cau(const options& o, std::ostream& out) {
    metric_space space = resolve_space(o);
    causal_summary summary = cau_verify(space, get_lmax(o), o.jobs);
    if (o.format == "structured") {
        json list = json::array();
        for (const auto& r : summary.rows)
            list.push_back({{"l", format_rational(r.length)},
                            {"relative", homology_json(r.relative_total)},
                            {"magnitude", homology_json(r.magnitude)},
                            {"shifts", r.shifts}});
        json root{{"schema", "maghom/1"},
                  {"command", "cau"},
                  {"passed", summary.passed()},
                  {"common_shifts", summary.common_shifts},
                  {"rows", list}};
        if (summary.passed()) root["shift"] = summary.reported_shift;
        emit(out, root);
    } else {
        for (const auto& r : summary.rows) {
            out << "l=" << format_rational(r.length)
                << " relative=" << summary_text(r.relative_total)
                << " magnitude=" << summary_text(r.magnitude) << " shifts={";
            for (size_t i = 0; i < r.shifts.size(); ++i)
                out << (i ? "," : "") << r.shifts[i];
            out << "}\n";
        }
        if (summary.passed())
            out << "fitted shift: " << summary.reported_shift << "\n";
        else
            out << "no consistent shift\n";
    }
    return summary.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact magnitude homology of finite metric spaces"};
    app.require_subcommand(1);
    options o;
    CLI::App* validate = app.add_subcommand("validate", "check the metric axioms");
    CLI::App* mh = app.add_subcommand("mh", "homology of the path complex per length");
    CLI::App* fibcheck = app.add_subcommand("fibcheck", "verify the fibration conditions");
    CLI::App* kunneth = app.add_subcommand("kunneth", "verify the length-split decomposition");
    CLI::App* morse = app.add_subcommand("morse", "collapse the distinguished subcomplex");
    CLI::App* deltaiso =
        app.add_subcommand("deltaiso", "compare cell structures with a product");
    CLI::App* cau = app.add_subcommand("cau", "compare with the interval-order complex");
    for (CLI::App* cmd : {validate, mh, fibcheck, kunneth, morse, deltaiso, cau})
        add_common(cmd, o);

    std::vector<const char*> argv;
    argv.push_back("maghom");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (mh->parsed()) return cmd_mh(o, out);
        if (fibcheck->parsed()) return cmd_fibcheck(o, out);
        if (kunneth->parsed()) return cmd_kunneth(o, out);
        if (morse->parsed()) return cmd_morse(o, out);
        if (deltaiso->parsed()) return cmd_deltaiso(o, out);
        if (cau->parsed()) return cmd_cau(o, out);
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace maghom::cli
