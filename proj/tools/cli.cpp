#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpconv/acceptance.hpp"
#include "cpconv/errors.hpp"
#include "cpconv/identity.hpp"
#include "cpconv/lattice.hpp"
#include "cpconv/pattern_fit.hpp"
#include "cpconv/psi.hpp"
#include "cpconv/representations.hpp"

namespace cpconv::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kT13Erratum =
    "printed (1,3) closed form (7n^5-10n)/10 psi_-1 + n^3/3 psi_1 - n/30 psi_3 equals 8 times the "
    "convolution sum; the corrected form divides every coefficient by 8";

struct Range {
    Natural lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    auto number = [&](std::string_view part) {
        Natural v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw UsageError("malformed range '" + text + "' (expected LO..HI)");
        }
        return v;
    };
    if (dots == std::string::npos) throw UsageError("malformed range '" + text + "' (expected LO..HI)");
    const std::string_view view(text);
    Range r{number(view.substr(0, dots)), number(view.substr(dots + 2))};
    if (r.lo < 2 || r.lo > r.hi) {
        throw UsageError("range '" + text + "' must satisfy 2 <= LO <= HI");
    }
    return r;
}

std::vector<Natural> parse_list(const std::string& text) {
    std::vector<Natural> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        Natural v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw UsageError("malformed list '" + text + "' (expected comma-separated integers)");
        }
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

Json ratio_json(const Ratio& q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string ratio_text(const Ratio& q) { return q.get_str(); }

/// Integral rationals print as integers, anything else as {num, den}.
Json value_json(const Ratio& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return ratio_json(q);
}

Json coeffs_json(const PatternCoeffs& c) {
    return Json{{"A", ratio_json(c.a)},
                {"B", ratio_json(c.b)},
                {"C", ratio_json(c.c)},
                {"D", ratio_json(c.d)},
                {"degenerate", c.degenerate}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    Json doc;
    std::optional<Table> table;
    int exit = kOk;
};

Json base(const std::string& command, Json inputs) {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    return doc;
}

Outcome scalar(Json doc, const std::string& text) {
    Outcome o{std::move(doc)};
    o.table = Table{{"result"}, {{text}}};
    return o;
}

Outcome fit_outcome(const std::string& command, Json inputs, const FitReport& rep) {
    Outcome o{base(command, std::move(inputs))};
    Json result;
    result["r"] = rep.r;
    result["s"] = rep.s;
    result["coefficients"] = rep.coefficients ? coeffs_json(*rep.coefficients) : Json("inconsistent");
    result["train_ns"] = rep.train_ns;
    result["test_ns"] = rep.test_ns;
    result["degenerate"] = rep.degenerate;
    result["warnings"] = rep.warnings;
    if (rep.evidence_only) {
        result["label"] = "numerical evidence only; no closed formula is known for r + s = 10";
    }
    o.doc["result"] = result;
    o.doc["verdict"] = std::string(to_string(rep.verdict));
    Json residuals = Json::array();
    Table t{{"n", "residual"}, {}};
    for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
        residuals.push_back(Json{{"n", rep.test_ns[i]}, {"residual", ratio_json(rep.residuals[i])}});
        t.rows.push_back({std::to_string(rep.test_ns[i]), ratio_text(rep.residuals[i])});
    }
    o.doc["residuals"] = residuals;
    o.table = std::move(t);
    if (!rep.evidence_only && rep.verdict == FitVerdict::inconsistent) o.exit = kVerificationFailed;
    return o;
}

void emit(const Outcome& o, bool csv, std::ostream& out) {
    if (!csv || !o.table) {
        out << o.doc.dump(2) << '\n';
        return;
    }
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
        out << '\n';
    };
    line(o.table->header);
    for (const auto& row : o.table->rows) line(row);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coprime divisor-convolution identities", "cpconv"};
    app.require_subcommand(1);
    app.fallthrough();

    bool csv = false;
    unsigned jobs = 1;
    app.add_flag("--csv", csv, "Tabular results as CSV with a header row");
    app.add_option("--jobs", jobs, "Worker threads for range verifications")
        ->check(CLI::Range(1u, 256u));

    int psi_s = 0;
    Natural n = 0, m = 0;
    unsigned k = 0, r = 0, s = 0;
    std::string method, set_text = "Bprime", poly, theorem, range_text, which, train, test, pair;
    bool raw = false, quick = false;
    std::uint64_t budget = kDefaultTupleBudget;

    auto* psi_cmd = app.add_subcommand("psi", "psi_s(n) = sum_{d|n} mu(d) d^s");
    psi_cmd->add_option("--s", psi_s, "Order s (nonzero)")->required();
    psi_cmd->add_option("--n", n, "n >= 1")->required();

    auto* ps_cmd = app.add_subcommand("powersum", "Sum of t^k over 1 <= t < n coprime to n");
    ps_cmd->add_option("--k", k)->required();
    ps_cmd->add_option("--n", n)->required();
    ps_cmd->add_option("--method", method, "direct|moebius|closed")
        ->check(CLI::IsMember({"direct", "moebius", "closed"}))
        ->default_str("direct");

    auto* sp_cmd = app.add_subcommand("sigma-prime", "sigma'_{r,s}(m, n)");
    sp_cmd->add_option("--r", r)->required();
    sp_cmd->add_option("--s", s)->required();
    sp_cmd->add_option("--m", m)->required();
    sp_cmd->add_option("--n", n)->required();

    auto* conv_cmd = app.add_subcommand("conv", "Convolution sum over B(n) or B'(n)");
    conv_cmd->add_option("--r", r)->required();
    conv_cmd->add_option("--s", s)->required();
    auto* conv_n = conv_cmd->add_option("--n", n);
    auto* conv_range = conv_cmd->add_option("--range", range_text, "LO..HI instead of --n");
    conv_n->excludes(conv_range);
    conv_cmd->add_option("--set", set_text)->check(CLI::IsMember({"B", "Bprime"}));
    conv_cmd->add_option("--method", method, "brute|closed")
        ->check(CLI::IsMember({"brute", "closed"}));

    auto* main_cmd = app.add_subcommand("check-main", "Both sides of the six-term identity");
    main_cmd->add_option("--poly", poly, "e.g. \"1 x^1 y^5 - 10 x^3 y^3\"")->required();
    auto* main_n = main_cmd->add_option("--n", n);
    auto* main_range = main_cmd->add_option("--range", range_text, "LO..HI instead of --n");
    main_n->excludes(main_range);
    main_cmd->add_option("--set", set_text)->check(CLI::IsMember({"B", "Bprime"}));

    auto* verify_cmd = app.add_subcommand("verify", "Closed form against the brute-force oracle");
    verify_cmd->add_option("--theorem", theorem, "t11 t13[:printed|:corrected] t15 t33 t17 t35 t111 t39 t57")
        ->required();
    verify_cmd->add_option("--range", range_text, "LO..HI")->required();

    auto* count_cmd = app.add_subcommand("count", "Representation counters L, M, L', M'");
    count_cmd->add_option("--which", which, "L|M|Lp|Mp")->check(CLI::IsMember({"L", "M", "Lp", "Mp"}));
    count_cmd->add_option("--r", r)->required();
    count_cmd->add_option("--s", s)->required();
    auto* count_n = count_cmd->add_option("--n", n);
    auto* count_range =
        count_cmd->add_option("--range", range_text, "LO..HI: check all four counters on a range");
    count_n->excludes(count_range);
    count_cmd->add_flag("--raw", raw, "Enumerate split tuples directly");
    count_cmd->add_option("--budget", budget, "Tuple budget for --raw");

    auto* fit_cmd = app.add_subcommand("fit", "Fit A, B, C, D of the four-term pattern");
    fit_cmd->add_option("--r", r)->required();
    fit_cmd->add_option("--s", s)->required();
    fit_cmd->add_option("--train", train, "CSV list of n")->required();
    fit_cmd->add_option("--test", test, "CSV list of n")->required();

    auto* probe_cmd = app.add_subcommand("probe10", "Fit the pattern for an open r + s = 10 case");
    probe_cmd->add_option("--pair", pair, "1,9|3,7|5,5")
        ->required()
        ->check(CLI::IsMember({"1,9", "3,7", "5,5"}));
    probe_cmd->add_option("--train", train, "CSV list of n");
    probe_cmd->add_option("--test", test, "CSV list of n");

    auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    self_cmd->add_flag("--quick", quick, "Reduced ranges");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "cpconv: " << e.what() << '\n';
        return kUsage;
    }

    auto require_n = [&](CLI::Option* opt) {
        if (opt->count() == 0 && range_text.empty()) throw UsageError("either --n or --range is required");
    };

    try {
        Outcome o;
        if (*psi_cmd) {
            const Ratio v = psi(PsiOrder(psi_s), n);
            o.doc = base("psi", Json{{"s", psi_s}, {"n", n}});
            o.doc["result"] = ratio_json(v);
            o.table = Table{{"num", "den"}, {{v.get_num().get_str(), v.get_den().get_str()}}};
        } else if (*ps_cmd) {
            const PowerSumMethod pm = parse_power_sum_method(method.empty() ? "direct" : method);
            const Integer v = coprime_power_sum(k, n, pm);
            Json doc = base("powersum", Json{{"k", k}, {"n", n}, {"method", to_string(pm)}});
            doc["result"] = v.get_str();
            o = scalar(std::move(doc), v.get_str());
        } else if (*sp_cmd) {
            const Integer v = sigma_prime(r, s, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
            Json doc = base("sigma-prime", Json{{"r", r}, {"s", s}, {"m", m}, {"n", n}});
            doc["result"] = v.get_str();
            o = scalar(std::move(doc), v.get_str());
        } else if (*conv_cmd) {
            require_n(conv_n);
            const SolutionSet set = parse_solution_set(set_text);
            const bool closed = method == "closed";
            std::vector<std::string> notes;
            std::function<Ratio(Natural)> eval;
            if (!closed) {
                eval = [&](Natural v) { return Ratio(brute_convolution(r, s, v, set)); };
            } else if (set == SolutionSet::Bprime) {
                const auto tag = theorem_for_orders(r, s);
                if (!tag) {
                    throw UsageError("no closed form for (r,s) = (" + std::to_string(r) + "," +
                                     std::to_string(s) + ") over Bprime");
                }
                if (*tag == Theorem::t13) notes.emplace_back(kT13Erratum);
                eval = [t = *tag](Natural v) { return eval_theorem({t, Variant::corrected}, v); };
            } else if (r == 1 && s == 1) {
                eval = [](Natural v) { return besge(v).rhs; };
            } else if ((r == 1 && s == 3) || (r == 3 && s == 1)) {
                eval = [](Natural v) { return glaisher(v).rhs; };
            } else {
                throw UsageError("closed method over B covers only (1,1) and (1,3)");
            }
            Json inputs{{"r", r}, {"s", s}};
            if (range_text.empty()) inputs["n"] = n;
            else inputs["range"] = range_text;
            inputs["set"] = std::string(to_string(set));
            inputs["method"] = closed ? "closed" : "brute";
            o.doc = base("conv", inputs);
            if (range_text.empty()) {
                if (n < 2) throw DomainError("conv: n must be >= 2");
                const Ratio v = eval(n);
                o.doc["result"] = value_json(v);
                o.table = Table{{"n", "value"}, {{std::to_string(n), ratio_text(v)}}};
            } else {
                const Range rg = parse_range(range_text);
                Json rows = Json::array();
                Table t{{"n", "value"}, {}};
                for (Natural v = rg.lo; v <= rg.hi; ++v) {
                    const Ratio val = eval(v);
                    rows.push_back(Json{{"n", v}, {"value", value_json(val)}});
                    t.rows.push_back({std::to_string(v), ratio_text(val)});
                }
                o.doc["result"] = rows;
                o.table = std::move(t);
            }
            if (!notes.empty()) o.doc["erratum_notes"] = notes;
        } else if (*main_cmd) {
            require_n(main_n);
            const Poly4 f = Poly4::parse(poly);
            const SolutionSet set = parse_solution_set(set_text);
            Json inputs{{"poly", f.to_string()}};
            if (range_text.empty()) inputs["n"] = n;
            else inputs["range"] = range_text;
            inputs["set"] = std::string(to_string(set));
            o.doc = base("check-main", inputs);
            Range rg{n, n};
            if (!range_text.empty()) rg = parse_range(range_text);
            bool holds = true;
            Json rows = Json::array();
            Table t{{"n", "lhs", "rhs", "holds"}, {}};
            for (Natural v = rg.lo; v <= rg.hi; ++v) {
                const IdentitySides sides = main_identity_sides(f, v, set);
                holds = holds && sides.holds();
                rows.push_back(Json{{"n", v},
                                    {"lhs", sides.lhs.get_str()},
                                    {"rhs", sides.rhs.get_str()},
                                    {"holds", sides.holds()}});
                t.rows.push_back({std::to_string(v), sides.lhs.get_str(), sides.rhs.get_str(),
                                  sides.holds() ? "true" : "false"});
            }
            o.doc["result"] = range_text.empty() ? rows[0] : rows;
            o.doc["verdict"] = holds ? "holds" : "fails";
            o.table = std::move(t);
            o.exit = holds ? kOk : kVerificationFailed;
        } else if (*verify_cmd) {
            const TheoremId id = parse_theorem_id(theorem);
            const Range rg = parse_range(range_text);
            const TheoremReport rep = verify_theorem(id, rg.lo, rg.hi, jobs);
            o.doc = base("verify", Json{{"theorem", to_string(id)}, {"range", range_text}});
            Json rows = Json::array();
            Table t{{"n", "closed", "oracle", "pass", "ratio"}, {}};
            for (const auto& c : rep.checks) {
                Json row{{"n", c.n},
                         {"closed", ratio_json(c.closed)},
                         {"oracle", c.oracle.get_str()},
                         {"pass", c.pass}};
                row["ratio"] = c.ratio ? ratio_json(*c.ratio) : Json(nullptr);
                rows.push_back(row);
                t.rows.push_back({std::to_string(c.n), ratio_text(c.closed), c.oracle.get_str(),
                                  c.pass ? "true" : "false", c.ratio ? ratio_text(*c.ratio) : ""});
            }
            Json result;
            result["checks"] = rows;
            result["first_counterexample"] =
                rep.first_counterexample ? Json(*rep.first_counterexample) : Json(nullptr);
            o.doc["result"] = result;
            o.doc["verdict"] = rep.all_pass ? "verified" : "failed";
            if (id.tag == Theorem::t13) o.doc["erratum_notes"] = Json::array({kT13Erratum});
            o.table = std::move(t);
            o.exit = rep.all_pass ? kOk : kVerificationFailed;
        } else if (*count_cmd) {
            if (!range_text.empty()) {
                const Range rg = parse_range(range_text);
                const LmReport rep = verify_lm(r, s, rg.lo, rg.hi, budget, jobs, raw);
                o.doc = base("count", Json{{"r", r}, {"s", s}, {"range", range_text}, {"raw", raw}});
                Json rows = Json::array();
                Table t{{"n", "L", "M", "Lp", "Mp", "sigma_conv", "sigma_prime_conv", "pass"}, {}};
                for (const auto& row : rep.rows) {
                    Json jr{{"n", row.n}};
                    std::vector<std::string> cells{std::to_string(row.n)};
                    for (Counter c : {Counter::L, Counter::M, Counter::Lprime, Counter::Mprime}) {
                        const auto i = static_cast<std::size_t>(c);
                        jr[std::string(to_string(c))] = row.fast[i].get_str();
                        cells.push_back(row.fast[i].get_str());
                        if (raw) {
                            jr[std::string(to_string(c)) + "_raw"] =
                                row.raw[i] ? Json(row.raw[i]->get_str()) : Json(nullptr);
                        }
                    }
                    jr["sigma_conv"] = row.sigma_convolution.get_str();
                    jr["sigma_prime_conv"] = row.sigma_prime_convolution.get_str();
                    jr["raw_skipped"] = row.raw_skipped;
                    jr["pass"] = row.pass;
                    cells.push_back(row.sigma_convolution.get_str());
                    cells.push_back(row.sigma_prime_convolution.get_str());
                    cells.push_back(row.pass ? "true" : "false");
                    rows.push_back(jr);
                    t.rows.push_back(std::move(cells));
                }
                o.doc["result"] = rows;
                o.doc["verdict"] = rep.all_pass ? "verified" : "failed";
                o.table = std::move(t);
                o.exit = rep.all_pass ? kOk : kVerificationFailed;
                if (rep.all_pass && rep.skipped > 0) o.exit = kResource;
            } else {
                if (which.empty()) throw UsageError("count: --which is required with --n");
                require_n(count_n);
                const CountSpec spec(parse_counter(which), r, s, n);
                const Integer v = raw ? count_raw(spec, budget) : count_fast(spec);
                Json doc = base("count", Json{{"which", which}, {"r", r}, {"s", s}, {"n", n}, {"raw", raw}});
                doc["result"] = v.get_str();
                o = scalar(std::move(doc), v.get_str());
            }
        } else if (*fit_cmd) {
            const auto train_ns = parse_list(train);
            const auto test_ns = parse_list(test);
            const FitReport rep = fit_and_validate(r, s, train_ns, test_ns);
            o = fit_outcome("fit", Json{{"r", r}, {"s", s}, {"train", train_ns}, {"test", test_ns}}, rep);
        } else if (*probe_cmd) {
            const auto ps = parse_list(pair);
            const auto train_ns = train.empty() ? kDefaultTrainNs : parse_list(train);
            const auto test_ns = test.empty() ? kDefaultProbeTestNs : parse_list(test);
            const FitReport rep = probe_weight10(static_cast<unsigned>(ps.at(0)),
                                                 static_cast<unsigned>(ps.at(1)), train_ns, test_ns);
            o = fit_outcome("probe10", Json{{"pair", pair}, {"train", train_ns}, {"test", test_ns}}, rep);
        } else if (*self_cmd) {
            AcceptanceOptions opt;
            opt.quick = quick;
            opt.jobs = jobs;
            const auto results = run_acceptance(opt, [&](const CriterionResult& c) {
                err << "[" << (c.pass ? "PASS" : "FAIL") << "] criterion " << c.id << " ("
                    << c.seconds << "s)\n";
            });
            o.doc = base("selftest", Json{{"quick", quick}});
            Json rows = Json::array();
            Table t{{"id", "name", "pass", "evidence_only", "detail"}, {}};
            bool all = true;
            for (const auto& c : results) {
                all = all && c.pass;
                rows.push_back(Json{{"id", c.id},
                                    {"name", c.name},
                                    {"pass", c.pass},
                                    {"evidence_only", c.evidence_only},
                                    {"detail", c.detail}});
                t.rows.push_back({std::to_string(c.id), c.name, c.pass ? "true" : "false",
                                  c.evidence_only ? "true" : "false", c.detail});
            }
            o.doc["result"] = rows;
            o.doc["verdict"] = all ? "passed" : "failed";
            o.table = std::move(t);
            o.exit = all ? kOk : kVerificationFailed;
        }
        emit(o, csv, out);
        return o.exit;
    } catch (const ResourceError& e) {
        err << "cpconv: " << e.what() << '\n';
        return kResource;
    } catch (const UsageError& e) {
        err << "cpconv: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "cpconv: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "cpconv: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedError& e) {
        err << "cpconv: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace cpconv::cli
