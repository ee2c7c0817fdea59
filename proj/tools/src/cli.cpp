#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <future>
#include <json.hpp>
#include <sstream>

#include "butterfly/bijections.hpp"
#include "butterfly/errors.hpp"
#include "butterfly/family.hpp"
#include "butterfly/odd_merge.hpp"
#include "butterfly/pent_class.hpp"
#include "butterfly/pent_recur.hpp"
#include "butterfly/power_series.hpp"
#include "butterfly/sequences.hpp"

namespace butterfly::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    int to = 30;
    int order = 60;
    int h = 3;
    std::string variant = "standard";
    std::string source = "enumerated";
    std::string reading = "derived";
    bool all = false;
    bool report = false;

    std::string name;
    std::string partition;
    int n = 0;
    int from = 0;
    int upto = 0;
    std::optional<int> m;
    std::vector<std::string> marks;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    int code = kOk;
    std::string text;
    Json result;
};

SplitVariant parse_variant(const std::string& v) {
    if (v == "standard") return SplitVariant::Standard;
    if (v == "switched") return SplitVariant::Switched;
    throw UsageError("--variant must be standard or switched");
}

Json parts_json(const Partition& p) { return Json(p.parts()); }

Json table_json(const SequenceTable& t) {
    return Json{{"name", t.name}, {"offset", t.offset}, {"provenance", to_string(t.provenance)}, {"values", t.values}};
}

Outcome do_seq(const Options& o) {
    SequenceTable t;
    if (o.source == "enumerated") {
        t = named_sequence(o.name, o.to);
    } else if (o.source == "series") {
        t = series_table(o.name, o.to);
    } else if (o.source == "recurrence") {
        t = recursive_solve(o.name, o.to);
    } else {
        throw UsageError("--source must be enumerated, series or recurrence");
    }
    return {kOk, to_bfile(t), table_json(t)};
}

Outcome do_enum(const Options& o) {
    const FamilySpec f = parse_family(o.name, o.h);
    Outcome out;
    out.result = Json::array();
    for (const Partition& p : enumerate_family(o.n, f)) {
        out.text += to_string(p) + "\n";
        out.result.push_back(parts_json(p));
    }
    return out;
}

Outcome do_bij(const Options& o) {
    BijectionSpec spec;
    if (o.name == "raise") spec.kind = BijectionKind::Raise;
    else if (o.name == "butterfly") spec.kind = BijectionKind::Butterfly;
    else if (o.name == "bar") spec = {BijectionKind::Bar, o.h};
    else throw UsageError("bijection must be raise, butterfly or bar");
    const BijectionReport r = verify_bijection(spec, o.from, o.upto);
    Outcome out;
    out.code = r.ok() ? kOk : kVerificationFailed;
    out.text = r.ok() ? "OK checked " + std::to_string(r.checked) + "\n" : "FAIL " + *r.counterexample + "\n";
    out.result = Json{{"bijection", to_string(spec)}, {"from", r.n_from}, {"to", r.n_to},
                      {"checked", r.checked}, {"ok", r.ok()}};
    if (!r.ok()) out.result["counterexample"] = *r.counterexample;
    return out;
}

Outcome do_split(const Options& o) {
    const Partition p = parse_partition(o.partition);
    const SplitVariant v = parse_variant(o.variant);
    const Partition q = split(p, v);
    const auto form = route(q, v);
    return {kOk, to_string(q) + "\n",
            Json{{"input", parts_json(p)}, {"output", parts_json(q)}, {"form", form ? to_string(*form) : "none"}}};
}

Outcome do_merge(const Options& o) {
    const Partition q = parse_partition(o.partition);
    const Partition p = merge_odd(q, parse_variant(o.variant));
    return {kOk, to_string(p) + "\n", Json{{"input", parts_json(q)}, {"output", parts_json(p)}}};
}

std::string cap_line(const std::string& label, const CapCheck& c) {
    std::ostringstream os;
    os << label << ' ' << c.multiplicity;
    if (!c.applicable) {
        os << " n/a";
    } else {
        os << " cap " << c.factor << '*' << c.largest_power << '=' << c.largest_part() << " <= " << c.bound << ' '
           << (c.satisfied ? "ok" : "violated") << (c.tight ? " tight" : "");
    }
    return os.str();
}

Json cap_json(const CapCheck& c) {
    return Json{{"factor", c.factor}, {"multiplicity", c.multiplicity}, {"largest_power", c.largest_power},
                {"bound", c.bound}, {"applicable", c.applicable}, {"satisfied", c.satisfied}, {"tight", c.tight}};
}

Outcome do_caps(const Options& o) {
    const Partition q = parse_partition(o.partition);
    const auto form = route(q, parse_variant(o.variant));
    if (!form) throw UsageError(to_string(q) + " matches no odd-form head shape");
    const MergeCaps caps = caps_of(q, *form);
    std::ostringstream os;
    os << "form " << to_string(*form) << "\nbound " << caps.bound << '\n' << cap_line("t", caps.two_t_cap) << '\n';
    Json u = Json::object();
    for (const auto& [odd, c] : caps.u_caps) {
        os << cap_line("u(" + std::to_string(odd) + ")", c) << '\n';
        u[std::to_string(odd)] = cap_json(c);
    }
    os << cap_line("v", caps.v_cap) << '\n' << (caps.all_satisfied() ? "satisfied" : "violated") << '\n';
    return {caps.all_satisfied() ? kOk : kVerificationFailed, os.str(),
            Json{{"form", to_string(*form)}, {"two_t", caps.two_t}, {"bound", caps.bound},
                 {"two_t_cap", cap_json(caps.two_t_cap)}, {"u", u}, {"v_cap", cap_json(caps.v_cap)},
                 {"satisfied", caps.all_satisfied()}}};
}

Outcome do_classify(const Options& o) {
    const PentClass c = classify(parse_partition(o.partition));
    return {kOk, std::string(to_string(c.kind)) + " " + std::to_string(c.h) + "\n",
            Json{{"kind", to_string(c.kind)}, {"h", c.h}}};
}

Outcome do_parity(const Options& o) {
    if (o.n < 6) throw UsageError("parity needs n >= 6");
    const ParityWitness w = parity_relation(o.n);
    const CorollaryCounts c = corollary_counts(o.n);
    const bool agree = c.relation == w.relation &&
                       static_cast<std::int64_t>(c.s_even) - static_cast<std::int64_t>(c.s_odd) ==
                           (w.relation == ParityRelation::Equal ? 0 : w.relation == ParityRelation::EvenPlusOne ? 1 : -1);
    std::ostringstream os;
    os << "relation " << to_string(w.relation);
    if (w.form) os << " form " << w.form->which << " t " << w.form->t;
    os << "\ns_e " << c.s_even << " s_o " << c.s_odd << (agree ? " agree" : " disagree") << '\n';
    Json r{{"n", o.n}, {"relation", to_string(w.relation)}, {"s_e", c.s_even}, {"s_o", c.s_odd}, {"agree", agree}};
    if (w.form) r["form"] = Json{{"which", w.form->which}, {"t", w.form->t}};
    return {agree ? kOk : kVerificationFailed, os.str(), r};
}

Reading parse_reading(const std::string& r) {
    if (r == "derived") return Reading::Derived;
    if (r == "printed") return Reading::Printed;
    throw UsageError("--reading must be derived or printed");
}

Json report_json(const IdentityReport& r) {
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches) mismatches.push_back({{"n", m.n}, {"lhs", m.lhs.str()}, {"rhs", m.rhs.str()}});
    return Json{{"identity", info(r.id).key}, {"alias", info(r.id).alias}, {"order", r.order},
                {"valid_from", r.valid_from}, {"ok", r.ok()}, {"mismatches", mismatches}};
}

Outcome do_verify(const Options& o) {
    const Reading reading = parse_reading(o.reading);
    if (o.all) {
        std::vector<std::future<IdentityReport>> jobs;
        for (const IdentityInfo& i : identities())
            jobs.push_back(std::async(std::launch::async, verify_identity, i.id, o.order, reading));
        Outcome out;
        out.result = Json::array();
        for (auto& job : jobs) {
            const IdentityReport r = job.get();
            out.text += std::string(info(r.id).alias) + " " + std::string(info(r.id).key) + (r.ok() ? " OK " : " FAIL ") +
                        std::to_string(r.mismatches.size()) + " mismatches\n";
            out.result.push_back(report_json(r));
            if (!r.ok()) out.code = kVerificationFailed;
        }
        return out;
    }
    if (o.name.empty()) throw UsageError("verify needs an identity name or --all");
    const auto id = parse_identity(o.name);
    if (!id) throw UsageError("unknown identity '" + o.name + "'");
    const IdentityReport r = verify_identity(*id, o.order, reading);
    Outcome out{r.ok() ? kOk : kVerificationFailed, "", report_json(r)};
    if (o.report) out.text += format_report(r);
    out.text += std::string(r.ok() ? "OK " : "FAIL ") + std::to_string(r.mismatches.size()) + " mismatches\n";
    for (const auto& m : r.mismatches) out.text += std::to_string(m.n) + " " + m.lhs.str() + " " + m.rhs.str() + "\n";
    return out;
}

Outcome do_checksum(const Options& o) {
    const int first = o.m ? *o.m : 0;
    const int last = o.m ? *o.m : o.to;
    if (first < 0) throw UsageError("m must be nonnegative");
    const SequenceTable t = series_table(o.name, last);
    Outcome out;
    out.result = Json::array();
    for (int m = first; m <= last; ++m) {
        const std::int64_t got = checksum(t, m);
        const std::int64_t want = expected_checksum(o.name, m);
        out.text += std::to_string(m) + " " + std::to_string(got) + " " + std::to_string(want) +
                    (got == want ? "" : " MISMATCH") + "\n";
        out.result.push_back({{"m", m}, {"checksum", got}, {"expected", want}});
        if (got != want) out.code = kVerificationFailed;
    }
    return out;
}

Outcome do_solve(const Options& o) {
    const SequenceTable t = recursive_solve(o.name, o.to);
    return {kOk, to_bfile(t), table_json(t)};
}

Outcome do_diagram(const Options& o) {
    const Partition p = parse_partition(o.partition);
    std::vector<YoungMark> marks;
    for (const std::string& spec : o.marks) {
        YoungMark mark;
        char sep1 = 0, sep2 = 0;
        std::istringstream is(spec);
        if (!(is >> mark.row >> sep1 >> mark.col >> sep2 >> mark.label) || sep1 != ':' || sep2 != ':')
            throw UsageError("--mark expects row:col:label");
        marks.push_back(mark);
    }
    const std::string grid = render_young(p, marks);
    return {kOk, grid.empty() ? "" : grid + "\n", Json{{"partition", parts_json(p)}, {"diagram", grid}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Butterfly sequence toolkit"};
    // -h is left free for the bar size option --h.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit {\"command\", \"result\"} JSON");

    auto* seq = app.add_subcommand("seq", "Print a named sequence as b-file lines");
    seq->add_option("name", o.name, "q r s t r1 r2 r1p r1pp s_e s_o p dp d2p e o e_prime o_prime e_dprime o_dprime")->required();
    seq->add_option("--to", o.to, "Last input");
    seq->add_option("--source", o.source, "enumerated | series | recurrence");

    auto* en = app.add_subcommand("enum", "List the members of a family");
    en->add_option("family", o.name, "Family name")->required();
    en->add_option("n", o.n, "Integer to partition")->required()->check(CLI::NonNegativeNumber);
    en->add_option("--h", o.h, "Bar size for bar families");

    auto* bij = app.add_subcommand("bij", "Verify a bijection over a range of n");
    bij->add_option("kind", o.name, "raise | butterfly | bar")->required();
    bij->add_option("from", o.from, "First n")->required();
    bij->add_option("to", o.upto, "Last n")->required();
    bij->add_option("--h", o.h, "Bar size");

    auto* sp = app.add_subcommand("split", "Split a butterfly partition into odd parts");
    sp->add_option("partition", o.partition, "e.g. 7+6+5+4+3+2")->required();
    sp->add_option("--variant", o.variant, "standard | switched");

    auto* mg = app.add_subcommand("merge", "Merge an odd-part partition back into a butterfly partition");
    mg->add_option("partition", o.partition)->required();
    mg->add_option("--variant", o.variant, "standard | switched");

    auto* cp = app.add_subcommand("caps", "Report the merging caps of an odd-part partition");
    cp->add_option("partition", o.partition)->required();
    cp->add_option("--variant", o.variant, "standard | switched");

    auto* cl = app.add_subcommand("classify", "Pentagonal classification of a butterfly partition");
    cl->add_option("partition", o.partition)->required();

    auto* pa = app.add_subcommand("parity", "Even/odd second-part relation at n");
    pa->add_option("n", o.n)->required();

    auto* ve = app.add_subcommand("verify", "Verify a generating-function identity coefficient by coefficient");
    ve->add_option("identity", o.name, "Identity key or alias");
    ve->add_option("--order", o.order, "Truncation order")->check(CLI::NonNegativeNumber);
    ve->add_option("--reading", o.reading, "derived | printed");
    ve->add_flag("--all", o.all, "Verify every identity");
    ve->add_flag("--report", o.report, "Print every coefficient as 'n lhs rhs'");

    auto* cs = app.add_subcommand("checksum", "Pentagonal checksum against its triangular prediction");
    cs->add_option("name", o.name, "q | r | s | t")->required();
    cs->add_option("m", o.m, "Single input");
    cs->add_option("--to", o.to, "Check 0..N when m is omitted");

    auto* so = app.add_subcommand("solve", "Rebuild a sequence from its checksum relation");
    so->add_option("name", o.name, "q | r | s | t")->required();
    so->add_option("--to", o.to, "Last input");

    auto* di = app.add_subcommand("diagram", "Render a Young diagram");
    di->add_option("partition", o.partition)->required();
    di->add_option("--mark", o.marks, "row:col:label, repeatable");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> verbs{
        {seq, do_seq}, {en, do_enum}, {bij, do_bij}, {sp, do_split}, {mg, do_merge}, {cp, do_caps},
        {cl, do_classify}, {pa, do_parity}, {ve, do_verify}, {cs, do_checksum}, {so, do_solve}, {di, do_diagram},
    };
    const auto verb = std::find_if(verbs.begin(), verbs.end(), [](const auto& v) { return v.first->parsed(); });
    try {
        const Outcome result = verb->second(o);
        if (o.json)
            out << Json{{"command", verb->first->get_name()}, {"result", result.result}}.dump() << '\n';
        else
            out << result.text;
        return result.code;
    } catch (const MergeError& e) {
        err << "merge failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace butterfly::cli
