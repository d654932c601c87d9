// bplink: invariants of Brieskorn-Pham and weighted-homogeneous links.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bp/census.hpp"
#include "bp/charpoly.hpp"
#include "bp/graph.hpp"
#include "bp/ke.hpp"
#include "bp/signature.hpp"

using json = nlohmann::ordered_json;
using namespace bp;

namespace {

json num(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

std::string rat(const BigRat& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

json tuple_json(const std::vector<std::int64_t>& t) {
    return json(t);
}

json charpoly_json(const CharPoly& cp) {
    json e = json::object();
    for (const auto& [m, c] : cp.exponents) e[m.str()] = c;
    json out;
    out["basis"] = "t^m-1";
    out["exponents"] = e;
    out["degree"] = num(cp.degree());
    out["betti"] = cp.betti();
    return out;
}

struct Options {
    std::string format = "json";
    int jobs = 1;
    std::string cache;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// append-only JSONL cache keyed by command + canonical input
bool cache_lookup(const std::string& path, const std::string& key, json& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded()) continue;
        if (rec.value("key", "") == key) {
            out = rec["envelope"];
            return true;
        }
    }
    return false;
}

void cache_append(const std::string& path, const std::string& key, const json& envelope) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw usage_error("cache: cannot open " + path);
    json rec;
    rec["key"] = key;
    rec["envelope"] = envelope;
    out << rec.dump() << "\n";
}

void emit_table_row(std::ostream& os, const std::vector<std::string>& cells, bool csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << (csv ? "," : "  ");
        os << cells[i];
    }
    os << "\n";
}

// csv/table rendering: tabular payloads get real rows, everything else a
// key,value listing of the result object
void emit_tabular(const json& envelope, bool csv) {
    const json& res = envelope["result"];
    if (res.contains("cells")) {
        emit_table_row(std::cout, {"label", "computed", "paper", "match"}, csv);
        for (const auto& c : res["cells"])
            emit_table_row(std::cout,
                           {c["label"].get<std::string>(), c["computed"].dump(),
                            c["paper"].dump(), c["match"].get<bool>() ? "yes" : "no"},
                           csv);
    } else if (res.contains("tuples")) {
        emit_table_row(std::cout, {"tuple"}, csv);
        for (const auto& t : res["tuples"]) {
            std::string s;
            for (const auto& v : t) {
                if (!s.empty()) s += " ";
                s += v.dump();
            }
            emit_table_row(std::cout, {s}, csv);
        }
    } else if (res.contains("values")) {
        emit_table_row(std::cout, {"k", "value"}, csv);
        int k = 1;
        for (const auto& v : res["values"])
            emit_table_row(std::cout, {std::to_string(k++), v.dump()}, csv);
    } else {
        emit_table_row(std::cout, {"field", "value"}, csv);
        for (const auto& [k, v] : res.items())
            emit_table_row(std::cout, {k, v.dump()}, csv);
    }
    for (const auto& w : envelope["warnings"])
        std::cerr << "warning: " << w.get<std::string>() << "\n";
}

void output(const Options& opt, const std::string& command, const json& input,
            const json& result, const std::vector<std::string>& warnings) {
    json envelope;
    envelope["schema_version"] = "1";
    envelope["command"] = command;
    envelope["input"] = input;
    envelope["result"] = result;
    envelope["warnings"] = warnings;

    if (!opt.cache.empty()) {
        std::string key =
            std::to_string(fnv1a(command + "\x1f" + input.dump())) + "-" + command;
        json cached;
        if (!cache_lookup(opt.cache, key, cached)) cache_append(opt.cache, key, envelope);
    }
    if (opt.format == "json")
        std::cout << envelope.dump(2) << "\n";
    else
        emit_tabular(envelope, opt.format == "csv");
}

ExponentVector parse_tuple(const std::vector<std::int64_t>& raw) {
    return ExponentVector(raw);  // canonicalizes (sorts)
}

json classify_result(const ExponentVector& a) {
    json r;
    r["dimension"] = a.dimension();
    HomologyClass hc = classify_homology(a);
    r["homology"] = homology_class_name(hc);
    r["homotopy_sphere"] = is_homotopy_sphere(a);
    CharPoly cp = milnor_orlik_divisor(a);
    r["betti"] = cp.betti();
    DeltaAtOne d1 = delta_at_one(cp);
    if (d1.is_rational_hs) r["torsion"] = num(d1.torsion_order);
    WeightedHypersurface h = weights_degree(a);
    r["fano"] = fano_positivity(h) == Positivity::Positive;
    r["milnor_number"] = num(milnor_number(a));
    return r;
}

json invariants_result(const WeightedHypersurface& h) {
    json r;
    json ws = json::array();
    for (const auto& w : h.weights) ws.push_back(num(w));
    r["weights"] = ws;
    r["degree"] = num(h.degree);
    json ratios = json::array();
    for (const auto& q : monodromy_ratios(h)) ratios.push_back(rat(q));
    r["monodromy_ratios"] = ratios;
    r["milnor_number"] = num(milnor_number(h));
    CharPoly cp = milnor_orlik_divisor(h);
    r["charpoly"] = charpoly_json(cp);
    DeltaAtOne d1 = delta_at_one(cp);
    r["rational_hs"] = d1.is_rational_hs;
    if (d1.is_rational_hs) r["torsion"] = num(d1.torsion_order);
    PositivityReport pr = positivity(h);
    r["fano_index"] = num(pr.index);
    r["positivity"] = positivity_name(pr.sign);
    r["positive_ricci"] = pr.positive_ricci_metric_exists;
    return r;
}

json signature_result(const ExponentVector& a, int jobs, std::vector<std::string>& warnings) {
    json r;
    SignatureResult s = signature_combinatorial(a, jobs);
    r["tau"] = s.tau;
    r["count_plus"] = num(s.count_plus);
    r["count_minus"] = num(s.count_minus);
    r["method"] = "combinatorial";
    try {
        SignatureResult z = signature_zagier(a);
        if (z.tau != s.tau)
            warnings.push_back("zagier check disagrees: " + std::to_string(z.tau));
        json zj;
        zj["tau"] = z.tau;
        zj["error_bound"] = z.error_bound;  // diagnostic float, the only one
        r["zagier_check"] = zj;
    } catch (const std::exception& e) {
        warnings.push_back(std::string("zagier check unavailable: ") + e.what());
    }
    r["kervaire_type"] = kervaire_type_name(kervaire_type(a));
    int dim = a.dimension();
    if (dim >= 7 && (dim + 1) % 4 == 0 &&
        classify_homology(a) == HomologyClass::IntegralHomologySphere) {
        DiffeoClass dc = km_class(a);
        json km;
        km["dimension"] = dc.dimension;
        km["bp_group_order"] = num(dc.bp_group_order);
        km["km_index"] = num(dc.km_index);
        km["is_standard"] = dc.is_standard;
        r["km_class"] = km;
    }
    return r;
}

json ke_result(const ExponentVector& a) {
    KEReport k = ke_check(a);
    json r;
    r["a"] = tuple_json(k.a);
    json cs = json::array(), bs = json::array();
    for (const auto& c : k.c) cs.push_back(num(c));
    for (const auto& b : k.b) bs.push_back(num(b));
    r["c"] = cs;
    r["b"] = bs;
    r["cond1"] = k.cond1;
    r["cond2"] = k.cond2;
    r["cond3"] = k.cond3;
    r["passes"] = k.passes;
    r["fano"] = k.fano;
    r["positive_ricci"] = k.positive_ricci;
    return r;
}

Predicate parse_predicate(const std::string& s) {
    if (s == "homotopy-sphere") return Predicate::HomotopySphere;
    if (s == "rational-hs") return Predicate::RationalHS;
    if (s == "ke") return Predicate::KEPasses;
    if (s == "fano") return Predicate::Fano;
    throw CLI::ValidationError("--filter",
                               "unknown filter '" + s +
                                   "' (expected homotopy-sphere|rational-hs|ke|fano)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brieskorn-Pham link invariants"};
    app.require_subcommand(1);

    Options opt;
    bool jobs_given = false;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "Worker count (env BPLINK_JOBS when absent)")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { jobs_given = true; });
    app.add_option("--cache", opt.cache, "Append-only JSONL result cache");

    std::vector<std::int64_t> exps;
    auto* c_classify = app.add_subcommand("classify", "Homology type of a BP link");
    c_classify->add_option("exponents", exps, "Exponent tuple")->required()->expected(-2);

    auto* c_inv = app.add_subcommand("invariants", "Alexander data and positivity");
    std::vector<std::int64_t> inv_exps;
    std::vector<std::string> inv_weights;
    std::string inv_degree;
    c_inv->add_option("exponents", inv_exps, "Exponent tuple")->expected(-1);
    c_inv->add_option("--weights", inv_weights, "Weight vector");
    c_inv->add_option("--degree", inv_degree, "Degree");

    auto* c_sig = app.add_subcommand("signature", "Milnor fiber signature, diffeo class");
    std::vector<std::int64_t> sig_exps;
    c_sig->add_option("exponents", sig_exps, "Exponent tuple")->required()->expected(-2);

    auto* c_ke = app.add_subcommand("ke", "Kaehler-Einstein sufficiency certificate");
    std::vector<std::int64_t> ke_exps;
    c_ke->add_option("exponents", ke_exps, "Exponent tuple")->required()->expected(-2);

    auto* c_enum = app.add_subcommand("enumerate", "Bounded census of links");
    int enum_dim = 5;
    std::vector<std::string> enum_filters;
    std::vector<std::int64_t> enum_prefix;
    c_enum->add_option("--dim", enum_dim, "Link dimension (odd)")->required();
    c_enum->add_option("--filter", enum_filters, "Predicates: homotopy-sphere|rational-hs|ke|fano")
        ->required()
        ->delimiter(',');
    c_enum->add_option("--prefix", enum_prefix, "Fix all exponents but one");

    auto* c_repro = app.add_subcommand("reproduce", "Re-run a numeric claim");
    std::string repro_id;
    c_repro->add_option("id", repro_id, "Table id")->required();

    auto* c_seq = app.add_subcommand("sequence", "Special integer sequences");
    std::string seq_name;
    unsigned seq_upto = 7;
    c_seq->add_option("name", seq_name, "Sequence name (c)")->required();
    c_seq->add_option("--upto", seq_upto, "Last index")->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!jobs_given) {
        if (const char* env = std::getenv("BPLINK_JOBS")) {
            int j = std::atoi(env);
            if (j >= 1) opt.jobs = j;
        }
    }

    try {
        std::vector<std::string> warnings;
        if (c_classify->parsed()) {
            ExponentVector a = parse_tuple(exps);
            json input;
            input["a"] = tuple_json(a.exponents());
            output(opt, "classify", input, classify_result(a), warnings);
        } else if (c_inv->parsed()) {
            if (!inv_weights.empty() || !inv_degree.empty()) {
                if (inv_weights.empty() || inv_degree.empty() || !inv_exps.empty())
                    throw usage_error("invariants: give either exponents or --weights with --degree");
                WeightedHypersurface h;
                for (const auto& w : inv_weights) h.weights.emplace_back(BigInt(w));
                h.degree = BigInt(inv_degree);
                json input;
                json ws = json::array();
                for (const auto& w : h.weights) ws.push_back(num(w));
                input["weights"] = ws;
                input["degree"] = num(h.degree);
                output(opt, "invariants", input, invariants_result(h), warnings);
            } else {
                if (inv_exps.size() < 2) throw usage_error("invariants: exponent tuple required");
                ExponentVector a = parse_tuple(inv_exps);
                json input;
                input["a"] = tuple_json(a.exponents());
                json r = invariants_result(weights_degree(a));
                r["homology"] = homology_class_name(classify_homology(a));
                output(opt, "invariants", input, r, warnings);
            }
        } else if (c_sig->parsed()) {
            ExponentVector a = parse_tuple(sig_exps);
            json input;
            input["a"] = tuple_json(a.exponents());
            output(opt, "signature", input, signature_result(a, opt.jobs, warnings), warnings);
        } else if (c_ke->parsed()) {
            ExponentVector a = parse_tuple(ke_exps);
            json input;
            input["a"] = tuple_json(a.exponents());
            output(opt, "ke", input, ke_result(a), warnings);
        } else if (c_enum->parsed()) {
            CensusSpec spec;
            spec.dimension = enum_dim;
            for (const auto& f : enum_filters) spec.predicates.push_back(parse_predicate(f));
            if (!enum_prefix.empty()) spec.prefix = enum_prefix;
            CensusResult res = enumerate_ke_links(spec, opt.jobs);
            json input;
            input["dim"] = enum_dim;
            input["filter"] = enum_filters;
            if (!enum_prefix.empty()) input["prefix"] = enum_prefix;
            json r;
            r["total"] = res.total;
            json ts = json::array();
            for (const auto& t : res.tuples) ts.push_back(tuple_json(t.exponents()));
            r["tuples"] = ts;
            if (!res.per_class.empty()) {
                json pc = json::object();
                for (const auto& [k, v] : res.per_class) pc[std::to_string(k)] = v;
                r["per_class"] = pc;
            }
            for (const auto& w : res.warnings) warnings.push_back(w);
            output(opt, "enumerate", input, r, warnings);
        } else if (c_repro->parsed()) {
            ReproReport rep = reproduce(repro_id, opt.jobs);
            json input;
            input["id"] = repro_id;
            json r;
            r["table_id"] = rep.table_id;
            json cells = json::array();
            int matches = 0;
            for (const auto& c : rep.cells) {
                json cj;
                cj["label"] = c.label;
                cj["computed"] = c.computed;
                cj["paper"] = c.paper;
                cj["match"] = c.match;
                if (c.match) ++matches;
                cells.push_back(cj);
            }
            r["cells"] = cells;
            r["matches"] = std::to_string(matches) + "/" + std::to_string(rep.cells.size());
            r["all_match"] = rep.all_match;
            for (const auto& w : rep.warnings) warnings.push_back(w);
            output(opt, "reproduce", input, r, warnings);
        } else if (c_seq->parsed()) {
            if (seq_name != "c") throw usage_error("sequence: unknown sequence '" + seq_name + "'");
            json input;
            input["name"] = seq_name;
            input["upto"] = seq_upto;
            json vals = json::array();
            for (unsigned k = 1; k <= seq_upto; ++k) vals.push_back(num(c_sequence(k)));
            json r;
            r["values"] = vals;
            output(opt, "sequence", input, r, warnings);
        }
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unbounded_search_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
