#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rainbow/certificate.hpp"
#include "rainbow/gadget.hpp"
#include "rainbow/search.hpp"
#include "rainbow/semigroup.hpp"
#include "rainbow/spectrum.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rainbow;

void render_table(const CertificateDocument& doc, std::ostream& out) {
    out << "command: " << doc.command << "\n";
    if (!doc.inputs.empty()) {
        out << "inputs:\n";
        for (const auto& [key, value] : doc.inputs.items())
            out << "  " << key << ": " << value.dump() << "\n";
    }
    if (!doc.result.empty()) {
        out << "result:\n";
        for (const auto& [key, value] : doc.result.items())
            out << "  " << key << ": " << value.dump() << "\n";
    }
    out << "checks:\n";
    for (const CheckItem& c : doc.checks) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << " - " << c.detail;
        out << "\n";
    }
}

int finish(const CertificateDocument& doc, bool as_json) {
    if (as_json)
        std::cout << certificate_to_string(doc);
    else
        render_table(doc, std::cout);
    return doc.all_pass() ? 0 : 1;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

void add_cycle_checks(CertificateDocument& doc, const CycleCertificate& c) {
    doc.add_check("multiset", c.multiset_ok,
                  c.multiset_ok ? "" : "step multiset differs from the prescribed one");
    doc.add_check("closure", c.closed_ok,
                  c.closed_ok ? "" : "steps do not sum to 0 mod M");
    doc.add_check("distinct-vertices", c.distinct_ok, c.distinct_ok ? "" : "a vertex repeats");
    std::string rainbow_detail;
    if (!c.forced_rainbow_ok) {
        if (c.witness_i >= 0)
            rainbow_detail = "edges " + std::to_string(c.witness_i) + " and " +
                             std::to_string(c.witness_j) + " share allowed colors";
        else if (!c.detail.empty())
            rainbow_detail = c.detail;
        else
            rainbow_detail = "not evaluated: the step sequence is not a closed cycle";
    }
    doc.add_check("forced-rainbow", c.forced_rainbow_ok, rainbow_detail);
}

ordered_json cycle_result(const CycleCertificate& c) {
    ordered_json r;
    r["M"] = c.M;
    r["n"] = c.n;
    r["family"] = c.constraint_family;
    r["steps"] = c.steps;
    r["valid"] = c.valid();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical-semigroup and rainbow-cycle toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON certificate instead of a table");

    // semigroup
    auto* sg = app.add_subcommand(
        "semigroup", "membership, period and progression conductor of a generated semigroup");
    std::vector<long long> gens;
    sg->add_option("--gens", gens, "comma-separated generators")->required()->delimiter(',');
    bool monoid = false;
    sg->add_flag("--monoid", monoid, "include the empty sum (member 0)");
    bool want_period = false;
    sg->add_flag("--period", want_period, "report the gcd of the generators");
    long long cstep = 0;
    auto* copt = sg->add_option("--conductor-step", cstep,
                                "least N >= 1 with N, N+p, N+2p, ... all members");
    long long sbound = -1;
    auto* bopt = sg->add_option("--bound", sbound, "list members up to this bound");

    // spectrum
    auto* sp = app.add_subcommand(
        "spectrum", "closure of {2, n} under the gluing and reduction rules");
    long long spn = 0;
    sp->add_option("--n", spn, "seed cycle length")->required();
    long long limit = 0;
    auto* lopt = sp->add_option("--limit", limit, "truncate the closure at this value");
    bool verify_main = false;
    sp->add_flag("--verify-main", verify_main,
                 "check the guaranteed arithmetic progression up to the limit");

    // lemmas
    auto* lm = app.add_subcommand("lemmas", "scripted chord-set derivations in the ambient ring");
    int ln = 0;
    lm->add_option("--n", ln, "cycle length under test")->required();
    std::string lcase;
    lm->add_option("--case", lcase, "even | div4")
        ->required()
        ->check(CLI::IsMember({"even", "div4"}));

    // construct
    auto* co = app.add_subcommand("construct", "deterministic witness cycle for one case");
    std::string ccase;
    co->add_option("--case", ccase, "even | div4")
        ->required()
        ->check(CLI::IsMember({"even", "div4"}));
    int cn = 0;
    auto* cnopt = co->add_option("--n", cn, "cycle length (even case, or 4k)");
    int ck = 0;
    auto* ckopt = co->add_option("--k", ck, "quarter length (div4 case)");

    // search
    auto* se = app.add_subcommand("search", "depth-first backtrack for a witness cycle");
    std::string scase;
    se->add_option("--case", scase, "even | div4")
        ->required()
        ->check(CLI::IsMember({"even", "div4"}));
    int sn = 0;
    auto* snopt = se->add_option("--n", sn, "cycle length (even case, or 4k)");
    int sk = 0;
    auto* skopt = se->add_option("--k", sk, "quarter length (div4 case)");
    bool exhaustive = false;
    se->add_flag("--exhaustive", exhaustive, "run to completion (ignores --budget)");
    long long budget = 100000000;
    se->add_option("--budget", budget, "node budget; <= 0 means unlimited");

    // verify
    auto* ve = app.add_subcommand("verify", "audit a cycle written in compact notation");
    std::string vfile, vcompact;
    auto* fopt = ve->add_option("--file", vfile, "file holding the compact notation");
    auto* vopt = ve->add_option("--compact", vcompact, "compact notation string");
    std::string vcase;
    ve->add_option("--case", vcase, "even | div4")
        ->required()
        ->check(CLI::IsMember({"even", "div4"}));
    int vn = 0;
    auto* vnopt = ve->add_option("--n", vn, "cycle length (even case, or 4k)");
    int vk = 0;
    auto* vkopt = ve->add_option("--k", vk, "quarter length (div4 case)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*sg) {
        CertificateDocument doc;
        doc.command = "semigroup";
        doc.inputs["gens"] = gens;
        if (monoid) doc.inputs["monoid"] = true;
        if (!want_period && !*copt && !*bopt)
            return usage_error("semigroup: pass --period, --conductor-step or --bound");
        try {
            NumericalSemigroup s(gens, monoid);
            if (want_period) {
                doc.result["period"] = s.period();
                doc.add_check("period-defined", true);
            }
            if (*copt) {
                doc.inputs["conductor_step"] = cstep;
                doc.result["conductor"] = progression_conductor(s, cstep);
                doc.add_check("progression-certified", true);
            }
            if (*bopt) {
                doc.inputs["bound"] = sbound;
                doc.result["members"] = s.members_up_to(sbound);
                doc.add_check("membership-enumerated", true);
            }
        } catch (const std::domain_error& e) {
            doc.add_check("domain", false, e.what());
        } catch (const std::invalid_argument& e) {
            return usage_error(std::string("semigroup: ") + e.what());
        }
        return finish(doc, as_json);
    }

    if (*sp) {
        CertificateDocument doc;
        doc.command = "spectrum";
        doc.inputs["n"] = spn;
        if (!verify_main && !*lopt)
            return usage_error("spectrum: pass --limit and/or --verify-main");
        try {
            if (spn >= 3) {
                MainBound b = main_theorem_bound(spn);
                doc.result["p"] = b.p;
                doc.result["n_bound"] = b.n_bound;
            }
            if (verify_main) {
                if (spn < 3) return usage_error("spectrum: --verify-main needs n >= 3");
                MainBound b = main_theorem_bound(spn);
                long long lim = *lopt ? limit : 4 * b.n_bound;
                doc.inputs["limit"] = lim;
                ProgressionCheck pc = verify_progression(spn, b.p, b.n_bound, lim);
                doc.add_check("progression-covered", pc.ok,
                              pc.ok ? ""
                                    : "missing member " + std::to_string(pc.counterexample));
            } else {
                doc.inputs["limit"] = limit;
                std::vector<char> bits = implied_member_bits(spn, limit);
                long long count = 0;
                ordered_json members = ordered_json::array();
                for (long long v = 0; v <= limit; ++v) {
                    if (!bits[static_cast<size_t>(v)]) continue;
                    ++count;
                    if (count <= 2000) members.push_back(v);
                }
                doc.result["member_count"] = count;
                doc.result["members"] = members;
                if (count > 2000) doc.result["members_truncated"] = true;
                doc.add_check("closure-computed", true);
            }
        } catch (const std::invalid_argument& e) {
            return usage_error(std::string("spectrum: ") + e.what());
        }
        return finish(doc, as_json);
    }

    if (*lm) {
        CertificateDocument doc;
        doc.command = "lemmas";
        doc.inputs["n"] = ln;
        doc.inputs["case"] = lcase;
        try {
            ChainResult cr = lcase == "even" ? lemma_even_chain(ln) : lemma_div4_chain(ln);
            doc.result["M"] = lcase == "even" ? 3 * ln - 8 : 3 * ln - 10;
            ordered_json fams = ordered_json::array();
            for (const ChordFamily& f : cr.families) {
                ordered_json jf;
                jf["name"] = f.name;
                jf["length"] = f.shape.len;
                jf["offset"] = f.shape.offset;
                jf["width"] = f.shape.width;
                jf["base0"] = f.by_base.empty() ? std::string("{}") : f.by_base[0].str();
                fams.push_back(std::move(jf));
            }
            doc.result["families"] = fams;
            if (!cr.notes.empty()) doc.result["notes"] = cr.notes;
            doc.add_check("chain-derived", true);
        } catch (const ScriptError& e) {
            doc.add_check("chain-derived", false, e.what());
        } catch (const PropagationPrecondition& e) {
            doc.add_check("chain-derived", false, e.what());
        } catch (const std::invalid_argument& e) {
            return usage_error(std::string("lemmas: ") + e.what());
        }
        return finish(doc, as_json);
    }

    if (*co) {
        CertificateDocument doc;
        doc.command = "construct";
        doc.inputs["case"] = ccase;
        bool even_case = ccase == "even";
        int n = 0, k = 0;
        if (even_case) {
            if (!*cnopt) return usage_error("construct: the even case needs --n");
            n = cn;
            doc.inputs["n"] = n;
        } else {
            if (*ckopt)
                k = ck;
            else if (*cnopt && cn % 4 == 0)
                k = cn / 4;
            else
                return usage_error("construct: the div4 case needs --k or --n divisible by 4");
            n = 4 * k;
            doc.inputs["k"] = k;
        }
        try {
            auto [tr, walk] = even_case ? construct_even(n) : construct_div4(k);
            for (const auto& [name, ok] : tr.inequality_report)
                doc.add_check(name, ok, ok ? "" : "violated");
            VerificationFamily family = even_case ? even_family(n) : div4_family(n);
            CycleCertificate cert = verify_cycle(walk.modulus(), walk.steps(), n, family);
            doc.result = cycle_result(cert);
            if (even_case && tr.d >= 0) {
                doc.result["d"] = tr.d;
                doc.result["z"] = tr.z;
                doc.result["y"] = tr.y;
                doc.result["u"] = tr.u;
            }
            if (!even_case) {
                doc.result["r"] = tr.r;
                doc.result["d1"] = tr.d1;
                doc.result["d2"] = tr.d2;
            }
            if (!tr.round_positions.empty())
                doc.result["round_positions"] = tr.round_positions;
            add_cycle_checks(doc, cert);
        } catch (const InequalityError& e) {
            doc.add_check("inequalities", false, e.what());
        } catch (const ConstructionError& e) {
            doc.add_check("construction", false, e.what());
        } catch (const std::invalid_argument& e) {
            return usage_error(std::string("construct: ") + e.what());
        }
        return finish(doc, as_json);
    }

    if (*se) {
        CertificateDocument doc;
        doc.command = "search";
        doc.inputs["case"] = scase;
        bool even_case = scase == "even";
        int n = 0, k = 0;
        if (even_case) {
            if (!*snopt) return usage_error("search: the even case needs --n");
            n = sn;
            doc.inputs["n"] = n;
        } else {
            if (*skopt)
                k = sk;
            else if (*snopt && sn % 4 == 0)
                k = sn / 4;
            else
                return usage_error("search: the div4 case needs --k or --n divisible by 4");
            n = 4 * k;
            doc.inputs["k"] = k;
        }
        doc.inputs["exhaustive"] = exhaustive;
        long long effective_budget = exhaustive ? 0 : budget;
        if (!exhaustive) doc.inputs["budget"] = budget;
        try {
            StepMultiset ms = even_case ? even_multiset(n) : div4_multiset(k);
            VerificationFamily family = even_case ? even_family(n) : div4_family(n);
            std::vector<int> ordering =
                even_case ? std::vector<int>{1, 7, n - 1} : std::vector<int>{1, 13, n - 1};
            auto progress = [](long long nodes) {
                std::cerr << "search: visited " << nodes << " nodes\n";
            };
            SearchOutcome out = backtrack_search(family.M, ms, family, ordering, exhaustive,
                                                 effective_budget, progress);
            doc.result["M"] = family.M;
            doc.result["n"] = n;
            doc.result["nodes"] = out.nodes;
            switch (out.status) {
                case SearchOutcome::Status::found: {
                    doc.result["status"] = "found";
                    doc.result["steps"] = out.walk->steps();
                    CycleCertificate cert =
                        verify_cycle(family.M, out.walk->steps(), n, family);
                    add_cycle_checks(doc, cert);
                    break;
                }
                case SearchOutcome::Status::none:
                    doc.result["status"] = "none";
                    doc.add_check("search-complete", true);
                    break;
                case SearchOutcome::Status::budget_exhausted:
                    doc.result["status"] = "budget-exhausted";
                    doc.add_check("within-budget", false,
                                  "node budget spent before the tree was exhausted");
                    break;
            }
        } catch (const std::invalid_argument& e) {
            return usage_error(std::string("search: ") + e.what());
        }
        return finish(doc, as_json);
    }

    if (*ve) {
        CertificateDocument doc;
        doc.command = "verify";
        doc.inputs["case"] = vcase;
        bool even_case = vcase == "even";
        int n = 0, k = 0;
        if (even_case) {
            if (!*vnopt) return usage_error("verify: the even case needs --n");
            n = vn;
            doc.inputs["n"] = n;
        } else {
            if (*vkopt)
                k = vk;
            else if (*vnopt && vn % 4 == 0)
                k = vn / 4;
            else
                return usage_error("verify: the div4 case needs --k or --n divisible by 4");
            n = 4 * k;
            doc.inputs["k"] = k;
        }
        if (static_cast<bool>(*fopt) == static_cast<bool>(*vopt))
            return usage_error("verify: pass exactly one of --file or --compact");
        std::string notation = vcompact;
        if (*fopt) {
            std::ifstream in(vfile);
            if (!in) return usage_error("verify: cannot read '" + vfile + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            notation = buf.str();
            doc.inputs["file"] = vfile;
        } else {
            doc.inputs["compact"] = vcompact;
        }
        VerificationFamily family;
        try {
            family = even_case ? even_family(n) : div4_family(n);
        } catch (const std::invalid_argument& e) {
            return usage_error(std::string("verify: ") + e.what());
        }
        std::vector<int> steps;
        try {
            steps = parse_compact(notation, family.M);
        } catch (const CompactParseError& e) {
            doc.add_check("parse", false, e.what());
            return finish(doc, as_json);
        }
        doc.add_check("parse", true);
        CycleCertificate cert = verify_cycle(family.M, steps, n, family);
        doc.result = cycle_result(cert);
        add_cycle_checks(doc, cert);
        return finish(doc, as_json);
    }

    return usage_error("no subcommand selected");
}
