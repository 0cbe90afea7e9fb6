// Command-line front end for the retractlab library: lattice validation,
// congruence/quasiorder/retraction enumeration, grid counting, absorption
// checks, small-lattice search, and DOT export.
//
// Exit codes: 0 success, 1 a mathematical counterexample/violation verdict
// was found (so shell harnesses can assert theorems), 2 usage or data error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "retractlab/absorption.hpp"
#include "retractlab/catalog.hpp"
#include "retractlab/congruence.hpp"
#include "retractlab/grid.hpp"
#include "retractlab/json_io.hpp"
#include "retractlab/retraction.hpp"

using namespace retractlab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Caps {
    int construction = caps::construction;
    int brute_force = caps::brute_force;
    int quasiorder = caps::quasiorder;
    int enumeration = caps::enumeration;
};

struct LatticeInput {
    std::string fixture;
    std::vector<int> grid;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* f = cmd->add_option("--fixture", fixture, "catalog fixture name");
        auto* g = cmd->add_option("--grid", grid, "grid sizes M N")->expected(2);
        auto* p = cmd->add_option("--file", file, "lattice JSON file");
        f->excludes(g)->excludes(p);
        g->excludes(p);
    }

    Lattice resolve(const Caps& caps_) const {
        if (!fixture.empty()) return catalog(fixture).lattice;
        if (grid.size() == 2) return make_grid({grid[0], grid[1]}, caps_.construction);
        if (!file.empty()) return load_lattice_file(file, caps_.construction);
        throw Error("no lattice given: use --fixture, --grid, or --file");
    }
};

Caps resolve_caps(int max_n_flag) {
    Caps c;
    int v = max_n_flag;
    if (v <= 0) {
        if (const char* env = std::getenv("RETRACTLAB_MAX_N")) v = std::atoi(env);
    }
    if (v > 0) {
        c.brute_force = v;
        c.quasiorder = v;
        c.enumeration = v;
        c.construction = std::max(c.construction, v);
    }
    return c;
}

std::string blocks_text(const Partition& P) {
    std::string s;
    for (const auto& blk : P.blocks()) {
        s += "{";
        for (size_t i = 0; i < blk.size(); ++i) s += (i ? "," : "") + std::to_string(blk[i]);
        s += "}";
    }
    return s;
}

std::string subset_text(const DynBitset& S) {
    std::string s = "{";
    bool first = true;
    S.for_each([&](int x) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    });
    return s + "}";
}

int run_validate(const LatticeInput& in, const Caps& caps_, const std::string& format) {
    try {
        Lattice L = in.resolve(caps_);
        if (format == "json") {
            json j{{"valid", true}, {"n", L.n}, {"covers", lattice_to_json(L)["covers"]}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "valid lattice: n=" << L.n << ", covers=" << L.covers.size()
                      << ", bottom=" << L.bottom << ", top=" << L.top << "\n";
        }
        return kExitOk;
    } catch (const NotALattice& e) {
        if (format == "json") {
            json j{{"valid", false},
                   {"reason", e.what()},
                   {"witness", {e.a, e.b}},
                   {"missing", e.meet_side ? "meet" : "join"}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "invalid: " << e.what() << "\n";
        }
        return kExitCounterexample;
    } catch (const NotAPoset& e) {
        if (format == "json") {
            json j{{"valid", false}, {"reason", e.what()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "invalid: " << e.what() << "\n";
        }
        return kExitCounterexample;
    }
}

int run_flags(const LatticeInput& in, const Caps& caps_, const std::string& format) {
    Lattice L = in.resolve(caps_);
    auto f = structural_flags(L);
    if (format == "json") {
        json j{{"n", L.n},
               {"is_chain", f.is_chain},
               {"is_distributive", f.is_distributive},
               {"is_modular", f.is_modular}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n: " << L.n << "\nchain: " << (f.is_chain ? "yes" : "no")
                  << "\ndistributive: " << (f.is_distributive ? "yes" : "no")
                  << "\nmodular: " << (f.is_modular ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_con(const LatticeInput& in, const Caps& caps_, const std::string& format) {
    Lattice L = in.resolve(caps_);
    auto con = all_congruences(L, caps_.brute_force);
    if (format == "json") {
        json j;
        j["count"] = con.size();
        j["congruences"] = json::array();
        for (const Partition& P : con) j["congruences"].push_back(partition_to_json(P));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Partition& P : con) std::cout << blocks_text(P) << "\n";
        std::cout << "count: " << con.size() << "\n";
    }
    return kExitOk;
}

int run_quo(const LatticeInput& in, const Caps& caps_, const std::string& format) {
    Lattice L = in.resolve(caps_);
    auto quo = all_compatible_quasiorders(L, caps_.quasiorder);
    if (format == "json") {
        json j;
        j["count"] = quo.size();
        j["relations"] = json::array();
        for (const Relation& R : quo) j["relations"].push_back(relation_to_json(R));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Relation& R : quo) std::cout << R.bits.to_string01() << "\n";
        std::cout << "count: " << quo.size() << "\n";
    }
    return kExitOk;
}

int run_retractions(const LatticeInput& in, const Caps& caps_, const std::string& format) {
    Lattice L = in.resolve(caps_);
    auto maps = all_retractions(L, caps_.brute_force);
    if (format == "json") {
        json j;
        j["count"] = maps.size();
        j["retractions"] = json::array();
        for (const EndoMap& f : maps) j["retractions"].push_back(endomap_to_json(f));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const EndoMap& f : maps) {
            for (int i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f(i);
            std::cout << "\n";
        }
        std::cout << "count: " << maps.size() << "\n";
    }
    return kExitOk;
}

int run_retracts(const LatticeInput& in, const Caps& caps_, const std::string& format,
                 const std::string& mode, bool check_lattice) {
    Lattice L = in.resolve(caps_);
    std::vector<DynBitset> list;
    bool agree = true;
    if (mode == "bruteforce" || mode == "both")
        list = retracts(L, RetractsMode::bruteforce, caps_.brute_force);
    if (mode == "transversal")
        list = retracts(L, RetractsMode::transversal, caps_.brute_force);
    if (mode == "both") {
        auto tr = retracts(L, RetractsMode::transversal, caps_.brute_force);
        agree = tr == list;
    }

    RetPoset P;
    if (check_lattice || format == "dot") P = ret_poset(L, caps_.brute_force);

    if (format == "dot") {
        std::cout << ret_poset_to_dot(P);
    } else if (format == "json") {
        json j;
        j["count"] = list.size();
        j["retracts"] = json::array();
        for (const DynBitset& S : list) j["retracts"].push_back(subset_to_json(S));
        if (mode == "both") j["oracle_agreement"] = agree;
        if (check_lattice) j["ret_poset"] = ret_poset_to_json(P);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const DynBitset& S : list) std::cout << subset_text(S) << "\n";
        std::cout << "count: " << list.size() << "\n";
        if (mode == "both")
            std::cout << "oracle agreement: " << (agree ? "ok" : "MISMATCH") << "\n";
        if (check_lattice) {
            std::cout << "is_lattice: " << (P.is_lattice ? "true" : "false") << "\n";
            if (P.witness)
                std::cout << "witness: " << subset_text(P.elements[P.witness->first]) << " "
                          << subset_text(P.elements[P.witness->second]) << "\n";
        }
    }
    if (!agree) return kExitCounterexample;
    if (check_lattice && !P.is_lattice) return kExitCounterexample;
    return kExitOk;
}

int run_rcon(const LatticeInput& in, const Caps& caps_, const std::string& format) {
    Lattice L = in.resolve(caps_);
    auto rc = rcon(L, caps_.brute_force);
    if (format == "json") {
        json j;
        j["count"] = rc.size();
        j["retraction_congruences"] = json::array();
        for (const Partition& P : rc)
            j["retraction_congruences"].push_back(partition_to_json(P));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Partition& P : rc) std::cout << blocks_text(P) << "\n";
        std::cout << "count: " << rc.size() << "\n";
    }
    return kExitOk;
}

int run_grid_count(int m, int n, const std::string& format) {
    if (m < 1 || n < 1) throw InvalidShape("grid-count: m,n must be >= 1");
    if (m == 1 || n == 1) {
        // chain shape: the retract poset is the 2^k powerset
        BigCount total = chain_ret_poset_size(m * n);
        if (format == "json") {
            json j{{"m", m}, {"n", n}, {"rule", "chain"}, {"total", total.str()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "chain shape: |Ret C_" << m * n << "| = " << total.str() << "\n";
        }
        return kExitOk;
    }
    auto c = count_retracts({m, n});
    if (format == "json") {
        json j{{"m", m},
               {"n", n},
               {"sts", c.sts.str()},
               {"isc", c.isc.str()},
               {"total", c.total.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sts = " << c.sts.str() << " (" << sci_round(c.sts) << ")\n";
        std::cout << "isc = " << c.isc.str() << " (" << sci_round(c.isc) << ")\n";
        std::cout << "total = " << c.total.str() << " (" << sci_round(c.total) << ")\n";
    }
    return kExitOk;
}

int run_grid_retracts(int m, int n, const std::string& format) {
    auto list = grid_retracts({m, n});
    if (format == "json") {
        json j;
        j["m"] = m;
        j["n"] = n;
        j["count"] = list.size();
        j["retracts"] = json::array();
        for (const DynBitset& S : list) j["retracts"].push_back(subset_to_json(S));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const DynBitset& S : list) std::cout << subset_text(S) << "\n";
        std::cout << "count: " << list.size() << " (plus the empty set)\n";
    }
    return kExitOk;
}

int run_grid_chains(int m, int n, const std::string& format) {
    auto mc = maximal_chains({m, n});
    if (format == "json") {
        json j;
        j["m"] = m;
        j["n"] = n;
        j["h1"] = json::array();
        j["h2"] = json::array();
        for (const DynBitset& S : mc.h1) j["h1"].push_back(subset_to_json(S));
        for (const DynBitset& S : mc.h2) j["h2"].push_back(subset_to_json(S));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "H1 (" << mc.h1.size() << " members):\n";
        for (const DynBitset& S : mc.h1) std::cout << "  " << subset_text(S) << "\n";
        std::cout << "H2 (" << mc.h2.size() << " members):\n";
        for (const DynBitset& S : mc.h2) std::cout << "  " << subset_text(S) << "\n";
    }
    return kExitOk;
}

int run_absorption(const LatticeInput& in, const Caps& caps_, const std::string& format,
                   const std::string& property) {
    Lattice L = in.resolve(caps_);
    AbsorptionProperty prop;
    if (property == "rc" || property == "glusqap") prop = builtin_property(property);
    else prop = load_absorption_property_file(property);

    auto v = check_absorption(L, prop, caps_.brute_force);
    if (format == "json") {
        json j{{"property", prop.name}, {"holds", v.holds}};
        if (!v.holds) {
            j["counterexample"] = {{"retract", subset_to_json(*v.retract)},
                                   {"embedding", *v.embedding},
                                   {"star_element", v.star_element}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "property " << prop.name << ": " << (v.holds ? "holds" : "VIOLATED") << "\n";
        if (!v.holds) {
            std::cout << "  retract: " << subset_text(*v.retract) << "\n  embedding:";
            for (int g : *v.embedding) std::cout << " " << g;
            std::cout << "\n  escaped star element: " << v.star_element << "\n";
        }
    }
    return v.holds ? kExitOk : kExitCounterexample;
}

int run_enumerate(int n, const Caps& caps_, const std::string& format) {
    auto list = enumerate_lattices(n, caps_.enumeration);
    if (format == "json") {
        json j;
        j["n"] = n;
        j["count"] = list.size();
        j["lattices"] = json::array();
        for (const Lattice& L : list) j["lattices"].push_back(lattice_to_json(L));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Lattice& L : list) {
            for (size_t i = 0; i < L.covers.size(); ++i)
                std::cout << (i ? " " : "") << L.covers[i].first << "<" << L.covers[i].second;
            std::cout << "\n";
        }
        std::cout << "count: " << list.size() << "\n";
    }
    return kExitOk;
}

json pair_report_json(const L8PairReport& p) {
    return {{"c", p.c},
            {"d", p.d},
            {"only_block_cd", p.only_block_cd},
            {"removals_not_sublattices", p.removals_not_sublattices},
            {"rcon_is_con_minus_pair", p.rcon_is_con_minus_pair}};
}

int run_search_l8(const Caps& caps_, const std::string& format) {
    auto reports = search_l8(std::max(caps_.enumeration, 8));
    size_t full = 0;
    for (const auto& r : reports) full += r.full_match;
    if (format == "json") {
        json j;
        j["scanned"] = reports.size();
        j["full_matches"] = full;
        j["reports"] = json::array();
        for (const auto& r : reports) {
            if (!r.full_match && j["reports"].size() >= 10) break;  // ranked head
            json e{{"full_match", r.full_match},
                   {"satisfied", r.satisfied},
                   {"con_size", r.con_size},
                   {"con_boolean_32", r.con_boolean_32},
                   {"rcon_poset_is_lattice", r.rcon_poset_is_lattice},
                   {"rcon_poset_nondistributive", r.rcon_poset_nondistributive},
                   {"lattice", lattice_to_json(r.lattice)},
                   {"pairs", json::array()}};
            for (const auto& p : r.pairs) e["pairs"].push_back(pair_report_json(p));
            j["reports"].push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "scanned " << reports.size() << " eight-element lattices, " << full
                  << " full match(es)\n";
        for (const auto& r : reports) {
            if (!r.full_match) break;
            std::cout << "full match with covers:";
            for (auto [lo, hi] : r.lattice.covers) std::cout << " " << lo << "<" << hi;
            std::cout << "\n";
            for (const auto& p : r.pairs)
                std::cout << "  pair (" << p.c << "," << p.d
                          << "): con(c,d) collapses only {c,d}; removals not sublattices: "
                          << (p.removals_not_sublattices ? "yes" : "no")
                          << "; RCon = Con minus con(c,d): "
                          << (p.rcon_is_con_minus_pair ? "yes" : "no") << "\n";
            std::cout << "  |Con| = " << r.con_size
                      << ", boolean: " << (r.con_boolean_32 ? "yes" : "no")
                      << ", RCon inclusion order: "
                      << (r.rcon_poset_is_lattice ? "lattice" : "not a lattice") << ", "
                      << (r.rcon_poset_nondistributive ? "not distributive" : "distributive")
                      << "\n";
        }
        if (full == 0) {
            std::cout << "no full match; best partial matches:\n";
            for (size_t i = 0; i < reports.size() && i < 5; ++i)
                std::cout << "  satisfied " << reports[i].satisfied << "/5\n";
        }
    }
    return kExitOk;
}

int run_boolean_minus(int k, const std::string& which, const std::string& format) {
    auto v = boolean_minus_element_check(
        k, which == "atom" ? RemovedKind::atom : RemovedKind::coatom);
    if (format == "json") {
        json j{{"k", k},
               {"removed", which},
               {"is_lattice", v.is_lattice},
               {"is_distributive", v.is_distributive}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "B_" << k << " minus one " << which << ": "
                  << (v.is_lattice ? "lattice" : "NOT a lattice") << ", "
                  << (v.is_distributive ? "distributive" : "not distributive") << "\n";
    }
    return v.is_lattice && v.is_distributive ? kExitOk : kExitCounterexample;
}

int run_export_dot(const LatticeInput& in, const Caps& caps_) {
    std::cout << lattice_to_dot(in.resolve(caps_));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-lattice retract, congruence, and quasiorder computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int max_n = 0;
    app.add_option("--format", format, "output format: text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--max-n", max_n, "override brute-force caps (also RETRACTLAB_MAX_N)");

    LatticeInput in;
    std::string mode = "bruteforce", property, which = "coatom";
    bool check_lattice = false;
    int gm = 0, gn = 0, en_n = 0, bk = 0;

    auto* validate = app.add_subcommand("validate", "validate a lattice input");
    in.attach(validate);
    auto* flags = app.add_subcommand("flags", "chain/distributive/modular flags");
    in.attach(flags);
    auto* con = app.add_subcommand("con", "all congruences");
    in.attach(con);
    auto* quo = app.add_subcommand("quo", "all compatible quasiorders");
    in.attach(quo);
    auto* retractions = app.add_subcommand("retractions", "all idempotent endomorphisms");
    in.attach(retractions);
    auto* retr = app.add_subcommand("retracts", "all retracts");
    in.attach(retr);
    retr->add_option("--mode", mode, "bruteforce|transversal|both")
        ->check(CLI::IsMember({"bruteforce", "transversal", "both"}));
    retr->add_flag("--check-lattice", check_lattice, "decide whether Ret L is a lattice");
    auto* rc = app.add_subcommand("rcon", "all retraction congruences");
    in.attach(rc);

    auto* gcount = app.add_subcommand("grid-count", "exact retract counts of a grid");
    gcount->add_option("-m", gm, "first chain size")->required();
    gcount->add_option("-n", gn, "second chain size")->required();
    auto* gretr = app.add_subcommand("grid-retracts", "structure-theorem enumeration");
    gretr->add_option("-m", gm, "first chain size")->required();
    gretr->add_option("-n", gn, "second chain size")->required();
    auto* gchains = app.add_subcommand("grid-chains", "the two maximal chains of Ret G");
    gchains->add_option("-m", gm, "first chain size")->required();
    gchains->add_option("-n", gn, "second chain size")->required();

    auto* absorb = app.add_subcommand("absorption", "check an absorption property");
    in.attach(absorb);
    absorb->add_option("--property", property, "rc|glusqap|<property JSON file>")->required();

    auto* enumerate = app.add_subcommand("enumerate", "lattices up to isomorphism");
    enumerate->add_option("-n", en_n, "element count")->required();

    app.add_subcommand("search-l8", "scan eight-element lattices for the RCon gap");

    auto* bminus = app.add_subcommand("boolean-minus", "B_k minus an atom or coatom");
    bminus->add_option("-k", bk, "exponent")->required();
    bminus->add_option("--which", which, "atom|coatom")
        ->check(CLI::IsMember({"atom", "coatom"}));

    auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
    in.attach(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;  // keep --help at 0
    }

    try {
        Caps caps_ = resolve_caps(max_n);
        if (validate->parsed()) return run_validate(in, caps_, format);
        if (flags->parsed()) return run_flags(in, caps_, format);
        if (con->parsed()) return run_con(in, caps_, format);
        if (quo->parsed()) return run_quo(in, caps_, format);
        if (retractions->parsed()) return run_retractions(in, caps_, format);
        if (retr->parsed()) return run_retracts(in, caps_, format, mode, check_lattice);
        if (rc->parsed()) return run_rcon(in, caps_, format);
        if (gcount->parsed()) return run_grid_count(gm, gn, format);
        if (gretr->parsed()) return run_grid_retracts(gm, gn, format);
        if (gchains->parsed()) return run_grid_chains(gm, gn, format);
        if (absorb->parsed()) return run_absorption(in, caps_, format, property);
        if (enumerate->parsed()) return run_enumerate(en_n, caps_, format);
        if (app.get_subcommand("search-l8")->parsed()) return run_search_l8(caps_, format);
        if (bminus->parsed()) return run_boolean_minus(bk, which, format);
        if (dot->parsed()) return run_export_dot(in, caps_);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
