// Copyright 2026-present the ssw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ssw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "ssw/bowen_franks.hpp"
#include "ssw/elementary.hpp"
#include "ssw/graph.hpp"
#include "ssw/shift_space.hpp"
#include "ssw/splitting.hpp"
#include "ssw/text_io.hpp"
#include "ssw/transpose_free.hpp"

namespace ssw::cli {

namespace {

/// Ordered KEY/value lines. Machine mode prints "KEY value"; human mode
/// prints "key: value".
class Report {
public:
    explicit Report(bool machine) : machine_(machine) {
    }

    void
    put(const std::string& key, const std::string& value) {
        lines_.emplace_back(key, value);
    }

    void
    write(std::ostream& os) const {
        for (const auto& [key, value] : lines_) {
            if (machine_ || key == "REFUTED") {
                os << key << (value.empty() ? "" : " ") << value << "\n";
            } else {
                std::string k = key;
                std::transform(k.begin(), k.end(), k.begin(),
                               [](unsigned char c) { return c == '_' ? ' ' : std::tolower(c); });
                os << k << ": " << value << "\n";
            }
        }
    }

private:
    bool machine_;
    std::vector<std::pair<std::string, std::string>> lines_;
};

std::string
join(const std::vector<BigInt>& xs) {
    std::string s;
    for (const auto& x : xs) {
        s += (s.empty() ? "" : " ") + x.get_str();
    }
    return s;
}

std::string
vertex_set(const std::vector<std::size_t>& set) {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        s += (i ? "," : "") + std::to_string(set[i] + 1);
    }
    return s + "}";
}

int
finish(Report& report, const Verdict& v, std::ostream& out) {
    for (const auto& w : v.warnings) {
        report.put("WARNING", w);
    }
    report.put("VERDICT", v.verified ? "verified" : "refuted");
    if (!v.verified) {
        report.put("REFUTED", v.locus);
    }
    report.write(out);
    return v.verified ? kComputed : kRefuted;
}

void
put_split(Report& r, const SplitResult& s) {
    r.put("KIND", std::string(to_string(s.kind)));
    r.put("SPLIT_MATRIX", render(s.split_matrix.matrix()));
    r.put("C", render(s.C));
    r.put("D", render(s.D));
    r.put("Z_HAT", render(s.Z_hat.matrix()));
    std::string labels;
    for (const auto& l : s.graph.vertex_labels()) {
        labels += (labels.empty() ? "" : " ") + l;
    }
    r.put("VERTICES", labels);
    const auto g = from_matrix(s.original);
    for (std::size_t e = 0; e < s.edge_map.size(); ++e) {
        const auto& em = s.edge_map[e];
        r.put("EDGE", s.graph.edge_label(e) + " <- " + g.edge_label(em.old_edge) + " copy " +
                          std::to_string(em.copy + 1));
    }
}

struct Options {
    bool machine = false;
    bool bigint = false;
    double max_candidates = 1e8;
    std::size_t max_words = 1'000'000;
};

}  // namespace

int
run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strong shift equivalence workbench"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--machine", opt.machine, "Line-oriented KEY value output");
    app.add_flag("--bigint", opt.bigint, "Arbitrary-precision arithmetic for powers and traces");
    app.add_option("--max-candidates", opt.max_candidates, "Cap on raw witness-search candidates");
    app.add_option("--max-words", opt.max_words, "Cap on enumerated words per depth");

    std::function<int()> action;
    std::string p1, p2, p3, p4;
    std::size_t n = 12;
    std::int64_t bound = 1;
    std::string set_text;
    bool in_mode = false;
    bool apply = false;
    std::string f_file, g_file;

    auto* bf = app.add_subcommand("bf", "Bowen-Franks group coker(I - A^t) and unit class");
    bf->add_option("matrix", p1)->required();
    bf->callback([&] {
        action = [&] {
            const auto a = io::read_transition_matrix(p1);
            const auto g = bowen_franks_group(a);
            Report r(opt.machine);
            r.put("GROUP", g.render());
            r.put("FREE_RANK", std::to_string(g.free_rank()));
            r.put("TORSION", g.torsion().empty() ? "none" : join(g.torsion()));
            r.put("UNIT", reduce(g, ones(a.dim())).render());
            r.write(out);
            return kComputed;
        };
    });

    auto* eg = app.add_subcommand("edge-graph", "Edge-graph matrix A^G and the factors R_A, S_A");
    eg->add_option("matrix", p1)->required();
    eg->callback([&] {
        action = [&] {
            const auto a = io::read_transition_matrix(p1);
            const auto f = edge_graph(a);
            const auto g = from_matrix(a);
            Report r(opt.machine);
            std::string edges;
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                edges += (e ? " " : "") + g.edge_label(e);
            }
            r.put("EDGES", edges);
            r.put("AG", render(f.AG.matrix()));
            r.put("R", render(f.R));
            r.put("S", render(f.S));
            r.write(out);
            return kComputed;
        };
    });

    for (const auto kind : {SplitKind::Out, SplitKind::In}) {
        const bool is_out = kind == SplitKind::Out;
        auto* sp = app.add_subcommand(is_out ? "out-split" : "in-split",
                                      is_out ? "Out-split by a partition of out-edges"
                                             : "In-split by a partition of in-edges");
        sp->add_option("matrix", p1)->required();
        sp->add_option("partition", p2)->required();
        sp->callback([&, is_out] {
            action = [&, is_out] {
                const auto a = io::read_transition_matrix(p1);
                const auto g = from_matrix(a);
                const auto s = is_out ? out_split(g, io::read_partition<SplitKind::Out>(p2, g))
                                      : in_split(g, io::read_partition<SplitKind::In>(p2, g));
                Report r(opt.machine);
                put_split(r, s);
                r.write(out);
                return kComputed;
            };
        });
    }

    auto* am = app.add_subcommand("amalgamate", "List (and optionally apply) out- or in-amalgamations");
    am->add_option("matrix", p1)->required();
    am->add_flag("--in", in_mode, "In-amalgamation (identical rows) instead of out-amalgamation");
    am->add_option("--set", set_text, "Comma-separated 1-based vertices to merge");
    am->add_flag("--apply", apply, "Merge the first candidate");
    am->callback([&] {
        action = [&] {
            const auto a = io::read_transition_matrix(p1);
            const auto candidates = in_mode ? find_in_amalgamations(a) : find_out_amalgamations(a);
            Report r(opt.machine);
            if (candidates.empty()) {
                r.put("CANDIDATES", "none");
            }
            for (const auto& c : candidates) {
                r.put("CANDIDATE", vertex_set(c));
            }
            std::vector<std::size_t> set;
            if (!set_text.empty()) {
                std::stringstream ss(set_text);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    const auto v = std::stoll(item);
                    if (v < 1) {
                        throw Error(ErrorKind::MalformedInput, "vertex indices are 1-based");
                    }
                    set.push_back(static_cast<std::size_t>(v - 1));
                }
            } else if (apply && !candidates.empty()) {
                set = candidates.front();
            }
            if (!set.empty()) {
                const auto g = from_matrix(a);
                std::vector<std::size_t> relabel;
                if (in_mode) {
                    const auto res = in_amalgamate(g, set);
                    r.put("MERGED", render(res.merged.matrix()));
                    std::istringstream lines(io::format_partition(res.partition, from_matrix(res.merged)));
                    for (std::string line; std::getline(lines, line);) {
                        r.put("PARTITION", line);
                    }
                    relabel = res.relabel;
                } else {
                    const auto res = out_amalgamate(g, set);
                    r.put("MERGED", render(res.merged.matrix()));
                    std::istringstream lines(io::format_partition(res.partition, from_matrix(res.merged)));
                    for (std::string line; std::getline(lines, line);) {
                        r.put("PARTITION", line);
                    }
                    relabel = res.relabel;
                }
                std::string rl;
                for (std::size_t v = 0; v < relabel.size(); ++v) {
                    rl += (v ? " " : "") + std::to_string(v + 1) + "->" + std::to_string(relabel[v] + 1);
                }
                r.put("RELABEL", rl);
            }
            r.write(out);
            return kComputed;
        };
    });

    auto* vee = app.add_subcommand("verify-ee", "Check A = CD and B = DC");
    vee->add_option("A", p1)->required();
    vee->add_option("B", p2)->required();
    vee->add_option("C", p3)->required();
    vee->add_option("D", p4)->required();
    vee->callback([&] {
        action = [&] {
            Report r(opt.machine);
            return finish(r,
                          verify_elementary(io::read_transition_matrix(p1), io::read_transition_matrix(p2),
                                            io::read_matrix(p3), io::read_matrix(p4)),
                          out);
        };
    });

    auto* vc = app.add_subcommand("verify-chain", "Check a strong shift equivalence chain manifest");
    vc->add_option("manifest", p1)->required();
    vc->add_option("--from", p2, "Expected source matrix");
    vc->add_option("--to", p3, "Expected target matrix");
    vc->callback([&] {
        action = [&] {
            const auto chain = io::read_chain_manifest(p1);
            Report r(opt.machine);
            r.put("STEPS", std::to_string(chain.steps.size()));
            r.put("SOURCE", render(chain.source().matrix()));
            r.put("TARGET", render(chain.target().matrix()));
            auto v = verify_chain(chain);
            if (v && !p2.empty() && !(io::read_transition_matrix(p2) == chain.source())) {
                v = Verdict::refuted("endpoint: chain source differs from --from");
            }
            if (v && !p3.empty() && !(io::read_transition_matrix(p3) == chain.target())) {
                v = Verdict::refuted("endpoint: chain target differs from --to");
            }
            if (v) {
                r.put("FORWARD", render(chain_forward_matrix(chain)));
            }
            return finish(r, v, out);
        };
    });

    auto* dh = app.add_subcommand("dhat", "The 0/1 matrix pairing A-edges and B-edges through D-edges");
    dh->add_option("C", p1)->required();
    dh->add_option("D", p2)->required();
    dh->callback([&] {
        action = [&] {
            const auto ee = make_elementary(io::read_matrix(p1), io::read_matrix(p2));
            Report r(opt.machine);
            r.put("A", render(ee.A.matrix()));
            r.put("B", render(ee.B.matrix()));
            r.put("DHAT", render(dhat(ee)));
            r.write(out);
            return kComputed;
        };
    });

    auto* dg = app.add_subcommand("diagram", "Check the cokernel isomorphisms along a chain manifest");
    dg->add_option("manifest", p1)->required();
    dg->callback([&] {
        action = [&] {
            const auto chain = io::read_chain_manifest(p1);
            const auto rep = check_diagram(chain);
            Report r(opt.machine);
            r.put("SOURCE_GROUP", bowen_franks_group(chain.source()).render());
            r.put("TARGET_GROUP", bowen_franks_group(chain.target()).render());
            if (rep.verdict) {
                r.put("COMPOSITE", render(chain_forward_matrix(chain).transposed()));
                r.put("UNIT_PRESERVED", rep.unit_preserved ? "yes" : "no");
            }
            return finish(r, rep.verdict, out);
        };
    });

    auto* mt = app.add_subcommand("matui", "Check S_B^t D̂^t = C^t S_A^t and S_A^t[1..1] = [1..1]");
    mt->add_option("C", p1)->required();
    mt->add_option("D", p2)->required();
    mt->callback([&] {
        action = [&] {
            const auto ee = make_elementary(io::read_matrix(p1), io::read_matrix(p2));
            Report r(opt.machine);
            return finish(r, check_matui(ee), out);
        };
    });

    auto* se = app.add_subcommand("search-ee", "Enumerate elementary-equivalence witnesses");
    se->add_option("A", p1)->required();
    se->add_option("B", p2)->required();
    se->add_option("--bound", bound, "Largest entry of C and D")->check(CLI::NonNegativeNumber);
    se->callback([&] {
        action = [&] {
            SearchOptions so;
            so.entry_bound = bound;
            so.max_candidates = opt.max_candidates;
            const auto found =
                search_elementary(io::read_transition_matrix(p1), io::read_transition_matrix(p2), so);
            Report r(opt.machine);
            r.put("COUNT", std::to_string(found.size()));
            for (const auto& ee : found) {
                r.put("WITNESS", "C=" + render(ee.C) + " D=" + render(ee.D));
            }
            if (found.empty()) {
                r.put("REFUTED", "no witness with entries <= " + std::to_string(bound));
                r.write(out);
                return kRefuted;
            }
            r.write(out);
            return kComputed;
        };
    });

    auto* tr = app.add_subcommand("traces", "trace(A^n) for n = 1..N");
    tr->add_option("matrix", p1)->required();
    tr->add_option("-n,--count", n, "Number of powers")->check(CLI::PositiveNumber);
    tr->callback([&] {
        action = [&] {
            const auto seq = trace_sequence(io::read_transition_matrix(p1), n,
                                            opt.bigint ? Arithmetic::Arbitrary : Arithmetic::Checked64);
            Report r(opt.machine);
            r.put("TRACES", join(seq));
            r.write(out);
            return kComputed;
        };
    });

    std::size_t depth = 2;
    auto* pp = app.add_subcommand("phi-psi-check", "Check psi(phi(f)) = f∘σ_A and phi(psi(g)) = g∘σ_B");
    pp->add_option("C", p1)->required();
    pp->add_option("D", p2)->required();
    pp->add_option("--depth", depth, "Largest cylinder depth");
    pp->add_option("--f", f_file, "Also check this cylinder function on X_A");
    pp->add_option("--g", g_file, "Also check this cylinder function on X_B");
    pp->callback([&] {
        action = [&] {
            const auto ee = make_elementary(io::read_matrix(p1), io::read_matrix(p2));
            TransferLawOptions lo;
            lo.max_depth = depth;
            lo.words.max_words = opt.max_words;
            auto rep = check_transfer_law(ee, lo);
            Report r(opt.machine);
            r.put("FUNCTIONS", std::to_string(rep.functions_checked));
            r.put("MODE", rep.exhaustive ? "exhaustive" : "basis+additivity");
            const auto pairing = edge_pairing(ee);
            auto check_file = [&](const std::string& file, bool on_a) {
                if (file.empty() || !rep.verdict) {
                    return;
                }
                std::ifstream in(file);
                if (!in) {
                    throw Error(ErrorKind::MalformedInput, "cannot open " + file);
                }
                const auto& home = on_a ? ee.A : ee.B;
                const auto fn = io::parse_cylinder_function(in, home, file);
                const auto there = on_a ? phi_map(ee, pairing, fn, lo.words) : psi_map(ee, pairing, fn, lo.words);
                const auto back = on_a ? psi_map(ee, pairing, there, lo.words) : phi_map(ee, pairing, there, lo.words);
                std::istringstream lines(io::format_cylinder_function(there, on_a ? ee.B : ee.A));
                for (std::string line; std::getline(lines, line);) {
                    r.put(on_a ? "PHI" : "PSI", line);
                }
                if (!same_function(back, shift_compose(fn, home, lo.words), home, lo.words)) {
                    rep.verdict = Verdict::refuted(file + ": round trip differs from shift composition");
                }
            };
            check_file(f_file, true);
            check_file(g_file, false);
            return finish(r, rep.verdict, out);
        };
    });

    auto* tf = app.add_subcommand("tf-verify", "Check a transpose-free splitting chain manifest");
    tf->add_option("manifest", p1)->required();
    tf->callback([&] {
        action = [&] {
            const auto steps = io::read_tf_manifest(p1);
            const auto rep = verify_tf_chain(steps);
            Report r(opt.machine);
            r.put("STEPS", std::to_string(steps.size()));
            r.put("NOTE", "only splitting-induced steps are admissible certificates");
            for (std::size_t i = 0; i < steps.size(); ++i) {
                r.put("STEP", std::to_string(i + 1) + " " + std::string(to_string(steps[i].side)) + " " +
                                  std::string(to_string(steps[i].move)) + " " + render(steps[i].from.matrix()) +
                                  " -> " + render(steps[i].to.matrix()));
            }
            if (rep.verdict) {
                const auto& a = steps.front().from;
                const auto& b = steps.back().to;
                r.put("SOURCE_GROUP", bowen_franks_group(a).render());
                r.put("TARGET_GROUP", bowen_franks_group(b).render());
                r.put("SOURCE_GROUP_TRANSPOSED", bowen_franks_group(transpose(a)).render());
                r.put("TARGET_GROUP_TRANSPOSED", bowen_franks_group(transpose(b)).render());
                const auto dg = check_diagram(rep.implied);
                if (!dg.verdict) {
                    return finish(r, Verdict::refuted("implied chain diagram: " + dg.verdict.locus), out);
                }
            }
            return finish(r, rep.verdict, out);
        };
    });

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kComputed : kInputError;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_resource_cap() ? kResourceCap : kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace ssw::cli
