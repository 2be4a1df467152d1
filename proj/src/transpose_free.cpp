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


#include "ssw/transpose_free.hpp"

namespace ssw {

std::string_view
to_string(Side side) {
    return side == Side::Direct ? "direct" : "transposed";
}

std::string_view
to_string(Move move) {
    return move == Move::OutSplit ? "out_split" : "out_amalgamate";
}

namespace {

SplitResult
oriented_witness(const SplitResult& split, Side side) {
    if (split.kind == SplitKind::Out && side != Side::Direct) {
        throw Error(ErrorKind::SideMismatch, "an out-split certifies only a direct step");
    }
    if (split.kind == SplitKind::In && side != Side::Transposed) {
        throw Error(ErrorKind::SideMismatch, "an in-split certifies only a transposed step");
    }
    if (split.kind == SplitKind::Out) {
        return split;
    }
    const auto g = from_matrix(split.original);
    const auto gt = from_matrix(transpose(split.original), g.vertex_labels());
    // rebuild the in-partition from the edge map: each old edge's block is
    // the block index of its target's copy
    std::vector<InPartition::Blocks> blocks(g.vertex_count());
    std::vector<std::size_t> block_of(g.edge_count(), 0);
    for (std::size_t ne = 0; ne < split.edge_map.size(); ++ne) {
        const auto& em = split.edge_map[ne];
        block_of[em.old_edge] = split.vertex_map[split.graph.edge(ne).target].block;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto& vb = blocks[g.edge(e).target];
        if (vb.size() <= block_of[e]) {
            vb.resize(block_of[e] + 1);
        }
        vb[block_of[e]].push_back(e);
    }
    const InPartition p(g, std::move(blocks));
    return out_split(gt, as_transposed_out_partition(g, p));
}

TransitionMatrix
oriented(const TransitionMatrix& m, Side side) {
    return side == Side::Direct ? m : transpose(m);
}

}  // namespace

TFStep
step_from_split(const SplitResult& split, Side side) {
    TFStep step{split.original, split.split_matrix, side, Move::OutSplit, oriented_witness(split, side)};
    if (auto v = verify_tf_step(step); !v) {
        throw Error(ErrorKind::SideMismatch, "split does not certify the step: " + v.locus);
    }
    return step;
}

TFStep
amalgamation_step(const SplitResult& split, Side side) {
    TFStep step{split.split_matrix, split.original, side, Move::OutAmalgamate, oriented_witness(split, side)};
    if (auto v = verify_tf_step(step); !v) {
        throw Error(ErrorKind::SideMismatch, "split does not certify the step: " + v.locus);
    }
    return step;
}

Verdict
verify_tf_step(const TFStep& step) {
    const auto& w = step.witness;
    if (w.kind != SplitKind::Out) {
        return Verdict::refuted("witness is not an out-split (only splitting-induced steps are admissible)");
    }
    const auto& unsplit = step.move == Move::OutSplit ? step.from : step.to;
    const auto& split = step.move == Move::OutSplit ? step.to : step.from;
    if (!(oriented(unsplit, step.side) == w.original)) {
        return Verdict::refuted("witness is not a splitting of the " + std::string(to_string(step.side)) +
                                " unsplit matrix");
    }
    if (!(oriented(split, step.side) == w.split_matrix)) {
        return Verdict::refuted("witness split matrix " + render(w.split_matrix.matrix()) + " differs from " +
                                render(oriented(split, step.side).matrix()));
    }
    if (auto v = verify_elementary(w.original, w.split_matrix, w.C, w.D); !v) {
        return Verdict::refuted("witness companions: " + v.locus);
    }
    return Verdict::ok();
}

ElementaryEquivalence
implied_elementary(const TFStep& step) {
    const auto& w = step.witness;
    // direct: unsplit = C D, split = D C; transposed: unsplit = D^t C^t, split = C^t D^t
    ElementaryEquivalence split_ee = step.side == Side::Direct
                                         ? ElementaryEquivalence{step.from, step.to, w.C, w.D}
                                         : ElementaryEquivalence{step.from, step.to, w.D.transposed(), w.C.transposed()};
    if (step.move == Move::OutAmalgamate) {
        split_ee = step.side == Side::Direct
                       ? ElementaryEquivalence{step.from, step.to, w.D, w.C}
                       : ElementaryEquivalence{step.from, step.to, w.C.transposed(), w.D.transposed()};
    }
    return split_ee;
}

TFChainReport
verify_tf_chain(const std::vector<TFStep>& chain) {
    if (chain.empty()) {
        throw Error(ErrorKind::EmptyChain, "transpose-free chain has no steps");
    }
    TFChainReport report;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto tag = "step " + std::to_string(i + 1) + ": ";
        if (i > 0 && !(chain[i - 1].to == chain[i].from)) {
            report.verdict = Verdict::refuted(tag + "source differs from previous target");
            report.implied.steps.clear();
            return report;
        }
        if (auto v = verify_tf_step(chain[i]); !v) {
            report.verdict = Verdict::refuted(tag + v.locus);
            report.implied.steps.clear();
            return report;
        }
        report.implied.steps.push_back(implied_elementary(chain[i]));
    }
    if (auto v = verify_chain(report.implied); !v) {
        report.verdict = Verdict::refuted("implied chain: " + v.locus);
        report.implied.steps.clear();
    }
    return report;
}

}  // namespace ssw
