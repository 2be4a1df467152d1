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


#include "ssw/shift_space.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace ssw {

std::vector<Word>
allowed_words(const TransitionMatrix& a, std::size_t k, const WordOptions& options) {
    if (k == 0) {
        throw Error(ErrorKind::MalformedInput, "word length must be >= 1");
    }
    const auto g = from_matrix(a);
    std::vector<Word> words;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        words.push_back({e});
    }
    for (std::size_t len = 2; len <= k; ++len) {
        std::vector<Word> next;
        for (const auto& w : words) {
            for (std::size_t e : g.out_edges(g.edge(w.back()).target)) {
                if (next.size() >= options.max_words) {
                    throw Error(ErrorKind::ExplosionGuard,
                                "more than " + std::to_string(options.max_words) + " words of length " +
                                    std::to_string(len));
                }
                auto extended = w;
                extended.push_back(e);
                next.push_back(std::move(extended));
            }
        }
        words = std::move(next);
    }
    if (words.size() > options.max_words) {
        throw Error(ErrorKind::ExplosionGuard, "more than " + std::to_string(options.max_words) + " words");
    }
    return words;
}

BigInt
periodic_count(const TransitionMatrix& a, std::size_t n, Arithmetic mode) {
    if (n == 0) {
        throw Error(ErrorKind::MalformedInput, "period must be >= 1");
    }
    return trace_sequence(a, n, mode).back();
}

CylinderFunction::CylinderFunction(std::size_t depth, std::map<Word, std::int64_t> values)
    : depth_(depth), values_(std::move(values)) {
    for (const auto& [w, v] : values_) {
        if (w.size() != depth_) {
            throw Error(ErrorKind::MalformedInput, "cylinder function word has the wrong length");
        }
    }
}

CylinderFunction
CylinderFunction::constant(std::int64_t c) {
    return CylinderFunction(0, {{Word{}, c}});
}

CylinderFunction
CylinderFunction::tabulate(const TransitionMatrix& a, std::size_t depth, const std::vector<std::int64_t>& values,
                           const WordOptions& options) {
    if (depth == 0) {
        if (values.size() != 1) {
            throw Error(ErrorKind::DimensionMismatch, "depth-0 function takes one value");
        }
        return constant(values.front());
    }
    const auto words = allowed_words(a, depth, options);
    if (words.size() != values.size()) {
        throw Error(ErrorKind::DimensionMismatch, "value count differs from word count");
    }
    std::map<Word, std::int64_t> table;
    for (std::size_t i = 0; i < words.size(); ++i) {
        table.emplace(words[i], values[i]);
    }
    return CylinderFunction(depth, std::move(table));
}

std::int64_t
CylinderFunction::operator()(const Word& w) const {
    if (w.size() < depth_) {
        throw Error(ErrorKind::MalformedInput, "word shorter than the function's depth");
    }
    auto it = values_.find(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(depth_)));
    if (it == values_.end()) {
        throw Error(ErrorKind::MalformedInput, "cylinder function undefined on a word");
    }
    return it->second;
}

CylinderFunction
CylinderFunction::lifted(const TransitionMatrix& a, std::size_t depth, const WordOptions& options) const {
    if (depth < depth_) {
        throw Error(ErrorKind::MalformedInput, "cannot lift to a smaller depth");
    }
    if (depth == depth_) {
        return *this;
    }
    std::map<Word, std::int64_t> table;
    for (auto& w : allowed_words(a, depth, options)) {
        const auto v = (*this)(w);
        table.emplace(std::move(w), v);
    }
    return CylinderFunction(depth, std::move(table));
}

bool
is_total(const CylinderFunction& f, const TransitionMatrix& a, const WordOptions& options) {
    if (f.depth() == 0) {
        return f.values().size() == 1;
    }
    const auto words = allowed_words(a, f.depth(), options);
    if (words.size() != f.values().size()) {
        return false;
    }
    for (const auto& w : words) {
        if (!f.values().contains(w)) {
            return false;
        }
    }
    return true;
}

CylinderFunction
operator+(const CylinderFunction& f, const CylinderFunction& g) {
    if (f.depth() != g.depth() || f.values().size() != g.values().size()) {
        throw Error(ErrorKind::DimensionMismatch, "adding cylinder functions of different shape");
    }
    std::map<Word, std::int64_t> table;
    for (const auto& [w, v] : f.values()) {
        table.emplace(w, add(v, g(w)));
    }
    return CylinderFunction(f.depth(), std::move(table));
}

bool
same_function(const CylinderFunction& f, const CylinderFunction& g, const TransitionMatrix& a,
              const WordOptions& options) {
    const auto depth = std::max(f.depth(), g.depth());
    return f.lifted(a, depth, options) == g.lifted(a, depth, options);
}

CylinderFunction
shift_compose(const CylinderFunction& f, const TransitionMatrix& a, const WordOptions& options) {
    std::map<Word, std::int64_t> table;
    for (auto& w : allowed_words(a, f.depth() + 1, options)) {
        const auto v = f(Word(w.begin() + 1, w.end()));
        table.emplace(std::move(w), v);
    }
    return CylinderFunction(f.depth() + 1, std::move(table));
}

namespace {

// Shared body of φ and ψ. `source_edge(x_j, x_{j+1})` names the edge of the
// other shift read off two consecutive letters.
template <class Pair>
CylinderFunction
transfer(const TransitionMatrix& target, const CylinderFunction& f, Pair source_edge, const WordOptions& options) {
    std::map<Word, std::int64_t> table;
    for (auto& w : allowed_words(target, f.depth() + 1, options)) {
        Word image;
        image.reserve(f.depth());
        for (std::size_t j = 0; j + 1 < w.size(); ++j) {
            image.push_back(source_edge(w[j], w[j + 1]));
        }
        const auto v = f(image);
        table.emplace(std::move(w), v);
    }
    return CylinderFunction(f.depth() + 1, std::move(table));
}

}  // namespace

CylinderFunction
phi_map(const ElementaryEquivalence& ee, const CylinderFunction& f, const WordOptions& options) {
    return phi_map(ee, edge_pairing(ee), f, options);
}

CylinderFunction
psi_map(const ElementaryEquivalence& ee, const CylinderFunction& g, const WordOptions& options) {
    return psi_map(ee, edge_pairing(ee), g, options);
}

CylinderFunction
phi_map(const ElementaryEquivalence& ee, const EdgePairing& pairing, const CylinderFunction& f,
        const WordOptions& options) {
    return transfer(
        ee.B, f,
        [&](std::size_t b, std::size_t b_next) {
            return pairing.a_edge(pairing.b_paths[b].second, pairing.b_paths[b_next].first);
        },
        options);
}

CylinderFunction
psi_map(const ElementaryEquivalence& ee, const EdgePairing& pairing, const CylinderFunction& g,
        const WordOptions& options) {
    return transfer(
        ee.A, g,
        [&](std::size_t a, std::size_t a_next) {
            return pairing.b_edge(pairing.a_paths[a].second, pairing.a_paths[a_next].first);
        },
        options);
}

namespace {

// One side of the law: there(f) lives on the other shift, back(there(f))
// must equal f ∘ σ on `home`.
template <class There, class Back>
bool
law_holds(const TransitionMatrix& home, const CylinderFunction& f, There there, Back back, const WordOptions& options) {
    const auto round_trip = back(there(f));
    return same_function(round_trip, shift_compose(f, home, options), home, options);
}

std::string
describe(const char* side, std::size_t depth, const std::vector<std::int64_t>& values) {
    std::string s = std::string(side) + " depth " + std::to_string(depth) + " values (";
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? "," : "") + std::to_string(values[i]);
    }
    return s + ")";
}

}  // namespace

TransferLawReport
check_transfer_law(const ElementaryEquivalence& ee, const TransferLawOptions& options) {
    TransferLawReport report;
    if (auto v = verify_elementary(ee); !v) {
        report.verdict = Verdict::refuted("witness: " + v.locus);
        return report;
    }
    const auto pairing = edge_pairing(ee);
    const auto& wo = options.words;
    auto phi = [&](const CylinderFunction& f) { return phi_map(ee, pairing, f, wo); };
    auto psi = [&](const CylinderFunction& g) { return psi_map(ee, pairing, g, wo); };

    struct Side {
        const char* name;
        const TransitionMatrix* home;
        bool from_a;
    };
    for (const Side side : {Side{"A", &ee.A, true}, Side{"B", &ee.B, false}}) {
        auto holds = [&](const CylinderFunction& f) {
            ++report.functions_checked;
            return side.from_a ? law_holds(*side.home, f, phi, psi, wo) : law_holds(*side.home, f, psi, phi, wo);
        };
        for (std::size_t depth = 0; depth <= options.max_depth; ++depth) {
            const std::size_t count = depth == 0 ? 1 : allowed_words(*side.home, depth, wo).size();
            std::vector<std::int64_t> values(count, 0);
            if (count <= options.exhaustive_word_limit) {
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
                    for (std::size_t i = 0; i < count; ++i) {
                        values[i] = static_cast<std::int64_t>((mask >> i) & 1U);
                    }
                    if (!holds(CylinderFunction::tabulate(*side.home, depth, values, wo))) {
                        report.verdict = Verdict::refuted(describe(side.name, depth, values));
                        return report;
                    }
                }
                continue;
            }
            report.exhaustive = false;
            std::vector<CylinderFunction> basis;
            for (std::size_t i = 0; i < count; ++i) {
                std::fill(values.begin(), values.end(), 0);
                values[i] = 1;
                basis.push_back(CylinderFunction::tabulate(*side.home, depth, values, wo));
                if (!holds(basis.back())) {
                    report.verdict = Verdict::refuted(describe(side.name, depth, values));
                    return report;
                }
            }
            // additivity on consecutive indicator pairs extends the law to all sums
            auto there = [&](const CylinderFunction& f) { return side.from_a ? phi(f) : psi(f); };
            for (std::size_t i = 0; i + 1 < count; ++i) {
                if (!(there(basis[i] + basis[i + 1]) == there(basis[i]) + there(basis[i + 1]))) {
                    report.verdict = Verdict::refuted(std::string(side.name) + " depth " + std::to_string(depth) +
                                                      ": transfer is not additive");
                    return report;
                }
            }
        }
    }
    return report;
}

}  // namespace ssw
