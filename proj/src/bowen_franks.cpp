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


#include "ssw/bowen_franks.hpp"

#include <sstream>

namespace ssw {

namespace {

std::vector<BigInt>
mat_vec(const BigMatrix& m, const std::vector<BigInt>& v) {
    if (m.cols() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix/vector shapes differ");
    }
    std::vector<BigInt> out(m.rows(), BigInt(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j)) != 0) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

std::vector<BigInt>
column(const BigMatrix& m, std::size_t j) {
    std::vector<BigInt> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out[i] = m(i, j);
    }
    return out;
}

}  // namespace

std::vector<BigInt>
ones(std::size_t n) {
    return std::vector<BigInt>(n, BigInt(1));
}

std::vector<BigInt>
unit_vector(std::size_t n, std::size_t i) {
    std::vector<BigInt> e(n, BigInt(0));
    e.at(i) = 1;
    return e;
}

FinAbGroup::FinAbGroup(BigMatrix relations)
    : relations_(std::move(relations)), smith_(smith_normal_form(relations_)) {
    free_rank_ = relations_.rows() - smith_.rank();
    first_torsion_ = smith_.rank();
    for (std::size_t i = 0; i < smith_.rank(); ++i) {
        if (smith_.divisors[i] > 1) {
            if (torsion_.empty()) {
                first_torsion_ = i;
            }
            torsion_.push_back(smith_.divisors[i]);
        }
    }
}

std::string
FinAbGroup::render() const {
    if (is_trivial()) {
        return "trivial group";
    }
    std::string s;
    if (free_rank_ > 0) {
        s = "Z^" + std::to_string(free_rank_);
    }
    for (const auto& d : torsion_) {
        if (!s.empty()) {
            s += " ⊕ ";
        }
        s += "Z/" + d.get_str();
    }
    return s;
}

bool
CokernelElement::is_zero() const {
    for (const auto& x : free) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    for (const auto& x : torsion) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    return true;
}

std::string
CokernelElement::render() const {
    std::string s = "(";
    bool first = true;
    for (const auto* part : {&free, &torsion}) {
        for (const auto& x : *part) {
            s += first ? "" : ",";
            s += x.get_str();
            first = false;
        }
    }
    return s + ")";
}

CokernelElement
reduce(const FinAbGroup& group, const std::vector<BigInt>& v) {
    if (v.size() != group.ambient_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "vector length differs from the group's lattice dimension");
    }
    const auto& smith = group.basis_change();
    const auto y = mat_vec(smith.U, v);
    CokernelElement e;
    for (std::size_t i = 0; i < smith.rank(); ++i) {
        if (smith.divisors[i] > 1) {
            BigInt r;
            mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), smith.divisors[i].get_mpz_t());
            e.torsion.push_back(r);
        }
    }
    for (std::size_t i = smith.rank(); i < y.size(); ++i) {
        e.free.push_back(y[i]);
    }
    return e;
}

bool
is_relation(const FinAbGroup& group, const std::vector<BigInt>& v) {
    return reduce(group, v).is_zero();
}

std::optional<std::vector<BigInt>>
solve_relations(const FinAbGroup& group, const std::vector<BigInt>& y) {
    const auto& smith = group.basis_change();
    const auto z = mat_vec(smith.U, y);
    std::vector<BigInt> u(group.relations().cols(), BigInt(0));
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i < smith.rank()) {
            if (!mpz_divisible_p(z[i].get_mpz_t(), smith.divisors[i].get_mpz_t())) {
                return std::nullopt;
            }
            mpz_divexact(u[i].get_mpz_t(), z[i].get_mpz_t(), smith.divisors[i].get_mpz_t());
        } else if (sgn(z[i]) != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(smith.V, u);
}

FinAbGroup
bowen_franks_group(const TransitionMatrix& a) {
    return FinAbGroup(identity_minus_transpose(to_big(a.matrix())));
}

CokernelElement
unit_class(const TransitionMatrix& a) {
    return reduce(bowen_franks_group(a), ones(a.dim()));
}

CokernelMap
induced_map(const BigMatrix& m, const FinAbGroup& source, const FinAbGroup& target) {
    if (m.rows() != target.ambient_dim() || m.cols() != source.ambient_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "map matrix is " + std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()) + ", expected " +
                                                      std::to_string(target.ambient_dim()) + "x" +
                                                      std::to_string(source.ambient_dim()));
    }
    const auto image = multiply(m, source.relations());
    BigMatrix w(target.relations().cols(), image.cols());
    for (std::size_t j = 0; j < image.cols(); ++j) {
        auto sol = solve_relations(target, column(image, j));
        if (!sol) {
            throw Error(ErrorKind::NotWellDefined,
                        "relation " + std::to_string(j + 1) + " is not carried into the target relations");
        }
        for (std::size_t i = 0; i < sol->size(); ++i) {
            w(i, j) = (*sol)[i];
        }
    }
    return {source, target, m, std::move(w)};
}

CokernelMap
induced_map(const IntMatrix& m, const TransitionMatrix& a, const TransitionMatrix& b) {
    return induced_map(to_big(m), bowen_franks_group(a), bowen_franks_group(b));
}

CokernelMap
identity_map(const FinAbGroup& group) {
    const auto n = group.ambient_dim();
    return {group, group, BigMatrix::identity(n), BigMatrix::identity(group.relations().cols())};
}

CokernelMap
compose(const CokernelMap& f, const CokernelMap& g) {
    if (!(g.target.relations() == f.source.relations())) {
        throw Error(ErrorKind::DimensionMismatch, "maps are not composable");
    }
    return {g.source, f.target, multiply(f.M, g.M), multiply(f.W, g.W)};
}

bool
equal_maps(const CokernelMap& f, const CokernelMap& g) {
    if (!(f.source.relations() == g.source.relations()) || !(f.target.relations() == g.target.relations())) {
        throw Error(ErrorKind::DimensionMismatch, "maps have different source or target");
    }
    const auto diff = subtract(f.M, g.M);
    for (std::size_t j = 0; j < diff.cols(); ++j) {
        if (!is_relation(f.target, column(diff, j))) {
            return false;
        }
    }
    return true;
}

CokernelElement
apply(const CokernelMap& f, const std::vector<BigInt>& v) {
    return reduce(f.target, mat_vec(f.M, v));
}

Verdict
is_isomorphism(const CokernelMap& f, const CokernelMap& inverse_candidate) {
    if (!equal_maps(compose(inverse_candidate, f), identity_map(f.source))) {
        return Verdict::refuted("inverse ∘ map is not the identity on the source");
    }
    if (!equal_maps(compose(f, inverse_candidate), identity_map(f.target))) {
        return Verdict::refuted("map ∘ inverse is not the identity on the target");
    }
    return Verdict::ok();
}

namespace {

// Induced map, with NotWellDefined turned into a refutation.
std::optional<CokernelMap>
try_induced(const IntMatrix& m, const FinAbGroup& source, const FinAbGroup& target, std::string& why) {
    try {
        return induced_map(m, source, target);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotWellDefined && e.kind() != ErrorKind::DimensionMismatch) {
            throw;
        }
        why = e.what();
        return std::nullopt;
    }
}

}  // namespace

Verdict
check_matui(const ElementaryEquivalence& ee) {
    if (auto v = verify_elementary(ee); !v) {
        return Verdict::refuted("witness: " + v.locus);
    }
    const auto fa = edge_graph(ee.A);
    const auto fb = edge_graph(ee.B);
    const auto g_a = bowen_franks_group(ee.A);
    const auto g_b = bowen_franks_group(ee.B);
    const auto g_ag = bowen_franks_group(fa.AG);
    const auto g_bg = bowen_franks_group(fb.AG);

    std::string why;
    const auto s_a = try_induced(fa.S.transposed(), g_ag, g_a, why);
    if (!s_a) {
        return Verdict::refuted("item (i): S_A^t " + why);
    }
    const auto s_b = try_induced(fb.S.transposed(), g_bg, g_b, why);
    if (!s_b) {
        return Verdict::refuted("item (i): S_B^t " + why);
    }
    const auto d_hat = try_induced(dhat(ee).transposed(), g_ag, g_bg, why);
    if (!d_hat) {
        return Verdict::refuted("item (i): D̂^t " + why);
    }
    const auto c_map = try_induced(ee.C.transposed(), g_a, g_b, why);
    if (!c_map) {
        return Verdict::refuted("item (i): C^t " + why);
    }
    if (!equal_maps(compose(*s_b, *d_hat), compose(*c_map, *s_a))) {
        return Verdict::refuted("item (i): S_B^t ∘ D̂^t differs from C^t ∘ S_A^t");
    }
    if (!(ssw::apply(*s_a, ones(fa.AG.dim())) == reduce(g_a, ones(ee.A.dim())))) {
        return Verdict::refuted("item (ii): S_A^t does not send [1,...,1] to [1,...,1]");
    }
    return Verdict::ok();
}

DiagramReport
check_diagram(const SSEChain& chain) {
    DiagramReport report;
    if (auto v = verify_chain(chain); !v) {
        report.verdict = Verdict::refuted("(a) " + v.locus);
        return report;
    }
    std::vector<FinAbGroup> groups;
    groups.push_back(bowen_franks_group(chain.steps.front().A));
    for (const auto& step : chain.steps) {
        groups.push_back(bowen_franks_group(step.B));
    }

    std::string why;
    std::optional<CokernelMap> composite;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& step = chain.steps[i];
        const auto tag = "(a) step " + std::to_string(i + 1) + ": ";
        const auto forward = try_induced(step.C.transposed(), groups[i], groups[i + 1], why);
        if (!forward) {
            report.verdict = Verdict::refuted(tag + "C^t " + why);
            return report;
        }
        const auto backward = try_induced(step.D.transposed(), groups[i + 1], groups[i], why);
        if (!backward) {
            report.verdict = Verdict::refuted(tag + "D^t " + why);
            return report;
        }
        if (auto iso = is_isomorphism(*forward, *backward); !iso) {
            report.verdict = Verdict::refuted(tag + iso.locus);
            return report;
        }
        composite = composite ? compose(*forward, *composite) : *forward;
    }

    const auto product = try_induced(chain_forward_matrix(chain).transposed(), groups.front(), groups.back(), why);
    if (!product) {
        report.verdict = Verdict::refuted("(b) product C_1...C_n: " + why);
        return report;
    }
    if (!equal_maps(*composite, *product)) {
        report.verdict = Verdict::refuted("(b) composite of step maps differs from the product map");
        return report;
    }
    const auto back = try_induced(chain_backward_matrix(chain).transposed(), groups.back(), groups.front(), why);
    if (!back) {
        report.verdict = Verdict::refuted("(b) product D_n...D_1: " + why);
        return report;
    }
    if (auto iso = is_isomorphism(*product, *back); !iso) {
        report.verdict = Verdict::refuted("(b) " + iso.locus);
        return report;
    }

    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& m = i == 0 ? chain.steps.front().A : chain.steps[i - 1].B;
        const auto f = edge_graph(m);
        const auto s = induced_map(f.S.transposed(), bowen_franks_group(f.AG), groups[i]);
        if (!(ssw::apply(s, ones(f.AG.dim())) == reduce(groups[i], ones(m.dim())))) {
            report.verdict = Verdict::refuted("(c) matrix " + std::to_string(i) + ": unit class not preserved by S^t");
            return report;
        }
    }
    report.unit_preserved =
        ssw::apply(*composite, ones(groups.front().ambient_dim())) == reduce(groups.back(), ones(groups.back().ambient_dim()));
    return report;
}

}  // namespace ssw
