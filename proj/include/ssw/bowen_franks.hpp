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


#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ssw/elementary.hpp"
#include "ssw/graph.hpp"
#include "ssw/smith.hpp"

namespace ssw {

/// Z^n / (relations) Z^k, stored through the Smith form of the relation
/// matrix so elements can be put in canonical coordinates.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(BigMatrix relations);

    /// Dimension n of the ambient lattice Z^n.
    std::size_t
    ambient_dim() const noexcept {
        return relations_.rows();
    }
    std::size_t
    free_rank() const noexcept {
        return free_rank_;
    }
    /// Invariant factors > 1, each dividing the next.
    const std::vector<BigInt>&
    torsion() const noexcept {
        return torsion_;
    }
    const BigMatrix&
    relations() const noexcept {
        return relations_;
    }
    const SmithForm&
    basis_change() const noexcept {
        return smith_;
    }

    bool
    is_trivial() const noexcept {
        return free_rank_ == 0 && torsion_.empty();
    }

    /// Same abstract group (canonical forms agree).
    bool
    isomorphic_to(const FinAbGroup& other) const {
        return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
    }

    /// "Z^r ⊕ Z/d1 ⊕ ...", or "trivial group".
    std::string
    render() const;

private:
    BigMatrix relations_;
    SmithForm smith_;
    std::size_t free_rank_ = 0;
    std::vector<BigInt> torsion_;
    std::size_t first_torsion_ = 0;  // index of the first divisor > 1
};

/// Class of a lattice vector: free coordinates, then torsion coordinates
/// reduced into [0, d_i).
struct CokernelElement {
    std::vector<BigInt> free;
    std::vector<BigInt> torsion;

    bool
    is_zero() const;

    friend bool
    operator==(const CokernelElement&, const CokernelElement&) = default;

    std::string
    render() const;
};

CokernelElement
reduce(const FinAbGroup& group, const std::vector<BigInt>& v);

/// v in the image of the relation matrix.
bool
is_relation(const FinAbGroup& group, const std::vector<BigInt>& v);

/// Solves relations * w = y over Z; empty optional when there is no
/// integral solution.
std::optional<std::vector<BigInt>>
solve_relations(const FinAbGroup& group, const std::vector<BigInt>& y);

/// coker(I - A^t).
FinAbGroup
bowen_franks_group(const TransitionMatrix& a);

/// Class of (1, ..., 1) in coker(I - A^t).
CokernelElement
unit_class(const TransitionMatrix& a);

/// Homomorphism source -> target induced by left multiplication with M
/// (target_dim x source_dim). W certifies well-definedness:
/// M * R_source = R_target * W.
struct CokernelMap {
    FinAbGroup source;
    FinAbGroup target;
    BigMatrix M;
    BigMatrix W;
};

/// Throws NotWellDefined when M does not carry relations to relations.
CokernelMap
induced_map(const BigMatrix& m, const FinAbGroup& source, const FinAbGroup& target);

inline CokernelMap
induced_map(const IntMatrix& m, const FinAbGroup& source, const FinAbGroup& target) {
    return induced_map(to_big(m), source, target);
}

/// Φ_M : coker(I - A^t) -> coker(I - B^t).
CokernelMap
induced_map(const IntMatrix& m, const TransitionMatrix& a, const TransitionMatrix& b);

CokernelMap
identity_map(const FinAbGroup& group);

/// f ∘ g: g is applied first. Throws DimensionMismatch unless g's target
/// is f's source.
CokernelMap
compose(const CokernelMap& f, const CokernelMap& g);

/// Agreement on the generators [e_1], ..., [e_n] after reduction.
bool
equal_maps(const CokernelMap& f, const CokernelMap& g);

CokernelElement
apply(const CokernelMap& f, const std::vector<BigInt>& v);

/// Both composites with `inverse_candidate` are identities.
Verdict
is_isomorphism(const CokernelMap& f, const CokernelMap& inverse_candidate);

/// Checks Φ_{S_B^t} ∘ Φ_{D̂^t} = Φ_{C^t} ∘ Φ_{S_A^t} (locus "item (i)") and
/// Φ_{S_A^t}([1,...,1]) = [1,...,1] (locus "item (ii)").
Verdict
check_matui(const ElementaryEquivalence& ee);

struct DiagramReport {
    Verdict verdict;
    /// Whether the composite sends [1,...,1] of the source to that of the
    /// target. Holds for out-splitting chains; not required in general.
    bool unit_preserved = false;
};

/// Per step: Φ_{C_i^t} is an isomorphism with inverse Φ_{D_i^t} (a); the
/// composite equals Φ_{(C_1...C_n)^t} with inverse Φ_{(D_n...D_1)^t} (b);
/// every chain matrix satisfies Φ_{S^t}([1,...,1]) = [1,...,1] (c).
DiagramReport
check_diagram(const SSEChain& chain);

std::vector<BigInt>
ones(std::size_t n);

std::vector<BigInt>
unit_vector(std::size_t n, std::size_t i);

}  // namespace ssw
