#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monoclass/group.hpp"
#include "monoclass/primitive.hpp"
#include "monoclass/records.hpp"

namespace monoclass {

// MONOCLASS_BUDGET overrides both defaults (10^6 monomial, 10^4 dense)
std::size_t closure_budget(bool dense);

struct DenseStore;

class ClosedGroup {
public:
    bool monomial() const { return dense_ == nullptr; }
    int degree() const { return degree_; }
    // common modulus of the monomial elements, or the scalar modulus L of the dense ones
    int modulus() const { return modulus_; }
    i64 order() const { return group_.order(); }
    const FiniteGroup& group() const { return group_; }

    const std::vector<MonomialElement>& generators() const { return gens_; }
    const MonomialElement& element(int x) const { return elems_->at(x); }
    const std::vector<MonomialElement>& elements() const { return *elems_; }
    // -1 when absent
    int index_of(const MonomialElement& x) const;
    DenseMatrix dense_element(int x) const;

    // character values, interned per group; monomial only
    int trace_id(int x) const {
        intern_traces();
        return trace_id_[x];
    }
    const std::vector<CyclotomicNumber>& trace_values() const {
        intern_traces();
        return trace_values_;
    }

private:
    friend ClosedGroup closure(const std::vector<MonomialElement>&, std::size_t);
    friend ClosedGroup closure_dense(const std::vector<ScaledMatrix>&, std::size_t);
    friend i64 character_norm(const ClosedGroup&);
    void intern_traces() const;

    int degree_ = 0, modulus_ = 1;
    FiniteGroup group_;
    std::vector<MonomialElement> gens_;
    std::shared_ptr<std::vector<MonomialElement>> elems_;
    std::shared_ptr<std::unordered_map<MonomialElement, int>> index_;
    std::shared_ptr<DenseStore> dense_;
    mutable std::vector<int> trace_id_;
    mutable std::vector<CyclotomicNumber> trace_values_;
};

// all generators are lifted to the lcm of their moduli; budget 0 means closure_budget
ClosedGroup closure(const std::vector<MonomialElement>& gens, std::size_t budget = 0);
ClosedGroup closure_dense(const std::vector<ScaledMatrix>& gens, std::size_t budget = 0);
ClosedGroup closure_of(const GroupLabel& g, std::size_t budget = 0);

std::vector<MonomialElement> diagonal_subgroup(const ClosedGroup& G);
std::vector<Permutation> permutation_part(const ClosedGroup& G);
// (1/|G|) sum |tr g|^2, certified to be a rational integer
i64 character_norm(const ClosedGroup& G);
bool is_irreducible_fast(const ClosedGroup& G);
i64 center_order(const ClosedGroup& G);
bool has_noncentral_abelian_normal(const ClosedGroup& G);

// class-function invariants; traces are compared in Q(zeta_L)
struct Fingerprint {
    i64 order = 0;
    i64 center = 0;
    std::vector<std::string> classes;  // sorted "order|size|trace"
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const ClosedGroup& G, int L);

// monomial conjugator c with c^-1 G c = H, searched over permutations normalizing the
// permutation parts and diagonals with entries in mu_{M'} modulo scalars
std::optional<MonomialElement> conjugacy_search(const ClosedGroup& G, const ClosedGroup& H, int modulus_bound = 0,
                                                i64 budget = 200000000);
// an isomorphism G -> H preserving the natural characters, i.e. GL-conjugacy
bool gl_equivalent(const ClosedGroup& G, const ClosedGroup& H);

}  // namespace monoclass
