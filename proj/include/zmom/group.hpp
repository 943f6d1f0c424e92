#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zmom {

// Finite group as an explicit multiplication table over element indices
// 0..order-1. Immutable after construction; all higher layers share by
// const reference.
struct FiniteGroup {
    int order = 0;
    std::vector<uint16_t> table; // order*order, row-major: table[a*order+b] = a*b
    int identity = 0;
    std::vector<uint16_t> inv;

    int mul(int a, int b) const { return table[size_t(a) * order + b]; }
    int inverse(int a) const { return inv[a]; }

    int element_order(int a) const;
    bool is_abelian() const;

    // Validates identity existence and two-sided inverses; associativity is
    // the caller's problem (tested exhaustively for small orders).
    static FiniteGroup from_table(int order, std::vector<uint16_t> table);
    static FiniteGroup cyclic(int k);
    static FiniteGroup trivial() { return cyclic(1); }
};

constexpr int kMaxGroupOrder = 10000;

// phi : H -> Aut(N), stored as one permutation of N per element of H.
struct Action {
    std::vector<std::vector<uint16_t>> map; // map[h][n]
    int apply(int h, int n) const { return map[h][n]; }
};

// Throws std::invalid_argument unless every phi_h is an automorphism and
// h -> phi_h is a homomorphism with phi_e = id.
void validate_action(const FiniteGroup& H, const FiniteGroup& N, const Action& phi);

Action inversion_action(const FiniteGroup& H, const FiniteGroup& N); // every non-identity h acts by n -> n^{-1}
Action trivial_action(const FiniteGroup& H, const FiniteGroup& N);

// G = N x H with (n1,h1)(n2,h2) = (n1 phi_{h1}(n2), h1 h2); element encoding
// g = n*|H| + h, so decompose() is O(1).
struct SemidirectPresentation {
    FiniteGroup N;
    FiniteGroup H;
    Action phi;
    FiniteGroup G;

    int embed_n(int n) const { return n * H.order + H.identity; }
    int embed_h(int h) const { return N.identity * H.order + h; }
    std::pair<int, int> decompose(int g) const { return {g / H.order, g % H.order}; }
};

SemidirectPresentation build_semidirect(FiniteGroup N, FiniteGroup H, Action phi);

struct SubgroupData {
    std::vector<uint16_t> members; // sorted
    bool is_normal_in_parent = false;

    size_t size() const { return members.size(); }
    bool contains(int g) const;
};

// Verifies closure under product and inverse and membership of the identity.
SubgroupData make_subgroup(const FiniteGroup& parent, std::vector<uint16_t> members);
SubgroupData generated_subgroup(const FiniteGroup& parent, const std::vector<uint16_t>& gens);

// Equivalence of normality: first = (N' normal in N and phi_H(N') in N'),
// second = (N' normal in G). The two agree for every subgroup of N.
std::pair<bool, bool> check_normality_equivalence(const SemidirectPresentation& pres,
                                                  const SubgroupData& nprime);

// N'' = N/N' with canonical minimal-index coset representatives.
struct Quotient {
    FiniteGroup q;
    std::vector<uint16_t> rep;      // quotient index -> representative in N
    std::vector<uint16_t> coset_of; // N index -> quotient index
};

Quotient make_quotient(const FiniteGroup& N, const SubgroupData& nprime);

// Induced map on N'' (requires phi_H(N') in N'): x -> coset(phi_h(rep(x))).
std::vector<uint16_t> quotient_action_map(const SemidirectPresentation& pres,
                                          const SubgroupData& nprime, const Quotient& nq,
                                          int h);

// Fixed points of phi_h on N''; h must not be the identity of H and N' must
// satisfy normality equivalence. Members are quotient indices.
SubgroupData fixed_subgroup(const SemidirectPresentation& pres, const SubgroupData& nprime,
                            const Quotient& nq, int h);

struct ConjugacyClass {
    std::vector<uint16_t> members; // sorted
    int representative = 0;        // minimal member
    size_t size() const { return members.size(); }
};

struct ClassData {
    std::vector<ConjugacyClass> classes; // ordered by minimal member
    std::vector<uint16_t> class_of;      // element -> class index
    size_t count() const { return classes.size(); }
};

ClassData conjugacy_classes(const FiniteGroup& G);

// Left-multiplication action of G on the left cosets of G'.
struct CosetAction {
    int num_cosets = 0;
    std::vector<uint16_t> coset_rep;     // coset index -> minimal representative
    std::vector<uint16_t> coset_of;      // element -> coset index
    std::vector<uint16_t> perm;          // |G| x num_cosets, perm[g*num_cosets+c]
    int image(int g, int c) const { return perm[size_t(g) * num_cosets + c]; }
    int fixed_points(int g) const;
    std::vector<int> cycle_type(int g) const; // sorted ascending
};

CosetAction coset_action(const FiniteGroup& G, const SubgroupData& gprime);

// |G|, |N'|, |N''|, |H| and |N''_h| per non-identity h. When the normality conditions fail
// for N' (the A4 order-2 case), n_h_dprime falls back to the size of the
// image of Fix_N(phi_h) in N/N'; nprime_normal records which reading applies.
struct GroupInvariants {
    long long n = 0;
    long long n_prime = 0;
    long long n_dprime = 0;
    long long h = 0;
    std::vector<std::pair<int, long long>> n_h_dprime; // (h index, |N''_h|)
    bool nprime_normal = false;

    bool fixed_sizes_all_equal() const;
    long long common_fixed_size() const; // n'' when H is trivial
};

GroupInvariants group_invariants(const SemidirectPresentation& pres, const SubgroupData& nprime);

// ---------------------------------------------------------------------------
// Presets

struct NprimeChoice {
    std::string name;
    std::vector<uint16_t> members; // indices into pres.N
};

struct Preset {
    std::string name;
    SemidirectPresentation pres;
    std::vector<NprimeChoice> nprime_choices;
};

// Accepted names: "dihedral:K", "symmetric:K", "a4", "galois:cyclic:K".
// Rejects |G| > 10^4.
Preset preset(const std::string& name);

const NprimeChoice& find_nprime(const Preset& p, const std::string& name);

// Custom group text file: first line the order, then the multiplication
// table as rows of space-separated indices. Analyzed as the Galois case.
FiniteGroup read_group_table_file(const std::string& path);
Preset preset_from_group_file(const std::string& path);

// Permutation helpers used by the symmetric/alternating presets.
std::vector<std::vector<uint8_t>> even_permutations(int n);
FiniteGroup permutation_group(const std::vector<std::vector<uint8_t>>& perms);

} // namespace zmom
