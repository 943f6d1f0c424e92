#include "zmom/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zmom {

int FiniteGroup::element_order(int a) const {
    int x = a;
    int k = 1;
    while (x != identity) {
        x = mul(x, a);
        ++k;
        if (k > order) throw std::logic_error("element order exceeds group order");
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<uint16_t> table) {
    if (order <= 0 || order > kMaxGroupOrder)
        throw std::invalid_argument("group order out of range [1, 10^4]: " + std::to_string(order));
    if (table.size() != size_t(order) * order)
        throw std::invalid_argument("multiplication table size mismatch");
    for (uint16_t v : table)
        if (v >= order) throw std::invalid_argument("multiplication table entry out of range");

    FiniteGroup g;
    g.order = order;
    g.table = std::move(table);

    int id = -1;
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw std::invalid_argument("table has no two-sided identity");
    g.identity = id;

    g.inv.assign(order, 0);
    for (int a = 0; a < order; ++a) {
        int found = -1;
        for (int b = 0; b < order; ++b)
            if (g.mul(a, b) == id && g.mul(b, a) == id) { found = b; break; }
        if (found < 0) throw std::invalid_argument("element without two-sided inverse");
        g.inv[a] = uint16_t(found);
    }
    return g;
}

FiniteGroup FiniteGroup::cyclic(int k) {
    if (k <= 0 || k > kMaxGroupOrder)
        throw std::invalid_argument("cyclic order out of range: " + std::to_string(k));
    std::vector<uint16_t> t(size_t(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[size_t(a) * k + b] = uint16_t((a + b) % k);
    return from_table(k, std::move(t));
}

void validate_action(const FiniteGroup& H, const FiniteGroup& N, const Action& phi) {
    if (phi.map.size() != size_t(H.order))
        throw std::invalid_argument("action map must have one entry per element of H");
    for (const auto& m : phi.map) {
        if (m.size() != size_t(N.order))
            throw std::invalid_argument("action entry is not a map on N");
        std::vector<char> seen(N.order, 0);
        for (uint16_t v : m) {
            if (v >= N.order || seen[v]) throw std::invalid_argument("phi_h is not a bijection on N");
            seen[v] = 1;
        }
    }
    // phi_e = id
    for (int n = 0; n < N.order; ++n)
        if (phi.apply(H.identity, n) != n)
            throw std::invalid_argument("phi at the identity of H is not the identity map");
    // each phi_h an automorphism: phi_h(mn) = phi_h(m) phi_h(n)
    for (int h = 0; h < H.order; ++h)
        for (int m = 0; m < N.order; ++m)
            for (int n = 0; n < N.order; ++n)
                if (phi.apply(h, N.mul(m, n)) != N.mul(phi.apply(h, m), phi.apply(h, n)))
                    throw std::invalid_argument("phi_h is not an automorphism of N");
    // homomorphism: phi_{hg} = phi_h . phi_g
    for (int h = 0; h < H.order; ++h)
        for (int g = 0; g < H.order; ++g) {
            int hg = H.mul(h, g);
            for (int n = 0; n < N.order; ++n)
                if (phi.apply(hg, n) != phi.apply(h, phi.apply(g, n)))
                    throw std::invalid_argument("phi is not a homomorphism H -> Aut(N)");
        }
}

Action inversion_action(const FiniteGroup& H, const FiniteGroup& N) {
    Action phi;
    phi.map.assign(H.order, std::vector<uint16_t>(N.order));
    for (int h = 0; h < H.order; ++h)
        for (int n = 0; n < N.order; ++n)
            phi.map[h][n] = (h == H.identity) ? uint16_t(n) : N.inv[n];
    return phi;
}

Action trivial_action(const FiniteGroup& H, const FiniteGroup& N) {
    Action phi;
    phi.map.assign(H.order, std::vector<uint16_t>(N.order));
    for (int h = 0; h < H.order; ++h)
        for (int n = 0; n < N.order; ++n) phi.map[h][n] = uint16_t(n);
    return phi;
}

SemidirectPresentation build_semidirect(FiniteGroup N, FiniteGroup H, Action phi) {
    validate_action(H, N, phi);
    long long order = (long long)N.order * H.order;
    if (order > kMaxGroupOrder)
        throw std::invalid_argument("|N|*|H| exceeds the 10^4 group-order bound");

    const int nh = H.order;
    std::vector<uint16_t> t(size_t(order) * order);
    for (int n1 = 0; n1 < N.order; ++n1)
        for (int h1 = 0; h1 < nh; ++h1) {
            int g1 = n1 * nh + h1;
            for (int n2 = 0; n2 < N.order; ++n2) {
                int tw = N.mul(n1, phi.apply(h1, n2));
                for (int h2 = 0; h2 < nh; ++h2)
                    t[size_t(g1) * order + (n2 * nh + h2)] = uint16_t(tw * nh + H.mul(h1, h2));
            }
        }

    SemidirectPresentation pres;
    pres.N = std::move(N);
    pres.H = std::move(H);
    pres.phi = std::move(phi);
    pres.G = FiniteGroup::from_table(int(order), std::move(t));
    return pres;
}

bool SubgroupData::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), uint16_t(g));
}

SubgroupData make_subgroup(const FiniteGroup& parent, std::vector<uint16_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw std::invalid_argument("empty subgroup");

    SubgroupData s;
    s.members = std::move(members);
    auto in = [&](int g) { return s.contains(g); };
    if (!in(parent.identity)) throw std::invalid_argument("subgroup lacks the identity");
    for (uint16_t a : s.members) {
        if (!in(parent.inverse(a))) throw std::invalid_argument("subgroup not closed under inverse");
        for (uint16_t b : s.members)
            if (!in(parent.mul(a, b))) throw std::invalid_argument("subgroup not closed under product");
    }
    s.is_normal_in_parent = true;
    for (int g = 0; g < parent.order && s.is_normal_in_parent; ++g)
        for (uint16_t m : s.members)
            if (!in(parent.mul(parent.mul(g, m), parent.inverse(g)))) {
                s.is_normal_in_parent = false;
                break;
            }
    return s;
}

SubgroupData generated_subgroup(const FiniteGroup& parent, const std::vector<uint16_t>& gens) {
    std::vector<char> in(parent.order, 0);
    std::vector<uint16_t> frontier = {uint16_t(parent.identity)};
    in[parent.identity] = 1;
    while (!frontier.empty()) {
        std::vector<uint16_t> next;
        for (uint16_t x : frontier)
            for (uint16_t g : gens) {
                int y = parent.mul(x, g);
                if (!in[y]) { in[y] = 1; next.push_back(uint16_t(y)); }
                y = parent.mul(x, parent.inverse(g));
                if (!in[y]) { in[y] = 1; next.push_back(uint16_t(y)); }
            }
        frontier = std::move(next);
    }
    std::vector<uint16_t> members;
    for (int g = 0; g < parent.order; ++g)
        if (in[g]) members.push_back(uint16_t(g));
    return make_subgroup(parent, std::move(members));
}

std::pair<bool, bool> check_normality_equivalence(const SemidirectPresentation& pres,
                                                  const SubgroupData& nprime) {
    const FiniteGroup& N = pres.N;
    auto in = [&](int n) { return nprime.contains(n); };

    bool normal_in_n = true;
    for (int g = 0; g < N.order && normal_in_n; ++g)
        for (uint16_t m : nprime.members)
            if (!in(N.mul(N.mul(g, m), N.inverse(g)))) { normal_in_n = false; break; }

    bool phi_stable = true;
    for (int h = 0; h < pres.H.order && phi_stable; ++h)
        for (uint16_t m : nprime.members)
            if (!in(pres.phi.apply(h, m))) { phi_stable = false; break; }

    bool cond1 = normal_in_n && phi_stable;

    // condition 2 directly in G on the embedded subgroup
    const FiniteGroup& G = pres.G;
    bool cond2 = true;
    for (int g = 0; g < G.order && cond2; ++g)
        for (uint16_t m : nprime.members) {
            int me = pres.embed_n(m);
            int conj = G.mul(G.mul(g, me), G.inverse(g));
            auto [cn, ch] = pres.decompose(conj);
            if (ch != pres.H.identity || !in(cn)) { cond2 = false; break; }
        }
    return {cond1, cond2};
}

Quotient make_quotient(const FiniteGroup& N, const SubgroupData& nprime) {
    if (!nprime.is_normal_in_parent)
        throw std::invalid_argument("quotient requires a normal subgroup");

    Quotient q;
    q.coset_of.assign(N.order, uint16_t(0xffff));
    for (int n = 0; n < N.order; ++n) {
        if (q.coset_of[n] != 0xffff) continue;
        uint16_t idx = uint16_t(q.rep.size());
        q.rep.push_back(uint16_t(n)); // minimal index is the canonical representative
        for (uint16_t m : nprime.members) q.coset_of[N.mul(n, m)] = idx;
    }
    int k = int(q.rep.size());
    std::vector<uint16_t> t(size_t(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            t[size_t(a) * k + b] = q.coset_of[N.mul(q.rep[a], q.rep[b])];
    q.q = FiniteGroup::from_table(k, std::move(t));
    return q;
}

std::vector<uint16_t> quotient_action_map(const SemidirectPresentation& pres,
                                          const SubgroupData& nprime, const Quotient& nq,
                                          int h) {
    for (uint16_t m : nprime.members)
        if (!nprime.contains(pres.phi.apply(h, m)))
            throw std::invalid_argument("phi_h does not stabilize N'; no induced map on N''");
    std::vector<uint16_t> out(nq.q.order);
    for (int x = 0; x < nq.q.order; ++x)
        out[x] = nq.coset_of[pres.phi.apply(h, nq.rep[x])];
    return out;
}

SubgroupData fixed_subgroup(const SemidirectPresentation& pres, const SubgroupData& nprime,
                            const Quotient& nq, int h) {
    if (h == pres.H.identity)
        throw std::invalid_argument("fixed_subgroup requires h != e_H");
    auto [c1, c2] = check_normality_equivalence(pres, nprime);
    if (!c1 || !c2)
        throw std::invalid_argument("fixed_subgroup requires N' normal in G");
    auto bar = quotient_action_map(pres, nprime, nq, h);
    std::vector<uint16_t> fixed;
    for (int x = 0; x < nq.q.order; ++x)
        if (bar[x] == x) fixed.push_back(uint16_t(x));
    return make_subgroup(nq.q, std::move(fixed));
}

ClassData conjugacy_classes(const FiniteGroup& G) {
    ClassData cd;
    cd.class_of.assign(G.order, uint16_t(0xffff));
    for (int x = 0; x < G.order; ++x) {
        if (cd.class_of[x] != 0xffff) continue;
        uint16_t idx = uint16_t(cd.classes.size());
        ConjugacyClass cls;
        cls.representative = x;
        for (int g = 0; g < G.order; ++g) {
            int y = G.mul(G.mul(g, x), G.inverse(g));
            if (cd.class_of[y] == 0xffff) {
                cd.class_of[y] = idx;
                cls.members.push_back(uint16_t(y));
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cd.classes.push_back(std::move(cls));
    }
    return cd;
}

int CosetAction::fixed_points(int g) const {
    int k = 0;
    for (int c = 0; c < num_cosets; ++c)
        if (image(g, c) == c) ++k;
    return k;
}

std::vector<int> CosetAction::cycle_type(int g) const {
    std::vector<char> seen(num_cosets, 0);
    std::vector<int> type;
    for (int c = 0; c < num_cosets; ++c) {
        if (seen[c]) continue;
        int len = 0;
        int x = c;
        while (!seen[x]) { seen[x] = 1; x = image(g, x); ++len; }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

CosetAction coset_action(const FiniteGroup& G, const SubgroupData& gprime) {
    CosetAction act;
    act.coset_of.assign(G.order, uint16_t(0xffff));
    for (int g = 0; g < G.order; ++g) {
        if (act.coset_of[g] != 0xffff) continue;
        uint16_t idx = uint16_t(act.coset_rep.size());
        act.coset_rep.push_back(uint16_t(g));
        for (uint16_t m : gprime.members) act.coset_of[G.mul(g, m)] = idx;
    }
    act.num_cosets = int(act.coset_rep.size());
    act.perm.assign(size_t(G.order) * act.num_cosets, 0);
    for (int g = 0; g < G.order; ++g)
        for (int c = 0; c < act.num_cosets; ++c)
            act.perm[size_t(g) * act.num_cosets + c] = act.coset_of[G.mul(g, act.coset_rep[c])];
    return act;
}

bool GroupInvariants::fixed_sizes_all_equal() const {
    for (const auto& [h, s] : n_h_dprime)
        if (s != n_h_dprime.front().second) return false;
    return true;
}

long long GroupInvariants::common_fixed_size() const {
    if (n_h_dprime.empty()) return n_dprime; // trivial H: Galois case, beta = 0
    if (!fixed_sizes_all_equal())
        throw std::logic_error("|N''_h| values differ; no common fixed size");
    return n_h_dprime.front().second;
}

GroupInvariants group_invariants(const SemidirectPresentation& pres, const SubgroupData& nprime) {
    GroupInvariants inv;
    inv.n = pres.G.order;
    inv.n_prime = (long long)nprime.size();
    inv.h = pres.H.order;
    if (pres.N.order % nprime.size() != 0)
        throw std::invalid_argument("N' does not divide |N|");
    inv.n_dprime = pres.N.order / (long long)nprime.size();

    auto [c1, c2] = check_normality_equivalence(pres, nprime);
    inv.nprime_normal = c1 && c2;

    Quotient nq = make_quotient(pres.N, nprime); // requires N' normal in N
    for (int h = 0; h < pres.H.order; ++h) {
        if (h == pres.H.identity) continue;
        long long size = 0;
        if (inv.nprime_normal) {
            size = (long long)fixed_subgroup(pres, nprime, nq, h).size();
        } else {
            // phi_h does not descend to N''; fall back to the image of
            // Fix_N(phi_h) in N/N' (reproduces the A4 |N'|=2 case of the
            // source material).
            std::vector<char> hit(nq.q.order, 0);
            for (int n = 0; n < pres.N.order; ++n)
                if (pres.phi.apply(h, n) == n) hit[nq.coset_of[n]] = 1;
            for (char c : hit) size += c;
        }
        inv.n_h_dprime.emplace_back(h, size);
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Presets

std::vector<std::vector<uint8_t>> even_permutations(int n) {
    std::vector<uint8_t> p(n);
    std::iota(p.begin(), p.end(), uint8_t(0));
    std::vector<std::vector<uint8_t>> out;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

FiniteGroup permutation_group(const std::vector<std::vector<uint8_t>>& perms) {
    int k = int(perms.size());
    std::map<std::vector<uint8_t>, int> index;
    for (int i = 0; i < k; ++i) index[perms[i]] = i;
    const int n = int(perms[0].size());
    std::vector<uint16_t> t(size_t(k) * k);
    std::vector<uint8_t> comp(n);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]]; // (a.b)(i) = a(b(i))
            auto it = index.find(comp);
            if (it == index.end()) throw std::invalid_argument("permutation set is not closed");
            t[size_t(a) * k + b] = uint16_t(it->second);
        }
    return FiniteGroup::from_table(k, std::move(t));
}

namespace {

std::vector<uint8_t> conjugate_by_transposition(const std::vector<uint8_t>& p, int i, int j) {
    // q = t p t with t = (i j)
    std::vector<uint8_t> q(p.size());
    auto t = [&](int x) { return x == i ? j : (x == j ? i : x); };
    for (size_t x = 0; x < p.size(); ++x) q[t(x)] = uint8_t(t(p[x]));
    return q;
}

Preset make_dihedral(int k) {
    if (k < 3) throw std::invalid_argument("dihedral:K needs K >= 3");
    FiniteGroup N = FiniteGroup::cyclic(k);
    FiniteGroup H = FiniteGroup::cyclic(2);
    Preset p;
    p.name = "dihedral:" + std::to_string(k);
    p.pres = build_semidirect(N, H, inversion_action(H, N));
    // one subgroup of C_k per proper divisor
    for (int m = 1; m < k; ++m) {
        if (k % m != 0) continue;
        std::vector<uint16_t> members;
        for (int j = 0; j < m; ++j) members.push_back(uint16_t((long long)j * (k / m) % k));
        NprimeChoice c;
        c.name = m == 1 ? "trivial" : ("order" + std::to_string(m));
        c.members = make_subgroup(p.pres.N, std::move(members)).members;
        p.nprime_choices.push_back(std::move(c));
    }
    return p;
}

Preset make_symmetric(int k) {
    if (k < 3) throw std::invalid_argument("symmetric:K needs K >= 3");
    long long order = 1;
    for (int i = 2; i <= k; ++i) order *= i;
    if (order > kMaxGroupOrder)
        throw std::invalid_argument("symmetric:" + std::to_string(k) + " exceeds the 10^4 order bound");

    auto alt = even_permutations(k);
    FiniteGroup N = permutation_group(alt);
    FiniteGroup H = FiniteGroup::cyclic(2);

    std::map<std::vector<uint8_t>, int> index;
    for (size_t i = 0; i < alt.size(); ++i) index[alt[i]] = int(i);
    Action phi;
    phi.map.assign(2, std::vector<uint16_t>(N.order));
    for (int n = 0; n < N.order; ++n) {
        phi.map[0][n] = uint16_t(n);
        phi.map[1][n] = uint16_t(index.at(conjugate_by_transposition(alt[n], 0, 1)));
    }

    Preset p;
    p.name = "symmetric:" + std::to_string(k);
    p.pres = build_semidirect(N, H, phi);
    NprimeChoice c;
    c.name = "trivial";
    c.members = {uint16_t(p.pres.N.identity)};
    p.nprime_choices.push_back(std::move(c));
    return p;
}

Preset make_a4() {
    // V4 = {e, (01)(23), (02)(13), (03)(12)} acted on by C3 = <(012)> via conjugation
    std::vector<std::vector<uint8_t>> v4 = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    FiniteGroup N = permutation_group(v4);
    FiniteGroup H = FiniteGroup::cyclic(3);

    std::vector<uint8_t> c3 = {1, 2, 0, 3}; // (012)
    std::map<std::vector<uint8_t>, int> index;
    for (size_t i = 0; i < v4.size(); ++i) index[v4[i]] = int(i);
    auto conj = [&](const std::vector<uint8_t>& p) {
        std::vector<uint8_t> q(4);
        for (int i = 0; i < 4; ++i) q[c3[i]] = c3[p[i]]; // c p c^{-1}
        return q;
    };
    Action phi;
    phi.map.assign(3, std::vector<uint16_t>(4));
    for (int n = 0; n < 4; ++n) {
        phi.map[0][n] = uint16_t(n);
        auto q1 = conj(v4[n]);
        phi.map[1][n] = uint16_t(index.at(q1));
        phi.map[2][n] = uint16_t(index.at(conj(q1)));
    }

    Preset p;
    p.name = "a4";
    p.pres = build_semidirect(N, H, phi);
    p.nprime_choices.push_back({"trivial", {uint16_t(p.pres.N.identity)}});
    // the three order-2 subgroups; "order2" is the canonical first one
    for (int i = 1; i <= 3; ++i) {
        NprimeChoice c;
        c.name = i == 1 ? "order2" : ("order2." + std::to_string(i));
        c.members = {uint16_t(p.pres.N.identity), uint16_t(i)};
        p.nprime_choices.push_back(std::move(c));
    }
    return p;
}

Preset make_galois_cyclic(int k) {
    FiniteGroup N = FiniteGroup::cyclic(k);
    FiniteGroup H = FiniteGroup::trivial();
    Preset p;
    p.name = "galois:cyclic:" + std::to_string(k);
    p.pres = build_semidirect(N, H, trivial_action(H, N));
    p.nprime_choices.push_back({"trivial", {uint16_t(p.pres.N.identity)}});
    return p;
}

} // namespace

Preset preset(const std::string& name) {
    auto starts = [&](const std::string& pre) {
        return name.size() > pre.size() && name.compare(0, pre.size(), pre) == 0;
    };
    auto tail_int = [&](size_t off) {
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(name.substr(off), &used);
            if (off + used != name.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("bad preset parameter in '" + name + "'");
        }
        return v;
    };
    if (starts("dihedral:")) return make_dihedral(tail_int(9));
    if (starts("symmetric:")) return make_symmetric(tail_int(10));
    if (name == "a4") return make_a4();
    if (starts("galois:cyclic:")) return make_galois_cyclic(tail_int(14));
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected dihedral:K, symmetric:K, a4, galois:cyclic:K)");
}

const NprimeChoice& find_nprime(const Preset& p, const std::string& name) {
    for (const auto& c : p.nprime_choices)
        if (c.name == name) return c;
    std::string have;
    for (const auto& c : p.nprime_choices) have += (have.empty() ? "" : ", ") + c.name;
    throw std::invalid_argument("preset " + p.name + " has no N' choice '" + name +
                                "' (available: " + have + ")");
}

FiniteGroup read_group_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    int order = 0;
    if (!(in >> order)) throw std::runtime_error("group file: missing order");
    if (order <= 0 || order > kMaxGroupOrder)
        throw std::runtime_error("group file: order out of range");
    std::vector<uint16_t> t;
    t.reserve(size_t(order) * order);
    long long v;
    while (t.size() < size_t(order) * order && (in >> v)) {
        if (v < 0 || v >= order) throw std::runtime_error("group file: index out of range");
        t.push_back(uint16_t(v));
    }
    if (t.size() != size_t(order) * order)
        throw std::runtime_error("group file: truncated multiplication table");
    return FiniteGroup::from_table(order, std::move(t));
}

Preset preset_from_group_file(const std::string& path) {
    FiniteGroup N = read_group_table_file(path);
    FiniteGroup H = FiniteGroup::trivial();
    Preset p;
    p.name = "file:" + path;
    p.pres = build_semidirect(N, H, trivial_action(H, N));
    p.nprime_choices.push_back({"trivial", {uint16_t(p.pres.N.identity)}});
    return p;
}

} // namespace zmom
