// Genus-level lifting identities (sum over a genus or over a lift set), the
// -252 decompositions and eta identity, and the structural checks on forms,
// genera and lifts.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cases_common.hpp"

namespace qform {

using namespace cases;

namespace {

std::string tag(Int delta, Int p)
{
    return std::to_string(delta) + "/p" + std::to_string(p);
}

std::string compact(QuadForm const& f)
{
    return std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c);
}

/// Reduced forms (a, +-b, c) for each listed triple.
std::vector<QuadForm> with_opposites(std::initializer_list<QuadForm> forms)
{
    std::vector<QuadForm> out;
    for (auto const& f : forms) {
        out.push_back(f);
        if (f.b != 0)
            out.push_back(f.opposite());
    }
    return out;
}

/*
 * Lift sets of a genus: for every genus g of delta and every genus G of
 * delta p^2, the sets Psi_G(f), f in g, have equal size, are disjoint, and
 * cover G exactly when G corresponds to g (|G| = |Psi| |g|); otherwise empty.
 */
IdentityCase psi_partition_case(std::string id, Int delta, Int p)
{
    return make(std::move(id), Scale::structural, [delta, p](std::size_t) {
        auto small = genus_partition(Discriminant(delta));
        auto large = genus_partition(Discriminant(delta * p * p));
        auto phi = phi_correspondence(small, large, p);
        std::vector<S::Coeff> observed, expected;
        for (std::size_t gi = 0; gi < small.genera.size(); ++gi) {
            auto const& g = small.genera[gi];
            for (std::size_t Gi = 0; Gi < large.genera.size(); ++Gi) {
                auto const& G = large.genera[Gi];
                bool const corresponds = phi[Gi] == gi;
                Int const share = corresponds ? static_cast<Int>(G.forms.size() / g.forms.size()) : 0;
                std::set<QuadForm> cover;
                std::size_t total = 0;
                for (auto const& f : g.forms) {
                    auto lift = psi_lift(f, large, Gi, p);
                    observed.push_back(static_cast<S::Coeff>(lift.members.size()));
                    expected.push_back(share);
                    total += lift.members.size();
                    cover.insert(lift.members.begin(), lift.members.end());
                }
                // disjointness, then coverage, then the size relation
                observed.push_back(static_cast<S::Coeff>(total - cover.size()));
                expected.push_back(0);
                std::set<QuadForm> genus_set(G.forms.begin(), G.forms.end());
                observed.push_back(static_cast<S::Coeff>(cover == genus_set ? 1 : 0));
                expected.push_back(corresponds ? 1 : 0);
                observed.push_back(static_cast<S::Coeff>(G.forms.size() % g.forms.size()));
                expected.push_back(0);
            }
        }
        return one(pack(std::move(observed)), pack(std::move(expected)));
    });
}

std::pair<Int, Int> const general_pairs[] = {{-92, 5}, {-63, 2}, {-7, 3}, {-28, 3}};

} // namespace

std::vector<IdentityCase> section5_cases()
{
    std::vector<IdentityCase> out;
    auto const T = Scale::theta;
    std::string const s = "sec5/";

    // -92 lifted by 5
    out.push_back(single(s + "nt1", T, [](std::size_t N) {
        S base = th(1, 0, 23, N);
        return std::pair{th(1, 0, 575, N) + 2 * th(24, 10, 25, N), 3 * at(base, 25) + proj(base, 5, {1, 4})};
    }));
    out.push_back(single(s + "nt2", T, [](std::size_t N) {
        S base = th(1, 0, 23, N);
        return std::pair{th(23, 0, 25, N) + 2 * th(25, 20, 27, N), 3 * at(base, 25) + proj(base, 5, {2, 3})};
    }));
    out.push_back(single(s + "nt3", T, [](std::size_t N) {
        S base = th(3, 2, 8, N);
        return std::pair{th(9, 2, 64, N) + th(16, 14, 39, N) + th(24, 22, 29, N),
                         3 * at(base, 25) + proj(base, 5, {1, 4})};
    }));
    out.push_back(single(s + "nte", T, [](std::size_t N) {
        S base = th(3, 2, 8, N);
        return std::pair{th(3, 2, 192, N) + th(8, 6, 73, N) + th(13, 12, 47, N),
                         3 * at(base, 25) + proj(base, 5, {2, 3})};
    }));
    auto small_genus = with_opposites({{1, 0, 23}, {3, 2, 8}});
    auto g1 = with_opposites({{1, 0, 575}, {9, 2, 64}, {16, 14, 39}, {24, 22, 29}, {24, 10, 25}});
    auto g2 = with_opposites({{23, 0, 25}, {3, 2, 192}, {8, 6, 73}, {13, 12, 47}, {25, 20, 27}});
    out.push_back(single(s + "co1", T, [=](std::size_t N) {
        S base = sum_theta(small_genus, N);
        return std::pair{sum_theta(g1, N), 3 * at(base, 25) + proj(base, 5, {1, 4})};
    }));
    out.push_back(single(s + "co2", T, [=](std::size_t N) {
        S base = sum_theta(small_genus, N);
        return std::pair{sum_theta(g2, N), 3 * at(base, 25) + proj(base, 5, {2, 3})};
    }));

    // single-form lifts and whole-genus lifts for the general pairs
    for (auto [d, p] : general_pairs) {
        auto small = genus_partition(Discriminant(d));
        auto large = genus_partition(Discriminant(d * p * p));
        auto phi = phi_correspondence(small, large, p);
        Int const lifted = d * p * p;

        for (auto const& f : enumerate_reduced_forms(Discriminant(d))) {
            for (std::size_t Gi = 0; Gi < large.genera.size(); ++Gi) {
                std::string id = s + "thm51/" + tag(d, p) + "/" + compact(f) + "/G" + std::to_string(Gi + 1);
                out.push_back(make(std::move(id), T, [=](std::size_t N) {
                    auto lift = psi_lift(f, large, Gi, p);
                    std::vector<SeriesPair> pairs;
                    if (lift.members.empty())
                        return pairs;
                    Int w = unit_index(Discriminant(d));
                    auto mult = static_cast<Int>(lift.members.size());
                    auto rs = represented_coprime_values(lift.members.front(), lifted, 2);
                    S rhs = lift_identity_rhs({f}, d, p, rs[0], mult, N);
                    pairs.push_back({w * sum_theta(lift.members, N), rhs});
                    pairs.push_back({lift_identity_rhs({f}, d, p, rs[1], mult, N), rhs});
                    return pairs;
                }));
            }
        }

        for (std::size_t Gi = 0; Gi < large.genera.size(); ++Gi) {
            auto const& G = large.genera[Gi];
            auto const& g = small.genera[phi[Gi]];
            std::string id = s + "cor52/" + tag(d, p) + "/G" + std::to_string(Gi + 1);
            out.push_back(make(std::move(id), T, [=](std::size_t N) {
                Int w = unit_index(Discriminant(d));
                auto mult = static_cast<Int>(G.forms.size() / g.forms.size());
                auto rs = represented_coprime_values(G.forms.front(), lifted, 2);
                S rhs = lift_identity_rhs(g.forms, d, p, rs[0], mult, N);
                std::vector<SeriesPair> pairs;
                pairs.push_back({w * sum_theta(G.forms, N), rhs});
                pairs.push_back({lift_identity_rhs(g.forms, d, p, rs[1], mult, N), rhs});
                return pairs;
            }));
        }
        out.push_back(psi_partition_case(s + "psi-partition/" + tag(d, p), d, p));
    }

    // -252 from -63 (p = 2) and -63 from -7 (p = 3)
    out.push_back(single(s + "gpf1", T, [](std::size_t N) {
        S base = th(1, 1, 16, N) + th(4, 1, 4, N);
        return std::pair{th(1, 0, 63, N) + th(7, 0, 9, N), at(base, 4) + proj(base, 2, 1)};
    }));
    out.push_back(single(s + "gpf2", T, [](std::size_t N) {
        S base = th(2, 1, 8, N);
        return std::pair{th(8, 6, 9, N), at(base, 4) + proj(base, 2, 1)};
    }));
    out.push_back(single(s + "nug", T, [](std::size_t N) {
        S base = th(1, 1, 2, N);
        return std::pair{th(1, 1, 16, N) + th(4, 1, 4, N), 2 * at(base, 9) + proj(base, 3, 1)};
    }));
    out.push_back(single(s + "nugg", T, [](std::size_t N) {
        S base = th(1, 1, 2, N);
        return std::pair{2 * th(2, 1, 8, N), 2 * at(base, 9) + proj(base, 3, 2)};
    }));
    out.push_back(single(s + "36pp2", T, [](std::size_t N) {
        return std::pair{th(1, 1, 2, N), constant(1, N) + 2 * lam("f63", N)};
    }));
    out.push_back(single(s + "36ppp", T, [](std::size_t N) {
        S base = th(1, 1, 2, N);
        return std::pair{proj(base, 3, 1) - proj(base, 3, 2), 2 * lam("g63", N)};
    }));
    auto dec63 = [](std::size_t N, int sign) {
        S f = lam("f63", N);
        return constant(2, N) + f + 3 * at(f, 9) + sign * lam("g63", N);
    };
    out.push_back(single(s + "knug", T, [=](std::size_t N) {
        return std::pair{th(1, 1, 16, N) + th(4, 1, 4, N), dec63(N, 1)};
    }));
    out.push_back(single(s + "knugg", T, [=](std::size_t N) { return std::pair{2 * th(2, 1, 8, N), dec63(N, -1)}; }));
    out.push_back(single(s + "252n", T, [](std::size_t N) {
        S f = lam("f63", N);
        return std::pair{proj(f, 2, 1), f - 2 * at(f, 2) + at(f, 4)};
    }));
    out.push_back(single(s + "252nn", T, [](std::size_t N) {
        S g = lam("g63", N);
        return std::pair{proj(g, 2, 1), g + 2 * at(g, 2) + at(g, 4)};
    }));
    auto dec252 = [](std::size_t N, int sign) {
        S f = lam("f63", N), g = lam("g63", N);
        return constant(2, N) + f - 2 * at(f, 2) + 2 * at(f, 4) + 3 * at(f, 9) - 6 * at(f, 18) + 6 * at(f, 36) +
               sign * (g + 2 * at(g, 2) + 2 * at(g, 4));
    };
    out.push_back(single(s + "252dec1", T, [=](std::size_t N) {
        return std::pair{th(1, 0, 63, N) + th(7, 0, 9, N), dec252(N, 1)};
    }));
    out.push_back(single(s + "252dec2", T, [=](std::size_t N) { return std::pair{2 * th(8, 6, 9, N), dec252(N, -1)}; }));

    // the -252 eta identity and the steps leading to it
    auto const E = Scale::eta;
    out.push_back(single(s + "focus", E, [](std::size_t N) {
        return std::pair{th(1, 0, 63, N) - th(7, 0, 9, N), 2 * eta(N, 1, {{3, 1, -1}, {21, 1, -1}})};
    }));
    out.push_back(single(s + "6m", E, [](std::size_t N) {
        return std::pair{th(1, 1, 16, N) - th(4, 1, 4, N), 2 * eta(N, 1, {{3, 1}, {21, 1}})};
    }));
    out.push_back(single(s + "n1", T, [](std::size_t N) {
        S f = th(1, 1, 16, N);
        return std::pair{proj(f, 2, 1), th(1, 0, 63, N) - at(f, 4)};
    }));
    out.push_back(single(s + "n2", T, [](std::size_t N) {
        S f = th(4, 1, 4, N);
        return std::pair{proj(f, 2, 1), th(7, 0, 9, N) - at(f, 4)};
    }));
    out.push_back(single(s + "ll", T, [](std::size_t N) {
        S diff = th(1, 1, 16, N) - th(4, 1, 4, N);
        return std::pair{th(1, 0, 63, N) - th(7, 0, 9, N), at(diff, 4) + proj(diff, 2, 1)};
    }));
    out.push_back(single(s + "o", T, [](std::size_t N) {
        return std::pair{proj(th(1, 1, 16, N) - th(4, 1, 4, N), 2, 1), proj(th(1, 0, 63, N) - th(7, 0, 9, N), 2, 1)};
    }));
    out.push_back(single(s + "even4", T, [](std::size_t N) {
        S f = th(4, 1, 4, N);
        return std::pair{proj(f, 2, 0), 2 * at(th(2, 1, 8, N), 2) - at(f, 4)};
    }));
    out.push_back(single(s + "even5", T, [](std::size_t N) {
        S f = th(1, 1, 16, N);
        return std::pair{proj(f, 2, 0), 2 * at(th(2, 1, 8, N), 2) - at(f, 4)};
    }));
    out.push_back(single(s + "e", T, [](std::size_t N) {
        return std::pair{proj(th(1, 1, 16, N) - th(4, 1, 4, N), 2, 0),
                         -proj(th(1, 0, 63, N) - th(7, 0, 9, N), 2, 0)};
    }));
    return out;
}

namespace {

std::vector<Int> discriminants_up_to(Int bound)
{
    std::vector<Int> out;
    for (Int d = -3; d >= -bound; --d)
        if (mod(d, 4) == 0 || mod(d, 4) == 1)
            out.push_back(d);
    return out;
}

/// Labels cells of a partition by order of first appearance.
template <class Key>
std::vector<S::Coeff> first_appearance_labels(std::vector<Key> const& keys)
{
    std::map<Key, S::Coeff> seen;
    std::vector<S::Coeff> out;
    for (auto const& k : keys) {
        auto [it, inserted] = seen.emplace(k, static_cast<S::Coeff>(seen.size()));
        out.push_back(it->second);
    }
    return out;
}

bool idoneal(Int d)
{
    Discriminant delta(d);
    return class_number(delta) == num_genera(delta);
}

} // namespace

std::vector<IdentityCase> structural_cases()
{
    std::vector<IdentityCase> out;
    auto const X = Scale::structural;
    std::string const s = "struct/";

    // genus partition against the partition by represented residues mod 8|delta|
    out.push_back(make(s + "genus-residue-oracle", X, [](std::size_t) {
        std::vector<S::Coeff> by_genus, by_residue;
        for (Int d : discriminants_up_to(400)) {
            auto partition = genus_partition(Discriminant(d));
            auto forms = enumerate_reduced_forms(Discriminant(d));
            std::vector<std::size_t> genus_keys;
            std::vector<std::set<Int>> residue_keys;
            Int const modulus = 8 * -d;
            for (auto const& f : forms) {
                genus_keys.push_back(partition.genus_of(f));
                residue_keys.push_back(represented_coprime_residues(f, modulus, modulus));
            }
            auto a = first_appearance_labels(genus_keys);
            auto b = first_appearance_labels(residue_keys);
            by_genus.insert(by_genus.end(), a.begin(), a.end());
            by_residue.insert(by_residue.end(), b.begin(), b.end());
        }
        return one(pack(std::move(by_genus)), pack(std::move(by_residue)));
    }));

    // tabulated v(delta p^2) / v(delta) against the computed partitions, and the
    // genus-count formula against the partition size
    out.push_back(make(s + "genus-count-ratio", X, [](std::size_t) {
        std::vector<S::Coeff> table, computed, formula, counted;
        std::map<Int, std::size_t> genera;
        auto count = [&](Int d) {
            auto it = genera.find(d);
            if (it == genera.end())
                it = genera.emplace(d, genus_partition(Discriminant(d)).genera.size()).first;
            return it->second;
        };
        for (Int d : discriminants_up_to(400)) {
            for (Int p : {2, 3, 5, 7}) {
                Int lifted = d * p * p;
                table.push_back(genus_count_ratio(Discriminant(d), p));
                computed.push_back(static_cast<S::Coeff>(count(lifted) / count(d)));
                table.push_back(0);
                computed.push_back(static_cast<S::Coeff>(count(lifted) % count(d)));
            }
        }
        for (auto [d, v] : genera) {
            formula.push_back(num_genera(Discriminant(d)));
            counted.push_back(static_cast<S::Coeff>(v));
        }
        std::vector<SeriesPair> pairs;
        pairs.push_back({pack(table), pack(computed)});
        pairs.push_back({pack(formula), pack(counted)});
        return pairs;
    }));

    // h(delta p^2) from the lift formula against direct enumeration
    auto lift_pairs = [](bool ramified) {
        std::vector<std::pair<Int, Int>> pairs;
        for (auto [d, p] : idoneal_lift_pairs())
            if ((d % p == 0) == ramified)
                pairs.emplace_back(d, p);
        if (!ramified)
            for (auto pr : {std::pair<Int, Int>{-92, 5}, {-20, 3}, {-7, 2}, {-7, 3}, {-28, 3}})
                pairs.push_back(pr);
        return pairs;
    };
    for (bool ramified : {false, true}) {
        std::string id = s + (ramified ? "class-number-lift-ramified" : "class-number-lift");
        out.push_back(make(std::move(id), X, [pairs = lift_pairs(ramified)](std::size_t) {
            std::vector<S::Coeff> lifted, direct;
            for (auto [d, p] : pairs) {
                lifted.push_back(class_number_lift(Discriminant(d), p));
                direct.push_back(class_number(Discriminant(d * p * p)));
            }
            return one(pack(lifted), pack(direct));
        }));
    }

    // the lift table is exactly the set of idoneal pairs among idoneal
    // discriminants (every known one has |delta| <= 7392)
    out.push_back(make(s + "idoneal-pairs", X, [](std::size_t) {
        constexpr Int bound = 7392;
        std::vector<S::Coeff> found, listed;
        for (Int d : discriminants_up_to(bound)) {
            if (!idoneal(d))
                continue;
            for (Int p = 2; -d * p * p <= bound; ++p)
                if (is_prime(p) && idoneal(d * p * p))
                    found.push_back(-d * 100 + p);
        }
        for (auto [d, p] : idoneal_lift_pairs())
            listed.push_back(-d * 100 + p);
        std::sort(found.begin(), found.end());
        std::sort(listed.begin(), listed.end());
        return one(pack(found), pack(listed));
    }));

    for (auto [d, p] : idoneal_lift_pairs())
        out.push_back(psi_partition_case(s + "psi-partition/" + tag(d, p), d, p));

    // Kronecker symbol against Euler's criterion
    out.push_back(make(s + "kronecker-euler", X, [](std::size_t) {
        std::vector<S::Coeff> symbol, euler;
        for (Int p = 3; p < 200; p += 2) {
            if (!is_prime(p))
                continue;
            for (Int a = 0; a < p; ++a) {
                Int e = 1, base = a, k = (p - 1) / 2;
                while (k > 0) {
                    if (k & 1)
                        e = e * base % p;
                    base = base * base % p;
                    k >>= 1;
                }
                symbol.push_back(kronecker(a, p));
                euler.push_back(e == p - 1 ? -1 : e);
            }
        }
        return one(pack(symbol), pack(euler));
    }));

    // identity, inverses, commutativity, associativity and closure, classwise
    out.push_back(make(s + "composition-axioms", X, [](std::size_t) {
        std::vector<S::Coeff> violations(5, 0);
        for (Int d : discriminants_up_to(2000)) {
            Discriminant delta(d);
            auto forms = enumerate_reduced_forms(delta);
            std::set<QuadForm> classes(forms.begin(), forms.end());
            QuadForm e = principal_form(delta);
            std::size_t const h = forms.size();
            std::vector<QuadForm> table(h * h);
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = 0; j < h; ++j)
                    table[i * h + j] = compose(forms[i], forms[j]);
            auto index = [&](QuadForm const& f) {
                return static_cast<std::size_t>(std::lower_bound(forms.begin(), forms.end(), f) - forms.begin());
            };
            for (std::size_t i = 0; i < h; ++i) {
                if (compose(e, forms[i]) != forms[i])
                    ++violations[0];
                if (compose(forms[i], reduce(forms[i].opposite())) != e)
                    ++violations[1];
                for (std::size_t j = 0; j < h; ++j) {
                    QuadForm ij = table[i * h + j];
                    if (ij != table[j * h + i])
                        ++violations[2];
                    if (!classes.contains(ij)) {
                        ++violations[4];
                        continue;
                    }
                    for (std::size_t k = 0; k < h; ++k) {
                        QuadForm jk = table[j * h + k];
                        if (!classes.contains(jk))
                            continue;
                        if (table[index(ij) * h + k] != table[i * h + index(jk)])
                            ++violations[3];
                    }
                }
            }
        }
        return one(pack(violations), pack(std::vector<S::Coeff>(5, 0)));
    }));
    return out;
}

} // namespace qform
