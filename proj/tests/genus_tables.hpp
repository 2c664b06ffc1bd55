#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qform/genus.hpp"

namespace qform::testing {

/// One genus as a set of forms with its character values keyed by character name.
struct NamedGenus {
    std::set<QuadForm> forms;
    std::map<std::string, int> characters;
    friend auto operator<=>(NamedGenus const&, NamedGenus const&) = default;
};

using NamedPartition = std::set<NamedGenus>;

inline NamedPartition as_named(GenusPartition const& part)
{
    NamedPartition out;
    for (auto const& g : part.genera) {
        NamedGenus e;
        e.forms.insert(g.forms.begin(), g.forms.end());
        for (std::size_t i = 0; i < part.characters.size(); ++i)
            e.characters[part.characters[i].name()] = g.characters[i];
        out.insert(e);
    }
    return out;
}

inline std::set<QuadForm> pm(Int a, Int b, Int c)
{
    return {{a, b, c}, {a, -b, c}};
}

inline std::set<QuadForm> join(std::initializer_list<std::set<QuadForm>> parts)
{
    std::set<QuadForm> out;
    for (auto const& s : parts)
        out.insert(s.begin(), s.end());
    return out;
}

struct ReferenceTable {
    Int delta;
    NamedPartition genera;
};

/// Published genus tables with their character values.
inline std::vector<ReferenceTable> reference_tables()
{
    return {
        {-20,
         {
             {{{1, 0, 5}}, {{"(r/5)", 1}, {"(-1/r)", 1}}},
             {{{2, 2, 3}}, {{"(r/5)", -1}, {"(-1/r)", -1}}},
         }},
        {-180,
         {
             {{{1, 0, 45}}, {{"(r/5)", 1}, {"(-1/r)", 1}, {"(r/3)", 1}}},
             {{{5, 0, 9}}, {{"(r/5)", 1}, {"(-1/r)", 1}, {"(r/3)", -1}}},
             {{{7, 4, 7}}, {{"(r/5)", -1}, {"(-1/r)", -1}, {"(r/3)", 1}}},
             {{{2, 2, 23}}, {{"(r/5)", -1}, {"(-1/r)", -1}, {"(r/3)", -1}}},
         }},
        {-92, {{join({{{1, 0, 23}}, pm(3, 2, 8)}), {{"(r/23)", 1}}}}},
        {-2300,
         {
             {join({{{1, 0, 575}}, pm(9, 2, 64), pm(16, 14, 39), pm(24, 22, 29), pm(24, 10, 25)}),
              {{"(r/5)", 1}, {"(r/23)", 1}}},
             {join({{{23, 0, 25}}, pm(3, 2, 192), pm(8, 6, 73), pm(13, 12, 47), pm(25, 20, 27)}),
              {{"(r/5)", -1}, {"(r/23)", 1}}},
         }},
        {-63,
         {
             {{{1, 1, 16}, {4, 1, 4}}, {{"(r/3)", 1}, {"(r/7)", 1}}},
             {pm(2, 1, 8), {{"(r/3)", -1}, {"(r/7)", 1}}},
         }},
        {-252,
         {
             {{{1, 0, 63}, {7, 0, 9}}, {{"(r/3)", 1}, {"(r/7)", 1}}},
             {pm(8, 6, 9), {{"(r/3)", -1}, {"(r/7)", 1}}},
         }},
    };
}

} // namespace qform::testing
