#pragma once

#include "affschur/symcore.hpp"

#include <initializer_list>
#include <utility>

inline affschur::Expansion ex(affschur::Basis b, std::initializer_list<std::pair<std::vector<int>, long>> terms)
{
    affschur::Expansion e(b);
    for (auto& [idx, c] : terms)
        e.add(idx, c);
    return e;
}
