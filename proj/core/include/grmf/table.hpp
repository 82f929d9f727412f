#pragma once

#include "grmf/abelian.hpp"

#include <string>
#include <vector>

namespace grmf {

// dims[i][t - t_lo] for internal degree m_values[i].
struct DimensionTable {
    std::vector<GroupElement> m_values;
    int t_lo = 0, t_hi = -1;
    std::vector<std::vector<int>> dims;

    DimensionTable() = default;
    DimensionTable(std::vector<GroupElement> ms, int lo, int hi)
        : m_values(std::move(ms)), t_lo(lo), t_hi(hi), dims(m_values.size(), std::vector<int>(hi - lo + 1, 0))
    {
    }
    int& at(size_t mi, int t) { return dims.at(mi).at(t - t_lo); }
    int at(size_t mi, int t) const { return dims.at(mi).at(t - t_lo); }
    int find(const GroupElement& m) const
    {
        for (size_t i = 0; i < m_values.size(); ++i)
            if (m_values[i] == m) return (int)i;
        return -1;
    }
    struct Cell {
        GroupElement m;
        int t;
        int dim;
    };
    std::vector<Cell> nonzero() const
    {
        std::vector<Cell> out;
        for (size_t i = 0; i < m_values.size(); ++i)
            for (int t = t_lo; t <= t_hi; ++t)
                if (at(i, t)) out.push_back({m_values[i], t, at(i, t)});
        return out;
    }
    bool operator==(const DimensionTable& o) const
    {
        return m_values == o.m_values && t_lo == o.t_lo && t_hi == o.t_hi && dims == o.dims;
    }
};

} // namespace grmf
