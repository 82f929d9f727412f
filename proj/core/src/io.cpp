#include "grmf/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

namespace grmf::io {

namespace {

const json& need(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T> T get_as(const json& j, const char* what)
{
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ") + what + ": " + e.what());
    }
}

Polynomial parse_poly(const GradedRing& R, const json& j)
{
    auto s = get_as<std::string>(j, "polynomial");
    try {
        return R.parse(s);
    } catch (const std::exception& e) {
        throw ParseError("cannot parse polynomial '" + s + "': " + e.what());
    }
}

PolyMatrix matrix_from_json(const GradedRing& R, const json& j, int rows, int cols)
{
    if (!j.is_array() || (int)j.size() != rows) throw ParseError("matrix has the wrong number of rows");
    PolyMatrix A(rows, cols, R.nvars());
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || (int)j[i].size() != cols) throw ParseError("matrix row has the wrong length");
        for (int k = 0; k < cols; ++k) A(i, k) = parse_poly(R, j[i][k]);
    }
    return A;
}

json matrix_to_json(const GradedRing& R, const PolyMatrix& A)
{
    json out = json::array();
    for (int i = 0; i < A.rows; ++i) {
        json row = json::array();
        for (int k = 0; k < A.cols; ++k) row.push_back(R.str(A(i, k)));
        out.push_back(row);
    }
    return out;
}

std::vector<GroupElement> degrees_from_json(const AbelianGroup& M, const json& j)
{
    if (!j.is_array()) throw ParseError("module degrees must be a list");
    std::vector<GroupElement> out;
    for (auto& e : j) out.push_back(element_from_json(M, e));
    return out;
}

} // namespace

json group_to_json(const AbelianGroup& M)
{
    return {{"free_rank", M.free_rank()},
            {"torsion", M.torsion()},
            {"ambient_rank", M.ambient_rank()},
            {"relations", M.relations()}};
}

GroupPtr group_from_json(const json& j)
{
    if (!j.is_object()) throw ParseError("group must be an object");
    GroupPtr G;
    if (j.contains("relations") || j.contains("ambient_rank")) {
        auto rel = j.contains("relations") ? get_as<IntMat>(j.at("relations"), "relations") : IntMat{};
        int n = j.contains("ambient_rank") ? get_as<int>(j.at("ambient_rank"), "ambient_rank")
                : rel.empty()              ? -1
                                           : (int)rel[0].size();
        if (n < 0) throw ParseError("group needs 'ambient_rank' when there are no relations");
        for (auto& r : rel)
            if ((int)r.size() != n) throw ParseError("relation length differs from the ambient rank");
        G = AbelianGroup::quotient(n, rel);
        if (j.contains("free_rank") && get_as<int>(j.at("free_rank"), "free_rank") != G->free_rank())
            throw ParseError("free_rank disagrees with the relations");
        if (j.contains("torsion") && get_as<IntVec>(j.at("torsion"), "torsion") != G->torsion())
            throw ParseError("torsion disagrees with the relations");
        return G;
    }
    int r = get_as<int>(need(j, "free_rank"), "free_rank");
    IntVec t = j.contains("torsion") ? get_as<IntVec>(j.at("torsion"), "torsion") : IntVec{};
    if (r < 0) throw ParseError("negative free rank");
    for (Int x : t)
        if (x < 1) throw ParseError("torsion orders must be positive");
    return AbelianGroup::from_invariants(r, t);
}

json element_to_json(const AbelianGroup& M, const GroupElement& e) { return M.to_ambient(e); }

GroupElement element_from_json(const AbelianGroup& M, const json& j)
{
    IntVec x;
    if (j.is_number_integer()) x = {j.get<Int>()};
    else x = get_as<IntVec>(j, "group element");
    if ((int)x.size() != M.ambient_rank()) throw ParseError("group element has the wrong length");
    return M.from_ambient(x);
}

json potential_to_json(const Potential& w)
{
    const GradedRing& R = *w.ring;
    const AbelianGroup& M = w.group();
    json vars = json::array();
    for (auto& v : R.variables()) vars.push_back({{"name", v.name}, {"degree", element_to_json(M, v.degree)}});
    return {{"group", group_to_json(M)},
            {"variables", vars},
            {"potential", R.str(w.w)},
            {"degree", element_to_json(M, w.d)},
            {"witness", R.witness()}};
}

Potential potential_from_json(const json& j)
{
    GroupPtr M = group_from_json(need(j, "group"));
    const json& vs = need(j, "variables");
    if (!vs.is_array() || vs.empty()) throw ParseError("'variables' must be a nonempty list");
    std::vector<Variable> vars;
    for (auto& v : vs) {
        auto name = get_as<std::string>(need(v, "name"), "variable name");
        vars.push_back({name, element_from_json(*M, need(v, "degree"))});
    }
    std::optional<IntVec> wit;
    if (j.contains("witness")) wit = get_as<IntVec>(j.at("witness"), "witness");
    RingPtr R;
    try {
        R = GradedRing::make(M, vars, wit);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid ring: ") + e.what());
    }
    Polynomial p = parse_poly(*R, need(j, "potential"));
    if (j.contains("degree")) {
        GroupElement d = element_from_json(*M, j.at("degree"));
        if (!p.is_zero() && !R->is_homogeneous_of(p, d)) throw ParseError("potential is not homogeneous of the stated degree");
        return Potential::make(R, p, d);
    }
    if (p.is_zero()) throw ParseError("a zero potential needs an explicit 'degree'");
    if (!R->degree_of(p)) throw ParseError("potential is not homogeneous");
    return Potential::make(R, p);
}

Problem problem_from_json(const json& j)
{
    if (!j.is_object()) throw ParseError("problem file must be a JSON object");
    auto schema = get_as<std::string>(need(j, "schema"), "schema");
    if (schema != kSchema) throw ParseError("unsupported schema '" + schema + "', expected '" + kSchema + "'");
    Problem p{potential_from_json(j), j.value("options", json::object()), fnv1a_hex(j.dump())};
    return p;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json factorization_to_json(const Factorization& F)
{
    if (F.is_truncated()) throw std::logic_error("refusing to serialize a truncated factorization");
    const GradedRing& R = *F.w.ring;
    const AbelianGroup& M = F.w.group();
    json a = json::array(), b = json::array();
    for (auto& d : F.E_minus1.degrees) a.push_back(element_to_json(M, d));
    for (auto& d : F.E_0.degrees) b.push_back(element_to_json(M, d));
    return {{"schema", kSchema},
            {"kind", "factorization"},
            {"ring", potential_to_json(F.w)},
            {"E_minus1", a},
            {"E_0", b},
            {"phi_0", matrix_to_json(R, F.phi_0)},
            {"phi_minus1", matrix_to_json(R, F.phi_minus1)}};
}

Factorization factorization_from_json(const json& j, const std::optional<Potential>& w)
{
    if (get_as<std::string>(need(j, "schema"), "schema") != kSchema) throw ParseError("unsupported schema");
    if (j.value("kind", "") != "factorization") throw ParseError("not a factorization file");
    Potential p = w ? *w : potential_from_json(need(j, "ring"));
    const AbelianGroup& M = p.group();
    auto e1 = degrees_from_json(M, need(j, "E_minus1"));
    auto e0 = degrees_from_json(M, need(j, "E_0"));
    const GradedRing& R = *p.ring;
    auto phi0 = matrix_from_json(R, need(j, "phi_0"), (int)e0.size(), (int)e1.size());
    auto phi1 = matrix_from_json(R, need(j, "phi_minus1"), (int)e1.size(), (int)e0.size());
    return Factorization::make(p, e1, e0, phi0, phi1);
}

json morphism_to_json(const Morphism& f, const GradedRing& R)
{
    return {{"f_minus1", matrix_to_json(R, f.f_minus1)}, {"f_0", matrix_to_json(R, f.f_0)}};
}

Morphism morphism_from_json(const json& j, const Factorization& E, const Factorization& F)
{
    const GradedRing& R = *E.w.ring;
    return {matrix_from_json(R, need(j, "f_minus1"), F.E_minus1.rank(), E.E_minus1.rank()),
            matrix_from_json(R, need(j, "f_0"), F.E_0.rank(), E.E_0.rank())};
}

json table_to_json(const DimensionTable& T, const AbelianGroup& M)
{
    json ms = json::array();
    for (auto& m : T.m_values) ms.push_back(element_to_json(M, m));
    return {{"m", ms}, {"t_lo", T.t_lo}, {"t_hi", T.t_hi}, {"dims", T.dims}};
}

GradedIdealSpec ideal_from_json(const json& j, RingPtr ring)
{
    const json& g = j.is_array() ? j : need(j, "generators");
    std::vector<Polynomial> gens;
    for (auto& s : g) {
        Polynomial p = parse_poly(*ring, s);
        if (!p.is_zero() && !ring->degree_of(p)) throw ParseError("ideal generator is not homogeneous");
        gens.push_back(p);
    }
    return GradedIdealSpec::make(ring, gens);
}

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

} // namespace grmf::io
