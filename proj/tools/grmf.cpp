#include "grmf/io.hpp"
#include "grmf/orlov.hpp"
#include "grmf/sectors.hpp"
#include "grmf/spectra.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace grmf;
using io::json;

namespace {

enum Exit { kOk = 0, kParse = 2, kHypothesis = 3, kInternal = 4 };

// Oracle disagreement and similar bugs.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    Int lo = 0, hi = 0;
};

Range parse_range(const std::string& s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos) throw ParseError("range '" + s + "' is not of the form lo..hi");
    try {
        size_t a = 0, b = 0;
        Range r{std::stoll(s.substr(0, dots), &a), std::stoll(s.substr(dots + 2), &b)};
        if (a != dots || dots + 2 + b != s.size()) throw ParseError("range '" + s + "' has trailing characters");
        if (r.lo > r.hi) throw ParseError("range '" + s + "' is empty");
        return r;
    } catch (const std::logic_error&) {
        throw ParseError("range '" + s + "' is not numeric");
    }
}

std::vector<Int> parse_int_list(const std::string& s)
{
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw ParseError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

IntMat parse_relations(const std::string& s, int rank)
{
    IntMat rel;
    if (s.empty()) return rel;
    for (auto& row : split(s, ';')) {
        auto v = parse_int_list(row);
        if ((int)v.size() != rank) throw ParseError("relation '" + row + "' does not have " + std::to_string(rank) + " entries");
        rel.push_back(v);
    }
    return rel;
}

struct Output {
    std::string format = "json";
    bool timing = false;
};

std::string render_table(const DimensionTable& T, const AbelianGroup& M, const std::string& corner)
{
    std::vector<std::string> labels;
    size_t w0 = corner.size();
    for (auto& m : T.m_values) {
        labels.push_back(M.format(m));
        w0 = std::max(w0, labels.back().size());
    }
    std::ostringstream os;
    os << std::setw((int)w0) << corner;
    for (int t = T.t_lo; t <= T.t_hi; ++t) os << std::setw(5) << t;
    os << "\n";
    for (size_t i = 0; i < T.m_values.size(); ++i) {
        os << std::setw((int)w0) << labels[i];
        for (int t = T.t_lo; t <= T.t_hi; ++t) os << std::setw(5) << T.at(i, t);
        os << "\n";
    }
    return os.str();
}

void emit(const Output& out, json result, const std::string& command, const std::string& input_hash,
          const std::string& table_text = "")
{
    result["manifest"] = {{"command", command},
                          {"input_hash", input_hash},
                          {"conventions", io::kConventions},
                          {"version", io::kVersion}};
    if (out.format == "table" && !table_text.empty()) std::cout << table_text;
    else std::cout << result.dump(2) << "\n";
}

std::vector<GroupElement> window_degrees(const Potential& w, const std::string& m_range)
{
    if (!m_range.empty()) {
        auto r = parse_range(m_range);
        return degrees_in_window(*w.ring, r.lo, r.hi);
    }
    const Int Wd = w.ring->witness_of(w.d), soc = socle_witness_degree(w);
    return degrees_in_window(*w.ring, -soc - Wd, soc + Wd);
}

Range t_window(const std::string& t_range)
{
    Range r = t_range.empty() ? Range{-4, 4} : parse_range(t_range);
    if (r.lo < -64 || r.hi > 64) throw ParseError("t window is limited to |t| <= 64");
    return r;
}

json factorization_or_throw(const Factorization& F)
{
    auto rep = validate(F);
    if (!rep.ok) throw InternalError("produced an invalid factorization (" + rep.kind + "): " + rep.message);
    return io::factorization_to_json(F);
}

std::string hash_of_files(const std::vector<std::string>& files, const std::string& extra)
{
    std::string all = extra;
    for (auto& f : files) all += io::read_json_file(f).dump();
    return io::fnv1a_hex(all);
}

// ---- hochschild --------------------------------------------------------

struct HochschildArgs {
    std::string file, m_range, t_range;
    bool homology = false, cohomology = false, brute = false, by_sector = false;
};

void cmd_hochschild(const HochschildArgs& a, const Output& out)
{
    auto P = io::problem_from_json(io::read_json_file(a.file));
    const Potential& w = P.w;
    const AbelianGroup& M = w.group();
    auto tr = t_window(a.t_range);
    if (a.homology && a.cohomology) throw ParseError("--homology and --cohomology are exclusive");
    if (a.homology && a.brute) throw ParseError("--brute compares the cohomology table; drop --homology");
    json r;
    r["group"] = M.describe();
    r["potential"] = w.ring->str(w.w);
    if (a.homology) {
        auto h = hh_table(w, (int)tr.lo, (int)tr.hi);
        r["mode"] = "homology";
        json dims = json::object();
        for (int i = (int)tr.lo; i <= (int)tr.hi; ++i) dims[std::to_string(i)] = h.table.at(0, i);
        r["HH"] = dims;
        if (a.by_sector) r["by_sector"] = h.by_sector;
        r["warnings"] = h.warnings;
        std::ostringstream text;
        text << std::setw(4) << "i";
        for (int i = (int)tr.lo; i <= (int)tr.hi; ++i) text << std::setw(5) << i;
        text << "\n" << std::setw(4) << "HH";
        for (int i = (int)tr.lo; i <= (int)tr.hi; ++i) text << std::setw(5) << h.table.at(0, i);
        text << "\n";
        emit(out, r, "hochschild", P.hash, text.str());
        return;
    }
    auto ms = window_degrees(w, a.m_range);
    auto S = enumerate_sectors(w);
    DimensionTable T(ms, (int)tr.lo, (int)tr.hi);
    json per = json::array();
    for (size_t i = 0; i < ms.size(); ++i)
        for (int t = (int)tr.lo; t <= (int)tr.hi; ++t) {
            auto v = rhom_cell_by_sector(S, w, ms[i], t);
            for (int x : v) T.at(i, t) += x;
            if (a.by_sector && T.at(i, t))
                per.push_back({{"m", io::element_to_json(M, ms[i])}, {"t", t}, {"sectors", v}});
        }
    r["mode"] = "cohomology";
    r["table"] = io::table_to_json(T, M);
    if (a.by_sector) r["by_sector"] = per;
    std::string text = render_table(T, M, "m\\t");
    if (a.brute) {
        auto B = hh_bruteforce(w, ms, (int)tr.lo, (int)tr.hi);
        int cells = 0, agree = 0;
        json diff = json::array();
        for (size_t i = 0; i < ms.size(); ++i)
            for (int t = (int)tr.lo; t <= (int)tr.hi; ++t) {
                ++cells;
                if (B.at(i, t) == T.at(i, t)) ++agree;
                else diff.push_back({{"m", io::element_to_json(M, ms[i])}, {"t", t}, {"sector", T.at(i, t)}, {"brute", B.at(i, t)}});
            }
        std::ostringstream pct;
        pct << std::fixed << std::setprecision(agree == cells ? 0 : 2) << 100.0 * agree / cells << "%";
        r["agreement"] = {{"cells", cells}, {"agree", agree}, {"agreement", pct.str()}, {"disagreements", diff}};
        text += "agreement: " + pct.str() + "\n";
        if (agree != cells) {
            emit(out, r, "hochschild", P.hash, text);
            throw InternalError("sector formula and brute-force complex disagree on " + std::to_string(cells - agree) + " cells");
        }
    }
    emit(out, r, "hochschild", P.hash, text);
}

// ---- mf ---------------------------------------------------------------

Factorization load_mf(const std::string& path, const std::optional<Potential>& w = {})
{
    return io::factorization_from_json(io::read_json_file(path), w);
}

Polynomial parse_in(const GradedRing& R, const std::string& s)
{
    try {
        return R.parse(s);
    } catch (const std::exception& e) {
        throw ParseError("cannot parse '" + s + "': " + e.what());
    }
}

struct MfArgs {
    std::string sub;
    std::vector<std::string> files;
    std::string map_file, by, p, m_range, t_range;
    bool identity = false, ungraded = false;
    Int bound = 8;
};

void cmd_mf(const MfArgs& a, const Output& out)
{
    const std::string hash = hash_of_files(a.files, a.sub + "|" + a.p + "|" + a.by + "|" + a.m_range + "|" + a.t_range);
    auto need_files = [&](size_t n) {
        if (a.files.size() != n)
            throw ParseError("mf " + a.sub + " expects " + std::to_string(n) + " file(s), got " + std::to_string(a.files.size()));
    };
    const std::string cmd = "mf " + a.sub;
    if (a.sub == "validate") {
        need_files(1);
        auto F = load_mf(a.files[0]);
        auto rep = validate(F);
        json r{{"ok", rep.ok}, {"kind", rep.kind}, {"message", rep.message}};
        emit(out, r, cmd, hash, rep.ok ? "ok\n" : "invalid (" + rep.kind + "): " + rep.message + "\n");
        if (!rep.ok) throw std::domain_error("not a matrix factorization: " + rep.message);
        return;
    }
    if (a.sub == "diagonal") {
        need_files(1);
        auto P = io::problem_from_json(io::read_json_file(a.files[0]));
        auto D = diagonal(P.w);
        emit(out, factorization_or_throw(D.F), cmd, hash);
        return;
    }
    if (a.sub == "box") {
        need_files(2);
        emit(out, factorization_or_throw(box(load_mf(a.files[0]), load_mf(a.files[1]))), cmd, hash);
        return;
    }
    if (a.sub == "cone") {
        auto E = load_mf(a.files.at(0));
        if (a.identity) {
            need_files(1);
            emit(out, factorization_or_throw(cone(E, E, identity_morphism(E)).C), cmd, hash);
            return;
        }
        need_files(2);
        if (a.map_file.empty()) throw ParseError("mf cone needs --map FILE or --identity");
        auto F = load_mf(a.files[1], E.w);
        auto f = io::morphism_from_json(io::read_json_file(a.map_file), E, F);
        if (!has_degree_zero(E, F, f) || !is_closed(E, F, f)) throw std::domain_error("the map is not a closed degree-0 morphism");
        emit(out, factorization_or_throw(cone(E, F, f).C), cmd, hash);
        return;
    }
    need_files(a.sub == "hom" ? 2 : 1);
    auto E = load_mf(a.files[0]);
    if (a.sub == "dual") return emit(out, factorization_or_throw(dual(E)), cmd, hash);
    if (a.sub == "shift") return emit(out, factorization_or_throw(shift(E)), cmd, hash);
    if (a.sub == "twist") {
        if (a.by.empty()) throw ParseError("mf twist needs --by DEGREE");
        json j;
        try {
            j = json::parse(a.by);
        } catch (const json::exception&) {
            throw ParseError("--by must be a JSON integer or list");
        }
        return emit(out, factorization_or_throw(twist(E, io::element_from_json(E.w.group(), j))), cmd, hash);
    }
    if (a.sub == "cokernel") {
        auto pr = cokernel_presentation(E);
        const GradedRing& R = *E.w.ring;
        json rows = json::array();
        for (int i = 0; i < pr.matrix.rows; ++i) {
            json row = json::array();
            for (int k = 0; k < pr.matrix.cols; ++k) row.push_back(R.str(pr.matrix(i, k)));
            rows.push_back(row);
        }
        json g = json::array(), rl = json::array();
        for (auto& x : pr.generators) g.push_back(io::element_to_json(E.w.group(), x));
        for (auto& x : pr.relations) rl.push_back(io::element_to_json(E.w.group(), x));
        return emit(out, {{"matrix", rows}, {"generators", g}, {"relations", rl}, {"zero_module", pr.is_zero}}, cmd, hash);
    }
    if (a.sub == "hom") {
        auto F = load_mf(a.files[1], E.w);
        auto tr = t_window(a.t_range);
        auto ms = window_degrees(E.w, a.m_range);
        auto T = hom_table(E, F, ms, (int)tr.lo, (int)tr.hi);
        return emit(out, {{"table", io::table_to_json(T, E.w.group())}}, cmd, hash, render_table(T, E.w.group(), "m\\t"));
    }
    if (a.sub == "support") {
        if (a.p.empty()) throw ParseError("mf support needs --p POLY");
        const GradedRing& R = *E.w.ring;
        Polynomial p = parse_in(R, a.p);
        if (!a.ungraded && !p.is_zero() && !R.degree_of(p)) throw std::domain_error("p is not homogeneous; use --ungraded");
        auto h = a.ungraded ? null_homotopy_ungraded(E, p, a.bound) : null_homotopy(E, p);
        json r{{"p", R.str(p)}, {"mode", a.ungraded ? "ungraded" : "graded"}, {"null_homotopic", h.null_homotopic}};
        std::string text = h.null_homotopic ? "null-homotopic\n" : "not null-homotopic\n";
        if (h.null_homotopic) {
            if (!verify_null_homotopy(E, p, h)) throw InternalError("null homotopy failed verification");
            auto mat = [&](const PolyMatrix& A) {
                json rows = json::array();
                for (int i = 0; i < A.rows; ++i) {
                    json row = json::array();
                    for (int k = 0; k < A.cols; ++k) row.push_back(R.str(A(i, k)));
                    rows.push_back(row);
                }
                return rows;
            };
            r["h_0"] = mat(h.h_0);
            r["h_minus1"] = mat(h.h_minus1);
            r["verified"] = true;
            text += "h_0 = " + r["h_0"].dump() + "\nh_minus1 = " + r["h_minus1"].dump() + "\n";
        }
        return emit(out, r, cmd, hash, text);
    }
    throw ParseError("unknown mf subcommand '" + a.sub + "'");
}

// ---- orlov / fermat-rdim / nl-dim / grading ---------------------------

json report_json(const OrlovReport& r)
{
    json j{{"a", r.a_degree},
           {"d_degree", r.d_degree},
           {"branch", branch_name(r.branch)},
           {"H_order", r.H_order},
           {"exceptional_count", r.exceptional_count},
           {"side", r.side},
           {"objects", r.objects},
           {"statement", r.citation}};
    if (r.H_order_combinatorial) j["H_order_combinatorial"] = *r.H_order_combinatorial;
    if (r.dynkin) j["label"] = *r.dynkin;
    return j;
}

json partition_json(const PartitionReport& p)
{
    json parts = json::array();
    for (auto& q : p.parts)
        parts.push_back({{"indices", q.indices},
                         {"weights", q.weights},
                         {"a", q.a_degree},
                         {"nonpositive", q.nonpositive},
                         {"admissible", q.admissible}});
    return {{"parts", parts}, {"score", p.score}};
}

void cmd_orlov(const std::string& weights, const std::string& ring, const Output& out)
{
    if (weights.empty() == ring.empty()) throw ParseError("orlov needs exactly one of --weights or --ring");
    if (!weights.empty()) {
        auto s = WeightSequence::make(parse_int_list(weights));
        auto r = orlov_classify(s);
        json j = report_json(r);
        j["weights"] = s.d;
        j["lcm"] = s.m;
        return emit(out, j, "orlov", io::fnv1a_hex(weights));
    }
    auto P = io::problem_from_json(io::read_json_file(ring));
    emit(out, report_json(orlov_classify(P.w)), "orlov", P.hash);
}

void cmd_fermat_rdim(const std::string& weights, const std::string& ade, const Output& out)
{
    if (weights.empty() == ade.empty()) throw ParseError("fermat-rdim needs exactly one of --weights or --ade");
    BoundsReport b;
    json j;
    if (!weights.empty()) {
        auto s = WeightSequence::make(parse_int_list(weights));
        b = fermat_bounds(s);
        j["weights"] = s.d;
        j["minimizing"] = minimizing_test(s);
    } else {
        auto labels = split(ade, ',');
        b = ade_tensor_bounds(labels);
        j["factors"] = labels;
    }
    j["lower"] = b.lower ? json(*b.lower) : json(nullptr);
    j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
    j["lower_unclamped"] = b.lower_raw;
    j["verdict"] = b.verdict;
    j["hypotheses"] = b.hypotheses;
    if (b.lower_witness) j["lower_witness"] = partition_json(*b.lower_witness);
    if (b.upper_witness) j["upper_witness"] = partition_json(*b.upper_witness);
    emit(out, j, "fermat-rdim", io::fnv1a_hex(weights + "|" + ade));
}

struct NlArgs {
    std::string ring, p, ideal, floor;
    int ideal_degree = -1;
    int bound = 0;
};

void cmd_nl_dim(const NlArgs& a, const Output& out)
{
    if (!a.floor.empty()) {
        auto v = parse_int_list(a.floor);
        if (v.size() != 3) throw ParseError("--floor takes n,d,i");
        if (v[2] < 1) throw std::domain_error("the floor formula needs i >= 1");
        return emit(out, {{"n", v[0]}, {"d", v[1]}, {"i", v[2]}, {"floor", nl_floor(v[0], v[1], v[2])}}, "nl-dim",
                    io::fnv1a_hex(a.floor));
    }
    if (a.ring.empty() || a.p.empty()) throw ParseError("nl-dim needs --ring FILE and --p POLY (or --floor n,d,i)");
    auto P = io::problem_from_json(io::read_json_file(a.ring));
    const GradedRing& R = *P.w.ring;
    Polynomial p = parse_in(R, a.p);
    if (p.is_zero() || !R.degree_of(p) || R.witness_of(*R.degree_of(p)) <= 0)
        throw std::domain_error("p must be homogeneous of positive degree");
    GradedIdealSpec I = GradedIdealSpec::make(P.w.ring, {});
    std::string extra;
    if (!a.ideal.empty()) {
        auto j = io::read_json_file(a.ideal);
        I = io::ideal_from_json(j, P.w.ring);
        extra = j.dump();
    }
    if (a.ideal_degree >= 0) I = I + monomial_ideal(P.w.ring, degrees_in_window(R, a.ideal_degree, a.ideal_degree).at(0));
    auto r = nl_dimension_principal(P.w, p, I, a.bound > 0 ? std::optional<int>(a.bound) : std::nullopt);
    json j{{"p", R.str(p)}, {"nilpotent_order", r.order}, {"nl_dimension", r.value}, {"degenerate", r.degenerate}};
    if (r.degenerate) j["note"] = "p already lies in (dw) + I; reported as 0";
    emit(out, j, "nl-dim", io::fnv1a_hex(P.hash + a.p + extra + std::to_string(a.ideal_degree)));
}

void cmd_grading(const std::string& sub, int rank, const std::string& relations, const Output& out)
{
    if (rank < 0) throw ParseError("--rank must be nonnegative");
    auto rel = parse_relations(relations, rank);
    auto G = AbelianGroup::quotient(rank, rel);
    const std::string hash = io::fnv1a_hex(sub + "|" + std::to_string(rank) + "|" + relations);
    json j = io::group_to_json(*G);
    j["description"] = G->describe();
    if (sub == "snf") {
        auto S = smith_normal_form(rel.empty() ? IntMat{} : rel, rank);
        IntVec diag;
        for (int i = 0; i < S.rank; ++i) diag.push_back(S.D[i][i]);
        j["invariant_factors"] = diag;
    } else if (sub == "dual") {
        if (!G->is_finite()) throw std::domain_error("the character group is only listed for finite groups, got " + G->describe());
        json chars = json::array();
        for (auto& c : characters(G)) {
            json vals = json::array();
            for (int i = 0; i < G->ngens(); ++i) vals.push_back(c.value_on_generator(i).str());
            chars.push_back(vals);
        }
        j["characters"] = chars;
    } else if (sub != "quotient") {
        throw ParseError("unknown grading subcommand '" + sub + "'");
    }
    emit(out, j, "grading " + sub, hash, G->describe() + "\n");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graded matrix factorizations: Hochschild invariants, Orlov and Rouquier bounds"};
    app.set_version_flag("--version", io::kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // --format and --timing may follow the subcommand
    Output out;
    app.add_option("--format", out.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--timing", out.timing, "print wall time to stderr");

    HochschildArgs ha;
    auto* hs = app.add_subcommand("hochschild", "RHom(Id, (m)) table or HH_* via the sector formula");
    hs->add_option("file", ha.file, "problem file")->required();
    hs->add_flag("--homology", ha.homology);
    hs->add_flag("--cohomology", ha.cohomology);
    hs->add_option("--m", ha.m_range, "witness-degree window lo..hi");
    hs->add_option("--t", ha.t_range, "cohomological window lo..hi (default -4..4)");
    hs->add_flag("--brute", ha.brute, "also run the brute-force complex and compare");
    hs->add_flag("--by-sector", ha.by_sector);

    MfArgs ma;
    auto* mf = app.add_subcommand("mf", "operations on factorization files");
    mf->add_option("operation", ma.sub, "validate|cone|box|dual|shift|twist|hom|diagonal|support|cokernel")
        ->required()
        ->check(CLI::IsMember({"validate", "cone", "box", "dual", "shift", "twist", "hom", "diagonal", "support", "cokernel"}));
    mf->add_option("files", ma.files, "input files");
    mf->add_option("--map", ma.map_file, "morphism file for cone");
    mf->add_flag("--identity", ma.identity, "cone of the identity");
    mf->add_option("--by", ma.by, "twist degree as JSON, e.g. [1]");
    mf->add_option("--p", ma.p, "polynomial for support");
    mf->add_flag("--ungraded", ma.ungraded, "search homotopies ignoring the grading");
    mf->add_option("--bound", ma.bound, "witness-degree bound for --ungraded");
    mf->add_option("--m", ma.m_range);
    mf->add_option("--t", ma.t_range);

    std::string weights, ring, ade;
    auto* orl = app.add_subcommand("orlov", "Gorenstein parameter and decomposition branch");
    orl->add_option("--weights", weights, "comma-separated weights");
    orl->add_option("--ring", ring, "problem file");

    std::string fweights;
    auto* fr = app.add_subcommand("fermat-rdim", "Rouquier dimension bounds");
    fr->add_option("--weights", fweights);
    fr->add_option("--ade", ade, "comma-separated ADE labels, e.g. A_2,D_4");

    NlArgs na;
    auto* nl = app.add_subcommand("nl-dim", "Noether-Lefschetz dimension of a principal ideal");
    nl->add_option("--ring", na.ring);
    nl->add_option("--p", na.p);
    nl->add_option("--ideal", na.ideal, "file with a list of generators");
    nl->add_option("--ideal-degree", na.ideal_degree, "add all monomials of this witness degree");
    nl->add_option("--bound", na.bound, "nilpotent order search bound");
    nl->add_option("--floor", na.floor, "n,d,i for the floor formula");

    std::string gsub, grel;
    int grank = 0;
    auto* gr = app.add_subcommand("grading", "finitely generated abelian groups");
    gr->add_option("operation", gsub, "snf|quotient|dual")->required()->check(CLI::IsMember({"snf", "quotient", "dual"}));
    gr->add_option("--rank", grank)->required();
    gr->add_option("--relations", grel, "rows separated by ';', entries by ','");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        if (*hs) cmd_hochschild(ha, out);
        else if (*mf) cmd_mf(ma, out);
        else if (*orl) cmd_orlov(weights, ring, out);
        else if (*fr) cmd_fermat_rdim(fweights, ade, out);
        else if (*nl) cmd_nl_dim(na, out);
        else if (*gr) cmd_grading(gsub, grank, grel, out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        code = kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        code = kParse;
    } catch (const std::domain_error& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        code = kHypothesis;
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        code = kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        code = kInternal;
    }
    if (out.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cerr << json{{"wall_time_ms", ms}}.dump() << "\n";
    }
    return code;
}
