#include "sqav/report.hpp"

#include "sqav/invariants.hpp"

#include <json.hpp>

#include <iomanip>
#include <set>
#include <sstream>

namespace sqav {

namespace {

using json = nlohmann::ordered_json;

json rat(const Rational& q) { return to_string(q); }

json rat_vec(const RatVec& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(rat(q));
    return out;
}

json int_vec(const IntVec& v) { return json(v); }

json points(const std::vector<IntVec>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(int_vec(v));
    return out;
}

json integer(const Integer& n) { return n.str(); }

json header(const FormSpec& spec) {
    json out;
    json input = json::parse(spec.source, nullptr, false);
    out["input"] = input.is_discarded() ? json(spec.source) : input;
    if (spec.preset) out["preset"] = *spec.preset;
    const GramForm form = spec.form();
    out["form"] = {{"rank", form.rank()}, {"gram", form.gram()}, {"linear", form.linear()}};
    return out;
}

json cell_json(const DelaunayCell& c) {
    return {{"dim", c.dim},
            {"vertices", points(c.vertices)},
            {"hole", rat_vec(c.hole)},
            {"radius_sq", rat(c.radius_sq)}};
}

std::vector<long long> star_counts(const StarComplex& s) {
    std::vector<long long> out(s.rank() + 1, 0);
    for (const auto& c : s.cells()) ++out[c.dim];
    return out;
}

StarComplex build_star(const FormSpec& spec, bool verify) {
    return star(spec.form(), StarOptions{verify, default_rank_limit()});
}

struct CheckList {
    json lines = json::array();
    std::size_t passed = 0, failed = 0;

    void add(const std::string& id, const std::string& claim, const json& expected, const json& actual) {
        bool ok = expected == actual;
        lines.push_back({{"id", id}, {"claim", claim}, {"expected", expected}, {"actual", actual}, {"pass", ok}});
        ok ? ++passed : ++failed;
    }

    void fail(const std::string& id, const std::string& claim, const std::string& error) {
        lines.push_back({{"id", id}, {"claim", claim}, {"error", error}, {"pass", false}});
        ++failed;
    }
};

long long int_power(long long d, std::size_t e) {
    long long p = 1;
    for (std::size_t i = 0; i < e; ++i) p *= d;
    return p;
}

void verify_sampled(const FormSpec& spec, CheckList& checks, json& out) {
    const DegenData data = spec.data();
    const auto samples = sample_maximal_cells(data, 24, 8);
    json rows = json::array();
    std::set<std::string> indices, mults;
    bool nonint = true;
    for (const auto& s : samples.samples) {
        rows.push_back({{"start", rat_vec(s.start)},
                        {"vertices", s.cell.vertices.size()},
                        {"hole", rat_vec(s.cell.hole)},
                        {"radius_sq", rat(s.cell.radius_sq)},
                        {"index", integer(s.index)},
                        {"nilpotency", integer(s.nilpotency)},
                        {"multiplicity", integer(s.multiplicity)}});
        indices.insert(s.index.str());
        mults.insert(s.multiplicity.str());
        nonint = nonint && !s.dA_integral;
    }
    out["samples"] = rows;
    out["base_change"] = integer(samples.base_change);
    if (spec.preset == std::string("e8")) {
        checks.add("e8.sample_count", "at least 20 random points walked to maximal cells", true,
                   samples.samples.size() >= 20);
        checks.add("e8.index", "Delaunay vectors of a maximal cell span a sublattice of index 2 or 3", true,
                   std::all_of(indices.begin(), indices.end(),
                               [](const std::string& s) { return s == "2" || s == "3"; }));
        checks.add("e8.multiplicity", "with A = E8/2 every component has multiplicity 2 or 3", true,
                   std::all_of(mults.begin(), mults.end(), [](const std::string& s) { return s == "2" || s == "3"; }));
        checks.add("e8.dA_not_integral", "dA(alpha) is not in the dual lattice", true, nonint);
        checks.add("e8.base_change", "minimal base change", "6", samples.base_change.str());
    }
}

}  // namespace

std::string star_report(const FormSpec& spec, bool verify) {
    json out = header(spec);
    const StarComplex s = build_star(spec, verify);
    json cells = json::array();
    for (const auto& c : s.cells()) cells.push_back(cell_json(c));
    json relations = json::array();
    for (const auto& [i, j] : s.face_relations()) relations.push_back({i, j});
    const auto qc = quotient_complex(s, 1);
    out["star"] = {{"counts", star_counts(s)},
                   {"kissing_number", s.max_cells().size()},
                   {"covering_radius_sq", rat(s.covering_radius_sq())},
                   {"relevant_vectors", points(relevant_vectors(s.form()))},
                   {"cells", cells},
                   {"face_relations", relations}};
    out["quotient"] = {{"counts", qc.counts()}, {"euler", qc.euler_characteristic()}};
    if (verify) {
        bool dual = true;
        for (const auto& c : s.cells())
            dual = dual && voronoi_cell(s.form(), c, s).dim + c.dim == static_cast<int>(s.rank());
        out["verified"] = {{"empty_sphere", true},
                           {"central_symmetry", true},
                           {"duality", dual},
                           {"lifting_agrees", s.rank() <= 3 ? json(true) : json("not run above rank 3")}};
    }
    return out.dump(2) + "\n";
}

VerifyResult verify_report(const FormSpec& spec, long long depth) {
    if (depth < 1) throw InvalidArgument("--depth must be positive");
    json out = header(spec);
    CheckList checks;
    const GramForm form = spec.form();
    const std::size_t r = form.rank();

    if (r > default_rank_limit()) {
        out["mode"] = "sampled";
        verify_sampled(spec, checks, out);
    } else {
        out["mode"] = "full";
        const DegenData data = spec.data();
        const StarComplex s = build_star(spec, true);
        checks.add("star.verified", "Delaunay cells at 0 pass empty-sphere, symmetry and duality checks", true, true);

        std::vector<long long> binom;
        for (const auto& b : hodge_numbers(r, 0)) binom.push_back(b.convert_to<long long>());
        for (long long d = 1; d <= depth; ++d) {
            const auto qc = quotient_complex(s, d);
            const std::string tag = ".d" + std::to_string(d);
            checks.add("complex.chain" + tag, "boundary of boundary vanishes on Del_B/dX", true, qc.is_chain_complex());
            checks.add("complex.euler" + tag, "Euler characteristic of the torus complex is 0", 0,
                       qc.euler_characteristic());
            if (d == 1) checks.add("cohomology.binomial", "h^i(P_0, O) = C(g, i)", binom, cohomology_dims(qc).dims);
            try {
                checks.add("h0" + tag, "h^0(P_0, L^d) = d^g with every link contractible", int_power(d, r),
                           h0_Ld(s, d).count);
            } catch (const InvariantViolation& e) {
                checks.fail("h0" + tag, "h^0(P_0, L^d) = d^g with every link contractible", e.what());
            }
            checks.add("theta.total" + tag, "theta basis has d^g elements", int_power(d, r),
                       theta_basis(s, d).total);
        }

        const long long dv = 2 * static_cast<long long>(r) + 1;
        const auto va = very_ample_check(s, dv);
        const std::string vtag = ".d" + std::to_string(dv);
        checks.add("very_ample.cond_i", "primitive vectors lie in r Star(0)", true, va.cond_i);
        checks.add("very_ample.cond_ii" + vtag, "interior (1/d)-points generate each cell's lattice", true, va.cond_ii);
        checks.add("very_ample.cond_iii", "(Star(0) - Star(0)) meets (2+eps)X only in 0", true, va.cond_iii);
        for (long long d = static_cast<long long>(r) + 2; d < dv; ++d)
            checks.add("very_ample.cond_ii.d" + std::to_string(d), "interior (1/d)-points generate each cell's lattice",
                       true, differences_generate(s, d));
        out["very_ample_witnesses"] = va.witnesses;

        const Integer n = minimal_base_change(data, s);
        out["base_change"] = integer(n);
        const DegenData changed = data.base_changed(n.convert_to<long long>());
        checks.add("base_change.stable", "after the minimal base change every multiplicity is 1", "1",
                   minimal_base_change(changed, s).str());
        if (r <= 4) {
            bool total = true;
            for (const auto& c : s.cells()) total = total && is_totally_generating(c);
            checks.add("cells.totally_generating", "in rank at most 4 all Delaunay cells are totally generating",
                       true, total);
            checks.add("cells.nilpotency", "nilpotency 1 in rank at most 4", "1", nilpotency_of_decomposition(s).str());
        }

        const auto strata = strata_inventory(s, data);
        json classes = json::array();
        for (const auto& m : strata.maximal_classes)
            classes.push_back({{"vertices", points(m.vertices)}, {"multiplicity", integer(m.multiplicity)}});
        out["strata"] = {{"class_counts", strata.class_counts},
                         {"kissing_number", strata.kissing_number},
                         {"components", strata.components},
                         {"maximal_classes", classes},
                         {"reduced", strata.reduced}};

        if (spec.preset) {
            static const std::set<std::string> with_expectations{"dim1", "dim2-square", "dim2-hex"};
            if (with_expectations.count(*spec.preset)) {
                for (const auto& c : example_report(*spec.preset).checks)
                    checks.add("preset." + *spec.preset + "." + c.id, c.statement, c.expected, c.actual);
            }
        }
    }

    out["checks"] = checks.lines;
    out["summary"] = {{"passed", checks.passed}, {"failed", checks.failed}};
    return {out.dump(2) + "\n", checks.failed == 0};
}

std::string theta_report(const FormSpec& spec, long long d) {
    if (d < 1) throw InvalidArgument("theta degree must be positive");
    json out = header(spec);
    const StarComplex s = build_star(spec, false);
    const auto theta = theta_basis(s, d);
    json entries = json::array();
    for (const auto& e : theta.entries)
        entries.push_back({{"z", rat_vec(e.z)},
                           {"minimal_cell", points(e.minimal_cell)},
                           {"cell_dim", e.cell_dim},
                           {"support_size", e.support_size}});
    out["theta"] = {{"degree", d}, {"total", theta.total}, {"entries", entries}};
    return out.dump(2) + "\n";
}

std::string classify_report(const FormSpec& spec) {
    json out = header(spec);
    const DegenData data = spec.data();
    const StarComplex s = build_star(spec, false);
    json cells = json::array();
    for (const auto& c : s.cells()) {
        const auto lat = cell_lattice_data(c);
        json factors = json::array();
        for (const auto& f : lat.smith_factors) factors.push_back(integer(f));
        json row = cell_json(c);
        row["smith_factors"] = factors;
        row["index"] = integer(lat.index);
        row["nilpotency"] = integer(lat.nilpotency);
        row["generating"] = lat.index == 1;
        row["totally_generating"] = is_totally_generating(c);
        if (c.dim == static_cast<int>(s.rank())) {
            row["dA"] = rat_vec(dA_at_hole(data, c));
            row["multiplicity"] = integer(multiplicity(data, c));
        }
        cells.push_back(row);
    }
    const auto strata = strata_inventory(s, data);
    out["cells"] = cells;
    out["primitive_vectors"] = points(primitive_vectors(s));
    out["relevant_vectors"] = points(relevant_vectors(s.form()));
    out["nilpotency"] = integer(nilpotency_of_decomposition(s));
    out["minimal_base_change"] = integer(minimal_base_change(data, s));
    out["strata"] = {{"class_counts", strata.class_counts},
                     {"kissing_number", strata.kissing_number},
                     {"components", strata.components},
                     {"reduced", strata.reduced}};
    return out.dump(2) + "\n";
}

std::string tiling_svg(const FormSpec& spec) {
    const GramForm form = spec.form();
    if (form.rank() != 2)
        throw InvalidArgument("svg output needs a rank-2 form, got rank " + std::to_string(form.rank()));
    const StarComplex s = build_star(spec, false);

    constexpr double scale = 80.0, lo = -2.0, hi = 3.0;
    auto px = [&](const Rational& x) { return (x.convert_to<double>() - lo) * scale; };
    auto py = [&](const Rational& y) { return (hi - y.convert_to<double>()) * scale; };
    auto inside = [&](const RatVec& p) { return p[0] >= lo && p[0] <= hi && p[1] >= lo && p[1] <= hi; };
    auto fmt = [](double v) {
        std::ostringstream ss;
        ss << std::fixed << std::setprecision(2) << v;
        return ss.str();
    };

    std::set<std::pair<RatVec, RatVec>> delaunay_edges, voronoi_edges;
    for (long long tx = -3; tx <= 4; ++tx)
        for (long long ty = -3; ty <= 4; ++ty) {
            const IntVec t{tx, ty};
            for (std::size_t i = 0; i < s.cells().size(); ++i) {
                const auto& c = s.cells()[i];
                if (c.dim != 1) continue;
                RatVec a = to_rat(add(c.vertices[0], t)), b = to_rat(add(c.vertices[1], t));
                if (inside(a) && inside(b)) delaunay_edges.insert({std::min(a, b), std::max(a, b)});
                std::vector<RatVec> holes;
                for (auto j : s.cofaces_of(i))
                    if (s.cells()[j].dim == 2) holes.push_back(add(s.cells()[j].hole, to_rat(t)));
                if (holes.size() == 2 && inside(holes[0]) && inside(holes[1]))
                    voronoi_edges.insert({std::min(holes[0], holes[1]), std::max(holes[0], holes[1])});
            }
        }

    const std::string size = fmt((hi - lo) * scale);
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    svg << "  <polygon points=\"";
    const int square[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    for (int k = 0; k < 4; ++k)
        svg << (k ? " " : "") << fmt(px(square[k][0])) << "," << fmt(py(square[k][1]));
    svg << "\" fill=\"#dddddd\" stroke=\"none\"/>\n";
    for (const auto& [a, b] : voronoi_edges)
        svg << "  <line x1=\"" << fmt(px(a[0])) << "\" y1=\"" << fmt(py(a[1])) << "\" x2=\"" << fmt(px(b[0]))
            << "\" y2=\"" << fmt(py(b[1])) << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
    for (const auto& [a, b] : delaunay_edges)
        svg << "  <line x1=\"" << fmt(px(a[0])) << "\" y1=\"" << fmt(py(a[1])) << "\" x2=\"" << fmt(px(b[0]))
            << "\" y2=\"" << fmt(py(b[1])) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (long long x = -2; x <= 3; ++x)
        for (long long y = -2; y <= 3; ++y)
            svg << "  <circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"3\" fill=\"black\"/>\n";
    svg << "  <text x=\"6\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\">B = " << form.gram()[0][0] << ","
        << form.gram()[0][1] << "; " << form.gram()[1][0] << "," << form.gram()[1][1] << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sqav
