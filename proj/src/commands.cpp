#include "stabwall/commands.hpp"

#include <cmath>

#include "stabwall/chambers.hpp"
#include "stabwall/example_suite.hpp"
#include "stabwall/svg.hpp"
#include "stabwall/transforms.hpp"

namespace stabwall {

namespace {

std::pair<Rat, Rat> need_point(const JobConfig& cfg) {
    if (!cfg.point) throw ConfigError("missing 'point'");
    return *cfg.point;
}

double rat_to_double(const Rat& q) {
    return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
}

}  // namespace

Report cmd_pair(const JobConfig& cfg) {
    Report rep("pair", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    const MukaiVector& v = config_vector(cfg, cfg.target);
    const MukaiVector& u = config_vector(cfg, cfg.other);
    rep.add("pair",
            {{"v", v.str()}, {"u", u.str()}, {"value", rat_str(mukai_pairing(lat, v, u))}});
    return rep;
}

Report cmd_charge(const JobConfig& cfg) {
    Report rep("charge", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    Slice slice(lat, config_gamma(cfg));
    const MukaiVector& v = config_vector(cfg, cfg.target);
    auto [s, t2] = need_point(cfg);
    ChargeValue z = charge(slice, v, SlicePoint::rational(s, t2));
    rep.add("charge", {{"v", v.str()},
                       {"s", rat_str(s)},
                       {"t2", rat_str(t2)},
                       {"re", z.re.str()},
                       {"im_over_t", z.im_over_t.str()}});
    return rep;
}

namespace {

std::vector<std::pair<std::string, std::string>> wall_fields(const Wall& wall) {
    switch (wall.kind) {
        case Wall::Kind::Circle:
            return {{"kind", "circle"},
                    {"center", rat_str(wall.center_s)},
                    {"radius2", rat_str(wall.radius2)}};
        case Wall::Kind::VerticalLine:
            return {{"kind", "line"}, {"s0", rat_str(wall.line_s)}};
        case Wall::Kind::Everywhere: return {{"kind", "everywhere"}};
        case Wall::Kind::Empty: return {{"kind", "empty"}};
    }
    return {};
}

}  // namespace

Report cmd_wall(const JobConfig& cfg) {
    Report rep("wall", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    Slice slice(lat, config_gamma(cfg));
    const MukaiVector& v = config_vector(cfg, cfg.target);
    const MukaiVector& u = config_vector(cfg, cfg.other);
    Wall wall = wall_between(slice, v, u);
    auto fields = wall_fields(wall);
    fields.insert(fields.begin(), {"u", u.str()});
    fields.insert(fields.begin(), {"v", v.str()});
    if (cfg.point) {
        auto [s, t2] = *cfg.point;
        fields.push_back(
            {"contains", wall_contains(wall, SlicePoint::rational(s, t2)) ? "true" : "false"});
    }
    rep.add("wall", std::move(fields));
    return rep;
}

Report cmd_walls(const JobConfig& cfg, int workers) {
    Report rep("walls", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    Slice slice(lat, config_gamma(cfg));
    const MukaiVector& v = config_vector(cfg, cfg.target);
    Region region = config_region(cfg);
    WallSearchResult found = wall_vectors_for(slice, v, region, cfg.epsilon, workers);
    rep.add("summary", {{"v", v.str()},
                        {"count", std::to_string(found.walls.size())},
                        {"complete", found.complete ? "true" : "false"},
                        {"rank_bound", found.rank_bound_used.str()}});
    for (const auto& cand : found.walls) {
        auto fields = wall_fields(cand.wall);
        fields.push_back({"witness_s", cand.witness_s.str()});
        fields.push_back({"witness_t2", cand.witness_t2.str()});
        std::string defs;
        for (size_t i = 0; i < cand.defining.size(); ++i) {
            if (i) defs += ";";
            defs += slice_form(slice, cand.defining[i]).str();
        }
        fields.push_back({"defining", defs});
        rep.add("wall", std::move(fields));
    }
    return rep;
}

Report cmd_gieseker(const JobConfig& cfg) {
    Report rep("gieseker", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    auto [s, t2] = need_point(cfg);
    if (!cfg.anchor) {
        GiesekerParams params = GiesekerParams::for_surface(lat, cfg.r0, cfg.epsilon);
        bool ok = geometric_chamber_test(params, s, t2);
        rep.add("geometric-chamber", {{"s", rat_str(s)},
                                      {"t2", rat_str(t2)},
                                      {"s0", s0_constant(params).str()},
                                      {"inside", ok ? "true" : "false"}});
        return rep;
    }
    Slice slice(lat, config_gamma(cfg));
    const MukaiVector& v = config_vector(cfg, cfg.target);
    SliceForm f = slice_form(slice, v);
    Rat disc = disc_term_of(lat.h2(), f);
    GiesekerParams params = GiesekerParams::for_surface(lat, cfg.r0, cfg.epsilon, disc);
    GiesekerSide side = (cfg.side == "dual") ? GiesekerSide::Dual : GiesekerSide::Gieseker;
    GiesekerRegionTrace trace =
        gieseker_region_trace(params, f, cfg.anchor->first, cfg.anchor->second, side, s, t2);
    rep.add("gieseker-region", {{"v", v.str()},
                                {"side", cfg.side.empty() ? "gieseker" : cfg.side},
                                {"anchor_s", rat_str(cfg.anchor->first)},
                                {"anchor_t2", rat_str(cfg.anchor->second)},
                                {"s", rat_str(s)},
                                {"t2", rat_str(t2)},
                                {"disc", rat_str(disc)},
                                {"p0", p0_constant(params).str()},
                                {"center", trace.center.str()},
                                {"exterior", trace.exterior ? "true" : "false"},
                                {"floor", trace.floor ? "true" : "false"},
                                {"inside", trace.inside ? "true" : "false"}});
    return rep;
}

Report cmd_envelope(const JobConfig& cfg) {
    Report rep("envelope", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    Slice slice(lat, config_gamma(cfg));
    GiesekerParams params = GiesekerParams::for_surface(lat, cfg.r0, cfg.epsilon);
    std::vector<Rat> samples = cfg.samples;
    if (samples.empty()) {
        if (!cfg.region) throw ConfigError("envelope needs 'sample' lines or a region");
        Region region = config_region(cfg);
        if (!(region.s_max < 0))
            throw ConfigError("envelope sampling needs a window with s_max < 0");
        const int k = 33;
        for (int i = 0; i < k; ++i)
            samples.push_back(region.s_min + (region.s_max - region.s_min) * Rat(i) / Rat(k - 1));
    }
    for (const Rat& s : samples) {
        FMaxResult fm = f_max(slice, cfg.r0, cfg.epsilon, s, cfg.bound);
        std::vector<std::pair<std::string, std::string>> fields{
            {"s", rat_str(s)},
            {"f_max_sq", rat_str(fm.value_sq)},
            {"certified", fm.certified ? "true" : "false"},
            {"tail_bound", rat_str(fm.tail_bound)},
            {"coarse_sq", rat_str(envelope_coarse_sq(params, s))}};
        if (fm.argmax) fields.push_back({"argmax", fm.argmax->str()});
        if (fine_window_contains(params, s))
            fields.push_back({"fine_sq", envelope_fine(params, s).square().str()});
        rep.add("envelope", std::move(fields));
    }
    return rep;
}

Report cmd_decompose(const JobConfig& cfg) {
    Report rep("decompose", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    Slice slice(lat, config_gamma(cfg));
    if (denominator(cfg.bound) != 1) throw ConfigError("decompose bound must be an integer");
    auto cands = isotropic_decompositions(slice, cfg.r0, numerator(cfg.bound));
    rep.add("summary", {{"r0", cfg.r0.str()},
                        {"height_bound", rat_str(cfg.bound)},
                        {"count", std::to_string(cands.size())}});
    for (const auto& cand : cands) {
        std::string parts, cartan;
        for (size_t i = 0; i < cand.parts.size(); ++i) {
            if (i) parts += ";";
            parts += cand.parts[i].first.str() + "x" + cand.parts[i].second.str();
        }
        for (size_t i = 0; i < cand.cartan.size(); ++i)
            for (size_t j = 0; j < cand.cartan.size(); ++j) {
                if (i || j) cartan += ",";
                cartan += rat_str(cand.cartan[i][j]);
            }
        rep.add("decomposition", {{"parts", parts}, {"cartan", cartan}, {"type", cand.type_label}});
    }
    return rep;
}

namespace {

std::vector<GenStep> parse_word(const JobConfig& cfg, const SurfaceLattice& lat) {
    std::vector<GenStep> word;
    for (const auto& step : cfg.apply_steps) {
        const std::string& op = step[0];
        if (op == "shift") {
            word.push_back({GenStep::Kind::Shift, {}, {}});
        } else if (op == "dual") {
            word.push_back({GenStep::Kind::Dual, {}, {}});
        } else if (op == "tensor") {
            if (static_cast<int>(step.size()) != lat.rank() + 1)
                throw ConfigError("tensor step needs rank divisor entries");
            NSVecQ d(lat.rank());
            for (int i = 0; i < lat.rank(); ++i) d[i] = parse_rat(step[1 + i]);
            word.push_back({GenStep::Kind::Tensor, {}, std::move(d)});
        } else if (op == "twist" || op == "etwist") {
            if (step.size() != 2) throw ConfigError(op + " step needs a vector name");
            const MukaiVector& cls = config_vector(cfg, step[1]);
            word.push_back({op == "twist" ? GenStep::Kind::SphericalTwist
                                          : GenStep::Kind::ExceptionalTwist,
                            cls,
                            {}});
        } else {
            throw ConfigError("unknown apply step '" + op + "'");
        }
    }
    return word;
}

}  // namespace

Report cmd_transform(const JobConfig& cfg) {
    Report rep("transform", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    const MukaiVector& v = config_vector(cfg, cfg.target);
    std::vector<GenStep> word = parse_word(cfg, lat);
    LatticeIsometry iso = word_to_isometry(lat, word);
    MukaiVector out = iso.apply(v);
    std::string word_str;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) word_str += ";";
        word_str += word[i].str();
    }
    rep.add("transform", {{"v", v.str()},
                          {"word", word_str},
                          {"result", out.str()},
                          {"integral_matrix", iso.is_integral_matrix() ? "true" : "false"}});
    return rep;
}

Report cmd_wordsearch(const JobConfig& cfg) {
    Report rep("wordsearch", config_hash(cfg));
    SurfaceLattice lat = build_lattice(cfg);
    const MukaiVector& v0 = config_vector(cfg, cfg.target);
    std::vector<NSVecZ> gens = cfg.generators;
    if (gens.empty()) {
        for (int i = 0; i < lat.rank(); ++i) {
            NSVecZ e(lat.rank(), Int(0));
            e[i] = 1;
            gens.push_back(std::move(e));
        }
    }
    auto word = word_search_to_rho(lat, v0, cfg.depth, gens);
    if (!word) {
        rep.add("wordsearch",
                {{"v0", v0.str()}, {"found", "false"}, {"depth", std::to_string(cfg.depth)}});
        return rep;
    }
    MukaiVector image = apply_word(lat, *word, v0);
    if (image != point_class(lat))
        throw InvariantError("word search result does not map v0 to rho");
    std::string word_str;
    for (size_t i = 0; i < word->size(); ++i) {
        if (i) word_str += ";";
        word_str += (*word)[i].str();
    }
    rep.add("wordsearch", {{"v0", v0.str()},
                           {"found", "true"},
                           {"length", std::to_string(word->size())},
                           {"word", word_str}});
    return rep;
}

Report cmd_example_suite(const JobConfig& cfg) {
    Report rep("example-suite", config_hash(cfg));
    if (!cfg.n) throw ConfigError("example-suite needs 'n'");
    ExampleSuiteResult res = run_example_suite(*cfg.n);
    rep.add("summary", {{"n", cfg.n->str()}, {"all_pass", res.all_pass ? "true" : "false"}});
    for (const auto& c : res.checks)
        rep.add("check",
                {{"name", c.name}, {"pass", c.pass ? "true" : "false"}, {"detail", c.detail}});
    return rep;
}

std::string cmd_plot(const JobConfig& cfg, int workers) {
    SurfaceLattice lat = build_lattice(cfg);
    Slice slice(lat, config_gamma(cfg));
    Region region = config_region(cfg);
    PlotInput plot;
    plot.s_min = region.s_min;
    plot.s_max = region.s_max;
    plot.t2_max = region.t2_max;
    if (!cfg.target.empty()) {
        const MukaiVector& v = config_vector(cfg, cfg.target);
        for (const auto& cand : wall_vectors_for(slice, v, region, cfg.epsilon, workers).walls)
            plot.walls.push_back(cand.wall);
    }
    if (region.s_min < 0) {
        Rat hi = region.s_min / 64;
        if (region.s_max < hi) hi = region.s_max;
        const int k = 48;
        for (int i = 0; i < k; ++i) {
            Rat s = region.s_min + (hi - region.s_min) * Rat(i) / Rat(k - 1);
            if (!(s < 0)) continue;
            FMaxResult fm = f_max(slice, cfg.r0, cfg.epsilon, s, cfg.bound);
            plot.boundary_polyline.emplace_back(rat_to_double(s),
                                                std::sqrt(rat_to_double(fm.value_sq)));
        }
    }
    if (cfg.point)
        plot.points.emplace_back(rat_to_double(cfg.point->first),
                                 std::sqrt(rat_to_double(cfg.point->second)));
    return render_svg(plot);
}

}  // namespace stabwall
