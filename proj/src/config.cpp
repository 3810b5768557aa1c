#include "stabwall/config.hpp"

#include <array>
#include <sstream>

namespace stabwall {

bool JobConfig::operator==(const JobConfig& o) const {
    return serialize_config(*this) == serialize_config(o);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

Int parse_int_tok(const std::string& s, int line_no, const char* what) {
    Rat q = parse_rat(s);
    if (denominator(q) != 1)
        throw ConfigError("line " + std::to_string(line_no) + ": " + what + " must be an integer");
    return numerator(q);
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

JobConfig parse_config(const std::string& text) {
    JobConfig cfg;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    bool have_rank = false, have_gram = false, have_h = false;
    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto need = [&](size_t n) {
            if (toks.size() != n + 1)
                fail(line_no, "'" + key + "' expects " + std::to_string(n) + " value(s)");
        };
        if (key == "kind") {
            need(1);
            if (toks[1] == "k3")
                cfg.kind = SurfaceKind::K3;
            else if (toks[1] == "enriques")
                cfg.kind = SurfaceKind::Enriques;
            else
                fail(line_no, "kind must be k3 or enriques");
        } else if (key == "rank") {
            need(1);
            cfg.rank = static_cast<int>(parse_int_tok(toks[1], line_no, "rank").convert_to<long>());
            if (cfg.rank < 1) fail(line_no, "rank must be positive");
            have_rank = true;
        } else if (key == "gram") {
            if (!have_rank) fail(line_no, "rank must precede gram");
            need(static_cast<size_t>(cfg.rank) * cfg.rank);
            cfg.gram.assign(cfg.rank, std::vector<Int>(cfg.rank));
            for (int i = 0; i < cfg.rank; ++i)
                for (int j = 0; j < cfg.rank; ++j)
                    cfg.gram[i][j] = parse_int_tok(toks[1 + i * cfg.rank + j], line_no, "gram entry");
            have_gram = true;
        } else if (key == "H") {
            if (!have_rank) fail(line_no, "rank must precede H");
            need(cfg.rank);
            cfg.polarization.resize(cfg.rank);
            for (int i = 0; i < cfg.rank; ++i)
                cfg.polarization[i] = parse_int_tok(toks[1 + i], line_no, "H entry");
            have_h = true;
        } else if (key == "gamma") {
            if (!have_rank) fail(line_no, "rank must precede gamma");
            need(cfg.rank);
            cfg.gamma.resize(cfg.rank);
            for (int i = 0; i < cfg.rank; ++i) cfg.gamma[i] = parse_rat(toks[1 + i]);
        } else if (key == "nodal_policy") {
            need(1);
            if (toks[1] == "accept_all")
                cfg.nodal_policy = NodalPolicy::AcceptAll;
            else if (toks[1] == "reject_all")
                cfg.nodal_policy = NodalPolicy::RejectAll;
            else if (toks[1] == "explicit")
                cfg.nodal_policy = NodalPolicy::ExplicitSet;
            else
                fail(line_no, "nodal_policy must be accept_all, reject_all or explicit");
        } else if (key == "nodal_residue") {
            if (!have_rank) fail(line_no, "rank must precede nodal_residue");
            need(cfg.rank);
            std::vector<int> res(cfg.rank);
            for (int i = 0; i < cfg.rank; ++i)
                res[i] = static_cast<int>(
                    parse_int_tok(toks[1 + i], line_no, "residue bit").convert_to<long>());
            cfg.nodal_residues.push_back(std::move(res));
        } else if (key == "vector") {
            if (!have_rank) fail(line_no, "rank must precede vector");
            need(static_cast<size_t>(cfg.rank) + 3);
            const std::string& name = toks[1];
            if (cfg.vectors.count(name)) fail(line_no, "duplicate vector name '" + name + "'");
            MukaiVector v;
            v.r = parse_rat(toks[2]);
            v.xi.resize(cfg.rank);
            for (int i = 0; i < cfg.rank; ++i) v.xi[i] = parse_rat(toks[3 + i]);
            v.a = parse_rat(toks[3 + cfg.rank]);
            cfg.vectors.emplace(name, std::move(v));
        } else if (key == "region") {
            need(4);
            cfg.region = std::array<Rat, 4>{parse_rat(toks[1]), parse_rat(toks[2]),
                                            parse_rat(toks[3]), parse_rat(toks[4])};
        } else if (key == "point") {
            need(2);
            cfg.point = std::make_pair(parse_rat(toks[1]), parse_rat(toks[2]));
        } else if (key == "anchor") {
            need(2);
            cfg.anchor = std::make_pair(parse_rat(toks[1]), parse_rat(toks[2]));
        } else if (key == "side") {
            need(1);
            if (toks[1] != "gieseker" && toks[1] != "dual")
                fail(line_no, "side must be gieseker or dual");
            cfg.side = toks[1];
        } else if (key == "r0") {
            need(1);
            cfg.r0 = parse_int_tok(toks[1], line_no, "r0");
        } else if (key == "epsilon") {
            need(1);
            cfg.epsilon =
                static_cast<int>(parse_int_tok(toks[1], line_no, "epsilon").convert_to<long>());
        } else if (key == "n") {
            need(1);
            cfg.n = parse_int_tok(toks[1], line_no, "n");
        } else if (key == "depth") {
            need(1);
            cfg.depth = static_cast<int>(parse_int_tok(toks[1], line_no, "depth").convert_to<long>());
        } else if (key == "bound") {
            need(1);
            cfg.bound = parse_rat(toks[1]);
        } else if (key == "target") {
            need(1);
            cfg.target = toks[1];
        } else if (key == "other") {
            need(1);
            cfg.other = toks[1];
        } else if (key == "sample") {
            need(1);
            cfg.samples.push_back(parse_rat(toks[1]));
        } else if (key == "generator") {
            if (!have_rank) fail(line_no, "rank must precede generator");
            need(cfg.rank);
            NSVecZ g(cfg.rank);
            for (int i = 0; i < cfg.rank; ++i)
                g[i] = parse_int_tok(toks[1 + i], line_no, "generator entry");
            cfg.generators.push_back(std::move(g));
        } else if (key == "apply") {
            if (toks.size() < 2) fail(line_no, "'apply' expects a step");
            cfg.apply_steps.emplace_back(toks.begin() + 1, toks.end());
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }
    if (!have_rank) throw ConfigError("missing 'rank'");
    if (!have_gram) throw ConfigError("missing 'gram'");
    if (!have_h) throw ConfigError("missing 'H'");
    if (cfg.gamma.empty()) cfg.gamma.assign(cfg.rank, Rat(0));
    return cfg;
}

std::string serialize_config(const JobConfig& cfg) {
    std::ostringstream os;
    os << "kind " << (cfg.kind == SurfaceKind::K3 ? "k3" : "enriques") << "\n";
    os << "rank " << cfg.rank << "\n";
    os << "gram";
    for (const auto& row : cfg.gram)
        for (const Int& e : row) os << " " << e;
    os << "\n";
    os << "H";
    for (const Int& e : cfg.polarization) os << " " << e;
    os << "\n";
    os << "gamma";
    for (const Rat& e : cfg.gamma) os << " " << rat_str(e);
    os << "\n";
    os << "nodal_policy "
       << (cfg.nodal_policy == NodalPolicy::AcceptAll
               ? "accept_all"
               : cfg.nodal_policy == NodalPolicy::RejectAll ? "reject_all" : "explicit")
       << "\n";
    for (const auto& res : cfg.nodal_residues) {
        os << "nodal_residue";
        for (int b : res) os << " " << b;
        os << "\n";
    }
    os << "r0 " << cfg.r0 << "\n";
    os << "epsilon " << cfg.epsilon << "\n";
    os << "depth " << cfg.depth << "\n";
    os << "bound " << rat_str(cfg.bound) << "\n";
    if (cfg.n) os << "n " << *cfg.n << "\n";
    if (cfg.region) {
        os << "region";
        for (const Rat& e : *cfg.region) os << " " << rat_str(e);
        os << "\n";
    }
    if (cfg.point)
        os << "point " << rat_str(cfg.point->first) << " " << rat_str(cfg.point->second) << "\n";
    if (cfg.anchor)
        os << "anchor " << rat_str(cfg.anchor->first) << " " << rat_str(cfg.anchor->second) << "\n";
    if (!cfg.side.empty()) os << "side " << cfg.side << "\n";
    if (!cfg.target.empty()) os << "target " << cfg.target << "\n";
    if (!cfg.other.empty()) os << "other " << cfg.other << "\n";
    for (const Rat& s : cfg.samples) os << "sample " << rat_str(s) << "\n";
    for (const auto& g : cfg.generators) {
        os << "generator";
        for (const Int& e : g) os << " " << e;
        os << "\n";
    }
    for (const auto& [name, v] : cfg.vectors) {
        os << "vector " << name << " " << rat_str(v.r);
        for (const Rat& e : v.xi) os << " " << rat_str(e);
        os << " " << rat_str(v.a) << "\n";
    }
    for (const auto& step : cfg.apply_steps) {
        os << "apply";
        for (const std::string& t : step) os << " " << t;
        os << "\n";
    }
    return os.str();
}

SurfaceLattice build_lattice(const JobConfig& cfg) {
    try {
        return SurfaceLattice(cfg.kind, cfg.gram, cfg.polarization, cfg.nodal_policy,
                              cfg.nodal_residues);
    } catch (const PreconditionError& e) {
        throw ConfigError(std::string("invalid surface block: ") + e.what());
    }
}

NSVecQ config_gamma(const JobConfig& cfg) {
    return cfg.gamma.empty() ? NSVecQ(cfg.rank, Rat(0)) : cfg.gamma;
}

Region config_region(const JobConfig& cfg) {
    if (!cfg.region) throw ConfigError("missing 'region'");
    const auto& r = *cfg.region;
    return Region(r[0], r[1], r[2], r[3]);
}

const MukaiVector& config_vector(const JobConfig& cfg, const std::string& name) {
    if (name.empty()) throw ConfigError("missing vector selector");
    auto it = cfg.vectors.find(name);
    if (it == cfg.vectors.end()) throw ConfigError("unknown vector '" + name + "'");
    return it->second;
}

std::string config_hash(const JobConfig& cfg) {
    std::string s = serialize_config(cfg);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace stabwall
