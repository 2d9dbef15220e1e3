// Command-line front end: verify / reduce / enumerate / oracle / deform /
// clover / mebane / render. Exit codes: 0 success (or verified), 1 negative
// verdict, 2 malformed input. All JSON carries "format": 1.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtile/chains.hpp"
#include "dtile/descend.hpp"
#include "dtile/error.hpp"
#include "dtile/gaussian.hpp"
#include "dtile/geom.hpp"
#include "dtile/tiler.hpp"
#include "dtile/transforms.hpp"
#include "dtile/words.hpp"

using json = nlohmann::ordered_json;
using namespace dtile;
using geom::Vec2;
using transforms::Tag;

namespace {

const words::Alphabet& sq() { return words::Alphabet::square(); }

// Descent/reduction tags in the CLI wire format: the star lifts are "go"
// and "ge", the plain transforms keep their library names.
std::string tag_text(Tag t) {
    switch (t) {
    case Tag::GStarOdd: return "go";
    case Tag::GStarEven: return "ge";
    default: return transforms::tag_name(t);
    }
}

json tags_json(const std::vector<Tag>& tags) {
    json out = json::array();
    for (Tag t : tags) out.push_back(tag_text(t));
    return out;
}

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

json cert_json(const transforms::DoubleTileCertificate& cert) {
    return {{"root_x", cert.root_x},
            {"root_y", cert.root_y},
            {"descent", tags_json(cert.descent)},
            {"shift", cert.shift}};
}

json cells_json(const std::vector<Vec2>& cells) {
    json out = json::array();
    for (Vec2 c : cells) out.push_back(vec_json(c));
    return out;
}

void emit(const json& j, std::ostream& os = std::cout) { os << j.dump() << "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) fail(Errc::BadInput, "cannot open " + path + " for writing");
    os << content;
}

struct VerifyOpts {
    std::string word;
    long long radius = 0;
};

int run_verify(const VerifyOpts& o) {
    tiler::DoubleTileReport rep = tiler::verify_double_tile(sq(), o.word, o.radius);
    json out{{"format", 1}, {"word", o.word}, {"normalized", rep.normalized},
             {"double_tile", rep.is_double_tile}};
    if (rep.is_double_tile) {
        out["certificate"] = cert_json(*rep.certificate);
        json sides = json::array();
        for (Vec2 s : rep.sides) sides.push_back(vec_json(s));
        out["sides"] = sides;
        out["area"] = rep.area;
        out["odd_lattice_tiles"] = rep.odd_lattice_tiles;
        out["even_lattice_tiles"] = rep.even_lattice_tiles;
    } else {
        out["reject"] = transforms::reject_name(*rep.reject);
    }
    emit(out);
    return rep.is_double_tile ? 0 : 1;
}

struct ReduceOpts {
    std::string chain;
};

int run_reduce(const ReduceOpts& o) {
    chains::WordChain c = chains::parse_chain(sq(), o.chain);
    transforms::ReductionOutcome red = transforms::reduce_to_base(sq(), c);
    json out{{"format", 1}, {"chain", chains::format_chain(c)},
             {"reductions", tags_json(red.reductions)},
             {"base", chains::format_chain(red.base)}};
    if (red.root) {
        out["root"] = {{"x", red.root->x}, {"y", red.root->y},
                       {"odd_positions", red.root->odd_positions}};
    } else {
        out["root"] = nullptr;
    }
    emit(out);
    return red.root ? 0 : 1; // a genuine loop certifies a self-intersection
}

struct EnumerateOpts {
    std::size_t bound = 0;
    std::string mode = "json";
    std::string out_dir;
    int jobs = 1;
};

json census_entry_json(const tiler::CensusEntry& e) {
    json svec = json::array();
    for (Vec2 s : e.sides) svec.push_back(vec_json(s));
    return {{"format", 1},
            {"word", e.word},
            {"descent", tags_json(e.descent)},
            {"type", json::array({e.type[1], e.type[2], e.type[3], e.type[4]})},
            {"s_vectors", svec},
            {"area", e.area}};
}

int run_enumerate(const EnumerateOpts& o) {
    auto census = tiler::generate_census(sq(), o.bound);
    if (o.mode == "json") {
        for (const auto& e : census) emit(census_entry_json(e));
        return 0;
    }
    // svg-dir: one file per tile, named by its canonical word.
    if (o.out_dir.empty()) fail(Errc::BadInput, "--emit svg-dir needs --out");
    std::filesystem::create_directories(o.out_dir);
    for (const auto& e : census)
        write_file(o.out_dir + "/" + e.word + ".svg", tiler::render_svg(sq(), e.word));
    std::cerr << "wrote " << census.size() << " files to " << o.out_dir << "\n";
    return 0;
}

struct OracleOpts {
    std::size_t bound = 0;
    std::size_t cap = 20;
    bool compare = false;
    int jobs = 1;
};

int run_oracle(const OracleOpts& o) {
    std::vector<words::Word> found = tiler::oracle_enumerate(o.bound, o.cap);
    if (!o.compare) {
        for (const auto& w : found) emit(json{{"format", 1}, {"word", w}});
        return 0;
    }
    std::set<words::Word> oracle_set(found.begin(), found.end());
    std::set<words::Word> census_set;
    for (const auto& e : tiler::generate_census(sq(), o.bound)) census_set.insert(e.word);
    if (oracle_set == census_set) {
        std::cout << oracle_set.size() << (oracle_set.size() == 1 ? " tile" : " tiles")
                  << ", generator agrees\n";
        return 0;
    }
    std::cout << "mismatch: oracle " << oracle_set.size() << ", generator "
              << census_set.size() << "\n";
    for (const auto& w : oracle_set)
        if (!census_set.count(w)) std::cout << "oracle only: " << w << "\n";
    for (const auto& w : census_set)
        if (!oracle_set.count(w)) std::cout << "generator only: " << w << "\n";
    return 1;
}

struct DeformOpts {
    std::string word, block_a, block_b;
};

int run_deform(const DeformOpts& o) {
    tiler::Block blk{o.block_a, o.block_b};
    if (!tiler::block_valid(sq(), blk)) fail(Errc::InvalidBlock, "block cell is not simple");
    words::Word deformed = tiler::deform_word(sq(), o.word, blk);
    json out{{"format", 1}, {"word", o.word},
             {"block_a", o.block_a}, {"block_b", o.block_b}, {"deformed", deformed}};
    if (geom::is_simple(deformed))
        out["canonical"] = tiler::canonical_boundary_word(sq(), deformed);
    else
        out["canonical"] = nullptr;
    emit(out);
    return 0;
}

struct CloverOpts {
    long long a = 0, b = 0;
    std::string mode = "json";
    std::string out_dir;
};

void warn_if_not_proper(long long a, long long b) {
    if (a > 0 && b > 0 && !gaussian::is_proper(a, b))
        std::cerr << "warning: " << a << "^2 + " << b << "^2 = " << a * a + b * b
                  << " is not an odd prime\n";
}

int run_clover(const CloverOpts& o) {
    warn_if_not_proper(o.a, o.b);
    auto [a, b] = std::minmax(o.a, o.b);
    gaussian::CloverPlan plan = gaussian::clover_plan(a, b);
    auto clovers = gaussian::clovers_for(a, b);

    json plan_j = json::array();
    for (auto s : plan.steps) plan_j.push_back(gaussian::plan_step_name(s));
    json list = json::array();
    for (const auto& d : clovers) {
        words::Word w = tiler::canonical_boundary_word(sq(), d.chain.concat());
        list.push_back({{"descent", tags_json(d.descent)},
                        {"word", w},
                        {"area", geom::signed_area(w)}});
    }
    json out{{"format", 1}, {"a", a}, {"b", b}, {"p", a * a + b * b},
             {"k", plan.k}, {"plan", plan_j}, {"clovers", list}};
    if (o.mode == "json") {
        emit(out);
        return 0;
    }
    if (o.out_dir.empty()) fail(Errc::BadInput, "--emit svg needs --out");
    std::filesystem::create_directories(o.out_dir);
    for (std::size_t i = 0; i < clovers.size(); ++i) {
        words::Word w = tiler::canonical_boundary_word(sq(), clovers[i].chain.concat());
        write_file(o.out_dir + "/clover-" + std::to_string(i + 1) + ".svg",
                   tiler::render_svg(sq(), w));
    }
    std::cerr << "wrote " << clovers.size() << " files to " << o.out_dir << "\n";
    return 0;
}

struct MebaneOpts {
    long long a = 0, b = 0;
};

int run_mebane(const MebaneOpts& o) {
    warn_if_not_proper(o.a, o.b);
    auto [a, b] = std::minmax(o.a, o.b);
    gaussian::GridGraph g = gaussian::grid_graph(a, b);
    auto polys = gaussian::mebane_construction(a, b);

    json cycles = json::array();
    for (const auto& c : g.cycles) cycles.push_back(c.size());
    json list = json::array();
    for (const auto& p : polys) list.push_back(cells_json(p));
    emit(json{{"format", 1}, {"a", a}, {"b", b}, {"p", a * a + b * b},
              {"side", g.side}, {"isolated", g.isolated.size()},
              {"cycle_lengths", cycles}, {"polyominoes", list}});
    return 0;
}

struct RenderOpts {
    std::string word;
    std::string out_path;
    std::string cert_path;
};

int run_render(const RenderOpts& o) {
    tiler::DoubleTileReport rep = tiler::verify_double_tile(sq(), o.word);
    if (!rep.is_double_tile) {
        std::cerr << "not a double tile: " << transforms::reject_name(*rep.reject) << "\n";
        return 1;
    }
    if (!o.cert_path.empty())
        write_file(o.cert_path, json{{"format", 1}, {"certificate", cert_json(*rep.certificate)}}.dump() + "\n");
    std::string svg = tiler::render_svg(sq(), o.word);
    if (o.out_path.empty())
        std::cout << svg;
    else
        write_file(o.out_path, svg);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculus of 4-neighbour double tiles"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "decide whether a boundary word is a double tile");
    verify->add_option("--word", vo.word, "boundary word over RLUD")->required();
    verify->add_option("--radius", vo.radius, "cover check radius (0 = auto)");

    ReduceOpts ro;
    auto* reduce = app.add_subcommand("reduce", "reduce a double chain to its base");
    reduce->add_option("--chain", ro.chain, "eight ':'-separated parts, '-' for empty")->required();

    EnumerateOpts eo;
    auto* enumerate = app.add_subcommand("enumerate", "generate every double tile up to a perimeter");
    enumerate->add_option("--max-perimeter", eo.bound, "largest boundary length")->required();
    enumerate->add_option("--emit", eo.mode, "json (lines) or svg-dir")
        ->check(CLI::IsMember({"json", "svg-dir"}));
    enumerate->add_option("--out", eo.out_dir, "output directory for svg-dir");
    enumerate->add_option("--jobs", eo.jobs, "worker bound (output independent of it)")
        ->check(CLI::PositiveNumber);

    OracleOpts oo;
    auto* oracle = app.add_subcommand("oracle", "brute-force search over self-avoiding polygons");
    oracle->add_option("--max-perimeter", oo.bound, "largest boundary length")->required();
    oracle->add_option("--cap", oo.cap, "refuse bounds above this");
    oracle->add_flag("--compare", oo.compare, "check the generator against the oracle");
    oracle->add_option("--jobs", oo.jobs, "worker bound (output independent of it)")
        ->check(CLI::PositiveNumber);

    DeformOpts dfo;
    auto* deform = app.add_subcommand("deform", "substitute a block into a boundary word");
    deform->add_option("--word", dfo.word, "boundary word over RLUD")->required();
    deform->add_option("--block-a", dfo.block_a, "image of R")->required();
    deform->add_option("--block-b", dfo.block_b, "image of U")->required();

    CloverOpts co;
    auto* clover = app.add_subcommand("clover", "clovers for a Gaussian prime a+bi");
    clover->add_option("--a", co.a, "real part")->required();
    clover->add_option("--b", co.b, "imaginary part")->required();
    clover->add_option("--emit", co.mode, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    clover->add_option("--out", co.out_dir, "output directory for svg");

    MebaneOpts mo;
    auto* mebane = app.add_subcommand("mebane", "grid-graph construction in the (a+b) square");
    mebane->add_option("--a", mo.a, "real part")->required();
    mebane->add_option("--b", mo.b, "imaginary part")->required();

    RenderOpts rdo;
    auto* render = app.add_subcommand("render", "draw a double tile and its two tilings");
    render->add_option("--word", rdo.word, "boundary word over RLUD")->required();
    render->add_option("-o,--out", rdo.out_path, "output file (default: standard output)");
    render->add_option("--cert", rdo.cert_path, "also write the certificate JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(vo);
        if (app.got_subcommand(reduce)) return run_reduce(ro);
        if (app.got_subcommand(enumerate)) return run_enumerate(eo);
        if (app.got_subcommand(oracle)) return run_oracle(oo);
        if (app.got_subcommand(deform)) return run_deform(dfo);
        if (app.got_subcommand(clover)) return run_clover(co);
        if (app.got_subcommand(mebane)) return run_mebane(mo);
        if (app.got_subcommand(render)) return run_render(rdo);
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable: a subcommand is required
}
