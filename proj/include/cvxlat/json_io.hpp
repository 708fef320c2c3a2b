#ifndef CVXLAT_JSON_IO_HPP
#define CVXLAT_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cvxlat/classify.hpp"
#include "cvxlat/convex_function.hpp"
#include "cvxlat/homomorphism.hpp"
#include "cvxlat/transversal.hpp"

namespace cvxlat {

/// JSON layer. Rationals travel as strings "p/q" (lowest terms, positive
/// denominator); nothing is ever emitted as a float. Emission uses ordered
/// JSON so identical inputs produce identical bytes.
using Json = nlohmann::ordered_json;

inline Json rat_to_json(const Rat& r) { return format_rational(r); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (!j.is_string()) throw InputError("expected rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline Json vec_to_json(const VecQ& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rat_to_json(v(i)));
    return arr;
}

inline VecQ vec_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected coordinate array, got " + j.dump());
    VecQ v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v(i) = rat_from_json(j[i]);
    return v;
}

// ---- bodies -------------------------------------------------------------

inline Json body_to_json(const ConvexBody& b) {
    Json j;
    j["dim"] = b.ambient_dim();
    Json verts = Json::array();
    for (const auto& v : b.vertices()) verts.push_back(vec_to_json(v));
    j["vertices"] = verts;
    return j;
}

inline ConvexBody body_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("vertices"))
        throw InputError("body: expected keys 'dim' and 'vertices'");
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw InputError("body: dim must be >= 1");
    std::vector<Point> pts;
    for (const auto& row : j.at("vertices")) pts.push_back(vec_from_json(row));
    return ConvexBody::hull(dim, std::move(pts));
}

/// Point-list instances {"dim": n, "points": [...]} feed hull and radon.
inline std::pair<int, std::vector<Point>> pointlist_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("points"))
        throw InputError("point list: expected keys 'dim' and 'points'");
    const int dim = j.at("dim").get<int>();
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) pts.push_back(vec_from_json(row));
    return {dim, std::move(pts)};
}

// ---- affine maps and homomorphism specs ---------------------------------

inline Json affine_map_to_json(const AffineMap& m) {
    Json j;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.matrix().rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.matrix().cols(); ++k)
            row.push_back(rat_to_json(m.matrix()(i, k)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["offset"] = vec_to_json(m.offset());
    return j;
}

inline AffineMap affine_map_from_json(const Json& j) {
    if (!j.contains("matrix") || !j.contains("offset"))
        throw InputError("affine map: expected keys 'matrix' and 'offset'");
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty()) throw InputError("affine map: empty matrix");
    MatQ m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw InputError("affine map: ragged matrix");
        for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = rat_from_json(rows[i][k]);
    }
    return AffineMap(std::move(m), vec_from_json(j.at("offset")));
}

inline Json spec_to_json(const HomomorphismSpec& s) {
    Json j;
    j["case"] = hom_case_name(s.tag());
    j["c"] = s.source_dim();
    j["d"] = s.target_dim();
    if (s.has_phi()) j["phi"] = affine_map_to_json(s.phi());
    if (s.has_o()) j["o"] = vec_to_json(s.o());
    if (s.has_v()) j["v"] = vec_to_json(s.v());
    if (s.has_gamma()) j["gamma"] = rat_to_json(s.gamma());
    if (s.tag() == HomCase::Trivial) j["fixed_body"] = body_to_json(s.fixed_body());
    return j;
}

inline HomomorphismSpec spec_from_json(const Json& j) {
    const std::string tag = j.at("case").get<std::string>();
    if (tag == "trivial")
        return HomomorphismSpec::trivial(j.at("c").get<int>(),
                                         body_from_json(j.at("fixed_body")));
    AffineMap phi = affine_map_from_json(j.at("phi"));
    if (tag == "i") return HomomorphismSpec::case_i(std::move(phi));
    if (tag == "ii") return HomomorphismSpec::case_ii(std::move(phi), vec_from_json(j.at("o")));
    if (tag == "iii") return HomomorphismSpec::case_iii(std::move(phi), vec_from_json(j.at("v")));
    if (tag == "iv")
        return HomomorphismSpec::case_iv(std::move(phi), vec_from_json(j.at("o")),
                                         rat_from_json(j.at("gamma")));
    throw InputError("homomorphism spec: unknown case '" + tag + "'");
}

inline Json report_to_json(const VerificationReport& r) {
    Json j;
    j["axiom_meet_ok"] = r.axiom_meet_ok;
    j["axiom_join_ok"] = r.axiom_join_ok;
    j["cond_i_ok"] = r.cond_i_ok;
    j["cond_ii_ok"] = r.cond_ii_ok;
    j["cond_iii_ok"] = r.cond_iii_ok;
    j["cond_iv_ok"] = r.cond_iv_ok;
    j["trials"] = r.trials;
    j["all_ok"] = r.all_ok();
    if (r.counterexample) {
        Json ce;
        ce["which"] = r.counterexample->which;
        ce["C"] = body_to_json(r.counterexample->c);
        ce["D"] = body_to_json(r.counterexample->d);
        ce["lhs"] = body_to_json(r.counterexample->lhs);
        ce["rhs"] = body_to_json(r.counterexample->rhs);
        j["counterexample"] = ce;
    }
    return j;
}

inline Json dimension_report_to_json(const DimensionLawReport& r) {
    Json j;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json je;
        je["dim_source"] = e.dim_source;
        je["dim_image"] = e.dim_image;
        entries.push_back(je);
    }
    j["entries"] = entries;
    j["lower_bound_ok"] = r.lower_bound_ok;
    j["upper_bound_ok"] = r.upper_bound_ok;
    j["profile_ok"] = r.profile_ok;
    j["all_ok"] = r.all_ok();
    return j;
}

// ---- classifier ----------------------------------------------------------

inline OracleSample oracle_sample_from_json(const Json& j) {
    OracleSample s;
    s.c = j.at("c").get<int>();
    s.d = j.at("d").get<int>();
    s.empty_image = j.contains("empty_image") ? body_from_json(j.at("empty_image"))
                                              : ConvexBody::empty(s.d);
    for (const auto& entry : j.at("points"))
        s.point_images.emplace_back(vec_from_json(entry.at("x")),
                                    body_from_json(entry.at("image")));
    return s;
}

inline Json oracle_sample_to_json(const OracleSample& s) {
    Json j;
    j["c"] = s.c;
    j["d"] = s.d;
    j["empty_image"] = body_to_json(s.empty_image);
    Json pts = Json::array();
    for (const auto& [x, img] : s.point_images) {
        Json e;
        e["x"] = vec_to_json(x);
        e["image"] = body_to_json(img);
        pts.push_back(e);
    }
    j["points"] = pts;
    return j;
}

inline Json classified_to_json(const ClassifiedForm& f) {
    Json j = spec_to_json(f.spec);
    j["residual_ok"] = f.residual_ok;
    return j;
}

// ---- transversal ----------------------------------------------------------

struct TransversalInstance {
    bool parallel_mode = false;
    int dim = 0;  // ambient dimension d
    Point o;      // rays mode only
    std::vector<RaySegment> rays;
    std::vector<ParallelSegment> parallels;
};

inline TransversalInstance transversal_from_json(const Json& j) {
    TransversalInstance inst;
    const std::string mode = j.at("mode").get<std::string>();
    inst.dim = j.at("dim").get<int>();
    if (mode == "rays") {
        inst.parallel_mode = false;
        inst.o = j.contains("o") ? vec_from_json(j.at("o")) : VecQ::Zero(inst.dim);
        if (static_cast<int>(inst.o.size()) != inst.dim)
            throw InputError("transversal: o of wrong dimension");
        for (const auto& seg : j.at("segments")) {
            VecQ u = vec_from_json(seg.at("u"));
            if (static_cast<int>(u.size()) != inst.dim)
                throw InputError("transversal: segment direction of wrong dimension");
            const auto& band = seg.at("s");
            inst.rays.emplace_back(std::move(u), rat_from_json(band.at(0)),
                                   rat_from_json(band.at(1)));
        }
    } else if (mode == "parallel") {
        inst.parallel_mode = true;
        for (const auto& seg : j.at("segments")) {
            VecQ x = vec_from_json(seg.at("x"));
            if (static_cast<int>(x.size()) != inst.dim - 1)
                throw InputError("transversal: quotient point of wrong dimension");
            const auto& band = seg.at("band");
            inst.parallels.emplace_back(std::move(x), rat_from_json(band.at(0)),
                                        rat_from_json(band.at(1)));
        }
    } else {
        throw InputError("transversal: unknown mode '" + mode + "'");
    }
    return inst;
}

inline Json cert_to_json(const HyperplaneCert& cert) {
    Json j;
    j["feasible"] = true;
    if (cert.parallel_mode) {
        j["mode"] = "parallel";
        Json psi;
        psi["w"] = vec_to_json(cert.a);
        psi["b"] = rat_to_json(cert.psi_const);
        j["psi"] = psi;
    } else {
        j["mode"] = "rays";
        j["a"] = vec_to_json(cert.a);
    }
    Json hits = Json::array();
    for (const auto& h : cert.hits) hits.push_back(rat_to_json(h));
    j["hits"] = hits;
    return j;
}

inline Json helly_report_to_json(const HellyReport& r) {
    Json j;
    j["global_feasible"] = r.global_feasible;
    j["all_subfamilies_feasible"] = r.all_subfamilies_feasible;
    j["bounded_witness"] = r.bounded_witness;
    j["helly_implication_ok"] = r.helly_implication_ok;
    if (!r.global_feasible) {
        Json w = Json::array();
        for (int i : r.infeasible_witness) w.push_back(i);
        j["infeasible_witness"] = w;
    }
    return j;
}

// ---- convex functions ------------------------------------------------------

inline Json function_to_json(const TruncatedEpigraph& f) {
    Json j;
    if (f.is_plus_inf()) {
        j["kind"] = "plus_inf";
        return j;
    }
    j["kind"] = "trunc_epi";
    j["kappa"] = rat_to_json(f.kappa());
    j["body"] = body_to_json(f.body());
    return j;
}

inline Json function_to_json(const MaxAffineFunction& g) {
    Json j;
    if (g.is_minus_inf()) {
        j["kind"] = "minus_inf";
        return j;
    }
    j["kind"] = "max_affine";
    Json pieces = Json::array();
    for (const auto& [a, b] : g.pieces()) {
        Json p;
        p["a"] = vec_to_json(a);
        p["b"] = rat_to_json(b);
        pieces.push_back(p);
    }
    j["pieces"] = pieces;
    return j;
}

inline TruncatedEpigraph trunc_epi_from_json(const Json& j, const Rat& default_kappa) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "plus_inf") {
        const int c = j.contains("c") ? j.at("c").get<int>() : 1;
        const Rat kappa = j.contains("kappa") ? rat_from_json(j.at("kappa")) : default_kappa;
        return TruncatedEpigraph::plus_infinity(c, kappa);
    }
    if (kind != "trunc_epi") throw InputError("expected a trunc_epi function, got " + kind);
    return TruncatedEpigraph::from_body(rat_from_json(j.at("kappa")),
                                        body_from_json(j.at("body")));
}

inline MaxAffineFunction max_affine_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "minus_inf") {
        const int c = j.contains("c") ? j.at("c").get<int>() : 1;
        return MaxAffineFunction::minus_infinity(c);
    }
    if (kind != "max_affine") throw InputError("expected a max_affine function, got " + kind);
    std::vector<MaxAffineFunction::Piece> pieces;
    for (const auto& p : j.at("pieces"))
        pieces.emplace_back(vec_from_json(p.at("a")), rat_from_json(p.at("b")));
    if (pieces.empty()) throw InputError("max_affine: empty piece list");
    return MaxAffineFunction::from_pieces(static_cast<int>(pieces[0].first.size()),
                                          std::move(pieces));
}

inline Json radon_to_json(const RadonPartition& p) {
    Json j;
    Json red = Json::array(), blue = Json::array();
    for (const auto& q : p.red) red.push_back(vec_to_json(q));
    for (const auto& q : p.blue) blue.push_back(vec_to_json(q));
    j["red"] = red;
    j["blue"] = blue;
    j["witness"] = vec_to_json(p.witness);
    return j;
}

inline Json subspace_to_json(const AffineSubspace& s) {
    Json j;
    j["ambient"] = s.ambient;
    if (s.empty) {
        j["empty"] = true;
        return j;
    }
    j["empty"] = false;
    j["base"] = vec_to_json(s.base);
    Json dirs = Json::array();
    for (const auto& d : s.directions) dirs.push_back(vec_to_json(d));
    j["directions"] = dirs;
    return j;
}

}  // namespace cvxlat

#endif
