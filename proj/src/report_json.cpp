#include "numrad/report_json.hpp"

#include <cmath>

namespace numrad {

namespace {

using nlohmann::ordered_json;

ordered_json complex_pair(const Complex& z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json vector_json(const std::vector<Complex>& v) {
    ordered_json arr = ordered_json::array();
    for (const Complex& z : v) arr.push_back(complex_pair(z));
    return arr;
}

} // namespace

ordered_json to_json(const RadiusResult& r) {
    ordered_json j;
    j["w"] = r.value;
    j["theta_star"] = r.theta_star;
    j["attaining_vector"] = vector_json(r.attaining_vector);
    return j;
}

ordered_json to_json(const SupportProfile& p) {
    ordered_json j;
    j["grid_size"] = p.grid_size;
    ordered_json samples = ordered_json::array();
    for (const SupportSample& s : p.samples) {
        ordered_json row;
        row["theta"] = s.theta;
        row["lambda_max"] = s.lambda_max;
        row["part_norm"] = s.part_norm;
        row["boundary_point"] = complex_pair(s.boundary_point);
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    return j;
}

ordered_json to_json(const CrawfordResult& r) {
    ordered_json j;
    j["crawford"] = r.value;
    j["origin_inside"] = r.origin_inside;
    return j;
}

ordered_json to_json(const DiskResult& r) {
    ordered_json j;
    j["is_disk"] = r.is_disk;
    j["radius"] = r.radius;
    return j;
}

ordered_json to_json(const BoundsReport& r) {
    ordered_json j;
    j["norm"] = r.norm;
    j["w"] = r.w;
    j["re_norm"] = r.re_norm;
    j["im_norm"] = r.im_norm;
    j["c_re"] = r.c_re;
    j["c_im"] = r.c_im;
    j["classical_lo"] = r.classical_lo;
    j["b_gap"] = r.b_gap;
    j["kittaneh_sq"] = r.kittaneh_sq;
    j["b_sq_gap"] = r.b_sq_gap;
    j["b_bp"] = r.b_bp;
    j["b_crawford"] = r.b_crawford;
    j["b4_first"] = r.b4_first;
    j["b4_second"] = r.b4_second;
    j["b4_bag5"] = r.b4_bag5;
    j["b4_bhunia"] = r.b4_bhunia;
    ordered_json rooted;
    rooted["sqrt_kittaneh_sq"] = std::sqrt(r.kittaneh_sq);
    rooted["sqrt_b_sq_gap"] = std::sqrt(r.b_sq_gap);
    rooted["sqrt_b_bp"] = std::sqrt(r.b_bp);
    rooted["sqrt_b_crawford"] = std::sqrt(r.b_crawford);
    rooted["root4_b4_first"] = std::pow(r.b4_first, 0.25);
    rooted["root4_b4_second"] = std::pow(r.b4_second, 0.25);
    rooted["root4_b4_bag5"] = std::pow(r.b4_bag5, 0.25);
    rooted["root4_b4_bhunia"] = std::pow(r.b4_bhunia, 0.25);
    j["rooted"] = std::move(rooted);
    j["chain_ok"] = r.chain_ok;
    j["chain_failures"] = r.chain_failures;
    return j;
}

ordered_json to_json(const DiagnosticsReport& r) {
    ordered_json j;
    j["case_half_norm"] = r.case_half_norm;
    j["case_kittaneh"] = r.case_kittaneh;
    j["theta_profile_ok"] = r.theta_profile_ok;
    j["norms_match"] = r.norms_match;
    j["norm_identity_ok"] = r.norm_identity_ok;
    j["witnesses_ok"] = r.witnesses_ok;
    j["disk"] = to_json(r.disk);
    j["witness_re"] = r.witness_re ? vector_json(*r.witness_re) : ordered_json(nullptr);
    j["witness_im"] = r.witness_im ? vector_json(*r.witness_im) : ordered_json(nullptr);
    j["tol"] = r.tol;
    return j;
}

ordered_json to_json(const NormAdditivityResult& r) {
    ordered_json j;
    j["additive"] = r.additive;
    j["membership"] = r.membership;
    j["agree"] = r.agree;
    return j;
}

ordered_json to_json(const CircularDiskReport& r) {
    ordered_json j;
    j["disk"] = r.disk;
    j["radius"] = r.radius;
    j["matches_half_norm"] = r.matches_half_norm;
    j["matches_kittaneh"] = r.matches_kittaneh;
    return j;
}

ordered_json to_json(const CommutatorReport& r) {
    ordered_json j;
    j["nu"] = r.nu;
    j["w_true_plus"] = r.w_true_plus;
    j["w_true_minus"] = r.w_true_minus;
    j["b_th2"] = r.b_th2;
    j["b_corth2"] = r.b_corth2;
    j["b_corth3_first"] = r.b_corth3_first;
    j["b_corth3_second"] = r.b_corth3_second;
    j["b_fong"] = r.b_fong;
    j["b_hk"] = r.b_hk;
    j["chain_ok"] = r.chain_ok;
    j["chain_failures"] = r.chain_failures;
    return j;
}

} // namespace numrad
